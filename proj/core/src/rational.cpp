#include "burling/rational.hpp"

#include <ostream>

#include "burling/error.hpp"

namespace burling {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rat::Rat(long num, long den) {
  if (den == 0) throw Error("bad-rational", "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.sign() == 0) throw Error("bad-rational", "division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+')
    throw Error("bad-rational", std::string(text));
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  mpq_class q;
  q.get_num() = mpz_class(n, 10);
  q.get_den() = mpz_class(std::string(den), 10);
  if (q.get_den() == 0) throw Error("bad-rational", std::string(text));
  q.canonicalize();
  return Rat(std::move(q));
}

std::string Rat::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace burling
