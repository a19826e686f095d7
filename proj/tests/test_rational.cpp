#include <gtest/gtest.h>

#include <sstream>

#include "burling/error.hpp"
#include "burling/rational.hpp"

using burling::Error;
using burling::Rat;

TEST(Rational, ParsesAndPrintsInLowestTerms) {
  EXPECT_EQ(Rat::parse("6/4").str(), "3/2");
  EXPECT_EQ(Rat::parse("-10/5").str(), "-2");
  EXPECT_EQ(Rat::parse("7").str(), "7");
  EXPECT_EQ(Rat(4, -8).str(), "-1/2");
}

TEST(Rational, RejectsGarbage) {
  for (const char* s : {"", "1/0", "abc", "1/2/3", "1.5", " 1", "3/-6"}) {
    try {
      Rat::parse(s);
      ADD_FAILURE() << "accepted '" << s << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), "bad-rational") << s;
    }
  }
  EXPECT_THROW(Rat(1, 0), Error);
}

TEST(Rational, ArithmeticIsExact) {
  Rat x(1, 3);
  Rat sum;
  for (int i = 0; i < 3; ++i) sum += x;
  EXPECT_EQ(sum, Rat(1));
  EXPECT_EQ(Rat(2, 3) * Rat(9, 4), Rat(3, 2));
  EXPECT_EQ(Rat(1) / Rat(3) - Rat(1, 3), Rat(0));
  EXPECT_THROW(Rat(1) / Rat(0), Error);
  // 3^40 denominators stay exact
  Rat p(1);
  for (int i = 0; i < 40; ++i) p /= Rat(3);
  for (int i = 0; i < 40; ++i) p *= Rat(3);
  EXPECT_EQ(p, Rat(1));
}

TEST(Rational, Ordering) {
  EXPECT_LT(Rat(1, 3), Rat(1, 2));
  EXPECT_GT(Rat(-1, 3), Rat(-1, 2));
  EXPECT_EQ(burling::midpoint(Rat(1), Rat(2)), Rat(3, 2));
  EXPECT_EQ(Rat(-5, 7).sign(), -1);
  std::ostringstream os;
  os << Rat(22, 7);
  EXPECT_EQ(os.str(), "22/7");
}
