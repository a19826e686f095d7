#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "burling/graph.hpp"
#include "burling/ograph.hpp"
#include "burling/relations.hpp"

namespace burling {

using PairSet = std::set<std::pair<size_t, size_t>>;

/// (S, ≺, ↷) over element indices; ids are carried for reporting.
struct Triple {
  std::vector<std::string> elements;
  PairSet prec;
  PairSet arrow;
};

struct Violation {
  std::string kind;  // not-strict-order, arrow-cycle, A1..A4
  std::vector<std::string> ids;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Empty result means (S, ≺, ↷) is a Burling set. A1 and A2 range over
/// distinct y, z; A3 and A4 range over all z, so x ↷ y excludes both x ≺ y
/// and y ≺ x.
std::vector<Violation> check_axioms(const Triple& t);

/// Throws Error("not-constrained") unless C1..C5 hold.
Triple derive_triple(const Family& f);

enum class Verdict { accepted, rejected, budget_exceeded };
const char* to_string(Verdict v);

struct Cert {
  Verdict verdict = Verdict::rejected;
  std::optional<PairSet> witness_prec;
  /// Set by recognize_unoriented on acceptance.
  std::optional<OGraph> orientation;
  std::optional<Violation> violated;
  uint64_t nodes = 0;
};

inline constexpr uint64_t kDefaultRecognitionBudget = 10'000'000;

Cert recognize_oriented(const OGraph& g, uint64_t budget = kDefaultRecognitionBudget);
Cert recognize_unoriented(const Graph& g, uint64_t budget = kDefaultRecognitionBudget);

}  // namespace burling
