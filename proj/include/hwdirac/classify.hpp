#pragma once

#include <optional>
#include <string>

#include "hwdirac/dirac.hpp"

namespace hwdirac {

enum class Verdict { Unitary, NotUnitary, Boundary, Undetermined };
std::string_view to_string(Verdict v);

enum class Basis {
  ClosedFormTheorem,  // threshold theorems for the three coarse cases
  LevelOrderedScan,   // lowest-level failure criterion applied to a finite scan
};
std::string_view to_string(Basis b);

struct Classification {
  Verdict verdict = Verdict::Undetermined;
  std::optional<SchmidModule> witness;  // present iff NotUnitary
  Basis basis = Basis::ClosedFormTheorem;
  std::optional<std::int64_t> scan_level;
  std::string note;
};

inline constexpr std::int64_t kDefaultMaxLevel = 20;

/// Verdict from the closed-form thresholds only; no dominance computation.
Classification classify_closed_form(AlgebraKind alg, const Weight& lambda);

/// Verdict from the margins of every Schmid module up to max_level: the first
/// negative margin is a witness when every strictly lower level is strictly
/// positive; a zero below the first failure level gives Boundary; an all-positive
/// scan is Unitary only when the closed-form theorems confirm it.
Classification classify_by_scan(AlgebraKind alg, const Weight& lambda, std::int64_t max_level = kDefaultMaxLevel,
                                Execution ex = Execution::Serial);

/// Same decision applied to an existing scan.
Classification classify_from_scan(AlgebraKind alg, const Weight& lambda, const ScanResult& scan,
                                  std::int64_t max_level);

}  // namespace hwdirac
