#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hwdirac/core.hpp"
#include "hwdirac/parallel.hpp"
#include "hwdirac/schmid.hpp"

namespace hwdirac {

enum class MajorCase { Case1, Case2, Case3 };
std::string_view to_string(MajorCase c);

/// Which subcase of the s1 and s2 analysis a highest weight falls into, plus
/// the coarse case that drives the threshold theorems.
///   E6 s1: 1.1 .. 1.8          E6 s2: 2.1 .. 2.7
///   E7 s1: 1.1, 1.2.1 .. 1.2.8 E7 s2: 2.1 .. 2.4, 2.5.1, 2.5.2, 2.6, 2.7.1, 2.7.2
struct CaseLabel {
  AlgebraKind algebra;
  MajorCase major;
  std::string s1;
  std::string s2;
  friend bool operator==(const CaseLabel&, const CaseLabel&) = default;
};

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };
Sign sign_of(const Rational& r);
std::string_view to_string(Sign s);

struct MarginReport {
  SchmidModule schmid;
  Weight gamma;     // (lambda - s)^+ = lambda - gamma
  Rational margin;  // ||(lambda - s)^+ + rho||^2 - ||lambda + rho||^2
  Sign sign;
};

/// lambda - dominant(lambda - s). Validates lambda.
Weight gamma_of(AlgebraKind alg, const Weight& lambda, const SchmidModule& s);

/// Computes the margin both as a difference of norms and as ||gamma||^2 - 2<gamma, lambda + rho>;
/// throws InternalInconsistency if they differ.
MarginReport dirac_margin(AlgebraKind alg, const Weight& lambda, const SchmidModule& s);

/// Subcase detection by the header predicates, in order. Validates lambda.
CaseLabel case_of(AlgebraKind alg, const Weight& lambda);

enum class BasicModule { S1 = 1, S2 = 2, S3 = 3 };

/// RHS - LHS of the displayed per-subcase inequality for the chosen basic module,
/// oriented so that a positive value means the strict Dirac inequality holds.
/// S3 is valid only for E7 (std::invalid_argument otherwise).
Rational closed_form_value(AlgebraKind alg, const Weight& lambda, BasicModule which);
Sign closed_form_margin_sign(AlgebraKind alg, const Weight& lambda, BasicModule which);

struct ScanResult {
  std::vector<MarginReport> reports;  // enumerate_up_to_level order
  std::optional<std::size_t> first_negative;
  std::optional<std::size_t> first_zero;
  bool all_positive = false;
};

ScanResult scan(AlgebraKind alg, const Weight& lambda, std::int64_t max_level, Execution ex = Execution::Serial);

namespace detail {
/// The decision tree without validation. Throws UnreachableCase when no header
/// predicate holds, which can only happen for inputs that are not highest weights.
CaseLabel case_of_unchecked(AlgebraKind alg, const Weight& lambda);
/// Dirac margin for a valid lambda and an arbitrary shift weight (no Schmid bookkeeping).
Rational margin_for_shift(AlgebraKind alg, const Weight& lambda, const Weight& shift);
}  // namespace detail

}  // namespace hwdirac
