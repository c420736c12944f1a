#include "hwdirac/dirac.hpp"

#include <stdexcept>

#include "hwdirac/errors.hpp"
#include "hwdirac/weyl.hpp"

namespace hwdirac {

std::string_view to_string(MajorCase c) {
  switch (c) {
    case MajorCase::Case1: return "Case1";
    case MajorCase::Case2: return "Case2";
    case MajorCase::Case3: return "Case3";
  }
  return "?";
}

Sign sign_of(const Rational& r) { return static_cast<Sign>(r.sign()); }

std::string_view to_string(Sign s) {
  switch (s) {
    case Sign::Negative: return "negative";
    case Sign::Zero: return "zero";
    case Sign::Positive: return "positive";
  }
  return "?";
}

namespace {

MarginReport margin_unchecked(AlgebraKind alg, const Weight& lambda, const Weight& lambda_rho,
                              const Rational& base_norm, const SchmidModule& s) {
  Weight shifted = dominant_weight(alg, lambda - weight_of(alg, s));
  Weight gamma = lambda - shifted;
  Rational by_norms = norm_sq(shifted + rho(alg)) - base_norm;
  Rational by_gamma = norm_sq(gamma) - Rational(2) * inner(gamma, lambda_rho);
  if (by_norms != by_gamma)
    throw InternalInconsistency("margin formulas disagree at " + lambda.str() + " for " + s.str(alg) + ": " +
                                by_norms.str() + " vs " + by_gamma.str());
  Sign sg = sign_of(by_norms);
  return {s, std::move(gamma), std::move(by_norms), sg};
}

// Header predicates are written out as stated for each subcase; see case_of.
std::string e6_s1_case(const Weight& l) {
  const Rational &l1 = l[0], &l2 = l[1], &l3 = l[2], &l4 = l[3], &l5 = l[4];
  if (l1 + l2 >= 1) return "1.1";
  if (l2 == -l1 && l3 - l2 >= 1) return "1.2";
  if (l3 == l2 && l2 == -l1 && l2 > 0 && l4 - l2 >= 1) return "1.3";
  if (l3.is_zero() && l2.is_zero() && l1.is_zero() && l4 >= 1) return "1.4";
  if (l4 == l3 && l3 == l2 && l2 == -l1 && l2 > 0 && l5 - l2 >= 1) return "1.5";
  if (l4.is_zero() && l3.is_zero() && l2.is_zero() && l1.is_zero() && l5 - l2 >= 1) return "1.6";
  if (l5 == l4 && l4 == l3 && l3 == l2 && l2 == -l1 && l2 > 0) return "1.7";
  if (l5.is_zero() && l4.is_zero() && l3.is_zero() && l2.is_zero() && l1.is_zero()) return "1.8";
  throw UnreachableCase("no E6 s1 subcase matches " + l.str());
}

std::string e6_s2_case(const Weight& l) {
  const Rational &l1 = l[0], &l2 = l[1], &l3 = l[2], &l4 = l[3], &l5 = l[4];
  if (l5 != l4) return "2.1";
  if (l4 > l3) return "2.2";
  if (l4 == l3 && l3 > l2) return "2.3";
  if (l4 == l3 && l3 == l2 && l2 > l1.abs()) return "2.4";
  if (l4 == l3 && l3 == l2 && l2 == l1 && l1 > 0) return "2.5";
  if (l4 == l3 && l3 == l2 && l2 == -l1 && l2 > 0) return "2.6";
  if (l5.is_zero() && l4.is_zero() && l3.is_zero() && l2.is_zero() && l1.is_zero()) return "2.7";
  throw UnreachableCase("no E6 s2 subcase matches " + l.str());
}

std::string e7_s1_case(const Weight& l) {
  const Rational &l1 = l[0], &l2 = l[1], &l3 = l[2], &l4 = l[3], &l5 = l[4];
  Rational q = alpha1_pairing(l);
  if (q >= 1) return "1.1";
  if (!q.is_zero()) throw UnreachableCase("E7 alpha1 pairing is neither >= 1 nor 0 at " + l.str());
  if (l1 < l2) return "1.2.1";
  if (l1 == l2 && l2 < l3) return "1.2.2";
  if (l1 > 0 && l1 == l2 && l2 == l3 && l3 < l4) return "1.2.3";
  if (l1.is_zero() && l2.is_zero() && l3.is_zero() && l3 < l4) return "1.2.4";
  if (l1 > 0 && l1 == l2 && l2 == l3 && l3 == l4 && l4 < l5) return "1.2.5";
  if (l1.is_zero() && l2.is_zero() && l3.is_zero() && l4.is_zero() && l4 < l5) return "1.2.6";
  if (l1 > 0 && l1 == l2 && l2 == l3 && l3 == l4 && l4 == l5) return "1.2.7";
  if (l1.is_zero() && l2.is_zero() && l3.is_zero() && l4.is_zero() && l5.is_zero()) return "1.2.8";
  throw UnreachableCase("no E7 s1 subcase matches " + l.str());
}

std::string e7_s2_case(const Weight& l) {
  const Rational &l1 = l[0], &l2 = l[1], &l3 = l[2], &l4 = l[3], &l5 = l[4];
  Rational q = alpha1_pairing(l);
  if (l5 > l4) return "2.1";
  if (l5 == l4 && l4 > l3) return "2.2";
  if (l5 == l4 && l4 == l3 && l3 > l2) return "2.3";
  if (l5 == l4 && l4 == l3 && l3 == l2 && l2 > l1.abs()) return "2.4";
  bool all_equal = l5 == l4 && l4 == l3 && l3 == l2 && l2 == l1;
  if (all_equal && l1 > 0 && q >= 1) return "2.5.1";
  if (all_equal && l1 > 0 && q.is_zero()) return "2.5.2";
  if (l5 == l4 && l4 == l3 && l3 == l2 && l2 == -l1 && l2 > 0) return "2.6";
  bool all_zero = all_equal && l1.is_zero();
  if (all_zero && q >= 1) return "2.7.1";
  if (all_zero && q.is_zero()) return "2.7.2";
  throw UnreachableCase("no E7 s2 subcase matches " + l.str());
}

Rational sum5(const Weight& l) { return l[0] + l[1] + l[2] + l[3] + l[4]; }

Rational e6_s1_constant(const std::string& c) {
  if (c == "1.1") return 20;
  if (c == "1.2") return 18;
  if (c == "1.3") return 16;
  if (c == "1.4" || c == "1.5") return 14;
  if (c == "1.6") return 8;
  if (c == "1.7") return 12;
  return 0;  // 1.8
}

Rational e6_s2_constant(const std::string& c) {
  if (c == "2.1") return 14;
  if (c == "2.2") return 13;
  if (c == "2.3") return 12;
  if (c == "2.4") return 11;
  if (c == "2.5" || c == "2.6") return 10;
  return 6;  // 2.7
}

// Threshold t with "lambda7 >= t".
Rational e7_s1_threshold(const std::string& c) {
  if (c == "1.1") return 8;
  if (c == "1.2.1") return Rational(15, 2);
  if (c == "1.2.2") return 7;
  if (c == "1.2.3") return Rational(13, 2);
  if (c == "1.2.4" || c == "1.2.5") return 6;
  if (c == "1.2.6") return 4;
  if (c == "1.2.7") return Rational(11, 2);
  return 0;  // 1.2.8
}

// Constant K with "l5 + l6 - 2 l7 + K <= 0".
Rational e7_s2_constant(const std::string& c) {
  if (c == "2.1") return 24;
  if (c == "2.2") return 23;
  if (c == "2.3") return 22;
  if (c == "2.4") return 21;
  if (c == "2.5.1" || c == "2.6") return 20;
  if (c == "2.5.2") return 19;
  if (c == "2.7.1") return 16;
  return 8;  // 2.7.2
}

}  // namespace

namespace detail {

CaseLabel case_of_unchecked(AlgebraKind alg, const Weight& l) {
  CaseLabel label{alg, MajorCase::Case3, {}, {}};
  if (alg == AlgebraKind::E6) {
    label.s1 = e6_s1_case(l);
    label.s2 = e6_s2_case(l);
    bool first4_zero = l[0].is_zero() && l[1].is_zero() && l[2].is_zero() && l[3].is_zero();
    if (first4_zero && l[4].is_zero())
      label.major = MajorCase::Case1;
    else if (first4_zero)
      label.major = MajorCase::Case2;
  } else {
    label.s1 = e7_s1_case(l);
    label.s2 = e7_s2_case(l);
    if (label.s1 == "1.2.8")
      label.major = MajorCase::Case1;
    else if (label.s1 == "1.2.6")
      label.major = MajorCase::Case2;
  }
  return label;
}

Rational margin_for_shift(AlgebraKind alg, const Weight& lambda, const Weight& shift) {
  Weight shifted = dominant_weight(alg, lambda - shift);
  return norm_sq(shifted + rho(alg)) - norm_sq(lambda + rho(alg));
}

}  // namespace detail

Weight gamma_of(AlgebraKind alg, const Weight& lambda, const SchmidModule& s) {
  require_highest_weight(alg, lambda);
  return lambda - dominant_weight(alg, lambda - weight_of(alg, s));
}

MarginReport dirac_margin(AlgebraKind alg, const Weight& lambda, const SchmidModule& s) {
  require_highest_weight(alg, lambda);
  Weight lr = lambda + rho(alg);
  return margin_unchecked(alg, lambda, lr, norm_sq(lr), s);
}

CaseLabel case_of(AlgebraKind alg, const Weight& lambda) {
  require_highest_weight(alg, lambda);
  return detail::case_of_unchecked(alg, lambda);
}

Rational closed_form_value(AlgebraKind alg, const Weight& l, BasicModule which) {
  CaseLabel label = case_of(alg, l);
  if (alg == AlgebraKind::E6) {
    switch (which) {
      case BasicModule::S1: return Rational(3) * l[5] - sum5(l) - e6_s1_constant(label.s1);
      case BasicModule::S2: return Rational(3) * l[5] - l[4] - e6_s2_constant(label.s2);
      case BasicModule::S3: break;
    }
    throw std::invalid_argument("E6 has no third basic Schmid module");
  }
  switch (which) {
    case BasicModule::S1: return l[6] - e7_s1_threshold(label.s1);
    case BasicModule::S2: return Rational(2) * l[6] - l[4] - l[5] - e7_s2_constant(label.s2);
    case BasicModule::S3: return l[6] - l[5] - 12;
  }
  throw std::invalid_argument("unknown basic module");
}

Sign closed_form_margin_sign(AlgebraKind alg, const Weight& lambda, BasicModule which) {
  return sign_of(closed_form_value(alg, lambda, which));
}

ScanResult scan(AlgebraKind alg, const Weight& lambda, std::int64_t max_level, Execution ex) {
  require_highest_weight(alg, lambda);
  auto modules = enumerate_up_to_level(alg, max_level);
  Weight lr = lambda + rho(alg);
  Rational base = norm_sq(lr);
  ScanResult res;
  res.reports = map_indexed(
      modules.size(), [&](std::size_t i) { return margin_unchecked(alg, lambda, lr, base, modules[i]); }, ex);
  for (std::size_t i = 0; i < res.reports.size(); ++i) {
    Sign s = res.reports[i].sign;
    if (s == Sign::Negative && !res.first_negative) res.first_negative = i;
    if (s == Sign::Zero && !res.first_zero) res.first_zero = i;
  }
  res.all_positive = !res.first_negative && !res.first_zero;
  return res;
}

}  // namespace hwdirac
