#include "hwdirac/classify.hpp"

namespace hwdirac {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Unitary: return "Unitary";
    case Verdict::NotUnitary: return "NotUnitary";
    case Verdict::Boundary: return "Boundary";
    case Verdict::Undetermined: return "Undetermined";
  }
  return "?";
}

std::string_view to_string(Basis b) {
  return b == Basis::ClosedFormTheorem ? "closed_form_theorem" : "level_ordered_scan";
}

namespace {

Classification verdict(Verdict v, std::string note) {
  Classification c;
  c.verdict = v;
  c.basis = Basis::ClosedFormTheorem;
  c.note = std::move(note);
  return c;
}

Classification failure(AlgebraKind alg, int basic, std::string note) {
  Classification c = verdict(Verdict::NotUnitary, std::move(note));
  c.witness = basic_module(alg, basic);
  return c;
}

// Splits the line at the ascending thresholds t_0 < t_1 < ...: above the last
// threshold is Unitary, each open interval below fails at the module listed for
// it, and every threshold itself is Boundary. fail_at[k] is the basic module that
// fails on the interval just below thresholds[k].
Classification by_thresholds(AlgebraKind alg, const Rational& x, std::initializer_list<Rational> thresholds,
                             std::initializer_list<int> fail_at, const std::string& what) {
  auto t = thresholds.begin();
  auto f = fail_at.begin();
  for (; t != thresholds.end(); ++t, ++f) {
    if (x == *t) return verdict(Verdict::Boundary, what + " = " + t->str());
    if (x < *t) return failure(alg, *f, what + " < " + t->str());
  }
  return verdict(Verdict::Unitary, what + " > " + std::prev(thresholds.end())->str());
}

}  // namespace

Classification classify_closed_form(AlgebraKind alg, const Weight& l) {
  CaseLabel label = case_of(alg, l);
  if (alg == AlgebraKind::E6) {
    if (label.major == MajorCase::Case1) return by_thresholds(alg, l[5], {0, 2}, {1, 2}, "E6 Case 1: l6");
    if (label.major == MajorCase::Case2)
      return by_thresholds(alg, Rational(3) * l[5] - l[4], {8, 14}, {1, 2}, "E6 Case 2: 3 l6 - l5");
  } else {
    if (label.major == MajorCase::Case1) return by_thresholds(alg, l[6], {0, 2, 4}, {1, 2, 3}, "E7 Case 1: l7");
    if (label.major == MajorCase::Case2) return by_thresholds(alg, l[6], {4, 6}, {1, 2}, "E7 Case 2: l7");
  }
  std::string what = std::string(alg == AlgebraKind::E6 ? "E6" : "E7") + " Case 3 basic margin";
  switch (closed_form_margin_sign(alg, l, BasicModule::S1)) {
    case Sign::Positive: return verdict(Verdict::Unitary, what + " > 0");
    case Sign::Negative: return failure(alg, 1, what + " < 0");
    case Sign::Zero: break;
  }
  return verdict(Verdict::Boundary, what + " = 0");
}

Classification classify_from_scan(AlgebraKind alg, const Weight& lambda, const ScanResult& scan,
                                  std::int64_t max_level) {
  Classification c;
  c.basis = Basis::LevelOrderedScan;
  c.scan_level = max_level;

  std::optional<std::int64_t> neg_level;
  if (scan.first_negative) neg_level = level(alg, scan.reports[*scan.first_negative].schmid);

  std::optional<std::int64_t> lowest_zero;
  for (const auto& r : scan.reports) {
    if (r.sign == Sign::Zero) {
      lowest_zero = level(alg, r.schmid);
      break;  // reports are level ordered
    }
  }

  if (neg_level && (!lowest_zero || *lowest_zero >= *neg_level)) {
    const auto& w = scan.reports[*scan.first_negative];
    c.verdict = Verdict::NotUnitary;
    c.witness = w.schmid;
    c.note = "first negative margin at " + w.schmid.str(alg) + " (level " + std::to_string(*neg_level) +
             "), all lower levels strictly positive";
    return c;
  }
  if (lowest_zero) {
    c.verdict = Verdict::Boundary;
    c.note = "zero margin at level " + std::to_string(*lowest_zero);
    return c;
  }
  if (classify_closed_form(alg, lambda).verdict == Verdict::Unitary) {
    c.verdict = Verdict::Unitary;
    c.note = "all margins positive up to level " + std::to_string(max_level) + ", confirmed by closed form";
  } else {
    c.verdict = Verdict::Undetermined;
    c.note = "all margins positive up to level " + std::to_string(max_level) + " without closed-form confirmation";
  }
  return c;
}

Classification classify_by_scan(AlgebraKind alg, const Weight& lambda, std::int64_t max_level, Execution ex) {
  return classify_from_scan(alg, lambda, scan(alg, lambda, max_level, ex), max_level);
}

}  // namespace hwdirac
