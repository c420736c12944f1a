#include "hwdirac/verify.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "hwdirac/errors.hpp"
#include "hwdirac/io.hpp"
#include "hwdirac/weyl.hpp"

namespace hwdirac {

namespace {

constexpr std::size_t kMaxStoredCounterexamples = 100;
constexpr std::size_t kMaxGridPoints = 20'000'000;

std::size_t reduced_size(AlgebraKind alg) { return alg == AlgebraKind::E6 ? 6 : 7; }

nlohmann::ordered_json lambda_inputs(AlgebraKind alg, const Weight& w) {
  nlohmann::ordered_json j;
  j["algebra"] = std::string(to_string(alg));
  j["weight"] = to_json(w);
  return j;
}

bool first_coords_zero(const Weight& w, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (!w[i].is_zero()) return false;
  return true;
}

Rational half(std::int64_t k) { return Rational(k, 2); }

Range halves(std::int64_t lo2, std::int64_t hi2) { return {half(lo2), half(hi2), half(1)}; }

// Chain prefix checks that only need l1..l_{i+1}.
bool prefix_ok(const std::vector<Rational>& r, std::size_t i) {
  const Rational two(2);
  if (i >= 5) return true;
  if (!(two * r[i]).is_integer()) return false;
  if (i == 0) return true;
  if (!(r[i] - r[0]).is_integer()) return false;
  if (i == 1) return r[0].abs() <= r[1];
  return r[i - 1] <= r[i];
}

template <class Item, class Eval>
SuiteReport run_items(std::string suite, AlgebraKind alg, const std::vector<Item>& items, Eval&& eval, Execution ex) {
  auto parts = map_indexed(items.size(), [&](std::size_t i) { return eval(items[i]); }, ex);
  SuiteReport rep;
  rep.suite = std::move(suite);
  rep.algebra = alg;
  for (const auto& p : parts) rep.absorb(p);
  return rep;
}

}  // namespace

std::vector<Rational> Range::values() const {
  if (step.sign() <= 0) throw std::invalid_argument("range step must be positive");
  std::vector<Rational> out;
  if (lo > hi) return out;
  Rational count = (hi - lo) / step;
  if (count > Rational(static_cast<std::int64_t>(kMaxGridPoints))) throw std::invalid_argument("range too long");
  for (Rational v = lo; v <= hi; v = v + step) out.push_back(v);
  return out;
}

GridSpec GridSpec::zeros(AlgebraKind alg) {
  GridSpec g;
  g.algebra = alg;
  g.coords.assign(reduced_size(alg), Range::single(0));
  return g;
}

std::vector<Rational> reduced_coords(AlgebraKind alg, const Weight& w) {
  std::vector<Rational> r(reduced_size(alg));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = w[i];
  return r;
}

Weight expand_reduced(AlgebraKind alg, const std::vector<Rational>& r) {
  if (r.size() != reduced_size(alg))
    throw ParseError(std::string(to_string(alg)) + " reduced weight needs " + std::to_string(reduced_size(alg)) +
                     " entries, got " + std::to_string(r.size()));
  Weight w;
  for (std::size_t i = 0; i < r.size(); ++i) w[i] = r[i];
  if (alg == AlgebraKind::E6) {
    w[6] = r[5];
    w[7] = -r[5];
  } else {
    w[7] = -r[6];
  }
  return w;
}

std::vector<Weight> enumerate_grid(const GridSpec& grid) {
  const AlgebraKind alg = grid.algebra;
  const std::size_t n = reduced_size(alg);
  if (grid.coords.size() != n) throw std::invalid_argument("grid needs one range per reduced coordinate");
  if (grid.alpha1 && alg != AlgebraKind::E7) throw std::invalid_argument("q range applies to e7 only");

  std::vector<std::vector<Rational>> axis(n);
  for (std::size_t i = 0; i < n; ++i) axis[i] = grid.coords[i].values();
  std::vector<Rational> qs;
  if (grid.alpha1) qs = grid.alpha1->values();

  std::vector<Weight> out;
  std::vector<Rational> cur(n);

  // With a q range, slot 5 (l6) iterates q and l6 is solved after l7 is known.
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      std::vector<Rational> r = cur;
      if (grid.alpha1) {
        const Rational q = cur[5];
        r[5] = r[0] - r[1] - r[2] - r[3] - r[4] - Rational(2) * r[6] - Rational(2) * q;
      }
      Weight w = expand_reduced(alg, r);
      if (validate_highest_weight(alg, w).ok()) {
        if (out.size() >= kMaxGridPoints) throw std::invalid_argument("grid too large");
        out.push_back(w);
      }
      return;
    }
    const auto& vals = (grid.alpha1 && i == 5) ? qs : axis[i];
    for (const auto& v : vals) {
      cur[i] = v;
      if (prefix_ok(cur, i)) rec(i + 1);
    }
  };
  rec(0);
  return out;
}

GridSpec default_case_grid(AlgebraKind alg) {
  GridSpec g = GridSpec::zeros(alg);
  if (alg == AlgebraKind::E6) {
    g.coords[0] = halves(-8, 8);
    for (std::size_t i = 1; i < 5; ++i) g.coords[i] = halves(0, 8);
    g.coords[5] = halves(-12, 32);
  } else {
    g.coords[0] = halves(-6, 6);
    for (std::size_t i = 1; i < 5; ++i) g.coords[i] = halves(0, 6);
    g.coords[6] = halves(-4, 24);
    g.alpha1 = Range{0, 3, 1};
  }
  return g;
}

GridSpec default_lemma_grid(AlgebraKind alg) {
  GridSpec g = default_case_grid(alg);
  if (alg == AlgebraKind::E7) {
    g.coords[6] = halves(-4, 40);
    g.alpha1 = Range{0, 7, 1};
  }
  return g;
}

GridSpec default_coherence_grid(AlgebraKind alg) {
  GridSpec g = GridSpec::zeros(alg);
  if (alg == AlgebraKind::E6) {
    g.coords[0] = halves(-6, 6);
    for (std::size_t i = 1; i < 5; ++i) g.coords[i] = halves(0, 6);
    g.coords[5] = halves(-8, 30);
  } else {
    g.coords[0] = halves(-4, 4);
    for (std::size_t i = 1; i < 5; ++i) g.coords[i] = halves(0, 4);
    g.coords[6] = halves(-4, 20);
    g.alpha1 = Range{0, 3, 1};
  }
  return g;
}

bool SuiteReport::ok() const { return passed == total && counterexamples.empty(); }

void SuiteReport::record(bool pass, const std::function<Counterexample()>& make) {
  ++total;
  if (pass) {
    ++passed;
  } else if (counterexamples.size() < kMaxStoredCounterexamples) {
    counterexamples.push_back(make());
  }
}

void SuiteReport::absorb(const SuiteReport& part) {
  total += part.total;
  passed += part.passed;
  for (const auto& c : part.counterexamples) {
    if (counterexamples.size() >= kMaxStoredCounterexamples) break;
    counterexamples.push_back(c);
  }
  for (const auto& [k, v] : part.coverage) coverage[k] += v;
}

WeightSampler::WeightSampler(AlgebraKind alg, std::uint64_t seed, int half_steps)
    : alg_(alg), rng_(seed), half_steps_(half_steps) {}

Weight WeightSampler::next() {
  auto uniform = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  };
  const std::int64_t top = half_steps_ / 2;
  std::vector<Rational> r(reduced_size(alg_));

  const auto shape = uniform(0, 7);
  const bool half_class = uniform(0, 1) == 1;
  std::array<std::int64_t, 5> k{};
  for (auto& x : k) x = uniform(0, top);
  if (shape == 0 && !half_class) k.fill(0);
  if (shape == 1 && !half_class) k[0] = k[1] = k[2] = k[3] = 0;
  std::sort(k.begin(), k.end());
  for (std::size_t i = 0; i < 5; ++i) r[i] = half_class ? Rational(2 * k[i] + 1, 2) : Rational(k[i]);
  if (uniform(0, 1) == 1) r[0] = -r[0];

  if (alg_ == AlgebraKind::E6) {
    r[5] = half(uniform(-2 * half_steps_, 2 * half_steps_));
  } else {
    r[6] = half(uniform(-2 * half_steps_, 2 * half_steps_));
    const Rational q(uniform(0, top));
    r[5] = r[0] - r[1] - r[2] - r[3] - r[4] - Rational(2) * r[6] - Rational(2) * q;
  }
  Weight w = expand_reduced(alg_, r);
  require_highest_weight(alg_, w);
  return w;
}

Weight random_rational_weight(std::mt19937_64& rng) {
  auto uniform = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  static const std::array<Rational, 5> kCommon{Rational(0), Rational(1), Rational(-1), Rational(1, 2),
                                               Rational(-1, 2)};
  Weight w;
  for (std::size_t i = 0; i < 8; ++i) {
    if (uniform(0, 2) == 0) {
      w[i] = kCommon[static_cast<std::size_t>(uniform(0, 4))];
    } else {
      w[i] = Rational(uniform(-12, 12), uniform(1, 3));
    }
  }
  // repeated entries stress tie handling in the sort
  if (uniform(0, 3) == 0) w[static_cast<std::size_t>(uniform(0, 4))] = w[static_cast<std::size_t>(uniform(0, 4))];
  return w;
}

SuiteReport verify_case_equivalence(AlgebraKind alg, const GridSpec& grid, Execution ex) {
  if (grid.algebra != alg) throw std::invalid_argument("grid algebra mismatch");
  const auto weights = enumerate_grid(grid);
  auto eval = [alg](const Weight& lambda) {
    SuiteReport part;
    const CaseLabel label = case_of(alg, lambda);
    part.coverage["major:" + std::string(to_string(label.major))] = 1;
    part.coverage["s1:" + label.s1] = 1;
    part.coverage["s2:" + label.s2] = 1;
    for (int i = 1; i <= basic_count(alg); ++i) {
      const SchmidModule s = basic_module(alg, i);
      const Sign expected = closed_form_margin_sign(alg, lambda, static_cast<BasicModule>(i));
      const MarginReport got = dirac_margin(alg, lambda, s);
      part.record(expected == got.sign, [&] {
        Counterexample c{lambda_inputs(alg, lambda), std::string(to_string(expected)), std::string(to_string(got.sign))};
        c.inputs["schmid"] = to_json(alg, s);
        c.inputs["case_s1"] = label.s1;
        c.inputs["case_s2"] = label.s2;
        c.inputs["margin"] = got.margin.str();
        return c;
      });
    }
    return part;
  };
  return run_items("cases", alg, weights, eval, ex);
}

SuiteReport verify_genprv(AlgebraKind alg, std::size_t samples, std::size_t word_length, std::uint64_t seed,
                          Execution ex) {
  if (samples < 1) throw std::invalid_argument("samples must be at least 1");
  struct Sample {
    Weight mu, nu;
    WeylWord w1, w2;
  };
  std::vector<Sample> draws;
  draws.reserve(samples);
  WeightSampler sampler(alg, seed);
  for (std::size_t i = 0; i < samples; ++i) {
    Sample s;
    s.mu = sampler.next();
    s.nu = sampler.next();
    s.w1 = random_word(alg, word_length, sampler.rng()());
    s.w2 = random_word(alg, word_length, sampler.rng()());
    draws.push_back(std::move(s));
  }
  const Weight& r = rho(alg);
  auto eval = [&](const Sample& s) {
    SuiteReport part;
    const Rational lhs = norm_sq(dominant_weight(alg, apply(alg, s.w1, s.mu) - apply(alg, s.w2, s.nu)) + r);
    const Rational rhs = norm_sq(dominant_weight(alg, s.mu - s.nu) + r);
    part.record(lhs >= rhs, [&] {
      Counterexample c;
      c.inputs["algebra"] = std::string(to_string(alg));
      c.inputs["mu"] = to_json(s.mu);
      c.inputs["nu"] = to_json(s.nu);
      c.inputs["w1"] = s.w1.labels(alg);
      c.inputs["w2"] = s.w2.labels(alg);
      c.expected = ">= " + rhs.str();
      c.got = lhs.str();
      return c;
    });
    return part;
  };
  auto rep = run_items("genprv", alg, draws, eval, ex);
  rep.seed = seed;
  return rep;
}

namespace {

struct ThresholdCase {
  std::string branch;
  Weight lambda;
  std::optional<SchmidModule> fails_at;  // nullopt: all margins positive
};

Weight e6_zero_locus(const Rational& l6) { return expand_reduced(AlgebraKind::E6, {0, 0, 0, 0, 0, l6}); }
// l1..l4 = 0, l5 = 1, 3 l6 - l5 = t
Weight e6_second_locus(const Rational& t) { return expand_reduced(AlgebraKind::E6, {0, 0, 0, 0, 1, (t + 1) / 3}); }
// zero chain with q = 0
Weight e7_zero_locus(const Rational& l7) {
  return expand_reduced(AlgebraKind::E7, {0, 0, 0, 0, 0, Rational(-2) * l7, l7});
}
// l1..l4 = 0, l5 = 1, q = 0
Weight e7_second_locus(const Rational& l7) {
  return expand_reduced(AlgebraKind::E7, {0, 0, 0, 0, 1, Rational(-1) - Rational(2) * l7, l7});
}

std::vector<Rational> parse_list(std::initializer_list<const char*> xs) {
  std::vector<Rational> out;
  for (const char* x : xs) out.push_back(Rational::parse(x));
  return out;
}

std::vector<ThresholdCase> threshold_cases(AlgebraKind alg) {
  std::vector<ThresholdCase> out;
  auto add = [&](const std::string& branch, const std::vector<Rational>& params, Weight (*make)(const Rational&),
                 std::optional<SchmidModule> fails) {
    for (const auto& p : params) out.push_back({branch, make(p), fails});
  };
  const SchmidModule s1 = basic_module(alg, 1), s2 = basic_module(alg, 2);
  if (alg == AlgebraKind::E6) {
    add("zero_chain:l6>2", parse_list({"5/2", "3", "4", "10", "41/2", "60"}), e6_zero_locus, std::nullopt);
    add("zero_chain:0<l6<2", parse_list({"1/2", "1", "3/2", "1/10", "19/10"}), e6_zero_locus, s2);
    add("zero_chain:l6<0", parse_list({"-1", "-1/2", "-5", "-30"}), e6_zero_locus, s1);
    add("l5_only:t>14", parse_list({"15", "20", "29/2", "50"}), e6_second_locus, std::nullopt);
    add("l5_only:8<t<14", parse_list({"9", "11", "13", "17/2", "27/2"}), e6_second_locus, s2);
    add("l5_only:t<8", parse_list({"7", "15/2", "0", "-12"}), e6_second_locus, s1);
  } else {
    const SchmidModule s3 = basic_module(alg, 3);
    add("zero_chain:l7>4", parse_list({"9/2", "5", "8", "41/2", "50"}), e7_zero_locus, std::nullopt);
    add("zero_chain:2<l7<4", parse_list({"5/2", "3", "7/2", "21/10"}), e7_zero_locus, s3);
    add("zero_chain:0<l7<2", parse_list({"1/2", "1", "3/2", "1/10"}), e7_zero_locus, s2);
    add("zero_chain:l7<0", parse_list({"-1", "-1/2", "-9"}), e7_zero_locus, s1);
    add("l5_only:l7>6", parse_list({"13/2", "7", "15", "40"}), e7_second_locus, std::nullopt);
    add("l5_only:4<l7<6", parse_list({"9/2", "5", "11/2", "41/10"}), e7_second_locus, s2);
    add("l5_only:l7<4", parse_list({"3", "7/2", "1", "-6"}), e7_second_locus, s1);
  }
  return out;
}

}  // namespace

SuiteReport verify_thresholds(AlgebraKind alg, std::int64_t max_level, Execution ex) {
  if (max_level < 3) throw std::invalid_argument("threshold suite needs max level >= 3");
  const auto cases = threshold_cases(alg);
  auto eval = [&](const ThresholdCase& tc) {
    SuiteReport part;
    part.coverage[tc.branch] = 1;
    const auto sc = scan(alg, tc.lambda, max_level);
    bool pass = true;
    std::string got;
    if (!tc.fails_at) {
      pass = sc.all_positive;
      got = pass ? "all_positive" : "non_positive margin at " + sc.reports[sc.first_negative.value_or(
                                                                      sc.first_zero.value_or(0))].schmid.str(alg);
    } else {
      const std::int64_t fail_level = level(alg, *tc.fails_at);
      std::optional<Sign> at;
      for (const auto& r : sc.reports) {
        const auto lv = level(alg, r.schmid);
        if (lv < fail_level && r.sign != Sign::Positive) {
          pass = false;
          got = "non_positive margin below failure level at " + r.schmid.str(alg);
          break;
        }
        if (r.schmid == *tc.fails_at) at = r.sign;
      }
      if (pass) {
        pass = at == Sign::Negative;
        got = pass ? "fails at " + tc.fails_at->str(alg)
                   : tc.fails_at->str(alg) + " margin is " + std::string(at ? to_string(*at) : "missing");
      }
    }
    part.record(pass, [&] {
      Counterexample c{lambda_inputs(alg, tc.lambda),
                       tc.fails_at ? "fails at " + tc.fails_at->str(alg) : "all_positive", got};
      c.inputs["branch"] = tc.branch;
      c.inputs["max_level"] = max_level;
      return c;
    });
    return part;
  };
  return run_items("thresholds", alg, cases, eval, ex);
}

namespace {

bool strictly_positive(AlgebraKind alg, const Weight& lambda, const SchmidModule& s) {
  return dirac_margin(alg, lambda, s).sign == Sign::Positive;
}

struct LemmaOutcome {
  bool hit = false;
  bool pass = true;
  bool extended = false;  // the successor reached the locus where the stronger conclusion is claimed
  std::string detail;
};

using LemmaCheck = LemmaOutcome (*)(AlgebraKind, const Weight&, std::int64_t, std::int64_t);

LemmaOutcome check_successor(AlgebraKind alg, int basic, const Weight& next) {
  LemmaOutcome out{true, true, false, ""};
  if (!validate_highest_weight(alg, next).ok()) return {true, false, false, "successor is not a highest weight"};
  if (!strictly_positive(alg, next, basic_module(alg, basic))) {
    out.pass = false;
    out.detail = "successor margin at s" + std::to_string(basic) + " not positive";
  }
  return out;
}

LemmaOutcome all_positive_up_to(AlgebraKind alg, const Weight& w, std::int64_t max_level) {
  const auto sc = scan(alg, w, max_level);
  if (sc.all_positive) return {true, true, true, ""};
  const auto idx = sc.first_negative ? *sc.first_negative : *sc.first_zero;
  return {true, false, true, "successor margin not positive at " + sc.reports[idx].schmid.str(alg)};
}

Weight successor(AlgebraKind alg, const Weight& lambda, int basic) {
  return dominant_weight(alg, lambda - weight_of(alg, basic_module(alg, basic)));
}

LemmaOutcome e6_s2_propagation(AlgebraKind alg, const Weight& lambda, std::int64_t max_level, std::int64_t) {
  if (first_coords_zero(lambda, 5) || !strictly_positive(alg, lambda, basic_module(alg, 2))) return {};
  const Weight next = successor(alg, lambda, 2);
  auto out = check_successor(alg, 2, next);
  if (out.pass && first_coords_zero(next, 5)) out = all_positive_up_to(alg, next, max_level);
  return out;
}

LemmaOutcome e6_s1_propagation(AlgebraKind alg, const Weight& lambda, std::int64_t max_level, std::int64_t) {
  if (first_coords_zero(lambda, 4) || !strictly_positive(alg, lambda, basic_module(alg, 1))) return {};
  const Weight next = successor(alg, lambda, 1);
  auto out = check_successor(alg, 1, next);
  if (out.pass && first_coords_zero(next, 4)) out = all_positive_up_to(alg, next, max_level);
  return out;
}

LemmaOutcome e7_s3_propagation(AlgebraKind alg, const Weight& lambda, std::int64_t, std::int64_t) {
  if (!strictly_positive(alg, lambda, basic_module(alg, 3))) return {};
  return check_successor(alg, 3, successor(alg, lambda, 3));
}

LemmaOutcome multiples_of_s2(AlgebraKind alg, const Weight& w, std::int64_t max_b) {
  for (std::int64_t b = 1; b <= max_b; ++b)
    if (!strictly_positive(alg, w, SchmidModule{0, b, 0}))
      return {true, false, true, "margin at s_{0," + std::to_string(b) + ",0} not positive"};
  return {true, true, true, ""};
}

LemmaOutcome e7_zero_chain_s2_multiples(AlgebraKind alg, const Weight& lambda, std::int64_t, std::int64_t max_b) {
  if (!first_coords_zero(lambda, 5) || !strictly_positive(alg, lambda, basic_module(alg, 2))) return {};
  return multiples_of_s2(alg, lambda, max_b);
}

LemmaOutcome e7_s2_propagation(AlgebraKind alg, const Weight& lambda, std::int64_t, std::int64_t max_b) {
  if (first_coords_zero(lambda, 5) || !strictly_positive(alg, lambda, basic_module(alg, 2))) return {};
  const Weight next = successor(alg, lambda, 2);
  auto out = check_successor(alg, 2, next);
  if (out.pass && first_coords_zero(next, 5)) out = multiples_of_s2(alg, next, max_b);
  return out;
}

LemmaOutcome e7_s1_propagation(AlgebraKind alg, const Weight& lambda, std::int64_t max_level, std::int64_t) {
  if (case_of(alg, lambda).major != MajorCase::Case3 || !strictly_positive(alg, lambda, basic_module(alg, 1)))
    return {};
  const Weight next = successor(alg, lambda, 1);
  auto out = check_successor(alg, 1, next);
  if (out.pass && case_of(alg, next).major != MajorCase::Case3) out = all_positive_up_to(alg, next, max_level);
  return out;
}

}  // namespace

SuiteReport verify_propagation_lemmas(AlgebraKind alg, const GridSpec& grid, std::int64_t max_level,
                                      std::int64_t max_b, Execution ex) {
  if (grid.algebra != alg) throw std::invalid_argument("grid algebra mismatch");
  if (max_level < 1 || max_b < 1) throw std::invalid_argument("lemma bounds must be positive");
  std::vector<std::pair<std::string, LemmaCheck>> lemmas;
  if (alg == AlgebraKind::E6) {
    lemmas = {{"e6_s2_propagation", e6_s2_propagation}, {"e6_s1_propagation", e6_s1_propagation}};
  } else {
    lemmas = {{"e7_s3_propagation", e7_s3_propagation},
              {"e7_zero_chain_s2_multiples", e7_zero_chain_s2_multiples},
              {"e7_s2_propagation", e7_s2_propagation},
              {"e7_s1_propagation", e7_s1_propagation}};
  }
  const auto weights = enumerate_grid(grid);

  SuiteReport rep;
  rep.suite = "lemmas";
  rep.algebra = alg;
  for (const auto& [name, check] : lemmas) {
    auto eval = [&, check = check, name = name](const Weight& lambda) {
      SuiteReport part;
      const LemmaOutcome o = check(alg, lambda, max_level, max_b);
      if (!o.hit) return part;
      if (o.extended) part.coverage["extended"] = 1;
      part.record(o.pass, [&] {
        Counterexample c{lambda_inputs(alg, lambda), "conclusion holds", o.detail};
        c.inputs["lemma"] = name;
        c.inputs["max_level"] = max_level;
        c.inputs["max_b"] = max_b;
        return c;
      });
      return part;
    };
    auto part = run_items("lemmas/" + name, alg, weights, eval, ex);
    part.coverage["hits"] = part.total;
    part.coverage.try_emplace("extended", 0);
    rep.absorb(part);
    rep.parts.push_back(std::move(part));
  }
  rep.coverage.clear();
  return rep;
}

std::vector<Weight> d5_orbit_chamber_members(const Weight& v) {
  std::vector<Weight> found;
  std::array<std::size_t, 5> perm{0, 1, 2, 3, 4};
  do {
    for (unsigned mask = 0; mask < 32; ++mask) {
      if (std::popcount(mask) % 2 != 0) continue;
      Weight u = v;
      for (std::size_t i = 0; i < 5; ++i) u[i] = (mask >> i & 1U) ? -v[perm[i]] : v[perm[i]];
      bool chamber = u[0].abs() <= u[1];
      for (std::size_t i = 2; i < 5 && chamber; ++i) chamber = u[i - 1] <= u[i];
      if (chamber && std::find(found.begin(), found.end(), u) == found.end()) found.push_back(u);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return found;
}

SuiteReport verify_dominance_oracle(AlgebraKind alg, std::size_t samples, std::uint64_t seed, Execution ex) {
  if (alg != AlgebraKind::E6) throw std::invalid_argument("the orbit oracle covers the e6 action only");
  std::mt19937_64 rng(seed);
  std::vector<Weight> draws;
  for (std::size_t i = 0; i < samples; ++i) draws.push_back(random_rational_weight(rng));
  auto eval = [alg](const Weight& v) {
    SuiteReport part;
    const auto members = d5_orbit_chamber_members(v);
    const DominantResult r = dominant(alg, v);
    const bool pass = members.size() == 1 && members.front() == r.weight && dominant_weight(alg, v) == r.weight;
    part.record(pass, [&] {
      Counterexample c;
      c.inputs["algebra"] = std::string(to_string(alg));
      c.inputs["weight"] = to_json(v);
      c.expected = members.size() == 1 ? to_json(members.front()).dump()
                                       : std::to_string(members.size()) + " chamber members";
      c.got = to_json(r.weight).dump();
      return c;
    });
    return part;
  };
  auto rep = run_items("dominance", alg, draws, eval, ex);
  rep.seed = seed;
  return rep;
}

SuiteReport verify_certificates(AlgebraKind alg, std::size_t samples, std::uint64_t seed, Execution ex) {
  std::mt19937_64 rng(seed);
  std::vector<Weight> draws;
  for (std::size_t i = 0; i < samples; ++i) draws.push_back(random_rational_weight(rng));
  auto eval = [alg](const Weight& v) {
    SuiteReport part;
    const DominantResult r = dominant(alg, v);
    const Weight replay = apply(alg, r.word, v);
    const bool pass = replay == r.weight && is_dominant(alg, r.weight) && dominant_weight(alg, v) == r.weight &&
                      norm_sq(v) == norm_sq(r.weight) && dominant(alg, r.weight).word.letters.empty();
    part.record(pass, [&] {
      Counterexample c;
      c.inputs["algebra"] = std::string(to_string(alg));
      c.inputs["weight"] = to_json(v);
      c.inputs["word"] = r.word.labels(alg);
      c.expected = to_json(r.weight).dump();
      c.got = to_json(replay).dump();
      return c;
    });
    return part;
  };
  auto rep = run_items("certificates", alg, draws, eval, ex);
  rep.seed = seed;
  return rep;
}

bool on_threshold(AlgebraKind alg, const Weight& lambda) {
  const MajorCase major = case_of(alg, lambda).major;
  auto in = [](const Rational& x, std::initializer_list<std::int64_t> ts) {
    return std::any_of(ts.begin(), ts.end(), [&](std::int64_t t) { return x == Rational(t); });
  };
  if (major == MajorCase::Case3) return dirac_margin(alg, lambda, basic_module(alg, 1)).sign == Sign::Zero;
  if (alg == AlgebraKind::E6) {
    if (major == MajorCase::Case1) return in(lambda[5], {0, 2});
    return in(Rational(3) * lambda[5] - lambda[4], {8, 14});
  }
  if (major == MajorCase::Case1) return in(lambda[6], {0, 2, 4});
  return in(lambda[6], {4, 6});
}

SuiteReport verify_classifier_coherence(AlgebraKind alg, const GridSpec& grid, std::int64_t max_level, Execution ex) {
  if (grid.algebra != alg) throw std::invalid_argument("grid algebra mismatch");
  const auto weights = enumerate_grid(grid);
  auto eval = [alg, max_level](const Weight& lambda) {
    SuiteReport part;
    const Classification closed = classify_closed_form(alg, lambda);
    const Classification scanned = classify_by_scan(alg, lambda, max_level);
    const bool boundary_expected = on_threshold(alg, lambda);
    part.coverage["verdict:" + std::string(to_string(scanned.verdict))] = 1;
    const bool pass = closed.verdict == scanned.verdict && closed.witness == scanned.witness &&
                      (scanned.verdict == Verdict::Boundary) == boundary_expected;
    auto describe = [alg](const Classification& c) {
      std::string s(to_string(c.verdict));
      if (c.witness) s += " " + c.witness->str(alg);
      return s;
    };
    part.record(pass, [&] {
      Counterexample c{lambda_inputs(alg, lambda), describe(closed), describe(scanned)};
      c.inputs["on_threshold"] = boundary_expected;
      c.inputs["max_level"] = max_level;
      return c;
    });
    return part;
  };
  return run_items("coherence", alg, weights, eval, ex);
}

}  // namespace hwdirac
