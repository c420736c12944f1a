#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "hwdirac/classify.hpp"
#include "hwdirac/parallel.hpp"

namespace hwdirac {

/// Arithmetic progression lo, lo + step, ..., <= hi. Empty when lo > hi.
struct Range {
  Rational lo;
  Rational hi;
  Rational step = 1;

  static Range single(const Rational& v) { return {v, v, 1}; }
  std::vector<Rational> values() const;
};

/// Cartesian product of per-coordinate progressions over the reduced coordinates
/// (l1..l6 for E6, l1..l7 for E7), filtered through validate_highest_weight.
/// For E7 the alpha1 quantity q = 1/2(l1 - l2 - ... - l7 + l8) may be ranged
/// instead of l6, in which case l6 is solved from q.
struct GridSpec {
  AlgebraKind algebra = AlgebraKind::E6;
  std::vector<Range> coords;  // size 6 (E6) or 7 (E7)
  std::optional<Range> alpha1;

  /// All reduced coordinates fixed at 0.
  static GridSpec zeros(AlgebraKind alg);
};

/// Valid highest weights of the grid, in nested-loop order with l1 outermost.
std::vector<Weight> enumerate_grid(const GridSpec& grid);

/// E6: chains with l5 <= 4, l6 in [-6, 16] step 1/2. E7: chains with l5 <= 3, l7 in [-2, 12] step 1/2, q in 0..3.
GridSpec default_case_grid(AlgebraKind alg);
/// Wider free parameters so every propagation lemma gets enough hypothesis hits.
GridSpec default_lemma_grid(AlgebraKind alg);
/// Smaller grid for the level-20 classifier cross-check.
GridSpec default_coherence_grid(AlgebraKind alg);

/// Reduced coordinates of a highest weight (6 or 7 entries) and back.
std::vector<Rational> reduced_coords(AlgebraKind alg, const Weight& w);
Weight expand_reduced(AlgebraKind alg, const std::vector<Rational>& reduced);

struct Counterexample {
  nlohmann::ordered_json inputs;
  std::string expected;
  std::string got;
};

struct SuiteReport {
  std::string suite;
  std::optional<AlgebraKind> algebra;
  std::size_t total = 0;
  std::size_t passed = 0;
  std::vector<Counterexample> counterexamples;
  std::optional<std::uint64_t> seed;
  std::map<std::string, std::size_t> coverage;  // suite specific tallies
  std::vector<SuiteReport> parts;

  bool ok() const;
  void record(bool pass, const std::function<Counterexample()>& make);
  void absorb(const SuiteReport& part);
};

/// Seeded samplers for random valid highest weights (bounded coordinates).
class WeightSampler {
 public:
  WeightSampler(AlgebraKind alg, std::uint64_t seed, int half_steps = 12);
  Weight next();
  std::mt19937_64& rng() { return rng_; }

 private:
  AlgebraKind alg_;
  std::mt19937_64 rng_;
  int half_steps_;
};

/// Arbitrary bounded rational weight (not necessarily a highest weight), with ties and zeros likely.
Weight random_rational_weight(std::mt19937_64& rng);

SuiteReport verify_case_equivalence(AlgebraKind alg, const GridSpec& grid, Execution ex = Execution::Parallel);
SuiteReport verify_genprv(AlgebraKind alg, std::size_t samples, std::size_t word_length, std::uint64_t seed,
                          Execution ex = Execution::Parallel);
SuiteReport verify_thresholds(AlgebraKind alg, std::int64_t max_level, Execution ex = Execution::Parallel);
SuiteReport verify_propagation_lemmas(AlgebraKind alg, const GridSpec& grid, std::int64_t max_level = 12,
                                      std::int64_t max_b = 10, Execution ex = Execution::Parallel);
SuiteReport verify_dominance_oracle(AlgebraKind alg, std::size_t samples, std::uint64_t seed,
                                    Execution ex = Execution::Parallel);
SuiteReport verify_certificates(AlgebraKind alg, std::size_t samples, std::uint64_t seed,
                                Execution ex = Execution::Parallel);
SuiteReport verify_classifier_coherence(AlgebraKind alg, const GridSpec& grid, std::int64_t max_level = 20,
                                        Execution ex = Execution::Parallel);

/// Brute-force dominant conjugate for E6: scans all 1920 even signed permutations of
/// coordinates 1..5 and returns the distinct chamber members found (exactly one when correct).
std::vector<Weight> d5_orbit_chamber_members(const Weight& v);

/// True iff lambda sits on one of the closed-form thresholds, or is a Case 3 weight
/// whose basic margin vanishes; computed from coordinates only.
bool on_threshold(AlgebraKind alg, const Weight& lambda);

}  // namespace hwdirac
