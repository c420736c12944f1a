#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hwdirac/core.hpp"

namespace hwdirac {

/// a s1 + b s2 (+ c s3 for E7). c is always 0 for E6.
struct SchmidModule {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  friend bool operator==(const SchmidModule&, const SchmidModule&) = default;
  SchmidModule operator+(const SchmidModule& o) const { return {a + o.a, b + o.b, c + o.c}; }

  /// "s_{a,b}" or "s_{a,b,c}"
  std::string str(AlgebraKind alg) const;
};

/// Throws std::invalid_argument unless a, b, c >= 0, a + b + c >= 1 and c = 0 for E6.
void check_schmid(AlgebraKind alg, const SchmidModule& s);

/// Basic Schmid weights in order s1, s2 (, s3).
const std::vector<Weight>& basic_schmid(AlgebraKind alg);

/// The ith basic module (1-based) as coefficients.
SchmidModule basic_module(AlgebraKind alg, int i);

int basic_count(AlgebraKind alg);

Weight weight_of(AlgebraKind alg, const SchmidModule& s);

/// a + 2b (+ 3c).
std::int64_t level(AlgebraKind alg, const SchmidModule& s);

/// Every module of level <= max_level, sorted by (level, c, b). Throws for max_level < 1.
std::vector<SchmidModule> enumerate_up_to_level(AlgebraKind alg, std::int64_t max_level);

}  // namespace hwdirac
