#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "hwdirac/rational.hpp"

namespace hwdirac {

enum class AlgebraKind { E6, E7 };

std::string_view to_string(AlgebraKind alg);
/// Accepts "e6"/"E6"/"e7"/"E7". Throws ParseError.
AlgebraKind parse_algebra(std::string_view text);

/// A vector in the eight-coordinate weight space. Index 0 holds the
/// epsilon_1 component, index 7 the epsilon_8 component.
class Weight {
 public:
  static constexpr std::size_t kDim = 8;

  Weight() = default;
  Weight(std::initializer_list<Rational> coords);
  explicit Weight(const std::array<Rational, kDim>& coords) : c_(coords) {}

  const Rational& operator[](std::size_t i) const { return c_[i]; }
  Rational& operator[](std::size_t i) { return c_[i]; }

  const std::array<Rational, kDim>& coords() const { return c_; }

  Weight operator-() const;
  friend Weight operator+(const Weight& a, const Weight& b);
  friend Weight operator-(const Weight& a, const Weight& b);
  friend Weight operator*(const Rational& k, const Weight& v);
  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);

  friend bool operator==(const Weight& a, const Weight& b) = default;

  bool is_zero() const;
  /// "(c1, c2, ..., c8)"
  std::string str() const;

 private:
  std::array<Rational, kDim> c_{};
};

/// Unit vector epsilon_i for 1 <= i <= 8.
Weight epsilon(std::size_t i);

Rational inner(const Weight& u, const Weight& v);
Rational norm_sq(const Weight& v);

/// Half sum of positive roots in the fixed coordinate system.
const Weight& rho(AlgebraKind alg);

/// The compact root 1/2(e8 - e7 - e6 - e5 - e4 - e3 - e2 + e1) that completes W_k for E7.
const Weight& alpha1();

/// The integer 2<v,alpha1>/<alpha1,alpha1> = <v,alpha1>; for E7 highest weights this is the
/// natural-number quantity 1/2(l1 - l2 - l3 - l4 - l5 - l6 - l7 + l8).
Rational alpha1_pairing(const Weight& v);

/// s_alpha(v) = v - (2<v,alpha>/<alpha,alpha>) alpha. Throws ZeroRootError for alpha = 0.
Weight reflect(const Weight& v, const Weight& alpha);

enum class Condition {
  CentreShape,      // E6: l7 = l6 and l8 = -l6;  E7: l8 = -l7
  AbsFirstLeSecond, // |l1| <= l2
  ChainOrder,       // l_{i-1} <= l_i for 3 <= i <= 5
  HalfIntegral,     // 2 l_i integral, i <= 5
  CommonClass,      // l_i - l_j integral, i, j <= 5
  Alpha1Natural,    // E7 only: 1/2(l8 - l2 - ... - l7 + l1) in N_0
};

struct Violation {
  Condition condition;
  std::string message;
};

struct ValidityReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool violates(Condition c) const;
  std::string summary() const;
};

ValidityReport validate_highest_weight(AlgebraKind alg, const Weight& v);

/// Throws InvalidWeightError naming the violated conditions.
void require_highest_weight(AlgebraKind alg, const Weight& v);

}  // namespace hwdirac
