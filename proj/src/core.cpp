#include "hwdirac/core.hpp"

#include <algorithm>
#include <stdexcept>

#include "hwdirac/errors.hpp"

namespace hwdirac {

std::string_view to_string(AlgebraKind alg) { return alg == AlgebraKind::E6 ? "e6" : "e7"; }

AlgebraKind parse_algebra(std::string_view text) {
  if (text == "e6" || text == "E6") return AlgebraKind::E6;
  if (text == "e7" || text == "E7") return AlgebraKind::E7;
  throw ParseError("unknown algebra '" + std::string(text) + "' (expected e6 or e7)");
}

Weight::Weight(std::initializer_list<Rational> coords) {
  if (coords.size() != kDim) throw std::invalid_argument("a weight has exactly 8 coordinates");
  std::copy(coords.begin(), coords.end(), c_.begin());
}

Weight Weight::operator-() const {
  Weight r;
  for (std::size_t i = 0; i < kDim; ++i) r.c_[i] = -c_[i];
  return r;
}

Weight operator+(const Weight& a, const Weight& b) {
  Weight r = a;
  r += b;
  return r;
}

Weight operator-(const Weight& a, const Weight& b) {
  Weight r = a;
  r -= b;
  return r;
}

Weight operator*(const Rational& k, const Weight& v) {
  Weight r;
  for (std::size_t i = 0; i < Weight::kDim; ++i) r.c_[i] = k * v.c_[i];
  return r;
}

Weight& Weight::operator+=(const Weight& o) {
  for (std::size_t i = 0; i < kDim; ++i)
    if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (std::size_t i = 0; i < kDim; ++i)
    if (!o.c_[i].is_zero()) c_[i] -= o.c_[i];
  return *this;
}

bool Weight::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x.is_zero(); });
}

std::string Weight::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < kDim; ++i) {
    if (i) s += ", ";
    s += c_[i].str();
  }
  return s + ")";
}

Weight epsilon(std::size_t i) {
  if (i < 1 || i > Weight::kDim) throw std::out_of_range("epsilon index must be in 1..8");
  Weight e;
  e[i - 1] = 1;
  return e;
}

Rational inner(const Weight& u, const Weight& v) {
  Rational s;
  for (std::size_t i = 0; i < Weight::kDim; ++i)
    if (!u[i].is_zero() && !v[i].is_zero()) s += u[i] * v[i];
  return s;
}

Rational norm_sq(const Weight& v) { return inner(v, v); }

const Weight& rho(AlgebraKind alg) {
  static const Weight e6{0, 1, 2, 3, 4, -4, -4, 4};
  static const Weight e7{0, 1, 2, 3, 4, 5, Rational(-17, 2), Rational(17, 2)};
  return alg == AlgebraKind::E6 ? e6 : e7;
}

const Weight& alpha1() {
  static const Rational h(1, 2);
  static const Weight a{h, -h, -h, -h, -h, -h, -h, h};
  return a;
}

Rational alpha1_pairing(const Weight& v) { return inner(v, alpha1()); }

Weight reflect(const Weight& v, const Weight& alpha) {
  Rational aa = norm_sq(alpha);
  if (aa.is_zero()) throw ZeroRootError();
  Rational k = Rational(2) * inner(v, alpha) / aa;
  if (k.is_zero()) return v;
  return v - k * alpha;
}

bool ValidityReport::violates(Condition c) const {
  return std::any_of(violations.begin(), violations.end(), [c](const Violation& v) { return v.condition == c; });
}

std::string ValidityReport::summary() const {
  std::string s;
  for (const auto& v : violations) {
    if (!s.empty()) s += "; ";
    s += v.message;
  }
  return s;
}

ValidityReport validate_highest_weight(AlgebraKind alg, const Weight& v) {
  ValidityReport rep;
  auto fail = [&](Condition c, std::string msg) { rep.violations.push_back({c, std::move(msg)}); };

  if (alg == AlgebraKind::E6) {
    if (v[6] != v[5] || v[7] != -v[5]) fail(Condition::CentreShape, "expected l7 = l6 and l8 = -l6");
  } else if (v[7] != -v[6]) {
    fail(Condition::CentreShape, "expected l8 = -l7");
  }

  if (v[0].abs() > v[1]) fail(Condition::AbsFirstLeSecond, "|l1| <= l2 fails");
  for (std::size_t i = 2; i < 5; ++i)
    if (v[i - 1] > v[i])
      fail(Condition::ChainOrder, "l" + std::to_string(i) + " <= l" + std::to_string(i + 1) + " fails");

  for (std::size_t i = 0; i < 5; ++i)
    if (!(Rational(2) * v[i]).is_integer()) {
      fail(Condition::HalfIntegral, "2 l_i must be an integer for i <= 5");
      break;
    }
  for (std::size_t i = 1; i < 5; ++i)
    if (!(v[i] - v[0]).is_integer()) {
      fail(Condition::CommonClass, "l_i - l_j must be an integer for i, j <= 5");
      break;
    }

  if (alg == AlgebraKind::E7) {
    Rational q = alpha1_pairing(v);
    if (!q.is_integer() || q.sign() < 0)
      fail(Condition::Alpha1Natural, "1/2(l8 - l2 - ... - l7 + l1) must be a nonnegative integer (got " + q.str() + ")");
  }
  return rep;
}

void require_highest_weight(AlgebraKind alg, const Weight& v) {
  auto rep = validate_highest_weight(alg, v);
  if (!rep.ok())
    throw InvalidWeightError("not a highest weight for " + std::string(to_string(alg)) + ": " + rep.summary());
}

}  // namespace hwdirac
