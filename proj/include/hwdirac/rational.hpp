#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hwdirac {

/// Exact rational number, always stored reduced with a positive denominator.
///
/// Values whose numerator and denominator fit in 64 bits live inline; anything
/// larger is promoted to a GMP rational. The representation is canonical (a
/// value that fits inline is never stored as a GMP rational), so structural
/// equality and hashing agree with numeric equality.
class Rational {
 public:
  Rational() noexcept = default;
  Rational(std::int64_t n) noexcept : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(int n) noexcept : num_(n) {}           // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class& q);

  /// Parses "p", "-p", "p/q" (q > 0 after sign normalisation). Throws ParseError.
  static Rational parse(std::string_view text);

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  /// Throws std::domain_error on division by zero.
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  int sign() const;
  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_integer() const;
  Rational abs() const { return sign() < 0 ? -*this : *this; }

  /// True iff the value is held inline (numerator and denominator fit in int64).
  bool is_small() const { return !big_; }

  mpq_class to_mpq() const;
  std::string numerator_str() const;
  std::string denominator_str() const;

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;

  std::size_t hash() const;

 private:
  static Rational from_wide(__int128 num, __int128 den);
  static Rational from_mpq(mpq_class q);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace hwdirac

template <>
struct std::hash<hwdirac::Rational> {
  std::size_t operator()(const hwdirac::Rational& r) const noexcept { return r.hash(); }
};
