#pragma once

#include <string>
#include <vector>

#include "hwdirac/verify.hpp"

namespace hwdirac::testing {

inline Rational R(const char* s) { return Rational::parse(s); }

inline Weight e6(std::vector<Rational> r) { return expand_reduced(AlgebraKind::E6, r); }
inline Weight e7(std::vector<Rational> r) { return expand_reduced(AlgebraKind::E7, r); }

// E7 weight with l6 solved from q = <lambda, alpha1>.
inline Weight e7q(Rational l1, Rational l2, Rational l3, Rational l4, Rational l5, Rational l7, Rational q) {
  Rational l6 = l1 - l2 - l3 - l4 - l5 - Rational(2) * l7 - Rational(2) * q;
  return e7({l1, l2, l3, l4, l5, l6, l7});
}

inline Weight halfvec(std::initializer_list<int> twice) {
  Weight w;
  std::size_t i = 0;
  for (int t : twice) w[i++] = Rational(t, 2);
  return w;
}

}  // namespace hwdirac::testing
