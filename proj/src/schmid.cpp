#include "hwdirac/schmid.hpp"

#include <stdexcept>

namespace hwdirac {

std::string SchmidModule::str(AlgebraKind alg) const {
  std::string s = "s_{" + std::to_string(a) + "," + std::to_string(b);
  if (alg == AlgebraKind::E7) s += "," + std::to_string(c);
  return s + "}";
}

void check_schmid(AlgebraKind alg, const SchmidModule& s) {
  if (s.a < 0 || s.b < 0 || s.c < 0) throw std::invalid_argument("Schmid coefficients must be nonnegative");
  if (s.a + s.b + s.c < 1) throw std::invalid_argument("Schmid module must be nonzero");
  if (alg == AlgebraKind::E6 && s.c != 0) throw std::invalid_argument("E6 has no third basic Schmid module");
}

const std::vector<Weight>& basic_schmid(AlgebraKind alg) {
  static const Rational h(1, 2);
  static const std::vector<Weight> e6{
      {h, h, h, h, h, -h, -h, h},
      {0, 0, 0, 0, 1, -1, -1, 1},
  };
  static const std::vector<Weight> e7{
      {0, 0, 0, 0, 0, 0, -1, 1},
      {0, 0, 0, 0, 1, 1, -1, 1},
      {0, 0, 0, 0, 0, 2, -1, 1},
  };
  return alg == AlgebraKind::E6 ? e6 : e7;
}

int basic_count(AlgebraKind alg) { return alg == AlgebraKind::E6 ? 2 : 3; }

SchmidModule basic_module(AlgebraKind alg, int i) {
  if (i < 1 || i > basic_count(alg)) throw std::invalid_argument("no such basic Schmid module");
  return {i == 1 ? 1 : 0, i == 2 ? 1 : 0, i == 3 ? 1 : 0};
}

Weight weight_of(AlgebraKind alg, const SchmidModule& s) {
  check_schmid(alg, s);
  const auto& basis = basic_schmid(alg);
  Weight w = Rational(s.a) * basis[0] + Rational(s.b) * basis[1];
  if (alg == AlgebraKind::E7) w += Rational(s.c) * basis[2];
  return w;
}

std::int64_t level(AlgebraKind alg, const SchmidModule& s) {
  check_schmid(alg, s);
  return s.a + 2 * s.b + 3 * s.c;
}

std::vector<SchmidModule> enumerate_up_to_level(AlgebraKind alg, std::int64_t max_level) {
  if (max_level < 1) throw std::invalid_argument("level bound must be at least 1");
  std::vector<SchmidModule> out;
  const std::int64_t c_max_factor = alg == AlgebraKind::E7 ? 1 : 0;
  for (std::int64_t lvl = 1; lvl <= max_level; ++lvl)
    for (std::int64_t c = 0; 3 * c <= lvl * c_max_factor; ++c)
      for (std::int64_t b = 0; 2 * b + 3 * c <= lvl; ++b) out.push_back({lvl - 2 * b - 3 * c, b, c});
  return out;
}

}  // namespace hwdirac
