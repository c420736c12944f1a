#include "hwdirac/weyl.hpp"

#include <algorithm>
#include <random>

#include "hwdirac/errors.hpp"

namespace hwdirac {
namespace {

std::vector<WeylGenerator> build_generators(AlgebraKind alg) {
  std::vector<WeylGenerator> gens;
  for (std::size_t i = 2; i <= 5; ++i) {
    for (std::size_t j = 1; j < i; ++j) {
      std::string base = "e" + std::to_string(i);
      std::string other = "e" + std::to_string(j);
      gens.push_back({epsilon(i) - epsilon(j), base + "-" + other});
      gens.push_back({epsilon(i) + epsilon(j), base + "+" + other});
    }
  }
  if (alg == AlgebraKind::E7) gens.push_back({alpha1(), "a1"});
  return gens;
}

// Position of the pair (i, j), i > j, in the ascending (i, j) enumeration.
std::size_t pair_slot(std::size_t i, std::size_t j) { return (i - 1) * (i - 2) / 2 + (j - 1); }

// The reflections are applied in coordinates directly; each branch is exactly
// s_alpha for the root of the given generator.
void apply_generator(std::size_t index, Weight& v) {
  if (index == kAlpha1Index) {
    Rational k = alpha1_pairing(v);
    if (k.is_zero()) return;
    v -= k * alpha1();
    return;
  }
  const auto& root = generators(AlgebraKind::E7)[index].root;
  std::size_t a = 8, b = 8;
  for (std::size_t t = 0; t < 5; ++t) {
    if (root[t].is_zero()) continue;
    (a == 8 ? a : b) = t;
  }
  bool sum = root[a].sign() == root[b].sign();
  if (sum) {
    Rational va = v[a];
    v[a] = -v[b];
    v[b] = -va;
  } else {
    std::swap(v[a], v[b]);
  }
}

class Recorder {
 public:
  explicit Recorder(Weight& v) : v_(v) {}
  void apply(std::size_t index) {
    apply_generator(index, v_);
    applied_.push_back(static_cast<std::uint8_t>(index));
  }
  WeylWord word() const {
    WeylWord w;
    w.letters.assign(applied_.rbegin(), applied_.rend());
    return w;
  }

 private:
  Weight& v_;
  std::vector<std::uint8_t> applied_;  // in application order
};

// Negating coordinates a and b: s_{e_a + e_b} s_{e_a - e_b}.
void flip_pair(Recorder& rec, std::size_t a, std::size_t b) {
  rec.apply(pair_generator_index(a + 1, b + 1, -1));
  rec.apply(pair_generator_index(a + 1, b + 1, +1));
}

bool d5_step_recorded(Weight& v, Recorder& rec) {
  bool changed = false;
  std::vector<std::size_t> neg;
  for (std::size_t i = 0; i < 5; ++i)
    if (v[i].sign() < 0) neg.push_back(i);
  for (std::size_t k = 0; k + 1 < neg.size(); k += 2) {
    flip_pair(rec, neg[k], neg[k + 1]);
    changed = true;
  }
  // Stable insertion sort on |v_i| with adjacent transpositions s_{e_{k+1} - e_k}.
  for (std::size_t i = 1; i < 5; ++i) {
    for (std::size_t k = i; k > 0 && v[k - 1].abs() > v[k].abs(); --k) {
      rec.apply(pair_generator_index(k + 1, k, -1));
      changed = true;
    }
  }
  for (std::size_t p = 1; p < 5; ++p) {
    if (v[p].sign() < 0) {
      flip_pair(rec, 0, p);
      changed = true;
      break;
    }
  }
  return changed;
}

bool d5_step_closed(Weight& v) {
  std::array<Rational, 5> mags;
  int negatives = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    if (v[i].sign() < 0) ++negatives;
    mags[i] = v[i].abs();
  }
  std::sort(mags.begin(), mags.end());
  if (negatives % 2 == 1) mags[0] = -mags[0];
  bool changed = false;
  for (std::size_t i = 0; i < 5; ++i) {
    if (mags[i] != v[i]) {
      v[i] = std::move(mags[i]);
      changed = true;
    }
  }
  return changed;
}

}  // namespace

const std::vector<WeylGenerator>& generators(AlgebraKind alg) {
  static const std::vector<WeylGenerator> e6 = build_generators(AlgebraKind::E6);
  static const std::vector<WeylGenerator> e7 = build_generators(AlgebraKind::E7);
  return alg == AlgebraKind::E6 ? e6 : e7;
}

std::size_t pair_generator_index(std::size_t i, std::size_t j, int sign) {
  if (i < j) std::swap(i, j);
  return 2 * pair_slot(i, j) + (sign > 0 ? 1 : 0);
}

std::size_t generator_index(AlgebraKind alg, std::string_view label) {
  const auto& gens = generators(alg);
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (gens[i].label == label) return i;
  throw UnknownLabelError(std::string(label));
}

std::vector<std::string> WeylWord::labels(AlgebraKind alg) const {
  const auto& gens = generators(alg);
  std::vector<std::string> out;
  out.reserve(letters.size());
  for (auto l : letters) {
    if (l >= gens.size()) throw UnknownLabelError("#" + std::to_string(l));
    out.push_back(gens[l].label);
  }
  return out;
}

WeylWord WeylWord::from_labels(AlgebraKind alg, std::span<const std::string> labels) {
  WeylWord w;
  for (const auto& l : labels) w.letters.push_back(static_cast<std::uint8_t>(generator_index(alg, l)));
  return w;
}

Weight apply(AlgebraKind alg, const WeylWord& w, const Weight& v) {
  const auto& gens = generators(alg);
  Weight r = v;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    if (*it >= gens.size()) throw UnknownLabelError("#" + std::to_string(*it) + " for " + std::string(to_string(alg)));
    r = reflect(r, gens[*it].root);
  }
  return r;
}

bool is_dominant(AlgebraKind alg, const Weight& v) {
  if (v[0].abs() > v[1]) return false;
  for (std::size_t i = 2; i < 5; ++i)
    if (v[i - 1] > v[i]) return false;
  return alg == AlgebraKind::E6 || alpha1_pairing(v).sign() >= 0;
}

DominantResult dominant(AlgebraKind alg, const Weight& v) {
  DominantResult res{v, {}};
  Recorder rec(res.weight);
  for (std::size_t pass = 0; pass < detail::kPassBudget; ++pass) {
    bool changed = d5_step_recorded(res.weight, rec);
    if (alg == AlgebraKind::E7 && alpha1_pairing(res.weight).sign() < 0) {
      rec.apply(kAlpha1Index);
      changed = true;
    }
    if (!changed) {
      res.word = rec.word();
      return res;
    }
  }
  throw IterationBudgetExceeded("dominance loop did not converge for " + v.str());
}

Weight dominant_weight(AlgebraKind alg, const Weight& v) {
  Weight w = v;
  for (std::size_t pass = 0; pass < detail::kPassBudget; ++pass) {
    bool changed = d5_step_closed(w);
    if (alg == AlgebraKind::E7) {
      Rational k = alpha1_pairing(w);
      if (k.sign() < 0) {
        w -= k * alpha1();
        changed = true;
      }
    }
    if (!changed) return w;
  }
  throw IterationBudgetExceeded("dominance loop did not converge for " + v.str());
}

WeylWord random_word(AlgebraKind alg, std::size_t length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, generators(alg).size() - 1);
  WeylWord w;
  w.letters.reserve(length);
  for (std::size_t i = 0; i < length; ++i) w.letters.push_back(static_cast<std::uint8_t>(pick(rng)));
  return w;
}

}  // namespace hwdirac
