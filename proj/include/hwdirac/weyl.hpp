#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hwdirac/core.hpp"

namespace hwdirac {

struct WeylGenerator {
  Weight root;
  std::string label;  // "e2-e1", "e5+e3", ..., "a1"
};

/// Generators of the compact Weyl group, in a fixed order:
/// e2-e1, e2+e1, e3-e1, e3+e1, e3-e2, e3+e2, ..., e5+e4, and a1 last for E7.
const std::vector<WeylGenerator>& generators(AlgebraKind alg);

/// Index of the generator with the given label, or throws UnknownLabelError.
std::size_t generator_index(AlgebraKind alg, std::string_view label);

/// Index of s_{e_i - e_j} (sign < 0) or s_{e_i + e_j} (sign > 0); order of i, j is irrelevant.
std::size_t pair_generator_index(std::size_t i, std::size_t j, int sign);
/// Index of s_{alpha1} in the E7 generator list.
inline constexpr std::size_t kAlpha1Index = 20;

/// A word in the generators. letters[0] is the leftmost factor, so it is applied last.
struct WeylWord {
  std::vector<std::uint8_t> letters;

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }
  friend bool operator==(const WeylWord&, const WeylWord&) = default;

  std::vector<std::string> labels(AlgebraKind alg) const;
  static WeylWord from_labels(AlgebraKind alg, std::span<const std::string> labels);
};

/// Applies the word right to left. Throws UnknownLabelError for letters outside the algebra.
Weight apply(AlgebraKind alg, const WeylWord& w, const Weight& v);

/// True iff |v1| <= v2 <= ... <= v5 and, for E7, <v, alpha1> >= 0.
bool is_dominant(AlgebraKind alg, const Weight& v);

struct DominantResult {
  Weight weight;
  WeylWord word;  // apply(alg, word, input) == weight
};

/// Unique dominant W_k-conjugate together with a certificate word of actual reflections.
DominantResult dominant(AlgebraKind alg, const Weight& v);

/// Same conjugate without recording a word; the fast path used by margin computations.
Weight dominant_weight(AlgebraKind alg, const Weight& v);

/// Deterministic word of the given length with letters uniform over generators(alg).
WeylWord random_word(AlgebraKind alg, std::size_t length, std::uint64_t seed);

namespace detail {
inline constexpr std::size_t kPassBudget = 1'000'000;
}

}  // namespace hwdirac
