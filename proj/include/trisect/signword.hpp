#pragma once

#include <vector>

namespace trisect {

/// Cyclic word of intersection signs (+1 / -1) of gamma_i with alpha_g.
using SignWord = std::vector<int>;

struct SubarcProfile {
  std::size_t positive = 0;  // cyclically adjacent equal signs
  std::size_t negative = 0;  // cyclically adjacent opposite signs
  friend bool operator==(const SubarcProfile&, const SubarcProfile&) = default;
};

SubarcProfile subarc_profile(const SignWord& w);

/// Remove the leftmost negative subarc (an adjacent opposite-sign pair,
/// possibly wrapping). Throws NoNegativeSubarc when there is none.
SignWord wave_reduce(const SignWord& w);

int word_sum(const SignWord& w);

}  // namespace trisect
