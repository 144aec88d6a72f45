#include "trisect/signword.hpp"

#include <numeric>

#include "trisect/common.hpp"

namespace trisect {

namespace {

void check_signs(const SignWord& w) {
  for (int s : w)
    if (s != 1 && s != -1) fail(ErrorKind::InvalidInput, "sign words use only +1 and -1");
}

}  // namespace

SubarcProfile subarc_profile(const SignWord& w) {
  if (w.empty()) fail(ErrorKind::InvalidInput, "empty sign word has no subarcs");
  check_signs(w);
  SubarcProfile p;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == w[(i + 1) % w.size()])
      ++p.positive;
    else
      ++p.negative;
  }
  return p;
}

SignWord wave_reduce(const SignWord& w) {
  check_signs(w);
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    if (w[i] == w[j]) continue;
    SignWord out;
    out.reserve(n - 2);
    for (std::size_t k = 0; k < n; ++k)
      if (k != i && k != j) out.push_back(w[k]);
    return out;
  }
  fail(ErrorKind::NoNegativeSubarc, "sign word has no negative subarc");
}

int word_sum(const SignWord& w) { return std::accumulate(w.begin(), w.end(), 0); }

}  // namespace trisect
