#include "trisect/bounds.hpp"

#include <cmath>
#include <limits>

namespace trisect {

namespace {

double log2_of(const Integer& p) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, p.get_mpz_t());
  return std::log2(mant) + static_cast<double>(exp);
}

Integer pow2(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

}  // namespace

long case2_m_for_k(const Integer& p, long k) {
  if (k < 1) fail(ErrorKind::InvalidInput, "k must be positive");
  Integer kk;
  mpz_ui_pow_ui(kk.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(k));
  const Integer p2 = p * p;
  // 2^(k(2m-k-1)) * k^k >= p^2
  for (long m = 1;; ++m) {
    const long e = k * (2 * m - k - 1);
    const bool ok = e >= 0 ? Integer(kk * pow2(static_cast<unsigned long>(e))) >= p2
                           : kk >= Integer(p2 * pow2(static_cast<unsigned long>(-e)));
    if (ok) return m;
  }
}

BoundReport theorem3_bound(const Integer& p) {
  if (p < 2) fail(ErrorKind::InvalidInput, "theorem3_bound needs p >= 2");
  BoundReport r;
  r.p = p;

  // sqrt(log2 p) < m, i.e. 2^(m^2) > p
  long m = 1;
  while (pow2(static_cast<unsigned long>(m * m)) <= p) ++m;
  r.case1_m = m;

  const double c = std::log2(std::exp(1.0));
  const double lp = log2_of(p);
  const double s = std::sqrt(c * c + 8.0 * lp);
  r.k_star = (c + s) / 2.0;
  r.case2_closed_form = s / 2.0 - 0.5 * std::log2(c + s) + 1.0;

  const long k_max = static_cast<long>(std::ceil(r.k_star)) + 2;
  r.case2_m = std::numeric_limits<long>::max();
  for (long k = 1; k <= k_max; ++k) {
    const long mk = case2_m_for_k(p, k);
    if (mk < r.case2_m) {
      r.case2_m = mk;
      r.case2_k_argmin = k;
    }
  }

  r.m_lower = std::min(r.case1_m, r.case2_m);
  r.L_lower = 3 * r.m_lower;
  return r;
}

int theorem12_bound(bool gsc_known_false, bool no_s1s3_summand, Pi1Class pi1) {
  if (no_s1s3_summand && pi1 == Pi1Class::Other) return 6;
  if (no_s1s3_summand && gsc_known_false) return 4;
  return 0;
}

}  // namespace trisect
