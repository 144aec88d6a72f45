#pragma once

#include <vector>

#include "trisect/common.hpp"

namespace trisect {

/// Lower bounds on the Kirby-Thompson invariant from |H_1| = p.
struct BoundReport {
  Integer p;
  long case1_m = 0;           // many dotted circles untouched by the walk
  long case2_m = 0;           // integer minimum over the dotted count k
  long case2_k_argmin = 0;
  double case2_closed_form = 0.0;  // real-relaxation minimum
  double k_star = 0.0;             // its minimizer
  long m_lower = 0;
  long L_lower = 0;
};

BoundReport theorem3_bound(const Integer& p);

/// Smallest m with k(2m - k - 1) + k log2 k >= 2 log2 p, exactly.
long case2_m_for_k(const Integer& p, long k);

enum class Pi1Class { Trivial, InfiniteCyclic, Other, Unknown };

/// 6 when there is no S1xS3 summand and pi_1 is neither trivial nor Z;
/// 4 when there is no such summand and X is known not geometrically simply
/// connected; 0 otherwise.
int theorem12_bound(bool gsc_known_false, bool no_s1s3_summand, Pi1Class pi1);

}  // namespace trisect
