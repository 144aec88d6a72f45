#pragma once

#include <cstdint>
#include <vector>

#include "trisect/homology.hpp"
#include "trisect/zmatrix.hpp"

namespace trisect {

/// Type-0 walk alpha^(0), ..., alpha^(m) in Gamma_alpha, recorded through the
/// intersection matrices I^(h)_{ij} = <alpha^(h)_i, gamma_j>.
struct WalkTrace {
  std::vector<IntMatrix> matrices;               // I^(0) .. I^(m)
  std::vector<std::vector<std::size_t>> rho;     // rho[h][i], last step touching row i
  std::vector<std::size_t> move_indices;         // i^(1) .. i^(m), 0-based
  std::vector<CutSystem> systems;                // alpha^(0) .. alpha^(m)

  std::size_t steps() const { return move_indices.size(); }
};

/// Throws NotGood unless (alpha0, gamma) is a good pair homologically. Classes
/// of alpha0 are reoriented so that I^(0) has entries in {0, 1}.
WalkTrace walk_trace(const CutSystem& alpha0, const CutSystem& gamma,
                     const std::vector<Type0Move>& moves);

/// Row bounds along the walk: untouched rows are 0/1 with at most one 1,
/// touched rows are bounded by min(F_rho, 2^(rho-1)) in absolute value.
bool check_entry_bounds(const WalkTrace& tr);

/// Row i of I^(h') equals row i of I^(rho_h(i)) for rho_h(i) <= h' <= h.
bool check_rho_eq(const WalkTrace& tr);

/// Rows change only at the moved index, by the same epsilons as the classes.
bool check_row_change(const WalkTrace& tr, const std::vector<Type0Move>& moves);

struct HarnessSummary {
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::size_t max_genus = 0;
  std::size_t max_steps = 0;
  std::vector<std::uint64_t> failing_trials;

  bool ok() const { return passed == trials; }
};

/// Random walks with genus in [1, max_genus] and length in [0, max_steps].
/// Trial t is seeded with seed + t.
HarnessSummary run_entry_bound_harness(std::size_t max_genus,
                                       std::size_t max_steps,
                                       std::size_t trials, std::uint64_t seed);

}  // namespace trisect
