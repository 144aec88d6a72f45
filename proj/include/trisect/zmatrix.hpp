#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "trisect/common.hpp"

namespace trisect {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows,
                             std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::vector<Integer> row(std::size_t r) const;
  IntMatrix transposed() const;
  /// Submatrix on the given row and column index lists.
  IntMatrix select(const std::vector<std::size_t>& row_idx,
                   const std::vector<std::size_t>& col_idx) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

struct SnfResult {
  std::vector<Integer> invariant_factors;  // positive, each divides the next
  std::size_t rank = 0;
};

/// Smith normal form by minimal-pivot elimination. Pivot is the nonzero entry
/// of least absolute value, ties broken by lowest (row, col).
SnfResult snf(const IntMatrix& m);

/// Exact determinant (fraction-free Bareiss). Square matrices only.
Integer determinant(const IntMatrix& m);

/// gcd of all k x k minors; 0 when they all vanish.
Integer minors_gcd(const IntMatrix& m, std::size_t k);

/// max |det| over all k x k minors.
Integer max_abs_minor(const IntMatrix& m, std::size_t k);

struct Cokernel {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // each > 1, t_i | t_{i+1}
};

/// Cokernel of m viewed as a map Z^cols -> Z^rows.
Cokernel cokernel(const IntMatrix& m);

/// det(m)^2 <= prod ||row_i||^2, evaluated exactly.
bool hadamard_holds(const IntMatrix& m);

/// Fibonacci g-step numbers: F_0 = F_1 = 1, F_n = 0 for n < 0,
/// F_n = F_{n-1} + ... + F_{n-g}.
class FibGStep {
 public:
  explicit FibGStep(std::size_t step);

  std::size_t step() const { return step_; }
  const Integer& operator()(std::int64_t n);

 private:
  std::size_t step_;
  std::vector<Integer> cache_;
};

Integer fib_gstep(std::size_t g, std::int64_t n);

}  // namespace trisect
