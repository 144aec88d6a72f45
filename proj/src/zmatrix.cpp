#include "trisect/zmatrix.hpp"

#include <algorithm>
#include <utility>

namespace trisect {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) fail(ErrorKind::InvalidInput, "ragged matrix rows");
    for (long x : r) entries_.emplace_back(x);
  }
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows,
                               std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) fail(ErrorKind::InvalidInput, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<Integer> IntMatrix::row(std::size_t r) const {
  return {entries_.begin() + r * cols_, entries_.begin() + (r + 1) * cols_};
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::select(const std::vector<std::size_t>& row_idx,
                            const std::vector<std::size_t>& col_idx) const {
  IntMatrix s(row_idx.size(), col_idx.size());
  for (std::size_t r = 0; r < row_idx.size(); ++r)
    for (std::size_t c = 0; c < col_idx.size(); ++c)
      s(r, c) = (*this)(row_idx[r], col_idx[c]);
  return s;
}

namespace {

void swap_rows(IntMatrix& a, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(r1, c), a(r2, c));
}

void swap_cols(IntMatrix& a, std::size_t c1, std::size_t c2) {
  if (c1 == c2) return;
  for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, c1), a(r, c2));
}

// Least |a_ij| over the nonzero entries of the trailing block, lowest (r, c)
// first among ties.
bool find_pivot(const IntMatrix& a, std::size_t t, std::size_t& pr,
                std::size_t& pc) {
  bool found = false;
  Integer best;
  for (std::size_t r = t; r < a.rows(); ++r) {
    for (std::size_t c = t; c < a.cols(); ++c) {
      const Integer& x = a(r, c);
      if (sgn(x) == 0) continue;
      if (!found || mpz_cmpabs(x.get_mpz_t(), best.get_mpz_t()) < 0) {
        found = true;
        best = x;
        pr = r;
        pc = c;
      }
    }
  }
  return found;
}

// Visit every k-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void check_minor_order(const IntMatrix& m, std::size_t k) {
  if (k == 0 || k > std::min(m.rows(), m.cols()))
    fail(ErrorKind::InvalidInput, "minor order out of range");
}

template <class F>
void for_each_minor(const IntMatrix& m, std::size_t k, F&& f) {
  for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
    for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
      f(determinant(m.select(rows, cols)));
    });
  });
}

}  // namespace

SnfResult snf(const IntMatrix& m) {
  IntMatrix a = m;
  SnfResult out;
  const std::size_t n = std::min(a.rows(), a.cols());
  Integer q;
  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      std::size_t pr = 0, pc = 0;
      if (!find_pivot(a, t, pr, pc)) return out;
      swap_rows(a, t, pr);
      swap_cols(a, t, pc);
      const Integer pivot = a(t, t);

      bool cleared = true;
      for (std::size_t r = t + 1; r < a.rows(); ++r) {
        if (sgn(a(r, t)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(r, t).get_mpz_t(), pivot.get_mpz_t());
        for (std::size_t c = t; c < a.cols(); ++c) a(r, c) -= q * a(t, c);
        if (sgn(a(r, t)) != 0) cleared = false;
      }
      for (std::size_t c = t + 1; c < a.cols(); ++c) {
        if (sgn(a(t, c)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(t, c).get_mpz_t(), pivot.get_mpz_t());
        for (std::size_t r = t; r < a.rows(); ++r) a(r, c) -= q * a(r, t);
        if (sgn(a(t, c)) != 0) cleared = false;
      }
      if (!cleared) continue;

      // Enforce the divisibility chain: fold an offending row into row t.
      bool divisible = true;
      for (std::size_t r = t + 1; r < a.rows() && divisible; ++r) {
        for (std::size_t c = t + 1; c < a.cols(); ++c) {
          if (!mpz_divisible_p(a(r, c).get_mpz_t(), pivot.get_mpz_t())) {
            for (std::size_t cc = t; cc < a.cols(); ++cc) a(t, cc) += a(r, cc);
            divisible = false;
            break;
          }
        }
      }
      if (divisible) break;
    }
    out.invariant_factors.push_back(abs(a(t, t)));
    ++out.rank;
  }
  return out;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorKind::InvalidInput, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t r = k + 1;
      while (r < n && sgn(a(r, k)) == 0) ++r;
      if (r == n) return 0;
      swap_rows(a, k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Integer minors_gcd(const IntMatrix& m, std::size_t k) {
  check_minor_order(m, k);
  if (std::min(m.rows(), m.cols()) > 6) {
    const SnfResult s = snf(m);
    if (k > s.rank) return 0;
    Integer prod = 1;
    for (std::size_t i = 0; i < k; ++i) prod *= s.invariant_factors[i];
    return prod;
  }
  Integer g = 0;
  for_each_minor(m, k, [&](const Integer& det) { g = gcd(g, det); });
  return g;
}

Integer max_abs_minor(const IntMatrix& m, std::size_t k) {
  check_minor_order(m, k);
  Integer best = 0;
  for_each_minor(m, k, [&](const Integer& det) {
    if (mpz_cmpabs(det.get_mpz_t(), best.get_mpz_t()) > 0) best = abs(det);
  });
  return best;
}

Cokernel cokernel(const IntMatrix& m) {
  const SnfResult s = snf(m);
  Cokernel c;
  c.free_rank = m.rows() - s.rank;
  for (const Integer& d : s.invariant_factors)
    if (d > 1) c.torsion.push_back(d);
  return c;
}

bool hadamard_holds(const IntMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorKind::InvalidInput, "Hadamard check needs a square matrix");
  const Integer det = determinant(m);
  Integer bound = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer norm2 = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) norm2 += m(r, c) * m(r, c);
    bound *= norm2;
  }
  return det * det <= bound;
}

FibGStep::FibGStep(std::size_t step) : step_(step) {
  if (step == 0) fail(ErrorKind::InvalidInput, "Fibonacci step must be at least 1");
  cache_ = {Integer(1), Integer(1)};
}

const Integer& FibGStep::operator()(std::int64_t n) {
  static const Integer zero = 0;
  if (n < 0) return zero;
  while (cache_.size() <= static_cast<std::size_t>(n)) {
    const std::size_t next = cache_.size();
    Integer sum = 0;
    for (std::size_t i = 1; i <= step_ && i <= next; ++i) sum += cache_[next - i];
    cache_.push_back(sum);
  }
  return cache_[static_cast<std::size_t>(n)];
}

Integer fib_gstep(std::size_t g, std::int64_t n) {
  FibGStep f(g);
  return f(n);
}

}  // namespace trisect
