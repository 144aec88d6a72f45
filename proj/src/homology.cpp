#include "trisect/homology.hpp"

#include <string>

#include "trisect/zmatrix.hpp"

namespace trisect {

HomologyClass::HomologyClass(std::vector<Integer> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() % 2 != 0)
    fail(ErrorKind::InvalidInput, "homology class needs an even number of coefficients");
}

HomologyClass HomologyClass::zero(std::size_t genus) {
  return HomologyClass(std::vector<Integer>(2 * genus));
}

HomologyClass HomologyClass::a(std::size_t genus, std::size_t i) {
  if (i >= genus) fail(ErrorKind::InvalidInput, "basis index out of range");
  HomologyClass x = zero(genus);
  x.coeffs_[2 * i] = 1;
  return x;
}

HomologyClass HomologyClass::b(std::size_t genus, std::size_t i) {
  if (i >= genus) fail(ErrorKind::InvalidInput, "basis index out of range");
  HomologyClass x = zero(genus);
  x.coeffs_[2 * i + 1] = 1;
  return x;
}

bool HomologyClass::is_zero() const {
  for (const Integer& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

HomologyClass HomologyClass::operator-() const {
  HomologyClass out = *this;
  for (Integer& c : out.coeffs_) c = -c;
  return out;
}

HomologyClass& HomologyClass::operator+=(const HomologyClass& other) {
  if (other.coeffs_.size() != coeffs_.size())
    fail(ErrorKind::InvalidInput, "homology classes of different genus");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

HomologyClass& HomologyClass::operator-=(const HomologyClass& other) {
  if (other.coeffs_.size() != coeffs_.size())
    fail(ErrorKind::InvalidInput, "homology classes of different genus");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

HomologyClass operator*(const Integer& scalar, HomologyClass x) {
  for (Integer& c : x.coeffs_) c *= scalar;
  return x;
}

Integer pairing(const HomologyClass& x, const HomologyClass& y) {
  if (x.genus() != y.genus() || x.coeffs().size() != y.coeffs().size())
    fail(ErrorKind::InvalidInput, "pairing of classes in different genera");
  Integer sum = 0;
  for (std::size_t i = 0; i < x.genus(); ++i)
    sum += x.a_coeff(i) * y.b_coeff(i) - x.b_coeff(i) * y.a_coeff(i);
  return sum;
}

bool equal_up_to_sign(const HomologyClass& x, const HomologyClass& y) {
  return x == y || x == -y;
}

CutSystem CutSystem::standard(std::size_t genus) {
  CutSystem cs;
  cs.genus = genus;
  for (std::size_t i = 0; i < genus; ++i) cs.classes.push_back(HomologyClass::a(genus, i));
  return cs;
}

namespace {

IntMatrix coefficient_matrix(const CutSystem& cs) {
  IntMatrix m(cs.size(), 2 * cs.genus);
  for (std::size_t r = 0; r < cs.size(); ++r)
    for (std::size_t c = 0; c < 2 * cs.genus; ++c) m(r, c) = cs[r].coeffs()[c];
  return m;
}

bool is_lagrangian(const CutSystem& cs) {
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j)
      if (sgn(pairing(cs[i], cs[j])) != 0) return false;
  return true;
}

bool is_primitive(const CutSystem& cs) {
  const SnfResult s = snf(coefficient_matrix(cs));
  if (s.rank != cs.size()) return false;
  for (const Integer& d : s.invariant_factors)
    if (d != 1) return false;
  return true;
}

}  // namespace

bool is_cut_system(const CutSystem& cs) {
  if (cs.size() != cs.genus) return false;
  for (const HomologyClass& c : cs.classes)
    if (c.coeffs().size() != 2 * cs.genus) return false;
  return is_lagrangian(cs) && is_primitive(cs);
}

bool same_vertex(const CutSystem& x, const CutSystem& y) {
  if (x.genus != y.genus || x.size() != y.size()) return false;
  std::vector<bool> used(y.size(), false);
  for (const HomologyClass& c : x.classes) {
    bool matched = false;
    for (std::size_t j = 0; j < y.size() && !matched; ++j) {
      if (!used[j] && equal_up_to_sign(c, y[j])) {
        used[j] = true;
        matched = true;
      }
    }
    if (!matched) return false;
  }
  return true;
}

void check_well_formed(const Type0Move& mv, std::size_t genus) {
  if (mv.epsilons.size() != genus)
    fail(ErrorKind::InvalidInput, "type-0 move needs one epsilon per curve");
  if (mv.index >= genus) fail(ErrorKind::InvalidInput, "type-0 move index out of range");
  for (std::size_t l = 0; l < genus; ++l) {
    const int e = mv.epsilons[l];
    if (e < -1 || e > 1) fail(ErrorKind::InvalidInput, "epsilon outside {-1, 0, 1}");
  }
  if (mv.epsilons[mv.index] == 0)
    fail(ErrorKind::InvalidInput, "epsilon at the moved index must be +1 or -1");
}

CutSystem type0_move(const CutSystem& cs, const Type0Move& mv) {
  check_well_formed(mv, cs.genus);
  if (cs.size() != cs.genus) fail(ErrorKind::InvalidInput, "cut system has the wrong size");
  HomologyClass replacement = HomologyClass::zero(cs.genus);
  for (std::size_t l = 0; l < cs.size(); ++l) {
    if (mv.epsilons[l] == 1) replacement += cs[l];
    if (mv.epsilons[l] == -1) replacement -= cs[l];
  }
  CutSystem out = cs;
  out.classes[mv.index] = std::move(replacement);
  return out;
}

CutSystem type1_move(const CutSystem& cs, std::size_t index,
                     const HomologyClass& replacement) {
  if (index >= cs.size()) fail(ErrorKind::InvalidInput, "type-1 move index out of range");
  if (replacement.coeffs().size() != 2 * cs.genus)
    fail(ErrorKind::InvalidInput, "replacement class has the wrong genus");
  if (abs(pairing(cs[index], replacement)) != 1)
    fail(ErrorKind::ViolatedD, "replacement must meet curve " + std::to_string(index + 1) +
                                   " algebraically once");
  for (std::size_t j = 0; j < cs.size(); ++j) {
    if (j != index && sgn(pairing(cs[j], replacement)) != 0)
      fail(ErrorKind::ViolatedLagrangian,
           "replacement pairs nontrivially with curve " + std::to_string(j + 1));
  }
  CutSystem out = cs;
  out.classes[index] = replacement;
  if (!is_primitive(out))
    fail(ErrorKind::NotPrimitive, "replacement does not extend to a primitive basis");
  return out;
}

std::optional<std::vector<Integer>> coordinates_in(const CutSystem& cs,
                                                   const HomologyClass& x) {
  const std::size_t n = cs.size();
  const std::size_t eqs = 2 * cs.genus;
  if (x.coeffs().size() != eqs) fail(ErrorKind::InvalidInput, "class has the wrong genus");
  // Augmented system [cs^T | x] over Q.
  std::vector<std::vector<mpq_class>> a(eqs, std::vector<mpq_class>(n + 1));
  for (std::size_t r = 0; r < eqs; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = cs[c].coeffs()[r];
    a[r][n] = x.coeffs()[r];
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < eqs; ++c) {
    std::size_t p = row;
    while (p < eqs && sgn(a[p][c]) == 0) ++p;
    if (p == eqs) continue;
    std::swap(a[p], a[row]);
    for (std::size_t r = 0; r < eqs; ++r) {
      if (r == row || sgn(a[r][c]) == 0) continue;
      const mpq_class f = a[r][c] / a[row][c];
      for (std::size_t cc = c; cc <= n; ++cc) a[r][cc] -= f * a[row][cc];
    }
    pivot_cols.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < eqs; ++r)
    if (sgn(a[r][n]) != 0) return std::nullopt;
  std::vector<Integer> coords(n, 0);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
    mpq_class v = a[i][n] / a[i][pivot_cols[i]];
    v.canonicalize();
    if (v.get_den() != 1) return std::nullopt;
    coords[pivot_cols[i]] = v.get_num();
  }
  return coords;
}

bool same_span(const CutSystem& x, const CutSystem& y) {
  if (x.genus != y.genus) return false;
  for (const HomologyClass& c : x.classes)
    if (!coordinates_in(y, c)) return false;
  for (const HomologyClass& c : y.classes)
    if (!coordinates_in(x, c)) return false;
  return true;
}

}  // namespace trisect
