#pragma once

// H_1 of a closed genus-g surface with its symplectic intersection pairing.
// Basis is interleaved a_1, b_1, ..., a_g, b_g with <a_i, b_i> = 1.

#include <optional>
#include <span>
#include <vector>

#include "trisect/common.hpp"

namespace trisect {

class HomologyClass {
 public:
  HomologyClass() = default;
  explicit HomologyClass(std::vector<Integer> coeffs);

  static HomologyClass zero(std::size_t genus);
  /// a_i and b_i, with 0-based i.
  static HomologyClass a(std::size_t genus, std::size_t i);
  static HomologyClass b(std::size_t genus, std::size_t i);

  std::size_t genus() const { return coeffs_.size() / 2; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const Integer& a_coeff(std::size_t i) const { return coeffs_[2 * i]; }
  const Integer& b_coeff(std::size_t i) const { return coeffs_[2 * i + 1]; }
  bool is_zero() const;

  HomologyClass operator-() const;
  HomologyClass& operator+=(const HomologyClass& other);
  HomologyClass& operator-=(const HomologyClass& other);
  friend HomologyClass operator+(HomologyClass lhs, const HomologyClass& rhs) {
    return lhs += rhs;
  }
  friend HomologyClass operator-(HomologyClass lhs, const HomologyClass& rhs) {
    return lhs -= rhs;
  }
  friend HomologyClass operator*(const Integer& scalar, HomologyClass x);

  friend bool operator==(const HomologyClass&, const HomologyClass&) = default;

 private:
  std::vector<Integer> coeffs_;
};

/// x^T J y. Throws InvalidInput when the genera differ.
Integer pairing(const HomologyClass& x, const HomologyClass& y);

/// Equal up to orientation reversal (negation).
bool equal_up_to_sign(const HomologyClass& x, const HomologyClass& y);

/// Homological shadow of a cut system: an ordered g-tuple of classes.
struct CutSystem {
  std::size_t genus = 0;
  std::vector<HomologyClass> classes;

  CutSystem() = default;
  CutSystem(std::size_t g, std::vector<HomologyClass> cs)
      : genus(g), classes(std::move(cs)) {}

  /// (a_1, ..., a_g).
  static CutSystem standard(std::size_t genus);

  std::size_t size() const { return classes.size(); }
  const HomologyClass& operator[](std::size_t i) const { return classes[i]; }

  friend bool operator==(const CutSystem&, const CutSystem&) = default;
};

/// Lagrangian and primitive (all Smith invariant factors equal to 1).
bool is_cut_system(const CutSystem& cs);

/// Same vertex of the cut complex at the homological level: equal after
/// reordering and orientation changes.
bool same_vertex(const CutSystem& x, const CutSystem& y);

/// Replace class `index` (0-based) by sum_l epsilons[l] * cs[l].
struct Type0Move {
  std::size_t index = 0;
  std::vector<int> epsilons;
};

void check_well_formed(const Type0Move& mv, std::size_t genus);

CutSystem type0_move(const CutSystem& cs, const Type0Move& mv);

/// Replace class `index` by `replacement`, which must meet it once
/// algebraically and pair trivially with every other class.
CutSystem type1_move(const CutSystem& cs, std::size_t index,
                     const HomologyClass& replacement);

/// Integer coordinates of x in the basis given by the classes of cs, when x
/// lies in their integer span.
std::optional<std::vector<Integer>> coordinates_in(const CutSystem& cs,
                                                   const HomologyClass& x);

/// Both tuples span the same sublattice of H_1.
bool same_span(const CutSystem& x, const CutSystem& y);

}  // namespace trisect
