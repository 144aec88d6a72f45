#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "trisect/homology.hpp"
#include "trisect/zmatrix.hpp"

namespace trisect {

struct TrisectionSignature {
  std::size_t g = 0;
  std::array<std::size_t, 3> k{};  // k1, k2, k3

  bool valid() const { return k[0] <= g && k[1] <= g && k[2] <= g; }
  friend bool operator==(const TrisectionSignature&,
                         const TrisectionSignature&) = default;
};

/// The three handlebody pairs, in the order that determines k1, k2, k3.
enum class Pair { AlphaBeta = 0, BetaGamma = 1, GammaAlpha = 2 };

inline constexpr std::array<Pair, 3> kAllPairs{Pair::AlphaBeta, Pair::BetaGamma,
                                               Pair::GammaAlpha};

const char* pair_name(Pair p);

/// P: isotopic curves. D: curves meeting transversely once.
enum class Label { P, D };

/// Matching of a good pair: first[i] is partnered with second[matching[i]].
struct PairAnnotation {
  std::vector<std::size_t> matching;
  std::vector<Label> labels;
  std::vector<int> signs;  // for P: second[matching[i]] == signs[i] * first[i]

  std::size_t count(Label l) const;
  friend bool operator==(const PairAnnotation&, const PairAnnotation&) = default;
};

/// Geometric intersection counts, indexed [first curve][second curve] for the
/// pair orders (alpha, beta), (beta, gamma), (gamma, alpha). Absent = unknown.
struct GeomIntersections {
  std::array<std::optional<IntMatrix>, 3> counts;

  const std::optional<IntMatrix>& operator[](Pair p) const {
    return counts[static_cast<int>(p)];
  }
  std::optional<IntMatrix>& operator[](Pair p) {
    return counts[static_cast<int>(p)];
  }
  friend bool operator==(const GeomIntersections&,
                         const GeomIntersections&) = default;
};

struct TrisectionDiagram {
  std::string name;
  TrisectionSignature signature;
  CutSystem alpha, beta, gamma;
  std::array<std::optional<PairAnnotation>, 3> annotations;
  GeomIntersections geom;

  std::size_t genus() const { return signature.g; }
  std::size_t k(Pair p) const { return signature.k[static_cast<int>(p)]; }
  const CutSystem& first(Pair p) const;
  const CutSystem& second(Pair p) const;
  const std::optional<PairAnnotation>& annotation(Pair p) const {
    return annotations[static_cast<int>(p)];
  }
  std::optional<PairAnnotation>& annotation(Pair p) {
    return annotations[static_cast<int>(p)];
  }

  friend bool operator==(const TrisectionDiagram&,
                         const TrisectionDiagram&) = default;
};

/// Matrix with entry (i, j) = <first[i], second[j]>.
IntMatrix pairing_matrix(const CutSystem& first, const CutSystem& second);

struct PairReport {
  Pair pair = Pair::AlphaBeta;
  std::size_t expected_k = 0;
  Cokernel cokernel;
  bool heegaard_ok = false;  // cokernel is free of rank k
  std::optional<bool> annotation_ok;
  std::optional<bool> geometry_ok;
  std::vector<std::string> problems;

  bool ok() const {
    return heegaard_ok && annotation_ok.value_or(true) &&
           geometry_ok.value_or(true);
  }
};

struct ValidationReport {
  bool signature_ok = false;
  std::array<bool, 3> cut_systems_ok{};  // alpha, beta, gamma
  std::array<PairReport, 3> pairs;
  std::vector<std::string> problems;

  bool ok() const;
};

ValidationReport validate(const TrisectionDiagram& d);

/// Homological good-pair check. When `expected_k` is given the P count must
/// match it; when `geom` is given cross pairs and P pairs must have geometric
/// count 0 and D pairs count 1.
bool good_pair_check(const CutSystem& first, const CutSystem& second,
                     const PairAnnotation& ann,
                     const std::optional<IntMatrix>& geom = std::nullopt,
                     std::optional<std::size_t> expected_k = std::nullopt,
                     std::vector<std::string>* problems = nullptr);

/// Search for a matching making (first, second) a good pair homologically.
std::optional<PairAnnotation> infer_good_pair(const CutSystem& first,
                                              const CutSystem& second);

TrisectionDiagram connected_sum(const TrisectionDiagram& d1,
                                const TrisectionDiagram& d2);

/// Add a standard genus-1 summand raising k of pair `which` (1, 2 or 3).
TrisectionDiagram stabilize(const TrisectionDiagram& d, int which);

/// One of S4, S1xS3, CP2, CP2bar, S2xS2.
TrisectionDiagram standard_diagram(const std::string& name);

/// Genus-3 (3;1,1,1) diagram of the spun lens space S(L(p,q)).
TrisectionDiagram spun_lens(const Integer& p, const Integer& q);

}  // namespace trisect
