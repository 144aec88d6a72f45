#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trisect/diagram.hpp"

namespace trisect {

/// Linking-level record of the Kirby diagram read off a trisection diagram:
/// dotted circles come from the P-matched alpha curves, framed knots from the
/// gamma curves. Framings are not recorded.
struct KirbySkeleton {
  std::vector<std::size_t> dotted;  // alpha indices, 0-based, ascending
  std::size_t framed = 0;           // number of framed knots (= genus)
  IntMatrix linking;                // dotted x framed, <alpha_i, gamma_j>
};

KirbySkeleton build_skeleton(const TrisectionDiagram& d);

/// |coker| of the linking matrix as a map Z^framed -> Z^dotted, or nullopt
/// when the group is infinite.
std::optional<Integer> homology_order(const KirbySkeleton& sk);

/// H_1 from the skeleton (cokernel of the linking matrix).
Cokernel skeleton_homology(const KirbySkeleton& sk);

/// H_1(X) = H_1(Sigma) / <alpha, beta, gamma>. Needs no annotation.
Cokernel surface_homology(const TrisectionDiagram& d);

struct CancelingPair {
  std::size_t dotted = 0;  // alpha index
  std::size_t framed = 0;  // gamma index
  bool independent = false;
  friend bool operator==(const CancelingPair&, const CancelingPair&) = default;
};

/// Dotted alpha_i and gamma_j with |<alpha_i, gamma_j>| = 1. With
/// `check_independence` the (gamma, alpha) geometric counts decide whether
/// alpha_i meets gamma_j alone, exactly once.
std::vector<CancelingPair> find_canceling_pairs(const TrisectionDiagram& d,
                                                bool check_independence = true);

enum class Pi1Kind { Trivial, InfiniteCyclic, FiniteCyclic, Unknown };

struct Pi1Report {
  Pi1Kind kind = Pi1Kind::Unknown;
  Integer order;  // n for FiniteCyclic(n)
  std::string presentation;
};

std::string to_string(Pi1Kind kind);

/// <x | x^{e_i}, i not canceled>, which is Z / gcd(surviving e_i).
Pi1Report pi1_from_epsilons(const std::vector<Integer>& exponents,
                            const std::vector<std::size_t>& canceled);

/// One dotted circle gives a one-generator group; more are reported Unknown.
Pi1Report pi1_from_skeleton(const KirbySkeleton& sk);

// Relation words along the chain beta ~ alpha ~ alpha' ~ gamma.
enum class Rel { P, D, Empty };

struct ChainData {
  int l_alpha = 0;
  /// l_alpha = 0: (beta~alpha, alpha~gamma) per index.
  /// l_alpha = 1: (beta~alpha, alpha~alpha', alpha'~gamma), exactly one index
  /// with Empty in the middle.
  std::vector<std::vector<Rel>> words;
  /// Optional <alpha_g, gamma_i> per index (same order as words), used for
  /// the pi_1 report when no other conclusion applies.
  std::optional<std::vector<Integer>> linking;
};

enum class Verdict { SummandS1xS3, GeomSimplyConnected, NoConclusion };

std::string to_string(Verdict v);

struct CaseCertificate {
  Verdict verdict = Verdict::NoConclusion;
  std::string rule;                   // name of the rule that fired
  std::vector<std::size_t> indices;   // caller indices (0-based) it fired at
  std::vector<std::pair<std::size_t, std::size_t>> canceled;  // (dotted, framed)
};

struct LowAlphaResult {
  CaseCertificate certificate;
  std::optional<Pi1Report> pi1;
};

LowAlphaResult classify_low_alpha(const ChainData& chain);

}  // namespace trisect
