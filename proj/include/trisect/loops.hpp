#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "trisect/diagram.hpp"

namespace trisect {

enum class Subgraph { Alpha, Beta, Gamma, Transition };

const char* subgraph_name(Subgraph s);

/// Junction markers: alpha_beta is the vertex of Gamma_alpha that is good for
/// beta_alpha, and so on.
enum class Marker { AlphaBeta, AlphaGamma, BetaGamma, BetaAlpha, GammaAlpha, GammaBeta };

const char* marker_name(Marker m);

struct LoopVertex {
  Subgraph subgraph = Subgraph::Transition;
  CutSystem cut;
  std::vector<Marker> markers;
};

/// Move data is optional; when absent it is recovered from the endpoints.
struct Type0Edge {
  std::optional<Type0Move> move;
};
struct Type1Edge {
  std::optional<std::size_t> index;
  std::optional<HomologyClass> replacement;
};
/// Zero-length identification of one vertex seen from two subgraphs.
struct JunctionEdge {};

using EdgeMove = std::variant<Type0Edge, Type1Edge, JunctionEdge>;

/// Closed path: edges[i] joins vertices[i] to vertices[(i + 1) % n].
struct LoopSpec {
  std::vector<LoopVertex> vertices;
  std::vector<EdgeMove> edges;
  /// Optional matchings certifying the junction pairs (alpha_beta, beta_alpha),
  /// (beta_gamma, gamma_beta), (gamma_alpha, alpha_gamma); inferred if absent.
  std::array<std::optional<PairAnnotation>, 3> certificates;
};

struct LengthReport {
  std::size_t l_alpha = 0, l_beta = 0, l_gamma = 0;
  std::size_t total_l = 0;
  std::size_t L = 0;
};

/// Throws LoopError (BadEdge / BadJunction / BadSegment) at the first
/// violation.
LengthReport validate_loop(const TrisectionDiagram& d, const LoopSpec& loop);

/// The loop with no type-0 edges, built from good matchings of all three
/// pairs. Throws NotGood when some pair is not good.
LoopSpec zero_length_loop(const TrisectionDiagram& d);

}  // namespace trisect
