#include "trisect/loops.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace trisect {

const char* subgraph_name(Subgraph s) {
  switch (s) {
    case Subgraph::Alpha: return "alpha";
    case Subgraph::Beta: return "beta";
    case Subgraph::Gamma: return "gamma";
    case Subgraph::Transition: return "transition";
  }
  return "?";
}

const char* marker_name(Marker m) {
  switch (m) {
    case Marker::AlphaBeta: return "alpha_beta";
    case Marker::AlphaGamma: return "alpha_gamma";
    case Marker::BetaGamma: return "beta_gamma";
    case Marker::BetaAlpha: return "beta_alpha";
    case Marker::GammaAlpha: return "gamma_alpha";
    case Marker::GammaBeta: return "gamma_beta";
  }
  return "?";
}

namespace {

constexpr std::array<Subgraph, 3> kSubgraphs{Subgraph::Alpha, Subgraph::Beta, Subgraph::Gamma};

// Marker on subgraph `s` facing subgraph `t`.
Marker marker_for(Subgraph s, Subgraph t) {
  if (s == Subgraph::Alpha) return t == Subgraph::Beta ? Marker::AlphaBeta : Marker::AlphaGamma;
  if (s == Subgraph::Beta) return t == Subgraph::Gamma ? Marker::BetaGamma : Marker::BetaAlpha;
  return t == Subgraph::Alpha ? Marker::GammaAlpha : Marker::GammaBeta;
}

Subgraph marker_owner(Marker m) {
  switch (m) {
    case Marker::AlphaBeta:
    case Marker::AlphaGamma: return Subgraph::Alpha;
    case Marker::BetaGamma:
    case Marker::BetaAlpha: return Subgraph::Beta;
    default: return Subgraph::Gamma;
  }
}

const CutSystem& diagram_system(const TrisectionDiagram& d, Subgraph s) {
  switch (s) {
    case Subgraph::Alpha: return d.alpha;
    case Subgraph::Beta: return d.beta;
    default: return d.gamma;
  }
}

[[noreturn]] void bad_edge(std::size_t step, const std::string& why) {
  throw LoopError(ErrorKind::BadEdge, std::to_string(step),
                  "edge " + std::to_string(step) + ": " + why);
}

[[noreturn]] void bad_junction(const std::string& which, const std::string& why) {
  throw LoopError(ErrorKind::BadJunction, which, "junction " + which + ": " + why);
}

[[noreturn]] void bad_segment(Subgraph s, const std::string& why) {
  throw LoopError(ErrorKind::BadSegment, subgraph_name(s),
                  std::string("segment ") + subgraph_name(s) + ": " + why);
}

struct Run {
  std::size_t start = 0, end = 0, length = 0;
};

struct Difference {
  std::size_t unmatched = 0;  // number of unmatched classes on each side
  std::size_t src = 0, dst = 0;
};

// Match classes of `to` against `from` up to sign.
Difference compare(const CutSystem& from, const CutSystem& to) {
  Difference diff;
  std::vector<bool> used(from.size(), false);
  std::vector<std::size_t> loose_dst;
  for (std::size_t j = 0; j < to.size(); ++j) {
    bool matched = false;
    for (std::size_t i = 0; i < from.size() && !matched; ++i) {
      if (!used[i] && equal_up_to_sign(from[i], to[j])) {
        used[i] = true;
        matched = true;
      }
    }
    if (!matched) loose_dst.push_back(j);
  }
  diff.unmatched = loose_dst.size();
  if (diff.unmatched == 1) {
    diff.dst = loose_dst.front();
    diff.src = static_cast<std::size_t>(std::find(used.begin(), used.end(), false) - used.begin());
  }
  return diff;
}

void check_type0(std::size_t step, const CutSystem& from, const CutSystem& to,
                 const Type0Edge& edge) {
  if (edge.move) {
    CutSystem moved;
    try {
      moved = type0_move(from, *edge.move);
    } catch (const Error& e) {
      bad_edge(step, e.what());
    }
    if (!same_vertex(moved, to)) bad_edge(step, "type-0 move data does not reach the next vertex");
    return;
  }
  const Difference diff = compare(from, to);
  if (diff.unmatched == 0) return;  // homologous replacement curve
  if (diff.unmatched != 1) bad_edge(step, "type-0 edge must change exactly one curve");
  const auto coords = coordinates_in(from, to[diff.dst]);
  if (!coords) bad_edge(step, "new curve is not a combination of the old cut system");
  for (std::size_t l = 0; l < coords->size(); ++l) {
    const Integer& c = (*coords)[l];
    if (abs(c) > 1 || (l == diff.src && sgn(c) == 0))
      bad_edge(step, "new curve is not a {-1,0,1} combination using the replaced curve");
  }
}

void check_type1(std::size_t step, const CutSystem& from, const CutSystem& to,
                 const Type1Edge& edge) {
  std::size_t index = 0;
  HomologyClass replacement;
  if (edge.index && edge.replacement) {
    index = *edge.index;
    replacement = *edge.replacement;
  } else {
    const Difference diff = compare(from, to);
    if (diff.unmatched != 1) bad_edge(step, "type-1 edge must change exactly one curve");
    index = diff.src;
    replacement = to[diff.dst];
  }
  CutSystem moved;
  try {
    moved = type1_move(from, index, replacement);
  } catch (const Error& e) {
    bad_edge(step, std::string(to_string(e.kind())) + ": " + e.what());
  }
  if (!same_vertex(moved, to)) bad_edge(step, "type-1 move data does not reach the next vertex");
}

}  // namespace

LengthReport validate_loop(const TrisectionDiagram& d, const LoopSpec& loop) {
  const std::size_t g = d.genus();
  const std::size_t n = loop.vertices.size();
  if (n == 0) bad_segment(Subgraph::Alpha, "loop has no vertices");
  if (loop.edges.size() != n)
    throw LoopError(ErrorKind::BadEdge, "edges", "a closed loop needs one edge per vertex");
  auto next = [n](std::size_t k) { return (k + 1) % n; };
  auto prev = [n](std::size_t k) { return (k + n - 1) % n; };
  auto tag = [&](std::size_t k) { return loop.vertices[k].subgraph; };

  for (const LoopVertex& v : loop.vertices)
    if (v.cut.genus != g || v.cut.size() != g)
      bad_segment(v.subgraph, "vertex does not have genus " + std::to_string(g));

  // Each subgraph meets the loop in one connected run.
  std::map<Subgraph, Run> runs;
  for (Subgraph s : kSubgraphs) {
    std::size_t starts = 0, count = 0;
    Run run;
    for (std::size_t k = 0; k < n; ++k) {
      if (tag(k) != s) continue;
      ++count;
      if (tag(prev(k)) != s) {
        ++starts;
        run.start = k;
      }
    }
    if (count == 0) bad_segment(s, "loop does not meet this subgraph");
    if (starts != 1) bad_segment(s, "intersection with the loop is not connected");
    run.length = count;
    run.end = (run.start + count - 1) % n;
    runs[s] = run;
  }
  auto following = [&](Subgraph s) {
    std::size_t k = next(runs[s].end);
    while (tag(k) == Subgraph::Transition) k = next(k);
    return tag(k);
  };
  auto preceding = [&](Subgraph s) {
    std::size_t k = prev(runs[s].start);
    while (tag(k) == Subgraph::Transition) k = prev(k);
    return tag(k);
  };

  // Junction markers sit at the ends of their runs.
  std::map<Marker, std::size_t> marker_at;
  for (std::size_t k = 0; k < n; ++k) {
    for (Marker m : loop.vertices[k].markers) {
      if (marker_at.count(m)) bad_junction(marker_name(m), "marker appears twice");
      marker_at[m] = k;
    }
  }
  for (Subgraph s : kSubgraphs) {
    const Marker fwd = marker_for(s, following(s));
    const Marker back = marker_for(s, preceding(s));
    for (Marker m : {fwd, back})
      if (!marker_at.count(m)) bad_junction(marker_name(m), "marker missing");
    if (marker_at[fwd] != runs[s].end)
      bad_junction(marker_name(fwd), "marker is not at the end of its segment");
    if (marker_at[back] != runs[s].start)
      bad_junction(marker_name(back), "marker is not at the start of its segment");
  }
  for (const auto& [m, k] : marker_at)
    if (tag(k) != marker_owner(m)) bad_junction(marker_name(m), "marker on the wrong subgraph");

  // Edges, in loop order.
  if (!is_cut_system(loop.vertices[0].cut)) bad_edge(0, "vertex 0 is not a cut system");
  for (std::size_t k = 0; k < n; ++k) {
    const LoopVertex& from = loop.vertices[k];
    const LoopVertex& to = loop.vertices[next(k)];
    if (!is_cut_system(to.cut)) bad_edge(k, "target vertex is not a Lagrangian primitive basis");
    const EdgeMove& e = loop.edges[k];
    if (const auto* t0 = std::get_if<Type0Edge>(&e)) {
      if (from.subgraph != to.subgraph || from.subgraph == Subgraph::Transition)
        bad_edge(k, "type-0 edge outside a subgraph segment");
      check_type0(k, from.cut, to.cut, *t0);
    } else if (const auto* t1 = std::get_if<Type1Edge>(&e)) {
      if (from.subgraph == to.subgraph && from.subgraph != Subgraph::Transition)
        bad_edge(k, "type-1 edge inside a subgraph segment");
      check_type1(k, from.cut, to.cut, *t1);
    } else {
      if (!same_vertex(from.cut, to.cut)) bad_edge(k, "junction edge joins different vertices");
    }
  }

  for (std::size_t k = 0; k < n; ++k) {
    const Subgraph s = tag(k);
    if (s != Subgraph::Transition && !same_span(loop.vertices[k].cut, diagram_system(d, s)))
      bad_segment(s, "vertex spans a different Lagrangian than the diagram's cut system");
  }

  // Good junction pairs and their type-1 transitions.
  for (Pair p : kAllPairs) {
    const auto [s, t] = p == Pair::AlphaBeta   ? std::pair{Subgraph::Alpha, Subgraph::Beta}
                        : p == Pair::BetaGamma ? std::pair{Subgraph::Beta, Subgraph::Gamma}
                                               : std::pair{Subgraph::Gamma, Subgraph::Alpha};
    const std::string name = pair_name(p);
    const CutSystem& first = loop.vertices[marker_at[marker_for(s, t)]].cut;
    const CutSystem& second = loop.vertices[marker_at[marker_for(t, s)]].cut;
    const std::size_t k_pair = d.k(p);
    std::vector<std::string> problems;
    if (const auto& cert = loop.certificates[static_cast<int>(p)]) {
      if (!good_pair_check(first, second, *cert, std::nullopt, k_pair, &problems))
        bad_junction(name, problems.empty() ? "certificate fails" : problems.front());
    } else {
      const auto ann = infer_good_pair(first, second);
      if (!ann) bad_junction(name, "junction vertices are not a good pair");
      if (ann->count(Label::P) != k_pair)
        bad_junction(name, "good pair has " + std::to_string(ann->count(Label::P)) +
                               " parallel curves, expected " + std::to_string(k_pair));
    }

    const bool forward = following(s) == t;
    std::size_t k = forward ? runs[s].end : runs[t].end;
    const std::size_t stop = forward ? runs[t].start : runs[s].start;
    std::size_t type1 = 0;
    while (k != stop) {
      if (std::holds_alternative<Type0Edge>(loop.edges[k]))
        bad_junction(name, "type-0 edge between segments");
      if (std::holds_alternative<Type1Edge>(loop.edges[k])) ++type1;
      k = next(k);
    }
    if (type1 != g - k_pair)
      bad_junction(name, std::to_string(type1) + " type-1 edges, expected " +
                             std::to_string(g - k_pair));
  }

  LengthReport r;
  std::size_t type1_total = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const EdgeMove& e = loop.edges[k];
    if (std::holds_alternative<Type1Edge>(e)) ++type1_total;
    if (!std::holds_alternative<Type0Edge>(e)) continue;
    switch (tag(k)) {
      case Subgraph::Alpha: ++r.l_alpha; break;
      case Subgraph::Beta: ++r.l_beta; break;
      case Subgraph::Gamma: ++r.l_gamma; break;
      case Subgraph::Transition: break;
    }
  }
  r.L = r.l_alpha + r.l_beta + r.l_gamma;
  r.total_l = r.L + type1_total;
  return r;
}

LoopSpec zero_length_loop(const TrisectionDiagram& d) {
  LoopSpec loop;
  const std::array<Subgraph, 3> order{Subgraph::Alpha, Subgraph::Beta, Subgraph::Gamma};
  for (int s = 0; s < 3; ++s) {
    const Pair p = kAllPairs[s];
    auto ann = d.annotation(p);
    if (!ann) ann = infer_good_pair(d.first(p), d.second(p));
    if (!ann || !good_pair_check(d.first(p), d.second(p), *ann))
      fail(ErrorKind::NotGood, std::string(pair_name(p)) + " is not a good pair");
    loop.certificates[s] = ann;

    const Subgraph here = order[s];
    const Subgraph there = order[(s + 1) % 3];
    const Subgraph before = order[(s + 2) % 3];
    loop.vertices.push_back({here, d.first(p), {marker_for(here, before), marker_for(here, there)}});

    CutSystem current = d.first(p);
    std::vector<std::size_t> duals;
    for (std::size_t i = 0; i < d.genus(); ++i)
      if (ann->labels[i] == Label::D) duals.push_back(i);
    if (duals.empty()) loop.edges.emplace_back(JunctionEdge{});
    for (std::size_t t = 0; t < duals.size(); ++t) {
      const std::size_t i = duals[t];
      const HomologyClass& replacement = d.second(p)[ann->matching[i]];
      current = type1_move(current, i, replacement);
      loop.edges.emplace_back(Type1Edge{i, replacement});
      if (t + 1 < duals.size()) loop.vertices.push_back({Subgraph::Transition, current, {}});
    }
  }
  return loop;
}

}  // namespace trisect
