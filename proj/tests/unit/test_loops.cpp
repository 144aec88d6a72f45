#include <doctest.h>

#include "trisect/loops.hpp"

using namespace trisect;

namespace {

using H = HomologyClass;
using M = Marker;

LoopVertex vertex(Subgraph s, std::size_t g, std::vector<H> cut, std::vector<Marker> markers = {}) {
  return {s, CutSystem(g, std::move(cut)), std::move(markers)};
}

std::pair<ErrorKind, std::string> loop_error(const TrisectionDiagram& d, const LoopSpec& loop) {
  try {
    validate_loop(d, loop);
  } catch (const LoopError& e) {
    return {e.kind(), e.where()};
  }
  FAIL("loop accepted");
  return {};
}

// CP2: alpha = (a), beta = (b), gamma = (a + b), one type-1 edge per junction.
LoopSpec cp2_loop() {
  const H a = H::a(1, 0), b = H::b(1, 0);
  LoopSpec loop;
  loop.vertices = {vertex(Subgraph::Alpha, 1, {a}, {M::AlphaBeta, M::AlphaGamma}),
                   vertex(Subgraph::Beta, 1, {b}, {M::BetaAlpha, M::BetaGamma}),
                   vertex(Subgraph::Gamma, 1, {a + b}, {M::GammaBeta, M::GammaAlpha})};
  loop.edges = {Type1Edge{}, Type1Edge{}, Type1Edge{}};
  return loop;
}

TrisectionDiagram double_s1s3() {
  const TrisectionDiagram s = standard_diagram("S1xS3");
  return connected_sum(s, s);
}

}  // namespace

TEST_CASE("zero-length loops on the stock") {
  const LengthReport cp2 = validate_loop(standard_diagram("CP2"), cp2_loop());
  CHECK(cp2.L == 0);
  CHECK(cp2.total_l == 3);

  const TrisectionDiagram s = standard_diagram("S1xS3");
  const H a = H::a(1, 0);
  LoopSpec trivial;
  trivial.vertices = {vertex(Subgraph::Alpha, 1, {a}, {M::AlphaBeta, M::AlphaGamma}),
                      vertex(Subgraph::Beta, 1, {a}, {M::BetaAlpha, M::BetaGamma}),
                      vertex(Subgraph::Gamma, 1, {a}, {M::GammaBeta, M::GammaAlpha})};
  trivial.edges = {JunctionEdge{}, JunctionEdge{}, JunctionEdge{}};
  const LengthReport r = validate_loop(s, trivial);
  CHECK(r.L == 0);
  CHECK(r.total_l == 0);

  std::vector<TrisectionDiagram> stock;
  for (const char* n : {"S4", "S1xS3", "CP2", "CP2bar", "S2xS2"}) stock.push_back(standard_diagram(n));
  const std::size_t base = stock.size();
  for (std::size_t i = 0; i < base; ++i)
    for (std::size_t j = 0; j < base; ++j) stock.push_back(connected_sum(stock[i], stock[j]));
  for (const TrisectionDiagram& d : stock) {
    CAPTURE(d.name);
    const LengthReport z = validate_loop(d, zero_length_loop(d));
    const std::size_t g = d.genus();
    CHECK(z.L == 0);
    CHECK(z.total_l == 3 * g - d.signature.k[0] - d.signature.k[1] - d.signature.k[2]);
  }
}

TEST_CASE("loops with type-0 edges") {
  const std::size_t g = 2;
  const H a1 = H::a(g, 0), a2 = H::a(g, 1);
  LoopSpec loop;
  loop.vertices = {vertex(Subgraph::Alpha, g, {a1, a2}, {M::AlphaGamma}),
                   vertex(Subgraph::Alpha, g, {a1, a1 + a2}),
                   vertex(Subgraph::Alpha, g, {a1, a2}, {M::AlphaBeta}),
                   vertex(Subgraph::Beta, g, {a2, a1}, {M::BetaAlpha, M::BetaGamma}),
                   vertex(Subgraph::Gamma, g, {a1, a2}, {M::GammaBeta, M::GammaAlpha})};
  loop.edges = {Type0Edge{Type0Move{1, {1, 1}}}, Type0Edge{}, JunctionEdge{}, JunctionEdge{},
                JunctionEdge{}};
  const LengthReport r = validate_loop(double_s1s3(), loop);
  CHECK(r.l_alpha == 2);
  CHECK(r.l_beta == 0);
  CHECK(r.L == 2);
  CHECK(r.total_l == 2);

  // explicit move data that does not land on the next vertex
  loop.edges[0] = Type0Edge{Type0Move{1, {-1, 1}}};
  CHECK(loop_error(double_s1s3(), loop) == std::pair{ErrorKind::BadEdge, std::string("0")});
}

TEST_CASE("bad edges") {
  const std::size_t g = 2;
  const H a1 = H::a(g, 0), a2 = H::a(g, 1), b1 = H::b(g, 0);
  LoopSpec loop;
  loop.vertices = {vertex(Subgraph::Alpha, g, {a1, a2}, {M::AlphaGamma}),
                   vertex(Subgraph::Alpha, g, {a1, a2 + b1}, {M::AlphaBeta}),
                   vertex(Subgraph::Beta, g, {a1, a2}, {M::BetaAlpha, M::BetaGamma}),
                   vertex(Subgraph::Gamma, g, {a1, a2}, {M::GammaBeta, M::GammaAlpha})};
  loop.edges = {Type0Edge{}, JunctionEdge{}, JunctionEdge{}, JunctionEdge{}};
  CHECK(loop_error(double_s1s3(), loop) == std::pair{ErrorKind::BadEdge, std::string("0")});

  // type-1 edge inside a segment
  LoopSpec inside = cp2_loop();
  const H a = H::a(1, 0), b = H::b(1, 0);
  inside.vertices.insert(inside.vertices.begin() + 1, vertex(Subgraph::Alpha, 1, {b}));
  inside.vertices[0].markers = {M::AlphaGamma};
  inside.vertices[1].markers = {M::AlphaBeta};
  inside.edges.insert(inside.edges.begin(), Type1Edge{});
  CHECK(loop_error(standard_diagram("CP2"), inside).first == ErrorKind::BadEdge);

  // type-1 edge with wrong explicit class
  LoopSpec wrong = cp2_loop();
  wrong.edges[0] = Type1Edge{0, a + b};
  CHECK(loop_error(standard_diagram("CP2"), wrong) == std::pair{ErrorKind::BadEdge, std::string("0")});
}

TEST_CASE("bad segments") {
  const H a = H::a(1, 0), b = H::b(1, 0);
  LoopSpec split = cp2_loop();
  split.vertices.insert(split.vertices.begin() + 2, vertex(Subgraph::Alpha, 1, {a}));
  split.edges.push_back(Type1Edge{});
  CHECK(loop_error(standard_diagram("CP2"), split) ==
        std::pair{ErrorKind::BadSegment, std::string("alpha")});

  // edges are fine but the alpha vertex is not in Gamma_alpha
  LoopSpec off = cp2_loop();
  off.vertices[0].cut = CutSystem(1, {b});
  off.edges[0] = JunctionEdge{};
  CHECK(loop_error(standard_diagram("CP2"), off) ==
        std::pair{ErrorKind::BadSegment, std::string("alpha")});
}

TEST_CASE("bad junctions") {
  const H a = H::a(1, 0), b = H::b(1, 0);
  LoopSpec extra = cp2_loop();
  extra.vertices.insert(extra.vertices.begin() + 1,
                        {vertex(Subgraph::Transition, 1, {b}), vertex(Subgraph::Transition, 1, {a})});
  extra.edges.insert(extra.edges.begin(), {Type1Edge{}, Type1Edge{}});
  CHECK(loop_error(standard_diagram("CP2"), extra) ==
        std::pair{ErrorKind::BadJunction, std::string("alpha_beta")});

  LoopSpec cert = cp2_loop();
  cert.certificates[0] = PairAnnotation{{0}, {Label::P}, {1}};
  CHECK(loop_error(standard_diagram("CP2"), cert) ==
        std::pair{ErrorKind::BadJunction, std::string("alpha_beta")});

  LoopSpec marker = cp2_loop();
  marker.vertices[1].markers = {M::BetaGamma};
  CHECK(loop_error(standard_diagram("CP2"), marker) ==
        std::pair{ErrorKind::BadJunction, std::string("beta_alpha")});

  LoopSpec twice = cp2_loop();
  twice.vertices[2].markers.push_back(M::AlphaBeta);
  CHECK(loop_error(standard_diagram("CP2"), twice).first == ErrorKind::BadJunction);
}

TEST_CASE("zero_length_loop needs good pairs") {
  TrisectionDiagram d = standard_diagram("CP2");
  d.gamma = CutSystem(1, {H::a(1, 0) + H::a(1, 0) + H::b(1, 0)});
  CHECK_THROWS_AS(zero_length_loop(d), Error);
}
