#include <doctest.h>

#include <numeric>

#include "trisect/diagram.hpp"
#include "trisect/kirby.hpp"

using namespace trisect;

namespace {

using H = HomologyClass;

TrisectionDiagram genus1(const char* name, H alpha, H beta, H gamma, std::array<std::size_t, 3> k) {
  TrisectionDiagram d;
  d.name = name;
  d.signature = {1, k};
  d.alpha = CutSystem(1, {alpha});
  d.beta = CutSystem(1, {beta});
  d.gamma = CutSystem(1, {gamma});
  return d;
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidInput;
}

// Independent Heegaard check: for each pair the pairing matrix has |det of
// a nonsingular maximal minor| = 1 and rank g - k.
void check_pairs_unimodular(const TrisectionDiagram& d) {
  for (Pair p : kAllPairs) {
    const IntMatrix m = pairing_matrix(d.first(p), d.second(p));
    const std::size_t rank = d.genus() - d.k(p);
    CAPTURE(pair_name(p));
    CHECK(snf(m).rank == rank);
    if (rank > 0) CHECK(minors_gcd(m, rank) == 1);
  }
}

}  // namespace

TEST_CASE("validate on genus-1 models") {
  const H a = H::a(1, 0), b = H::b(1, 0);
  CHECK(validate(genus1("S1xS3", a, a, a, {1, 1, 1})).ok());
  CHECK(validate(genus1("CP2", a, b, a + b, {0, 0, 0})).ok());
  const ValidationReport bad = validate(genus1("bad", a, b, a + b, {1, 0, 0}));
  CHECK_FALSE(bad.ok());
  CHECK_FALSE(bad.pairs[0].heegaard_ok);
  CHECK(bad.pairs[1].heegaard_ok);
  CHECK_FALSE(validate(genus1("sig", a, a, a, {2, 0, 0})).signature_ok);
  CHECK_FALSE(validate(genus1("not-cut", a + a, a, a, {1, 1, 1})).ok());
}

TEST_CASE("good_pair_check") {
  const H a = H::a(1, 0), b = H::b(1, 0);
  CHECK(good_pair_check(CutSystem(1, {a}), CutSystem(1, {a}), {{0}, {Label::P}, {1}}));
  CHECK_FALSE(good_pair_check(CutSystem(1, {a}), CutSystem(1, {-a}), {{0}, {Label::P}, {1}}));
  CHECK(good_pair_check(CutSystem(1, {a}), CutSystem(1, {-a}), {{0}, {Label::P}, {-1}}));
  CHECK(good_pair_check(CutSystem(1, {a}), CutSystem(1, {b}), {{0}, {Label::D}, {1}}));
  const CutSystem x(2, {H::a(2, 0), H::a(2, 1)}), y(2, {H::a(2, 0), H::b(2, 0)});
  CHECK_FALSE(good_pair_check(x, y, {{0, 1}, {Label::P, Label::D}, {1, 1}}));
  // k mismatch and geometry
  CHECK_FALSE(good_pair_check(CutSystem(1, {a}), CutSystem(1, {b}), {{0}, {Label::D}, {1}},
                              std::nullopt, std::size_t{1}));
  CHECK(good_pair_check(CutSystem(1, {a}), CutSystem(1, {b}), {{0}, {Label::D}, {1}},
                        IntMatrix{{1}}));
  CHECK_FALSE(good_pair_check(CutSystem(1, {a}), CutSystem(1, {b}), {{0}, {Label::D}, {1}},
                              IntMatrix{{3}}));
  const auto inferred = infer_good_pair(CutSystem(2, {H::a(2, 0), H::a(2, 1)}),
                                        CutSystem(2, {H::b(2, 1), -H::a(2, 0)}));
  REQUIRE(inferred);
  CHECK(inferred->matching == std::vector<std::size_t>{1, 0});
  CHECK(inferred->labels == std::vector<Label>{Label::P, Label::D});
  CHECK(inferred->signs[0] == -1);
}

TEST_CASE("standard diagrams") {
  for (const char* name : {"S4", "S1xS3", "CP2", "CP2bar", "S2xS2"}) {
    CAPTURE(name);
    const TrisectionDiagram d = standard_diagram(name);
    CHECK(validate(d).ok());
    check_pairs_unimodular(d);
  }
  CHECK(standard_diagram("S4").signature == TrisectionSignature{0, {0, 0, 0}});
  CHECK(standard_diagram("S1xS3").signature == TrisectionSignature{1, {1, 1, 1}});
  CHECK(standard_diagram("CP2").signature == TrisectionSignature{1, {0, 0, 0}});
  CHECK(standard_diagram("S2xS2").signature == TrisectionSignature{2, {0, 0, 0}});
  const TrisectionDiagram cp2 = standard_diagram("CP2");
  CHECK(cp2.gamma[0] == H::a(1, 0) + H::b(1, 0));
  CHECK(standard_diagram("CP2bar").gamma[0] == H::a(1, 0) - H::b(1, 0));
  const TrisectionDiagram s = standard_diagram("S1xS3");
  CHECK(s.alpha == s.beta);
  CHECK(s.beta == s.gamma);
  CHECK(abs(determinant(pairing_matrix(standard_diagram("S2xS2").alpha,
                                       standard_diagram("S2xS2").gamma))) == 1);
  CHECK(kind_of([] { standard_diagram("K3"); }) == ErrorKind::InvalidInput);
}

TEST_CASE("connected_sum") {
  const TrisectionDiagram s = standard_diagram("S1xS3");
  const TrisectionDiagram ss = connected_sum(s, s);
  CHECK(ss.signature == TrisectionSignature{2, {2, 2, 2}});
  CHECK(validate(ss).ok());
  const TrisectionDiagram cp2 = standard_diagram("CP2");
  const TrisectionDiagram with_s4 = connected_sum(standard_diagram("S4"), cp2);
  CHECK(with_s4.alpha == cp2.alpha);
  CHECK(with_s4.gamma == cp2.gamma);
  CHECK(with_s4.signature == cp2.signature);
  const TrisectionDiagram cc = connected_sum(cp2, cp2);
  CHECK(cc.signature == TrisectionSignature{2, {0, 0, 0}});
  CHECK(validate(cc).ok());
  for (Pair p : kAllPairs) {
    const IntMatrix m = pairing_matrix(cc.first(p), cc.second(p));
    CHECK(m(0, 1) == 0);
    CHECK(m(1, 0) == 0);
    CHECK(abs(m(0, 0)) == 1);
    CHECK(abs(m(1, 1)) == 1);
  }
  // associativity up to reindexing: same classes, same order
  const TrisectionDiagram x = standard_diagram("S2xS2");
  CHECK(connected_sum(connected_sum(cp2, s), x).gamma == connected_sum(cp2, connected_sum(s, x)).gamma);
}

TEST_CASE("stabilize") {
  const TrisectionDiagram s1 = stabilize(standard_diagram("S4"), 1);
  CHECK(s1.signature == TrisectionSignature{1, {1, 0, 0}});
  CHECK(validate(s1).ok());
  CHECK(s1.alpha == s1.beta);
  const TrisectionDiagram s2 = stabilize(standard_diagram("CP2"), 2);
  CHECK(s2.signature == TrisectionSignature{2, {0, 1, 0}});
  CHECK(validate(s2).ok());
  for (int which = 1; which <= 3; ++which) {
    const TrisectionDiagram d = stabilize(spun_lens(3, 1), which);
    CHECK(validate(d).ok());
    CHECK(homology_order(build_skeleton(d)) == Integer(3));
  }
  CHECK(kind_of([] { stabilize(standard_diagram("S4"), 4); }) == ErrorKind::InvalidInput);
}

TEST_CASE("spun lens spaces") {
  for (long p = 2; p <= 7; ++p) {
    for (long q : {1L, 2L, 3L}) {
      if (std::gcd(p, q) != 1) continue;
      CAPTURE(p);
      CAPTURE(q);
      const TrisectionDiagram d = spun_lens(p, q);
      CHECK(validate(d).ok());
      CHECK(d.signature == TrisectionSignature{3, {1, 1, 1}});
      const Cokernel h = surface_homology(d);
      CHECK(h.free_rank == 0);
      CHECK(h.torsion == std::vector<Integer>{p});
    }
  }
  CHECK(kind_of([] { spun_lens(4, 2); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { spun_lens(1, 1); }) == ErrorKind::InvalidInput);
}
