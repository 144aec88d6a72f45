#include <doctest.h>

#include "trisect/walk.hpp"

using namespace trisect;

namespace {

using H = HomologyClass;

CutSystem b_system(std::size_t g) {
  std::vector<H> cs;
  for (std::size_t i = 0; i < g; ++i) cs.push_back(H::b(g, i));
  return CutSystem(g, cs);
}

}  // namespace

TEST_CASE("walk_trace examples") {
  const WalkTrace none = walk_trace(CutSystem::standard(2), b_system(2), {});
  CHECK(none.matrices.size() == 1);
  CHECK(none.matrices[0] == IntMatrix{{1, 0}, {0, 1}});
  CHECK(check_entry_bounds(none));

  const std::vector<Type0Move> one{{1, {1, 1}}};
  const WalkTrace tr = walk_trace(CutSystem::standard(2), b_system(2), one);
  CHECK(tr.matrices[1] == IntMatrix{{1, 0}, {1, 1}});
  CHECK(check_entry_bounds(tr));
  CHECK(check_rho_eq(tr));
  CHECK(check_row_change(tr, one));

  const std::vector<Type0Move> three{{1, {1, 1}}, {0, {1, 1}}, {1, {0, 1}}};
  const WalkTrace r = walk_trace(CutSystem::standard(2), b_system(2), three);
  CHECK(r.rho[3] == std::vector<std::size_t>{2, 3});
  CHECK(r.rho[0] == std::vector<std::size_t>{0, 0});
  CHECK(r.move_indices == std::vector<std::size_t>{1, 0, 1});
  CHECK(check_rho_eq(r));
}

TEST_CASE("walk_trace reorients and rejects bad starts") {
  const CutSystem gamma(2, {-H::b(2, 1), H::a(2, 0)});
  const WalkTrace tr = walk_trace(CutSystem::standard(2), gamma, {});
  CHECK(tr.matrices[0] == IntMatrix{{0, 0}, {1, 0}});
  CHECK(tr.systems[0][1] == -H::a(2, 1));

  const CutSystem twisted(2, {H::b(2, 0) + H::b(2, 1), H::b(2, 1)});
  CHECK_THROWS_AS(walk_trace(CutSystem::standard(2), twisted, {}), Error);
}

TEST_CASE("entry bounds catch oversized rows") {
  WalkTrace tr = walk_trace(CutSystem::standard(2), b_system(2), {{1, {1, 1}}});
  tr.matrices[1](1, 0) = 2;  // rho = 1 allows only |entry| <= 1
  CHECK_FALSE(check_entry_bounds(tr));
  tr = walk_trace(CutSystem::standard(2), b_system(2), {});
  tr.matrices[0](0, 1) = 1;  // two ones in an untouched row
  CHECK_FALSE(check_entry_bounds(tr));
}

TEST_CASE("doubling walk meets the power-of-two bound") {
  // alpha_2 -> alpha_1 + alpha_2, alpha_1 -> alpha_1 + alpha_2, ...: Fibonacci growth
  std::vector<Type0Move> moves;
  for (int h = 0; h < 12; ++h) moves.push_back({static_cast<std::size_t>((h + 1) % 2), {1, 1}});
  const WalkTrace tr = walk_trace(CutSystem::standard(2), b_system(2), moves);
  CHECK(check_entry_bounds(tr));
  const IntMatrix& last = tr.matrices.back();
  Integer biggest = 0;
  for (std::size_t j = 0; j < 2; ++j)
    if (abs(last(0, j)) > biggest) biggest = abs(last(0, j));
  CHECK(biggest == fib_gstep(2, 12));
}

TEST_CASE("harness") {
  const HarnessSummary s = run_entry_bound_harness(5, 8, 500, 17);
  CHECK(s.ok());
  CHECK(s.trials == 500);
  CHECK(s.failing_trials.empty());
  const HarnessSummary again = run_entry_bound_harness(5, 8, 500, 17);
  CHECK(again.passed == s.passed);
}
