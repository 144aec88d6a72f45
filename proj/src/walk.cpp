#include "trisect/walk.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "trisect/diagram.hpp"

namespace trisect {

namespace {

IntMatrix intersections(const CutSystem& alpha, const CutSystem& gamma) {
  IntMatrix m(alpha.size(), gamma.size());
  for (std::size_t i = 0; i < alpha.size(); ++i)
    for (std::size_t j = 0; j < gamma.size(); ++j) m(i, j) = pairing(alpha[i], gamma[j]);
  return m;
}

bool rows_equal(const IntMatrix& x, const IntMatrix& y, std::size_t i) {
  for (std::size_t j = 0; j < x.cols(); ++j)
    if (x(i, j) != y(i, j)) return false;
  return true;
}

}  // namespace

WalkTrace walk_trace(const CutSystem& alpha0, const CutSystem& gamma,
                     const std::vector<Type0Move>& moves) {
  const std::size_t g = alpha0.size();
  if (alpha0.genus != gamma.genus || gamma.size() != g || alpha0.genus != g)
    fail(ErrorKind::InvalidInput, "walk needs two cut systems of the same genus");
  if (!is_cut_system(alpha0) || !is_cut_system(gamma) || !infer_good_pair(alpha0, gamma))
    fail(ErrorKind::NotGood, "starting pair is not good");

  CutSystem start = alpha0;
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j)
      if (sgn(pairing(start[i], gamma[j])) < 0) start.classes[i] = -start.classes[i];

  WalkTrace tr;
  tr.systems.push_back(start);
  tr.matrices.push_back(intersections(start, gamma));
  tr.rho.emplace_back(g, 0);

  const IntMatrix& first = tr.matrices.front();
  std::vector<int> col_ones(g, 0);
  for (std::size_t i = 0; i < g; ++i) {
    int row_ones = 0;
    for (std::size_t j = 0; j < g; ++j) {
      if (first(i, j) == 0) continue;
      if (first(i, j) != 1) fail(ErrorKind::NotGood, "starting intersections are not 0/1");
      ++row_ones;
      ++col_ones[j];
    }
    if (row_ones > 1) fail(ErrorKind::NotGood, "starting row meets two gamma curves");
  }
  if (std::any_of(col_ones.begin(), col_ones.end(), [](int c) { return c > 1; }))
    fail(ErrorKind::NotGood, "starting column meets two alpha curves");

  for (const Type0Move& mv : moves) {
    tr.systems.push_back(type0_move(tr.systems.back(), mv));
    tr.matrices.push_back(intersections(tr.systems.back(), gamma));
    auto rho = tr.rho.back();
    rho[mv.index] = tr.rho.size();
    tr.rho.push_back(std::move(rho));
    tr.move_indices.push_back(mv.index);
  }
  return tr;
}

bool check_entry_bounds(const WalkTrace& tr) {
  if (tr.matrices.empty()) return true;
  const std::size_t g = tr.matrices.front().rows();
  FibGStep fib(std::max<std::size_t>(g, 1));
  for (std::size_t h = 0; h < tr.matrices.size(); ++h) {
    const IntMatrix& m = tr.matrices[h];
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const std::size_t r = tr.rho[h][i];
      if (r == 0) {
        int ones = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
          if (m(i, j) == 1)
            ++ones;
          else if (m(i, j) != 0)
            return false;
        }
        if (ones > 1) return false;
        continue;
      }
      Integer cap;
      mpz_ui_pow_ui(cap.get_mpz_t(), 2, r - 1);
      const Integer& f = fib(static_cast<std::int64_t>(r));
      if (f < cap) cap = f;
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (abs(m(i, j)) > cap) return false;
    }
  }
  return true;
}

bool check_rho_eq(const WalkTrace& tr) {
  for (std::size_t h = 0; h < tr.matrices.size(); ++h) {
    for (std::size_t i = 0; i < tr.rho[h].size(); ++i) {
      const std::size_t r = tr.rho[h][i];
      for (std::size_t hp = r; hp <= h; ++hp)
        if (!rows_equal(tr.matrices[hp], tr.matrices[r], i)) return false;
    }
  }
  return true;
}

bool check_row_change(const WalkTrace& tr, const std::vector<Type0Move>& moves) {
  if (moves.size() + 1 != tr.matrices.size()) return false;
  for (std::size_t h = 1; h < tr.matrices.size(); ++h) {
    const IntMatrix& before = tr.matrices[h - 1];
    const IntMatrix& after = tr.matrices[h];
    const Type0Move& mv = moves[h - 1];
    for (std::size_t i = 0; i < after.rows(); ++i) {
      if (i != mv.index) {
        if (!rows_equal(before, after, i)) return false;
        continue;
      }
      for (std::size_t j = 0; j < after.cols(); ++j) {
        Integer expect = 0;
        for (std::size_t l = 0; l < before.rows(); ++l) expect += mv.epsilons[l] * before(l, j);
        if (after(i, j) != expect) return false;
      }
    }
  }
  return true;
}

HarnessSummary run_entry_bound_harness(std::size_t max_genus, std::size_t max_steps,
                                       std::size_t trials, std::uint64_t seed) {
  if (max_genus < 1) fail(ErrorKind::InvalidInput, "harness needs genus at least 1");
  HarnessSummary sum;
  sum.trials = trials;
  sum.max_genus = max_genus;
  sum.max_steps = max_steps;
  for (std::size_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng(seed + t);
    auto pick = [&rng](long lo, long hi) {
      return std::uniform_int_distribution<long>(lo, hi)(rng);
    };
    const auto g = static_cast<std::size_t>(pick(1, static_cast<long>(max_genus)));
    const auto m = static_cast<std::size_t>(pick(0, static_cast<long>(max_steps)));

    // Good pair: alpha = (a_i), gamma a signed permutation of one a_i or b_i per index.
    std::vector<std::size_t> perm(g);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<HomologyClass> alpha(g), gamma(g);
    for (std::size_t i = 0; i < g; ++i) {
      alpha[i] = HomologyClass::a(g, i);
      HomologyClass c = pick(0, 1) ? HomologyClass::a(g, i) : HomologyClass::b(g, i);
      gamma[perm[i]] = pick(0, 1) ? c : -c;
    }
    // Random symplectic change of basis by transvections x -> x + <x,v> v.
    for (long s = pick(0, 3); s > 0; --s) {
      std::vector<Integer> v(2 * g);
      for (auto& c : v) c = pick(-1, 1);
      const HomologyClass vc(v);
      for (auto* sys : {&alpha, &gamma})
        for (auto& x : *sys) x += pairing(x, vc) * vc;
    }

    std::vector<Type0Move> moves;
    for (std::size_t h = 0; h < m; ++h) {
      Type0Move mv;
      mv.index = static_cast<std::size_t>(pick(0, static_cast<long>(g) - 1));
      mv.epsilons.resize(g);
      for (auto& e : mv.epsilons) e = static_cast<int>(pick(-1, 1));
      mv.epsilons[mv.index] = pick(0, 1) ? 1 : -1;
      moves.push_back(std::move(mv));
    }

    bool ok = false;
    try {
      const WalkTrace tr = walk_trace(CutSystem(g, alpha), CutSystem(g, gamma), moves);
      ok = check_entry_bounds(tr) && check_rho_eq(tr) && check_row_change(tr, moves);
    } catch (const Error&) {
      ok = false;
    }
    if (ok)
      ++sum.passed;
    else
      sum.failing_trials.push_back(seed + t);
  }
  return sum;
}

}  // namespace trisect
