#include "trisect/diagram.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace trisect {

const char* pair_name(Pair p) {
  switch (p) {
    case Pair::AlphaBeta: return "alpha_beta";
    case Pair::BetaGamma: return "beta_gamma";
    case Pair::GammaAlpha: return "gamma_alpha";
  }
  return "?";
}

std::size_t PairAnnotation::count(Label l) const {
  return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), l));
}

const CutSystem& TrisectionDiagram::first(Pair p) const {
  switch (p) {
    case Pair::AlphaBeta: return alpha;
    case Pair::BetaGamma: return beta;
    case Pair::GammaAlpha: return gamma;
  }
  return alpha;
}

const CutSystem& TrisectionDiagram::second(Pair p) const {
  switch (p) {
    case Pair::AlphaBeta: return beta;
    case Pair::BetaGamma: return gamma;
    case Pair::GammaAlpha: return alpha;
  }
  return beta;
}

IntMatrix pairing_matrix(const CutSystem& first, const CutSystem& second) {
  IntMatrix m(first.size(), second.size());
  for (std::size_t i = 0; i < first.size(); ++i)
    for (std::size_t j = 0; j < second.size(); ++j) m(i, j) = pairing(first[i], second[j]);
  return m;
}

bool ValidationReport::ok() const {
  if (!signature_ok) return false;
  for (bool b : cut_systems_ok)
    if (!b) return false;
  for (const PairReport& p : pairs)
    if (!p.ok()) return false;
  return true;
}

namespace {

bool is_permutation_of_range(const std::vector<std::size_t>& v) {
  std::vector<bool> seen(v.size(), false);
  for (std::size_t x : v) {
    if (x >= v.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

void note(std::vector<std::string>* problems, std::string msg) {
  if (problems) problems->push_back(std::move(msg));
}

bool geometry_consistent(const IntMatrix& geom, const IntMatrix& alg,
                         std::vector<std::string>* problems) {
  if (geom.rows() != alg.rows() || geom.cols() != alg.cols()) {
    note(problems, "geometric intersection matrix has the wrong shape");
    return false;
  }
  bool ok = true;
  for (std::size_t i = 0; i < geom.rows(); ++i) {
    for (std::size_t j = 0; j < geom.cols(); ++j) {
      const Integer& n = geom(i, j);
      const Integer a = abs(alg(i, j));
      if (sgn(n) < 0 || n < a || mpz_odd_p(Integer(n - a).get_mpz_t())) {
        note(problems, "geometric count at (" + std::to_string(i + 1) + "," +
                           std::to_string(j + 1) + ") inconsistent with algebraic " +
                           alg(i, j).get_str());
        ok = false;
      }
    }
  }
  return ok;
}

HomologyClass embed(const HomologyClass& x, std::size_t offset, std::size_t genus) {
  std::vector<Integer> coeffs(2 * genus);
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) coeffs[2 * offset + i] = x.coeffs()[i];
  return HomologyClass(std::move(coeffs));
}

CutSystem embed(const CutSystem& cs, std::size_t offset, std::size_t genus) {
  CutSystem out;
  out.genus = genus;
  for (const HomologyClass& c : cs.classes) out.classes.push_back(embed(c, offset, genus));
  return out;
}

IntMatrix block_sum(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

// Geometric counts realizing a good pair: 1 on D partners, 0 elsewhere.
IntMatrix good_geometry(const PairAnnotation& ann) {
  const std::size_t g = ann.matching.size();
  IntMatrix m(g, g);
  for (std::size_t i = 0; i < g; ++i)
    if (ann.labels[i] == Label::D) m(i, ann.matching[i]) = 1;
  return m;
}

TrisectionDiagram make_stock(std::string name, std::size_t g, CutSystem alpha,
                             CutSystem beta, CutSystem gamma,
                             std::array<std::size_t, 3> k) {
  TrisectionDiagram d;
  d.name = std::move(name);
  d.signature = {g, k};
  d.alpha = std::move(alpha);
  d.beta = std::move(beta);
  d.gamma = std::move(gamma);
  for (Pair p : kAllPairs) {
    auto ann = infer_good_pair(d.first(p), d.second(p));
    if (!ann) fail(ErrorKind::NotGood, "stock diagram pair is not good");
    d.geom[p] = good_geometry(*ann);
    d.annotation(p) = std::move(ann);
  }
  return d;
}

}  // namespace

bool good_pair_check(const CutSystem& first, const CutSystem& second,
                     const PairAnnotation& ann, const std::optional<IntMatrix>& geom,
                     std::optional<std::size_t> expected_k,
                     std::vector<std::string>* problems) {
  const std::size_t g = first.size();
  if (second.size() != g || ann.matching.size() != g || ann.labels.size() != g ||
      ann.signs.size() != g) {
    note(problems, "annotation size does not match the genus");
    return false;
  }
  if (!is_permutation_of_range(ann.matching)) {
    note(problems, "matching is not a permutation");
    return false;
  }
  bool ok = true;
  for (std::size_t i = 0; i < g; ++i) {
    const std::size_t j = ann.matching[i];
    const std::string where = std::to_string(i + 1) + "->" + std::to_string(j + 1);
    if (ann.labels[i] == Label::P) {
      const int s = ann.signs[i];
      if ((s != 1 && s != -1) || second[j] != Integer(s) * first[i]) {
        note(problems, "P pair " + where + " classes disagree");
        ok = false;
      }
    } else if (abs(pairing(first[i], second[j])) != 1) {
      note(problems, "D pair " + where + " does not meet algebraically once");
      ok = false;
    }
    for (std::size_t jj = 0; jj < g; ++jj) {
      if (jj != j && sgn(pairing(first[i], second[jj])) != 0) {
        note(problems, "cross pair " + std::to_string(i + 1) + "," + std::to_string(jj + 1) +
                           " intersects algebraically");
        ok = false;
      }
    }
  }
  if (expected_k && ann.count(Label::P) != *expected_k) {
    note(problems, "annotation has " + std::to_string(ann.count(Label::P)) +
                       " P pairs, expected " + std::to_string(*expected_k));
    ok = false;
  }
  if (geom) {
    if (geom->rows() != g || geom->cols() != g) {
      note(problems, "geometric intersection matrix has the wrong shape");
      return false;
    }
    for (std::size_t i = 0; i < g; ++i) {
      for (std::size_t j = 0; j < g; ++j) {
        const bool partner = ann.matching[i] == j;
        const long want = (partner && ann.labels[i] == Label::D) ? 1 : 0;
        if ((*geom)(i, j) != want) {
          note(problems, "geometric count at (" + std::to_string(i + 1) + "," +
                             std::to_string(j + 1) + ") should be " + std::to_string(want));
          ok = false;
        }
      }
    }
  }
  return ok;
}

std::optional<PairAnnotation> infer_good_pair(const CutSystem& first,
                                              const CutSystem& second) {
  const std::size_t g = first.size();
  if (second.size() != g) return std::nullopt;
  const IntMatrix m = pairing_matrix(first, second);
  PairAnnotation ann;
  ann.matching.assign(g, g);
  ann.labels.assign(g, Label::P);
  ann.signs.assign(g, 1);
  std::vector<bool> col_used(g, false);

  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = 0; j < g; ++j) {
      if (sgn(m(i, j)) == 0) continue;
      if (abs(m(i, j)) != 1 || ann.matching[i] != g || col_used[j]) return std::nullopt;
      ann.matching[i] = j;
      ann.labels[i] = Label::D;
      col_used[j] = true;
    }
  }

  // Remaining rows pair with remaining columns by class equality up to sign;
  // augmenting paths settle the (rare) ambiguous cases.
  std::vector<std::size_t> owner(g, g);
  for (std::size_t j = 0; j < g; ++j)
    if (col_used[j]) owner[j] = g + 1;
  std::function<bool(std::size_t, std::vector<bool>&)> augment =
      [&](std::size_t i, std::vector<bool>& seen) {
        for (std::size_t j = 0; j < g; ++j) {
          if (seen[j] || owner[j] == g + 1 || !equal_up_to_sign(first[i], second[j])) continue;
          seen[j] = true;
          if (owner[j] == g || augment(owner[j], seen)) {
            owner[j] = i;
            return true;
          }
        }
        return false;
      };
  for (std::size_t i = 0; i < g; ++i) {
    if (ann.labels[i] == Label::D) continue;
    std::vector<bool> seen(g, false);
    if (!augment(i, seen)) return std::nullopt;
  }
  for (std::size_t j = 0; j < g; ++j) {
    if (owner[j] >= g) continue;
    const std::size_t i = owner[j];
    ann.matching[i] = j;
    ann.signs[i] = second[j] == first[i] ? 1 : -1;
  }
  if (!good_pair_check(first, second, ann)) return std::nullopt;
  return ann;
}

ValidationReport validate(const TrisectionDiagram& d) {
  ValidationReport r;
  const std::size_t g = d.genus();
  r.signature_ok = d.signature.valid();
  if (!r.signature_ok) r.problems.push_back("signature has some k exceeding g");

  const std::array<const CutSystem*, 3> systems{&d.alpha, &d.beta, &d.gamma};
  const std::array<const char*, 3> names{"alpha", "beta", "gamma"};
  bool shapes_ok = true;
  for (int s = 0; s < 3; ++s) {
    const CutSystem& cs = *systems[s];
    if (cs.genus != g || cs.size() != g) {
      r.cut_systems_ok[s] = false;
      shapes_ok = false;
      r.problems.push_back(std::string(names[s]) + " does not have genus " + std::to_string(g));
      continue;
    }
    r.cut_systems_ok[s] = is_cut_system(cs);
    if (!r.cut_systems_ok[s])
      r.problems.push_back(std::string(names[s]) + " is not a Lagrangian primitive basis");
  }

  for (Pair p : kAllPairs) {
    PairReport& pr = r.pairs[static_cast<int>(p)];
    pr.pair = p;
    pr.expected_k = d.k(p);
    if (!shapes_ok) {
      pr.problems.push_back("skipped: cut systems have the wrong shape");
      continue;
    }
    const IntMatrix m = pairing_matrix(d.first(p), d.second(p));
    pr.cokernel = cokernel(m);
    pr.heegaard_ok = pr.cokernel.free_rank == pr.expected_k && pr.cokernel.torsion.empty();
    if (!pr.heegaard_ok)
      pr.problems.push_back("pairing cokernel is not free of rank " + std::to_string(pr.expected_k));
    if (const auto& ann = d.annotation(p))
      pr.annotation_ok = good_pair_check(d.first(p), d.second(p), *ann, d.geom[p],
                                         pr.expected_k, &pr.problems);
    if (const auto& geom = d.geom[p]) pr.geometry_ok = geometry_consistent(*geom, m, &pr.problems);
  }
  return r;
}

TrisectionDiagram connected_sum(const TrisectionDiagram& d1, const TrisectionDiagram& d2) {
  const std::size_t g1 = d1.genus(), g2 = d2.genus(), g = g1 + g2;
  TrisectionDiagram d;
  d.name = d1.name + "#" + d2.name;
  d.signature.g = g;
  for (int i = 0; i < 3; ++i) d.signature.k[i] = d1.signature.k[i] + d2.signature.k[i];

  auto join = [&](const CutSystem& x, const CutSystem& y) {
    CutSystem out = embed(x, 0, g);
    for (const HomologyClass& c : embed(y, g1, g).classes) out.classes.push_back(c);
    return out;
  };
  d.alpha = join(d1.alpha, d2.alpha);
  d.beta = join(d1.beta, d2.beta);
  d.gamma = join(d1.gamma, d2.gamma);

  for (Pair p : kAllPairs) {
    const auto& a1 = d1.annotation(p);
    const auto& a2 = d2.annotation(p);
    if (a1 && a2) {
      PairAnnotation ann = *a1;
      for (std::size_t i = 0; i < g2; ++i) {
        ann.matching.push_back(a2->matching[i] + g1);
        ann.labels.push_back(a2->labels[i]);
        ann.signs.push_back(a2->signs[i]);
      }
      d.annotation(p) = std::move(ann);
    }
    if (d1.geom[p] && d2.geom[p]) d.geom[p] = block_sum(*d1.geom[p], *d2.geom[p]);
  }
  return d;
}

TrisectionDiagram stabilize(const TrisectionDiagram& d, int which) {
  if (which < 1 || which > 3) fail(ErrorKind::InvalidInput, "stabilization pair must be 1, 2 or 3");
  const std::size_t g = d.genus() + 1;
  TrisectionDiagram out;
  out.name = d.name.empty() ? "stabilized" : d.name + "+stab" + std::to_string(which);
  out.signature = d.signature;
  out.signature.g = g;
  out.signature.k[which - 1] += 1;
  out.alpha = embed(d.alpha, 0, g);
  out.beta = embed(d.beta, 0, g);
  out.gamma = embed(d.gamma, 0, g);

  // The two systems of the stabilized pair gain a parallel copy of a_g; the
  // third gains b_g, dual to both.
  const HomologyClass a = HomologyClass::a(g, g - 1);
  const HomologyClass b = HomologyClass::b(g, g - 1);
  std::array<CutSystem*, 3> systems{&out.alpha, &out.beta, &out.gamma};
  const int dual = (which + 1) % 3;  // index of the system not in the pair
  for (int s = 0; s < 3; ++s) systems[s]->classes.push_back(s == dual ? b : a);

  for (Pair p : kAllPairs) {
    const bool parallel = static_cast<int>(p) == which - 1;
    if (const auto& ann = d.annotation(p)) {
      PairAnnotation ext = *ann;
      ext.matching.push_back(g - 1);
      ext.labels.push_back(parallel ? Label::P : Label::D);
      ext.signs.push_back(1);
      out.annotation(p) = std::move(ext);
    }
    if (const auto& geom = d.geom[p]) {
      IntMatrix one(1, 1);
      one(0, 0) = parallel ? 0 : 1;
      out.geom[p] = block_sum(*geom, one);
    }
  }
  return out;
}

TrisectionDiagram standard_diagram(const std::string& name) {
  using H = HomologyClass;
  if (name == "S4") return make_stock("S4", 0, {}, {}, {}, {0, 0, 0});
  if (name == "S1xS3") {
    const CutSystem a{1, {H::a(1, 0)}};
    return make_stock("S1xS3", 1, a, a, a, {1, 1, 1});
  }
  if (name == "CP2" || name == "CP2bar") {
    const H a = H::a(1, 0), b = H::b(1, 0);
    const H c = name == "CP2" ? a + b : a - b;
    return make_stock(name, 1, {1, {a}}, {1, {b}}, {1, {c}}, {0, 0, 0});
  }
  if (name == "S2xS2") {
    const std::size_t g = 2;
    const CutSystem alpha{g, {H::a(g, 0), H::a(g, 1)}};
    const CutSystem beta{g, {H::b(g, 0), H::b(g, 1)}};
    const CutSystem gamma{g, {H::a(g, 0) + H::b(g, 1), H::a(g, 1) + H::b(g, 0)}};
    return make_stock("S2xS2", g, alpha, beta, gamma, {0, 0, 0});
  }
  fail(ErrorKind::InvalidInput, "unknown standard diagram '" + name + "'");
}

TrisectionDiagram spun_lens(const Integer& p, const Integer& q) {
  if (p < 2) fail(ErrorKind::InvalidInput, "spun lens space needs p >= 2");
  if (gcd(p, q) != 1) fail(ErrorKind::InvalidInput, "p and q must be coprime");
  using H = HomologyClass;
  const std::size_t g = 3;
  const H a1 = H::a(g, 0), b1 = H::b(g, 0), a2 = H::a(g, 1), b2 = H::b(g, 1),
          a3 = H::a(g, 2), b3 = H::b(g, 2);

  TrisectionDiagram d;
  d.name = "S(L(" + p.get_str() + "," + q.get_str() + "))";
  d.signature = {g, {1, 1, 1}};
  d.alpha = CutSystem{g, {a1, a2, a3}};
  d.beta = CutSystem{g, {a1, b2, b3}};
  // gamma_1 carries the lens-space curve q a_1 + p b_1 on the first handle.
  d.gamma = CutSystem{g, {q * a1 + p * b1 + b2 + a3, a2 + b3, a1 - p * a2}};
  d.annotation(Pair::AlphaBeta) = PairAnnotation{{0, 1, 2}, {Label::P, Label::D, Label::D}, {1, 1, 1}};
  return d;
}

}  // namespace trisect
