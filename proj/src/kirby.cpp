#include "trisect/kirby.hpp"

#include <algorithm>
#include <string>

namespace trisect {

KirbySkeleton build_skeleton(const TrisectionDiagram& d) {
  const auto& ann = d.annotation(Pair::AlphaBeta);
  if (!ann) fail(ErrorKind::MissingAnnotation, "skeleton needs an (alpha, beta) annotation");
  std::vector<std::string> problems;
  if (!good_pair_check(d.alpha, d.beta, *ann, d.geom[Pair::AlphaBeta], d.k(Pair::AlphaBeta),
                       &problems)) {
    fail(ErrorKind::MissingAnnotation,
         "(alpha, beta) annotation does not hold: " + (problems.empty() ? "" : problems.front()));
  }
  KirbySkeleton sk;
  sk.framed = d.genus();
  for (std::size_t i = 0; i < d.genus(); ++i)
    if (ann->labels[i] == Label::P) sk.dotted.push_back(i);
  sk.linking = IntMatrix(sk.dotted.size(), sk.framed);
  for (std::size_t r = 0; r < sk.dotted.size(); ++r)
    for (std::size_t j = 0; j < sk.framed; ++j)
      sk.linking(r, j) = pairing(d.alpha[sk.dotted[r]], d.gamma[j]);
  return sk;
}

Cokernel skeleton_homology(const KirbySkeleton& sk) { return cokernel(sk.linking); }

std::optional<Integer> homology_order(const KirbySkeleton& sk) {
  const Cokernel c = skeleton_homology(sk);
  if (c.free_rank > 0) return std::nullopt;
  Integer order = 1;
  for (const Integer& t : c.torsion) order *= t;
  return order;
}

Cokernel surface_homology(const TrisectionDiagram& d) {
  const std::size_t g = d.genus();
  IntMatrix m(2 * g, 3 * g);
  std::size_t col = 0;
  for (const CutSystem* cs : {&d.alpha, &d.beta, &d.gamma}) {
    if (cs->size() != g) fail(ErrorKind::InvalidInput, "cut system has the wrong size");
    for (const HomologyClass& c : cs->classes) {
      for (std::size_t r = 0; r < 2 * g; ++r) m(r, col) = c.coeffs()[r];
      ++col;
    }
  }
  return cokernel(m);
}

std::vector<CancelingPair> find_canceling_pairs(const TrisectionDiagram& d,
                                                bool check_independence) {
  const KirbySkeleton sk = build_skeleton(d);
  const auto& geom = d.geom[Pair::GammaAlpha];
  if (check_independence && !geom)
    fail(ErrorKind::MissingGeometry, "independence needs (gamma, alpha) intersection counts");
  std::vector<CancelingPair> out;
  for (std::size_t r = 0; r < sk.dotted.size(); ++r) {
    const std::size_t i = sk.dotted[r];
    for (std::size_t j = 0; j < sk.framed; ++j) {
      if (abs(sk.linking(r, j)) != 1) continue;
      CancelingPair cp{i, j, false};
      if (check_independence) {
        // alpha_i against gamma is column i of the (gamma, alpha) counts.
        bool alone = true;
        for (std::size_t jj = 0; jj < sk.framed; ++jj) {
          const long want = jj == j ? 1 : 0;
          if ((*geom)(jj, i) != want) alone = false;
        }
        cp.independent = alone;
      }
      out.push_back(cp);
    }
  }
  return out;
}

std::string to_string(Pi1Kind kind) {
  switch (kind) {
    case Pi1Kind::Trivial: return "Trivial";
    case Pi1Kind::InfiniteCyclic: return "InfiniteCyclic";
    case Pi1Kind::FiniteCyclic: return "FiniteCyclic";
    case Pi1Kind::Unknown: return "Unknown";
  }
  return "Unknown";
}

Pi1Report pi1_from_epsilons(const std::vector<Integer>& exponents,
                            const std::vector<std::size_t>& canceled) {
  Integer g = 0;
  std::string relators;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (std::find(canceled.begin(), canceled.end(), i) != canceled.end()) continue;
    g = gcd(g, exponents[i]);
    if (sgn(exponents[i]) == 0) continue;
    if (!relators.empty()) relators += ", ";
    relators += exponents[i] == 1 ? std::string("x") : "x^" + exponents[i].get_str();
  }
  Pi1Report r;
  r.presentation = "<x | " + relators + ">";
  if (g == 1) {
    r.kind = Pi1Kind::Trivial;
    r.order = 1;
  } else if (g == 0) {
    r.kind = Pi1Kind::InfiniteCyclic;
    r.order = 0;
  } else {
    r.kind = Pi1Kind::FiniteCyclic;
    r.order = g;
  }
  return r;
}

Pi1Report pi1_from_skeleton(const KirbySkeleton& sk) {
  if (sk.dotted.empty()) return Pi1Report{Pi1Kind::Trivial, 1, "<|>"};
  if (sk.dotted.size() > 1) return Pi1Report{Pi1Kind::Unknown, 0, ""};
  return pi1_from_epsilons(sk.linking.row(0), {});
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::SummandS1xS3: return "SummandS1xS3";
    case Verdict::GeomSimplyConnected: return "GeomSimplyConnected";
    case Verdict::NoConclusion: return "NoConclusion";
  }
  return "NoConclusion";
}

namespace {

bool is_pd(Rel r) { return r == Rel::P || r == Rel::D; }

using Word = std::vector<Rel>;

bool word_is(const Word& w, std::initializer_list<Rel> pattern) {
  return std::equal(w.begin(), w.end(), pattern.begin(), pattern.end());
}

void check_chain(const ChainData& chain) {
  if (chain.l_alpha != 0 && chain.l_alpha != 1)
    fail(ErrorKind::InvalidInput, "only l_alpha = 0 or 1 is classified");
  if (chain.words.empty()) fail(ErrorKind::InvalidInput, "no relation words");
  std::size_t empties = 0;
  for (const Word& w : chain.words) {
    if (chain.l_alpha == 0) {
      if (w.size() != 2 || !is_pd(w[0]) || !is_pd(w[1]))
        fail(ErrorKind::InvalidInput, "l_alpha = 0 words are two letters from {P, D}");
    } else {
      if (w.size() != 3 || !is_pd(w[0]) || !is_pd(w[2]) || w[1] == Rel::D)
        fail(ErrorKind::InvalidInput, "l_alpha = 1 words are {P,D} x {P,0} x {P,D}");
      if (w[1] == Rel::Empty) ++empties;
    }
  }
  if (chain.l_alpha == 1 && empties != 1)
    fail(ErrorKind::InvalidInput, "exactly one index must carry the type-0 edge");
  if (chain.linking) {
    if (chain.linking->size() != chain.words.size())
      fail(ErrorKind::InvalidInput, "linking vector length differs from word count");
    for (std::size_t i = 0; i < chain.words.size(); ++i) {
      const Integer& e = (*chain.linking)[i];
      if (abs(e) > 1) fail(ErrorKind::InvalidInput, "linking numbers must lie in {-1, 0, 1}");
      if (chain.words[i].back() == Rel::P && sgn(e) != 0)
        fail(ErrorKind::InvalidInput,
             "index " + std::to_string(i + 1) + " is parallel to gamma but links it");
    }
  }
}

LowAlphaResult simply_connected(std::string rule,
                                std::vector<std::pair<std::size_t, std::size_t>> canceled) {
  LowAlphaResult r;
  r.certificate.verdict = Verdict::GeomSimplyConnected;
  r.certificate.rule = std::move(rule);
  for (const auto& [i, j] : canceled) r.certificate.indices.push_back(i);
  r.certificate.canceled = std::move(canceled);
  r.pi1 = Pi1Report{Pi1Kind::Trivial, 1, "<|>"};
  return r;
}

LowAlphaResult summand(std::string rule, std::vector<std::size_t> indices) {
  LowAlphaResult r;
  r.certificate.verdict = Verdict::SummandS1xS3;
  r.certificate.rule = std::move(rule);
  r.certificate.indices = std::move(indices);
  return r;
}

LowAlphaResult classify_zero(const ChainData& chain) {
  const auto& words = chain.words;
  std::vector<std::size_t> parallel;
  std::vector<std::pair<std::size_t, std::size_t>> canceled;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (word_is(words[i], {Rel::P, Rel::P})) parallel.push_back(i);
    if (word_is(words[i], {Rel::P, Rel::D})) canceled.emplace_back(i, i);
  }
  if (!parallel.empty()) return summand("splittable-dotted-circle", parallel);
  return simply_connected(canceled.empty() ? "no-dotted-circles" : "independent-cancellation",
                          canceled);
}

LowAlphaResult classify_one(const ChainData& chain) {
  const auto& words = chain.words;
  // The index carrying the type-0 edge plays the role of the last curve.
  std::size_t last = 0;
  while (words[last][1] != Rel::Empty) ++last;

  std::vector<std::size_t> parallel;
  std::vector<std::pair<std::size_t, std::size_t>> canceled;
  bool only_split_types = true;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i == last) continue;
    const Word& w = words[i];
    if (word_is(w, {Rel::P, Rel::P, Rel::P})) parallel.push_back(i);
    if (word_is(w, {Rel::P, Rel::P, Rel::D})) canceled.emplace_back(i, i);
    if (!word_is(w, {Rel::P, Rel::P, Rel::D}) && !word_is(w, {Rel::D, Rel::P, Rel::P}))
      only_split_types = false;
  }
  if (!parallel.empty()) return summand("splittable-dotted-circle", parallel);

  const Word& w = words[last];
  if (word_is(w, {Rel::D, Rel::Empty, Rel::P}))
    return simply_connected("dual-then-parallel", canceled);
  if (word_is(w, {Rel::P, Rel::Empty, Rel::D})) {
    canceled.emplace_back(last, last);
    return simply_connected("parallel-then-dual", canceled);
  }
  if (word_is(w, {Rel::D, Rel::Empty, Rel::D}))
    return simply_connected("dual-then-dual", canceled);

  // Remaining case: the last word is P, 0, P.
  if (only_split_types) return summand("unlinked-last-dotted-circle", {last});

  LowAlphaResult r;
  r.certificate.verdict = Verdict::NoConclusion;
  r.certificate.rule = "cyclic-pi1";
  r.certificate.indices = {last};
  r.certificate.canceled = canceled;
  if (chain.linking) {
    std::vector<std::size_t> dropped;
    for (const auto& [i, j] : canceled) dropped.push_back(i);
    r.pi1 = pi1_from_epsilons(*chain.linking, dropped);
  } else {
    r.pi1 = Pi1Report{Pi1Kind::Unknown, 0, ""};
  }
  return r;
}

}  // namespace

LowAlphaResult classify_low_alpha(const ChainData& chain) {
  check_chain(chain);
  return chain.l_alpha == 0 ? classify_zero(chain) : classify_one(chain);
}

}  // namespace trisect
