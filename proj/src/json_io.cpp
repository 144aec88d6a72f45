#include "trisect/json_io.hpp"

#include <map>

namespace trisect::json {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::InvalidInput, what); }

const json& require_array(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  return j;
}

std::size_t size_from_json(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    bad(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

const std::map<std::string, Subgraph> kSubgraphNames{
    {"alpha", Subgraph::Alpha}, {"beta", Subgraph::Beta},
    {"gamma", Subgraph::Gamma}, {"transition", Subgraph::Transition}};

const std::map<std::string, Marker> kMarkerNames{
    {"alpha_beta", Marker::AlphaBeta}, {"alpha_gamma", Marker::AlphaGamma},
    {"beta_gamma", Marker::BetaGamma}, {"beta_alpha", Marker::BetaAlpha},
    {"gamma_alpha", Marker::GammaAlpha}, {"gamma_beta", Marker::GammaBeta}};

template <class T>
T lookup(const std::map<std::string, T>& table, const json& j, const char* what) {
  if (!j.is_string()) bad(std::string(what) + " must be a string");
  const auto it = table.find(j.get<std::string>());
  if (it == table.end()) bad(std::string("unknown ") + what + " '" + j.get<std::string>() + "'");
  return it->second;
}

json annotations_to_json(const std::array<std::optional<PairAnnotation>, 3>& anns) {
  json out = json::object();
  for (Pair p : kAllPairs)
    if (const auto& a = anns[static_cast<int>(p)]) out[pair_name(p)] = to_json(*a);
  return out;
}

std::array<std::optional<PairAnnotation>, 3> annotations_from_json(const json& j) {
  if (!j.is_object()) bad("annotations must be an object");
  std::array<std::optional<PairAnnotation>, 3> anns;
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (Pair p : kAllPairs) {
      if (key != pair_name(p)) continue;
      anns[static_cast<int>(p)] = annotation_from_json(value);
      known = true;
    }
    if (!known) bad("unknown pair '" + key + "'");
  }
  return anns;
}

}  // namespace

json to_json(const Integer& x) { return x.get_str(); }

Integer integer_from_json(const json& j) {
  if (j.is_string()) return parse_integer(j.get<std::string>());
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return parse_integer(std::to_string(j.get<unsigned long long>()));
    return parse_integer(std::to_string(j.get<long long>()));
  }
  bad("expected an integer");
}

json to_json(const HomologyClass& x) {
  json out = json::array();
  for (const Integer& c : x.coeffs()) out.push_back(to_json(c));
  return out;
}

HomologyClass class_from_json(const json& j) {
  require_array(j, "homology class");
  std::vector<Integer> coeffs;
  for (const json& c : j) coeffs.push_back(integer_from_json(c));
  if (coeffs.size() % 2 != 0) bad("homology class needs an even number of coefficients");
  return HomologyClass(std::move(coeffs));
}

json to_json(const CutSystem& cs) {
  json out = json::array();
  for (const HomologyClass& c : cs.classes) out.push_back(to_json(c));
  return out;
}

CutSystem cut_system_from_json(const json& j, std::size_t genus) {
  require_array(j, "cut system");
  if (j.size() != genus) bad("cut system needs " + std::to_string(genus) + " classes");
  std::vector<HomologyClass> classes;
  for (const json& c : j) {
    classes.push_back(class_from_json(c));
    if (classes.back().coeffs().size() != 2 * genus)
      bad("class has " + std::to_string(classes.back().coeffs().size()) +
          " coefficients, expected " + std::to_string(2 * genus));
  }
  return CutSystem(genus, std::move(classes));
}

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

IntMatrix matrix_from_json(const json& j) {
  const std::size_t rows = size_from_json(j.at("rows"), "rows");
  const std::size_t cols = size_from_json(j.at("cols"), "cols");
  const json& entries = require_array(j.at("entries"), "entries");
  if (entries.size() != rows) bad("entries do not match the row count");
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    require_array(entries[r], "matrix row");
    if (entries[r].size() != cols) bad("entries do not match the column count");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = integer_from_json(entries[r][c]);
  }
  return m;
}

json to_json(const PairAnnotation& ann) {
  json matching = json::array(), labels = json::array();
  for (std::size_t m : ann.matching) matching.push_back(m + 1);
  for (Label l : ann.labels) labels.push_back(l == Label::P ? "P" : "D");
  return {{"matching", matching}, {"labels", labels}, {"signs", ann.signs}};
}

PairAnnotation annotation_from_json(const json& j) {
  PairAnnotation ann;
  for (const json& m : require_array(j.at("matching"), "matching")) {
    const std::size_t idx = size_from_json(m, "matching entry");
    if (idx == 0) bad("matching is 1-based");
    ann.matching.push_back(idx - 1);
  }
  for (const json& l : require_array(j.at("labels"), "labels")) {
    const std::string s = l.is_string() ? l.get<std::string>() : "";
    if (s != "P" && s != "D") bad("labels are \"P\" or \"D\"");
    ann.labels.push_back(s == "P" ? Label::P : Label::D);
  }
  if (j.contains("signs")) {
    for (const json& s : require_array(j.at("signs"), "signs")) {
      if (!s.is_number_integer() || (s.get<int>() != 1 && s.get<int>() != -1))
        bad("signs are +1 or -1");
      ann.signs.push_back(s.get<int>());
    }
  } else {
    ann.signs.assign(ann.matching.size(), 1);
  }
  if (ann.labels.size() != ann.matching.size() || ann.signs.size() != ann.matching.size())
    bad("annotation fields have different lengths");
  return ann;
}

json to_json(const TrisectionDiagram& d) {
  json out{{"name", d.name},
           {"genus", d.genus()},
           {"signature", {d.signature.g, d.signature.k[0], d.signature.k[1], d.signature.k[2]}},
           {"alpha", to_json(d.alpha)},
           {"beta", to_json(d.beta)},
           {"gamma", to_json(d.gamma)}};
  const json anns = annotations_to_json(d.annotations);
  if (!anns.empty()) out["annotations"] = anns;
  json geom = json::object();
  for (Pair p : kAllPairs)
    if (const auto& m = d.geom[p]) geom[pair_name(p)] = to_json(*m);
  if (!geom.empty()) out["geom"] = geom;
  return out;
}

TrisectionDiagram diagram_from_json(const json& j) {
  if (!j.is_object()) bad("diagram must be a JSON object");
  TrisectionDiagram d;
  const std::size_t g = size_from_json(j.at("genus"), "genus");
  const json& sig = require_array(j.at("signature"), "signature");
  if (sig.size() != 4) bad("signature is [g, k1, k2, k3]");
  d.signature.g = size_from_json(sig[0], "signature entry");
  for (int i = 0; i < 3; ++i) d.signature.k[i] = size_from_json(sig[i + 1], "signature entry");
  if (d.signature.g != g) bad("signature genus differs from genus");
  if (j.contains("name")) d.name = j.at("name").get<std::string>();
  d.alpha = cut_system_from_json(j.at("alpha"), g);
  d.beta = cut_system_from_json(j.at("beta"), g);
  d.gamma = cut_system_from_json(j.at("gamma"), g);
  if (j.contains("annotations")) d.annotations = annotations_from_json(j.at("annotations"));
  if (j.contains("geom")) {
    const json& geom = j.at("geom");
    if (!geom.is_object()) bad("geom must be an object");
    for (const auto& [key, value] : geom.items()) {
      bool known = false;
      for (Pair p : kAllPairs) {
        if (key != pair_name(p)) continue;
        d.geom[p] = matrix_from_json(value);
        if (d.geom[p]->rows() != g || d.geom[p]->cols() != g) bad("geom matrices are g x g");
        known = true;
      }
      if (!known) bad("unknown pair '" + key + "'");
    }
  }
  return d;
}

json to_json(const Cokernel& c) {
  json torsion = json::array();
  for (const Integer& t : c.torsion) torsion.push_back(to_json(t));
  return {{"free_rank", c.free_rank}, {"torsion", torsion}};
}

json to_json(const ValidationReport& r) {
  json pairs = json::array();
  for (const PairReport& p : r.pairs) {
    json e{{"pair", pair_name(p.pair)},
           {"expected_k", p.expected_k},
           {"cokernel", to_json(p.cokernel)},
           {"heegaard_ok", p.heegaard_ok},
           {"ok", p.ok()},
           {"problems", p.problems}};
    if (p.annotation_ok) e["annotation_ok"] = *p.annotation_ok;
    if (p.geometry_ok) e["geometry_ok"] = *p.geometry_ok;
    pairs.push_back(e);
  }
  return {{"ok", r.ok()},
          {"signature_ok", r.signature_ok},
          {"cut_systems_ok",
           {{"alpha", r.cut_systems_ok[0]}, {"beta", r.cut_systems_ok[1]}, {"gamma", r.cut_systems_ok[2]}}},
          {"pairs", pairs},
          {"problems", r.problems}};
}

json to_json(const KirbySkeleton& sk) {
  json dotted = json::array();
  for (std::size_t i : sk.dotted) dotted.push_back(i + 1);
  json linking = json::array();
  for (std::size_t r = 0; r < sk.linking.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < sk.linking.cols(); ++c) row.push_back(to_json(sk.linking(r, c)));
    linking.push_back(row);
  }
  return {{"dotted", dotted}, {"framed", sk.framed}, {"linking", linking}};
}

json to_json(const Pi1Report& r) {
  json out{{"kind", to_string(r.kind)}, {"presentation", r.presentation}};
  if (r.kind == Pi1Kind::FiniteCyclic) out["order"] = to_json(r.order);
  return out;
}

json to_json(const LoopSpec& loop) {
  json vertices = json::array();
  for (const LoopVertex& v : loop.vertices) {
    json markers = json::array();
    for (Marker m : v.markers) markers.push_back(marker_name(m));
    vertices.push_back({{"subgraph", subgraph_name(v.subgraph)}, {"cut", to_json(v.cut)},
                        {"markers", markers}});
  }
  json edges = json::array();
  for (const EdgeMove& e : loop.edges) {
    if (const auto* t0 = std::get_if<Type0Edge>(&e)) {
      json out{{"type", "type0"}};
      if (t0->move) {
        out["index"] = t0->move->index + 1;
        out["epsilons"] = t0->move->epsilons;
      }
      edges.push_back(out);
    } else if (const auto* t1 = std::get_if<Type1Edge>(&e)) {
      json out{{"type", "type1"}};
      if (t1->index) out["index"] = *t1->index + 1;
      if (t1->replacement) out["class"] = to_json(*t1->replacement);
      edges.push_back(out);
    } else {
      edges.push_back({{"type", "junction"}});
    }
  }
  json out{{"vertices", vertices}, {"edges", edges}};
  const json certs = annotations_to_json(loop.certificates);
  if (!certs.empty()) out["certificates"] = certs;
  return out;
}

LoopSpec loop_from_json(const json& j, std::size_t genus) {
  if (!j.is_object()) bad("loop must be a JSON object");
  LoopSpec loop;
  for (const json& v : require_array(j.at("vertices"), "vertices")) {
    LoopVertex vertex;
    vertex.subgraph = lookup(kSubgraphNames, v.at("subgraph"), "subgraph");
    vertex.cut = cut_system_from_json(v.at("cut"), genus);
    if (v.contains("markers"))
      for (const json& m : require_array(v.at("markers"), "markers"))
        vertex.markers.push_back(lookup(kMarkerNames, m, "marker"));
    loop.vertices.push_back(std::move(vertex));
  }
  for (const json& e : require_array(j.at("edges"), "edges")) {
    const std::string type = e.at("type").get<std::string>();
    std::optional<std::size_t> index;
    if (e.contains("index")) {
      const std::size_t i = size_from_json(e.at("index"), "edge index");
      if (i == 0 || i > genus) bad("edge index out of range (1-based)");
      index = i - 1;
    }
    if (type == "type0") {
      Type0Edge edge;
      if (index && e.contains("epsilons")) {
        Type0Move mv;
        mv.index = *index;
        for (const json& x : require_array(e.at("epsilons"), "epsilons")) {
          if (!x.is_number_integer()) bad("epsilons are integers");
          mv.epsilons.push_back(x.get<int>());
        }
        edge.move = std::move(mv);
      } else if (index || e.contains("epsilons")) {
        bad("type0 edge needs both index and epsilons, or neither");
      }
      loop.edges.emplace_back(std::move(edge));
    } else if (type == "type1") {
      Type1Edge edge;
      edge.index = index;
      if (e.contains("class")) edge.replacement = class_from_json(e.at("class"));
      if (edge.index.has_value() != edge.replacement.has_value())
        bad("type1 edge needs both index and class, or neither");
      loop.edges.emplace_back(std::move(edge));
    } else if (type == "junction") {
      loop.edges.emplace_back(JunctionEdge{});
    } else {
      bad("unknown edge type '" + type + "'");
    }
  }
  if (j.contains("certificates")) loop.certificates = annotations_from_json(j.at("certificates"));
  return loop;
}

json to_json(const LengthReport& r) {
  return {{"l_alpha", r.l_alpha}, {"l_beta", r.l_beta}, {"l_gamma", r.l_gamma},
          {"L", r.L}, {"total_l", r.total_l}};
}

json to_json(const BoundReport& r) {
  return {{"p", to_json(r.p)},
          {"case1_m", r.case1_m},
          {"case2_m", r.case2_m},
          {"case2_k_argmin", r.case2_k_argmin},
          {"case2_closed_form", r.case2_closed_form},
          {"k_star", r.k_star},
          {"m_lower", r.m_lower},
          {"L_lower", r.L_lower}};
}

json to_json(const HarnessSummary& s) {
  return {{"ok", s.ok()},
          {"trials", s.trials},
          {"passed", s.passed},
          {"max_genus", s.max_genus},
          {"max_steps", s.max_steps},
          {"failing_seeds", s.failing_trials}};
}

}  // namespace trisect::json
