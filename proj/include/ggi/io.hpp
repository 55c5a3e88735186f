#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "ggi/crosscheck.hpp"
#include "ggi/flag_complex.hpp"
#include "ggi/graph.hpp"
#include "ggi/jump_loci.hpp"
#include "ggi/presentation.hpp"
#include "ggi/series.hpp"
#include "ggi/triangulation.hpp"

namespace ggi {

// ordered JSON keeps insertion order, so reports are byte-identical across
// runs for identical input and seed
using ojson = nlohmann::ordered_json;

inline ojson json_int(const Int& v) { return ojson(v.str()); }  // decimal string, lossless

inline ojson json_int_vector(const std::vector<Int>& v) {
  ojson a = ojson::array();
  for (const Int& x : v) a.push_back(json_int(x));
  return a;
}

inline ojson json_rat(const Rat& r) {
  std::ostringstream os;
  os << r;
  return ojson(os.str());
}

// ---------------------------------------------------------------------------
// GraphDocument: {"vertices": [...], "edges": [["u","v"],...],
//                 "weights": {"u-v": m}} with vertex order significant.
// Unknown top-level keys are ignored so generator output round-trips.

struct ParsedDocument {
  Graph graph;
  std::optional<WeightedGraph> weighted;
};

inline ParsedDocument parse_graph_document(const ojson& j) {
  if (!j.is_object()) throw std::invalid_argument("graph document: top level must be an object");
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw std::invalid_argument("graph document: field 'vertices' (array of strings) required");
  if (!j.contains("edges") || !j["edges"].is_array())
    throw std::invalid_argument("graph document: field 'edges' (array of pairs) required");

  std::vector<std::string> names;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw std::invalid_argument("graph document: vertices must be strings");
    names.push_back(v.get<std::string>());
  }
  std::vector<std::pair<int, int>> edges;
  int ei = 0;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw std::invalid_argument("graph document: edge #" + std::to_string(ei) +
                                  " must be a pair of vertex names");
    auto find = [&](const std::string& name) {
      for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
      throw std::invalid_argument("graph document: edge #" + std::to_string(ei) +
                                  " references unknown vertex '" + name + "'");
    };
    edges.emplace_back(find(e[0].get<std::string>()), find(e[1].get<std::string>()));
    ++ei;
  }
  ParsedDocument doc{Graph(names, edges), std::nullopt};

  if (j.contains("weights")) {
    if (!j["weights"].is_object())
      throw std::invalid_argument("graph document: 'weights' must map \"u-v\" to integers >= 2");
    std::map<std::pair<int, int>, long> w;
    for (auto it = j["weights"].begin(); it != j["weights"].end(); ++it) {
      const std::string key = it.key();
      auto dash = key.find('-');
      if (dash == std::string::npos)
        throw std::invalid_argument("graph document: weight key '" + key + "' is not \"u-v\"");
      int u = doc.graph.vertex_index(key.substr(0, dash));
      int v = doc.graph.vertex_index(key.substr(dash + 1));
      if (u < 0 || v < 0)
        throw std::invalid_argument("graph document: weight key '" + key +
                                    "' references unknown vertices");
      if (!it.value().is_number_integer())
        throw std::invalid_argument("graph document: weight '" + key + "' must be an integer");
      w[{std::min(u, v), std::max(u, v)}] = it.value().get<long>();
    }
    doc.weighted = WeightedGraph(doc.graph, std::move(w));
  }
  return doc;
}

inline ParsedDocument load_graph_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  ojson j;
  try {
    j = ojson::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("parse error in '" + path + "': " + e.what());
  }
  return parse_graph_document(j);
}

inline ojson graph_to_json(const Graph& g) {
  ojson j;
  j["vertices"] = ojson::array();
  for (const std::string& n : g.vertex_names()) j["vertices"].push_back(n);
  j["edges"] = ojson::array();
  for (auto [u, v] : g.edges())
    j["edges"].push_back(ojson::array({g.vertex_name(u), g.vertex_name(v)}));
  return j;
}

// ---------------------------------------------------------------------------
// Build scripts: {"start": ["a","b","c"],
//                 "steps": [{"edge": ["a","b"], "vertex": "d"}, ...]}

inline SpecialBuildScript parse_build_script(const ojson& j) {
  SpecialBuildScript s;
  if (!j.is_object()) throw std::invalid_argument("build script: top level must be an object");
  if (j.contains("start")) {
    if (!j["start"].is_array() || j["start"].size() != 3)
      throw std::invalid_argument("build script: 'start' must list three vertex names");
    for (int i = 0; i < 3; ++i) s.start[static_cast<size_t>(i)] = j["start"][static_cast<size_t>(i)].get<std::string>();
  }
  if (j.contains("steps")) {
    if (!j["steps"].is_array()) throw std::invalid_argument("build script: 'steps' must be an array");
    int si = 0;
    for (const auto& st : j["steps"]) {
      if (!st.is_object() || !st.contains("edge") || !st.contains("vertex") ||
          !st["edge"].is_array() || st["edge"].size() != 2)
        throw std::invalid_argument("build script: step #" + std::to_string(si) +
                                    " must be {\"edge\": [u, v], \"vertex\": w}");
      BuildStep step;
      step.edge_u = st["edge"][0].get<std::string>();
      step.edge_v = st["edge"][1].get<std::string>();
      step.vertex = st["vertex"].get<std::string>();
      s.steps.push_back(std::move(step));
      ++si;
    }
  }
  return s;
}

inline ojson build_log_to_json(const BuildLog& log) {
  ojson j;
  j["start"] = ojson::array({log.start[0], log.start[1], log.start[2]});
  j["steps"] = ojson::array();
  for (const BuildStep& s : log.steps) {
    ojson st;
    st["edge"] = ojson::array({s.edge_u, s.edge_v});
    st["vertex"] = s.vertex;
    j["steps"].push_back(st);
  }
  j["extended"] = log.extended;
  if (log.seed) j["seed"] = *log.seed;
  return j;
}

inline ojson triangulation_document(const DiskTriangulation& d) {
  ojson j = graph_to_json(d.graph);
  j["build"] = build_log_to_json(d.log);
  ojson circuit = ojson::array();
  for (int v : d.boundary) circuit.push_back(d.graph.vertex_name(v));
  j["build"]["boundary_circuit"] = circuit;
  if (d.extra_special) {
    j["build"]["r_original_boundary"] = d.r_original_boundary;
    ojson edges = ojson::array();
    for (auto [u, v] : d.original_boundary_edges)
      edges.push_back(ojson::array({d.graph.vertex_name(u), d.graph.vertex_name(v)}));
    j["build"]["original_boundary_edges"] = edges;
  }
  ValidationReport rep = validate(d);
  j["validation"]["pass"] = rep.pass;
  j["validation"]["failures"] = rep.failures;
  return j;
}

// ---------------------------------------------------------------------------
// Certificates

inline ojson certificate_to_json(const Certificate& c) {
  ojson j;
  j["kind"] = c.kind_text();
  j["justification"] = c.justification;
  if (!c.witness_subsets.empty()) {
    ojson subsets = ojson::array();
    for (const auto& s : c.witness_subsets) subsets.push_back(s);
    j["witness"]["component_subsets"] = subsets;
  }
  for (const auto& [k, v] : c.witness_numbers) j["witness"][k] = json_int(v);
  return j;
}

// ---------------------------------------------------------------------------
// Crosscheck summary

inline ojson crosscheck_to_json(const CrosscheckResult& r) {
  ojson j;
  j["seed"] = r.seed;
  j["points_per_component"] = r.points_per_component;
  ojson sections = ojson::array();
  for (const auto& s : r.sections) {
    ojson sec;
    sec["name"] = s.name;
    sec["checked"] = s.checked;
    sec["agreed"] = s.agreed;
    sections.push_back(sec);
  }
  j["sections"] = sections;
  ojson fails = ojson::array();
  for (const auto& f : r.failures) {
    ojson fo;
    fo["category"] = f.category;
    fo["point"] = f.point;
    fo["detail"] = f.detail;
    fails.push_back(fo);
  }
  j["failures"] = fails;
  j["all_agree"] = r.all_agree();
  return j;
}

// ---------------------------------------------------------------------------
// Invariant report

struct ReportOptions {
  int order = 12;
  FieldTag field = FieldTag::rationals();
  std::uint64_t seed = 0;
  std::optional<int> max_subset_size;
  bool assume_simply_connected = false;
};

struct ReportResult {
  ojson json;
  bool gate_refused = false;  // a section was withheld pending an explicit override
};

namespace detail {
inline ojson subset_list_json(const Graph& g, const std::vector<VertexSet>& sets) {
  ojson a = ojson::array();
  for (const VertexSet& w : sets) {
    ojson names = ojson::array();
    for (int v : w.vertices()) names.push_back(g.vertex_name(v));
    a.push_back(names);
  }
  return a;
}

inline ojson rank_vector_json(const RankVector& rv) {
  ojson j;
  j["values"] = json_int_vector(rv.values);
  j["order"] = rv.order();
  if (rv.truncated_input) j["partial"] = true;
  return j;
}
}  // namespace detail

inline ReportResult build_report(const ParsedDocument& doc, const ReportOptions& opt) {
  const Graph& g = doc.graph;
  ReportResult out;
  ojson& j = out.json;

  j["schema_version"] = 1;
  j["tool"] = {{"name", "ggi"}, {"version", "0.1.0"}};
  j["input"] = graph_to_json(g);
  if (doc.weighted) {
    ojson w;
    for (auto [e, m] : doc.weighted->weights)
      w[g.vertex_name(e.first) + "-" + g.vertex_name(e.second)] = m;
    j["input"]["weights"] = w;
  }
  j["parameters"] = {{"order", opt.order},
                     {"field", opt.field.name()},
                     {"seed", opt.seed},
                     {"max_subset_size", opt.max_subset_size ? ojson(*opt.max_subset_size) : ojson(nullptr)},
                     {"assume_simply_connected", opt.assume_simply_connected}};

  // graph invariants
  const bool connected = is_connected(g);
  CutCoefficients cc = cut_coefficients(g, opt.max_subset_size);
  std::vector<VertexSet> maxdisc = maximal_disconnected_subsets(g);
  {
    ojson gj;
    gj["n_vertices"] = g.n();
    gj["n_edges"] = g.m();
    gj["connected"] = connected;
    if (g.n() >= 1) {
      gj["connectivity"] = connectivity(g);
      if (!connected) gj["connectivity_note"] = "graph disconnected; kappa reported as 0";
    }
    gj["clique_counts"] = json_int_vector(clique_counts(g));
    ojson ne = ojson::array();
    for (auto [u, v] : non_edges(g)) ne.push_back(ojson::array({g.vertex_name(u), g.vertex_name(v)}));
    gj["non_edges"] = ne;
    gj["cut_coefficients"] = {{"values", json_int_vector(cc.c)},
                              {"truncated", cc.truncated},
                              {"max_size_computed", cc.max_size_computed}};
    gj["maximal_disconnected_subsets"] = detail::subset_list_json(g, maxdisc);
    j["graph"] = gj;
  }

  {
    IntPolynomial pg = clique_polynomial(g);
    IntPolynomial qg = cut_polynomial(cc);
    j["polynomials"] = {{"clique", {{"coefficients", json_int_vector(pg.c)}, {"text", pg.to_string()}}},
                        {"cut",
                         {{"coefficients", json_int_vector(qg.c)},
                          {"text", qg.to_string()},
                          {"truncated", cc.truncated}}}};
  }

  // flag complex and homology
  FlagComplex fc = flag_complex(g);
  SimplyConnectedStatus sc = simply_connected_status(fc);
  const bool sc_effective = sc.yes() || (opt.assume_simply_connected && !sc.no());
  std::string sc_text = sc.text();
  if (!sc.yes() && sc_effective) sc_text = "assumed-yes";
  {
    ojson f;
    ojson counts = ojson::array();
    for (int d = 0; d <= fc.dimension(); ++d) counts.push_back(fc.count(d));
    f["simplex_counts"] = counts;
    IntegralH1 h1 = integral_h1(fc);
    f["integral_h1"] = {{"rank", h1.rank}, {"torsion", json_int_vector(h1.torsion)}};
    HomologySummary h = homology_ranks(fc, opt.field);
    f["homology"] = {{"field", opt.field.name()},
                     {"reduced_betti", h.reduced_betti},
                     {"cycles", h.cycles},
                     {"boundaries", h.boundaries}};
    j["flag_complex"] = f;
  }
  j["gates"] = {{"connected", connected},
                {"simply_connected", sc_text},
                {"simply_connected_reason", sc.reason}};

  // graded ranks
  {
    ojson gi;
    gi["raag"] = {{"lcs_ranks", detail::rank_vector_json(lcs_ranks(g, RankVector::Group::raag, opt.order))},
                  {"chen_ranks", detail::rank_vector_json(chen_ranks(cc, RankVector::Group::raag, opt.order))}};
    if (connected && g.n() >= 1) {
      gi["bb"] = {{"lcs_ranks", detail::rank_vector_json(lcs_ranks(g, RankVector::Group::bb, opt.order))},
                  {"chen_ranks", detail::rank_vector_json(chen_ranks(cc, RankVector::Group::bb, opt.order))}};
    } else {
      gi["bb"] = {{"omitted_reason", connected ? "empty graph: trivial kernel"
                                               : "graph disconnected: kernel group is not finitely generated"}};
    }
    j["group_invariants"] = gi;
  }

  // Alexander module presentations (sparse triple export for inspection)
  {
    AlexanderMatrix lau = alexander_presentation(g);
    AlexanderMatrix lin = infinitesimal_presentation(g);
    j["alexander"] = {{"rows", lau.n_rows()},
                      {"columns", lau.n_cols()},
                      {"laurent_text", export_sparse_text(lau, g)},
                      {"linear_text", export_sparse_text(lin, g)}};
  }

  // kernel homology modules H_r = (kZ)^free + (trivial k)^trivial
  if (connected) {
    ojson mods = ojson::array();
    ojson notes = ojson::array();
    for (int r = 1; r <= fc.dimension() + 1; ++r) {
      BBHomologyModule m = bb_homology_module(g, opt.field, r);
      mods.push_back({{"degree", r}, {"free_rank", m.free_rank}, {"trivial_rank", m.trivial_rank}});
      if (m.free_rank > 0)
        notes.push_back("H_" + std::to_string(r) +
                        " of the kernel group is not finitely generated (free rank " +
                        std::to_string(m.free_rank) + ")");
    }
    j["bb_homology_modules"] = {{"field", opt.field.name()}, {"modules", mods}, {"notes", notes}};
    if (sc.no())
      j["bb_homology_modules"]["notes"].push_back(
          "flag complex not simply connected: kernel group is not finitely presented");
  } else {
    j["bb_homology_modules"] = {{"omitted_reason", "graph disconnected"}};
  }

  // presentations
  {
    ojson pres;
    GroupPresentation raag = raag_presentation(g);
    pres["raag"] = {{"generators", raag.n_generators()}, {"relators", raag.n_relators()}};
    if (connected && sc_effective) {
      GroupPresentation dl = dicks_leary_presentation(g, true);
      pres["dicks_leary"] = {{"generators", dl.n_generators()}, {"relators", dl.n_relators()}};
      GroupPresentation tr = spanning_tree_reduction(g, default_spanning_tree(g), true);
      Abelianization ab = abelianization(tr);
      bool all_comm = true, all_zero = true;
      IMatrix em = exponent_matrix(tr);
      for (int i = 0; i < tr.n_relators(); ++i) {
        if (!tr.relators[static_cast<size_t>(i)].is_commutator_shaped()) all_comm = false;
        for (int c = 0; c < em.cols; ++c)
          if (em.at(i, c) != 0) all_zero = false;
      }
      pres["tree_reduced"] = {{"generators", tr.n_generators()},
                              {"relators", tr.n_relators()},
                              {"all_relators_commutator_shaped", all_comm},
                              {"all_relators_zero_exponent_sum", all_zero},
                              {"abelianization",
                               {{"rank", ab.rank}, {"torsion", json_int_vector(ab.torsion)}}},
                              {"text", presentation_to_text(tr)}};
    } else {
      std::string reason = !connected ? "graph disconnected: kernel group is not finitely generated"
                           : sc.no()
                               ? "flag complex not simply connected (" + sc.reason +
                                     "): kernel group is not finitely presented"
                               : "simple connectivity unknown; pass --assume-simply-connected to override";
      pres["dicks_leary"] = {{"omitted_reason", reason}};
      pres["tree_reduced"] = {{"omitted_reason", reason}};
      if (connected && !sc.no()) out.gate_refused = true;
    }
    j["presentations"] = pres;
  }

  // jump loci
  {
    ojson loci;
    {
      ComponentList<SubspaceComponent> rc = resonance_components(g, Target::raag);
      ComponentList<TorusComponent> vc = characteristic_components(g, Target::raag);
      ojson rcj = ojson::array(), vcj = ojson::array();
      for (const auto& c : rc.components) {
        ojson cj;
        cj["subset"] = detail::subset_list_json(g, {c.w})[0];
        cj["dim"] = c.dim();
        rcj.push_back(cj);
      }
      for (const auto& c : vc.components) {
        ojson cj;
        cj["subset"] = detail::subset_list_json(g, {c.w})[0];
        cj["dim"] = c.w.count();
        vcj.push_back(cj);
      }
      loci["raag"] = {{"resonance", {{"components", rcj}}},
                      {"characteristic", {{"components", vcj}}}};
    }
    if (connected && sc_effective && g.n() > 1) {
      ComponentList<SubspaceComponent> rc = resonance_components(g, Target::bb, true);
      ComponentList<TorusComponent> vc = characteristic_components(g, Target::bb, true);
      if (rc.full) {
        loci["bb"] = {{"resonance", {{"full_space", true}}},
                      {"characteristic", {{"full_torus", true}}}};
      } else {
        ojson rcj = ojson::array(), vcj = ojson::array();
        for (const auto& c : rc.components) {
          ojson cj;
          cj["subset"] = detail::subset_list_json(g, {c.w})[0];
          cj["dim"] = c.dim();
          rcj.push_back(cj);
        }
        for (const auto& c : vc.components) {
          ojson cj;
          cj["subset"] = detail::subset_list_json(g, {c.w})[0];
          cj["dim"] = c.w.count();
          vcj.push_back(cj);
        }
        loci["bb"] = {{"resonance", {{"full_space", false}, {"components", rcj}}},
                      {"characteristic", {{"full_torus", false}, {"components", vcj}}}};
      }
    } else if (g.n() == 1 && connected) {
      loci["bb"] = {{"resonance", {{"components", ojson::array()}}},
                    {"characteristic", {{"components", ojson::array()}}},
                    {"note", "trivial kernel: both varieties empty"}};
    } else {
      std::string reason = !connected ? "graph disconnected"
                           : sc.no()  ? "flag complex not simply connected (" + sc.reason + ")"
                                      : "simple connectivity unknown; pass --assume-simply-connected";
      loci["bb"] = {{"omitted_reason", reason}};
      if (connected && !sc.no() && g.n() > 1) out.gate_refused = true;
    }
    j["jump_loci"] = loci;
  }

  // certificates
  if (connected && sc_effective && g.n() > 1) {
    Certificate na = not_artin_certificate(g);
    Certificate nr = not_arrangement_certificate(g, true);
    j["certificates"] = {{"not_artin", certificate_to_json(na)},
                         {"not_arrangement", certificate_to_json(nr)}};
  } else {
    j["certificates"] = {{"omitted_reason", "kernel-group gates not satisfied"}};
  }

  // odd contraction (weighted input only)
  if (doc.weighted) {
    Graph oc = odd_contraction(*doc.weighted);
    j["odd_contraction"] = graph_to_json(oc);
  }

  // self checks: every boundary matrix squared to zero during construction;
  // rank extraction round-trips; chen closed form matches the series route
  {
    bool roundtrip = true;
    RankVector phi = lcs_ranks(g, RankVector::Group::raag, opt.order);
    std::vector<Int> rebuilt = rebuild_product(phi.values, opt.order);
    IntPolynomial pa = clique_polynomial(g).alternate();
    for (int i = 0; i <= opt.order; ++i)
      if (rebuilt[static_cast<size_t>(i)] != pa.coeff(i)) roundtrip = false;
    bool chen_match = true;
    if (!cc.truncated) {
      std::vector<Int> via_series = chen_ranks_via_series(cut_polynomial(cc), opt.order);
      RankVector th = chen_ranks(cc, RankVector::Group::raag, opt.order);
      for (int k = 2; k <= opt.order; ++k)
        if (via_series[static_cast<size_t>(k) - 1] != th.values[static_cast<size_t>(k) - 1])
          chen_match = false;
    }
    j["self_checks"] = {{"chain_complex_d_squared_zero", true},
                        {"lcs_roundtrip_ok", roundtrip},
                        {"chen_closed_form_matches_series", chen_match}};
  }

  return out;
}

struct DistinguishResult {
  ojson json;
  bool gate_refused = false;
};

inline DistinguishResult run_distinguish(const Graph& g, bool assume_simply_connected) {
  DistinguishResult out;
  SimplyConnectedStatus sc = simply_connected_status(g);
  bool gate_ok = is_connected(g) && g.n() > 1 && (sc.yes() || (assume_simply_connected && !sc.no()));
  if (!gate_ok) {
    std::string reason = !is_connected(g) ? "graph disconnected"
                         : g.n() <= 1     ? "trivial kernel group"
                         : sc.no()        ? "flag complex not simply connected (" + sc.reason + ")"
                                          : "simple connectivity unknown; pass --assume-simply-connected";
    Certificate c;
    c.justification = "inconclusive: " + reason;
    out.json = {{"not_artin", certificate_to_json(c)}, {"not_arrangement", certificate_to_json(c)}};
    out.gate_refused = is_connected(g) && g.n() > 1 && !sc.no() && !sc.yes() && !assume_simply_connected;
    return out;
  }
  Certificate na = not_artin_certificate(g);
  Certificate nr = not_arrangement_certificate(g, true);
  out.json = {{"not_artin", certificate_to_json(na)}, {"not_arrangement", certificate_to_json(nr)}};
  return out;
}

}  // namespace ggi
