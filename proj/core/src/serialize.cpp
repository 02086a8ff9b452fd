#include "qgor/serialize.hpp"

#include <sstream>

namespace qgor::serial {

namespace {

json indices(const std::set<std::size_t>& positions) {
  json out = json::array();
  for (std::size_t i : positions) out.push_back(i + 1);
  return out;
}

json faces(const std::vector<Face>& list) {
  json out = json::array();
  for (const Face& f : list) out.push_back(face(f));
  return out;
}

}  // namespace

json face(const Face& f) {
  json out = json::array();
  for (Vertex v : f.vertices()) out.push_back(v);
  return out;
}

json complex(const SimplicialComplex& c) {
  json facets = json::array();
  for (const Face& f : c.facets()) facets.push_back(face(f));
  return {{"n", c.n_vertices()}, {"facets", std::move(facets)}};
}

json betti(const BettiVector& b) {
  json dims = json::array();
  for (int j = b.lowest_degree(); j <= b.highest_degree(); ++j) dims.push_back(b[j]);
  return {{"lowest_degree", b.lowest_degree()}, {"dims", std::move(dims)}};
}

json table(const LocalCohomologyTable& t) {
  json entries = json::array();
  for (const auto& e : t.entries()) {
    entries.push_back({{"i", e.i}, {"sigma", face(e.sigma)}, {"dim", e.dim}});
  }
  json totals = json::array();
  for (const auto& e : t.totals()) totals.push_back({{"i", e.i}, {"j", e.j}, {"dim", e.dim}});
  return {{"d", t.krull_dim()},
          {"depth", t.depth()},
          {"entries", std::move(entries)},
          {"total", std::move(totals)}};
}

json witness(const Witness& w) {
  json out = {{"faces", faces(w.faces)}, {"note", w.note}};
  out["degree"] = w.degree ? json(*w.degree) : json(nullptr);
  return out;
}

json classification(const ClassificationReport& r) {
  json witnesses = json::object();
  for (const auto& [key, w] : r.witnesses) witnesses[key] = witness(w);
  return {{"field", r.field.name()},
          {"pure", r.pure},
          {"strongly_connected", r.strongly_connected},
          {"normal", r.normal},
          {"pseudomanifold_ridge_condition", r.pseudomanifold_ridge_condition},
          {"normal_pseudomanifold", r.normal_pseudomanifold},
          {"orientable", r.orientable},
          {"buchsbaum", r.buchsbaum},
          {"homology_manifold", r.homology_manifold},
          {"homology_sphere", r.homology_sphere},
          {"cohen_macaulay", r.cohen_macaulay},
          {"quasi_gorenstein", r.quasi_gorenstein},
          {"gorenstein", r.gorenstein},
          {"witnesses", std::move(witnesses)}};
}

json partition(const FacetPartition& p) { return {{"A", indices(p.a)}, {"B", indices(p.b)}}; }

json lefschetz(const LefschetzReport& r) {
  json terms = json::array();
  for (const auto& t : r.terms) terms.push_back({{"label", t.label}, {"dim", t.dim}});
  json pairs = json::array();
  for (const auto& p : r.duality_pairs) {
    pairs.push_back({{"i", p.i},
                     {"relative_cohomology", p.relative_cohomology},
                     {"homology_a", p.homology_a},
                     {"equal", p.equal()}});
  }
  return {{"d", r.d},
          {"terms", std::move(terms)},
          {"alternating_sum", r.alternating_sum},
          {"final_term_variant",
           {{"label", "H~_1(Delta_A)"},
            {"dim", r.final_term_h1},
            {"alternating_sum", r.alternating_sum_final_h1}}},
          {"neighbor_bound_ok", r.neighbor_bound_ok},
          {"duality_pairs", std::move(pairs)},
          {"duality_pairs_equal", r.duality_pairs_equal()},
          {"hypotheses",
           {{"quasi_gorenstein", r.hypotheses.quasi_gorenstein},
            {"buchsbaum_a", r.hypotheses.buchsbaum_a},
            {"hold", r.hypotheses.hold()}}}};
}

json link_restriction(const LinkRestrictionReport& r) {
  json mismatches = json::array();
  for (const auto& m : r.mismatches) {
    mismatches.push_back({{"sigma", face(m.sigma)},
                          {"degree", m.degree},
                          {"dim_delta", m.dim_delta},
                          {"dim_b", m.dim_b}});
  }
  return {{"holds", r.holds},
          {"hypotheses_met", r.hypotheses.hold()},
          {"mismatches", std::move(mismatches)}};
}

json cm_linkage(const CmLinkageReport& r) {
  json out = {{"quasi_gorenstein", r.quasi_gorenstein},
              {"cohen_macaulay_a", r.cohen_macaulay_a},
              {"checked", r.checked},
              {"holds", r.holds}};
  if (r.mismatch) {
    out["mismatch"] = {{"i", r.mismatch->i},
                       {"sigma", face(r.mismatch->sigma)},
                       {"dim_delta", r.mismatch->dim_delta},
                       {"dim_b", r.mismatch->dim_b}};
  } else {
    out["mismatch"] = nullptr;
  }
  return out;
}

json gamma(const GammaGraph& g, const ConnectivityReport& connectivity) {
  json edges = json::array();
  for (auto [a, b] : g.edges) edges.push_back({a + 1, b + 1});
  json adjacency = json::object();
  const auto adj = g.adjacency();
  for (std::size_t v = 0; v < adj.size(); ++v) {
    json row = json::array();
    for (std::size_t w : adj[v]) row.push_back(w + 1);
    adjacency[std::to_string(v + 1)] = std::move(row);
  }
  json cut = json::array();
  for (std::size_t v : connectivity.articulation_points) cut.push_back(v + 1);
  return {{"t", g.t},
          {"vertices", g.vertex_count},
          {"edges", std::move(edges)},
          {"adjacency", std::move(adjacency)},
          {"components", connectivity.components},
          {"two_connected", connectivity.two_connected},
          {"degenerate", connectivity.degenerate},
          {"articulation_points", std::move(cut)}};
}

json trace(const CollapseTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps) {
    steps.push_back({{"free", face(s.free_face)}, {"coface", face(s.coface)}});
  }
  return {{"steps", std::move(steps)}, {"start", complex(t.start)}, {"end", complex(t.end)}};
}

json collapse(const CollapseOutcome& outcome, const TraceVerification& verification) {
  json out = {{"status", outcome.succeeded ? "SUCCESS" : "FAILURE"},
              {"reason", outcome.reason},
              {"trace", trace(outcome.trace)},
              {"verification",
               {{"valid", verification.valid},
                {"end_matches", verification.end_matches},
                {"betti_preserved", verification.betti_preserved},
                {"message", verification.message}}}};
  out["stuck_vertex"] = outcome.stuck_vertex ? json(*outcome.stuck_vertex) : json(nullptr);
  out["verification"]["invalid_step"] =
      verification.invalid_step ? json(*verification.invalid_step) : json(nullptr);
  return out;
}

std::string gamma_dot(const GammaGraph& g, const SimplicialComplex& c) {
  std::ostringstream out;
  out << "graph gamma_" << g.t << " {\n";
  const auto facets = c.facets();
  for (std::size_t v = 0; v < g.vertex_count; ++v) {
    out << "  " << v + 1 << " [label=\"" << v + 1 << ": " << facets[v].to_string() << "\"];\n";
  }
  for (auto [a, b] : g.edges) out << "  " << a + 1 << " -- " << b + 1 << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace qgor::serial
