#include "cli.hpp"

#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "qgor/qgor.hpp"

namespace qgor::cli {

namespace {

using nlohmann::json;

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::set<std::size_t> to_zero_based(const std::vector<std::size_t>& one_based,
                                    const SimplicialComplex& complex, const char* flag) {
  std::set<std::size_t> out;
  for (std::size_t i : one_based) {
    if (i == 0 || i > complex.facet_count()) {
      throw Error(ErrorKind::IndexOutOfRange,
                  std::string(flag) + ": facet " + std::to_string(i) + " not in 1.." +
                      std::to_string(complex.facet_count()));
    }
    out.insert(i - 1);
  }
  return out;
}

std::string join(const std::set<std::size_t>& positions) {
  std::string s;
  for (std::size_t i : positions) s += (s.empty() ? "" : ",") + std::to_string(i + 1);
  return s;
}

void print_betti(std::ostream& out, const BettiVector& b) {
  for (int j = b.lowest_degree(); j <= b.highest_degree(); ++j) {
    out << "  H~_" << j << ": " << b[j] << "\n";
  }
}

void print_witness(std::ostream& out, const std::string& key, const Witness& w) {
  out << "  " << key << ": " << w.note;
  for (const Face& f : w.faces) out << " " << f;
  if (w.degree) out << " (degree " << *w.degree << ")";
  out << "\n";
}

int cmd_classify(const CliConfig& cfg, const SimplicialComplex& complex, std::ostream& out) {
  const auto report = classify(complex, cfg.field);
  if (cfg.json) {
    json j = serial::classification(report);
    j["complex"] = serial::complex(complex);
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  if (cfg.list_facets) {
    const auto facets = complex.facets();
    for (std::size_t i = 0; i < facets.size(); ++i) out << i + 1 << ": " << facets[i] << "\n";
    return kExitOk;
  }
  out << "complex: " << complex << "\n"
      << "field: " << report.field.name() << "\n"
      << "pure: " << yes_no(report.pure) << "\n"
      << "strongly_connected: " << yes_no(report.strongly_connected) << "\n"
      << "normal: " << yes_no(report.normal) << "\n"
      << "pseudomanifold_ridge_condition: " << yes_no(report.pseudomanifold_ridge_condition)
      << "\n"
      << "normal_pseudomanifold: " << yes_no(report.normal_pseudomanifold) << "\n"
      << "orientable: " << yes_no(report.orientable) << "\n"
      << "buchsbaum: " << yes_no(report.buchsbaum) << "\n"
      << "homology_manifold: " << yes_no(report.homology_manifold) << "\n"
      << "homology_sphere: " << yes_no(report.homology_sphere) << "\n"
      << "cohen_macaulay: " << yes_no(report.cohen_macaulay) << "\n"
      << "quasi_gorenstein: " << yes_no(report.quasi_gorenstein) << "\n"
      << "gorenstein: " << yes_no(report.gorenstein) << "\n";
  if (!report.witnesses.empty()) {
    out << "witnesses:\n";
    for (const auto& [key, w] : report.witnesses) print_witness(out, key, w);
  }
  return kExitOk;
}

int cmd_homology(const CliConfig& cfg, const SimplicialComplex& complex, std::ostream& out) {
  const auto betti = reduced_betti(complex, cfg.field, cfg.face_cap);
  const auto f = complex.f_vector(cfg.face_cap);
  if (cfg.json) {
    json j = {{"field", cfg.field.name()},
              {"complex", serial::complex(complex)},
              {"f_vector", f},
              {"reduced_betti", serial::betti(betti)},
              {"euler_characteristic", betti.euler_characteristic()}};
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "field: " << cfg.field.name() << "\nf-vector (from f_-1):";
  for (auto x : f) out << " " << x;
  out << "\nreduced Betti numbers:\n";
  print_betti(out, betti);
  out << "reduced Euler characteristic: " << betti.euler_characteristic() << "\n";
  return kExitOk;
}

int cmd_hochster(const CliConfig& cfg, const SimplicialComplex& complex, std::ostream& out) {
  const auto table = local_cohomology_table(complex, cfg.field, cfg.face_cap);
  const auto depth = depth_report(complex, cfg.field, cfg.face_cap);
  const int a = a_invariant(complex, cfg.field, cfg.face_cap);
  const auto serre = serre_condition(complex, cfg.field, cfg.serre_ell, cfg.face_cap);
  const bool symmetric = degree_zero_poincare_symmetry(table);
  if (cfg.json) {
    json j = serial::table(table);
    j["field"] = cfg.field.name();
    j["cohen_macaulay"] = depth.is_cohen_macaulay;
    j["a_invariant"] = a;
    j["degree_zero_symmetry"] = symmetric;
    j["serre"] = {{"ell", cfg.serre_ell},
                  {"holds", serre.holds},
                  {"extended_criterion", serre.extended_criterion}};
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "field: " << cfg.field.name() << "\nKrull dimension: " << table.krull_dim()
      << "\ndepth: " << depth.depth << "\ncohen_macaulay: " << yes_no(depth.is_cohen_macaulay)
      << "\na-invariant: " << a << "\n(S_" << cfg.serre_ell << "): " << yes_no(serre.holds)
      << (serre.extended_criterion ? " (link criterion beyond S_2)" : "")
      << "\ndegree-0 symmetry: " << yes_no(symmetric) << "\nnonzero entries (i, sigma, dim):\n";
  for (const auto& e : table.entries()) {
    out << "  " << e.i << " " << e.sigma << " " << e.dim << "\n";
  }
  out << "totals (i, j, dim):\n";
  for (const auto& t : table.totals()) out << "  " << t.i << " " << t.j << " " << t.dim << "\n";
  return kExitOk;
}

int cmd_liaison(const CliConfig& cfg, const SimplicialComplex& complex, std::ostream& out) {
  if (cfg.facets_a.empty()) {
    throw Error(ErrorKind::InvalidArgument, "liaison needs --facets-a");
  }
  const auto partition =
      FacetPartition::from_a(complex, to_zero_based(cfg.facets_a, complex, "--facets-a"));
  const auto report = lefschetz_report(complex, partition, cfg.field);
  const auto links = link_restriction_check(complex, partition, cfg.field);
  const auto cm = cm_linkage_check(complex, partition, cfg.field);

  json tconn = {{"premises_met", false}, {"connected", nullptr}, {"components", json::array()}};
  std::string tconn_message;
  try {
    const auto check = tconn_check(complex, partition, cfg.field);
    tconn["premises_met"] = true;
    tconn["connected"] = check.connected;
    tconn["components"] = check.components;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::HypothesesNotMet) throw;
    tconn_message = e.what();
  }
  tconn["message"] = tconn_message;

  if (cfg.json) {
    json j = serial::lefschetz(report);
    j["field"] = cfg.field.name();
    j["partition"] = serial::partition(partition);
    j["link_restriction"] = serial::link_restriction(links);
    j["cm_linkage"] = serial::cm_linkage(cm);
    j["tconn"] = tconn;
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "field: " << cfg.field.name() << "\nA = {" << join(partition.a) << "}, B = {"
      << join(partition.b) << "}\n"
      << "hypotheses: quasi_gorenstein=" << yes_no(report.hypotheses.quasi_gorenstein)
      << " buchsbaum_A=" << yes_no(report.hypotheses.buchsbaum_a)
      << (report.hypotheses.hold() ? "" : "  (hypotheses not met)") << "\n"
      << "sequence (d = " << report.d << "):\n";
  for (const auto& t : report.terms) out << "  " << t.label << ": " << t.dim << "\n";
  out << "alternating_sum: " << report.alternating_sum
      << "\nalternating_sum with final term H~_1(Delta_A): " << report.alternating_sum_final_h1
      << "\nneighbor_bound_ok: " << yes_no(report.neighbor_bound_ok) << "\nduality pairs:\n";
  for (const auto& p : report.duality_pairs) {
    out << "  i=" << p.i << ": H^i(Delta,Delta_B)=" << p.relative_cohomology
        << " H~_{d-i}(Delta_A)=" << p.homology_a << (p.equal() ? "" : "  MISMATCH") << "\n";
  }
  out << "link restriction: " << yes_no(links.holds)
      << (links.hypotheses.hold() ? "" : " (hypotheses not met)") << "\n";
  for (const auto& m : links.mismatches) {
    out << "  " << m.sigma << " degree " << m.degree << ": " << m.dim_delta << " vs " << m.dim_b
        << "\n";
  }
  out << "CM linkage: "
      << (cm.checked ? yes_no(cm.holds) : "skipped (needs quasi-Gorenstein Delta, CM Delta_A)")
      << "\n";
  out << "Delta_B connectivity: ";
  if (tconn["premises_met"].get<bool>()) {
    out << (tconn["connected"].get<bool>() ? "connected" : "DISCONNECTED") << "\n";
  } else {
    out << "premises not met: " << tconn_message << "\n";
  }
  return kExitOk;
}

int cmd_graph(const CliConfig& cfg, const SimplicialComplex& complex, std::ostream& out) {
  const auto graph = gamma_graph(complex, cfg.t);
  const auto connectivity = connectivity_report(graph);
  if (cfg.dot) {
    out << serial::gamma_dot(graph, complex);
    return kExitOk;
  }
  std::optional<bool> removal;
  std::set<std::size_t> removed;
  if (cfg.remove) {
    removed = to_zero_based(*cfg.remove, complex, "--remove");
    removal = removal_experiment(complex, removed);
  }
  if (cfg.json) {
    json j = serial::gamma(graph, connectivity);
    if (removal) {
      json idx = json::array();
      for (std::size_t i : removed) idx.push_back(i + 1);
      j["removal"] = {{"removed", idx}, {"remainder_connected", *removal}};
    }
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "Gamma_" << graph.t << ": " << graph.vertex_count << " facets, " << graph.edges.size()
      << " edges\n";
  const auto adj = graph.adjacency();
  for (std::size_t v = 0; v < adj.size(); ++v) {
    out << "  " << v + 1 << ":";
    for (std::size_t w : adj[v]) out << " " << w + 1;
    out << "\n";
  }
  out << "components: " << connectivity.components
      << "\ntwo_connected: " << yes_no(connectivity.two_connected)
      << (connectivity.degenerate ? " (at most two vertices)" : "") << "\n";
  if (removal) {
    out << "after removing {" << join(removed) << "}: "
        << (*removal ? "connected" : "DISCONNECTED") << "\n";
  }
  return kExitOk;
}

int cmd_collapse(const CliConfig& cfg, const SimplicialComplex& complex, std::ostream& out) {
  SimplicialComplex start = complex;
  std::set<Vertex> forbidden;
  if (!cfg.facets_a.empty()) {
    const auto partition =
        FacetPartition::from_a(complex, to_zero_based(cfg.facets_a, complex, "--facets-a"));
    start = partition.complex_a(complex);
    if (cfg.forbid.empty()) {
      for (Vertex v : partition.complex_b(complex).used_vertices()) forbidden.insert(v);
    }
  }
  for (long long v : cfg.forbid) {
    if (v <= 0 || static_cast<std::size_t>(v) > complex.n_vertices()) {
      throw Error(ErrorKind::VertexOutOfRange, "--forbid: vertex " + std::to_string(v));
    }
    forbidden.insert(static_cast<Vertex>(v));
  }
  if (forbidden.empty()) {
    throw Error(ErrorKind::InvalidArgument, "collapse needs --forbid or --facets-a");
  }

  const auto outcome = collapse_onto(start, forbidden);
  const auto verification = verify_trace(outcome.trace, cfg.field);
  const SimplicialComplex target = faces_avoiding(start, forbidden);
  const auto betti_start = reduced_betti(start, cfg.field, cfg.face_cap);
  const auto betti_target = reduced_betti(target, cfg.field, cfg.face_cap);

  if (cfg.json) {
    json j = serial::collapse(outcome, verification);
    j["field"] = cfg.field.name();
    j["forbidden"] = forbidden;
    j["target"] = serial::complex(target);
    j["betti_start"] = serial::betti(betti_start);
    j["betti_target"] = serial::betti(betti_target);
    j["betti_equal"] = betti_start == betti_target;
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << (outcome.succeeded ? "SUCCESS" : "FAILURE") << "\n";
  if (!outcome.succeeded) out << "reason: " << outcome.reason << "\n";
  out << "start: " << start << "\nend: " << outcome.trace.end << "\ntarget: " << target
      << "\nsteps" << (outcome.succeeded ? "" : " (partial)") << ":\n";
  for (const auto& s : outcome.trace.steps) out << "  " << s.free_face << " < " << s.coface << "\n";
  out << "trace replay: " << (verification.valid ? "valid" : "invalid")
      << (verification.message.empty() ? "" : " (" + verification.message + ")") << "\n"
      << "reduced Betti of start vs target: " << betti_start.to_string() << " vs "
      << betti_target.to_string() << (betti_start == betti_target ? "" : "  MISMATCH") << "\n";
  return kExitOk;
}

}  // namespace

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const SimplicialComplex complex = read_facet_file(config.input);
    switch (config.command) {
      case Command::Classify: return cmd_classify(config, complex, out);
      case Command::Homology: return cmd_homology(config, complex, out);
      case Command::Hochster: return cmd_hochster(config, complex, out);
      case Command::Liaison: return cmd_liaison(config, complex, out);
      case Command::Graph: return cmd_graph(config, complex, out);
      case Command::Collapse: return cmd_collapse(config, complex, out);
    }
  } catch (const ParseError& e) {
    err << config.input << ": " << e.what() << "\n";
    return kExitError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::CapacityExceeded ? kExitCapacity : kExitError;
  }
  return kExitError;
}

int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stanley-Reisner liaison and quasi-Gorenstein checks on simplicial complexes",
               "qgor"};
  app.require_subcommand(1);

  CliConfig cfg;
  std::string field_text = "q";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input, "facet file")->required();
    sub->add_option("--field", field_text, "q for the rationals or a prime p")
        ->capture_default_str();
    sub->add_flag("--json", cfg.json, "emit JSON");
    sub->add_option("--max-faces", cfg.face_cap, "face enumeration cap")->capture_default_str();
  };

  auto* classify_cmd = app.add_subcommand("classify", "classify the complex");
  add_common(classify_cmd);
  classify_cmd->add_flag("--list-facets", cfg.list_facets,
                         "print facets with their 1-based positions");

  auto* homology_cmd = app.add_subcommand("homology", "reduced Betti numbers");
  add_common(homology_cmd);

  auto* hochster_cmd = app.add_subcommand("hochster", "local cohomology table via links");
  add_common(hochster_cmd);
  hochster_cmd->add_option("--serre", cfg.serre_ell, "check (S_ell)")->capture_default_str();

  auto* liaison_cmd = app.add_subcommand("liaison", "facet-partition liaison checks");
  add_common(liaison_cmd);
  liaison_cmd->add_option("--facets-a", cfg.facets_a, "1-based facet positions of A")
      ->delimiter(',')
      ->required();

  auto* graph_cmd = app.add_subcommand("graph", "Gamma_t facet graphs");
  add_common(graph_cmd);
  graph_cmd->add_option("--t", cfg.t, "height bound t")->capture_default_str();
  graph_cmd->add_flag("--dot", cfg.dot, "emit Graphviz DOT");
  std::vector<std::size_t> remove;
  auto* remove_opt = graph_cmd->add_option("--remove", remove,
                                           "1-based facets to delete from Gamma_1")
                         ->delimiter(',');

  auto* collapse_cmd = app.add_subcommand("collapse", "collapse away forbidden vertices");
  add_common(collapse_cmd);
  collapse_cmd->add_option("--forbid", cfg.forbid, "vertices to collapse away")->delimiter(',');
  collapse_cmd->add_option("--facets-a", cfg.facets_a,
                           "treat the input as Delta and start from these facets")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
    cfg.field = FieldSpec::parse(field_text);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  if (*remove_opt) cfg.remove = remove;

  if (app.got_subcommand(classify_cmd)) cfg.command = Command::Classify;
  if (app.got_subcommand(homology_cmd)) cfg.command = Command::Homology;
  if (app.got_subcommand(hochster_cmd)) cfg.command = Command::Hochster;
  if (app.got_subcommand(liaison_cmd)) cfg.command = Command::Liaison;
  if (app.got_subcommand(graph_cmd)) cfg.command = Command::Graph;
  if (app.got_subcommand(collapse_cmd)) cfg.command = Command::Collapse;
  return run(cfg, out, err);
}

}  // namespace qgor::cli
