#include "qgor/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "qgor/error.hpp"
#include "qgor/hochster.hpp"
#include "qgor/homology.hpp"

namespace qgor {

namespace {

void require_ordinary(const SimplicialComplex& complex) {
  if (complex.kind() == ComplexKind::Void) {
    throw Error(ErrorKind::VoidComplex, "the complex has no faces");
  }
  if (complex.kind() == ComplexKind::Empty) {
    throw Error(ErrorKind::EmptyComplex, "the complex has only the empty face");
  }
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

bool has_sphere_homology(const BettiVector& betti, int dim) {
  return betti[dim] == 1 && betti.total() == 1;
}

bool top_homology_nonzero(const SimplicialComplex& complex, const FieldSpec& field) {
  return reduced_betti(complex, field)[complex.dimension()] != 0;
}

}  // namespace

std::size_t connected_components(const SimplicialComplex& complex) {
  const std::size_t n = complex.n_vertices();
  std::vector<std::size_t> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  for (const Face& f : complex.facets()) {
    for (std::size_t i = 1; i < f.size(); ++i) {
      parent[find_root(parent, f[i])] = find_root(parent, f[0]);
    }
  }
  std::size_t count = 0;
  for (Vertex v : complex.used_vertices()) {
    if (find_root(parent, v) == v) ++count;
  }
  return count;
}

NormalPseudomanifoldReport normal_pseudomanifold_report(const SimplicialComplex& complex) {
  require_ordinary(complex);
  NormalPseudomanifoldReport report;
  const int d = complex.dimension();

  report.pure = complex.is_pure();
  if (!report.pure) {
    report.impure_facet = Witness{{complex.facets().front()}, std::nullopt,
                                  "facet of dimension " +
                                      std::to_string(complex.facets().front().dimension()) +
                                      " in a complex of dimension " + std::to_string(d)};
  }

  report.normal = true;
  for (int k = -1; k <= d - 2 && report.normal; ++k) {
    for (const Face& sigma : complex.faces_of_dimension(k)) {
      const auto components = connected_components(link(complex, sigma));
      if (components > 1) {
        report.normal = false;
        report.disconnected_link =
            Witness{{sigma}, std::nullopt,
                    "link has " + std::to_string(components) + " connected components"};
        break;
      }
    }
  }

  std::map<Face, std::vector<Face>> cofacets;
  for (const Face& f : complex.facets()) {
    if (f.dimension() != d) continue;
    for (Vertex v : f.vertices()) cofacets[f.without(v)].push_back(f);
  }
  report.ridge_condition = true;
  for (const Face& ridge : complex.faces_of_dimension(d - 1)) {
    auto it = cofacets.find(ridge);
    const std::size_t count = it == cofacets.end() ? 0 : it->second.size();
    if (count != 2) {
      report.ridge_condition = false;
      Witness w{{ridge}, std::nullopt,
                "ridge lies in " + std::to_string(count) + " facets of dimension " +
                    std::to_string(d)};
      if (it != cofacets.end()) w.faces.insert(w.faces.end(), it->second.begin(), it->second.end());
      report.bad_ridge = std::move(w);
      break;
    }
  }

  report.normal_pseudomanifold = report.pure && report.normal && report.ridge_condition;
  return report;
}

bool is_strongly_connected(const SimplicialComplex& complex) {
  if (!complex.is_pure()) throw Error(ErrorKind::NotPure, "strong connectivity needs purity");
  const auto facets = complex.facets();
  if (facets.size() <= 1) return true;
  const std::size_t ridge_size = facets.front().size() - 1;
  std::vector<bool> seen(facets.size(), false);
  std::queue<std::size_t> queue;
  queue.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const std::size_t a = queue.front();
    queue.pop();
    for (std::size_t b = 0; b < facets.size(); ++b) {
      if (seen[b] || facets[a].intersection(facets[b]).size() != ridge_size) continue;
      seen[b] = true;
      ++reached;
      queue.push(b);
    }
  }
  return reached == facets.size();
}

bool is_orientable(const SimplicialComplex& complex) {
  require_ordinary(complex);
  const auto npm = normal_pseudomanifold_report(complex);
  if (!npm.pure || !npm.ridge_condition || !is_strongly_connected(complex)) {
    throw Error(ErrorKind::NotAPseudomanifold,
                "orientability is only defined here for pseudomanifolds");
  }
  return top_homology_nonzero(complex, FieldSpec::rationals());
}

HomologyManifoldResult is_homology_manifold(const SimplicialComplex& complex,
                                            const FieldSpec& field) {
  require_ordinary(complex);
  if (!complex.is_pure()) throw Error(ErrorKind::NotPure, "homology manifolds are pure");
  LinkBettiCache cache(complex, field);
  for (const Face& sigma : complex.all_faces()) {
    if (sigma.empty()) continue;
    const int m = cache.link_dimension(sigma);
    if (!has_sphere_homology(cache.of(sigma), m)) {
      return {false, false,
              Witness{{sigma}, std::nullopt,
                      "link homology " + cache.of(sigma).to_string() + " is not that of S^" +
                          std::to_string(m)}};
    }
  }
  const bool sphere = has_sphere_homology(reduced_betti(complex, field), complex.dimension());
  std::optional<Witness> witness;
  if (!sphere) {
    witness = Witness{{Face{}}, std::nullopt, "the complex itself is not a homology sphere"};
  }
  return {true, sphere, witness};
}

bool is_quasi_gorenstein(const SimplicialComplex& complex, const FieldSpec& field) {
  require_ordinary(complex);
  return normal_pseudomanifold_report(complex).normal_pseudomanifold &&
         top_homology_nonzero(complex, field);
}

bool is_gorenstein(const SimplicialComplex& complex, const FieldSpec& field) {
  require_ordinary(complex);
  const SimplicialComplex stripped = core(complex);
  if (stripped.kind() == ComplexKind::Empty) return true;
  return is_quasi_gorenstein(stripped, field) && reisner_cohen_macaulay(stripped, field);
}

ClassificationReport classify(const SimplicialComplex& complex, const FieldSpec& field) {
  require_ordinary(complex);
  ClassificationReport r;
  r.field = field;
  const int d = complex.dimension();

  const auto npm = normal_pseudomanifold_report(complex);
  r.pure = npm.pure;
  r.normal = npm.normal;
  r.pseudomanifold_ridge_condition = npm.ridge_condition;
  r.normal_pseudomanifold = npm.normal_pseudomanifold;
  if (npm.impure_facet) r.witnesses["pure"] = *npm.impure_facet;
  if (npm.disconnected_link) r.witnesses["normal"] = *npm.disconnected_link;
  if (npm.bad_ridge) r.witnesses["pseudomanifold_ridge_condition"] = *npm.bad_ridge;
  if (!npm.normal_pseudomanifold) {
    r.witnesses["normal_pseudomanifold"] =
        npm.bad_ridge ? *npm.bad_ridge
                      : (npm.disconnected_link ? *npm.disconnected_link : *npm.impure_facet);
  }

  r.strongly_connected = r.pure && is_strongly_connected(complex);
  if (!r.strongly_connected) {
    r.witnesses["strongly_connected"] =
        Witness{{}, std::nullopt, r.pure ? "facet-ridge graph is disconnected" : "not pure"};
  }

  if (r.pure && r.pseudomanifold_ridge_condition && r.strongly_connected) {
    r.orientable = is_orientable(complex);
    if (!r.orientable) {
      r.witnesses["orientable"] =
          Witness{{}, d, "top rational homology vanishes"};
    }
  } else {
    r.witnesses["orientable"] = Witness{{}, std::nullopt, "not a pseudomanifold"};
  }

  const auto buchsbaum = is_buchsbaum(complex, field);
  r.buchsbaum = buchsbaum.holds;
  if (buchsbaum.witness) {
    r.witnesses["buchsbaum"] = Witness{{buchsbaum.witness->sigma}, buchsbaum.witness->degree,
                                       "link homology below the link dimension"};
  }

  if (r.pure) {
    const auto hm = is_homology_manifold(complex, field);
    r.homology_manifold = hm.manifold;
    r.homology_sphere = hm.sphere;
    if (hm.witness) {
      r.witnesses[hm.manifold ? "homology_sphere" : "homology_manifold"] = *hm.witness;
      if (!hm.manifold) r.witnesses["homology_sphere"] = *hm.witness;
    }
  } else {
    r.witnesses["homology_manifold"] = Witness{{}, std::nullopt, "not pure"};
    r.witnesses["homology_sphere"] = Witness{{}, std::nullopt, "not pure"};
  }

  const auto depth = depth_report(complex, field);
  r.cohen_macaulay = depth.is_cohen_macaulay;
  if (depth.witness) {
    r.witnesses["cohen_macaulay"] =
        Witness{{depth.witness->sigma}, depth.witness->i,
                "nonzero local cohomology below the Krull dimension (degree is the cohomological "
                "index)"};
  }

  const bool top = top_homology_nonzero(complex, field);
  r.quasi_gorenstein = r.normal_pseudomanifold && top;
  if (!r.quasi_gorenstein) {
    r.witnesses["quasi_gorenstein"] =
        r.normal_pseudomanifold ? Witness{{}, d, "top homology vanishes over " + field.name()}
                                : Witness{{}, std::nullopt, "not a normal pseudomanifold"};
  }

  r.gorenstein = is_gorenstein(complex, field);
  if (!r.gorenstein) {
    r.witnesses["gorenstein"] =
        Witness{{}, std::nullopt, "core is not a homology sphere over " + field.name()};
  }
  return r;
}

}  // namespace qgor
