#include "qgor/liaison.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "qgor/classify.hpp"
#include "qgor/error.hpp"
#include "qgor/hochster.hpp"
#include "qgor/homology.hpp"

namespace qgor {

namespace {

std::string describe(const std::set<std::size_t>& indices) {
  std::string out = "{";
  for (std::size_t i : indices) {
    if (out.size() > 1) out += ",";
    out += std::to_string(i);
  }
  return out + "}";
}

LefschetzHypotheses hypotheses_of(const SimplicialComplex& complex,
                                  const SimplicialComplex& complex_a, const FieldSpec& field) {
  LefschetzHypotheses h;
  h.quasi_gorenstein = is_quasi_gorenstein(complex, field);
  h.buchsbaum_a = is_buchsbaum(complex_a, field).holds;
  return h;
}

}  // namespace

FacetPartition FacetPartition::from_a(const SimplicialComplex& complex, std::set<std::size_t> a) {
  FacetPartition p;
  for (std::size_t i = 0; i < complex.facet_count(); ++i) {
    if (!a.contains(i)) p.b.insert(i);
  }
  p.a = std::move(a);
  p.validate(complex);
  return p;
}

void FacetPartition::validate(const SimplicialComplex& complex) const {
  const std::size_t n = complex.facet_count();
  if (a.empty() || b.empty()) {
    throw Error(ErrorKind::InvalidPartition, "both blocks must be nonempty");
  }
  for (const auto* block : {&a, &b}) {
    if (*block->rbegin() >= n) {
      throw Error(ErrorKind::InvalidPartition,
                  "facet index " + std::to_string(*block->rbegin()) + " out of range for " +
                      std::to_string(n) + " facets");
    }
  }
  std::vector<std::size_t> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  if (!common.empty()) {
    throw Error(ErrorKind::InvalidPartition,
                "facet " + std::to_string(common.front()) + " lies in both blocks");
  }
  if (a.size() + b.size() != n) {
    throw Error(ErrorKind::InvalidPartition,
                "blocks " + describe(a) + " and " + describe(b) + " do not cover all facets");
  }
}

SimplicialComplex FacetPartition::complex_a(const SimplicialComplex& complex) const {
  return restrict_to_facets(complex, a);
}

SimplicialComplex FacetPartition::complex_b(const SimplicialComplex& complex) const {
  return restrict_to_facets(complex, b);
}

bool LefschetzReport::duality_pairs_equal() const noexcept {
  return std::all_of(duality_pairs.begin(), duality_pairs.end(),
                     [](const DualityPair& p) { return p.equal(); });
}

LefschetzReport lefschetz_report(const SimplicialComplex& complex, const FacetPartition& partition,
                                 const FieldSpec& field) {
  if (!complex.is_pure()) throw Error(ErrorKind::NotPure, "the complex must be pure");
  partition.validate(complex);
  const SimplicialComplex delta_a = partition.complex_a(complex);
  const SimplicialComplex delta_b = partition.complex_b(complex);

  LefschetzReport report;
  const int d = complex.dimension();
  report.d = d;
  report.hypotheses = hypotheses_of(complex, delta_a, field);

  const BettiVector betti = reduced_betti(complex, field);
  const BettiVector betti_a = reduced_betti(delta_a, field);
  const BettiVector betti_b = reduced_betti(delta_b, field);

  auto cohom_b = [&](int i) {
    return LefschetzTerm{"H~^" + std::to_string(i) + "(Delta_B)", betti_b[i]};
  };
  auto hom_a = [&](int j) {
    return LefschetzTerm{"H~_" + std::to_string(j) + "(Delta_A)", betti_a[j]};
  };
  if (d >= 1) {
    report.terms.push_back(cohom_b(0));
    report.terms.push_back(hom_a(d - 1));
    for (int i = 1; i <= d - 1; ++i) {
      report.terms.push_back({"H~^" + std::to_string(i) + "(Delta)", betti[i]});
      report.terms.push_back(cohom_b(i));
      report.terms.push_back(hom_a(d - 1 - i));
    }
  }

  const auto& terms = report.terms;
  report.neighbor_bound_ok = true;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const long long sign = k % 2 == 0 ? 1 : -1;
    report.alternating_sum += sign * static_cast<long long>(terms[k].dim);
    const std::uint64_t left = k > 0 ? terms[k - 1].dim : 0;
    const std::uint64_t right = k + 1 < terms.size() ? terms[k + 1].dim : 0;
    if (terms[k].dim > left + right) report.neighbor_bound_ok = false;
  }
  if (!terms.empty()) {
    report.final_term_h1 = betti_a[1];
    const long long sign = (terms.size() - 1) % 2 == 0 ? 1 : -1;
    report.alternating_sum_final_h1 =
        report.alternating_sum - sign * static_cast<long long>(terms.back().dim) +
        sign * static_cast<long long>(report.final_term_h1);
  }

  const BettiVector relative = relative_betti(complex, delta_b, field);
  for (int i = 1; i <= d - 1; ++i) {
    report.duality_pairs.push_back({i, relative[i], betti_a[d - i]});
  }
  return report;
}

LinkRestrictionReport link_restriction_check(const SimplicialComplex& complex,
                                             const FacetPartition& partition,
                                             const FieldSpec& field) {
  partition.validate(complex);
  const SimplicialComplex delta_a = partition.complex_a(complex);
  const SimplicialComplex delta_b = partition.complex_b(complex);

  LinkRestrictionReport report;
  report.hypotheses = hypotheses_of(complex, delta_a, field);

  LinkBettiCache cache(complex, field);
  LinkBettiCache cache_b(delta_b, field);
  for (const Face& sigma : complex.all_faces()) {
    if (sigma.empty()) continue;
    const int top = cache.link_dimension(sigma);
    const bool in_b = delta_b.contains(sigma);
    for (int j = -1; j < top; ++j) {
      const std::uint64_t dim_delta = cache.of(sigma)[j];
      const std::uint64_t dim_b = in_b ? cache_b.of(sigma)[j] : 0;
      if (dim_delta != dim_b) report.mismatches.push_back({sigma, j, dim_delta, dim_b});
    }
  }
  report.holds = report.mismatches.empty();
  return report;
}

CmLinkageReport cm_linkage_check(const SimplicialComplex& complex, const FacetPartition& partition,
                                 const FieldSpec& field) {
  partition.validate(complex);
  const SimplicialComplex delta_a = partition.complex_a(complex);
  const SimplicialComplex delta_b = partition.complex_b(complex);

  CmLinkageReport report;
  report.quasi_gorenstein = is_quasi_gorenstein(complex, field);
  report.cohen_macaulay_a = reisner_cohen_macaulay(delta_a, field);
  report.checked = report.quasi_gorenstein && report.cohen_macaulay_a;
  if (!report.checked) return report;

  const LocalCohomologyTable table = local_cohomology_table(complex, field);
  const LocalCohomologyTable table_b = local_cohomology_table(delta_b, field);
  const int krull = table.krull_dim();

  std::map<std::pair<int, Face>, std::pair<std::uint64_t, std::uint64_t>> merged;
  for (const auto& e : table.entries()) {
    if (e.i < krull) merged[{e.i, e.sigma}].first = e.dim;
  }
  for (const auto& e : table_b.entries()) {
    if (e.i < krull) merged[{e.i, e.sigma}].second = e.dim;
  }
  for (const auto& [key, dims] : merged) {
    if (dims.first != dims.second) {
      report.mismatch = TableMismatch{key.first, key.second, dims.first, dims.second};
      break;
    }
  }
  report.holds = !report.mismatch.has_value();
  return report;
}

ConnectivityCheck tconn_check(const SimplicialComplex& complex, const FacetPartition& partition,
                              const FieldSpec& field) {
  partition.validate(complex);
  const SimplicialComplex delta_a = partition.complex_a(complex);
  const SimplicialComplex delta_b = partition.complex_b(complex);

  std::vector<std::string> failed;
  if (!is_quasi_gorenstein(complex, field)) {
    failed.push_back("the complex is not quasi-Gorenstein over " + field.name());
  }
  if (!is_buchsbaum(delta_a, field).holds) {
    failed.push_back("Delta_A is not Buchsbaum over " + field.name());
  }
  if (static_cast<long long>(partition.a.size()) > complex.dimension()) {
    failed.push_back("|A| = " + std::to_string(partition.a.size()) + " exceeds dim = " +
                     std::to_string(complex.dimension()));
  }
  if (!failed.empty()) {
    std::string message = failed.front();
    for (std::size_t k = 1; k < failed.size(); ++k) message += "; " + failed[k];
    throw Error(ErrorKind::HypothesesNotMet, message);
  }

  // Components by union-find over the facets of Δ_B.
  const std::size_t n = complex.n_vertices();
  std::vector<std::size_t> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Face& f : delta_b.facets()) {
    for (std::size_t k = 1; k < f.size(); ++k) parent[find(f[k])] = find(f[0]);
  }
  std::map<std::size_t, std::vector<Vertex>> groups;
  for (Vertex v : delta_b.used_vertices()) groups[find(v)].push_back(v);

  ConnectivityCheck result;
  for (auto& [root, vertices] : groups) result.components.push_back(std::move(vertices));
  std::sort(result.components.begin(), result.components.end());
  result.connected = result.components.size() <= 1;
  return result;
}

}  // namespace qgor
