#include "qgor/graphs.hpp"

#include <algorithm>
#include <functional>

#include "qgor/error.hpp"

namespace qgor {

std::vector<std::vector<std::size_t>> GammaGraph::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(vertex_count);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

bool GammaGraph::has_edge(std::size_t a, std::size_t b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

bool GammaGraph::is_subgraph_of(const GammaGraph& other) const {
  return vertex_count == other.vertex_count &&
         std::includes(other.edges.begin(), other.edges.end(), edges.begin(), edges.end());
}

GammaGraph gamma_graph(const SimplicialComplex& complex, int t) {
  if (!complex.is_pure()) throw Error(ErrorKind::NotPure, "Γ_t needs a pure complex");
  const int top = complex.dimension() + 1;
  if (t < 0 || t > top) {
    throw Error(ErrorKind::TOutOfRange,
                "t = " + std::to_string(t) + " outside 0.." + std::to_string(top));
  }
  GammaGraph g;
  g.t = t;
  const auto facets = complex.facets();
  g.vertex_count = facets.size();
  const auto needed = static_cast<std::size_t>(top - t);
  for (std::size_t a = 0; a < facets.size(); ++a) {
    for (std::size_t b = a + 1; b < facets.size(); ++b) {
      if (facets[a].intersection(facets[b]).size() >= needed) g.edges.emplace_back(a, b);
    }
  }
  return g;
}

ConnectivityReport connectivity_report(const GammaGraph& graph) {
  const std::size_t n = graph.vertex_count;
  const auto adj = graph.adjacency();
  ConnectivityReport report;
  report.degenerate = n <= 2;

  // Tarjan's low-link; recursion depth is bounded by the facet count.
  std::vector<std::size_t> order(n, 0);
  std::vector<std::size_t> low(n, 0);
  std::vector<bool> is_cut(n, false);
  std::size_t clock = 0;
  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t u, std::size_t parent) {
    order[u] = low[u] = ++clock;
    std::size_t children = 0;
    for (std::size_t w : adj[u]) {
      if (order[w] == 0) {
        ++children;
        dfs(w, u);
        low[u] = std::min(low[u], low[w]);
        if (parent != n && low[w] >= order[u]) is_cut[u] = true;
      } else if (w != parent) {
        low[u] = std::min(low[u], order[w]);
      }
    }
    if (parent == n && children > 1) is_cut[u] = true;
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (order[v] == 0) {
      ++report.components;
      dfs(v, n);
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (is_cut[v]) report.articulation_points.push_back(v);
  }
  report.two_connected = report.components == 1 && report.articulation_points.empty();
  return report;
}

bool removal_experiment(const SimplicialComplex& complex, const std::set<std::size_t>& removed) {
  const GammaGraph gamma2 = gamma_graph(complex, 2);
  for (std::size_t i : removed) {
    if (i >= complex.facet_count()) {
      throw Error(ErrorKind::IndexOutOfRange, "facet index " + std::to_string(i));
    }
  }
  for (auto a = removed.begin(); a != removed.end(); ++a) {
    for (auto b = std::next(a); b != removed.end(); ++b) {
      if (gamma2.has_edge(*a, *b)) {
        throw Error(ErrorKind::GammaTwoNotIsolated,
                    "facets " + complex.facets()[*a].to_string() + " and " +
                        complex.facets()[*b].to_string() + " are adjacent in Γ_2");
      }
    }
  }
  const GammaGraph gamma1 = gamma_graph(complex, 1);
  const auto adj = gamma1.adjacency();
  std::vector<bool> seen(gamma1.vertex_count, false);
  for (std::size_t i : removed) seen[i] = true;
  std::size_t start = 0;
  while (start < seen.size() && seen[start]) ++start;
  if (start == seen.size()) return true;
  std::vector<std::size_t> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t w : adj[u]) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool s) { return s; });
}

}  // namespace qgor
