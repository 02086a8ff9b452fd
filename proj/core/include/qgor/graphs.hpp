#pragma once

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "qgor/simplicial_complex.hpp"

namespace qgor {

/// Γ_t on the facets of a pure complex: facets σ, τ are adjacent when the sum
/// of their minimal primes has height ≤ t in k[Δ], i.e. |σ ∩ τ| ≥ dim Δ + 1 - t.
/// Vertices are 0-based canonical facet positions.
struct GammaGraph {
  int t = 0;
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (a, b) with a < b, sorted

  std::vector<std::vector<std::size_t>> adjacency() const;
  bool has_edge(std::size_t a, std::size_t b) const;
  /// Every edge of this graph is an edge of `other` (same vertex set).
  bool is_subgraph_of(const GammaGraph& other) const;
};

/// Throws Error(NotPure) or Error(TOutOfRange) unless 0 ≤ t ≤ dim Δ + 1.
GammaGraph gamma_graph(const SimplicialComplex& complex, int t);

struct ConnectivityReport {
  std::size_t components = 0;
  bool two_connected = false;
  /// Graphs on at most two vertices: 2-connectivity holds only trivially.
  bool degenerate = false;
  std::vector<std::size_t> articulation_points;
};

/// Components and articulation points by depth-first search.
ConnectivityReport connectivity_report(const GammaGraph& graph);

/// Removes the facets in `removed` from Γ_1 and reports whether what remains is
/// connected (an empty remainder counts as connected). Requires Γ_2 restricted
/// to `removed` to be edgeless; throws Error(GammaTwoNotIsolated) naming the
/// first offending pair, Error(IndexOutOfRange), Error(NotPure) or
/// Error(TOutOfRange) when dim Δ < 1.
bool removal_experiment(const SimplicialComplex& complex, const std::set<std::size_t>& removed);

}  // namespace qgor
