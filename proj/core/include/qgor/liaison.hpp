#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qgor/field.hpp"
#include "qgor/simplicial_complex.hpp"

namespace qgor {

/// A split of the facets of Δ into two nonempty blocks, by 0-based canonical
/// facet position. Δ_A and Δ_B are the subcomplexes the blocks generate.
struct FacetPartition {
  std::set<std::size_t> a;
  std::set<std::size_t> b;

  /// B is the complement of A. Throws Error(InvalidPartition).
  static FacetPartition from_a(const SimplicialComplex& complex, std::set<std::size_t> a);

  /// Throws Error(InvalidPartition) unless A, B are nonempty, disjoint and
  /// cover all facet positions.
  void validate(const SimplicialComplex& complex) const;

  SimplicialComplex complex_a(const SimplicialComplex& complex) const;
  SimplicialComplex complex_b(const SimplicialComplex& complex) const;
};

struct LefschetzTerm {
  std::string label;  // "H~^i(Delta_B)", "H~_j(Delta_A)" or "H~^i(Delta)"
  std::uint64_t dim;
};

struct DualityPair {
  int i;
  std::uint64_t relative_cohomology;  // dim H^i(Δ, Δ_B)
  std::uint64_t homology_a;           // dim H̃_{d-i}(Δ_A)
  bool equal() const noexcept { return relative_cohomology == homology_a; }
};

struct LefschetzHypotheses {
  bool quasi_gorenstein = false;  // Δ
  bool buchsbaum_a = false;       // Δ_A
  bool hold() const noexcept { return quasi_gorenstein && buchsbaum_a; }
};

/// Dimensions along 0 → H̃^0(Δ_B) → H̃_{d-1}(Δ_A) → H̃^1(Δ) → H̃^1(Δ_B) → …
/// → H̃^{d-1}(Δ) → H̃^{d-1}(Δ_B) → H̃_0(Δ_A) → 0 with d = dim Δ.
struct LefschetzReport {
  int d = 0;
  std::vector<LefschetzTerm> terms;
  long long alternating_sum = 0;
  /// Alternating sum with the final term read as H̃_1(Δ_A) instead of H̃_0(Δ_A).
  long long alternating_sum_final_h1 = 0;
  std::uint64_t final_term_h1 = 0;
  /// Every term is at most the sum of its neighbours (zero beyond the ends).
  bool neighbor_bound_ok = false;
  std::vector<DualityPair> duality_pairs;
  LefschetzHypotheses hypotheses;

  bool duality_pairs_equal() const noexcept;
};

/// Computes every term regardless of whether the hypotheses hold.
/// Throws Error(NotPure) or Error(InvalidPartition).
LefschetzReport lefschetz_report(const SimplicialComplex& complex, const FacetPartition& partition,
                                 const FieldSpec& field);

struct LinkMismatch {
  Face sigma;
  int degree;               // cohomological degree in the links
  std::uint64_t dim_delta;  // dim H̃^degree(lk_Δ σ)
  std::uint64_t dim_b;      // dim H̃^degree(lk_{Δ_B} σ), 0 when σ ∉ Δ_B
  bool operator==(const LinkMismatch&) const = default;
};

struct LinkRestrictionReport {
  bool holds = false;
  LefschetzHypotheses hypotheses;
  std::vector<LinkMismatch> mismatches;
};

/// For every nonempty σ ∈ Δ and every degree j < dim lk_Δ σ (Hochster index
/// below the Krull dimension), H̃^j(lk_Δ σ) and H̃^j(lk_{Δ_B} σ) have equal
/// dimension, the latter read as 0 when σ ∉ Δ_B. Runs even when the
/// hypotheses fail; they are reported alongside.
LinkRestrictionReport link_restriction_check(const SimplicialComplex& complex,
                                             const FacetPartition& partition,
                                             const FieldSpec& field);

struct TableMismatch {
  int i;
  Face sigma;
  std::uint64_t dim_delta;
  std::uint64_t dim_b;
  bool operator==(const TableMismatch&) const = default;
};

struct CmLinkageReport {
  bool quasi_gorenstein = false;  // Δ
  bool cohen_macaulay_a = false;  // Δ_A
  /// Both preconditions hold; otherwise the comparison is skipped.
  bool checked = false;
  bool holds = false;
  std::optional<TableMismatch> mismatch;
};

/// Compares the local cohomology tables of Δ and Δ_B entrywise below the
/// Krull dimension of k[Δ].
CmLinkageReport cm_linkage_check(const SimplicialComplex& complex, const FacetPartition& partition,
                                 const FieldSpec& field);

struct ConnectivityCheck {
  bool connected = false;
  /// Vertex sets of the components of Δ_B, each ascending.
  std::vector<std::vector<Vertex>> components;
};

/// Δ_B is connected when Δ is quasi-Gorenstein, Δ_A is Buchsbaum and
/// |A| ≤ dim Δ. Throws Error(HypothesesNotMet) naming each failed premise.
ConnectivityCheck tconn_check(const SimplicialComplex& complex, const FacetPartition& partition,
                              const FieldSpec& field);

}  // namespace qgor
