#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "qgor/field.hpp"
#include "qgor/homology.hpp"
#include "qgor/simplicial_complex.hpp"

namespace qgor {

/// Memoised reduced Betti vectors of links, keyed by face. One instance per
/// (complex, field); not shared between threads.
class LinkBettiCache {
 public:
  LinkBettiCache(const SimplicialComplex& complex, FieldSpec field,
                 std::size_t face_cap = kDefaultFaceCap)
      : complex_(complex), field_(field), face_cap_(face_cap) {}

  const SimplicialComplex& complex() const noexcept { return complex_; }
  const FieldSpec& field() const noexcept { return field_; }
  std::size_t face_cap() const noexcept { return face_cap_; }

  /// Reduced Betti vector of lk σ; σ must be a face.
  const BettiVector& of(const Face& face);
  /// Dimension of lk σ (-1 for the link of a facet).
  int link_dimension(const Face& face);

 private:
  struct Entry {
    BettiVector betti;
    int dimension;
  };
  const Entry& entry(const Face& face);

  const SimplicialComplex& complex_;
  FieldSpec field_;
  std::size_t face_cap_;
  std::unordered_map<Face, Entry, FaceHash> memo_;
};

/// dim_k H^i_m(k[Δ])_{-σ} = dim H̃^{i-|σ|-1}(lk σ; k) for a face σ; zero
/// when σ is not a face.
std::uint64_t hochster_entry(LinkBettiCache& cache, int i, const Face& face);

struct HochsterEntry {
  int i;
  Face sigma;
  std::uint64_t dim;
  bool operator==(const HochsterEntry&) const = default;
};

struct HochsterTotal {
  int i;
  int j;
  std::uint64_t dim;
  bool operator==(const HochsterTotal&) const = default;
};

/// Squarefree-graded pieces of the local cohomology of k[Δ] at the
/// homogeneous maximal ideal. Only nonzero entries are stored.
class LocalCohomologyTable {
 public:
  LocalCohomologyTable(int krull_dim, std::vector<HochsterEntry> entries);

  int krull_dim() const noexcept { return krull_dim_; }
  /// Nonzero entries ordered by (i, canonical σ).
  const std::vector<HochsterEntry>& entries() const noexcept { return entries_; }

  std::uint64_t entry(int i, const Face& sigma) const;
  /// Σ_{|σ| = -j} entry(i, σ) for j ≤ 0; zero for j > 0.
  std::uint64_t total(int i, int j) const;
  /// Nonzero totals ordered by (i, j descending).
  std::vector<HochsterTotal> totals() const;
  /// Smallest i with a nonzero entry.
  int depth() const;

  bool operator==(const LocalCohomologyTable&) const = default;

 private:
  int krull_dim_;
  std::vector<HochsterEntry> entries_;
};

/// The full table: one link-homology computation per face.
/// Throws Error(VoidComplex) or Error(CapacityExceeded).
LocalCohomologyTable local_cohomology_table(const SimplicialComplex& complex,
                                            const FieldSpec& field,
                                            std::size_t face_cap = kDefaultFaceCap);

struct LinkWitness {
  Face sigma;
  int degree;  // homological degree of the offending link group
  bool operator==(const LinkWitness&) const = default;
};

struct DepthReport {
  int depth;
  bool is_cohen_macaulay;
  /// (i, σ) of a nonzero entry below the Krull dimension, smallest i first.
  std::optional<HochsterEntry> witness;
};

DepthReport depth_report(const SimplicialComplex& complex, const FieldSpec& field,
                         std::size_t face_cap = kDefaultFaceCap);

/// Direct link test: H̃_i(lk σ) = 0 for every face σ (including ∅) and
/// i < dim lk σ. Independent of the table-based depth computation.
bool reisner_cohen_macaulay(const SimplicialComplex& complex, const FieldSpec& field,
                            std::size_t face_cap = kDefaultFaceCap);

/// max{ j : total(d, j) ≠ 0 }; never positive.
int a_invariant(const SimplicialComplex& complex, const FieldSpec& field,
                std::size_t face_cap = kDefaultFaceCap);

struct LinkConditionResult {
  bool holds;
  std::optional<LinkWitness> witness;
};

/// For every nonempty face σ: H̃_i(lk σ) = 0 for all i < dim lk σ.
LinkConditionResult is_buchsbaum(const SimplicialComplex& complex, const FieldSpec& field,
                                 std::size_t face_cap = kDefaultFaceCap);

struct SerreReport {
  bool holds;
  std::optional<LinkWitness> witness;
  /// Set for ℓ > 2, where the link-vanishing criterion is used as an
  /// extension beyond the certified (S_2) equivalence.
  bool extended_criterion;
};

/// (S_ℓ) via links: H̃_i(lk σ) = 0 for i < min(ℓ-1, dim lk σ), all σ including ∅.
SerreReport serre_condition(const SimplicialComplex& complex, const FieldSpec& field, int ell,
                            std::size_t face_cap = kDefaultFaceCap);

/// total(d-i, 0) == total(i+1, 0) for 1 ≤ i ≤ d-2, d the Krull dimension.
bool degree_zero_poincare_symmetry(const LocalCohomologyTable& table);

}  // namespace qgor
