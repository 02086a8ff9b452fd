#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qgor/field.hpp"
#include "qgor/simplicial_complex.hpp"

namespace qgor {

/// Counterexample attached to a failed predicate.
struct Witness {
  std::vector<Face> faces;
  std::optional<int> degree;  // homological degree, when the failure is a homology group
  std::string note;
  bool operator==(const Witness&) const = default;
};

struct NormalPseudomanifoldReport {
  bool pure = false;
  bool normal = false;                  // lk σ connected for every face with dim σ ≤ dim Δ - 2
  bool ridge_condition = false;         // every (dim Δ - 1)-face lies in exactly two facets
  bool normal_pseudomanifold = false;
  std::optional<Witness> impure_facet;  // first facet of non-maximal dimension
  std::optional<Witness> disconnected_link;
  std::optional<Witness> bad_ridge;     // ridge together with the facets containing it
};

/// Purity, normality and the ridge condition with the first violation of
/// each in canonical face order. Throws Error(VoidComplex/EmptyComplex).
NormalPseudomanifoldReport normal_pseudomanifold_report(const SimplicialComplex& complex);

/// Number of connected components of the complex (0 for Empty and Void).
std::size_t connected_components(const SimplicialComplex& complex);

/// Facet-ridge adjacency graph is connected. Throws Error(NotPure).
bool is_strongly_connected(const SimplicialComplex& complex);

/// H̃_dim(Δ; Q) ≠ 0 for a pseudomanifold (pure, ridge condition, strongly
/// connected); top homology is torsion-free so rational coefficients decide
/// the integral question. Throws Error(NotAPseudomanifold).
bool is_orientable(const SimplicialComplex& complex);

struct HomologyManifoldResult {
  bool manifold;
  bool sphere;
  std::optional<Witness> witness;
};

/// Every nonempty face has a link with the k-homology of a sphere of the
/// link's dimension; `sphere` additionally asks this of Δ itself.
/// Throws Error(NotPure) and Error(VoidComplex/EmptyComplex).
HomologyManifoldResult is_homology_manifold(const SimplicialComplex& complex,
                                            const FieldSpec& field);

/// Normal pseudomanifold with H̃_dim(Δ; k) ≠ 0, i.e. ω ≅ k[Δ] with no shift.
bool is_quasi_gorenstein(const SimplicialComplex& complex, const FieldSpec& field);

/// core(Δ) is Empty or is quasi-Gorenstein and Cohen-Macaulay over k.
bool is_gorenstein(const SimplicialComplex& complex, const FieldSpec& field);

struct ClassificationReport {
  FieldSpec field;
  bool pure = false;
  bool strongly_connected = false;
  bool normal = false;
  bool pseudomanifold_ridge_condition = false;
  bool normal_pseudomanifold = false;
  bool orientable = false;
  bool buchsbaum = false;
  bool homology_manifold = false;
  bool homology_sphere = false;
  bool cohen_macaulay = false;
  bool quasi_gorenstein = false;
  bool gorenstein = false;
  std::map<std::string, Witness> witnesses;
};

/// All predicates at once. Throws Error(VoidComplex/EmptyComplex).
ClassificationReport classify(const SimplicialComplex& complex, const FieldSpec& field);

}  // namespace qgor
