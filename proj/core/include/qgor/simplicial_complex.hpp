#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace qgor {

using Vertex = std::uint32_t;

/// Default upper bound on the number of faces any single enumeration may produce.
inline constexpr std::size_t kDefaultFaceCap = std::size_t{1} << 24;

/// A finite set of 1-based vertex ids, kept sorted ascending.
///
/// The ordering operator implements the canonical face order used throughout
/// the library: by cardinality first, then lexicographically.
class Face {
 public:
  Face() = default;
  Face(std::initializer_list<Vertex> vertices);
  explicit Face(std::vector<Vertex> vertices);

  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }
  int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  Vertex operator[](std::size_t i) const noexcept { return vertices_[i]; }
  Vertex max_vertex() const noexcept { return vertices_.empty() ? 0 : vertices_.back(); }

  bool contains(Vertex v) const noexcept;
  bool is_subset_of(const Face& other) const noexcept;
  bool is_disjoint_from(const Face& other) const noexcept;

  Face united_with(const Face& other) const;
  Face without(const Face& other) const;
  Face without(Vertex v) const;
  Face with(Vertex v) const;
  Face intersection(const Face& other) const;

  std::string to_string() const;

  std::strong_ordering operator<=>(const Face& other) const noexcept;
  bool operator==(const Face& other) const noexcept = default;

 private:
  std::vector<Vertex> vertices_;
};

std::ostream& operator<<(std::ostream& os, const Face& face);

struct FaceHash {
  std::size_t operator()(const Face& face) const noexcept;
};

enum class ComplexKind {
  Void,      // no faces at all
  Empty,     // only the empty face
  Ordinary,  // at least one vertex
};

/// An abstract simplicial complex on the ambient vertex set {1, ..., n},
/// stored by its facets in canonical order. Immutable after construction.
class SimplicialComplex {
 public:
  /// The Void complex on zero vertices.
  SimplicialComplex() = default;

  /// Builds the complex generated by `raw_facets`. Non-maximal and duplicate
  /// entries are absorbed. Throws Error(VertexOutOfRange) on ids outside 1..n.
  static SimplicialComplex from_facets(const std::vector<std::vector<long long>>& raw_facets,
                                       long long n_vertices);
  static SimplicialComplex from_faces(std::vector<Face> generators, std::size_t n_vertices);
  static SimplicialComplex void_complex(std::size_t n_vertices);
  static SimplicialComplex empty_complex(std::size_t n_vertices);

  std::size_t n_vertices() const noexcept { return n_vertices_; }
  std::span<const Face> facets() const noexcept { return facets_; }
  std::size_t facet_count() const noexcept { return facets_.size(); }
  ComplexKind kind() const noexcept;
  bool is_void() const noexcept { return facets_.empty(); }

  /// -1 for both the Empty and the Void complex; use kind() to tell them apart.
  int dimension() const noexcept;
  bool is_pure() const noexcept;

  bool contains(const Face& face) const noexcept;
  bool is_facet(const Face& face) const noexcept;
  bool is_subcomplex_of(const SimplicialComplex& other) const noexcept;

  /// Vertices that occur in some facet, ascending.
  std::vector<Vertex> used_vertices() const;

  /// All faces of the given dimension in canonical order; dimension -1 yields
  /// the empty face (unless Void). Throws Error(CapacityExceeded) past `cap`.
  std::vector<Face> faces_of_dimension(int dim, std::size_t cap = kDefaultFaceCap) const;

  /// Every face including the empty one, in canonical order.
  std::vector<Face> all_faces(std::size_t cap = kDefaultFaceCap) const;

  /// f_{-1}, f_0, ..., f_dim.
  std::vector<std::size_t> f_vector(std::size_t cap = kDefaultFaceCap) const;

  bool operator==(const SimplicialComplex& other) const = default;

 private:
  SimplicialComplex(std::size_t n_vertices, std::vector<Face> facets)
      : n_vertices_(n_vertices), facets_(std::move(facets)) {}

  std::size_t n_vertices_ = 0;
  std::vector<Face> facets_;
};

std::ostream& operator<<(std::ostream& os, const SimplicialComplex& complex);

/// lk σ = { τ : τ ∪ σ ∈ Δ, τ ∩ σ = ∅ } on the same ambient vertex set.
/// The link of a facet is the Empty complex. Throws Error(NotAFace).
SimplicialComplex link(const SimplicialComplex& complex, const Face& face);

/// Subcomplex generated by the facets at the given 0-based canonical positions.
SimplicialComplex restrict_to_facets(const SimplicialComplex& complex,
                                     const std::set<std::size_t>& indices);

/// Faces that contain none of the forbidden vertices.
SimplicialComplex faces_avoiding(const SimplicialComplex& complex,
                                 const std::set<Vertex>& forbidden_vertices);

/// Repeatedly strips cone points (vertices lying in every facet).
SimplicialComplex core(const SimplicialComplex& complex);

/// Cone points of the complex, ascending.
std::vector<Vertex> cone_points(const SimplicialComplex& complex);

/// Inclusion-minimal subsets of {1..n} that are not faces: the minimal
/// monomial generators of the Stanley-Reisner ideal.
std::vector<Face> minimal_nonfaces(const SimplicialComplex& complex);

}  // namespace qgor
