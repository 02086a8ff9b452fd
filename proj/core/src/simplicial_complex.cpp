#include "qgor/simplicial_complex.hpp"

#include <algorithm>
#include <iterator>
#include <ostream>
#include <sstream>

#include "qgor/error.hpp"

namespace qgor {

// ---------------------------------------------------------------------------
// Face

Face::Face(std::initializer_list<Vertex> vertices) : Face(std::vector<Vertex>(vertices)) {}

Face::Face(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

bool Face::contains(Vertex v) const noexcept {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Face::is_subset_of(const Face& other) const noexcept {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                       vertices_.end());
}

bool Face::is_disjoint_from(const Face& other) const noexcept {
  auto a = vertices_.begin();
  auto b = other.vertices_.begin();
  while (a != vertices_.end() && b != other.vertices_.end()) {
    if (*a == *b) return false;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return true;
}

Face Face::united_with(const Face& other) const {
  Face out;
  std::set_union(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                 other.vertices_.end(), std::back_inserter(out.vertices_));
  return out;
}

Face Face::without(const Face& other) const {
  Face out;
  std::set_difference(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                      other.vertices_.end(), std::back_inserter(out.vertices_));
  return out;
}

Face Face::without(Vertex v) const {
  Face out;
  out.vertices_.reserve(vertices_.size());
  for (Vertex u : vertices_) {
    if (u != v) out.vertices_.push_back(u);
  }
  return out;
}

Face Face::with(Vertex v) const {
  Face out = *this;
  auto it = std::lower_bound(out.vertices_.begin(), out.vertices_.end(), v);
  if (it == out.vertices_.end() || *it != v) out.vertices_.insert(it, v);
  return out;
}

Face Face::intersection(const Face& other) const {
  Face out;
  std::set_intersection(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                        other.vertices_.end(), std::back_inserter(out.vertices_));
  return out;
}

std::string Face::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::strong_ordering Face::operator<=>(const Face& other) const noexcept {
  if (auto c = vertices_.size() <=> other.vertices_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(vertices_.begin(), vertices_.end(),
                                                other.vertices_.begin(), other.vertices_.end());
}

std::ostream& operator<<(std::ostream& os, const Face& face) {
  os << '{';
  for (std::size_t i = 0; i < face.size(); ++i) {
    if (i) os << ',';
    os << face[i];
  }
  return os << '}';
}

std::size_t FaceHash::operator()(const Face& face) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Vertex v : face.vertices()) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------------------
// SimplicialComplex

namespace {

// Keeps only inclusion-maximal faces, in canonical order.
std::vector<Face> maximal_faces(std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<Face> kept;
  // Larger faces come last, so scan from the back and test against kept ones.
  for (auto it = faces.rbegin(); it != faces.rend(); ++it) {
    bool absorbed = std::any_of(kept.begin(), kept.end(),
                                [&](const Face& big) { return it->is_subset_of(big); });
    if (!absorbed) kept.push_back(*it);
  }
  std::reverse(kept.begin(), kept.end());
  return kept;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > (std::size_t{1} << 62)) return r;
  }
  return r;
}

void append_subsets(const Face& facet, std::size_t k, std::vector<Face>& out) {
  const std::size_t n = facet.size();
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<Vertex> buf(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) buf[i] = facet[idx[i]];
    out.emplace_back(buf);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(
    const std::vector<std::vector<long long>>& raw_facets, long long n_vertices) {
  if (n_vertices < 0) {
    throw Error(ErrorKind::VertexOutOfRange,
                "ambient vertex count must be nonnegative, got " + std::to_string(n_vertices));
  }
  std::vector<Face> faces;
  faces.reserve(raw_facets.size());
  for (std::size_t f = 0; f < raw_facets.size(); ++f) {
    std::vector<Vertex> vs;
    vs.reserve(raw_facets[f].size());
    for (long long v : raw_facets[f]) {
      if (v <= 0 || v > n_vertices) {
        throw Error(ErrorKind::VertexOutOfRange,
                    "vertex " + std::to_string(v) + " in entry " + std::to_string(f + 1) +
                        " is outside 1.." + std::to_string(n_vertices));
      }
      vs.push_back(static_cast<Vertex>(v));
    }
    faces.emplace_back(std::move(vs));
  }
  return from_faces(std::move(faces), static_cast<std::size_t>(n_vertices));
}

SimplicialComplex SimplicialComplex::from_faces(std::vector<Face> generators,
                                                std::size_t n_vertices) {
  for (const Face& g : generators) {
    if (!g.empty() && (g[0] == 0 || g.max_vertex() > n_vertices)) {
      throw Error(ErrorKind::VertexOutOfRange,
                  "face " + g.to_string() + " is outside 1.." + std::to_string(n_vertices));
    }
  }
  return SimplicialComplex(n_vertices, maximal_faces(std::move(generators)));
}

SimplicialComplex SimplicialComplex::void_complex(std::size_t n_vertices) {
  return SimplicialComplex(n_vertices, {});
}

SimplicialComplex SimplicialComplex::empty_complex(std::size_t n_vertices) {
  return SimplicialComplex(n_vertices, {Face{}});
}

ComplexKind SimplicialComplex::kind() const noexcept {
  if (facets_.empty()) return ComplexKind::Void;
  if (facets_.size() == 1 && facets_.front().empty()) return ComplexKind::Empty;
  return ComplexKind::Ordinary;
}

int SimplicialComplex::dimension() const noexcept {
  if (facets_.empty()) return -1;
  return facets_.back().dimension();
}

bool SimplicialComplex::is_pure() const noexcept {
  if (facets_.empty()) return true;
  return facets_.front().size() == facets_.back().size();
}

bool SimplicialComplex::contains(const Face& face) const noexcept {
  return std::any_of(facets_.begin(), facets_.end(),
                     [&](const Face& f) { return face.is_subset_of(f); });
}

bool SimplicialComplex::is_facet(const Face& face) const noexcept {
  return std::binary_search(facets_.begin(), facets_.end(), face);
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const noexcept {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Face& f) { return other.contains(f); });
}

std::vector<Vertex> SimplicialComplex::used_vertices() const {
  std::vector<Vertex> out;
  for (const Face& f : facets_) out.insert(out.end(), f.vertices().begin(), f.vertices().end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Face> SimplicialComplex::faces_of_dimension(int dim, std::size_t cap) const {
  if (facets_.empty() || dim < -1 || dim > dimension()) return {};
  if (dim == -1) return {Face{}};
  const auto k = static_cast<std::size_t>(dim + 1);

  std::size_t bound = 0;
  for (const Face& f : facets_) bound += binomial(f.size(), k);

  std::vector<Face> out;
  if (bound <= cap) {
    out.reserve(bound);
    for (const Face& f : facets_) append_subsets(f, k, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  // The raw bound is too large to materialise at once; deduplicate as we go.
  std::set<Face> seen;
  std::vector<Face> chunk;
  for (const Face& f : facets_) {
    chunk.clear();
    append_subsets(f, k, chunk);
    for (Face& g : chunk) {
      seen.insert(std::move(g));
      if (seen.size() > cap) {
        throw Error(ErrorKind::CapacityExceeded,
                    "more than " + std::to_string(cap) + " faces of dimension " +
                        std::to_string(dim));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Face> SimplicialComplex::all_faces(std::size_t cap) const {
  std::vector<Face> out;
  for (int d = -1; d <= dimension(); ++d) {
    auto layer = faces_of_dimension(d, cap);
    if (out.size() + layer.size() > cap) {
      throw Error(ErrorKind::CapacityExceeded, "more than " + std::to_string(cap) + " faces");
    }
    out.insert(out.end(), std::make_move_iterator(layer.begin()),
               std::make_move_iterator(layer.end()));
  }
  return out;
}

std::vector<std::size_t> SimplicialComplex::f_vector(std::size_t cap) const {
  std::vector<std::size_t> out;
  std::size_t total = 0;
  for (int d = -1; d <= dimension(); ++d) {
    out.push_back(faces_of_dimension(d, cap).size());
    total += out.back();
    if (total > cap) {
      throw Error(ErrorKind::CapacityExceeded, "more than " + std::to_string(cap) + " faces");
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const SimplicialComplex& complex) {
  os << '<';
  for (std::size_t i = 0; i < complex.facets().size(); ++i) {
    if (i) os << ' ';
    os << complex.facets()[i];
  }
  return os << "> on " << complex.n_vertices() << " vertices";
}

// ---------------------------------------------------------------------------
// Face-level operations

SimplicialComplex link(const SimplicialComplex& complex, const Face& face) {
  if (!complex.contains(face)) {
    throw Error(ErrorKind::NotAFace, face.to_string() + " is not a face of the complex");
  }
  std::vector<Face> generators;
  for (const Face& f : complex.facets()) {
    if (face.is_subset_of(f)) generators.push_back(f.without(face));
  }
  return SimplicialComplex::from_faces(std::move(generators), complex.n_vertices());
}

SimplicialComplex restrict_to_facets(const SimplicialComplex& complex,
                                     const std::set<std::size_t>& indices) {
  if (indices.empty()) throw Error(ErrorKind::EmptySelection, "no facets selected");
  std::vector<Face> generators;
  for (std::size_t i : indices) {
    if (i >= complex.facet_count()) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "facet index " + std::to_string(i) + " but the complex has " +
                      std::to_string(complex.facet_count()) + " facets");
    }
    generators.push_back(complex.facets()[i]);
  }
  return SimplicialComplex::from_faces(std::move(generators), complex.n_vertices());
}

SimplicialComplex faces_avoiding(const SimplicialComplex& complex,
                                 const std::set<Vertex>& forbidden_vertices) {
  if (complex.is_void()) return complex;
  std::vector<Face> generators;
  for (const Face& f : complex.facets()) {
    std::vector<Vertex> kept;
    for (Vertex v : f.vertices()) {
      if (!forbidden_vertices.contains(v)) kept.push_back(v);
    }
    generators.emplace_back(std::move(kept));
  }
  return SimplicialComplex::from_faces(std::move(generators), complex.n_vertices());
}

std::vector<Vertex> cone_points(const SimplicialComplex& complex) {
  if (complex.is_void()) return {};
  std::vector<Vertex> common(complex.facets().front().vertices().begin(),
                             complex.facets().front().vertices().end());
  for (const Face& f : complex.facets()) {
    std::erase_if(common, [&](Vertex v) { return !f.contains(v); });
  }
  return common;
}

SimplicialComplex core(const SimplicialComplex& complex) {
  // Removing every current cone point at once leaves facets pairwise
  // incomparable, and no new cone point can appear afterwards.
  const auto apexes = cone_points(complex);
  if (apexes.empty()) return complex;
  const Face apex_face(apexes);
  std::vector<Face> generators;
  for (const Face& f : complex.facets()) generators.push_back(f.without(apex_face));
  return SimplicialComplex::from_faces(std::move(generators), complex.n_vertices());
}

std::vector<Face> minimal_nonfaces(const SimplicialComplex& complex) {
  if (complex.is_void()) return {Face{}};
  std::vector<Face> out;
  const auto used = complex.used_vertices();
  for (Vertex v = 1; v <= complex.n_vertices(); ++v) {
    if (!std::binary_search(used.begin(), used.end(), v)) out.push_back(Face{v});
  }
  // A set S with |S| >= 2 is a minimal non-face iff S is not a face but every
  // S \ {u} is. Such S extends some face τ = S \ {max S} by a larger vertex.
  for (int d = 0; d <= complex.dimension(); ++d) {
    for (const Face& tau : complex.faces_of_dimension(d)) {
      for (auto it = std::upper_bound(used.begin(), used.end(), tau.max_vertex());
           it != used.end(); ++it) {
        Face s = tau.with(*it);
        if (complex.contains(s)) continue;
        bool minimal = true;
        for (Vertex u : tau.vertices()) {
          if (!complex.contains(s.without(u))) {
            minimal = false;
            break;
          }
        }
        if (minimal) out.push_back(std::move(s));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qgor
