#include "qgor/homology.hpp"

#include <algorithm>
#include <sstream>

#include "qgor/error.hpp"

namespace qgor {

// ---------------------------------------------------------------------------
// BettiVector

std::uint64_t BettiVector::operator[](int degree) const noexcept {
  if (degree < lowest_ || degree > highest_degree()) return 0;
  return dims_[static_cast<std::size_t>(degree - lowest_)];
}

std::uint64_t BettiVector::total() const noexcept {
  std::uint64_t t = 0;
  for (auto d : dims_) t += d;
  return t;
}

long long BettiVector::euler_characteristic() const noexcept {
  long long chi = 0;
  for (int j = lowest_; j <= highest_degree(); ++j) {
    const auto v = static_cast<long long>((*this)[j]);
    chi += (j % 2 == 0) ? v : -v;
  }
  return chi;
}

std::map<int, std::uint64_t> BettiVector::nonzero() const {
  std::map<int, std::uint64_t> out;
  for (int j = lowest_; j <= highest_degree(); ++j) {
    if ((*this)[j] != 0) out[j] = (*this)[j];
  }
  return out;
}

std::string BettiVector::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int j = lowest_; j <= highest_degree(); ++j) {
    if (!first) os << ", ";
    first = false;
    os << j << ':' << (*this)[j];
  }
  os << '}';
  return os.str();
}

bool operator==(const BettiVector& a, const BettiVector& b) noexcept {
  const int lo = std::min(a.lowest_degree(), b.lowest_degree());
  const int hi = std::max(a.highest_degree(), b.highest_degree());
  for (int j = lo; j <= hi; ++j) {
    if (a[j] != b[j]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Chain complexes

namespace {

std::size_t index_of(const std::vector<Face>& sorted_faces, const Face& face) {
  auto it = std::lower_bound(sorted_faces.begin(), sorted_faces.end(), face);
  return static_cast<std::size_t>(it - sorted_faces.begin());
}

// Boundary of `cols` (i-faces) into `rows` ((i-1)-faces). Faces of a column
// that are missing from `rows` are dropped, which is exactly the quotient by
// a subcomplex when `rows` lists the surviving faces.
ExactMatrix boundary_between(const std::vector<Face>& rows, const std::vector<Face>& cols,
                             const FieldSpec& field) {
  ExactMatrix m(rows.size(), cols.size(), field);
  if (rows.empty()) return m;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Face& sigma = cols[c];
    for (std::size_t j = 0; j < sigma.size(); ++j) {
      const Face facet = sigma.without(sigma[j]);
      const std::size_t r = index_of(rows, facet);
      if (r < rows.size() && rows[r] == facet) m.set(r, c, (j % 2 == 0) ? 1 : -1);
    }
  }
  return m;
}

struct ChainData {
  int lowest;                              // degree of layers[0]
  std::vector<std::vector<Face>> layers;  // faces by degree
};

BettiVector homology_of(const ChainData& chains, const FieldSpec& field) {
  const std::size_t n = chains.layers.size();
  // ranks[k] = rank of the boundary leaving layer k.
  std::vector<std::size_t> ranks(n + 1, 0);
  for (std::size_t k = 1; k < n; ++k) {
    ranks[k] = rank(boundary_between(chains.layers[k - 1], chains.layers[k], field));
  }
  std::vector<std::uint64_t> dims(n);
  for (std::size_t k = 0; k < n; ++k) {
    dims[k] = chains.layers[k].size() - ranks[k] - ranks[k + 1];
  }
  return BettiVector(std::move(dims), chains.lowest);
}

}  // namespace

ExactMatrix boundary_matrix(const SimplicialComplex& complex, int i, const FieldSpec& field,
                            std::size_t face_cap) {
  const auto cols = complex.faces_of_dimension(i, face_cap);
  const auto rows = complex.faces_of_dimension(i - 1, face_cap);
  return boundary_between(rows, cols, field);
}

BettiVector reduced_betti(const SimplicialComplex& complex, const FieldSpec& field,
                          std::size_t face_cap) {
  if (complex.is_void()) {
    throw Error(ErrorKind::VoidComplex, "reduced homology of the void complex is undefined");
  }
  ChainData chains{-1, {}};
  std::size_t total = 0;
  for (int d = -1; d <= complex.dimension(); ++d) {
    chains.layers.push_back(complex.faces_of_dimension(d, face_cap));
    total += chains.layers.back().size();
    if (total > face_cap) {
      throw Error(ErrorKind::CapacityExceeded, "more than " + std::to_string(face_cap) + " faces");
    }
  }
  return homology_of(chains, field);
}

BettiVector relative_betti(const SimplicialComplex& complex, const SimplicialComplex& sub,
                           const FieldSpec& field, std::size_t face_cap) {
  if (!sub.is_subcomplex_of(complex)) {
    throw Error(ErrorKind::NotASubcomplex, "relative homology needs a subcomplex");
  }
  ChainData chains{-1, {}};
  std::size_t total = 0;
  for (int d = -1; d <= std::max(complex.dimension(), 0); ++d) {
    auto faces = complex.faces_of_dimension(d, face_cap);
    std::erase_if(faces, [&](const Face& f) { return sub.contains(f); });
    total += faces.size();
    if (total > face_cap) {
      throw Error(ErrorKind::CapacityExceeded, "more than " + std::to_string(face_cap) + " faces");
    }
    chains.layers.push_back(std::move(faces));
  }
  return homology_of(chains, field);
}

}  // namespace qgor
