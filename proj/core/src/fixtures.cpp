#include "qgor/fixtures.hpp"

#include <algorithm>
#include <map>

#include <boost/multiprecision/cpp_int.hpp>

#include "qgor/error.hpp"

namespace qgor {

namespace {

using Rational = boost::multiprecision::cpp_rational;

struct RawFixture {
  const char* name;
  const char* description;
  FixtureSource source;
  std::size_t n;
  std::vector<std::vector<long long>> facets;
  std::vector<std::vector<long long>> facets_a;
};

std::vector<Fixture> build_corpus() {
  const std::vector<RawFixture> raw = {
      {"boundary-2-simplex", "boundary of a triangle (circle)", FixtureSource::Standard, 3,
       {{1, 2}, {1, 3}, {2, 3}}, {}},
      {"boundary-3-simplex", "boundary of a tetrahedron (2-sphere)", FixtureSource::Standard, 4,
       {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}, {}},
      {"four-cycle", "cycle on four vertices", FixtureSource::Standard, 4,
       {{1, 2}, {2, 3}, {3, 4}, {1, 4}}, {}},
      {"simplex-2", "full 2-simplex (polynomial ring in 3 variables)", FixtureSource::Standard, 3,
       {{1, 2, 3}}, {}},
      {"simplex-3", "full 3-simplex (polynomial ring in 4 variables)", FixtureSource::Standard, 4,
       {{1, 2, 3, 4}}, {}},
      {"cone-four-cycle", "cone with apex 5 over the four-cycle", FixtureSource::Standard, 5,
       {{1, 2, 5}, {2, 3, 5}, {3, 4, 5}, {1, 4, 5}}, {}},
      {"two-triangles", "two disjoint filled triangles", FixtureSource::Standard, 6,
       {{1, 2, 3}, {4, 5, 6}}, {}},
      {"wedge-triangles", "two filled triangles sharing vertex 1", FixtureSource::Standard, 5,
       {{1, 2, 3}, {1, 4, 5}}, {}},
      {"two-points", "two isolated vertices", FixtureSource::Standard, 2, {{1}, {2}}, {}},
      {"rp2-6", "six-vertex real projective plane", FixtureSource::Standard, 6,
       {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
        {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}},
       {}},
      {"csaszar-torus", "seven-vertex torus", FixtureSource::Standard, 7,
       {{1, 2, 4}, {1, 2, 6}, {1, 3, 4}, {1, 3, 7}, {1, 5, 6}, {1, 5, 7}, {2, 3, 5},
        {2, 3, 7}, {2, 4, 5}, {2, 6, 7}, {3, 4, 6}, {3, 5, 6}, {4, 5, 7}, {4, 6, 7}},
       {}},
      {"paper-moebius", "five-vertex Moebius strip", FixtureSource::PublishedExample, 5,
       {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {1, 4, 5}, {1, 2, 5}}, {}},
      {"paper-cex1", "three triangles on the edge 12; A = {123, 124}",
       FixtureSource::PublishedExample, 5, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}},
       {{1, 2, 3}, {1, 2, 4}}},
      {"paper-cex2", "cone over the four-cycle plus the triangle 123; A = {125, 345}",
       FixtureSource::PublishedExample, 5,
       {{1, 2, 5}, {2, 3, 5}, {3, 4, 5}, {1, 4, 5}, {1, 2, 3}}, {{1, 2, 5}, {3, 4, 5}}},
  };

  std::vector<Fixture> out;
  for (const auto& r : raw) {
    Fixture f{r.name, r.description, r.source,
              SimplicialComplex::from_facets(r.facets, static_cast<long long>(r.n)), {}};
    for (const auto& raw_facet : r.facets_a) {
      std::vector<Vertex> vs(raw_facet.begin(), raw_facet.end());
      const Face target{std::move(vs)};
      const auto facets = f.complex.facets();
      const auto it = std::find(facets.begin(), facets.end(), target);
      f.block_a.insert(static_cast<std::size_t>(it - facets.begin()));
    }
    out.push_back(std::move(f));
  }
  return out;
}

// Faces as sorted vertex lists, grouped by size; deliberately independent of
// SimplicialComplex's own enumeration.
std::map<std::size_t, std::vector<std::vector<Vertex>>> enumerate_faces(
    const SimplicialComplex& complex) {
  std::map<std::size_t, std::set<std::vector<Vertex>>> by_size;
  std::size_t total = 0;
  for (const Face& facet : complex.facets()) {
    const std::size_t k = facet.size();
    if (k >= 20) throw Error(ErrorKind::TooLarge, "facet too large for the oracle");
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
      std::vector<Vertex> face;
      for (std::size_t b = 0; b < k; ++b) {
        if (mask & (std::uint32_t{1} << b)) face.push_back(facet[b]);
      }
      if (by_size[face.size()].insert(std::move(face)).second) ++total;
      if (total > kOracleFaceLimit) {
        throw Error(ErrorKind::TooLarge, "more than " + std::to_string(kOracleFaceLimit) +
                                             " faces");
      }
    }
  }
  std::map<std::size_t, std::vector<std::vector<Vertex>>> out;
  for (auto& [size, faces] : by_size) out[size].assign(faces.begin(), faces.end());
  return out;
}

std::size_t rank_mod_p(std::vector<std::vector<long long>> m, long long p) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  for (auto& row : m) {
    for (auto& x : row) x = ((x % p) + p) % p;
  }
  auto inverse = [p](long long a) {
    long long result = 1, e = p - 2;
    a %= p;
    while (e > 0) {
      if (e & 1) result = result * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return result;
  };
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const long long inv = inverse(m[rank][c]);
    for (auto& x : m[rank]) x = x * inv % p;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const long long factor = m[r][c];
      for (std::size_t k = 0; k < cols; ++k) {
        m[r][k] = ((m[r][k] - factor * m[rank][k]) % p + p) % p;
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_rational(const std::vector<std::vector<long long>>& input) {
  std::vector<std::vector<Rational>> m;
  for (const auto& row : input) m.emplace_back(row.begin(), row.end());
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      const Rational factor = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= factor * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::string_view to_string(FixtureSource source) noexcept {
  return source == FixtureSource::PublishedExample ? "published-example" : "standard";
}

const std::vector<Fixture>& corpus() {
  static const std::vector<Fixture> fixtures = build_corpus();
  return fixtures;
}

const Fixture& fixture(std::string_view name) {
  for (const Fixture& f : corpus()) {
    if (f.name == name) return f;
  }
  throw Error(ErrorKind::InvalidArgument, "no fixture named " + std::string(name));
}

BettiVector oracle_betti(const SimplicialComplex& complex, const FieldSpec& field) {
  if (complex.is_void()) throw Error(ErrorKind::VoidComplex, "no faces");
  const auto faces = enumerate_faces(complex);
  const std::size_t top_size = faces.rbegin()->first;

  // rank of ∂ from faces of size s to faces of size s-1, for s = 1..top_size
  std::map<std::size_t, std::size_t> ranks;
  for (std::size_t s = 1; s <= top_size; ++s) {
    const auto& upper = faces.at(s);
    const auto& lower = faces.at(s - 1);
    std::vector<std::vector<long long>> matrix(lower.size(),
                                               std::vector<long long>(upper.size(), 0));
    for (std::size_t col = 0; col < upper.size(); ++col) {
      const auto& face = upper[col];
      for (std::size_t drop = 0; drop < face.size(); ++drop) {
        std::vector<Vertex> boundary_face;
        for (std::size_t k = 0; k < face.size(); ++k) {
          if (k != drop) boundary_face.push_back(face[k]);
        }
        const auto row = std::lower_bound(lower.begin(), lower.end(), boundary_face) - lower.begin();
        matrix[static_cast<std::size_t>(row)][col] = drop % 2 == 0 ? 1 : -1;
      }
    }
    ranks[s] = field.is_rational()
                   ? rank_rational(matrix)
                   : rank_mod_p(matrix, static_cast<long long>(field.characteristic()));
  }

  std::vector<std::uint64_t> dims;
  for (std::size_t s = 0; s <= top_size; ++s) {
    const std::size_t count = faces.at(s).size();
    const std::size_t out_rank = s == 0 ? 0 : ranks[s];
    const std::size_t in_rank = s == top_size ? 0 : ranks[s + 1];
    dims.push_back(count - out_rank - in_rank);
  }
  return BettiVector(std::move(dims), -1);
}

}  // namespace qgor
