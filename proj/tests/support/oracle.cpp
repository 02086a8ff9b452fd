#include "oracle.hpp"

#include <algorithm>
#include <map>

#include <boost/multiprecision/cpp_int.hpp>

namespace qgor::oracle {

std::filesystem::path source_dir() { return QGOR_SOURCE_DIR; }

std::filesystem::path fixture_path(const std::string& file) {
  return source_dir() / "fixtures" / file;
}

std::set<RawFace> faces(const SimplicialComplex& complex) {
  std::set<RawFace> out;
  for (const Face& f : complex.facets()) {
    const std::size_t k = f.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      RawFace face;
      for (std::size_t b = 0; b < k; ++b) {
        if (mask >> b & 1) face.push_back(f[b]);
      }
      out.insert(face);
    }
  }
  return out;
}

std::size_t dense_rank(std::vector<std::vector<long long>> matrix, const FieldSpec& field) {
  using boost::multiprecision::cpp_rational;
  if (matrix.empty()) return 0;
  const std::size_t rows = matrix.size(), cols = matrix[0].size();
  if (field.is_prime()) {
    const long long p = static_cast<long long>(field.characteristic());
    for (auto& row : matrix) {
      for (auto& x : row) x = ((x % p) + p) % p;
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols; ++c) {
      std::size_t r = rank;
      while (r < rows && matrix[r][c] == 0) ++r;
      if (r == rows) continue;
      std::swap(matrix[r], matrix[rank]);
      // inverse by Fermat
      long long inv = 1, base = matrix[rank][c], e = p - 2;
      while (e) {
        if (e & 1) inv = static_cast<long long>((__int128)inv * base % p);
        base = static_cast<long long>((__int128)base * base % p);
        e >>= 1;
      }
      for (std::size_t k = rank + 1; k < rows; ++k) {
        const long long f = static_cast<long long>((__int128)matrix[k][c] * inv % p);
        for (std::size_t j = 0; j < cols; ++j) {
          matrix[k][j] = static_cast<long long>(
              ((matrix[k][j] - (__int128)f * matrix[rank][j]) % p + p) % p);
        }
      }
      ++rank;
    }
    return rank;
  }
  std::vector<std::vector<cpp_rational>> m(rows, std::vector<cpp_rational>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = matrix[r][c];
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t r = rank;
    while (r < rows && m[r][c] == 0) ++r;
    if (r == rows) continue;
    std::swap(m[r], m[rank]);
    for (std::size_t k = rank + 1; k < rows; ++k) {
      if (m[k][c] == 0) continue;
      const cpp_rational f = m[k][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[k][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

BettiVector chain_homology(const std::set<RawFace>& chains, const FieldSpec& field) {
  std::map<int, std::vector<RawFace>> by_dim;
  for (const auto& f : chains) by_dim[static_cast<int>(f.size()) - 1].push_back(f);
  int top = -1;
  for (const auto& [d, list] : by_dim) top = std::max(top, d);
  std::map<int, std::size_t> rank;  // rank of ∂_d : C_d → C_{d-1}
  for (int d = 0; d <= top; ++d) {
    const auto& upper = by_dim[d];
    const auto& lower = by_dim[d - 1];
    if (upper.empty() || lower.empty()) {
      rank[d] = 0;
      continue;
    }
    std::vector<std::vector<long long>> m(lower.size(), std::vector<long long>(upper.size(), 0));
    for (std::size_t c = 0; c < upper.size(); ++c) {
      for (std::size_t drop = 0; drop < upper[c].size(); ++drop) {
        RawFace b = upper[c];
        b.erase(b.begin() + static_cast<long>(drop));
        auto it = std::lower_bound(lower.begin(), lower.end(), b);
        if (it != lower.end() && *it == b) {
          m[static_cast<std::size_t>(it - lower.begin())][c] = drop % 2 == 0 ? 1 : -1;
        }
      }
    }
    rank[d] = dense_rank(std::move(m), field);
  }
  std::vector<std::uint64_t> dims;
  for (int d = -1; d <= top; ++d) {
    const std::size_t n = by_dim[d].size();
    dims.push_back(n - (d >= 0 ? rank[d] : 0) - (d + 1 <= top ? rank[d + 1] : 0));
  }
  return BettiVector(std::move(dims), -1);
}

BettiVector reduced(const SimplicialComplex& complex, const FieldSpec& field) {
  return chain_homology(faces(complex), field);
}

BettiVector relative(const SimplicialComplex& complex, const SimplicialComplex& sub,
                     const FieldSpec& field) {
  auto all = faces(complex);
  for (const auto& f : faces(sub)) all.erase(f);
  return chain_homology(all, field);
}

std::set<RawFace> link_faces(const SimplicialComplex& complex, const RawFace& sigma) {
  std::set<RawFace> out;
  const auto all = faces(complex);
  for (const auto& tau : all) {
    RawFace u;
    std::set_union(tau.begin(), tau.end(), sigma.begin(), sigma.end(), std::back_inserter(u));
    if (u.size() == tau.size() + sigma.size() && all.contains(u)) out.insert(tau);
  }
  return out;
}

std::uint64_t hochster(const SimplicialComplex& complex, int i, const RawFace& sigma,
                       const FieldSpec& field) {
  if (!faces(complex).contains(sigma)) return 0;
  const auto lk = link_faces(complex, sigma);
  return chain_homology(lk, field)[i - static_cast<int>(sigma.size()) - 1];
}

BettiVector complement_homology(const SimplicialComplex& complex, const SimplicialComplex& sub,
                                const FieldSpec& field) {
  auto poset = faces(complex);
  for (const auto& f : faces(sub)) poset.erase(f);
  std::vector<RawFace> elements(poset.begin(), poset.end());
  // chains of the poset ordered by inclusion, as sets of element indices
  std::set<RawFace> chains{{}};
  std::vector<RawFace> frontier;
  for (Vertex e = 0; e < elements.size(); ++e) frontier.push_back({e});
  while (!frontier.empty()) {
    std::vector<RawFace> next;
    for (auto& chain : frontier) {
      chains.insert(chain);
      const RawFace& last = elements[chain.back()];
      for (Vertex e = 0; e < elements.size(); ++e) {
        const RawFace& cand = elements[e];
        if (cand.size() > last.size() &&
            std::includes(cand.begin(), cand.end(), last.begin(), last.end())) {
          RawFace longer = chain;
          longer.push_back(e);
          next.push_back(std::move(longer));
        }
      }
    }
    frontier = std::move(next);
  }
  // re-sort each chain so the boundary convention sees sorted vertex lists
  std::set<RawFace> sorted;
  for (auto c : chains) {
    std::sort(c.begin(), c.end());
    sorted.insert(std::move(c));
  }
  return chain_homology(sorted, field);
}

std::size_t graph_components(std::size_t n,
                             const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                             const std::set<std::size_t>& removed) {
  std::vector<std::size_t> label(n);
  for (std::size_t i = 0; i < n; ++i) label[i] = i;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [a, b] : edges) {
      if (removed.contains(a) || removed.contains(b)) continue;
      const auto m = std::min(label[a], label[b]);
      if (label[a] != m || label[b] != m) {
        label[a] = label[b] = m;
        changed = true;
      }
    }
  }
  std::set<std::size_t> distinct;
  for (std::size_t i = 0; i < n; ++i) {
    if (!removed.contains(i)) distinct.insert(label[i]);
  }
  return distinct.size();
}

SimplicialComplex random_complex(std::mt19937& rng, std::size_t n, std::size_t facets,
                                 std::size_t max_size) {
  std::uniform_int_distribution<std::size_t> size_dist(1, max_size);
  std::vector<std::vector<long long>> raw;
  for (std::size_t k = 0; k < facets; ++k) {
    std::vector<long long> all(n);
    for (std::size_t v = 0; v < n; ++v) all[v] = static_cast<long long>(v + 1);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(std::min(size_dist(rng), n));
    raw.push_back(all);
  }
  return SimplicialComplex::from_facets(raw, static_cast<long long>(n));
}

std::vector<std::set<std::size_t>> subsets_up_to(std::size_t n, std::size_t max_size) {
  std::vector<std::set<std::size_t>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) > max_size) continue;
    std::set<std::size_t> s;
    for (std::size_t b = 0; b < n; ++b) {
      if (mask >> b & 1) s.insert(b);
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

}  // namespace qgor::oracle
