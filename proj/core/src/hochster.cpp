#include "qgor/hochster.hpp"

#include <algorithm>
#include <limits>

#include "qgor/error.hpp"

namespace qgor {

namespace {

void require_not_void(const SimplicialComplex& complex) {
  if (complex.is_void()) throw Error(ErrorKind::VoidComplex, "the complex has no faces");
}

// First link degree in [lowest, below) with nonzero homology, if any.
std::optional<int> first_nonzero(const BettiVector& betti, int lowest, int below) {
  for (int j = lowest; j < below; ++j) {
    if (betti[j] != 0) return j;
  }
  return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------------------
// LinkBettiCache

const LinkBettiCache::Entry& LinkBettiCache::entry(const Face& face) {
  if (auto it = memo_.find(face); it != memo_.end()) return it->second;
  const SimplicialComplex lk = link(complex_, face);
  Entry e{reduced_betti(lk, field_, face_cap_), lk.dimension()};
  return memo_.emplace(face, std::move(e)).first->second;
}

const BettiVector& LinkBettiCache::of(const Face& face) { return entry(face).betti; }

int LinkBettiCache::link_dimension(const Face& face) { return entry(face).dimension; }

std::uint64_t hochster_entry(LinkBettiCache& cache, int i, const Face& face) {
  if (!cache.complex().contains(face)) return 0;
  return cache.of(face)[i - static_cast<int>(face.size()) - 1];
}

// ---------------------------------------------------------------------------
// LocalCohomologyTable

LocalCohomologyTable::LocalCohomologyTable(int krull_dim, std::vector<HochsterEntry> entries)
    : krull_dim_(krull_dim), entries_(std::move(entries)) {
  std::erase_if(entries_, [](const HochsterEntry& e) { return e.dim == 0; });
  std::sort(entries_.begin(), entries_.end(), [](const HochsterEntry& a, const HochsterEntry& b) {
    if (a.i != b.i) return a.i < b.i;
    return a.sigma < b.sigma;
  });
}

std::uint64_t LocalCohomologyTable::entry(int i, const Face& sigma) const {
  for (const auto& e : entries_) {
    if (e.i == i && e.sigma == sigma) return e.dim;
  }
  return 0;
}

std::uint64_t LocalCohomologyTable::total(int i, int j) const {
  if (j > 0) return 0;
  std::uint64_t sum = 0;
  for (const auto& e : entries_) {
    if (e.i == i && static_cast<int>(e.sigma.size()) == -j) sum += e.dim;
  }
  return sum;
}

std::vector<HochsterTotal> LocalCohomologyTable::totals() const {
  std::vector<HochsterTotal> out;
  for (const auto& e : entries_) {
    const int j = -static_cast<int>(e.sigma.size());
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const HochsterTotal& t) { return t.i == e.i && t.j == j; });
    if (it == out.end()) {
      out.push_back({e.i, j, e.dim});
    } else {
      it->dim += e.dim;
    }
  }
  std::sort(out.begin(), out.end(), [](const HochsterTotal& a, const HochsterTotal& b) {
    if (a.i != b.i) return a.i < b.i;
    return a.j > b.j;
  });
  return out;
}

int LocalCohomologyTable::depth() const {
  return entries_.empty() ? std::numeric_limits<int>::max() : entries_.front().i;
}

LocalCohomologyTable local_cohomology_table(const SimplicialComplex& complex,
                                            const FieldSpec& field, std::size_t face_cap) {
  require_not_void(complex);
  LinkBettiCache cache(complex, field, face_cap);
  std::vector<HochsterEntry> entries;
  for (const Face& sigma : complex.all_faces(face_cap)) {
    const BettiVector& betti = cache.of(sigma);
    for (const auto& [degree, dim] : betti.nonzero()) {
      entries.push_back({degree + static_cast<int>(sigma.size()) + 1, sigma, dim});
    }
  }
  return LocalCohomologyTable(complex.dimension() + 1, std::move(entries));
}

// ---------------------------------------------------------------------------
// Depth and friends

DepthReport depth_report(const SimplicialComplex& complex, const FieldSpec& field,
                         std::size_t face_cap) {
  const auto table = local_cohomology_table(complex, field, face_cap);
  DepthReport report{table.depth(), false, std::nullopt};
  report.is_cohen_macaulay = report.depth == table.krull_dim();
  if (!report.is_cohen_macaulay) report.witness = table.entries().front();
  return report;
}

bool reisner_cohen_macaulay(const SimplicialComplex& complex, const FieldSpec& field,
                            std::size_t face_cap) {
  require_not_void(complex);
  for (const Face& sigma : complex.all_faces(face_cap)) {
    const SimplicialComplex lk = link(complex, sigma);
    const BettiVector betti = reduced_betti(lk, field, face_cap);
    if (first_nonzero(betti, -1, lk.dimension())) return false;
  }
  return true;
}

int a_invariant(const SimplicialComplex& complex, const FieldSpec& field, std::size_t face_cap) {
  require_not_void(complex);
  const int d = complex.dimension() + 1;
  LinkBettiCache cache(complex, field, face_cap);
  // Faces come in canonical order, so the first hit has the smallest |σ|.
  for (const Face& sigma : complex.all_faces(face_cap)) {
    if (hochster_entry(cache, d, sigma) != 0) return -static_cast<int>(sigma.size());
  }
  // H^d_m(k[Δ]) never vanishes; reaching this point means a broken invariant.
  throw Error(ErrorKind::InvalidArgument, "top local cohomology vanished");
}

LinkConditionResult is_buchsbaum(const SimplicialComplex& complex, const FieldSpec& field,
                                 std::size_t face_cap) {
  require_not_void(complex);
  LinkBettiCache cache(complex, field, face_cap);
  for (const Face& sigma : complex.all_faces(face_cap)) {
    if (sigma.empty()) continue;
    if (auto j = first_nonzero(cache.of(sigma), -1, cache.link_dimension(sigma))) {
      return {false, LinkWitness{sigma, *j}};
    }
  }
  return {true, std::nullopt};
}

SerreReport serre_condition(const SimplicialComplex& complex, const FieldSpec& field, int ell,
                            std::size_t face_cap) {
  require_not_void(complex);
  if (ell < 1) {
    throw Error(ErrorKind::InvalidArgument, "Serre index must be at least 1");
  }
  LinkBettiCache cache(complex, field, face_cap);
  SerreReport report{true, std::nullopt, ell > 2};
  for (const Face& sigma : complex.all_faces(face_cap)) {
    const int below = std::min(ell - 1, cache.link_dimension(sigma));
    if (auto j = first_nonzero(cache.of(sigma), -1, below)) {
      report.holds = false;
      report.witness = LinkWitness{sigma, *j};
      break;
    }
  }
  return report;
}

bool degree_zero_poincare_symmetry(const LocalCohomologyTable& table) {
  const int d = table.krull_dim();
  for (int i = 1; i <= d - 2; ++i) {
    if (table.total(d - i, 0) != table.total(i + 1, 0)) return false;
  }
  return true;
}

}  // namespace qgor
