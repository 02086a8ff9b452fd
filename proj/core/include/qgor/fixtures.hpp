#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qgor/field.hpp"
#include "qgor/homology.hpp"
#include "qgor/simplicial_complex.hpp"

namespace qgor {

enum class FixtureSource {
  PublishedExample,  // facet list taken from the literature on quasi-Gorenstein liaison
  Standard,          // textbook triangulation or small constructed example
};

std::string_view to_string(FixtureSource source) noexcept;

struct Fixture {
  std::string name;
  std::string description;
  FixtureSource source;
  SimplicialComplex complex;
  /// For the published counterexample pairs: the facets of Δ forming Δ_A
  /// (0-based canonical positions). Empty otherwise.
  std::set<std::size_t> block_a;
};

/// The built-in test corpus, in a fixed order.
const std::vector<Fixture>& corpus();

/// Throws Error(InvalidArgument) for unknown names.
const Fixture& fixture(std::string_view name);

/// Largest face count oracle_betti accepts.
inline constexpr std::size_t kOracleFaceLimit = 4096;

/// Reduced Betti numbers by brute force: faces from subset enumeration of the
/// facets, dense boundary matrices, and textbook Gaussian elimination over
/// the rationals (arbitrary precision) or GF(p). Shares no code with the
/// homology module. Throws Error(TooLarge) past kOracleFaceLimit faces and
/// Error(VoidComplex).
BettiVector oracle_betti(const SimplicialComplex& complex, const FieldSpec& field);

}  // namespace qgor
