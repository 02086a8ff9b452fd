#include <fstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "oracle.hpp"
#include "qgor/error.hpp"
#include "qgor/fixtures.hpp"
#include "qgor/homology.hpp"

namespace qgor {
namespace {

nlohmann::json manifest() {
  std::ifstream in(oracle::fixture_path("manifest.json"));
  return nlohmann::json::parse(in);
}

TEST(Fixtures, CorpusContents) {
  std::vector<std::string> names;
  for (const auto& fx : corpus()) names.push_back(fx.name);
  for (const char* required :
       {"boundary-2-simplex", "boundary-3-simplex", "four-cycle", "simplex-2", "simplex-3",
        "cone-four-cycle", "two-triangles", "wedge-triangles", "rp2-6", "csaszar-torus",
        "paper-moebius", "paper-cex1", "paper-cex2"}) {
    EXPECT_NE(std::find(names.begin(), names.end(), required), names.end()) << required;
  }
  EXPECT_EQ(fixture("rp2-6").complex.facet_count(), 10u);
  EXPECT_EQ(fixture("csaszar-torus").complex.facet_count(), 14u);
  EXPECT_EQ(fixture("paper-moebius").complex,
            SimplicialComplex::from_facets({{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {1, 4, 5}, {1, 2, 5}}, 5));
  const auto& cex1 = fixture("paper-cex1");
  EXPECT_EQ(cex1.complex, SimplicialComplex::from_facets({{1, 2, 3}, {1, 2, 4}, {1, 2, 5}}, 5));
  EXPECT_EQ(restrict_to_facets(cex1.complex, cex1.block_a),
            SimplicialComplex::from_facets({{1, 2, 3}, {1, 2, 4}}, 5));
  EXPECT_EQ(fixture("paper-moebius").source, FixtureSource::PublishedExample);
  EXPECT_EQ(fixture("csaszar-torus").source, FixtureSource::Standard);
  EXPECT_THROW(fixture("no-such-fixture"), Error);
}

TEST(Fixtures, OracleKnownValues) {
  EXPECT_EQ(oracle_betti(fixture("boundary-3-simplex").complex, FieldSpec()).nonzero(),
            (std::map<int, std::uint64_t>{{2, 1}}));
  EXPECT_EQ(oracle_betti(fixture("rp2-6").complex, FieldSpec::prime(2)).nonzero(),
            (std::map<int, std::uint64_t>{{1, 1}, {2, 1}}));
  EXPECT_EQ(oracle_betti(fixture("paper-moebius").complex, FieldSpec()).nonzero(),
            (std::map<int, std::uint64_t>{{1, 1}}));
}

TEST(Fixtures, OracleAgreesWithHomologyAndTestOracle) {
  for (const auto& fx : corpus()) {
    for (const auto& field : {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3)}) {
      const auto b = oracle_betti(fx.complex, field);
      EXPECT_EQ(b, reduced_betti(fx.complex, field)) << fx.name;
      EXPECT_EQ(b, oracle::reduced(fx.complex, field)) << fx.name;
    }
  }
}

TEST(Fixtures, OracleRejectsLargeComplexes) {
  // the 12-simplex has 2^13 faces
  std::vector<long long> big(13);
  for (int i = 0; i < 13; ++i) big[i] = i + 1;
  try {
    oracle_betti(SimplicialComplex::from_facets({big}, 13), FieldSpec());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
  }
}

// The manifest is written by an independent Python oracle; every recorded
// Betti vector must agree with both C++ computations.
TEST(Fixtures, ManifestMatchesOracles) {
  const auto m = manifest();
  ASSERT_EQ(m["fixtures"].size(), corpus().size());
  for (const auto& entry : m["fixtures"]) {
    const auto& fx = fixture(entry["name"].get<std::string>());
    EXPECT_EQ(entry["source"], std::string(to_string(fx.source)));
    EXPECT_EQ(entry["n"].get<std::size_t>(), fx.complex.n_vertices());
    EXPECT_EQ(entry["dimension"].get<int>(), fx.complex.dimension());
    for (const auto& [flag, values] : entry["fields"].items()) {
      const auto field = FieldSpec::parse(flag);
      const auto& rb = values["reduced_betti"];
      const BettiVector expected(rb["dims"].get<std::vector<std::uint64_t>>(),
                                 rb["lowest_degree"].get<int>());
      EXPECT_EQ(oracle_betti(fx.complex, field), expected) << fx.name << " " << flag;
      EXPECT_EQ(reduced_betti(fx.complex, field), expected) << fx.name << " " << flag;
    }
  }
}

}  // namespace
}  // namespace qgor
