#include <gtest/gtest.h>

#include "oracle.hpp"
#include "qgor/classify.hpp"
#include "qgor/error.hpp"
#include "qgor/fixtures.hpp"
#include "qgor/hochster.hpp"
#include "qgor/liaison.hpp"

namespace qgor {
namespace {

const SimplicialComplex& sphere() { return fixture("boundary-3-simplex").complex; }
const SimplicialComplex& torus() { return fixture("csaszar-torus").complex; }

std::size_t position(const SimplicialComplex& c, const Face& f) {
  const auto facets = c.facets();
  return static_cast<std::size_t>(std::find(facets.begin(), facets.end(), f) - facets.begin());
}

TEST(FacetPartition, ValidatesBlocks) {
  const auto p = FacetPartition::from_a(sphere(), {0, 1});
  EXPECT_EQ(p.b, (std::set<std::size_t>{2, 3}));
  auto expect_invalid = [](auto&& fn) {
    try {
      fn();
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::InvalidPartition);
    }
  };
  expect_invalid([] { FacetPartition::from_a(sphere(), {}); });
  expect_invalid([] { FacetPartition::from_a(sphere(), {0, 1, 2, 3}); });
  expect_invalid([] { FacetPartition::from_a(sphere(), {7}); });
  expect_invalid([] { FacetPartition{{0, 1}, {1, 2, 3}}.validate(sphere()); });
  expect_invalid([] { FacetPartition{{0}, {2, 3}}.validate(sphere()); });
}

TEST(Lefschetz, SphereWithTwoFacetsEachSide) {
  const auto p = FacetPartition::from_a(
      sphere(), {position(sphere(), Face{1, 2, 3}), position(sphere(), Face{1, 2, 4})});
  const auto r = lefschetz_report(sphere(), p, FieldSpec());
  EXPECT_TRUE(r.hypotheses.hold());
  ASSERT_EQ(r.terms.size(), 5u);
  const std::vector<std::string> labels{"H~^0(Delta_B)", "H~_1(Delta_A)", "H~^1(Delta)",
                                        "H~^1(Delta_B)", "H~_0(Delta_A)"};
  for (std::size_t k = 0; k < labels.size(); ++k) {
    EXPECT_EQ(r.terms[k].label, labels[k]);
    EXPECT_EQ(r.terms[k].dim, 0u);
  }
  EXPECT_EQ(r.alternating_sum, 0);
  EXPECT_TRUE(r.neighbor_bound_ok);
  EXPECT_TRUE(r.duality_pairs_equal());
}

TEST(Lefschetz, TermsAndPairsMatchOracleHomology) {
  for (const auto* name : {"csaszar-torus", "boundary-3-simplex", "rp2-6", "paper-cex2"}) {
    const auto& c = fixture(name).complex;
    for (const auto& a : oracle::subsets_up_to(c.facet_count(), 2)) {
      const auto p = FacetPartition::from_a(c, a);
      const auto da = p.complex_a(c), db = p.complex_b(c);
      for (const auto& field : {FieldSpec::rationals(), FieldSpec::prime(2)}) {
        const auto r = lefschetz_report(c, p, field);
        const int d = c.dimension();
        ASSERT_EQ(r.terms.size(), static_cast<std::size_t>(3 * d - 1));
        const auto ha = oracle::reduced(da, field), hb = oracle::reduced(db, field),
                   h = oracle::reduced(c, field);
        EXPECT_EQ(r.terms.front().dim, hb[0]);
        EXPECT_EQ(r.terms.back().dim, ha[0]);
        EXPECT_EQ(r.final_term_h1, ha[1]);
        const auto rel = oracle::relative(c, db, field);
        ASSERT_EQ(r.duality_pairs.size(), static_cast<std::size_t>(d - 1));
        for (const auto& pair : r.duality_pairs) {
          EXPECT_EQ(pair.relative_cohomology, rel[pair.i]);
          EXPECT_EQ(pair.homology_a, ha[d - pair.i]);
        }
        EXPECT_EQ(r.terms[2].dim, h[1]);
      }
    }
  }
}

TEST(Lefschetz, TorusSingleFacetSatisfiesDuality) {
  for (std::size_t i = 0; i < torus().facet_count(); ++i) {
    const auto r = lefschetz_report(torus(), FacetPartition::from_a(torus(), {i}), FieldSpec());
    EXPECT_TRUE(r.hypotheses.hold());
    EXPECT_TRUE(r.duality_pairs_equal());
    EXPECT_EQ(r.alternating_sum, 0);
    EXPECT_TRUE(r.neighbor_bound_ok);
    // H~^1(torus) = 2 must be passed along exactly
    EXPECT_EQ(r.terms[2].dim, 2u);
  }
}

TEST(Lefschetz, CounterexampleTwoReportsFailedHypothesis) {
  const auto& fx = fixture("paper-cex2");
  const auto r = lefschetz_report(fx.complex, FacetPartition::from_a(fx.complex, fx.block_a),
                                  FieldSpec());
  EXPECT_FALSE(r.hypotheses.buchsbaum_a);
  EXPECT_FALSE(r.hypotheses.quasi_gorenstein);
  EXPECT_EQ(r.terms.size(), 5u);
}

TEST(Lefschetz, RequiresPureComplex) {
  const auto c = SimplicialComplex::from_facets({{1, 2, 3}, {3, 4}}, 4);
  try {
    lefschetz_report(c, FacetPartition::from_a(c, {0}), FieldSpec());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPure);
  }
}

TEST(Lefschetz, ZeroDimensionalComplexHasNoTerms) {
  const auto& pts = fixture("two-points").complex;
  const auto r = lefschetz_report(pts, FacetPartition::from_a(pts, {0}), FieldSpec());
  EXPECT_TRUE(r.terms.empty());
  EXPECT_TRUE(r.duality_pairs.empty());
  EXPECT_EQ(r.alternating_sum, 0);
}

TEST(LinkRestriction, SphereEveryPartition) {
  for (const auto& a : oracle::subsets_up_to(4, 3)) {
    const auto r = link_restriction_check(sphere(), FacetPartition::from_a(sphere(), a),
                                          FieldSpec());
    EXPECT_TRUE(r.hypotheses.hold());
    EXPECT_TRUE(r.holds);
  }
}

TEST(LinkRestriction, TorusBuchsbaumDisc) {
  // three triangles around the edge-path 1-2, 2-4: {1,2,4}, {1,2,6}, {2,4,5}
  const std::set<std::size_t> a{position(torus(), Face{1, 2, 4}), position(torus(), Face{1, 2, 6}),
                                position(torus(), Face{2, 4, 5})};
  const auto p = FacetPartition::from_a(torus(), a);
  ASSERT_TRUE(is_buchsbaum(p.complex_a(torus()), FieldSpec()).holds);
  const auto r = link_restriction_check(torus(), p, FieldSpec());
  EXPECT_TRUE(r.hypotheses.hold());
  EXPECT_TRUE(r.holds);
}

TEST(LinkRestriction, ComparesAgainstBruteForceLinks) {
  for (const auto* name : {"paper-cex2", "csaszar-torus", "wedge-triangles"}) {
    const auto& c = fixture(name).complex;
    for (const auto& a : oracle::subsets_up_to(c.facet_count(), 2)) {
      if (a.size() == c.facet_count()) continue;
      const auto p = FacetPartition::from_a(c, a);
      const auto db = p.complex_b(c);
      const auto r = link_restriction_check(c, p, FieldSpec());
      std::size_t mismatches = 0;
      for (const Face& sigma : c.all_faces()) {
        if (sigma.empty()) continue;
        const std::vector<Vertex> s(sigma.vertices().begin(), sigma.vertices().end());
        const auto lk = oracle::link_faces(c, s);
        int top = -1;
        for (const auto& f : lk) top = std::max(top, static_cast<int>(f.size()) - 1);
        const auto hd = oracle::chain_homology(lk, FieldSpec());
        const auto hb = db.contains(sigma) ? oracle::chain_homology(oracle::link_faces(db, s),
                                                                    FieldSpec())
                                           : BettiVector();
        for (int j = -1; j < top; ++j) mismatches += hd[j] != hb[j];
      }
      EXPECT_EQ(r.mismatches.size(), mismatches) << name;
      EXPECT_EQ(r.holds, mismatches == 0) << name;
    }
  }
}

TEST(LinkRestriction, CounterexampleTwoFailsWithHypothesesNotMet) {
  const auto& fx = fixture("paper-cex2");
  const auto r = link_restriction_check(fx.complex, FacetPartition::from_a(fx.complex, fx.block_a),
                                        FieldSpec());
  EXPECT_FALSE(r.hypotheses.hold());
  EXPECT_FALSE(r.holds);
  EXPECT_FALSE(r.mismatches.empty());
}

// The check compares link degrees j < dim lk_Δ σ. Extending it to every
// degree below dim Δ breaks already on the 2-sphere: for A = {123} and σ = 1
// the full link is a 3-cycle while its restriction to Δ_B is a path.
TEST(LinkRestriction, RangeIsBoundedByTheLinkDimension) {
  const auto p = FacetPartition::from_a(sphere(), {position(sphere(), Face{1, 2, 3})});
  const auto lk = link(sphere(), Face{1});
  const auto lk_b = link(p.complex_b(sphere()), Face{1});
  EXPECT_EQ(oracle::reduced(lk, FieldSpec())[1], 1u);
  EXPECT_EQ(oracle::reduced(lk_b, FieldSpec())[1], 0u);
  EXPECT_TRUE(link_restriction_check(sphere(), p, FieldSpec()).holds);
}

TEST(CmLinkage, SphereWithOneFacet) {
  for (std::size_t i = 0; i < 4; ++i) {
    const auto r = cm_linkage_check(sphere(), FacetPartition::from_a(sphere(), {i}), FieldSpec());
    EXPECT_TRUE(r.checked);
    EXPECT_TRUE(r.holds);
  }
}

TEST(CmLinkage, FourCycleWithOneEdge) {
  const auto& c = fixture("four-cycle").complex;
  const auto r = cm_linkage_check(c, FacetPartition::from_a(c, {0}), FieldSpec());
  EXPECT_TRUE(r.checked);
  EXPECT_TRUE(r.holds);
}

TEST(CmLinkage, SkippedWhenNotQuasiGorenstein) {
  const auto& c = fixture("two-triangles").complex;
  const auto r = cm_linkage_check(c, FacetPartition::from_a(c, {0}), FieldSpec());
  EXPECT_FALSE(r.quasi_gorenstein);
  EXPECT_FALSE(r.checked);
}

TEST(CmLinkage, TablesCompareEntrywise) {
  const auto p = FacetPartition::from_a(torus(), {0});
  const auto r = cm_linkage_check(torus(), p, FieldSpec());
  ASSERT_TRUE(r.checked);
  const auto t = local_cohomology_table(torus(), FieldSpec());
  const auto tb = local_cohomology_table(p.complex_b(torus()), FieldSpec());
  bool agree = true;
  for (const Face& sigma : torus().all_faces()) {
    for (int i = 0; i < t.krull_dim(); ++i) agree &= t.entry(i, sigma) == tb.entry(i, sigma);
  }
  EXPECT_EQ(r.holds, agree);
  EXPECT_TRUE(r.holds);
}

TEST(Tconn, TorusSinglesAndAdjacentPairs) {
  for (std::size_t i = 0; i < torus().facet_count(); ++i) {
    EXPECT_TRUE(tconn_check(torus(), FacetPartition::from_a(torus(), {i}), FieldSpec()).connected);
  }
  std::size_t pairs = 0;
  for (const auto& a : oracle::subsets_up_to(torus().facet_count(), 2)) {
    if (a.size() != 2) continue;
    const auto p = FacetPartition::from_a(torus(), a);
    if (!is_buchsbaum(p.complex_a(torus()), FieldSpec()).holds) continue;
    const auto r = tconn_check(torus(), p, FieldSpec());
    EXPECT_TRUE(r.connected);
    EXPECT_EQ(r.components.size(), 1u);
    ++pairs;
  }
  EXPECT_GT(pairs, 0u);
}

TEST(Tconn, FourCycleOneEdge) {
  const auto& c = fixture("four-cycle").complex;
  const auto r = tconn_check(c, FacetPartition::from_a(c, {0}), FieldSpec());
  EXPECT_TRUE(r.connected);
}

TEST(Tconn, ReportsEveryFailedPremise) {
  const auto& cycle = fixture("four-cycle").complex;
  try {
    tconn_check(cycle, FacetPartition::from_a(cycle, {0, 2}), FieldSpec());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::HypothesesNotMet);
    EXPECT_NE(std::string(e.what()).find("|A|"), std::string::npos);
  }
  // two torus triangles meeting in one vertex
  std::optional<std::set<std::size_t>> pinched;
  for (const auto& a : oracle::subsets_up_to(torus().facet_count(), 2)) {
    if (a.size() == 2 && !is_buchsbaum(restrict_to_facets(torus(), a), FieldSpec()).holds) {
      pinched = a;
      break;
    }
  }
  ASSERT_TRUE(pinched.has_value());
  try {
    tconn_check(torus(), FacetPartition::from_a(torus(), *pinched), FieldSpec());
    FAIL();
  } catch (const Error& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("Buchsbaum"), std::string::npos);
    EXPECT_EQ(msg.find("quasi-Gorenstein"), std::string::npos);
  }
  const auto& rp2 = fixture("rp2-6").complex;
  try {
    tconn_check(rp2, FacetPartition::from_a(rp2, {0}), FieldSpec());
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("quasi-Gorenstein"), std::string::npos);
  }
}

}  // namespace
}  // namespace qgor
