#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "qgor/classify.hpp"
#include "qgor/collapse.hpp"
#include "qgor/graphs.hpp"
#include "qgor/hochster.hpp"
#include "qgor/homology.hpp"
#include "qgor/liaison.hpp"
#include "qgor/simplicial_complex.hpp"

// JSON views of the library's reports. Facet positions are written 1-based,
// matching the numbering printed by `qgor classify --list-facets`.
namespace qgor::serial {

using nlohmann::json;

json face(const Face& f);
json complex(const SimplicialComplex& c);
json betti(const BettiVector& b);
json table(const LocalCohomologyTable& t);
json witness(const Witness& w);
json classification(const ClassificationReport& r);
json partition(const FacetPartition& p);
json lefschetz(const LefschetzReport& r);
json link_restriction(const LinkRestrictionReport& r);
json cm_linkage(const CmLinkageReport& r);
json gamma(const GammaGraph& g, const ConnectivityReport& connectivity);
json trace(const CollapseTrace& t);
json collapse(const CollapseOutcome& outcome, const TraceVerification& verification);

/// Graphviz rendering of Γ_t; nodes are labelled by their facets.
std::string gamma_dot(const GammaGraph& g, const SimplicialComplex& c);

}  // namespace qgor::serial
