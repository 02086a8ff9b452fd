#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qgor/field.hpp"
#include "qgor/simplicial_complex.hpp"

namespace qgor {

struct CollapseStep {
  Face free_face;
  Face coface;
  bool operator==(const CollapseStep&) const = default;
};

struct CollapseTrace {
  std::vector<CollapseStep> steps;
  SimplicialComplex start;
  SimplicialComplex end;
};

/// Result of the guided collapse. On failure `trace` is the partial trace and
/// `trace.end` the complex on which the procedure got stuck.
struct CollapseOutcome {
  bool succeeded = false;
  CollapseTrace trace;
  std::optional<Vertex> stuck_vertex;
  std::string reason;
};

/// Pairs (β, γ) where the nonempty face β lies in exactly one other face γ of
/// the complex. Such a γ is necessarily a facet with |γ| = |β| + 1. Listed in
/// canonical order of β.
std::vector<std::pair<Face, Face>> free_faces(const SimplicialComplex& complex);

/// Removes β and γ; both must form a free pair (unchecked).
SimplicialComplex elementary_collapse(const SimplicialComplex& complex, const Face& free_face,
                                      const Face& coface);

/// Collapses away every face meeting `forbidden_vertices`, one vertex at a time.
///
/// For the smallest forbidden vertex v still present, the link lk v is
/// collapsed greedily down to a single target vertex v' (the smallest link
/// vertex outside the forbidden set if there is one, else the smallest), each
/// link collapse (β, γ) being performed in the complex as (β ∪ v, γ ∪ v);
/// then (v, vv') is collapsed. Free pairs of the link are taken highest
/// coface dimension first, then in canonical order of β. Succeeds iff the
/// final complex equals faces_avoiding(complex, forbidden_vertices).
CollapseOutcome collapse_onto(const SimplicialComplex& complex,
                              const std::set<Vertex>& forbidden_vertices);

struct TraceVerification {
  bool valid = false;
  std::optional<std::size_t> invalid_step;  // 0-based index of the first illegal step
  bool end_matches = false;                 // replay reproduces trace.end
  bool betti_preserved = false;             // start and end have equal reduced Betti vectors
  std::string message;
};

/// Replays a trace, checking that every step removes a free pair, and that
/// the reduced Betti vectors of start and end agree over `field`.
TraceVerification verify_trace(const CollapseTrace& trace, const FieldSpec& field);

}  // namespace qgor
