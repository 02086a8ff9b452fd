#include "qgor/collapse.hpp"

#include <algorithm>

#include "qgor/homology.hpp"

namespace qgor {

namespace {

// Facets containing `face`, in canonical order.
std::vector<Face> facets_over(const SimplicialComplex& complex, const Face& face) {
  std::vector<Face> out;
  for (const Face& f : complex.facets()) {
    if (face.is_subset_of(f)) out.push_back(f);
  }
  return out;
}

bool is_free_pair(const SimplicialComplex& complex, const Face& free_face, const Face& coface) {
  if (free_face.empty() || coface.size() != free_face.size() + 1) return false;
  if (!free_face.is_subset_of(coface)) return false;
  const auto over = facets_over(complex, free_face);
  return over.size() == 1 && over.front() == coface;
}

}  // namespace

std::vector<std::pair<Face, Face>> free_faces(const SimplicialComplex& complex) {
  std::vector<std::pair<Face, Face>> out;
  for (int d = 0; d < complex.dimension(); ++d) {
    for (const Face& beta : complex.faces_of_dimension(d)) {
      const auto over = facets_over(complex, beta);
      if (over.size() == 1 && over.front().size() == beta.size() + 1) {
        out.emplace_back(beta, over.front());
      }
    }
  }
  return out;
}

SimplicialComplex elementary_collapse(const SimplicialComplex& complex, const Face& free_face,
                                      const Face& coface) {
  std::vector<Face> generators;
  for (const Face& f : complex.facets()) {
    if (f != coface) generators.push_back(f);
  }
  // The other codimension-one faces of γ survive.
  for (Vertex v : coface.vertices()) {
    Face ridge = coface.without(v);
    if (ridge != free_face) generators.push_back(std::move(ridge));
  }
  return SimplicialComplex::from_faces(std::move(generators), complex.n_vertices());
}

CollapseOutcome collapse_onto(const SimplicialComplex& complex,
                              const std::set<Vertex>& forbidden_vertices) {
  CollapseOutcome outcome;
  outcome.trace.start = complex;
  SimplicialComplex current = complex;

  auto stop = [&](std::optional<Vertex> v, std::string reason) {
    outcome.trace.end = current;
    outcome.stuck_vertex = v;
    outcome.reason = std::move(reason);
    return outcome;
  };

  while (true) {
    const auto used = current.used_vertices();
    auto it = std::find_if(used.begin(), used.end(),
                           [&](Vertex v) { return forbidden_vertices.contains(v); });
    if (it == used.end()) break;
    const Vertex v = *it;
    const Face apex{v};

    SimplicialComplex lk = link(current, apex);
    const auto link_vertices = lk.used_vertices();
    if (link_vertices.empty()) {
      return stop(v, "vertex " + std::to_string(v) + " is isolated and cannot be collapsed");
    }
    auto target_it = std::find_if(link_vertices.begin(), link_vertices.end(),
                                  [&](Vertex u) { return !forbidden_vertices.contains(u); });
    const Vertex target = target_it != link_vertices.end() ? *target_it : link_vertices.front();
    const Face target_face{target};

    while (!(lk.facet_count() == 1 && lk.facets().front() == target_face)) {
      auto pairs = free_faces(lk);
      std::erase_if(pairs, [&](const auto& p) { return p.first == target_face; });
      if (pairs.empty()) {
        return stop(v, "link of vertex " + std::to_string(v) + " has no usable free face: " +
                           [&] {
                             std::string s;
                             for (const Face& f : lk.facets()) s += f.to_string();
                             return s;
                           }());
      }
      std::stable_sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
        return a.second.size() > b.second.size();
      });
      const auto& [beta, gamma] = pairs.front();
      CollapseStep step{beta.with(v), gamma.with(v)};
      current = elementary_collapse(current, step.free_face, step.coface);
      outcome.trace.steps.push_back(std::move(step));
      lk = link(current, apex);
    }

    CollapseStep last{apex, apex.with(target)};
    current = elementary_collapse(current, last.free_face, last.coface);
    outcome.trace.steps.push_back(std::move(last));
  }

  outcome.trace.end = current;
  if (current == faces_avoiding(complex, forbidden_vertices)) {
    outcome.succeeded = true;
  } else {
    outcome.reason = "final complex differs from the faces avoiding the forbidden vertices";
  }
  return outcome;
}

TraceVerification verify_trace(const CollapseTrace& trace, const FieldSpec& field) {
  TraceVerification result;
  SimplicialComplex current = trace.start;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& step = trace.steps[i];
    if (!is_free_pair(current, step.free_face, step.coface)) {
      result.invalid_step = i;
      result.message = "step " + std::to_string(i) + ": " + step.free_face.to_string() +
                       " is not a free face with coface " + step.coface.to_string();
      return result;
    }
    current = elementary_collapse(current, step.free_face, step.coface);
  }
  result.end_matches = current == trace.end;
  if (!result.end_matches) {
    result.message = "replay does not reproduce the recorded end complex";
    return result;
  }
  if (trace.start.is_void() || current.is_void()) {
    result.betti_preserved = trace.start.is_void() && current.is_void();
  } else {
    result.betti_preserved =
        reduced_betti(trace.start, field) == reduced_betti(current, field);
  }
  if (!result.betti_preserved) result.message = "collapse changed the reduced Betti vector";
  result.valid = result.betti_preserved;
  return result;
}

}  // namespace qgor
