#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "gtt/bipoly.hpp"
#include "gtt/simplicial.hpp"
#include "gtt/templates.hpp"

namespace gtt {

// Order in which the k-faces of the base complex are replaced, plus one
// labeling per face: bijections[i][j] is the vertex of order[i] playing the
// role of template boundary vertex j. An empty bijections vector (or an empty
// entry) means the default labeling j -> j-th smallest vertex.
struct SubdivisionPlan {
  std::vector<Face> order;
  std::vector<std::vector<VertexId>> bijections;
};

// Replaced complex plus the coloring data: old_vertices is the vertex set of
// the base complex; per-step records map template interior labels to the
// fresh vertex ids created at that step.
struct StepRecord {
  Face face;
  std::map<VertexId, VertexId> interior_map;
};

struct ColoredComplex {
  SimplicialComplex complex;
  std::set<VertexId> old_vertices;
  std::vector<StepRecord> steps;
};

// Plan listing the k-faces in their natural order with default labelings.
SubdivisionPlan default_plan(const SimplicialComplex& K, const Template& L);

// Uniformly shuffled order and uniformly chosen labelings, deterministic in
// the seed across platforms.
SubdivisionPlan random_plan(const SimplicialComplex& K, const Template& L,
                            std::uint64_t seed);

// Throws std::invalid_argument unless the plan lists every k-face of K
// exactly once and each labeling is a bijection onto the face's vertices.
void validate_plan(const SimplicialComplex& K, const Template& L,
                   const SubdivisionPlan& plan);

// Replaces the star of the single k-face sigma in place: boundary_image[j]
// is the vertex of sigma playing the role of template boundary vertex j
// (empty means ascending order). Returns the record of fresh vertices.
// Building block of tchebyshev_triangulation, exposed for step-by-step
// analyses; sigma must be a k-face of W.
StepRecord replace_face(SimplicialComplex& W, const Template& L, const Face& sigma,
                        const std::vector<VertexId>& boundary_image = {});

// Replaces the star of each k-face in plan order with a fresh copy of the
// template joined with the face's current link. Fresh interior vertices are
// never shared across steps; step i vertices carry origin tag
// (previous subdivision steps of K) + i.
ColoredComplex tchebyshev_triangulation(const SimplicialComplex& K,
                                        const Template& L,
                                        const SubdivisionPlan& plan);

// sum over faces of x^{|face ∩ old|} y^{|face \ old|}.
BiPoly flag_f_polynomial(const ColoredComplex& C);
BiPoly flag_f_polynomial(const SimplicialComplex& K,
                         const std::set<VertexId>& old_vertices);

}  // namespace gtt
