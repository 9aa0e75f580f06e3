#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "gtt/unipoly.hpp"

namespace gtt {

using VertexId = int;

// Sorted duplicate-free list of vertex ids. The empty face is {}.
using Face = std::vector<VertexId>;

// Sorts and validates; throws std::invalid_argument on duplicate ids.
Face sorted_face(Face f);
bool face_subset(const Face& a, const Face& b);
Face face_union(const Face& a, const Face& b);
Face face_difference(const Face& a, const Face& b);
int face_intersection_size(const Face& a, const Face& b);
std::string face_to_string(const Face& f);

// Abstract simplicial complex with every face stored explicitly, including
// the empty face. Vertices carry an origin tag: 0 for vertices present at
// construction, s >= 1 for vertices created by subdivision step s. Fresh
// vertex ids come from a monotone counter scoped to the complex.
class SimplicialComplex {
 public:
  SimplicialComplex();  // the complex { {} }
  static SimplicialComplex from_facets(const std::vector<Face>& facets);

  const std::set<Face>& faces() const { return faces_; }
  bool contains(const Face& f) const { return faces_.count(f) > 0; }
  int dim() const;  // -1 for { {} }
  std::vector<Face> facets() const;
  std::vector<Face> faces_of_dim(int d) const;
  const std::map<VertexId, int>& vertex_origin() const { return origin_; }
  std::vector<VertexId> vertex_ids() const;
  int vertex_count() const { return static_cast<int>(origin_.size()); }
  int subdivision_steps() const { return steps_; }
  VertexId next_vertex_id() const { return next_id_; }

  // Face-set equality; origin tags are metadata and do not participate.
  bool operator==(const SimplicialComplex& o) const { return faces_ == o.faces_; }

  // Low-level mutators used by the subdivision routines. The caller is
  // responsible for keeping the face set downward closed; origins of vertices
  // that disappear must be pruned via prune_isolated_vertices().
  VertexId allocate_vertex(int origin_step);
  int bump_subdivision_step() { return ++steps_; }
  void insert_face(const Face& f);
  void erase_face(const Face& f) { faces_.erase(f); }
  void prune_isolated_vertices();
  void set_origin(VertexId v, int origin_step);

 private:
  std::set<Face> faces_;
  std::map<VertexId, int> origin_;
  int steps_ = 0;
  VertexId next_id_ = 0;
};

// Entry i is f_{i-1}, the number of faces with i vertices; entry 0 is 1 for
// the empty face. Length dim+2.
std::vector<long long> f_vector(const SimplicialComplex& K);

// f(K, x) = sum_i f_{i-1} x^i.
UniPoly f_polynomial(const SimplicialComplex& K);

// h_i = sum_{j<=i} (-1)^{i-j} C(n-j, i-j) f_{j-1} with n = dim+1.
UniPoly h_polynomial(const SimplicialComplex& K);

// F(K, x) = sum_j f_{j-1} ((x-1)/2)^j.
UniPoly F_polynomial(const SimplicialComplex& K);

// Faces tau with tau disjoint from f and tau union f a face. Throws when f is
// not a face.
SimplicialComplex link(const SimplicialComplex& K, const Face& f);

// All unions of a face of K and a face of M. Vertex sets must be disjoint.
SimplicialComplex join(const SimplicialComplex& K, const SimplicialComplex& M);

// Faces of dimension <= j (j >= -1).
SimplicialComplex skeleton(const SimplicialComplex& K, int j);

// Faces contained in the given vertex set.
SimplicialComplex induced_subcomplex(const SimplicialComplex& K,
                                     const std::set<VertexId>& vertices);

// Replaces the star of f with the cone over its boundary joined with the
// link. The new vertex gets the next monotone id, tagged with the next
// subdivision step; its id is reported through new_vertex when non-null.
// Requires f to be a nonempty face.
SimplicialComplex stellar_subdivision(const SimplicialComplex& K, const Face& f,
                                      VertexId* new_vertex = nullptr);

// Boundary complex of the d-dimensional cross-polytope: vertices 0..2d-1,
// antipodal pairs {2i, 2i+1}, faces = subsets with at most one vertex per
// pair. d = 0 gives { {} }.
SimplicialComplex cross_polytope_boundary(int d);

// Minimal non-faces: F not in K with every proper subset in K (|F| >= 1).
std::vector<Face> missing_faces(const SimplicialComplex& K);

// Largest dimension of a missing face; nullopt when K has none (K is a
// simplex).
std::optional<int> max_missing_dimension(const SimplicialComplex& K);

// Reduced Betti numbers over Q: entry i is b~_{i-1}, i = 0..dim+1 (so entry 0
// is b~_{-1}, which is 1 exactly for { {} }). Exact rational rank computation
// on simplicial boundary matrices.
std::vector<long long> reduced_betti(const SimplicialComplex& K);

// True when reduced_betti(K) is that of a sphere of dimension m: b~_m = 1 and
// all other entries 0. m = -1 means { {} }.
bool has_sphere_betti(const SimplicialComplex& K, int m);

// True when all reduced Betti numbers vanish.
bool has_ball_betti(const SimplicialComplex& K);

}  // namespace gtt
