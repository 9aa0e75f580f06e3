#pragma once

#include <map>
#include <string>
#include <vector>

#include "gtt/bipoly.hpp"
#include "gtt/simplicial.hpp"

namespace gtt {

// A triangulation of the k-simplex whose new vertices lie in the interior.
// Boundary vertices are canonically labeled 0..k; interior vertices carry
// labels >= k+1.
struct Template {
  int k = 0;
  SimplicialComplex complex;
  std::vector<VertexId> boundary;  // always 0..k

  std::vector<VertexId> interior_vertices() const;
  bool is_boundary_face(const Face& f) const;  // f proper subset of {0..k}
  // Faces not in the boundary complex of the k-simplex.
  std::vector<Face> interior_faces() const;
};

// Necessary combinatorial conditions for a template:
//  - boundary labels are exactly 0..k with k >= 1;
//  - the faces on the boundary vertex set are exactly the proper subsets;
//  - the complex is pure of dimension k;
//  - every (k-1)-face lies in 2 facets, or 1 when it is a boundary face;
//  - the complex has vanishing reduced Betti numbers (and Euler check);
//  - the link of an interior face with an interior vertex has the Betti
//    numbers of a sphere of complementary dimension; without an interior
//    vertex it must have vanishing ones.
// Returns human-readable violations; empty means the template is accepted.
std::vector<std::string> validate_template(const Template& L);

// Counts n_{i,j} of faces outside the simplex boundary with i boundary and j
// interior vertices.
struct FaceCensus {
  int k = 0;
  std::map<std::pair<int, int>, long long> counts;
  long long at(int i, int j) const;
};
FaceCensus census(const Template& L);

// For k = 2: m = number of interior vertices, e = number of edges from the
// boundary to the interior. Asserts the forced count identities
// (f_0 = m+3, f_1 = 3(m+1), f_2 = 2m+1, the census breakdown, and
// e <= min(2m+1, 3m) with e = 3m only for (m,e) = (1,3)).
struct Census2D {
  long long m = 0;
  long long e = 0;
};
Census2D census_2d(const Template& L);

// r_L(u, v) = sum over faces outside the simplex boundary of u^i v^j minus
// u^{k+1}, where i and j count boundary and interior vertices. Variables are
// (u, v) in that order.
BiPoly magic_polynomial(const Template& L);

// Path subdivision of the 1-simplex with s >= 1 interior vertices
// 2..s+1 strung between boundary vertices 0 and 1.
Template build_path_template(int s);

// Cone over the boundary of the k-simplex with a single interior apex k+1.
Template build_star_template(int k);

// Starts from the solid k-simplex and applies stellar subdivisions at the
// given faces (in current labels; fresh vertices take k+1, k+2, ... in step
// order). Each step must target a face of dimension >= 1 that is not
// contained in the simplex boundary.
Template build_iterated_stellar_template(int k, const std::vector<Face>& steps);

}  // namespace gtt
