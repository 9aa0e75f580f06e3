#include <algorithm>

#include "doctest.h"
#include "gtt/simplicial.hpp"

using namespace gtt;

namespace {

UniPoly up(std::initializer_list<long> coeffs) {
  std::vector<Rat> v;
  for (long c : coeffs) v.emplace_back(c);
  return UniPoly(v);
}

}  // namespace

TEST_CASE("face helpers") {
  CHECK(sorted_face({3, 1, 2}) == Face{1, 2, 3});
  CHECK(face_subset({1, 3}, {1, 2, 3}));
  CHECK_FALSE(face_subset({1, 4}, {1, 2, 3}));
  CHECK(face_subset({}, {1}));
  CHECK(face_union({1, 3}, {2, 3}) == Face{1, 2, 3});
  CHECK(face_difference({1, 2, 3}, {2}) == Face{1, 3});
  CHECK(face_intersection_size({1, 2, 3}, {2, 3, 4}) == 2);
  CHECK(face_to_string({1, 2}) == "{1,2}");
  CHECK(face_to_string({}) == "{}");
}

TEST_CASE("construction stores every face including the empty one") {
  const auto K = SimplicialComplex::from_facets({{1, 2, 3}, {1, 2, 4}});
  CHECK(K.dim() == 2);
  CHECK(K.vertex_count() == 4);
  CHECK(K.contains({}));
  CHECK(K.contains({1, 4}));
  CHECK_FALSE(K.contains({3, 4}));
  CHECK(f_vector(K) == std::vector<long long>{1, 4, 5, 2});
  CHECK(K.facets() == std::vector<Face>{{1, 2, 3}, {1, 2, 4}});
  CHECK(K.faces_of_dim(-1) == std::vector<Face>{{}});
  CHECK(K.faces_of_dim(1).size() == 5);

  const SimplicialComplex empty;
  CHECK(empty.dim() == -1);
  CHECK(empty.facets() == std::vector<Face>{{}});
  CHECK(f_vector(empty) == std::vector<long long>{1});
}

TEST_CASE("octahedron counting polynomials") {
  const auto K = cross_polytope_boundary(3);
  CHECK(f_vector(K) == std::vector<long long>{1, 6, 12, 8});
  CHECK(h_polynomial(K) == up({1, 3, 3, 1}));
  CHECK(F_polynomial(K) == up({0, 0, 0, 1}));
  CHECK(f_polynomial(K) == up({1, 6, 12, 8}));

  // Dehn-Sommerville symmetry of h.
  const auto h = h_polynomial(K);
  for (int i = 0; i <= 3; ++i) CHECK(h.coeff(i) == h.coeff(3 - i));

  // The missing faces are the three antipodal diagonals.
  const auto missing = missing_faces(K);
  CHECK(missing == std::vector<Face>{{0, 1}, {2, 3}, {4, 5}});
  CHECK(max_missing_dimension(K) == 1);

  const auto full = SimplicialComplex::from_facets({{0, 1, 2}});
  CHECK_FALSE(max_missing_dimension(full).has_value());
}

TEST_CASE("two glued triangles have ball-like h") {
  const auto K = SimplicialComplex::from_facets({{1, 2, 3}, {1, 2, 4}});
  CHECK(h_polynomial(K) == up({1, 1}));
  CHECK(F_polynomial(K).eval(Rat(1)) == Rat(1));  // Euler relation at x = 1
}

TEST_CASE("link join skeleton") {
  const auto oct = cross_polytope_boundary(3);
  const auto lk = link(oct, {0});
  CHECK(f_vector(lk) == std::vector<long long>{1, 4, 4});
  CHECK(link(oct, {0, 2}).faces_of_dim(0).size() == 2);
  CHECK(link(oct, Face{}) == oct);

  const auto s0a = SimplicialComplex::from_facets({{0}, {1}});
  const auto s0b = SimplicialComplex::from_facets({{2}, {3}});
  const auto square = join(s0a, s0b);
  CHECK(f_vector(square) == f_vector(cross_polytope_boundary(2)));
  CHECK_THROWS_AS(join(s0a, s0a), std::invalid_argument);

  const auto solid = SimplicialComplex::from_facets({{0, 1, 2, 3}});
  CHECK(f_vector(skeleton(solid, 1)) == std::vector<long long>{1, 4, 6});
  CHECK(skeleton(solid, -1) == SimplicialComplex());
}

TEST_CASE("stellar subdivision of a facet and an edge") {
  const auto oct = cross_polytope_boundary(3);
  VertexId fresh = -1;
  const auto sub = stellar_subdivision(oct, {0, 2, 4}, &fresh);
  CHECK(fresh == 6);
  CHECK(f_vector(sub) == std::vector<long long>{1, 7, 15, 10});
  CHECK(h_polynomial(sub) == up({1, 4, 4, 1}));
  CHECK(sub.vertex_origin().at(fresh) == 1);
  CHECK(sub.subdivision_steps() == 1);

  const auto sub_edge = stellar_subdivision(oct, {0, 2});
  CHECK(f_vector(sub_edge) == std::vector<long long>{1, 7, 15, 10});

  CHECK_THROWS_AS(stellar_subdivision(oct, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(stellar_subdivision(oct, Face{}), std::invalid_argument);
}

TEST_CASE("cross polytope boundaries") {
  CHECK(f_vector(cross_polytope_boundary(1)) == std::vector<long long>{1, 2});
  CHECK(f_vector(cross_polytope_boundary(2)) == std::vector<long long>{1, 4, 4});
  const auto c4 = cross_polytope_boundary(4);
  CHECK(f_vector(c4) == std::vector<long long>{1, 8, 24, 32, 16});
  CHECK(F_polynomial(c4) == up({0, 0, 0, 0, 1}));
  CHECK(cross_polytope_boundary(0) == SimplicialComplex());
}

TEST_CASE("reduced betti numbers") {
  CHECK(reduced_betti(SimplicialComplex()) == std::vector<long long>{1});
  CHECK(reduced_betti(SimplicialComplex::from_facets({{0}, {1}})) ==
        std::vector<long long>{0, 1});
  CHECK(reduced_betti(cross_polytope_boundary(3)) ==
        std::vector<long long>{0, 0, 0, 1});
  CHECK(reduced_betti(SimplicialComplex::from_facets({{1, 2, 3}, {1, 2, 4}})) ==
        std::vector<long long>{0, 0, 0, 0});

  // Circle: nontrivial first homology.
  const auto circle = SimplicialComplex::from_facets({{0, 1}, {1, 2}, {0, 2}});
  CHECK(reduced_betti(circle) == std::vector<long long>{0, 0, 1});

  // Two disjoint circles: two components, two loops.
  const auto two = SimplicialComplex::from_facets(
      {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(reduced_betti(two) == std::vector<long long>{0, 1, 2});

  CHECK(has_sphere_betti(cross_polytope_boundary(3), 2));
  CHECK_FALSE(has_sphere_betti(cross_polytope_boundary(3), 1));
  CHECK(has_sphere_betti(SimplicialComplex::from_facets({{0}, {1}}), 0));
  CHECK(has_ball_betti(SimplicialComplex::from_facets({{1, 2, 3}, {1, 2, 4}})));
  CHECK_FALSE(has_ball_betti(circle));
}

TEST_CASE("induced subcomplex") {
  const auto oct = cross_polytope_boundary(3);
  const auto sub = induced_subcomplex(oct, {0, 2, 4});
  CHECK(f_vector(sub) == std::vector<long long>{1, 3, 3, 1});
  const auto none = induced_subcomplex(oct, {0, 1});
  CHECK(f_vector(none) == std::vector<long long>{1, 2});  // diagonal pair: no edge
}

TEST_CASE("vertex origins track subdivision steps") {
  const auto K = SimplicialComplex::from_facets({{1, 2, 3}});
  for (const auto& [v, origin] : K.vertex_origin()) CHECK(origin == 0);
  CHECK(K.next_vertex_id() == 4);
  CHECK(K.vertex_ids() == std::vector<VertexId>{1, 2, 3});
}
