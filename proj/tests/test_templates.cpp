#include "doctest.h"
#include "gtt/templates.hpp"

using namespace gtt;

TEST_CASE("path templates") {
  for (int s = 1; s <= 4; ++s) {
    const Template L = build_path_template(s);
    CHECK(L.k == 1);
    CHECK(L.boundary == std::vector<VertexId>{0, 1});
    CHECK(validate_template(L).empty());
    CHECK(static_cast<int>(L.interior_vertices().size()) == s);
    CHECK(static_cast<int>(L.complex.faces_of_dim(1).size()) == s + 1);
  }
  CHECK_THROWS_AS(build_path_template(0), std::invalid_argument);
}

TEST_CASE("star templates") {
  for (int k = 1; k <= 4; ++k) {
    const Template L = build_star_template(k);
    CHECK(L.k == k);
    CHECK(validate_template(L).empty());
    CHECK(L.interior_vertices() == std::vector<VertexId>{k + 1});
    CHECK(static_cast<int>(L.complex.faces_of_dim(k).size()) == k + 1);
  }
}

TEST_CASE("census splits faces by boundary and interior vertex counts") {
  const Template p1 = build_path_template(1);
  const FaceCensus c = census(p1);
  CHECK(c.k == 1);
  CHECK(c.at(0, 1) == 1);  // the interior vertex
  CHECK(c.at(1, 1) == 2);  // the two edges
  CHECK(c.at(0, 2) == 0);
  CHECK(c.at(2, 0) == 0);  // the full boundary face is missing

  const Template p3 = build_path_template(3);
  const FaceCensus c3 = census(p3);
  CHECK(c3.at(0, 1) == 3);
  CHECK(c3.at(1, 1) == 2);
  CHECK(c3.at(0, 2) == 2);
}

TEST_CASE("magic polynomial closed forms") {
  const BiPoly u = BiPoly::variable_x();
  const BiPoly v = BiPoly::variable_y();

  for (int s = 1; s <= 4; ++s) {
    const BiPoly expected = Rat(s) * v + Rat(2) * (u * v) + Rat(s - 1) * v.pow(2) - u.pow(2);
    CHECK(magic_polynomial(build_path_template(s)) == expected);
  }

  for (int k = 1; k <= 3; ++k) {
    const BiPoly expected =
        (BiPoly(1) + u).pow(k + 1) * v - (BiPoly(1) + v) * u.pow(k + 1);
    CHECK(magic_polynomial(build_star_template(k)) == expected);
  }
}

TEST_CASE("iterated stellar construction and the 2d census") {
  const Template star2 = build_iterated_stellar_template(2, {{0, 1, 2}});
  CHECK(star2.complex == build_star_template(2).complex);

  const Template me25 = build_iterated_stellar_template(2, {{0, 1, 2}, {0, 1, 3}});
  CHECK(validate_template(me25).empty());
  const Census2D c25 = census_2d(me25);
  CHECK(c25.m == 2);
  CHECK(c25.e == 5);

  const Template me36 =
      build_iterated_stellar_template(2, {{0, 1, 2}, {0, 1, 3}, {0, 3, 4}});
  CHECK(validate_template(me36).empty());
  const Census2D c36 = census_2d(me36);
  CHECK(c36.m == 3);
  CHECK(c36.e == 6);

  CHECK(census_2d(build_star_template(2)).m == 1);
  CHECK(census_2d(build_star_template(2)).e == 3);
  CHECK_THROWS_AS(census_2d(build_path_template(1)), std::invalid_argument);

  // The census pins every face class of a 2d template.
  const BiPoly u = BiPoly::variable_x();
  const BiPoly v = BiPoly::variable_y();
  const Rat m(static_cast<long>(c25.m)), e(static_cast<long>(c25.e));
  const BiPoly expected = m * v + e * (u * v) + (Rat(3) * m - e) * v.pow(2) +
                          Rat(3) * (u.pow(2) * v) + (e - Rat(3)) * (u * v.pow(2)) +
                          (Rat(2) * m + Rat(1) - e) * v.pow(3) - u.pow(3);
  CHECK(magic_polynomial(me25) == expected);
}

TEST_CASE("validator rejects malformed templates") {
  // Boundary edge {0, 1} subdivided: vertex 2 is declared boundary but the
  // face {0, 1} is required to be present as a boundary face.
  Template bad;
  bad.k = 2;
  bad.complex = SimplicialComplex::from_facets({{0, 2, 3}, {1, 2, 3}});
  bad.boundary = {0, 1, 2};
  CHECK_FALSE(validate_template(bad).empty());

  // The undivided simplex: its full face must be absent.
  Template solid;
  solid.k = 2;
  solid.complex = SimplicialComplex::from_facets({{0, 1, 2}});
  solid.boundary = {0, 1, 2};
  CHECK_FALSE(validate_template(solid).empty());

  // Wrong dimension.
  Template flat;
  flat.k = 2;
  flat.complex = SimplicialComplex::from_facets({{0, 2}, {1, 2}});
  flat.boundary = {0, 1, 2};
  CHECK_FALSE(validate_template(flat).empty());

  // Interior cycle: reduced Euler characteristic is not that of a ball.
  Template cycle;
  cycle.k = 1;
  cycle.complex = SimplicialComplex::from_facets({{0, 2}, {2, 3}, {1, 3}, {1, 2}});
  cycle.boundary = {0, 1};
  CHECK_FALSE(validate_template(cycle).empty());

  // Not pure: a dangling edge off the disk.
  Template impure;
  impure.k = 2;
  impure.complex = SimplicialComplex::from_facets({{0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {3, 4}});
  impure.boundary = {0, 1, 2};
  CHECK_FALSE(validate_template(impure).empty());
}

TEST_CASE("interior faces and boundary classification") {
  const Template L = build_star_template(2);
  CHECK(L.is_boundary_face({0, 1}));
  CHECK_FALSE(L.is_boundary_face({0, 1, 2}));  // the full face is not a template face
  CHECK_FALSE(L.is_boundary_face({3}));
  CHECK(L.interior_faces().size() == 7);  // {3} and its joins with proper boundary faces
}
