#include "doctest.h"
#include "gtt/tch.hpp"
#include "gtt/triangulate.hpp"

using namespace gtt;

namespace {

UniPoly up(std::initializer_list<long> coeffs) {
  std::vector<Rat> v;
  for (long c : coeffs) v.emplace_back(c);
  return UniPoly(v);
}

}  // namespace

TEST_CASE("classical chebyshev polynomials") {
  CHECK(classical_chebyshev_t(0) == UniPoly(1));
  CHECK(classical_chebyshev_t(1) == up({0, 1}));
  CHECK(classical_chebyshev_t(6) == up({-1, 0, 18, 0, -48, 0, 32}));
  CHECK(classical_chebyshev_u(3) == up({0, -4, 0, 8}));
  CHECK(classical_chebyshev_u(5) == up({0, 6, 0, -32, 0, 32}));
}

TEST_CASE("two-variable face counts of the one-point path") {
  TchFamily family(build_path_template(1));
  const BiPoly x = BiPoly::variable_x();
  const BiPoly y = BiPoly::variable_y();
  CHECK(family.fn(0) == BiPoly(1));
  CHECK(family.fn(1) == BiPoly(1) + x);
  CHECK(family.fn(2) == BiPoly(1) + Rat(2) * x + y + Rat(2) * (x * y));
  CHECK(family.i_hat(0) == BiPoly(1));
  CHECK(family.i_hat(1) == x);
  CHECK(family.i_hat(2) == y + Rat(2) * (x * y));
}

TEST_CASE("both face-count routes coincide") {
  for (int s : {1, 2}) {
    TchFamily family(build_path_template(s));
    for (int n = 0; n <= 6; ++n) CHECK(family.fn(n) == family.fn_inclusion_exclusion(n));
  }
  TchFamily star2(build_star_template(2));
  for (int n = 0; n <= 6; ++n) CHECK(star2.fn(n) == star2.fn_inclusion_exclusion(n));
}

TEST_CASE("face counts match replaced simplices") {
  TchFamily family(build_star_template(2));
  for (int n = 0; n <= 5; ++n) {
    Face all;
    for (int v = 0; v < n; ++v) all.push_back(v);
    const auto simplex = SimplicialComplex::from_facets({all});
    const Template& L = family.tmpl();
    const auto replaced = tchebyshev_triangulation(simplex, L, default_plan(simplex, L));
    CHECK(flag_f_polynomial(replaced) == family.fn(n));
  }
}

TEST_CASE("series identities hold through degree eight") {
  for (int s : {1, 3}) {
    TchFamily family(build_path_template(s));
    CHECK(family.f_series_identity_holds(8));
    CHECK(family.ihat_series_identity_holds(8));
  }
  TchFamily me25(build_iterated_stellar_template(2, {{0, 1, 2}, {0, 1, 3}}));
  CHECK(me25.f_series_identity_holds(8));
  CHECK(me25.ihat_series_identity_holds(8));
}

TEST_CASE("recurrence coefficients are pinned") {
  TchFamily p1(build_path_template(1));
  const auto c1 = p1.recurrence_coefficients();
  REQUIRE(c1.size() == 2);
  CHECK(c1[0] == up({0, 2}));
  CHECK(c1[1] == up({-1}));

  TchFamily p3(build_path_template(3));
  const auto c3 = p3.recurrence_coefficients();
  REQUIRE(c3.size() == 2);
  CHECK(c3[0] == up({0, 2}));
  CHECK(c3[1] == up({-3, 0, 2}));

  TchFamily me36(build_iterated_stellar_template(2, {{0, 1, 2}, {0, 1, 3}, {0, 3, 4}}));
  const auto c36 = me36.recurrence_coefficients();
  REQUIRE(c36.size() == 3);
  CHECK(c36[0] == up({0, 3}));
  CHECK(c36[1] == up({-6, 0, 3}));
  CHECK(c36[2] == up({0, 0, 0, 1}));
}

TEST_CASE("first-kind polynomials: pinned values and routes") {
  TchFamily p1(build_path_template(1));
  for (int n = 0; n <= 8; ++n) {
    CHECK(p1.t_direct(n) == classical_chebyshev_t(n));
    CHECK(p1.t_recurrence(n) == classical_chebyshev_t(n));
  }

  TchFamily p3(build_path_template(3));
  CHECK(p3.t_recurrence(5) == up({0, 45, 0, -120, 0, 76}));
  CHECK(p3.t_direct(5) == p3.t_recurrence(5));

  TchFamily me36(build_iterated_stellar_template(2, {{0, 1, 2}, {0, 1, 3}, {0, 3, 4}}));
  CHECK(me36.t_recurrence(5) == up({0, 36, 0, -132, 0, 97}));

  TchFamily star3(build_star_template(3));
  // Below the template dimension the polynomials are plain powers.
  for (int n = 0; n <= 3; ++n) CHECK(star3.t_direct(n) == UniPoly::monomial(n, Rat(1)));
  CHECK(star3.t_recurrence(6) == up({6, 0, -9, 0, -60, 0, 64}));
}

TEST_CASE("materialized cross-polytope route") {
  TchFamily p1(build_path_template(1));
  for (int n = 0; n <= 4; ++n) CHECK(p1.t_from_cross_polytope(n) == classical_chebyshev_t(n));

  TchFamily guarded(build_path_template(1), 3);
  CHECK_NOTHROW(guarded.t_from_cross_polytope(3));
  CHECK_THROWS_AS(guarded.t_from_cross_polytope(4), std::invalid_argument);
}

TEST_CASE("second-kind polynomials") {
  TchFamily p1(build_path_template(1));
  for (int n = 0; n <= 8; ++n) {
    CHECK(p1.u_direct(2, n) == classical_chebyshev_u(n));
    CHECK(p1.u_recurrence(2, n) == classical_chebyshev_u(n));
  }
  for (int n = 0; n + 1 <= 4; ++n) {
    CHECK(p1.u_from_cross_polytope(2, n) == classical_chebyshev_u(n));
  }

  // The defining transform annihilates low powers.
  TchFamily star2(build_star_template(2));
  for (int j = 2; j <= 3; ++j) {
    for (int power = 0; power <= j - 2; ++power) {
      CHECK(star2.u_transform_of_power(j, power).is_zero());
    }
    CHECK_FALSE(star2.u_transform_of_power(j, j - 1).is_zero());
  }
  CHECK_THROWS_AS(star2.u_direct(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(star2.u_direct(0, 1), std::invalid_argument);
}

TEST_CASE("template validation happens at construction") {
  Template bad;
  bad.k = 2;
  bad.complex = SimplicialComplex::from_facets({{0, 1, 2}});
  bad.boundary = {0, 1, 2};
  CHECK_THROWS_AS(TchFamily{bad}, std::invalid_argument);
  CHECK_THROWS_AS(TchFamily(build_path_template(1), -1), std::invalid_argument);
}
