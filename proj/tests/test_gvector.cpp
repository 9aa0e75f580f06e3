#include "doctest.h"
#include "gtt/gvector.hpp"

using namespace gtt;

namespace {

UniPoly up(std::initializer_list<long> coeffs) {
  std::vector<Rat> v;
  for (long c : coeffs) v.emplace_back(c);
  return UniPoly(v);
}

std::vector<Rat> rats(std::initializer_list<long> values) {
  std::vector<Rat> v;
  for (long c : values) v.emplace_back(c);
  return v;
}

}  // namespace

TEST_CASE("basis polynomials") {
  CHECK(g_basis_poly(0, 2) == UniPoly(1));
  CHECK(g_basis_poly(1, 2) == up({1, 1}));
  CHECK(g_basis_poly(2, 2) == up({1, 1, 1}));
  CHECK(g_basis_poly(3, 2) == up({1, 2, 2, 1}));  // (1+t+t^2)(1+t)
  CHECK(g_basis_poly(4, 2) == up({1, 1, 1}) * up({1, 1, 1}));
  CHECK(g_basis_poly(3, 1) == up({1, 1}).pow(3));
  CHECK(g_basis_poly(3, 5) == up({1, 1, 1, 1}));  // i >= d: plain geometric sum

  const auto basis = g_basis(5, 2);
  REQUIRE(basis.size() == 3);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    CHECK(basis[j].coeff(static_cast<int>(j)) == Rat(1));  // triangular
    for (std::size_t l = 0; l < j; ++l) CHECK(basis[j].coeff(static_cast<int>(l)) == Rat(0));
  }
}

TEST_CASE("coordinate extraction and reconstruction") {
  const UniPoly h = up({1, 3, 3, 1});
  CHECK(g_vector(h, 3, 2) == rats({1, 1}));
  CHECK(g_vector(h, 3, 1) == rats({1, 0}));  // (1+t)^3 exactly
  CHECK(h_from_g(g_vector(h, 3, 2), 3, 2) == h);

  const UniPoly h4 = up({1, 4, 6, 4, 1});
  const auto g4 = g_vector(h4, 4, 2);
  CHECK(h_from_g(g4, 4, 2) == h4);

  CHECK(g_vector(UniPoly(1), 0, 2) == rats({1}));
  CHECK_THROWS_AS(g_vector(up({1, 0, 0, 2}), 3, 2), std::domain_error);
}

TEST_CASE("h and F are changes of variable of one another") {
  const UniPoly h = up({1, 3, 3, 1});
  CHECK(F_from_h(h, 3) == up({0, 0, 0, 1}));
  CHECK(h_from_F(up({0, 0, 0, 1}), 3) == h);

  const UniPoly h2 = up({1, 0, 0, 1});
  const UniPoly F2 = F_from_h(h2, 3);
  CHECK(F2 == Rat(1, 4) * up({0, 3, 0, 1}));
  CHECK(h_from_F(F2, 3) == h2);
}

TEST_CASE("membership guardrail") {
  const auto oct = cross_polytope_boundary(3);
  const auto report = hs_membership(oct, 2, 3, false);
  CHECK(report.pass());

  const auto solid = SimplicialComplex::from_facets({{0, 1, 2, 3}});
  CHECK_FALSE(hs_membership(solid, 2, 4, false).pass());

  // Deep link checking stays happy on a genuine sphere.
  CHECK(hs_membership(cross_polytope_boundary(4), 2, 4, true).pass());
}

TEST_CASE("nonnegativity verdicts") {
  const auto oct = cross_polytope_boundary(3);
  const auto verdict = verify_g2_nonneg(oct);
  CHECK(verdict.membership.pass());
  CHECK(verdict.nonnegative);
  CHECK(verdict.g == rats({1, 1}));
  CHECK(g_vector(oct, 2) == rats({1, 1}));

  CHECK(check_g_monotone_instance(h_polynomial(oct), 3, 1));
  CHECK(check_g_monotone_instance(h_polynomial(oct), 3, 2));
  CHECK(check_g_join_instance(cross_polytope_boundary(2), cross_polytope_boundary(2), 2));
}

TEST_CASE("the three root-location conditions") {
  const auto oct = cross_polytope_boundary(3);
  const auto r = fstable_transforms(oct);
  CHECK(r.agree());
  CHECK(r.f_roots_in_unit_interval);
  CHECK(r.h_roots_negative);
  CHECK(r.g2_roots_in_left_unit);

  // 1 + t^3 = (1 + t)(1 - t + t^2): one real root, two complex, so every
  // condition fails, but they fail together.
  const auto bad = fstable_transforms(up({1, 0, 0, 1}), 3);
  CHECK(bad.agree());
  CHECK_FALSE(bad.f_roots_in_unit_interval);
  CHECK_FALSE(bad.h_roots_negative);
  CHECK_FALSE(bad.g2_roots_in_left_unit);

  CHECK_THROWS_AS(fstable_transforms(up({1, 2, 3}), 2), std::invalid_argument);
  CHECK_THROWS_AS(fstable_transforms(up({2, 1, 2}), 2), std::invalid_argument);
}

TEST_CASE("suspension multiplies h by one plus t") {
  const auto oct = cross_polytope_boundary(3);
  const auto poles = SimplicialComplex::from_facets({{6}, {7}});
  const auto susp = join(oct, poles);
  CHECK(h_polynomial(susp) == up({1, 1}) * h_polynomial(oct));
  CHECK(f_vector(susp) == f_vector(cross_polytope_boundary(4)));
}
