#include "doctest.h"
#include "gtt/bipoly.hpp"
#include "gtt/rational.hpp"
#include "gtt/roots.hpp"
#include "gtt/series.hpp"
#include "gtt/unipoly.hpp"

using namespace gtt;

namespace {

UniPoly up(std::initializer_list<long> coeffs) {
  std::vector<Rat> v;
  for (long c : coeffs) v.emplace_back(c);
  return UniPoly(v);
}

}  // namespace

TEST_CASE("rational utilities") {
  CHECK(parse_rational("3/2") == Rat(3, 2));
  CHECK(parse_rational("-7") == Rat(-7));
  CHECK(rational_to_string(Rat(-3, 6)) == "-1/2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK(binom(7, 3) == Rat(35));
  CHECK(binom(3, 5) == Rat(0));
  CHECK_THROWS_AS(binom(-1, 2), std::invalid_argument);
  CHECK(factorial(5) == Rat(120));
  CHECK(pow2(-3) == Rat(1, 8));
  CHECK(pow2(10) == Rat(1024));
}

TEST_CASE("unipoly normalization and arithmetic") {
  CHECK(UniPoly().degree() == -1);
  CHECK(UniPoly(std::vector<Rat>{Rat(1), Rat(0), Rat(0)}).degree() == 0);
  const UniPoly x = UniPoly::variable();
  const UniPoly p = (x - UniPoly(1)) * (x + UniPoly(1));
  CHECK(p == up({-1, 0, 1}));
  CHECK(p.eval(Rat(3)) == Rat(8));
  CHECK(p.derivative() == up({0, 2}));
  CHECK((x + UniPoly(1)).pow(3) == up({1, 3, 3, 1}));
  CHECK(p.compose(x + UniPoly(1)) == up({0, 2, 1}));
  CHECK(UniPoly::monomial(4, Rat(1, 2)).coeff(4) == Rat(1, 2));
  CHECK(UniPoly::monomial(4, Rat(1, 2)).coeff(7) == Rat(0));
  CHECK((p - p).is_zero());
}

TEST_CASE("unipoly division and gcd") {
  const UniPoly a = up({1, 0, 0, 1});  // 1 + x^3
  const UniPoly b = up({1, 1});
  const auto [q, r] = divmod(a, b);
  CHECK(q == up({1, -1, 1}));
  CHECK(r.is_zero());
  CHECK(exact_div(a, b) == q);
  CHECK_THROWS_AS(exact_div(up({1, 1, 1}), b), std::domain_error);

  const UniPoly g = gcd(up({-1, 0, 1}) * up({1, 0, 1}), up({-2, 0, 2}));
  CHECK(g == up({-1, 0, 1}));  // monic
  CHECK(gcd(UniPoly(), UniPoly()).is_zero());
}

TEST_CASE("unipoly display") {
  CHECK(unipoly_to_display(up({-1, 0, 18, 0, -48, 0, 32})) ==
        "32*x^6 - 48*x^4 + 18*x^2 - 1");
  CHECK(unipoly_to_display(UniPoly()) == "0");
  CHECK(unipoly_to_display(up({0, 1}), "t") == "t");
}

TEST_CASE("bipoly arithmetic and substitution") {
  const BiPoly x = BiPoly::variable_x();
  const BiPoly y = BiPoly::variable_y();
  const BiPoly p = (x + y) * (x - y);
  CHECK(p == x.pow(2) - y.pow(2));
  CHECK(p.coeff(2, 0) == Rat(1));
  CHECK(p.coeff(1, 1) == Rat(0));
  CHECK(p.eval(Rat(3), Rat(2)) == Rat(5));
  CHECK(p.degree_x() == 2);
  CHECK(p.total_degree() == 2);

  const UniPoly t = UniPoly::variable();
  CHECK(p.substitute(t, UniPoly(1)) == up({-1, 0, 1}));
  CHECK(p.substitute(y, x) == y.pow(2) - x.pow(2));
  CHECK(p.coeff_of_x(0) == up({0, 0, -1}));
  CHECK(exact_div(p, x + y) == x - y);
  CHECK_THROWS_AS(exact_div(x.pow(2) + y, x + y), std::domain_error);
  CHECK(BiPoly::from_unipoly(up({1, 2}), false) == BiPoly(1) + Rat(2) * y);
  CHECK((x + y).derivative_x(1) == BiPoly(1));
  CHECK(x.pow(3).derivative_x(2) == Rat(6) * x);
}

TEST_CASE("series arithmetic and division") {
  const int order = 6;
  Series geometric(order);
  for (int n = 0; n <= order; ++n) geometric.set(n, BiPoly(1));
  Series one_minus_t(order);
  one_minus_t.set(0, BiPoly(1));
  one_minus_t.set(1, BiPoly(-1));
  Series one(order);
  one.set(0, BiPoly(1));

  CHECK(geometric * one_minus_t == one);
  CHECK(series_divide(one, one_minus_t) == geometric);

  Series num(order);
  num.set(2, BiPoly::variable_x());
  const Series q = series_divide(num, one_minus_t);
  CHECK(q.at(1).is_zero());
  CHECK(q.at(5) == BiPoly::variable_x());
}

TEST_CASE("squarefree decomposition") {
  const UniPoly p = up({1, -1}).pow(2) * up({2, 1});  // (1-x)^2 (2+x)
  const auto factors = squarefree_decomposition(p);
  REQUIRE(factors.size() == 2);
  UniPoly rebuilt(1);
  for (const auto& [q, mult] : factors) rebuilt = rebuilt * q.pow(mult);
  CHECK((Rat(1) / rebuilt.leading_coeff()) * rebuilt ==
        (Rat(1) / p.leading_coeff()) * p);
  CHECK(factors[0].second == 1);
  CHECK(factors[1].second == 2);
  CHECK(squarefree_part(p).degree() == 2);
}

TEST_CASE("sturm root counts match classical values") {
  // Chebyshev T_5: five simple roots, all inside (-1, 1).
  const UniPoly t5 = up({0, 5, 0, -20, 0, 16});
  CHECK(count_distinct_real_roots(t5, std::nullopt, std::nullopt) == 5);
  CHECK(count_distinct_real_roots(t5, Rat(-1), Rat(1)) == 5);
  CHECK(all_roots_real(t5));

  CHECK(count_distinct_real_roots(up({1, 0, 1}), std::nullopt, std::nullopt) == 0);
  CHECK_FALSE(all_roots_real(up({1, 0, 1})));

  const UniPoly m = up({1, -1}).pow(2) * up({2, 1});
  CHECK(count_distinct_real_roots(m, std::nullopt, std::nullopt) == 2);
  CHECK(count_real_roots_with_multiplicity(m) == 3);
  CHECK(all_roots_real(m));
  CHECK(count_real_roots_with_multiplicity(m, Rat(0), Rat(2)) == 2);

  // Open intervals exclude endpoint roots.
  const UniPoly p = up({-1, 0, 1});
  CHECK(count_distinct_real_roots(p, Rat(-1), Rat(1)) == 0);
  CHECK(count_distinct_real_roots(p, Rat(-2), Rat(2)) == 2);
  CHECK(count_distinct_real_roots(p, Rat(0), Rat(2)) == 1);
}

TEST_CASE("sturm handles the non-real-rooted sextic") {
  const UniPoly t6 = up({6, 0, -9, 0, -60, 0, 64});
  CHECK(count_distinct_real_roots(t6, std::nullopt, std::nullopt) == 4);
  CHECK(count_distinct_real_roots(t6, Rat(-1), Rat(1)) == 4);
  CHECK(count_real_roots_with_multiplicity(t6) == 4);
  CHECK_FALSE(all_roots_real(t6));
}

TEST_CASE("root count argument validation") {
  CHECK_THROWS_AS(count_distinct_real_roots(UniPoly(), std::nullopt, std::nullopt),
                  std::invalid_argument);
  CHECK_THROWS_AS(count_distinct_real_roots(up({1, 1}), Rat(1), Rat(-1)),
                  std::invalid_argument);
  CHECK(count_distinct_real_roots(UniPoly(5), std::nullopt, std::nullopt) == 0);
}
