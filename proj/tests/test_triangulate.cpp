#include <algorithm>

#include "doctest.h"
#include "gtt/triangulate.hpp"

using namespace gtt;

namespace {

const SimplicialComplex kTwoTriangles = SimplicialComplex::from_facets({{1, 2, 3}, {1, 2, 4}});

bool has_apex(const SimplicialComplex& K) {
  const auto facets = K.facets();
  for (VertexId v : K.vertex_ids()) {
    bool in_all = true;
    for (const auto& f : facets) {
      if (!std::binary_search(f.begin(), f.end(), v)) {
        in_all = false;
        break;
      }
    }
    if (in_all) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("default and random plans cover each face once") {
  const Template L = build_path_template(1);
  const auto plan = default_plan(kTwoTriangles, L);
  CHECK(plan.order.size() == 5);
  CHECK_NOTHROW(validate_plan(kTwoTriangles, L, plan));

  const auto r1 = random_plan(kTwoTriangles, L, 42);
  const auto r2 = random_plan(kTwoTriangles, L, 42);
  CHECK(r1.order == r2.order);
  CHECK(r1.bijections == r2.bijections);
  CHECK_NOTHROW(validate_plan(kTwoTriangles, L, r1));

  SubdivisionPlan missing = plan;
  missing.order.pop_back();
  CHECK_THROWS_AS(validate_plan(kTwoTriangles, L, missing), std::invalid_argument);

  SubdivisionPlan dup = plan;
  dup.order.back() = dup.order.front();
  CHECK_THROWS_AS(validate_plan(kTwoTriangles, L, dup), std::invalid_argument);

  SubdivisionPlan bad_labels = plan;
  bad_labels.bijections.assign(plan.order.size(), {});
  bad_labels.bijections[0] = {9, 9};
  CHECK_THROWS_AS(validate_plan(kTwoTriangles, L, bad_labels), std::invalid_argument);
}

TEST_CASE("replacing one edge star with the one-point path") {
  SimplicialComplex W = kTwoTriangles;
  const Template L = build_path_template(1);
  const auto record = replace_face(W, L, {1, 2});
  CHECK(record.face == Face{1, 2});
  CHECK(record.interior_map.size() == 1);
  const VertexId fresh = record.interior_map.at(2);
  CHECK(fresh == 5);
  CHECK(f_vector(W) == std::vector<long long>{1, 5, 8, 4});
  CHECK_FALSE(W.contains({1, 2}));
  CHECK(W.contains({1, 3, fresh}));
  CHECK(W.vertex_origin().at(fresh) == 1);

  CHECK_THROWS_AS(replace_face(W, L, {1, 2}), std::invalid_argument);  // gone now
  CHECK_THROWS_AS(replace_face(W, L, {1, 3, 4}), std::invalid_argument);
}

TEST_CASE("full replacement of the two-triangle complex") {
  const Template L = build_path_template(1);
  const auto first = tchebyshev_triangulation(
      kTwoTriangles, L,
      SubdivisionPlan{{{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}}, {}});
  const auto last = tchebyshev_triangulation(
      kTwoTriangles, L,
      SubdivisionPlan{{{1, 3}, {2, 3}, {2, 4}, {1, 4}, {1, 2}}, {}});

  CHECK(f_vector(first.complex) == std::vector<long long>{1, 9, 16, 8});
  CHECK(f_vector(last.complex) == std::vector<long long>{1, 9, 16, 8});

  // Subdividing the shared edge first cones the whole complex over an
  // 8-cycle; postponing it destroys the cone point.
  CHECK(has_apex(first.complex));
  CHECK_FALSE(has_apex(last.complex));

  CHECK(flag_f_polynomial(first) == flag_f_polynomial(last));
  CHECK(first.old_vertices == std::set<VertexId>{1, 2, 3, 4});
  CHECK(first.steps.size() == 5);
}

TEST_CASE("labelings do not change the flag polynomial") {
  const Template L = build_path_template(2);  // asymmetric interior chain
  SubdivisionPlan swapped = default_plan(kTwoTriangles, L);
  swapped.bijections.assign(swapped.order.size(), {});
  for (std::size_t i = 0; i < swapped.order.size(); ++i) {
    swapped.bijections[i] = {swapped.order[i][1], swapped.order[i][0]};
  }
  const auto a = tchebyshev_triangulation(kTwoTriangles, L, default_plan(kTwoTriangles, L));
  const auto b = tchebyshev_triangulation(kTwoTriangles, L, swapped);
  CHECK(flag_f_polynomial(a) == flag_f_polynomial(b));
  CHECK(f_vector(a.complex) == f_vector(b.complex));
}

TEST_CASE("flag polynomial splits by vertex origin") {
  const Template L = build_path_template(1);
  const auto C = tchebyshev_triangulation(kTwoTriangles, L, default_plan(kTwoTriangles, L));
  const BiPoly flag = flag_f_polynomial(C);
  CHECK(flag == flag_f_polynomial(C.complex, C.old_vertices));

  // Specializing both variables to x recovers the plain f-polynomial.
  const UniPoly x = UniPoly::variable();
  CHECK(flag.substitute(x, x) == f_polynomial(C.complex));

  // Old vertices survive every replacement.
  const Rat old_count = flag.coeff(1, 0);
  CHECK(old_count == Rat(4));
}

TEST_CASE("subdividing a complex with no template faces is a no-op") {
  const Template L = build_star_template(3);
  const auto C = tchebyshev_triangulation(kTwoTriangles, L, default_plan(kTwoTriangles, L));
  CHECK(C.complex == kTwoTriangles);
  CHECK(C.steps.empty());
}
