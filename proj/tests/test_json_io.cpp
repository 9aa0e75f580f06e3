#include <cstdio>

#include "doctest.h"
#include "gtt/json_io.hpp"
#include "gtt/verify.hpp"

using namespace gtt;

TEST_CASE("complex round trip preserves faces and origins") {
  const auto K = cross_polytope_boundary(3);
  const auto parsed = complex_from_json(complex_to_json(K));
  CHECK(parsed == K);
  CHECK(parsed.vertex_origin() == K.vertex_origin());

  // A subdivided complex keeps its origin tags through serialization.
  const auto sub = stellar_subdivision(K, {0, 2, 4});
  const auto sub_parsed = complex_from_json(complex_to_json(sub));
  CHECK(sub_parsed == sub);
  CHECK(sub_parsed.vertex_origin().at(6) == 1);
  CHECK(sub_parsed.subdivision_steps() == 1);

  // The empty complex round-trips too.
  const SimplicialComplex empty;
  CHECK(complex_from_json(complex_to_json(empty)) == empty);
}

TEST_CASE("complex parser rejects malformed input") {
  CHECK_THROWS_AS(complex_from_json("{}"), std::invalid_argument);
  CHECK_THROWS_AS(complex_from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(complex_from_json(R"({"facets": [[0, 0]]})"), std::invalid_argument);
  // Vertex list inconsistent with the facets.
  CHECK_THROWS_AS(complex_from_json(
                      R"({"vertices": [{"id": 0, "origin": "original"}], "facets": [[0, 1]]})"),
                  std::invalid_argument);
}

TEST_CASE("template and plan round trips") {
  const Template L = build_iterated_stellar_template(2, {{0, 1, 2}, {0, 1, 3}});
  const Template parsed = template_from_json(template_to_json(L));
  CHECK(parsed.k == L.k);
  CHECK(parsed.boundary == L.boundary);
  CHECK(parsed.complex == L.complex);

  CHECK_THROWS_AS(template_from_json(R"({"boundary": [0, 1], "facets": [[0, 2]]})"),
                  std::invalid_argument);

  const auto K = SimplicialComplex::from_facets({{1, 2, 3}, {1, 2, 4}});
  auto plan = random_plan(K, build_path_template(1), 99);
  const auto plan_parsed = plan_from_json(plan_to_json(plan));
  CHECK(plan_parsed.order == plan.order);
  CHECK(plan_parsed.bijections == plan.bijections);

  CHECK_THROWS_AS(plan_from_json(R"({"order": [[0, 1]], "bijections": [[[0, 0], [2, 1]]]})"),
                  std::invalid_argument);  // label 2 with no label 1
}

TEST_CASE("polynomial round trips") {
  const UniPoly p(std::vector<Rat>{Rat(1, 2), Rat(0), Rat(-3)});
  CHECK(unipoly_from_json(unipoly_to_json(p)) == p);
  CHECK(unipoly_from_json(unipoly_to_json(UniPoly())).is_zero());
  CHECK_THROWS_AS(unipoly_from_json(R"({"coeffs": ["1/0"]})"), std::invalid_argument);

  const BiPoly q = BiPoly::monomial(2, 1, Rat(5, 3)) - BiPoly(1);
  CHECK(bipoly_from_json(bipoly_to_json(q)) == q);

  // Integer coefficients are accepted alongside strings.
  CHECK(unipoly_from_json(R"({"var": "x", "coeffs": [1, 2]})") ==
        UniPoly(std::vector<Rat>{Rat(1), Rat(2)}));
}

TEST_CASE("file io") {
  const std::string path = "gtt_test_io_tmp.json";
  write_text_file(path, "payload");
  CHECK(read_text_file(path) == "payload");
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_text_file("definitely/not/a/file.json"), std::runtime_error);
}

TEST_CASE("verification reports are deterministic and well-formed") {
  verify::VerifyOptions opts;
  opts.seed = 7;
  const auto a = verify::run_suite("genfun", opts);
  const auto b = verify::run_suite("genfun", opts);
  CHECK(verify::report_to_json(a) == verify::report_to_json(b));
  CHECK(verify::report_to_csv(a) == verify::report_to_csv(b));
  CHECK(a.pass());

  CHECK(verify::is_suite("fstable"));
  CHECK_FALSE(verify::is_suite("nope"));
  CHECK(verify::suite_names().size() == 13);
  CHECK_THROWS_AS(verify::run_suite("nope", opts), std::invalid_argument);

  // Items arrive sorted by key so reports never depend on execution order.
  for (std::size_t i = 1; i < a.items.size(); ++i) {
    const auto key = [](const verify::CheckItem& it) {
      return std::pair<std::string, std::string>(it.check, it.instance);
    };
    CHECK(key(a.items[i - 1]) <= key(a.items[i]));
  }
}

TEST_CASE("csv escaping") {
  verify::Report r;
  r.suite = "demo";
  verify::CheckItem item;
  item.check = "quote";
  item.instance = "a,b";
  item.claim = "says \"hi\"";
  item.pass = true;
  item.witness = "line";
  r.items.push_back(item);
  const std::string csv = verify::report_to_csv(r);
  CHECK(csv.find("\"a,b\"") != std::string::npos);
  CHECK(csv.find("\"says \"\"hi\"\"\"") != std::string::npos);
}
