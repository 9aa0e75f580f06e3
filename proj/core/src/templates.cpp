#include "gtt/templates.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gtt {

std::vector<VertexId> Template::interior_vertices() const {
  std::vector<VertexId> ids;
  for (const auto& [v, s] : complex.vertex_origin()) {
    if (v > k) ids.push_back(v);
  }
  return ids;
}

bool Template::is_boundary_face(const Face& f) const {
  if (static_cast<int>(f.size()) > k) return false;
  return f.empty() || f.back() <= k;
}

std::vector<Face> Template::interior_faces() const {
  std::vector<Face> result;
  for (const Face& f : complex.faces()) {
    if (!is_boundary_face(f)) result.push_back(f);
  }
  return result;
}

namespace {

int boundary_vertex_count(const Template& L, const Face& f) {
  int count = 0;
  for (VertexId v : f) {
    if (v <= L.k) ++count;
  }
  return count;
}

}  // namespace

std::vector<std::string> validate_template(const Template& L) {
  std::vector<std::string> violations;
  const int k = L.k;
  if (k < 1) {
    violations.push_back("k must be >= 1");
    return violations;
  }
  std::vector<VertexId> expected(k + 1);
  std::iota(expected.begin(), expected.end(), 0);
  if (L.boundary != expected) {
    violations.push_back("boundary labels must be exactly 0..k");
    return violations;
  }
  for (VertexId v : expected) {
    if (!L.complex.contains(Face{v})) {
      violations.push_back("boundary vertex " + std::to_string(v) +
                           " is not a vertex of the complex");
    }
  }
  if (!violations.empty()) return violations;

  // Faces on the boundary vertex set must be exactly the proper subsets of
  // {0..k}: a full face would mean the simplex was never subdivided, a missing
  // proper subset means some boundary face was subdivided.
  Face full(expected.begin(), expected.end());
  if (L.complex.contains(full)) {
    violations.push_back("the full boundary set is a face; the simplex is not subdivided");
  }
  if (k <= 30) {
    for (unsigned mask = 0; mask + 1 < (1u << (k + 1)); ++mask) {
      Face sub;
      for (int i = 0; i <= k; ++i) {
        if (mask & (1u << i)) sub.push_back(i);
      }
      if (!L.complex.contains(sub)) {
        violations.push_back("boundary face " + face_to_string(sub) +
                             " of the simplex is missing");
      }
    }
  }

  if (L.complex.dim() != k) {
    violations.push_back("complex dimension is " + std::to_string(L.complex.dim()) +
                         ", expected " + std::to_string(k));
    return violations;
  }
  for (const Face& f : L.complex.facets()) {
    if (static_cast<int>(f.size()) != k + 1) {
      violations.push_back("not pure: maximal face " + face_to_string(f) +
                           " has dimension " + std::to_string(f.size() - 1));
    }
  }

  // Ridge condition: (k-1)-faces lie in exactly two facets, except boundary
  // ones which lie in exactly one.
  for (const Face& r : L.complex.faces_of_dim(k - 1)) {
    int cofacets = 0;
    for (const Face& f : L.complex.faces_of_dim(k)) {
      if (face_subset(r, f)) ++cofacets;
    }
    const int expected_count = L.is_boundary_face(r) ? 1 : 2;
    if (cofacets != expected_count) {
      violations.push_back("ridge " + face_to_string(r) + " lies in " +
                           std::to_string(cofacets) + " facets, expected " +
                           std::to_string(expected_count));
    }
  }

  // The triangulated simplex must look like a ball in homology.
  long long euler = 0;
  for (const Face& f : L.complex.faces()) {
    euler += f.size() % 2 == 0 ? -1 : 1;  // (-1)^{dim} with dim = |f|-1
  }
  if (euler != 0) {
    violations.push_back("reduced Euler characteristic is " + std::to_string(euler) +
                         ", expected 0");
  }
  if (!has_ball_betti(L.complex)) {
    violations.push_back("reduced Betti numbers do not vanish");
  }

  for (const Face& f : L.interior_faces()) {
    const SimplicialComplex lk = link(L.complex, f);
    const int interior_count = static_cast<int>(f.size()) - boundary_vertex_count(L, f);
    if (interior_count > 0) {
      const int sphere_dim = k - static_cast<int>(f.size());
      if (!has_sphere_betti(lk, sphere_dim)) {
        violations.push_back("link of " + face_to_string(f) +
                             " does not have the Betti numbers of a sphere of dimension " +
                             std::to_string(sphere_dim));
      }
    } else if (!has_ball_betti(lk)) {
      violations.push_back("link of " + face_to_string(f) +
                           " does not have vanishing reduced Betti numbers");
    }
  }
  return violations;
}

long long FaceCensus::at(int i, int j) const {
  const auto it = counts.find({i, j});
  return it == counts.end() ? 0 : it->second;
}

FaceCensus census(const Template& L) {
  FaceCensus c;
  c.k = L.k;
  for (const Face& f : L.interior_faces()) {
    const int i = boundary_vertex_count(L, f);
    const int j = static_cast<int>(f.size()) - i;
    ++c.counts[{i, j}];
  }
  return c;
}

Census2D census_2d(const Template& L) {
  if (L.k != 2) throw std::invalid_argument("census_2d requires k = 2");
  const FaceCensus c = census(L);
  Census2D result;
  result.m = static_cast<long long>(L.interior_vertices().size());
  result.e = c.at(1, 1);
  const long long m = result.m, e = result.e;
  const auto f = f_vector(L.complex);
  auto expect = [](bool ok, const std::string& what) {
    if (!ok) throw std::logic_error("2-dimensional template census identity failed: " + what);
  };
  expect(c.at(0, 1) == m, "interior vertex count");
  expect(f[1] == m + 3, "f_0 = m + 3");
  expect(f[2] == 3 * (m + 1), "f_1 = 3(m + 1)");
  expect(f[3] == 2 * m + 1, "f_2 = 2m + 1");
  expect(c.at(0, 2) == 3 * m - e, "interior-interior edge count");
  expect(c.at(2, 1) == 3, "triangles with two boundary vertices");
  expect(c.at(1, 2) == e - 3, "triangles with one boundary vertex");
  expect(c.at(0, 3) == 2 * m + 1 - e, "interior triangles");
  expect(e <= std::min(2 * m + 1, 3 * m), "e <= min(2m+1, 3m)");
  expect(e != 3 * m || (m == 1 && e == 3), "e = 3m only for (m, e) = (1, 3)");
  return result;
}

BiPoly magic_polynomial(const Template& L) {
  const FaceCensus c = census(L);
  BiPoly r;
  for (const auto& [key, count] : c.counts) {
    r += BiPoly::monomial(key.first, key.second, Rat(static_cast<long>(count)));
  }
  r -= BiPoly::monomial(L.k + 1, 0, Rat(1));
  return r;
}

Template build_path_template(int s) {
  if (s < 1) throw std::invalid_argument("path template requires s >= 1 interior vertices");
  std::vector<Face> facets;
  facets.push_back(Face{0, 2});
  for (int i = 2; i < s + 1; ++i) facets.push_back(Face{i, i + 1});
  facets.push_back(Face{1, s + 1});
  Template L;
  L.k = 1;
  L.boundary = {0, 1};
  L.complex = SimplicialComplex::from_facets(facets);
  return L;
}

Template build_star_template(int k) {
  if (k < 1) throw std::invalid_argument("star template requires k >= 1");
  std::vector<Face> facets;
  for (int skip = 0; skip <= k; ++skip) {
    Face f;
    for (int v = 0; v <= k; ++v) {
      if (v != skip) f.push_back(v);
    }
    f.push_back(k + 1);
    facets.push_back(sorted_face(std::move(f)));
  }
  Template L;
  L.k = k;
  L.boundary.resize(k + 1);
  std::iota(L.boundary.begin(), L.boundary.end(), 0);
  L.complex = SimplicialComplex::from_facets(facets);
  return L;
}

Template build_iterated_stellar_template(int k, const std::vector<Face>& steps) {
  if (k < 1) throw std::invalid_argument("template requires k >= 1");
  if (steps.empty()) {
    throw std::invalid_argument("at least one stellar step is required");
  }
  Face full(k + 1);
  std::iota(full.begin(), full.end(), 0);
  SimplicialComplex K = SimplicialComplex::from_facets({full});
  for (const Face& raw : steps) {
    const Face f = sorted_face(raw);
    if (f.size() < 2) {
      throw std::invalid_argument("stellar step must target a face of dimension >= 1");
    }
    if (!K.contains(f)) {
      throw std::invalid_argument("stellar step targets a non-face: " + face_to_string(f));
    }
    if (f.back() <= k && f != full) {
      throw std::invalid_argument(
          "stellar step would place a vertex on the simplex boundary: " +
          face_to_string(f));
    }
    K = stellar_subdivision(K, f);
  }
  Template L;
  L.k = k;
  L.boundary.resize(k + 1);
  std::iota(L.boundary.begin(), L.boundary.end(), 0);
  L.complex = std::move(K);
  return L;
}

}  // namespace gtt
