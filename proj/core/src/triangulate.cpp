#include "gtt/triangulate.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace gtt {

SubdivisionPlan default_plan(const SimplicialComplex& K, const Template& L) {
  SubdivisionPlan plan;
  plan.order = K.faces_of_dim(L.k);
  return plan;
}

SubdivisionPlan random_plan(const SimplicialComplex& K, const Template& L,
                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  // Samples below use modulo on raw engine output: mt19937_64 is fully
  // specified by the standard, so plans are reproducible across platforms.
  // The modulo bias is irrelevant here.
  SubdivisionPlan plan;
  plan.order = K.faces_of_dim(L.k);
  for (std::size_t i = plan.order.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(plan.order[i - 1], plan.order[j]);
  }
  plan.bijections.reserve(plan.order.size());
  for (const Face& f : plan.order) {
    std::vector<VertexId> image(f.begin(), f.end());
    for (std::size_t i = image.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(rng() % i);
      std::swap(image[i - 1], image[j]);
    }
    plan.bijections.push_back(std::move(image));
  }
  return plan;
}

void validate_plan(const SimplicialComplex& K, const Template& L,
                   const SubdivisionPlan& plan) {
  const std::vector<Face> expected = K.faces_of_dim(L.k);
  std::set<Face> listed;
  for (const Face& f : plan.order) {
    if (static_cast<int>(f.size()) != L.k + 1 || !K.contains(f)) {
      throw std::invalid_argument("plan lists a face that is not a " +
                                  std::to_string(L.k) + "-face: " + face_to_string(f));
    }
    if (!listed.insert(f).second) {
      throw std::invalid_argument("plan lists face twice: " + face_to_string(f));
    }
  }
  if (listed.size() != expected.size()) {
    throw std::invalid_argument("plan must list every " + std::to_string(L.k) +
                                "-face exactly once");
  }
  if (!plan.bijections.empty() && plan.bijections.size() != plan.order.size()) {
    throw std::invalid_argument("plan has " + std::to_string(plan.bijections.size()) +
                                " labelings for " + std::to_string(plan.order.size()) +
                                " faces");
  }
  for (std::size_t i = 0; i < plan.bijections.size(); ++i) {
    const auto& image = plan.bijections[i];
    if (image.empty()) continue;  // default labeling
    Face sorted_image(image.begin(), image.end());
    std::sort(sorted_image.begin(), sorted_image.end());
    if (sorted_image != plan.order[i]) {
      throw std::invalid_argument("labeling for face " + face_to_string(plan.order[i]) +
                                  " is not a bijection onto its vertices");
    }
  }
}

StepRecord replace_face(SimplicialComplex& W, const Template& L, const Face& sigma,
                        const std::vector<VertexId>& boundary_image) {
  if (static_cast<int>(sigma.size()) != L.k + 1 || !W.contains(sigma)) {
    throw std::invalid_argument("not a " + std::to_string(L.k) +
                                "-face of the complex: " + face_to_string(sigma));
  }
  std::vector<VertexId> image_of_boundary(sigma.begin(), sigma.end());
  if (!boundary_image.empty()) {
    Face sorted_image(boundary_image.begin(), boundary_image.end());
    std::sort(sorted_image.begin(), sorted_image.end());
    if (sorted_image != sigma) {
      throw std::invalid_argument("labeling for face " + face_to_string(sigma) +
                                  " is not a bijection onto its vertices");
    }
    image_of_boundary = boundary_image;
  }

  const int tag = W.bump_subdivision_step();
  StepRecord record;
  record.face = sigma;
  std::map<VertexId, VertexId> image;
  for (int j = 0; j <= L.k; ++j) image[j] = image_of_boundary[j];
  for (VertexId w : L.interior_vertices()) {
    const VertexId fresh = W.allocate_vertex(tag);
    image[w] = fresh;
    record.interior_map[w] = fresh;
  }

  // Star of sigma in the current complex; its link survives.
  std::vector<Face> star;
  for (const Face& g : W.faces()) {
    if (face_subset(sigma, g)) star.push_back(g);
  }
  std::vector<Face> link_faces;
  link_faces.reserve(star.size());
  for (const Face& g : star) link_faces.push_back(face_difference(g, sigma));
  for (const Face& g : star) W.erase_face(g);

  for (const Face& t : L.complex.faces()) {
    Face mapped;
    mapped.reserve(t.size());
    for (VertexId v : t) mapped.push_back(image.at(v));
    std::sort(mapped.begin(), mapped.end());
    for (const Face& tau : link_faces) W.insert_face(face_union(mapped, tau));
  }
  return record;
}

ColoredComplex tchebyshev_triangulation(const SimplicialComplex& K,
                                        const Template& L,
                                        const SubdivisionPlan& plan) {
  validate_plan(K, L, plan);
  ColoredComplex result;
  result.complex = K;
  for (const auto& [v, s] : K.vertex_origin()) result.old_vertices.insert(v);

  for (std::size_t step = 0; step < plan.order.size(); ++step) {
    const std::vector<VertexId> labeling =
        step < plan.bijections.size() ? plan.bijections[step] : std::vector<VertexId>{};
    result.steps.push_back(replace_face(result.complex, L, plan.order[step], labeling));
  }
  return result;
}

BiPoly flag_f_polynomial(const SimplicialComplex& K,
                         const std::set<VertexId>& old_vertices) {
  BiPoly flag;
  for (const Face& f : K.faces()) {
    int old_count = 0;
    for (VertexId v : f) old_count += old_vertices.count(v) ? 1 : 0;
    flag += BiPoly::monomial(old_count, static_cast<int>(f.size()) - old_count, Rat(1));
  }
  return flag;
}

BiPoly flag_f_polynomial(const ColoredComplex& C) {
  return flag_f_polynomial(C.complex, C.old_vertices);
}

}  // namespace gtt
