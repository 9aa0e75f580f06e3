#include "gtt/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "gtt/rational.hpp"
#include "json.hpp"

namespace gtt {

namespace {

using nlohmann::json;

json parse_or_throw(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const json& j, int indent) {
  return indent > 0 ? j.dump(indent) : j.dump();
}

Rat rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return parse_rational(std::to_string(j.get<long long>()));
  throw std::invalid_argument("coefficients must be strings like \"p/q\" or integers");
}

Face face_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("a face must be an array of vertex ids");
  std::vector<VertexId> verts;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw std::invalid_argument("vertex ids must be integers");
    verts.push_back(v.get<VertexId>());
  }
  return sorted_face(verts);
}

json face_to_json(const Face& f) {
  json a = json::array();
  for (VertexId v : f) a.push_back(v);
  return a;
}

int origin_from_string(const std::string& s) {
  if (s == "original") return 0;
  if (s.rfind("sub:", 0) == 0) {
    const int step = std::stoi(s.substr(4));
    if (step >= 1) return step;
  }
  throw std::invalid_argument("origin must be \"original\" or \"sub:<step>\"");
}

std::string origin_to_string(int step) {
  return step == 0 ? "original" : ("sub:" + std::to_string(step));
}

}  // namespace

std::string complex_to_json(const SimplicialComplex& K, int indent) {
  json j;
  json verts = json::array();
  for (const auto& [v, origin] : K.vertex_origin()) {
    verts.push_back(json{{"id", v}, {"origin", origin_to_string(origin)}});
  }
  j["vertices"] = std::move(verts);
  json facets = json::array();
  for (const auto& f : K.facets()) {
    if (f.empty() && K.dim() >= 0) continue;
    facets.push_back(face_to_json(f));
  }
  j["facets"] = std::move(facets);
  return dump(j, indent);
}

SimplicialComplex complex_from_json(const std::string& text) {
  const json j = parse_or_throw(text);
  if (!j.is_object() || !j.contains("facets") || !j["facets"].is_array()) {
    throw std::invalid_argument("complex JSON needs a \"facets\" array");
  }
  std::vector<Face> facets;
  for (const auto& f : j["facets"]) facets.push_back(face_from_json(f));
  SimplicialComplex K = SimplicialComplex::from_facets(facets);

  if (j.contains("vertices")) {
    if (!j["vertices"].is_array()) throw std::invalid_argument("\"vertices\" must be an array");
    std::map<VertexId, int> origins;
    for (const auto& entry : j["vertices"]) {
      if (!entry.is_object() || !entry.contains("id")) {
        throw std::invalid_argument("vertex entries need an \"id\"");
      }
      const VertexId id = entry["id"].get<VertexId>();
      const int origin =
          entry.contains("origin") ? origin_from_string(entry["origin"].get<std::string>()) : 0;
      if (!origins.emplace(id, origin).second) {
        throw std::invalid_argument("duplicate vertex id " + std::to_string(id));
      }
    }
    const auto actual = K.vertex_ids();
    if (origins.size() != actual.size()) {
      throw std::invalid_argument("vertex list does not match the vertices of the facets");
    }
    int max_step = 0;
    for (VertexId v : actual) {
      auto it = origins.find(v);
      if (it == origins.end()) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " missing from vertex list");
      }
      K.set_origin(v, it->second);
      max_step = std::max(max_step, it->second);
    }
    while (K.subdivision_steps() < max_step) K.bump_subdivision_step();
  }
  return K;
}

std::string template_to_json(const Template& L, int indent) {
  json j;
  j["k"] = L.k;
  json boundary = json::array();
  for (VertexId v : L.boundary) boundary.push_back(v);
  j["boundary"] = std::move(boundary);
  json facets = json::array();
  for (const auto& f : L.complex.facets()) facets.push_back(face_to_json(f));
  j["facets"] = std::move(facets);
  return dump(j, indent);
}

Template template_from_json(const std::string& text) {
  const json j = parse_or_throw(text);
  if (!j.is_object() || !j.contains("k") || !j.contains("boundary") || !j.contains("facets")) {
    throw std::invalid_argument("template JSON needs \"k\", \"boundary\" and \"facets\"");
  }
  Template L;
  L.k = j["k"].get<int>();
  for (const auto& v : j["boundary"]) {
    if (!v.is_number_integer()) throw std::invalid_argument("boundary ids must be integers");
    L.boundary.push_back(v.get<VertexId>());
  }
  std::vector<Face> facets;
  for (const auto& f : j["facets"]) facets.push_back(face_from_json(f));
  L.complex = SimplicialComplex::from_facets(facets);
  return L;
}

std::string plan_to_json(const SubdivisionPlan& plan, int indent) {
  json j;
  json order = json::array();
  for (const auto& f : plan.order) order.push_back(face_to_json(f));
  j["order"] = std::move(order);
  json bijections = json::array();
  for (std::size_t i = 0; i < plan.bijections.size(); ++i) {
    const auto& image = plan.bijections[i];
    if (image.empty()) {
      bijections.push_back(nullptr);
    } else {
      json pairs = json::array();
      for (std::size_t l = 0; l < image.size(); ++l) {
        pairs.push_back(json::array({static_cast<int>(l), image[l]}));
      }
      bijections.push_back(std::move(pairs));
    }
  }
  j["bijections"] = std::move(bijections);
  return dump(j, indent);
}

SubdivisionPlan plan_from_json(const std::string& text) {
  const json j = parse_or_throw(text);
  if (!j.is_object() || !j.contains("order") || !j["order"].is_array()) {
    throw std::invalid_argument("plan JSON needs an \"order\" array");
  }
  SubdivisionPlan plan;
  for (const auto& f : j["order"]) plan.order.push_back(face_from_json(f));
  if (j.contains("bijections") && !j["bijections"].is_null()) {
    const auto& bs = j["bijections"];
    if (!bs.is_array()) throw std::invalid_argument("\"bijections\" must be an array");
    for (const auto& entry : bs) {
      std::vector<VertexId> image;
      if (!entry.is_null()) {
        if (!entry.is_array()) {
          throw std::invalid_argument("each bijection must be null or an array of pairs");
        }
        std::map<int, VertexId> by_label;
        for (const auto& pair : entry) {
          if (!pair.is_array() || pair.size() != 2) {
            throw std::invalid_argument("bijection entries must be [label, vertex] pairs");
          }
          const int label = pair[0].get<int>();
          if (!by_label.emplace(label, pair[1].get<VertexId>()).second) {
            throw std::invalid_argument("duplicate label in bijection");
          }
        }
        for (int l = 0; l < static_cast<int>(by_label.size()); ++l) {
          auto it = by_label.find(l);
          if (it == by_label.end()) {
            throw std::invalid_argument("bijection labels must be 0..k with no gaps");
          }
          image.push_back(it->second);
        }
      }
      plan.bijections.push_back(std::move(image));
    }
  }
  return plan;
}

std::string unipoly_to_json(const UniPoly& p, const std::string& var, int indent) {
  json j;
  j["var"] = var;
  json coeffs = json::array();
  if (p.is_zero()) {
    coeffs.push_back("0");
  } else {
    for (const Rat& c : p.coeffs()) coeffs.push_back(rational_to_string(c));
  }
  j["coeffs"] = std::move(coeffs);
  return dump(j, indent);
}

UniPoly unipoly_from_json(const std::string& text) {
  const json j = parse_or_throw(text);
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw std::invalid_argument("polynomial JSON needs a \"coeffs\" array");
  }
  std::vector<Rat> coeffs;
  for (const auto& c : j["coeffs"]) coeffs.push_back(rational_from_json(c));
  return UniPoly(std::move(coeffs));
}

std::string bipoly_to_json(const BiPoly& p, const std::string& var_x,
                           const std::string& var_y, int indent) {
  json j;
  j["vars"] = json::array({var_x, var_y});
  json terms = json::array();
  for (const auto& [key, c] : p.terms()) {
    terms.push_back(json::array({key.first, key.second, rational_to_string(c)}));
  }
  j["terms"] = std::move(terms);
  return dump(j, indent);
}

BiPoly bipoly_from_json(const std::string& text) {
  const json j = parse_or_throw(text);
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    throw std::invalid_argument("polynomial JSON needs a \"terms\" array");
  }
  BiPoly p;
  for (const auto& term : j["terms"]) {
    if (!term.is_array() || term.size() != 3) {
      throw std::invalid_argument("terms must be [i, j, coefficient] triples");
    }
    const int i = term[0].get<int>();
    const int jj = term[1].get<int>();
    if (i < 0 || jj < 0) throw std::invalid_argument("exponents must be nonnegative");
    p += BiPoly::monomial(i, jj, rational_from_json(term[2]));
  }
  return p;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
  if (!out) throw std::runtime_error("failed while writing " + path);
}

}  // namespace gtt
