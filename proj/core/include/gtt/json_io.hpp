#pragma once

#include <string>

#include "gtt/bipoly.hpp"
#include "gtt/simplicial.hpp"
#include "gtt/templates.hpp"
#include "gtt/triangulate.hpp"
#include "gtt/unipoly.hpp"

namespace gtt {

// All serializers produce deterministic output: object keys are emitted in
// sorted order and list orders are canonical (sorted faces, ascending vertex
// ids, ascending exponents). Parsers throw std::invalid_argument on
// malformed or inconsistent input.

std::string complex_to_json(const SimplicialComplex& K, int indent = 2);
SimplicialComplex complex_from_json(const std::string& text);

std::string template_to_json(const Template& L, int indent = 2);
Template template_from_json(const std::string& text);

std::string plan_to_json(const SubdivisionPlan& plan, int indent = 2);
SubdivisionPlan plan_from_json(const std::string& text);

std::string unipoly_to_json(const UniPoly& p, const std::string& var = "x", int indent = 2);
UniPoly unipoly_from_json(const std::string& text);

std::string bipoly_to_json(const BiPoly& p, const std::string& var_x = "x",
                           const std::string& var_y = "y", int indent = 2);
BiPoly bipoly_from_json(const std::string& text);

// Reads a whole file into a string (throws std::runtime_error when the file
// cannot be opened).
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace gtt
