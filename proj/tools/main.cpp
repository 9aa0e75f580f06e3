// gtt: batch front door for the triangulation library. Loads complexes,
// templates, plans, and polynomials from JSON, runs single computations or
// named verification suites, and emits deterministic JSON/CSV reports.
//
// Exit codes: 0 all checks passed, 1 a check failed (details in the report),
// 2 usage or input error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gtt/gvector.hpp"
#include "gtt/json_io.hpp"
#include "gtt/rational.hpp"
#include "gtt/roots.hpp"
#include "gtt/simplicial.hpp"
#include "gtt/tch.hpp"
#include "gtt/templates.hpp"
#include "gtt/triangulate.hpp"
#include "gtt/unipoly.hpp"
#include "gtt/verify.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;
using namespace gtt;

int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  try {
    return std::stoi(v);
  } catch (...) {
    return fallback;
  }
}

void emit(const json& j, const std::string& out_path) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
}

json coeff_list(const UniPoly& p, int pad_to = -1) {
  json coeffs = json::array();
  const int top = std::max(p.degree(), pad_to);
  for (int i = 0; i <= top; ++i) coeffs.push_back(rational_to_string(p.coeff(i)));
  if (coeffs.empty()) coeffs.push_back("0");
  return coeffs;
}

std::vector<Rat> parse_coeffs(const std::string& text) {
  std::vector<Rat> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    std::istringstream parts(token);
    std::string piece;
    while (parts >> piece) out.push_back(parse_rational(piece));
  }
  return out;
}

int run_validate_template(const std::string& file) {
  const Template L = template_from_json(read_text_file(file));
  const auto violations = validate_template(L);
  json out;
  out["file"] = file;
  out["k"] = L.k;
  out["valid"] = violations.empty();
  out["violations"] = violations;
  emit(out, "");
  return violations.empty() ? 0 : 1;
}

int run_census(const std::string& file) {
  const Template L = template_from_json(read_text_file(file));
  const auto c = census(L);
  json counts = json::array();
  for (const auto& [key, n] : c.counts) {
    counts.push_back({{"boundary", key.first}, {"interior", key.second}, {"count", n}});
  }
  json out;
  out["k"] = c.k;
  out["counts"] = std::move(counts);
  if (L.k == 2) {
    const auto c2 = census_2d(L);
    out["m"] = c2.m;
    out["e"] = c2.e;
  }
  emit(out, "");
  return 0;
}

int run_magic(const std::string& file) {
  const Template L = template_from_json(read_text_file(file));
  const BiPoly p = magic_polynomial(L);
  json out = json::parse(bipoly_to_json(p, "u", "v", 0));
  emit(out, "");
  return 0;
}

int run_triangulate(const std::string& kfile, const std::string& lfile,
                    std::optional<unsigned long long> seed, const std::string& plan_file,
                    const std::string& out_path) {
  const SimplicialComplex K = complex_from_json(read_text_file(kfile));
  const Template L = template_from_json(read_text_file(lfile));
  SubdivisionPlan plan;
  if (!plan_file.empty()) {
    plan = plan_from_json(read_text_file(plan_file));
  } else if (seed) {
    plan = random_plan(K, L, *seed);
  } else {
    plan = default_plan(K, L);
  }
  const auto W = tchebyshev_triangulation(K, L, plan);
  const std::string text = complex_to_json(W.complex);
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    write_text_file(out_path, text + "\n");
    json summary;
    summary["written"] = out_path;
    summary["f"] = f_vector(W.complex);
    summary["steps"] = W.steps.size();
    emit(summary, "");
  }
  return 0;
}

int run_fvec(const std::string& file, const std::string& which) {
  const SimplicialComplex K = complex_from_json(read_text_file(file));
  json out;
  out["dim"] = K.dim();
  if (which == "fvec") {
    out["f"] = f_vector(K);
  } else if (which == "hvec") {
    const int d = K.dim() + 1;
    out["h"] = coeff_list(h_polynomial(K), d);
  } else if (which == "fpoly") {
    const UniPoly p = f_polynomial(K);
    out["coeffs"] = coeff_list(p);
    out["display"] = unipoly_to_display(p, "t");
  } else {
    const UniPoly p = F_polynomial(K);
    out["coeffs"] = coeff_list(p);
    out["display"] = unipoly_to_display(p, "x");
  }
  emit(out, "");
  return 0;
}

int run_betti(const std::string& file) {
  const SimplicialComplex K = complex_from_json(read_text_file(file));
  json out;
  out["dim"] = K.dim();
  // Entry i is the reduced Betti number in dimension i - 1.
  out["reduced_betti"] = reduced_betti(K);
  emit(out, "");
  return 0;
}

int run_tpoly(const std::string& file, int n, const std::string& route, int guard,
              const std::string& out_path) {
  const Template L = template_from_json(read_text_file(file));
  TchFamily family(L, guard);
  UniPoly p;
  if (route == "direct") {
    p = family.t_direct(n);
  } else if (route == "rec") {
    p = family.t_recurrence(n);
  } else {
    p = family.t_from_cross_polytope(n);
  }
  json out;
  out["var"] = "x";
  out["n"] = n;
  out["route"] = route;
  out["coeffs"] = coeff_list(p);
  out["display"] = unipoly_to_display(p, "x");
  emit(out, out_path);
  return 0;
}

int run_upoly(const std::string& file, int j, int n, const std::string& route, int guard,
              const std::string& out_path) {
  const Template L = template_from_json(read_text_file(file));
  TchFamily family(L, guard);
  UniPoly p;
  if (route == "direct") {
    p = family.u_direct(j, n);
  } else if (route == "rec") {
    p = family.u_recurrence(j, n);
  } else {
    p = family.u_from_cross_polytope(j, n);
  }
  json out;
  out["var"] = "x";
  out["j"] = j;
  out["n"] = n;
  out["route"] = route;
  out["coeffs"] = coeff_list(p);
  out["display"] = unipoly_to_display(p, "x");
  emit(out, out_path);
  return 0;
}

int run_roots(const std::string& file, const std::vector<std::string>& interval,
              bool multiplicity) {
  const UniPoly p = unipoly_from_json(read_text_file(file));
  std::optional<Rat> lo, hi;
  if (!interval.empty()) {
    lo = parse_rational(interval.at(0));
    hi = parse_rational(interval.at(1));
    if (*hi <= *lo) throw std::invalid_argument("--interval needs a < b");
  }
  json out;
  out["degree"] = p.degree();
  out["with_multiplicity"] = multiplicity;
  if (lo) {
    out["interval"] = {rational_to_string(*lo), rational_to_string(*hi)};
  } else {
    out["interval"] = nullptr;
  }
  out["count"] = multiplicity ? count_real_roots_with_multiplicity(p, lo, hi)
                              : count_distinct_real_roots(p, lo, hi);
  out["all_roots_real"] = all_roots_real(p);
  emit(out, "");
  return 0;
}

int run_gvec(const std::string& kfile, const std::string& h_text, int d_opt, int i) {
  UniPoly h;
  int d = d_opt;
  json out;
  if (!kfile.empty()) {
    const SimplicialComplex K = complex_from_json(read_text_file(kfile));
    h = h_polynomial(K);
    if (d < 0) d = K.dim() + 1;
    if (d != K.dim() + 1) throw std::invalid_argument("-d disagrees with the complex dimension");
  } else {
    h = UniPoly(parse_coeffs(h_text));
    if (d < 0) d = h.degree();
  }
  const auto g = g_vector(h, d, i);
  json coords = json::array();
  for (const Rat& c : g) coords.push_back(rational_to_string(c));
  out["d"] = d;
  out["i"] = i;
  out["h"] = coeff_list(h, d);
  out["g"] = std::move(coords);
  emit(out, "");
  return 0;
}

int run_verify(const std::string& suite, const verify::VerifyOptions& opts,
               const std::string& format, const std::string& out_path) {
  if (!verify::is_suite(suite)) {
    std::ostringstream msg;
    msg << "unknown suite '" << suite << "'; available:";
    for (const auto& name : verify::suite_names()) msg << " " << name;
    throw std::invalid_argument(msg.str());
  }
  const auto report = verify::run_suite(suite, opts);
  std::string text =
      format == "csv" ? verify::report_to_csv(report) : verify::report_to_json(report) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
  return report.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic for generalized Tchebyshev triangulations"};
  app.require_subcommand(1);

  const int default_max_n = env_int("GTT_MAX_N", 12);
  const int default_max_d = env_int("GTT_MAX_D", 6);
  const int default_guard = env_int("GTT_GUARD", 7);

  std::string file, kfile, lfile, plan_file, out_path, h_text, route = "direct";
  std::string suite, format = "json";
  std::vector<std::string> interval;
  std::optional<unsigned long long> seed_opt;
  bool multiplicity = false;
  int n = 0, j = 2, d = -1, i = 2, guard = default_guard;
  verify::VerifyOptions vopts;
  vopts.max_n = default_max_n;
  vopts.max_d = default_max_d;
  vopts.cross_guard = default_guard;

  auto* validate = app.add_subcommand("validate-template", "Check template well-formedness");
  validate->add_option("file", file, "template JSON")->required();

  auto* census_cmd = app.add_subcommand("census", "Face counts by boundary/interior split");
  census_cmd->add_option("file", file, "template JSON")->required();

  auto* magic_cmd = app.add_subcommand("magic", "Two-variable replacement polynomial");
  magic_cmd->add_option("file", file, "template JSON")->required();

  auto* tri = app.add_subcommand("triangulate", "Replace every top face of K using L");
  tri->add_option("complex", kfile, "complex JSON")->required();
  tri->add_option("template", lfile, "template JSON")->required();
  auto* tri_seed = tri->add_option("--seed", seed_opt, "randomize the replacement plan");
  tri->add_option("--plan", plan_file, "explicit plan JSON")->excludes(tri_seed);
  tri->add_option("-o,--output", out_path, "write the result here instead of stdout");

  const std::pair<const char*, const char*> vec_cmds[] = {
      {"fvec", "Face-count vector of a complex"},
      {"hvec", "h-vector of a complex"},
      {"fpoly", "Face polynomial sum_j f_(j-1) t^j"},
      {"Fpoly", "Rescaled face polynomial F(x), argument (x-1)/2"},
  };
  for (auto [name, desc] : vec_cmds) {
    auto* cmd = app.add_subcommand(name, desc);
    cmd->add_option("file", file, "complex JSON")->required();
  }

  auto* betti_cmd = app.add_subcommand("betti", "Reduced Betti numbers over the rationals");
  betti_cmd->add_option("file", file, "complex JSON")->required();

  auto* tpoly_cmd = app.add_subcommand("tpoly", "First-kind polynomial of a template family");
  tpoly_cmd->add_option("file", file, "template JSON")->required();
  tpoly_cmd->add_option("-n", n, "index")->required();
  tpoly_cmd->add_option("--route", route, "direct|rec|cross")
      ->check(CLI::IsMember({"direct", "rec", "cross"}));
  tpoly_cmd->add_option("--guard", guard, "cross-polytope size guard");
  tpoly_cmd->add_option("-o,--output", out_path, "write the result here instead of stdout");

  auto* upoly_cmd = app.add_subcommand("upoly", "Second-kind polynomial of a template family");
  upoly_cmd->add_option("file", file, "template JSON")->required();
  upoly_cmd->add_option("-j", j, "transform order (2 = classical analogue)")->required();
  upoly_cmd->add_option("-n", n, "index")->required();
  upoly_cmd->add_option("--route", route, "direct|rec|cross")
      ->check(CLI::IsMember({"direct", "rec", "cross"}));
  upoly_cmd->add_option("--guard", guard, "cross-polytope size guard");
  upoly_cmd->add_option("-o,--output", out_path, "write the result here instead of stdout");

  auto* roots_cmd = app.add_subcommand("roots", "Exact real-root counts via Sturm sequences");
  roots_cmd->add_option("file", file, "polynomial JSON")->required();
  roots_cmd->add_option("--interval", interval, "open interval endpoints a b")
      ->expected(2);
  roots_cmd->add_flag("--multiplicity", multiplicity, "count with multiplicity");

  auto* gvec_cmd = app.add_subcommand("gvec", "Coordinates in the degree-i basis");
  gvec_cmd->set_help_flag("--help", "print usage");  // frees -h for the --h option
  auto* gk = gvec_cmd->add_option("complex", kfile, "complex JSON");
  gvec_cmd->add_option("--h", h_text, "h-polynomial coefficients, low to high")->excludes(gk);
  gvec_cmd->add_option("-d", d, "expansion degree (defaults to dim + 1 or deg h)");
  gvec_cmd->add_option("-i", i, "basis parameter");

  auto* verify_cmd = app.add_subcommand("verify", "Run a named verification suite");
  verify_cmd->add_option("suite", suite, "suite name")->required();
  verify_cmd->add_option("--seed", vopts.seed, "base seed for randomized instances");
  verify_cmd->add_option("--max-n", vopts.max_n, "polynomial family bound");
  verify_cmd->add_option("--max-d", vopts.max_d, "materialized dimension bound");
  verify_cmd->add_option("--guard", vopts.cross_guard, "cross-polytope size guard");
  verify_cmd->add_option("--format", format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  verify_cmd->add_option("-o,--output", out_path, "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) return run_validate_template(file);
    if (census_cmd->parsed()) return run_census(file);
    if (magic_cmd->parsed()) return run_magic(file);
    if (tri->parsed()) return run_triangulate(kfile, lfile, seed_opt, plan_file, out_path);
    for (const char* name : {"fvec", "hvec", "fpoly", "Fpoly"}) {
      if (app.get_subcommand(name)->parsed()) return run_fvec(file, name);
    }
    if (betti_cmd->parsed()) return run_betti(file);
    if (tpoly_cmd->parsed()) return run_tpoly(file, n, route, guard, out_path);
    if (upoly_cmd->parsed()) return run_upoly(file, j, n, route, guard, out_path);
    if (roots_cmd->parsed()) return run_roots(file, interval, multiplicity);
    if (gvec_cmd->parsed()) {
      if (kfile.empty() && h_text.empty()) {
        throw std::invalid_argument("gvec needs a complex file or --h coefficients");
      }
      return run_gvec(kfile, h_text, d, i);
    }
    if (verify_cmd->parsed()) return run_verify(suite, vopts, format, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "error: no subcommand\n";
  return 2;
}
