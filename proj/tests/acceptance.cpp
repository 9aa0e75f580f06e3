// Acceptance gate: twelve end-to-end criteria, one printed line each.
// Every value compared is exact; the only tolerances are the pinned wall
// clock limits on the three heavyweight criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "gtt/verify.hpp"

namespace {

using gtt::verify::Report;
using gtt::verify::VerifyOptions;

int checked = 0;

// All items whose check name is listed must pass, and at least one such item
// must exist. An empty filter means the whole suite.
bool items_pass(const Report& report, const std::set<std::string>& checks,
                std::string* first_failure) {
  bool found = false, ok = true;
  for (const auto& item : report.items) {
    if (!checks.empty() && checks.count(item.check) == 0) continue;
    found = true;
    ++checked;
    if (!item.pass && ok) {
      ok = false;
      *first_failure = report.suite + "/" + item.check + "/" + item.instance + ": " +
                       item.witness;
    }
  }
  if (!found && first_failure->empty()) {
    *first_failure = report.suite + ": no items matched the criterion filter";
  }
  return found && ok;
}

struct Criterion {
  int id;
  const char* label;
  double limit_seconds;  // 0 = no pinned limit
  std::function<bool(std::string*)> run;
};

}  // namespace

int main() {
  using gtt::verify::run_suite;

  VerifyOptions base;  // seed 0, max_n 12, max_d 6, guard 7

  VerifyOptions n10 = base;
  n10.max_n = 10;

  const std::vector<Criterion> criteria = {
      {1, "plan independence: 20 random plans per complex/template pair", 30.0,
       [&](std::string* why) {
         return items_pass(run_suite("order-independence", base), {"plan-independence"}, why);
       }},
      {2, "two-triangle example: cone vs non-cone orders, f = (1,9,16,8)", 0.0,
       [&](std::string* why) {
         return items_pass(run_suite("order-independence", base),
                           {"example-fvector", "example-cone", "example-flag-equal"}, why);
       }},
      {3, "face-count routes agree: recurrence, inclusion-exclusion, direct", 0.0,
       [&](std::string* why) { return items_pass(run_suite("routes", base), {}, why); }},
      {4, "generating function identities to order 8", 0.0,
       [&](std::string* why) { return items_pass(run_suite("genfun", base), {}, why); }},
      {5, "classical first- and second-kind recovery for n <= 12", 0.0,
       [&](std::string* why) {
         return items_pass(run_suite("tch-props", base), {"classical-t"}, why) &&
                items_pass(run_suite("u-props", base), {"classical-u"}, why);
       }},
      {6, "pinned sextic: 4 distinct real roots in (-1,1), not all real", 0.0,
       [&](std::string* why) {
         return items_pass(run_suite("counterexample-k3", base), {}, why);
       }},
      {7, "degree, value at 1, parity, confined real roots for n <= 10", 0.0,
       [&](std::string* why) {
         return items_pass(run_suite("tch-props", n10),
                           {"t-degree", "t-at-one", "t-parity", "t-real-roots-confined"},
                           why) &&
                items_pass(run_suite("u-props", n10),
                           {"u-degree", "u-parity", "u-real-roots-confined"}, why);
       }},
      {8, "real-rootedness: paths s <= 5 and planar templates, n <= 12", 60.0,
       [&](std::string* why) {
         return items_pass(run_suite("real-roots-1d", base),
                           {"t-distinct-roots", "u2-distinct-roots"}, why) &&
                items_pass(run_suite("real-roots-2d", base), {}, why);
       }},
      {9, "materialized cross-polytope routes agree with the transforms", 0.0,
       [&](std::string* why) {
         return items_pass(run_suite("cross-polytope", base),
                           {"t-cross-agreement", "u-cross-agreement"}, why);
       }},
      {10, "quadratic-extension closed forms match the recurrence, s <= 4", 0.0,
       [&](std::string* why) {
         return items_pass(run_suite("real-roots-1d", base),
                           {"closed-form-t", "closed-form-u"}, why);
       }},
      {11, "coordinate nonnegativity, chain identities, root-location accord", 120.0,
       [&](std::string* why) {
         return items_pass(run_suite("g2-nonneg", base), {}, why) &&
                items_pass(run_suite("delta-k", base), {}, why) &&
                items_pass(run_suite("fstable", base), {}, why) &&
                items_pass(run_suite("stellar-identity", base), {}, why);
       }},
      {12, "Betti guardrails and template validator verdicts", 0.0,
       [&](std::string* why) {
         return items_pass(run_suite("cross-polytope", base),
                           {"betti-sphere", "validator-accepts", "validator-rejects"}, why);
       }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    std::string why;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(&why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.limit_seconds > 0 && elapsed >= c.limit_seconds) {
      ok = false;
      why = "over the pinned time limit";
    }
    if (!ok) ++failures;

    if (c.limit_seconds > 0) {
      std::printf("criterion %2d %s  %-62s (%.2f s, limit %.0f s)\n", c.id,
                  ok ? "PASS" : "FAIL", c.label, elapsed, c.limit_seconds);
    } else {
      std::printf("criterion %2d %s  %-62s (%.2f s)\n", c.id, ok ? "PASS" : "FAIL", c.label,
                  elapsed);
    }
    if (!ok && !why.empty()) std::printf("              first failure: %s\n", why.c_str());
    std::fflush(stdout);
  }

  std::printf("%d/12 criteria passed, %d check items evaluated\n", 12 - failures, checked);
  return failures == 0 ? 0 : 1;
}
