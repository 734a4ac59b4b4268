// Acceptance checks: one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "sphmc/misiolek.hpp"
#include "sphmc/records.hpp"
#include "sphmc/verify.hpp"

using namespace sphmc;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

Outcome from_suite(const SuiteResult& r) {
  std::string d = std::to_string(r.checks) + " checks, " + std::to_string(r.failures) + " failures";
  if (r.max_dev > 0) {
    char buf[48];
    std::snprintf(buf, sizeof buf, ", max deviation %.3g", r.max_dev);
    d += buf;
  }
  if (!r.messages.empty() && !r.ok()) d += "; first: " + r.messages.front();
  return {r.ok(), d};
}

Outcome table_through_csv() {
  SuiteResult r;
  r.name = "table";
  for (int l1 : {3, 5, 7}) {
    const auto rows = parse_critical_csv(critical_table_csv(critical_table(l1, 6)));
    const auto find = [&](int l2, int m2) -> const CsvCell* {
      for (const auto& c : rows)
        if (c.l2 == l2 && c.m2 == m2) return &c;
      return nullptr;
    };
    for (const auto& p : published_table()) {
      if (p.l1 != l1) continue;
      const auto* c = find(p.l2, p.m2);
      const std::string t = std::to_string(l1) + "," + std::to_string(p.l2) + "," + std::to_string(p.m2);
      if (!c || c->status != "ok") {
        r.check(false, "cell " + t + " missing");
        continue;
      }
      const double v = parse_double(c->ratio);
      const double rel = std::abs(v - p.value) / std::abs(p.value);
      r.max_dev = std::max(r.max_dev, rel);
      r.check(rel <= 5e-3, "cell " + t);
      r.check((v < 0) == (p.value < 0), "sign " + t);
      r.check(c->direction == (p.red ? "<" : ">"), "direction " + t);
    }
    for (const auto& [zl1, l2] : published_zero_rows()) {
      if (zl1 != l1) continue;
      for (int m2 = 1; m2 <= l2; ++m2) {
        const auto* c = find(l2, m2);
        r.check(c && c->status == "undefined", "zero cell " + std::to_string(l2) + "," + std::to_string(m2));
      }
    }
    for (const auto& c : rows)
      if (c.m2 > c.l2) r.check(c.status == "not-applicable", "blank cell");
  }
  return from_suite(r);
}

Outcome theorem_positivity() {
  const auto rep = theorem_scan(12);
  const bool ok = rep.falsifications.empty();
  return {ok, std::to_string(rep.part_i_checks) + " part-i and " + std::to_string(rep.part_ii_checks) +
                  " part-ii instances, " + std::to_string(rep.falsifications.size()) + " nonpositive"};
}

Outcome merged(std::initializer_list<SuiteResult> parts) {
  SuiteResult r;
  r.name = "merged";
  for (const auto& p : parts) r.merge(p);
  return from_suite(r);
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;  // 0 means no runtime bound
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "critical-ratio table reproduction", 5, table_through_csv},
      {2, "positivity sweep to degree 12", 30, theorem_positivity},
      {3, "vanishing corollary to degree 12", 0, [] { return from_suite(check_vanishing(12)); }},
      {4, "structure constants against quadrature to degree 6", 60,
       [] { return from_suite(check_oracle_structure(6)); }},
      {5, "closed forms against Racah to degree 20", 0, [] { return from_suite(check_closed_forms(20)); }},
      {6, "symmetries to degree 10", 0,
       [] { return merged({check_structure_symmetries(10), check_threej_symmetries(10)}); }},
      {7, "Coriolis affinity and sign boundary", 0, [] { return from_suite(check_coriolis_boundary()); }},
      {8, "Rossby-Haurwitz identities and thresholds", 0,
       [] { return from_suite(check_rhw_identities()); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out{false, ""};
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = out.ok;
    if (c.limit_s > 0 && secs > c.limit_s) {
      ok = false;
      out.detail += "; over the " + std::to_string(static_cast<int>(c.limit_s)) + " s budget";
    }
    std::printf("criterion %d: %s  %s (%s, %.2f s)\n", c.id, ok ? "PASS" : "FAIL", c.name,
                out.detail.c_str(), secs);
    failed += !ok;
  }
  return failed == 0 ? 0 : 1;
}
