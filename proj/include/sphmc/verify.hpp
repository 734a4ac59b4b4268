#pragma once

// Invariant suites shared by the command-line tool, the acceptance test and
// the Python module. Each suite counts checks and failures and keeps the
// first few failing cases as messages.

#include <optional>
#include <string>
#include <vector>

namespace sphmc {

struct SuiteResult {
  std::string name;
  int lmax = 0;
  long checks = 0;
  long failures = 0;
  double max_dev = 0.0;  // largest float deviation seen (oracle and table)
  std::vector<std::string> messages;

  bool ok() const { return failures == 0; }
  void check(bool ok, const std::string& what);
  void merge(const SuiteResult& other);
};

/// A finite entry of the published critical-ratio table.
struct PublishedCell {
  int l1, l2, m2;
  double value;
  bool red;  // printed in red: negative denominator
};

/// Every finite entry of the published table (l1 in {3, 5, 7}).
const std::vector<PublishedCell>& published_table();

/// (l1, l2) rows the published table prints as zeros, all undefined here.
const std::vector<std::pair<int, int>>& published_zero_rows();

// Individual checks, each usable on its own.
SuiteResult check_threej_selection(int lmax);
SuiteResult check_threej_symmetries(int lmax);
SuiteResult check_closed_forms(int lmax);
SuiteResult check_orthogonality(int lmax);
SuiteResult check_structure_symmetries(int lmax);
SuiteResult check_structure_zeros(int lmax);
SuiteResult check_bracket_antisymmetry(int lmax);
SuiteResult check_oracle_harmonics(int lmax);
SuiteResult check_oracle_structure(int lmax);
SuiteResult check_oracle_mc(int lmax);
SuiteResult check_vanishing(int lmax);
SuiteResult check_negate_symmetry(int lmax);
SuiteResult check_theorem(int lmax);
SuiteResult check_table_reproduction();
SuiteResult check_coriolis_boundary();
SuiteResult check_rhw_identities();

/// Suites: wigner, structure, oracle, theorem, table.
const std::vector<std::string>& suite_names();
/// Default lmax: 6 for oracle, 12 for the exact suites.
int default_lmax(const std::string& suite);
/// Throws std::invalid_argument for an unknown suite.
SuiteResult run_suite(const std::string& suite, std::optional<int> lmax = std::nullopt);

/// {"suite": ..., "lmax": ..., "checks": ..., "failures": ..., "max_dev": ...,
///  "ok": ..., "messages": [...]}
std::string suite_json(const SuiteResult& r);

}  // namespace sphmc
