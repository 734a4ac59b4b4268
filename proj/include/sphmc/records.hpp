#pragma once

// Serialization of results as one-line JSON records and CSV rows.
//
// Exact values use {"sign": s, "rational": "p/q", "radical": r, "pi_exp": e}
// meaning s * q * pi^e, or s * sqrt(q) * pi^e when radical is true.
// Floats are written as the shortest decimal that round-trips.

#include <string>
#include <string_view>
#include <vector>

#include "sphmc/exact.hpp"
#include "sphmc/misiolek.hpp"
#include "sphmc/structure.hpp"

namespace sphmc {

struct ExactForm {
  int sign = 0;
  BigRational magnitude{0};
  bool radical = false;
  int twice_pi_exp = 0;

  friend bool operator==(const ExactForm&, const ExactForm&) = default;
};

ExactForm exact_form(const SignedSqrtRational& x, int twice_pi_exp = 0);
ExactForm exact_form(const BigRational& q, int twice_pi_exp = 0);
ExactForm exact_form(const PiTerm& t);

/// Shortest round-trip decimal for a finite double.
std::string format_double(double x);
/// Inverse of format_double. Throws std::invalid_argument on bad input.
double parse_double(std::string_view text);

std::string exact_json(const ExactForm& e);
ExactForm parse_exact_json(std::string_view text);

std::string wigner_record(int l1, int l2, int l3, int m1, int m2, int m3);
std::string bracket_record(const BracketExpansion& b);
std::string mc_record(const MCReport& r, bool verbose);
std::string critical_cell_record(const CriticalCell& c);
std::string rhw_record(const RHWReport& r);
std::string threshold_record(const ThresholdReport& r);

/// Header "l2,m2,ratio,direction,status" then one row per cell; ratio and
/// direction are empty for cells without a value.
std::string critical_table_csv(const CriticalRatioTable& t);
/// One critical_cell_record per line.
std::string critical_table_json(const CriticalRatioTable& t);

struct CsvCell {
  int l2 = 0;
  int m2 = 0;
  std::string ratio;
  std::string direction;
  std::string status;
};

/// Parses the output of critical_table_csv. Throws std::invalid_argument on
/// malformed input.
std::vector<CsvCell> parse_critical_csv(std::string_view text);

}  // namespace sphmc
