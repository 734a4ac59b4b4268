// sphmc: command-line front end for the sphmc library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sphmc/misiolek.hpp"
#include "sphmc/records.hpp"
#include "sphmc/structure.hpp"
#include "sphmc/verify.hpp"
#include "sphmc/wigner.hpp"

namespace {

constexpr int kUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

sphmc::HarmonicIndex index_from(const std::vector<int>& v, const std::string& flag,
                                bool positive_degree = true) {
  const sphmc::HarmonicIndex idx{v.at(0), v.at(1)};
  if (!idx.valid()) throw UsageError(flag + ": need l >= 0 and |m| <= l");
  if (positive_degree && idx.l < 1) throw UsageError(flag + ": degree must be >= 1");
  return idx;
}

sphmc::BigRational rational_flag(const std::string& text, const std::string& flag) {
  try {
    return sphmc::parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(flag + ": not a number: '" + text + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact 3j symbols, sphere structure constants and the Misiolek criterion"};
  app.require_subcommand(1);

  // wigner3j
  auto* w3j = app.add_subcommand("wigner3j", "Exact Wigner 3j symbol");
  std::vector<int> w_l, w_m;
  w3j->add_option("--l", w_l, "Degrees l1 l2 l3")->expected(3)->required();
  w3j->add_option("--m", w_m, "Orders m1 m2 m3")->expected(3)->required();

  // bracket
  auto* br = app.add_subcommand("bracket", "Harmonic expansion of {Y_a, Y_b}");
  std::vector<int> br_a, br_b;
  br->add_option("--a", br_a, "l m of the first harmonic")->expected(2)->required();
  br->add_option("--b", br_b, "l m of the second harmonic")->expected(2)->required();

  // mc
  auto* mc = app.add_subcommand("mc", "Misiolek criterion MC(e_a, e_b)");
  std::vector<int> mc_a, mc_b;
  std::string mc_rotation;
  bool mc_verbose = false;
  mc->add_option("--a", mc_a, "l m of the flow")->expected(2)->required();
  mc->add_option("--b", mc_b, "l m of the probe")->expected(2)->required();
  mc->add_option("--rotation", mc_rotation, "Rotation rate a (Coriolis form)");
  mc->add_flag("--verbose", mc_verbose, "Include the per-degree summands");

  // critical-table
  auto* ct = app.add_subcommand("critical-table", "Zonal critical rotation ratios");
  int ct_l1 = 0, ct_l2_max = 6;
  std::string ct_format = "csv", ct_output;
  ct->add_option("--l1", ct_l1, "Degree of the zonal flow")->required();
  ct->add_option("--l2-max", ct_l2_max, "Largest probe degree")->capture_default_str();
  ct->add_option("--format", ct_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  ct->add_option("--output", ct_output, "Write to this file instead of stdout");

  // verify
  auto* vf = app.add_subcommand("verify", "Run invariant suites");
  std::string vf_suite;
  std::optional<int> vf_lmax;
  vf->add_option("--suite", vf_suite, "wigner, structure, oracle, theorem or table (default: all)")
      ->check(CLI::IsMember(sphmc::suite_names()));
  vf->add_option("--lmax", vf_lmax, "Largest degree");

  // rhw
  auto* rh = app.add_subcommand("rhw", "Rossby-Haurwitz wave criterion or amplitude threshold");
  std::vector<std::string> rh_A;
  std::string rh_C = "0", rh_K, rh_rotation;
  std::vector<int> rh_wave, rh_probe;
  std::optional<int> rh_threshold;
  rh->add_option("--A", rh_A, "Complex amplitude: real and imaginary parts")->expected(2);
  rh->add_option("--C", rh_C, "Zonal coefficient C");
  rh->add_option("--wave", rh_wave, "l1 m1 of the wave")->expected(2)->required();
  rh->add_option("--probe", rh_probe, "l2 m2 of the probe")->expected(2);
  auto* k_opt = rh->add_option("--K", rh_K, "Rotation a = -K C");
  rh->add_option("--rotation", rh_rotation, "Rotation rate a")->excludes(k_opt);
  rh->add_option("--threshold", rh_threshold, "Print the |A|^2/C^2 threshold for probe order m");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (w3j->parsed()) {
      const sphmc::HarmonicIndex a{w_l[0], w_m[0]}, b{w_l[1], w_m[1]}, c{w_l[2], w_m[2]};
      if (!a.valid() || !b.valid() || !c.valid())
        throw UsageError("each column needs l >= 0 and |m| <= l");
      std::cout << sphmc::wigner_record(w_l[0], w_l[1], w_l[2], w_m[0], w_m[1], w_m[2]) << '\n';
      return 0;
    }
    if (br->parsed()) {
      const auto a = index_from(br_a, "--a", false), b = index_from(br_b, "--b", false);
      std::cout << sphmc::bracket_record(sphmc::bracket_expand(a, b)) << '\n';
      return 0;
    }
    if (mc->parsed()) {
      const auto a = index_from(mc_a, "--a"), b = index_from(mc_b, "--b");
      const auto report = mc_rotation.empty()
                              ? sphmc::mc_flat(a, b)
                              : sphmc::mc_coriolis(a, b, rational_flag(mc_rotation, "--rotation"));
      std::cout << sphmc::mc_record(report, mc_verbose) << '\n';
      return 0;
    }
    if (ct->parsed()) {
      if (ct_l1 < 1) throw UsageError("--l1 must be >= 1");
      if (ct_l2_max < 1) throw UsageError("--l2-max must be >= 1");
      const auto table = sphmc::critical_table(ct_l1, ct_l2_max);
      const std::string text =
          ct_format == "json" ? sphmc::critical_table_json(table) : sphmc::critical_table_csv(table);
      if (ct_output.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(ct_output, std::ios::binary);
        if (!(out << text)) throw std::runtime_error("cannot write " + ct_output);
      }
      return 0;
    }
    if (vf->parsed()) {
      const std::vector<std::string> suites =
          vf_suite.empty() ? sphmc::suite_names() : std::vector<std::string>{vf_suite};
      bool ok = true;
      for (const auto& s : suites) {
        const auto result = sphmc::run_suite(s, vf_lmax);
        std::cout << sphmc::suite_json(result) << '\n';
        ok = ok && result.ok();
      }
      return ok ? 0 : 1;
    }
    if (rh->parsed()) {
      const auto wave = index_from(rh_wave, "--wave");
      if (wave.m == 0) throw UsageError("--wave: the order m1 must be nonzero");
      const sphmc::BigRational C = rational_flag(rh_C, "--C");
      sphmc::BigRational K = rh_K.empty() ? sphmc::BigRational(0) : rational_flag(rh_K, "--K");
      if (rh_threshold) {
        std::cout << sphmc::threshold_record(sphmc::rhw_threshold(wave.l, wave.m, *rh_threshold, K))
                  << '\n';
        return 0;
      }
      if (rh_probe.empty()) throw UsageError("--probe is required unless --threshold is given");
      const auto probe = index_from(rh_probe, "--probe");
      sphmc::ComplexRational A;
      if (!rh_A.empty()) {
        A.re = rational_flag(rh_A[0], "--A");
        A.im = rational_flag(rh_A[1], "--A");
      }
      const sphmc::BigRational rotation =
          rh_rotation.empty() ? sphmc::BigRational(-K * C) : rational_flag(rh_rotation, "--rotation");
      const sphmc::RHWave w{A, C, wave, 0, 0, rotation};
      std::cout << sphmc::rhw_record(sphmc::rhw_mc(w, probe)) << '\n';
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kUsage;
}
