#include "sphmc/records.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "sphmc/wigner.hpp"

namespace sphmc {

using nlohmann::json;

namespace {

json index_json(const HarmonicIndex& idx) { return json::array({idx.l, idx.m}); }

json exact_object(const ExactForm& e) {
  json j;
  j["sign"] = e.sign;
  j["rational"] = e.magnitude.get_str();
  j["radical"] = e.radical;
  j["pi_exp"] = e.twice_pi_exp / 2.0;
  return j;
}

json terms_json(const std::vector<PiTerm>& terms) {
  json arr = json::array();
  for (const auto& t : terms)
    if (!t.root.is_zero() && sgn(t.coefficient) != 0) arr.push_back(exact_object(exact_form(t)));
  return arr;
}

json cell_json(const CriticalCell& c) {
  json j;
  j["kind"] = "critical-ratio";
  j["request"] = {{"l1", c.l1}, {"l2", c.l2}, {"m2", c.m2}};
  j["status"] = to_string(c.status);
  if (c.status == CellStatus::ok) {
    j["exact"] = exact_object(exact_form(*c.exact));
    j["value"] = *c.ratio;
    j["direction"] = c.direction;
  } else {
    j["reason"] = c.reason;
  }
  return j;
}

std::string rational_json(const BigRational& q) { return q.get_str(); }

}  // namespace

ExactForm exact_form(const SignedSqrtRational& x, int twice_pi_exp) {
  if (x.is_zero()) return {};
  if (x.is_rational()) {
    const BigRational q = x.as_rational();
    return {sign_of(q), abs(q), false, twice_pi_exp};
  }
  return {x.sign(), x.radicand(), true, twice_pi_exp};
}

ExactForm exact_form(const BigRational& q, int twice_pi_exp) {
  if (sgn(q) == 0) return {};
  return {sign_of(q), abs(q), false, twice_pi_exp};
}

ExactForm exact_form(const PiTerm& t) {
  if (sgn(t.coefficient) == 0 || t.root.is_zero()) return {};
  const auto combined = SignedSqrtRational::from_rational(t.coefficient) * t.root;
  return exact_form(combined, t.twice_pi_power);
}

std::string format_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite value");
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view text) {
  double x = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), x);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size())
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  return x;
}

std::string exact_json(const ExactForm& e) { return exact_object(e).dump(); }

ExactForm parse_exact_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    ExactForm e;
    e.sign = j.at("sign").get<int>();
    e.magnitude = parse_rational(j.at("rational").get<std::string>());
    e.radical = j.at("radical").get<bool>();
    const double p = j.at("pi_exp").get<double>();
    e.twice_pi_exp = static_cast<int>(std::lround(2 * p));
    if (2 * p != e.twice_pi_exp) throw std::invalid_argument("pi exponent not a half-integer");
    return e;
  } catch (const json::exception& ex) {
    throw std::invalid_argument(std::string("malformed exact form: ") + ex.what());
  }
}

std::string wigner_record(int l1, int l2, int l3, int m1, int m2, int m3) {
  const auto v = threej(l1, l2, l3, m1, m2, m3);
  json j;
  j["kind"] = "wigner3j";
  j["request"] = {{"l", {l1, l2, l3}}, {"m", {m1, m2, m3}}};
  j["status"] = v.is_zero() ? "zero-by-selection-rule" : "ok";
  j["exact"] = exact_object(exact_form(v));
  j["value"] = v.to_double();
  return j.dump();
}

std::string bracket_record(const BracketExpansion& b) {
  json j;
  j["kind"] = "bracket";
  j["request"] = {{"a", index_json(b.input1)}, {"b", index_json(b.input2)}};
  j["m3"] = b.m3;
  j["status"] = b.empty() ? "zero-by-selection-rule" : "ok";
  json terms = json::array();
  for (const auto& [l3, t] : b.terms) {
    // coefficient = -i * phase * reduced / sqrt(pi): purely imaginary
    terms.push_back({{"l3", l3},
                     {"imag_exact", exact_object(exact_form(t.phase > 0 ? -t.reduced : t.reduced, -1))},
                     {"imag", t.imag()}});
  }
  j["terms"] = terms;
  return j.dump();
}

std::string mc_record(const MCReport& r, bool verbose) {
  json j;
  j["kind"] = "mc";
  j["request"] = {{"a", index_json(r.a)}, {"b", index_json(r.b)}};
  if (r.rotating) j["request"]["rotation"] = rational_json(r.rotation);
  const int s = r.sign();
  j["status"] = s == 0 ? "zero-by-selection-rule" : "ok";
  j["exact"] = terms_json(r.terms());
  j["value"] = r.value();
  j["sign"] = s;
  if (verbose) {
    json sums = json::array();
    for (const auto& t : r.summands)
      sums.push_back({{"probe", index_json(t.probe)},
                      {"l3", t.l3},
                      {"g_squared", exact_object(exact_form(t.g_squared, -2))},
                      {"weight", t.weight}});
    j["summands"] = sums;
    j["flat"] = exact_object(exact_form(r.flat, -2));
    if (r.rotating) {
      j["delta"] = exact_object(exact_form(r.delta));
      j["coriolis_slope"] = exact_object(exact_form(r.slope, -1));
    }
  }
  return j.dump();
}

std::string critical_cell_record(const CriticalCell& c) { return cell_json(c).dump(); }

std::string rhw_record(const RHWReport& r) {
  json j;
  j["kind"] = "rhw";
  j["request"] = {{"A", {rational_json(r.wave.A.re), rational_json(r.wave.A.im)}},
                  {"C", rational_json(r.wave.C)},
                  {"wave", index_json(r.wave.wave)},
                  {"probe", index_json(r.probe)},
                  {"rotation", rational_json(r.wave.rotation)}};
  j["status"] = "ok";
  const auto part = [](const BigRational& over_pi, const BigRational& plain, double value, int sign) {
    json p;
    p["exact"] = terms_json({{over_pi, SignedSqrtRational::one(), -2},
                             {plain, SignedSqrtRational::one(), 0}});
    p["value"] = value;
    p["sign"] = sign;
    return p;
  };
  j["plain"] = part(r.plain_over_pi(), r.plain_rational(), r.plain_value(), r.plain_sign());
  j["extended"] =
      part(r.plain_over_pi(), r.extended_rational(), r.extended_value(), r.extended_sign());
  return j.dump();
}

std::string threshold_record(const ThresholdReport& r) {
  json j;
  j["kind"] = "rhw-threshold";
  j["request"] = {{"wave", {r.l1, r.m1}}, {"m", r.m}, {"K", rational_json(r.K)}};
  j["status"] = "ok";
  j["exact"] = exact_object(exact_form(r.exact));
  j["value"] = r.value;
  j["denominator"] = exact_object(exact_form(r.denominator.flat, -2));
  return j.dump();
}

std::string critical_table_csv(const CriticalRatioTable& t) {
  std::ostringstream out;
  out << "l2,m2,ratio,direction,status\n";
  for (const auto& c : t.cells) {
    out << c.l2 << ',' << c.m2 << ',';
    if (c.ratio) out << format_double(*c.ratio);
    out << ',' << c.direction << ',' << to_string(c.status) << '\n';
  }
  return out.str();
}

std::string critical_table_json(const CriticalRatioTable& t) {
  std::string out;
  for (const auto& c : t.cells) out += critical_cell_record(c) + '\n';
  return out;
}

std::vector<CsvCell> parse_critical_csv(std::string_view text) {
  std::vector<CsvCell> cells;
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != "l2,m2,ratio,direction,status")
    throw std::invalid_argument("missing CSV header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::size_t start = 0;
    for (std::size_t pos; (pos = line.find(',', start)) != std::string::npos; start = pos + 1)
      f.push_back(line.substr(start, pos - start));
    f.push_back(line.substr(start));
    if (f.size() != 5) throw std::invalid_argument("CSV row needs 5 fields: " + line);
    try {
      cells.push_back({std::stoi(f[0]), std::stoi(f[1]), f[2], f[3], f[4]});
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad CSV row: " + line);
    }
  }
  return cells;
}

}  // namespace sphmc
