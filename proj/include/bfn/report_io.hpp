#pragma once

// CSV / JSON serialization of spectra and approximation reports, shared by
// the CLI and its tests. CSV floats are fixed at 9 significant digits so
// identical inputs produce byte-identical files.

#include <cstdio>
#include <string>

#include <json.hpp>

#include "bfn/approx.hpp"
#include "bfn/spectrum.hpp"

namespace bfn {

inline std::string fmt_g9(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

inline std::string spectrum_to_csv(const BiasedSpectrum& spec) {
  std::string out = "subset_mask,subset_pretty,coefficient\n";
  for (mask_t s = 0; s < spec.coeffs.size(); ++s) {
    out += std::to_string(s);
    out += ',';
    out += subset_pretty(s);
    out += ',';
    out += fmt_g9(spec.coeffs[s]);
    out += '\n';
  }
  return out;
}

inline nlohmann::json spectrum_to_json(const BiasedSpectrum& spec) {
  nlohmann::json rows = nlohmann::json::array();
  for (mask_t s = 0; s < spec.coeffs.size(); ++s)
    rows.push_back({{"subset_mask", s},
                    {"subset_pretty", subset_pretty(s)},
                    {"coefficient", spec.coeffs[s]}});
  return {{"n", spec.n},
          {"p", spec.bias.p()},
          {"p_one", spec.bias.p_one()},
          {"coefficients", rows}};
}

inline nlohmann::json report_to_json(const ApproximationReport& r) {
  nlohmann::json ties = nlohmann::json::array();
  for (mask_t t : r.ties) ties.push_back(t);
  nlohmann::json j = {{"class", to_string(r.cls)},
                      {"support_mask", r.support},
                      {"support_pretty", subset_pretty(r.support)},
                      {"sign_constant", r.sign_constant},
                      {"mismatch", r.mismatch},
                      {"l1", r.l1},
                      {"ties", ties},
                      {"approximant_truth_table", emit_truth_table(r.approximant)}};
  if (r.cls == ApproxClass::junta)
    j["bounds"] = {{"lower", r.bound_lower}, {"upper", r.bound_upper}};
  return j;
}

// Flat key,value CSV for the same report.
inline std::string report_to_csv(const ApproximationReport& r) {
  std::string out = "key,value\n";
  out += std::string("class,") + to_string(r.cls) + '\n';
  out += "support_mask," + std::to_string(r.support) + '\n';
  out += "support_pretty," + subset_pretty(r.support) + '\n';
  out += "sign_constant," + std::to_string(r.sign_constant) + '\n';
  out += "mismatch," + fmt_g9(r.mismatch) + '\n';
  out += "l1," + fmt_g9(r.l1) + '\n';
  if (r.cls == ApproxClass::junta) {
    out += "bound_lower," + fmt_g9(r.bound_lower) + '\n';
    out += "bound_upper," + fmt_g9(r.bound_upper) + '\n';
  }
  std::string ties;
  for (mask_t t : r.ties) {
    if (!ties.empty()) ties += ' ';
    ties += std::to_string(t);
  }
  out += "ties," + ties + '\n';
  std::string table = emit_truth_table(r.approximant);
  for (char& c : table)
    if (c == '\n') c = ';';
  out += "approximant_truth_table," + table + '\n';
  return out;
}

}  // namespace bfn
