#include "fqsum/render.hpp"

#include <cmath>
#include <sstream>

namespace fqsum {

Json to_json(const CycInt& v) {
  Json coeffs = Json::array();
  for (const BigInt& c : v.coeffs()) coeffs.push_back(c.str());
  return Json{{"n", v.n()}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const Character& chi) { return Json{{"q", chi.field().q()}, {"exponent", chi.exponent()}}; }

Json field_description(const FieldTable& field) {
  const FieldElement g = field.generator();
  Json j;
  j["p"] = field.p();
  j["r"] = field.r();
  j["q"] = field.q();
  j["modulus"] = field.params().modulus;
  // For prime fields the code is the residue itself.
  j["generator"] = g.code();
  j["generator_coeffs"] = g.coeffs();
  j["characters"] = field.order();
  j["degenerate"] = field.degenerate();
  return j;
}

std::string mode_name(VerifyMode mode) { return mode == VerifyMode::Exhaustive ? "exhaustive" : "sampled"; }

Json to_json(const VerifyReport& report, bool include_timing) {
  Json j;
  j["id"] = report.id;
  j["q"] = report.q;
  j["mode"] = mode_name(report.mode);
  j["seed"] = report.seed ? Json(*report.seed) : Json(nullptr);
  if (report.mutated) j["mutated"] = true;
  j["cases"] = report.cases;
  j["failures"] = report.failures;
  j["not_divisible"] = report.not_divisible;
  j["passed"] = report.passed();
  Json cxs = Json::array();
  for (const Counterexample& cx : report.counterexamples) {
    Json binding;
    for (std::size_t i = 0; i < cx.values.size() && i < report.param_names.size(); ++i) {
      binding[report.param_names[i]] = cx.values[i];
    }
    Json entry;
    entry["binding"] = std::move(binding);
    entry["lhs"] = cx.lhs ? to_json(*cx.lhs) : Json(nullptr);
    entry["rhs"] = cx.rhs ? to_json(*cx.rhs) : Json(nullptr);
    entry["reason"] = cx.reason;
    cxs.push_back(std::move(entry));
  }
  j["counterexamples"] = std::move(cxs);
  if (report.error) j["error"] = *report.error;
  if (include_timing) j["ms"] = std::llround(report.wall_ms);
  return j;
}

std::string to_human(const VerifyReport& report) {
  std::ostringstream out;
  out << (report.passed() ? "PASS " : "FAIL ") << report.id << " q=" << report.q << " "
      << mode_name(report.mode);
  if (report.seed) out << " seed=" << *report.seed;
  out << " cases=" << report.cases << " failures=" << report.failures;
  if (report.error) out << " error: " << *report.error;
  for (const Counterexample& cx : report.counterexamples) {
    out << "\n  ";
    for (std::size_t i = 0; i < cx.values.size() && i < report.param_names.size(); ++i) {
      out << (i ? " " : "") << report.param_names[i] << "=" << cx.values[i];
    }
    out << "  [" << cx.reason << "]";
    if (cx.lhs && cx.rhs) out << "  lhs=" << cx.lhs->to_string() << "  rhs=" << cx.rhs->to_string();
  }
  return out.str();
}

}  // namespace fqsum
