#include "nuclearity/report_json.hpp"

#include <cmath>

namespace nuclearity::io {

Json to_json(const VerificationReport& report) {
  Json j;
  j["identity_name"] = report.identity_name;
  j["dims_tested"] = report.dims_tested;
  j["block"] = report.block;
  Json residuals = Json::array();
  for (double r : report.residuals) residuals.push_back(number(r));
  j["residuals"] = residuals;
  j["tolerance"] = number(report.tolerance);
  j["verdict"] = report.verdict ? "pass" : "fail";
  Json details = Json::object();
  for (const auto& [name, value] : report.details) details[name] = number(value);
  j["details"] = details;
  j["notes"] = report.notes;
  return j;
}

Json to_json(const characters::NuclearityChainReport& report) {
  Json j;
  j["lambda"] = number(report.lambda);
  j["ell_prime"] = number(report.ell_prime);
  j["d_I"] = number(report.d_I);
  j["ell_prime_shrunk"] = number(report.ell_prime_shrunk);
  j["s_effective"] = number(report.s_effective);
  j["bw_time"] = number(report.bw_time);
  j["bw_bound"] = number(report.bw_bound);
  j["time"] = number(report.time);
  j["asymptotic_estimate"] = number(report.asymptotic_estimate);
  Json steps = Json::array();
  for (const auto& step : report.steps) {
    Json s;
    s["name"] = step.name;
    s["relation"] = step.relation;
    s["lhs"] = step.lhs;
    s["rhs"] = step.rhs;
    s["value"] = step.value ? number(*step.value) : Json(nullptr);
    s["upper_bound"] = number(step.upper_bound);
    steps.push_back(s);
  }
  j["steps"] = steps;
  return j;
}

Json to_json(const characters::LogEllipticityFit& fit) {
  Json j;
  j["alpha"] = number(fit.alpha);
  j["const"] = number(fit.constant);
  j["residual"] = number(fit.residual);
  j["residual_tolerance"] = number(characters::kLogEllipticityResidualTolerance);
  j["kms_criterion_met"] = fit.kms_criterion_met;
  j["statement"] = fit.statement;
  Json points = Json::array();
  for (const auto& [s, t] : fit.points) points.push_back(Json{{"s", number(s)}, {"log_trace", number(t)}});
  j["points"] = points;
  return j;
}

Json to_json(const freefield::DoubleConeResult& result) {
  Json j;
  j["d"] = result.d;
  j["r"] = number(result.r);
  j["s"] = number(result.s);
  j["value"] = number(result.value);
  j["asymptotic_reference"] = number(result.asymptotic_reference);
  j["relative_deviation"] = number(result.relative_deviation);
  j["log_net_norm"] = number(result.log_net_norm);
  j["log_net_norm_reference"] = number(result.log_net_norm_reference);
  return j;
}

Json to_json(const lwrep::NuclearNormResult& result) {
  Json j;
  j["value"] = number(result.value);
  j["closed_form"] = number(result.closed_form);
  j["relative_error"] = number(std::abs(result.value - result.closed_form) / result.closed_form);
  j["dropped_count"] = result.dropped_count;
  j["dropped_mass"] = number(result.dropped_mass);
  return j;
}

}  // namespace nuclearity::io
