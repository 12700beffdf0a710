#include "nuclearity/characters.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "nuclearity/error.hpp"

namespace nuclearity::characters {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTailRelative = 1e-16;
constexpr std::int64_t kMaxTerms = 100'000'000;

void require_positive_s(double s) {
  if (!(s > 0.0)) throw Error(ErrorKind::NonPositiveParameter, "character requires s > 0");
}

double entries_sum(const std::vector<WeightMultiplicity>& entries, double s) {
  long double sum = 0.0L;
  for (const WeightMultiplicity& e : entries) sum += e.multiplicity * std::exp(-s * e.weight);
  return static_cast<double>(sum);
}

// Term-by-term sum with a geometric tail bound taken once the term ratio is below 1 and falling.
double tail_series(const TailRule& rule, double s) {
  long double sum = 0.0L;
  double prev = 0.0;
  double prev_ratio = kInf;
  for (std::int64_t j = 0; j < kMaxTerms; ++j) {
    const double n = rule.multiplicity(j);
    const double term = n == 0.0 ? 0.0 : n * std::exp(-s * (rule.first_weight + static_cast<double>(j)));
    sum += term;
    if (prev > 0.0 && term >= 0.0) {
      const double q = term / prev;
      if (term == 0.0 && n > 0.0) return static_cast<double>(sum);
      if (q < 1.0 && q <= prev_ratio && term * q / (1.0 - q) <= kTailRelative * static_cast<double>(sum)) {
        return static_cast<double>(sum);
      }
      prev_ratio = q;
    }
    prev = term;
    if (j >= 100'000 && sum == 0.0L) return 0.0;
  }
  throw Error(ErrorKind::DivergentSpectrum, "tail series not certified within the term budget");
}

double weight_sum(const MultiplicitySpectrum& spec, double s, bool allow_closed_form) {
  double sum = entries_sum(spec.entries(), s);
  if (const auto& tail = spec.tail()) {
    sum += allow_closed_form && tail->closed_form ? tail->closed_form(s) : tail_series(*tail, s);
  }
  return sum;
}

double evaluate_character(const MultiplicitySpectrum& spec, double s, bool allow_closed_form) {
  require_positive_s(s);
  if (spec.empty()) return 0.0;
  const double value = weight_sum(spec, s, allow_closed_form) / -std::expm1(-s);
  if (std::isnan(value)) throw Error(ErrorKind::DivergentSpectrum, "character is not finite");
  return value;
}

}  // namespace

MultiplicitySpectrum::MultiplicitySpectrum(std::vector<WeightMultiplicity> entries, std::optional<TailRule> tail)
    : entries_(std::move(entries)), tail_(std::move(tail)) {
  for (const WeightMultiplicity& e : entries_) {
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) throw Error(ErrorKind::BadWeight, "weights must be positive");
    if (!(e.multiplicity >= 0.0) || !std::isfinite(e.multiplicity)) {
      throw Error(ErrorKind::InvalidInput, "multiplicities must be non-negative");
    }
  }
  std::sort(entries_.begin(), entries_.end(),
            [](const WeightMultiplicity& a, const WeightMultiplicity& b) { return a.weight < b.weight; });
  if (tail_) {
    if (!tail_->multiplicity) throw Error(ErrorKind::InvalidInput, "tail rule without multiplicity function");
    if (!(tail_->first_weight > 0.0)) throw Error(ErrorKind::BadWeight, "tail weights must be positive");
    // Ratio test on the first 10^3 terms: j (N_{j+1}/N_j - 1) bounds the polynomial degree.
    double prev = tail_->multiplicity(0);
    for (std::int64_t j = 1; j <= 1000; ++j) {
      const double n = tail_->multiplicity(j);
      if (!(n >= 0.0) || !std::isfinite(n)) throw Error(ErrorKind::InvalidInput, "tail multiplicity invalid");
      if (j >= 500 && prev > 0.0 && static_cast<double>(j) * (n / prev - 1.0) > 200.0) {
        throw Error(ErrorKind::DivergentSpectrum, "tail multiplicities grow faster than polynomially");
      }
      prev = n;
    }
  }
}

MultiplicitySpectrum MultiplicitySpectrum::single_weight(double alpha, double multiplicity) {
  return MultiplicitySpectrum({{alpha, multiplicity}});
}

MultiplicitySpectrum MultiplicitySpectrum::constant_tail(double first_weight, double multiplicity) {
  TailRule rule;
  rule.name = "constant";
  rule.parameters = {{"first_weight", first_weight}, {"multiplicity", multiplicity}};
  rule.first_weight = first_weight;
  rule.multiplicity = [multiplicity](std::int64_t) { return multiplicity; };
  rule.closed_form = [first_weight, multiplicity](double s) {
    return multiplicity * std::exp(-s * first_weight) / -std::expm1(-s);
  };
  return MultiplicitySpectrum({}, rule);
}

bool MultiplicitySpectrum::empty() const {
  const bool no_entries = std::all_of(entries_.begin(), entries_.end(),
                                      [](const WeightMultiplicity& e) { return e.multiplicity == 0.0; });
  return no_entries && !tail_;
}

double MultiplicitySpectrum::min_weight() const {
  double w = kInf;
  for (const WeightMultiplicity& e : entries_) {
    if (e.multiplicity > 0.0) w = std::min(w, e.weight);
  }
  if (tail_) w = std::min(w, tail_->first_weight);
  return w;
}

double character(const MultiplicitySpectrum& spec, double s) { return evaluate_character(spec, s, true); }

double character_series(const MultiplicitySpectrum& spec, double s) { return evaluate_character(spec, s, false); }

double fock_log_trace(const MultiplicitySpectrum& spec, double s) {
  require_positive_s(s);
  if (spec.empty()) return 0.0;
  long double sum = 0.0L;
  double prev = 0.0;
  double prev_ratio = kInf;
  for (std::int64_t m = 1; m < kMaxTerms; ++m) {
    const double term = character(spec, static_cast<double>(m) * s) / static_cast<double>(m);
    if (!std::isfinite(term)) throw Error(ErrorKind::DivergentSpectrum, "character diverges");
    sum += term;
    if (term == 0.0) return static_cast<double>(sum);
    if (prev > 0.0) {
      const double q = term / prev;
      if (q < 1.0 && q <= prev_ratio && term * q / (1.0 - q) <= kTailRelative * static_cast<double>(sum)) {
        return static_cast<double>(sum);
      }
      prev_ratio = q;
    }
    prev = term;
  }
  throw Error(ErrorKind::DivergentSpectrum, "Fock log-trace not certified within the term budget");
}

double l2_nuclearity_norm(const MultiplicitySpectrum& spec, const geometry::Interval& outer,
                          const geometry::Interval& inner, double lambda) {
  if (!(lambda > 0.0 && lambda < 0.5)) throw Error(ErrorKind::ParameterOutOfRange, "lambda must lie in (0, 1/2)");
  const double ell_prime = geometry::second_inner_distance(outer, inner);
  const double s = 2.0 * std::asinh(std::sin(2.0 * std::numbers::pi * lambda) * ell_prime);
  if (!(s > 0.0)) return spec.empty() ? 0.0 : kInf;
  const double value = character(spec, s);
  return std::isfinite(value) ? value : kInf;
}

NuclearityChainReport bw_nuclearity_bound(const MultiplicitySpectrum& spec, LineInterval outer, LineInterval inner,
                                          double lambda, std::optional<double> time) {
  if (!(lambda > 0.0 && lambda < 0.25)) throw Error(ErrorKind::ParameterOutOfRange, "lambda must lie in (0, 1/4)");
  for (const LineInterval& iv : {outer, inner}) {
    if (!std::isfinite(iv.x1) || !std::isfinite(iv.x2) || !(iv.x1 < iv.x2)) {
      throw Error(ErrorKind::InvalidInterval, "chain intervals must be bounded intervals of the line");
    }
  }
  if (!(outer.x1 < inner.x1 && inner.x2 < outer.x2)) {
    throw Error(ErrorKind::NotCompactInclusion, "closure of the inner interval is not inside the outer interval");
  }
  NuclearityChainReport r;
  r.lambda = lambda;
  r.d_I = outer.x2 - outer.x1;
  const double q = ((inner.x2 - inner.x1) * r.d_I) / ((outer.x2 - inner.x2) * (inner.x1 - outer.x1));
  r.ell_prime = 1.0 / std::sqrt(q);
  const double angle = 2.0 * std::numbers::pi * lambda;
  r.ell_prime_shrunk = std::sin(angle) * r.ell_prime;
  r.s_effective = 2.0 * std::asinh(r.ell_prime_shrunk);
  r.bw_time = std::tan(angle) * r.d_I;
  r.bw_bound = r.s_effective > 0.0 ? character(spec, r.s_effective) : kInf;
  r.time = time.value_or(r.bw_time);
  if (!(r.time > 0.0)) throw Error(ErrorKind::NonPositiveParameter, "time must be positive");
  r.asymptotic_estimate = character(spec, (2.0 * r.ell_prime / r.d_I) * r.time);

  r.steps.push_back({"bw_le_modular", "<=", "||Phi_BW_I0(tan(2 pi lambda) d_I)||_1", "||Xi_I,I0(lambda)||_1",
                     std::nullopt, r.bw_bound});
  r.steps.push_back({"modular_le_t_lambda", "<=", "||Xi_I,I0(lambda)||_1", "||T_I,I0(lambda)||_1", std::nullopt,
                     r.bw_bound});
  r.steps.push_back({"t_lambda_eq_t_shrunk", "=", "||T_I,I0(lambda)||_1", "||T_I,I1||_1, ell'(I,I1) = sin(2 pi lambda) ell'(I,I0)",
                     r.bw_bound, r.bw_bound});
  r.steps.push_back({"t_shrunk_eq_character", "=", "||T_I,I1||_1", "Tr(exp(-s L0)), s = ell(I,I1)", r.bw_bound,
                     r.bw_bound});
  return r;
}

NuclearityChainReport bw_nuclearity_bound(const MultiplicitySpectrum& spec, const geometry::Interval& outer,
                                          const geometry::Interval& inner, double lambda, std::optional<double> time) {
  if (outer.contains_infinity() || inner.contains_infinity()) {
    throw Error(ErrorKind::ParameterOutOfRange, "chain intervals must be bounded in the line picture");
  }
  const auto [w1, w2] = outer.line_endpoints();
  const auto [z1, z2] = inner.line_endpoints();
  return bw_nuclearity_bound(spec, LineInterval{w1, w2}, LineInterval{z1, z2}, lambda, time);
}

SplitResult split_distance(const MultiplicitySpectrum& spec, double s0) {
  if (!(s0 > 0.0)) throw Error(ErrorKind::NonPositiveParameter, "s0 must be positive");
  const double norm = character(spec, s0);
  if (!std::isfinite(norm)) throw Error(ErrorKind::DivergentSpectrum, "character diverges at s0");
  return {s0, norm};
}

LogEllipticityFit log_ellipticity_fit(const MultiplicitySpectrum& spec, const std::vector<double>& s_grid) {
  if (s_grid.size() < 5) throw Error(ErrorKind::InsufficientGrid, "at least 5 grid points are required");
  for (double s : s_grid) {
    if (!(s > 0.0 && s < 1.0)) throw Error(ErrorKind::InsufficientGrid, "grid points must lie in (0, 1)");
  }
  const auto [lo, hi] = std::minmax_element(s_grid.begin(), s_grid.end());
  if (*lo == *hi) throw Error(ErrorKind::InsufficientGrid, "grid points must not all coincide");

  LogEllipticityFit fit;
  for (double s : s_grid) fit.points.emplace_back(s, fock_log_trace(spec, s));
  const bool degenerate = std::any_of(fit.points.begin(), fit.points.end(),
                                      [](const auto& p) { return !(p.second > 0.0); });
  if (degenerate) {
    fit.residual = kInf;
    fit.statement = "inconclusive: trace does not grow as s -> 0";
    return fit;
  }

  double mx = 0.0;
  double my = 0.0;
  for (const auto& [s, t] : fit.points) {
    mx += std::log(s);
    my += std::log(t);
  }
  const double n = static_cast<double>(fit.points.size());
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& [s, t] : fit.points) {
    const double dx = std::log(s) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(t) - my);
  }
  const double slope = sxy / sxx;
  fit.alpha = -slope;
  const double log_c = my - slope * mx;
  fit.constant = std::exp(log_c);
  for (const auto& [s, t] : fit.points) {
    const double model = std::exp(log_c + slope * std::log(s));
    fit.residual = std::max(fit.residual, std::abs(model - t) / t);
  }
  fit.kms_criterion_met = fit.residual <= kLogEllipticityResidualTolerance && fit.alpha > 0.0;
  fit.statement = fit.kms_criterion_met
                      ? "met: log Tr(exp(-s L0)) <= c / s^alpha as s -> 0, so translation beta-KMS states exist for every beta > 0"
                      : "inconclusive: no power law within the residual tolerance";
  return fit;
}

}  // namespace nuclearity::characters
