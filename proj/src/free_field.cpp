#include "nuclearity/free_field.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "nuclearity/error.hpp"

namespace nuclearity::freefield {

namespace {

void check_dimension(int d) {
  if (d < 1) throw Error(ErrorKind::BadDimension, "dimension must be at least 1");
  if (d % 2 == 0) throw Error(ErrorKind::EvenDimensionUnsupported, "even space dimension " + std::to_string(d));
}

// binomial(n + r, r) in floating point, zero for n < 0.
double binomial_up(std::int64_t n, int r) {
  if (n < 0) return 0.0;
  double v = 1.0;
  for (int i = 1; i <= r; ++i) v = v * static_cast<double>(n + i) / i;
  return v;
}

}  // namespace

std::uint64_t monomial_count(int d, std::int64_t k) {
  if (d < 1) throw Error(ErrorKind::BadDimension, "dimension must be at least 1");
  if (k < 0) throw Error(ErrorKind::BadDimension, "degree must be non-negative");
  // rows[e][j] = m_{e+1}(j); each thread keeps its own table.
  thread_local std::vector<std::vector<std::uint64_t>> rows;
  if (rows.size() < static_cast<std::size_t>(d)) rows.resize(d);
  const auto need = static_cast<std::size_t>(k) + 1;
  for (int e = 0; e < d; ++e) {
    std::vector<std::uint64_t>& row = rows[e];
    while (row.size() < need) {
      const std::size_t j = row.size();
      if (e == 0 || j == 0) {
        row.push_back(1);
        continue;
      }
      std::uint64_t v;
      if (__builtin_add_overflow(row[j - 1], rows[e - 1][j], &v)) {
        throw Error(ErrorKind::InvalidInput, "monomial count exceeds 64-bit range");
      }
      row.push_back(v);
    }
  }
  return rows[d - 1][k];
}

std::uint64_t branching_multiplicity(int d, double weight) {
  check_dimension(d);
  if (d == 1) return weight == 1.0 ? 2 : 0;
  const double threshold = 0.5 * (d - 1);
  if (weight < threshold) return 0;
  const double jd = weight - threshold;
  const double jr = std::round(jd);
  if (std::abs(jd - jr) > 1e-9) {
    throw Error(ErrorKind::InvalidInput, "weight must be an integer plus (d-1)/2");
  }
  const auto j = static_cast<std::int64_t>(jr);
  std::uint64_t low = j >= 1 ? monomial_count(d - 1, j - 1) : 0;
  std::uint64_t v;
  if (__builtin_add_overflow(low, monomial_count(d - 1, j), &v)) {
    throw Error(ErrorKind::InvalidInput, "multiplicity exceeds 64-bit range");
  }
  return v;
}

characters::MultiplicitySpectrum free_field_spectrum(int d) {
  check_dimension(d);
  if (d == 1) {
    characters::MultiplicitySpectrum spec({{1.0, 2.0}});
    spec.flags.push_back("convention_dependent: d = 1 read as two weight-1 components");
    return spec;
  }
  characters::TailRule rule;
  rule.name = "free_field";
  rule.parameters = {{"d", static_cast<double>(d)}};
  rule.first_weight = 0.5 * (d - 1);
  rule.multiplicity = [d](std::int64_t j) { return binomial_up(j - 1, d - 2) + binomial_up(j, d - 2); };
  rule.closed_form = [d](double s) {
    const double x = std::exp(-s);
    return std::exp(-0.5 * (d - 1) * s) * (1.0 + x) / std::pow(-std::expm1(-s), d - 1);
  };
  return characters::MultiplicitySpectrum({}, rule);
}

double free_field_partition(int d, double s) {
  check_dimension(d);
  if (!(s > 0.0)) throw Error(ErrorKind::NonPositiveParameter, "s must be positive");
  return characters::character_series(free_field_spectrum(d), s);
}

double free_field_closed_form(int d, double s) {
  check_dimension(d);
  if (!(s > 0.0)) throw Error(ErrorKind::NonPositiveParameter, "s must be positive");
  if (d == 1) return 2.0 * std::exp(-s) / -std::expm1(-s);
  return std::cosh(0.5 * s) / (std::ldexp(1.0, d - 1) * std::pow(std::sinh(0.5 * s), d));
}

DoubleConeResult l2_nuclearity_double_cone(double r, int d) {
  if (!(r > 1.0) || std::isnan(r)) throw Error(ErrorKind::RadiusNotGreaterThanOne, "radius must exceed 1");
  check_dimension(d);
  DoubleConeResult out;
  out.d = d;
  out.r = r;
  out.s = std::log(r);
  out.value = free_field_partition(d, out.s);
  out.asymptotic_reference = 2.0 / std::pow(out.s, d);
  out.relative_deviation = std::abs(out.value - out.asymptotic_reference) / out.asymptotic_reference;
  out.log_net_norm = characters::fock_log_trace(free_field_spectrum(d), out.s);
  out.log_net_norm_reference = 2.0 * std::riemann_zeta(d + 1.0) / std::pow(out.s, d);
  return out;
}

}  // namespace nuclearity::freefield
