#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nuclearity/interval_geometry.hpp"

namespace nuclearity::characters {

struct WeightMultiplicity {
  double weight = 0.0;
  double multiplicity = 0.0;
};

// Infinite family of weights first_weight + j, j = 0, 1, 2, ...
struct TailRule {
  std::string name;
  std::vector<std::pair<std::string, double>> parameters;
  double first_weight = 1.0;
  std::function<double(std::int64_t)> multiplicity;
  // sum_j N_j e^{-s (first_weight + j)}; empty when no closed form is known.
  std::function<double(double)> closed_form;
};

class MultiplicitySpectrum {
 public:
  MultiplicitySpectrum() = default;
  explicit MultiplicitySpectrum(std::vector<WeightMultiplicity> entries, std::optional<TailRule> tail = std::nullopt);

  static MultiplicitySpectrum single_weight(double alpha, double multiplicity = 1.0);
  // N(first_weight + j) = multiplicity for every j.
  static MultiplicitySpectrum constant_tail(double first_weight, double multiplicity);

  const std::vector<WeightMultiplicity>& entries() const { return entries_; }
  const std::optional<TailRule>& tail() const { return tail_; }
  bool empty() const;
  double min_weight() const;

  std::vector<std::string> flags;

 private:
  std::vector<WeightMultiplicity> entries_;
  std::optional<TailRule> tail_;
};

// Tr(e^{-s L0}) of the one-particle representation.
double character(const MultiplicitySpectrum& spec, double s);
// Same, but tails are always summed term by term.
double character_series(const MultiplicitySpectrum& spec, double s);

// log Tr(e^{-s L0}) on the bosonic Fock space over the one-particle representation.
double fock_log_trace(const MultiplicitySpectrum& spec, double s);

// Bounded interval (x1, x2) of the real line.
struct LineInterval {
  double x1 = 0.0;
  double x2 = 0.0;
};

double l2_nuclearity_norm(const MultiplicitySpectrum& spec, const geometry::Interval& outer,
                          const geometry::Interval& inner, double lambda);

struct ChainStep {
  std::string name;
  std::string relation;
  std::string lhs;
  std::string rhs;
  std::optional<double> value;  // empty when the quantity has no finite-dimensional model
  double upper_bound = 0.0;
};

struct NuclearityChainReport {
  double lambda = 0.0;
  double ell_prime = 0.0;
  double d_I = 0.0;
  double s_effective = 0.0;
  double bw_time = 0.0;
  double bw_bound = 0.0;
  double ell_prime_shrunk = 0.0;
  double time = 0.0;
  double asymptotic_estimate = 0.0;
  std::vector<ChainStep> steps;
};

NuclearityChainReport bw_nuclearity_bound(const MultiplicitySpectrum& spec, LineInterval outer, LineInterval inner,
                                          double lambda, std::optional<double> time = std::nullopt);
NuclearityChainReport bw_nuclearity_bound(const MultiplicitySpectrum& spec, const geometry::Interval& outer,
                                          const geometry::Interval& inner, double lambda,
                                          std::optional<double> time = std::nullopt);

struct SplitResult {
  double threshold = 0.0;
  double norm = 0.0;
};

SplitResult split_distance(const MultiplicitySpectrum& spec, double s0);

struct LogEllipticityFit {
  double alpha = 0.0;
  double constant = 0.0;
  double residual = 0.0;
  bool kms_criterion_met = false;
  std::string statement;
  std::vector<std::pair<double, double>> points;  // (s, log Tr)
};

inline constexpr double kLogEllipticityResidualTolerance = 0.05;

LogEllipticityFit log_ellipticity_fit(const MultiplicitySpectrum& spec, const std::vector<double>& s_grid);

}  // namespace nuclearity::characters
