#pragma once

#include <cstdint>

#include "nuclearity/characters.hpp"

namespace nuclearity::freefield {

// Number of monomials of degree k in d variables, binomial(k + d - 1, d - 1).
std::uint64_t monomial_count(int d, std::int64_t k);

// Multiplicity of the lowest-weight component of the given weight in the massless scalar
// field of d space dimensions.
std::uint64_t branching_multiplicity(int d, double weight);

characters::MultiplicitySpectrum free_field_spectrum(int d);

// Term-by-term one-particle trace.
double free_field_partition(int d, double s);
// cosh(s/2) / (2^{d-1} sinh^d(s/2)) for odd d >= 3; 2 e^{-s}/(1 - e^{-s}) for d = 1.
double free_field_closed_form(int d, double s);

struct DoubleConeResult {
  int d = 3;
  double r = 0.0;
  double s = 0.0;                      // log r
  double value = 0.0;                  // Tr(e^{-s L0}) of the one-particle representation
  double asymptotic_reference = 0.0;   // 2 / (log r)^d
  double relative_deviation = 0.0;     // |value - reference| / reference
  double log_net_norm = 0.0;           // log Tr(e^{-s L0}) on the Fock space
  double log_net_norm_reference = 0.0; // 2 zeta(d+1) / (log r)^d
};

DoubleConeResult l2_nuclearity_double_cone(double r, int d = 3);

}  // namespace nuclearity::freefield
