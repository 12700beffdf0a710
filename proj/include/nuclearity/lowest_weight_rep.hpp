#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "nuclearity/sl2_group.hpp"
#include "nuclearity/verification_report.hpp"

namespace nuclearity::lwrep {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Truncation of the lowest-weight module with basis e_0..e_{N-1}, L0 e_n = (alpha + n) e_n.
// K1 is not real; it is stored as the real antisymmetric A with K1 = -i A.
struct GeneratorSet {
  double alpha = 0.0;
  int dim = 0;
  Matrix L0;
  Matrix Lplus;
  Matrix Lminus;
  Matrix H;
  Matrix Hprime;
  Matrix K1;
  Matrix K2;
};

GeneratorSet build_generators(double alpha, int N);

// e^{t m} for symmetric m.
Matrix symmetric_exp(const Matrix& m, double t);

// Image i K_x of an element x of sl(2,R) in the truncated module.
Eigen::MatrixXcd represent(const sl2::Mat2& x, const GeneratorSet& g);

// <e_0, U(g) e_0> for g in the complexified group, computed in the 2x2 picture.
std::complex<double> vacuum_coefficient(const sl2::CMat2& g, double alpha);

VerificationReport verify_m1_truncated(double alpha, double s, const std::vector<int>& dims, int block,
                                       double tolerance = 1e-6);

VerificationReport verify_t2_equals_t1(double alpha, double s, const std::vector<int>& dims, int block,
                                       double tolerance = 1e-6);
VerificationReport verify_t2_equals_t1(double alpha, double s, int N, int block, double tolerance = 1e-6);

struct NuclearNormResult {
  double value = 0.0;
  double closed_form = 0.0;
  int dropped_count = 0;
  double dropped_mass = 0.0;
};

NuclearNormResult nuclear_norm_of_T(double alpha, double t, int N);

enum class Inequality { M2, KdcVector, KoBound };

// param: s for M2, lambda for KdcVector, half-length R of I = (-R, R) for KoBound.
VerificationReport verify_operator_inequalities(double alpha, double param, const std::vector<int>& dims, int block,
                                                Inequality which, double tolerance = 1e-6);

struct GlwResult {
  double alpha_target = 0.0;
  double lambda = 0.0;
  std::vector<double> eigenvalues;
  double ka_residual = 0.0;
};

// Lowest eigenvalues of L0 + lambda H^{-1}, lambda = alpha(alpha-1)/2, from the alpha = 1 module.
GlwResult glw_spectrum(double alpha_target, int N, int n_eigs);

VerificationReport verify_glw(double alpha_target, const std::vector<int>& dims, int n_eigs,
                              double tolerance = 1e-2);

}  // namespace nuclearity::lwrep
