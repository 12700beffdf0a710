#pragma once

#include <Eigen/Dense>

#include "nuclearity/verification_report.hpp"

namespace nuclearity::sl2 {

using Mat2 = Eigen::Matrix2d;
using CMat2 = Eigen::Matrix2cd;

// Real form of sl(2,R) acting on the line by x -> (m11 x + m12)/(m21 x + m22).
//   exp(t h)      : x -> x + t
//   exp(t hprime) : x -> x / (1 - t x)
//   l0 = (h + hprime)/2 rotates the circle, exp(2 pi l0) = -1
//   k2 = (h - hprime)/2 dilates (-1, 1), k1 dilates (0, inf)
// A self-adjoint generator K of U with U(exp(t x)) = e^{itK} corresponds to x; the
// complexified matrix of K is -i x, so e^{-sK} corresponds to exp(i s x).
struct LieBasis {
  Mat2 h;
  Mat2 hprime;
  Mat2 l0;
  Mat2 k1;
  Mat2 k2;

  static const LieBasis& standard();
};

Mat2 expm(const Mat2& x);
CMat2 expm(const CMat2& x);

Mat2 commutator(const Mat2& a, const Mat2& b);

// -i x: the complex 2x2 matrix attached to the self-adjoint generator of x.
CMat2 complexified(const Mat2& x);

double max_abs(const Mat2& a);
double max_abs(const CMat2& a);

// min over the sign ambiguity, relative to max(1, |a|_max).
double projective_residual(const Mat2& a, const Mat2& b);
double projective_residual(const CMat2& a, const CMat2& b);

// Ad(exp(-2 pi t k1)) k2 computed entrywise.
Mat2 boosted_k2(double t);

VerificationReport verify_bch_identity(double s, double t);
double adjoint_action_residual(double t);
VerificationReport verify_rotation_factorization(double s);
VerificationReport verify_half_turn_factorization();
VerificationReport verify_euclidean_factorization(double s);

}  // namespace nuclearity::sl2
