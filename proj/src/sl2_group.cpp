#include "nuclearity/sl2_group.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "nuclearity/error.hpp"

namespace nuclearity::sl2 {

namespace {

using cd = std::complex<double>;

constexpr double kIdentityTolerance = 1e-10;

// sinh(z)/z and cosh(z) as functions of z^2, even in z so the branch of the root is irrelevant.
cd sinhc_of_square(cd z2) {
  if (std::abs(z2) < 1e-8) return 1.0 + z2 / 6.0 + z2 * z2 / 120.0;
  const cd z = std::sqrt(z2);
  return std::sinh(z) / z;
}

cd cosh_of_square(cd z2) { return std::cosh(std::sqrt(z2)); }

VerificationReport group_report(const char* name, double residual) {
  VerificationReport r;
  r.identity_name = name;
  r.dims_tested = {2};
  r.block = 2;
  r.residuals = {residual};
  r.tolerance = kIdentityTolerance;
  finalize(r);
  return r;
}

}  // namespace

const LieBasis& LieBasis::standard() {
  static const LieBasis basis = [] {
    LieBasis b;
    b.h << 0.0, 1.0, 0.0, 0.0;
    b.hprime << 0.0, 0.0, -1.0, 0.0;
    b.l0 << 0.0, 0.5, -0.5, 0.0;
    b.k1 << 0.5, 0.0, 0.0, -0.5;
    b.k2 << 0.0, 0.5, 0.5, 0.0;
    return b;
  }();
  return basis;
}

Mat2 expm(const Mat2& x) {
  const double half_trace = 0.5 * x.trace();
  const Mat2 x0 = x - half_trace * Mat2::Identity();
  const double delta = -x0.determinant();  // x0^2 = delta * 1
  double c;
  double sc;
  if (std::abs(delta) < 1e-8) {
    c = 1.0 + delta / 2.0 + delta * delta / 24.0;
    sc = 1.0 + delta / 6.0 + delta * delta / 120.0;
  } else if (delta > 0.0) {
    const double mu = std::sqrt(delta);
    c = std::cosh(mu);
    sc = std::sinh(mu) / mu;
  } else {
    const double nu = std::sqrt(-delta);
    c = std::cos(nu);
    sc = std::sin(nu) / nu;
  }
  return std::exp(half_trace) * (c * Mat2::Identity() + sc * x0);
}

CMat2 expm(const CMat2& x) {
  const cd half_trace = 0.5 * x.trace();
  const CMat2 x0 = x - half_trace * CMat2::Identity();
  const cd delta = -x0.determinant();
  cd c = std::abs(delta) < 1e-8 ? 1.0 + delta / 2.0 + delta * delta / 24.0 : cosh_of_square(delta);
  return std::exp(half_trace) * (c * CMat2::Identity() + sinhc_of_square(delta) * x0);
}

Mat2 commutator(const Mat2& a, const Mat2& b) { return a * b - b * a; }

CMat2 complexified(const Mat2& x) { return cd(0.0, -1.0) * x.cast<cd>(); }

double max_abs(const Mat2& a) { return a.cwiseAbs().maxCoeff(); }

double max_abs(const CMat2& a) { return a.cwiseAbs().maxCoeff(); }

double projective_residual(const Mat2& a, const Mat2& b) {
  const double r = std::min(max_abs(Mat2(a - b)), max_abs(Mat2(a + b)));
  return r / std::max(1.0, max_abs(a));
}

double projective_residual(const CMat2& a, const CMat2& b) {
  const double r = std::min(max_abs(CMat2(a - b)), max_abs(CMat2(a + b)));
  return r / std::max(1.0, max_abs(a));
}

Mat2 boosted_k2(double t) {
  const double tau = 2.0 * std::numbers::pi * t;
  Mat2 m;
  m << 0.0, 0.5 * std::exp(-tau), 0.5 * std::exp(tau), 0.0;
  return m;
}

VerificationReport verify_bch_identity(double s, double t) {
  const LieBasis& b = LieBasis::standard();
  const double tau = 2.0 * std::numbers::pi * t;
  const Mat2 lhs = expm(Mat2(-tau * b.k1)) * expm(Mat2(2.0 * std::numbers::pi * s * b.k2)) * expm(Mat2(tau * b.k1));
  const Mat2 rhs = expm(Mat2(2.0 * std::numbers::pi * s * boosted_k2(t)));
  VerificationReport r = group_report("bch", projective_residual(lhs, rhs));
  r.details = {{"s", s}, {"t", t}, {"adjoint_action_residual", adjoint_action_residual(t)}};
  return r;
}

double adjoint_action_residual(double t) {
  const LieBasis& b = LieBasis::standard();
  const double tau = 2.0 * std::numbers::pi * t;
  const Mat2 g = expm(Mat2(-tau * b.k1));
  const Mat2 lhs = g * b.k2 * g.inverse();
  const Mat2 rhs = std::cosh(tau) * b.k2 - std::sinh(tau) * b.l0;
  return max_abs(Mat2(lhs - rhs)) / std::max(1.0, max_abs(lhs));
}

VerificationReport verify_rotation_factorization(double s) {
  const double c = std::cos(0.5 * s);
  if (!std::isfinite(s) || std::abs(c) < 1e-12) {
    throw Error(ErrorKind::ParameterAtSingularity, "tan(s/2) is singular at s = pi mod 2pi");
  }
  const LieBasis& b = LieBasis::standard();
  const double a = std::tan(0.5 * s);
  const Mat2 lhs = expm(Mat2(2.0 * s * b.l0));
  const Mat2 rhs = expm(Mat2(a * b.h)) * expm(Mat2(std::sin(s) * b.hprime)) * expm(Mat2(a * b.h));
  VerificationReport r = group_report("rotation", projective_residual(lhs, rhs));
  r.details = {{"s", s}, {"a", a}, {"a_prime", std::sin(s)}};
  return r;
}

VerificationReport verify_half_turn_factorization() {
  const LieBasis& b = LieBasis::standard();
  const Mat2 lhs = expm(Mat2(-std::numbers::pi * b.l0));
  const Mat2 rhs = expm(b.h) * expm(b.hprime) * expm(b.h);
  VerificationReport r = group_report("half_turn", projective_residual(lhs, rhs));
  r.details = {{"ray_inversion_residual", std::abs(rhs(0, 0)) + std::abs(rhs(1, 1))}};
  return r;
}

VerificationReport verify_euclidean_factorization(double s) {
  const LieBasis& b = LieBasis::standard();
  const double a = std::tanh(0.5 * s);
  const double ap = std::sinh(s);
  const CMat2 lhs = expm(CMat2(-2.0 * s * complexified(b.l0)));
  const CMat2 rhs = expm(CMat2(-a * complexified(b.h))) * expm(CMat2(-ap * complexified(b.hprime))) *
                    expm(CMat2(-a * complexified(b.h)));
  VerificationReport r = group_report("euclidean", projective_residual(lhs, rhs));
  r.details = {{"s", s}, {"a", a}, {"a_prime", ap}};
  return r;
}

}  // namespace nuclearity::sl2
