#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "nuclearity/error.hpp"
#include "nuclearity/interval_geometry.hpp"
#include "nuclearity/sl2_group.hpp"

using namespace nuclearity;
using namespace nuclearity::sl2;

namespace {

constexpr double kPi = std::numbers::pi;

// Taylor series oracle for the matrix exponential.
template <class M>
M series_exp(const M& x) {
  M sum = M::Identity();
  M term = M::Identity();
  for (int k = 1; k < 60; ++k) {
    term = (term * x) / static_cast<double>(k);
    sum += term;
  }
  return sum;
}

}  // namespace

TEST(LieBasis, FlowsActOnTheLine) {
  const LieBasis& b = LieBasis::standard();
  const geometry::MoebiusElement tr(expm(Mat2(0.7 * b.h)));
  const geometry::MoebiusElement ct(expm(Mat2(0.7 * b.hprime)));
  const geometry::MoebiusElement dil(expm(Mat2(0.7 * b.k1)));
  for (double x : {-2.0, -0.3, 0.0, 0.4, 1.1}) {
    EXPECT_NEAR(tr.apply(x), x + 0.7, 1e-14);
    EXPECT_NEAR(ct.apply(x), x / (1.0 - 0.7 * x), 1e-13);
    EXPECT_NEAR(dil.apply(x), std::exp(0.7) * x, 1e-13);
  }
  EXPECT_NEAR(projective_residual(expm(Mat2(2.0 * kPi * b.l0)), Mat2(-Mat2::Identity())), 0.0, 1e-15);
  const geometry::MoebiusElement boost(expm(Mat2(1.0 * b.k2)));
  EXPECT_NEAR(boost.apply(1.0), 1.0, 1e-14);
  EXPECT_NEAR(boost.apply(-1.0), -1.0, 1e-14);
}

TEST(LieBasis, Relations) {
  const LieBasis& b = LieBasis::standard();
  EXPECT_EQ(Mat2(2.0 * b.l0), Mat2(b.h + b.hprime));
  EXPECT_EQ(Mat2(2.0 * b.k2), Mat2(b.h - b.hprime));
  EXPECT_EQ(commutator(b.k1, b.h), b.h);
  EXPECT_EQ(commutator(b.k1, b.hprime), Mat2(-b.hprime));
  EXPECT_EQ(commutator(b.l0, b.k2), b.k1);
  EXPECT_EQ(commutator(b.k1, b.k2), b.l0);
}

TEST(Expm, MatchesSeriesForAllConjugacyClasses) {
  const LieBasis& b = LieBasis::standard();
  const Mat2 samples[] = {Mat2(1.3 * b.l0), Mat2(0.9 * b.k2), Mat2(0.4 * b.h), Mat2(1e-5 * b.k1 + 2e-5 * b.h),
                          Mat2(0.3 * b.l0 + 0.3 * b.k2 + 0.1 * b.k1)};
  for (const Mat2& x : samples) {
    EXPECT_LE(max_abs(Mat2(expm(x) - series_exp(x))), 1e-14);
    const CMat2 z = complexified(x);
    EXPECT_LE(max_abs(CMat2(expm(z) - series_exp(z))), 1e-14);
  }
}

TEST(GroupIdentities, BchOnGrid) {
  double worst = 0.0;
  double worst_ad = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double s = -1.0 + 2.0 * i / 49.0;
    const double t = -0.5 + 1.0 * ((7 * i) % 50) / 49.0;
    const VerificationReport r = verify_bch_identity(s, t);
    EXPECT_TRUE(r.verdict) << "s=" << s << " t=" << t;
    worst = std::max(worst, r.residuals.back());
    worst_ad = std::max(worst_ad, adjoint_action_residual(t));
  }
  EXPECT_LE(worst, 1e-10);
  EXPECT_LE(worst_ad, 1e-12);
}

TEST(GroupIdentities, BoostedK2MatchesConjugation) {
  const LieBasis& b = LieBasis::standard();
  for (double t : {-0.4, 0.0, 0.25, 0.5}) {
    const Mat2 g = expm(Mat2(-2.0 * kPi * t * b.k1));
    EXPECT_LE(projective_residual(boosted_k2(t), Mat2(g * b.k2 * g.inverse())), 1e-12);
  }
}

TEST(GroupIdentities, RotationOnGrid) {
  for (int i = 0; i < 50; ++i) {
    const double s = -3.0 + 6.0 * i / 49.0;
    const VerificationReport r = verify_rotation_factorization(s);
    EXPECT_TRUE(r.verdict) << "s=" << s;
    EXPECT_LE(r.residuals.back(), 1e-10);
  }
}

TEST(GroupIdentities, RotationAtHalfTurnParameters) {
  const VerificationReport r = verify_rotation_factorization(kPi / 2.0);
  EXPECT_TRUE(r.verdict);
  EXPECT_NEAR(r.details[1].second, 1.0, 1e-15);
  EXPECT_NEAR(r.details[2].second, 1.0, 1e-15);
}

TEST(GroupIdentities, RotationSingularity) {
  for (double s : {kPi, -kPi, 3.0 * kPi}) {
    try {
      verify_rotation_factorization(s);
      ADD_FAILURE() << "no error at s=" << s;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ParameterAtSingularity);
    }
  }
}

TEST(GroupIdentities, HalfTurn) {
  const VerificationReport r = verify_half_turn_factorization();
  EXPECT_TRUE(r.verdict);
  EXPECT_LE(r.residuals.back(), 1e-15);
  const LieBasis& b = LieBasis::standard();
  const geometry::MoebiusElement g(expm(b.h) * expm(b.hprime) * expm(b.h));
  for (double x : {0.5, 1.0, 3.0}) EXPECT_NEAR(g.apply(x), -1.0 / x, 1e-14);
}

TEST(GroupIdentities, EuclideanOnGrid) {
  for (int i = 1; i <= 50; ++i) {
    const double s = 0.1 * i;
    const VerificationReport r = verify_euclidean_factorization(s);
    EXPECT_TRUE(r.verdict) << "s=" << s;
  }
}

TEST(ProjectiveResidual, SignInsensitive) {
  const Mat2 a = expm(Mat2(0.3 * LieBasis::standard().k2));
  EXPECT_EQ(projective_residual(a, Mat2(-a)), 0.0);
  EXPECT_GT(projective_residual(a, Mat2::Identity()), 0.1);
}
