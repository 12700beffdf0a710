#include <cmath>
#include <future>
#include <vector>

#include <gtest/gtest.h>

#include "nuclearity/characters.hpp"
#include "nuclearity/error.hpp"
#include "nuclearity/free_field.hpp"

using namespace nuclearity;
using namespace nuclearity::freefield;

namespace {

unsigned __int128 exact_binomial(std::int64_t n, int r) {
  unsigned __int128 v = 1;
  for (int i = 1; i <= r; ++i) v = v * static_cast<unsigned __int128>(n - r + i) / i;
  return v;
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST(Monomials, MatchBinomial) {
  for (int d = 1; d <= 8; ++d) {
    for (std::int64_t k = 0; k <= 1000; ++k) {
      ASSERT_TRUE(monomial_count(d, k) == exact_binomial(k + d - 1, d - 1)) << "d=" << d << " k=" << k;
    }
  }
}

TEST(Monomials, SphericalHarmonicIdentity) {
  for (int d = 2; d <= 8; ++d) {
    for (std::int64_t k = 0; k <= 1000; ++k) {
      const std::uint64_t lhs = monomial_count(d, k) - (k >= 2 ? monomial_count(d, k - 2) : 0);
      const std::uint64_t rhs = monomial_count(d - 1, k) + (k >= 1 ? monomial_count(d - 1, k - 1) : 0);
      ASSERT_EQ(lhs, rhs) << "d=" << d << " k=" << k;
    }
  }
}

TEST(Monomials, OverflowIsReported) {
  EXPECT_EQ(kind_of([] { monomial_count(40, 1000000); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { monomial_count(0, 3); }), ErrorKind::BadDimension);
}

TEST(Monomials, ConcurrentCallsAgree) {
  std::vector<std::future<std::uint64_t>> fut;
  for (int t = 0; t < 8; ++t) {
    fut.push_back(std::async(std::launch::async, [t] {
      std::uint64_t acc = 0;
      for (std::int64_t k = 0; k <= 500; ++k) acc += monomial_count(3 + (t % 4), k);
      return acc;
    }));
  }
  for (int t = 0; t < 8; ++t) {
    std::uint64_t expected = 0;
    for (std::int64_t k = 0; k <= 500; ++k) expected += static_cast<std::uint64_t>(exact_binomial(k + 2 + (t % 4), 2 + (t % 4)));
    EXPECT_EQ(fut[t].get(), expected);
  }
}

TEST(Branching, ThreeDimensions) {
  for (int k = 1; k <= 1000; ++k) ASSERT_EQ(branching_multiplicity(3, k), static_cast<std::uint64_t>(2 * k - 1));
  EXPECT_EQ(branching_multiplicity(3, 0.0), 0u);
  EXPECT_EQ(branching_multiplicity(3, 0.5), 0u);
}

TEST(Branching, FiveDimensions) {
  EXPECT_EQ(branching_multiplicity(5, 5.0), 30u);
  EXPECT_EQ(branching_multiplicity(5, 2.0), 1u);
  EXPECT_EQ(branching_multiplicity(5, 1.0), 0u);
  const double k = 1e4;
  const double ratio = static_cast<double>(branching_multiplicity(5, k + 2.0)) / (2.0 * k * k * k / 6.0);
  EXPECT_NEAR(ratio, 1.0, 0.01);
}

TEST(Branching, RejectsOffLatticeAndEvenDimensions) {
  EXPECT_EQ(kind_of([] { branching_multiplicity(3, 1.5); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { branching_multiplicity(5, 2.5); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { branching_multiplicity(4, 2.0); }), ErrorKind::EvenDimensionUnsupported);
  EXPECT_EQ(kind_of([] { free_field_spectrum(2); }), ErrorKind::EvenDimensionUnsupported);
  EXPECT_EQ(kind_of([] { free_field_spectrum(0); }), ErrorKind::BadDimension);
}

TEST(Branching, OneDimensionConvention) {
  EXPECT_EQ(branching_multiplicity(1, 1.0), 2u);
  EXPECT_EQ(branching_multiplicity(1, 2.0), 0u);
  const characters::MultiplicitySpectrum spec = free_field_spectrum(1);
  ASSERT_EQ(spec.entries().size(), 1u);
  EXPECT_EQ(spec.entries()[0].multiplicity, 2.0);
  EXPECT_FALSE(spec.flags.empty());
  EXPECT_NEAR(free_field_closed_form(1, 1.0), 2.0 * 0.5819767068693264, 1e-15);
}

TEST(Spectrum, ThreeDimensionsStartsOneThreeFive) {
  const characters::MultiplicitySpectrum spec = free_field_spectrum(3);
  ASSERT_TRUE(spec.tail().has_value());
  EXPECT_EQ(spec.tail()->first_weight, 1.0);
  EXPECT_EQ(spec.tail()->multiplicity(0), 1.0);
  EXPECT_EQ(spec.tail()->multiplicity(1), 3.0);
  EXPECT_EQ(spec.tail()->multiplicity(2), 5.0);
}

TEST(Partition, ThreeDimensionsMatchesClosedForm) {
  double worst = 0.0;
  for (int i = 0; i <= 200; ++i) {
    const double s = 0.05 * std::pow(200.0, i / 200.0);
    const double series = free_field_partition(3, s);
    const double closed = free_field_closed_form(3, s);
    worst = std::max(worst, std::abs(series - closed) / closed);
  }
  EXPECT_LE(worst, 1e-12);
  EXPECT_NEAR(free_field_closed_form(3, 1.0), 1.992294767124987, 1e-14);
}

TEST(Partition, OddDimensionsMatchClosedForm) {
  for (int d : {5, 7, 9}) {
    for (double s : {0.1, 1.0, 5.0}) {
      const double closed = free_field_closed_form(d, s);
      EXPECT_NEAR(free_field_partition(d, s), closed, 1e-12 * closed) << "d=" << d << " s=" << s;
    }
  }
}

TEST(Partition, SmallSBehaviour) {
  const double s = 1e-3;
  EXPECT_NEAR(free_field_partition(3, s) * s * s * s / 2.0, 1.0, 1e-3);
}

TEST(DoubleCone, Values) {
  const DoubleConeResult e = l2_nuclearity_double_cone(std::exp(1.0));
  EXPECT_NEAR(e.s, 1.0, 1e-15);
  EXPECT_NEAR(e.value, 1.992294767124987, 1e-12);
  EXPECT_EQ(e.asymptotic_reference, 2.0);

  const DoubleConeResult near = l2_nuclearity_double_cone(1.01);
  EXPECT_LE(near.relative_deviation, 0.01);
  EXPECT_NEAR(near.log_net_norm / near.log_net_norm_reference, 1.0, 0.01);
  EXPECT_GT(near.log_net_norm, near.value);
}

TEST(DoubleCone, Rejections) {
  EXPECT_EQ(kind_of([] { l2_nuclearity_double_cone(1.0); }), ErrorKind::RadiusNotGreaterThanOne);
  EXPECT_EQ(kind_of([] { l2_nuclearity_double_cone(0.5); }), ErrorKind::RadiusNotGreaterThanOne);
  EXPECT_EQ(kind_of([] { l2_nuclearity_double_cone(2.0, 4); }), ErrorKind::EvenDimensionUnsupported);
}
