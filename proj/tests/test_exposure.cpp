#include "balloonlink/errors.hpp"
#include "balloonlink/exposure.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

using namespace balloonlink;
using namespace balloonlink::exposure;

namespace {

rf::TransmitterConfig reference_tx()
{
  return {20.0, 17.0, 900.0, 1.0, 50.0};
}

void expect_strictly_decreasing(const SweepSeries& s)
{
  for (std::size_t i = 1; i < s.points.size(); ++i) {
    EXPECT_GT(s.points[i].abscissa, s.points[i - 1].abscissa);
    EXPECT_LT(s.points[i].value, s.points[i - 1].value) << s.label << " at " << i;
  }
}

} // namespace

TEST(Linspace, InclusiveEndpoints)
{
  const auto g = linspace(0.0, 25.0, 101);
  ASSERT_EQ(g.size(), 101u);
  EXPECT_EQ(g.front(), 0.0);
  EXPECT_EQ(g.back(), 25.0);
  EXPECT_DOUBLE_EQ(g[4], 1.0);
  EXPECT_THROW(linspace(0, 1, 1), DomainError);
}

TEST(TableOne, ReferenceRows)
{
  const std::vector<double> d{10, 100, 500};
  const auto rows = table_one(reference_tx(), d);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_NEAR(rows[0].power_density_w_m2, 0.796, 5e-4);
  EXPECT_NEAR(rows[1].power_density_w_m2, 0.0079577, 5e-8);
  EXPECT_NEAR(rows[2].power_density_w_m2, 0.000318, 5e-7);
  EXPECT_EQ(rows[1].distance_m, 100.0);

  const std::vector<double> one{10};
  EXPECT_EQ(table_one(reference_tx(), one).size(), 1u);
  EXPECT_THROW(table_one(reference_tx(), std::vector<double>{}), DomainError);
  EXPECT_THROW(table_one(reference_tx(), std::vector<double>{10, 0}), DomainError);
}

TEST(GroundProfile, MaximaBelowBalloon)
{
  const auto s150 = ground_density_profile(reference_tx(), 150, 25);
  const auto s200 = ground_density_profile(reference_tx(), 200, 25);
  EXPECT_EQ(s150.points.size(), kDefaultSweepSteps);
  EXPECT_EQ(s150.points.front().abscissa, 0.0);
  EXPECT_NEAR(s150.points.front().value, 3.537e-3, 5e-7);
  EXPECT_NEAR(s200.points.front().value, 1.989e-3, 5e-7);
  EXPECT_NEAR(s150.points.back().value, 3.4412e-3, 5e-8);
  expect_strictly_decreasing(s150);
  expect_strictly_decreasing(s200);
}

TEST(GroundProfile, EndpointsMatchPointEvaluationExactly)
{
  const auto tx = reference_tx();
  const auto s = ground_density_profile(tx, 150, 25, 11);
  EXPECT_EQ(s.points.front().value, rf::power_density(20, 50, rf::slant_range(150, 0)));
  EXPECT_EQ(s.points.back().value, rf::power_density(20, 50, rf::slant_range(150, 25)));
}

TEST(GroundProfile, MaximumAlwaysAtZeroOffset)
{
  oracle::Draw draw(17);
  for (int i = 0; i < 100; ++i) {
    const auto s = ground_density_profile(reference_tx(), draw.uniform(1, 1000), draw.uniform(1, 2000), 37);
    for (const auto& p : s.points)
      EXPECT_LE(p.value, s.points.front().value);
  }
}

TEST(GroundProfile, EdgeCases)
{
  EXPECT_THROW(ground_density_profile(reference_tx(), 0, 25), DomainError);
  EXPECT_THROW(ground_density_profile(reference_tx(), 150, -1), DomainError);
  EXPECT_THROW(ground_density_profile(reference_tx(), 150, 25, 1), DomainError);
  const auto point = ground_density_profile(reference_tx(), 150, 0);
  ASSERT_EQ(point.points.size(), 1u);
  EXPECT_EQ(point.points[0].value, rf::power_density(20, 50, 150));
}

TEST(AltitudeProfile, InverseSquareAndShape)
{
  const auto s = altitude_density_profile(reference_tx(), 200, 400, 0);
  expect_strictly_decreasing(s);
  EXPECT_NEAR(s.points.front().value, 1.989e-3, 5e-7);
  EXPECT_LT(oracle::rel_err(s.points.back().value, 0.25 * s.points.front().value), 1e-12);
  EXPECT_THROW(altitude_density_profile(reference_tx(), 400, 200, 0), DomainError);
  EXPECT_THROW(altitude_density_profile(reference_tx(), 0, 200, 0), DomainError);
}

TEST(EFieldProfile, OneOverRange)
{
  const auto s = efield_profile(reference_tx(), 10, 100, 10);
  EXPECT_NEAR(s.points.front().value, 17.3205, 5e-5);
  EXPECT_LT(oracle::rel_err(s.points.back().value, s.points.front().value / 10), 1e-12);
  expect_strictly_decreasing(s);

  auto silent = reference_tx();
  silent.power_w = 0.0;
  for (const auto& p : efield_profile(silent, 10, 100, 5).points)
    EXPECT_EQ(p.value, 0.0);
  EXPECT_THROW(efield_profile(reference_tx(), 100, 10), DomainError);
}

TEST(RangeDensityProfile, MatchesTableRows)
{
  const auto s = range_density_profile(reference_tx(), 10, 500, 50);
  EXPECT_EQ(s.points.front().value, rf::power_density(20, 50, 10));
  EXPECT_EQ(s.points.back().value, rf::power_density(20, 50, 500));
  expect_strictly_decreasing(s);
}

TEST(ReceivedPowerProfile, Examples)
{
  const auto tx = reference_tx();
  const auto far = received_power_profile(tx, 0.0, 900, 1000, 2000, 0, 3);
  EXPECT_NEAR(far.points.front().value, 7.0265e-7, 5e-11);

  const auto s = received_power_profile(tx, 0.0, 900, 200, 400, 0);
  expect_strictly_decreasing(s);
  EXPECT_LT(oracle::rel_err(s.points.back().value, 0.25 * s.points.front().value), 1e-12);

  const auto doubled = received_power_profile(tx, rf::linear_to_db(2.0), 900, 200, 400, 0);
  for (std::size_t i = 0; i < s.points.size(); ++i)
    EXPECT_LT(oracle::rel_err(doubled.points[i].value, 2.0 * s.points[i].value), 1e-12);
  EXPECT_THROW(received_power_profile(tx, 0.0, 900, 400, 400, 0), DomainError);
}

TEST(ClassifyZone, Examples)
{
  const ZoneThresholds t{4.5, 0.1};
  EXPECT_EQ(classify_zone(5.0, t), ExposureZone::ExceedsLimit);
  EXPECT_EQ(classify_zone(4.5, t), ExposureZone::ExceedsLimit);
  EXPECT_EQ(classify_zone(0.796, t), ExposureZone::Caution);
  EXPECT_EQ(classify_zone(0.45, t), ExposureZone::Caution);
  EXPECT_EQ(classify_zone(0.0, t), ExposureZone::Safe);
  EXPECT_THROW(classify_zone(-1e-9, t), DomainError);
  EXPECT_THROW(classify_zone(1.0, ZoneThresholds{4.5, 1.0}), DomainError);
  EXPECT_EQ(to_string(ExposureZone::ExceedsLimit), "EXCEEDS_LIMIT");
}

TEST(ClassifyZone, Monotone)
{
  const ZoneThresholds t{2.0, 0.25};
  auto last = ExposureZone::Safe;
  for (double d = 0.0; d < 5.0; d += 0.01) {
    const auto z = classify_zone(d, t);
    EXPECT_GE(static_cast<int>(z), static_cast<int>(last));
    last = z;
  }
}

TEST(ZoneThresholds, FrequencyDefaults)
{
  EXPECT_DOUBLE_EQ(ZoneThresholds::defaults_for(900).limit_w_m2, 4.5);
  EXPECT_DOUBLE_EQ(ZoneThresholds::defaults_for(900).caution_fraction, 0.1);
  EXPECT_DOUBLE_EQ(ZoneThresholds::defaults_for(2000).limit_w_m2, 10.0);
  EXPECT_DOUBLE_EQ(ZoneThresholds::defaults_for(150).limit_w_m2, 2.0);
  EXPECT_DOUBLE_EQ(ZoneThresholds::defaults_for(6000).limit_w_m2, 10.0);
}
