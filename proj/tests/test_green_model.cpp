#include "balloonlink/errors.hpp"
#include "balloonlink/green_model.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace balloonlink;
using namespace balloonlink::green;

TEST(AnnualEmissions, DieselHandArithmetic)
{
  // 2.0 L/h * 8760 h * 2.68 kg/L / 1000 = 46.9536 t
  EXPECT_LT(oracle::rel_err(annual_emissions_tons(PowerSourceProfile::diesel(), 8760), 46.9536), 1e-12);
  EXPECT_LT(oracle::rel_err(annual_emissions_tons(PowerSourceProfile::diesel(1.0), 8760), 23.4768), 1e-12);
}

TEST(AnnualEmissions, SolarIsZero)
{
  EXPECT_EQ(annual_emissions_tons(PowerSourceProfile::solar(), 8760), 0.0);
  EXPECT_EQ(annual_emissions_tons(PowerSourceProfile::solar(), 1), 0.0);
}

TEST(AnnualEmissions, Grid)
{
  // 1.5 kWh/h * 8760 h * 0.82 kg/kWh / 1000 = 10.7748 t
  EXPECT_LT(oracle::rel_err(annual_emissions_tons(PowerSourceProfile::grid(), 8760), 10.7748), 1e-12);
}

TEST(AnnualEmissions, Errors)
{
  EXPECT_THROW(annual_emissions_tons(PowerSourceProfile::diesel(), 0), DomainError);
  EXPECT_THROW(annual_emissions_tons(PowerSourceProfile::diesel(-1.0), 8760), DomainError);
  auto dirty_solar = PowerSourceProfile::solar();
  dirty_solar.fuel_liters_per_hour = 1.0;
  EXPECT_THROW(annual_emissions_tons(dirty_solar, 8760), DomainError);
}

TEST(Compare, DieselFleetVersusSolarBalloon)
{
  const auto c = compare(PowerSourceProfile::diesel(), PowerSourceProfile::solar(), 10, 1, 8760);
  EXPECT_EQ(c.replaced_bs_count, 100u);
  EXPECT_NEAR(c.terrestrial_annual_tons, 4695.36, 1e-9);
  EXPECT_EQ(c.balloon_annual_tons, 0.0);
  EXPECT_EQ(c.avoided_tons, c.terrestrial_annual_tons);
}

TEST(Compare, IdenticalScenariosAvoidNothing)
{
  const auto c = compare(PowerSourceProfile::diesel(), PowerSourceProfile::diesel(), 3, 3, 8760);
  EXPECT_EQ(c.replaced_bs_count, 1u);
  EXPECT_EQ(c.avoided_tons, 0.0);

  const auto s = compare(PowerSourceProfile::solar(), PowerSourceProfile::solar(), 10, 1, 8760);
  EXPECT_EQ(s.replaced_bs_count, 100u);
  EXPECT_EQ(s.terrestrial_annual_tons, 0.0);
  EXPECT_EQ(s.balloon_annual_tons, 0.0);
  EXPECT_EQ(s.avoided_tons, 0.0);
}

TEST(Compare, LinearInCountAndFuel)
{
  const auto per_bs = annual_emissions_tons(PowerSourceProfile::diesel(), 8760);
  for (double b : {1.0, 2.0, 3.5, 10.0, 17.3}) {
    const auto c = compare(PowerSourceProfile::diesel(), PowerSourceProfile::solar(), b, 1, 8760);
    EXPECT_LT(oracle::rel_err(c.avoided_tons, static_cast<double>(c.replaced_bs_count) * per_bs), 1e-12);
  }
  const auto one = compare(PowerSourceProfile::diesel(1.0), PowerSourceProfile::solar(), 10, 1, 8760);
  const auto three = compare(PowerSourceProfile::diesel(3.0), PowerSourceProfile::solar(), 10, 1, 8760);
  EXPECT_LT(oracle::rel_err(three.avoided_tons, 3.0 * one.avoided_tons), 1e-12);
}

TEST(Compare, MonotoneInBalloonRadius)
{
  double last = -1.0;
  for (double b = 0.5; b < 25.0; b += 0.1) {
    const auto c = compare(PowerSourceProfile::diesel(), PowerSourceProfile::grid(), b, 1.0, 8760);
    EXPECT_GE(c.avoided_tons, last);
    last = c.avoided_tons;
  }
}

TEST(SourceKind, Names)
{
  EXPECT_EQ(source_kind_from_string("GRID"), SourceKind::Grid);
  EXPECT_EQ(to_string(SourceKind::Diesel), "DIESEL");
  EXPECT_THROW(source_kind_from_string("wind"), DomainError);
}
