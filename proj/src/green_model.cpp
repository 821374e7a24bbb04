#include "balloonlink/green_model.hpp"

#include "balloonlink/coverage.hpp"
#include "balloonlink/errors.hpp"

#include <cmath>
#include <string>

namespace balloonlink::green {

namespace {

void require_non_negative(double v, const char* name)
{
  if (!std::isfinite(v) || v < 0.0)
    throw DomainError(std::string(name) + " must be a finite value >= 0");
}

} // namespace

std::string_view to_string(SourceKind kind)
{
  switch (kind) {
  case SourceKind::Diesel:
    return "DIESEL";
  case SourceKind::Solar:
    return "SOLAR";
  case SourceKind::Grid:
    return "GRID";
  }
  return "UNKNOWN";
}

SourceKind source_kind_from_string(std::string_view name)
{
  if (name == "DIESEL")
    return SourceKind::Diesel;
  if (name == "SOLAR")
    return SourceKind::Solar;
  if (name == "GRID")
    return SourceKind::Grid;
  throw DomainError("unknown source_kind '" + std::string(name) + "' (expected DIESEL, SOLAR or GRID)");
}

PowerSourceProfile PowerSourceProfile::diesel(double liters_per_hour, double kg_per_liter)
{
  return {SourceKind::Diesel, liters_per_hour, kg_per_liter, 0.0, 0.0};
}

PowerSourceProfile PowerSourceProfile::grid(double kwh_per_hour, double kg_per_kwh)
{
  return {SourceKind::Grid, 0.0, 0.0, kwh_per_hour, kg_per_kwh};
}

PowerSourceProfile PowerSourceProfile::solar()
{
  return {};
}

void PowerSourceProfile::validate() const
{
  require_non_negative(fuel_liters_per_hour, "fuel_liters_per_hour");
  require_non_negative(emission_factor_kg_per_liter, "emission_factor_kg_per_liter");
  require_non_negative(grid_kwh_per_hour, "grid_kwh_per_hour");
  require_non_negative(grid_emission_kg_per_kwh, "grid_emission_kg_per_kwh");
  if (kind == SourceKind::Solar &&
      (fuel_liters_per_hour != 0.0 || emission_factor_kg_per_liter != 0.0 ||
       grid_kwh_per_hour != 0.0 || grid_emission_kg_per_kwh != 0.0))
    throw DomainError("SOLAR profile must have all emission-bearing fields equal to 0");
}

double annual_emissions_tons(const PowerSourceProfile& profile, double hours_per_year)
{
  if (!std::isfinite(hours_per_year) || !(hours_per_year > 0.0))
    throw DomainError("hours_per_year must be > 0");
  profile.validate();
  switch (profile.kind) {
  case SourceKind::Diesel:
    return profile.fuel_liters_per_hour * hours_per_year * profile.emission_factor_kg_per_liter / 1000.0;
  case SourceKind::Grid:
    return profile.grid_kwh_per_hour * hours_per_year * profile.grid_emission_kg_per_kwh / 1000.0;
  case SourceKind::Solar:
    return 0.0;
  }
  return 0.0;
}

GreenComparison compare(const PowerSourceProfile& terrestrial,
                        const PowerSourceProfile& balloon,
                        double balloon_radius_km,
                        double terrestrial_radius_km,
                        double hours_per_year)
{
  GreenComparison out;
  out.replaced_bs_count = coverage::replacement_count(balloon_radius_km, terrestrial_radius_km);
  out.terrestrial_annual_tons = static_cast<double>(out.replaced_bs_count) *
                                annual_emissions_tons(terrestrial, hours_per_year);
  out.balloon_annual_tons = annual_emissions_tons(balloon, hours_per_year);
  out.avoided_tons = out.terrestrial_annual_tons - out.balloon_annual_tons;
  return out;
}

} // namespace balloonlink::green
