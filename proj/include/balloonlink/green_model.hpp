#pragma once

// Annual CO2 comparison between a fleet of terrestrial base stations and the
// balloon that replaces them. All per-station figures below are modelling
// assumptions and can be overridden from a scenario file.

#include <cstdint>
#include <string_view>

namespace balloonlink::green {

inline constexpr double kDefaultDieselLitersPerHour = 2.0;
inline constexpr double kDefaultDieselKgCo2PerLiter = 2.68;
inline constexpr double kDefaultGridKwhPerHour = 1.5;
inline constexpr double kDefaultGridKgCo2PerKwh = 0.82;
inline constexpr double kDefaultHoursPerYear = 8760.0;

enum class SourceKind
{
  Diesel,
  Solar,
  Grid,
};

std::string_view to_string(SourceKind kind);
/// Accepts "DIESEL", "SOLAR", "GRID". Throws DomainError otherwise.
SourceKind source_kind_from_string(std::string_view name);

struct PowerSourceProfile
{
  SourceKind kind = SourceKind::Solar;
  double fuel_liters_per_hour = 0.0;
  double emission_factor_kg_per_liter = 0.0;
  double grid_kwh_per_hour = 0.0;
  double grid_emission_kg_per_kwh = 0.0;

  static PowerSourceProfile diesel(double liters_per_hour = kDefaultDieselLitersPerHour,
                                   double kg_per_liter = kDefaultDieselKgCo2PerLiter);
  static PowerSourceProfile grid(double kwh_per_hour = kDefaultGridKwhPerHour,
                                 double kg_per_kwh = kDefaultGridKgCo2PerKwh);
  static PowerSourceProfile solar();

  /// Non-negative everywhere; a solar profile carries no emission terms.
  void validate() const;
};

struct GreenComparison
{
  double terrestrial_annual_tons = 0.0;
  double balloon_annual_tons = 0.0;
  double avoided_tons = 0.0;
  std::uint64_t replaced_bs_count = 0;
};

/// Tonnes of CO2 per year for one station running hours_per_year.
double annual_emissions_tons(const PowerSourceProfile& profile, double hours_per_year);

GreenComparison compare(const PowerSourceProfile& terrestrial,
                        const PowerSourceProfile& balloon,
                        double balloon_radius_km,
                        double terrestrial_radius_km,
                        double hours_per_year = kDefaultHoursPerYear);

} // namespace balloonlink::green
