#pragma once

#include "balloonlink/rf_core.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace balloonlink::exposure {

inline constexpr std::size_t kDefaultSweepSteps = 101;

struct SweepPoint
{
  double abscissa = 0.0;
  double value = 0.0;
};

/// One-dimensional profile of a field quantity against a swept variable.
/// Abscissas are strictly increasing.
struct SweepSeries
{
  std::string label;
  std::string abscissa_name; // includes units, e.g. "ground_offset_m"
  std::string unit;          // unit of value
  std::vector<SweepPoint> points;
};

/// Ordered so that a larger enumerator is a more severe zone.
enum class ExposureZone
{
  Safe = 0,
  Caution = 1,
  ExceedsLimit = 2,
};

std::string_view to_string(ExposureZone zone);

struct ZoneThresholds
{
  double limit_w_m2 = 0.0;
  double caution_fraction = 0.1;

  /// General-public reference level for the carrier: 2 W/m^2 below 400 MHz,
  /// f/200 W/m^2 from 400 to 2000 MHz, 10 W/m^2 above. Caution at 10 %.
  static ZoneThresholds defaults_for(double freq_mhz);

  void validate() const;
};

struct TableRow
{
  double distance_m = 0.0;
  double power_density_w_m2 = 0.0;
};

/// Inclusive uniform grid; the last sample is exactly max.
std::vector<double> linspace(double min, double max, std::size_t steps);

/// Power density at each terrestrial distance, one row per entry.
std::vector<TableRow> table_one(const rf::TransmitterConfig& tx, std::span<const double> distances_m);

/// Density on the ground below a balloon at altitude_m, swept over
/// horizontal offset [0, offset_max_m]. The maximum sits at offset 0.
SweepSeries ground_density_profile(const rf::TransmitterConfig& tx,
                                   double altitude_m,
                                   double offset_max_m,
                                   std::size_t num_steps = kDefaultSweepSteps);

/// Density at a fixed ground offset while the balloon altitude is swept.
SweepSeries altitude_density_profile(const rf::TransmitterConfig& tx,
                                     double altitude_min_m,
                                     double altitude_max_m,
                                     double ground_offset_m,
                                     std::size_t num_steps = kDefaultSweepSteps);

/// rms E-field against straight-line range.
SweepSeries efield_profile(const rf::TransmitterConfig& tx,
                           double range_min_m,
                           double range_max_m,
                           std::size_t num_steps = kDefaultSweepSteps);

/// Power density against straight-line range.
SweepSeries range_density_profile(const rf::TransmitterConfig& tx,
                                  double range_min_m,
                                  double range_max_m,
                                  std::size_t num_steps = kDefaultSweepSteps);

/// Friis received power at a fixed ground offset while altitude is swept.
SweepSeries received_power_profile(const rf::TransmitterConfig& tx,
                                   double rx_gain_db,
                                   double freq_mhz,
                                   double altitude_min_m,
                                   double altitude_max_m,
                                   double ground_offset_m,
                                   std::size_t num_steps = kDefaultSweepSteps);

ExposureZone classify_zone(double density_w_m2, const ZoneThresholds& thresholds);

} // namespace balloonlink::exposure
