#include "balloonlink/exposure.hpp"

#include "balloonlink/errors.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace balloonlink::exposure {

namespace {

void require_increasing_range(double min, double max, const char* what)
{
  if (!std::isfinite(min) || !std::isfinite(max) || !(min > 0.0) || !(min < max))
    throw DomainError(std::string(what) + " range must satisfy 0 < min < max");
}

template <typename Fn>
SweepSeries sweep(std::string label,
                  std::string abscissa_name,
                  std::string unit,
                  double min,
                  double max,
                  std::size_t steps,
                  Fn&& value_at)
{
  SweepSeries s{std::move(label), std::move(abscissa_name), std::move(unit), {}};
  const auto grid = linspace(min, max, steps);
  s.points.reserve(grid.size());
  for (double x : grid)
    s.points.push_back({x, value_at(x)});
  return s;
}

} // namespace

std::string_view to_string(ExposureZone zone)
{
  switch (zone) {
  case ExposureZone::Safe:
    return "SAFE";
  case ExposureZone::Caution:
    return "CAUTION";
  case ExposureZone::ExceedsLimit:
    return "EXCEEDS_LIMIT";
  }
  return "UNKNOWN";
}

ZoneThresholds ZoneThresholds::defaults_for(double freq_mhz)
{
  if (!std::isfinite(freq_mhz) || !(freq_mhz > 0.0))
    throw DomainError("freq_mhz must be > 0");
  double limit = freq_mhz / 200.0;
  if (freq_mhz < 400.0)
    limit = 2.0;
  else if (freq_mhz > 2000.0)
    limit = 10.0;
  return {limit, 0.1};
}

void ZoneThresholds::validate() const
{
  if (!std::isfinite(limit_w_m2) || !(limit_w_m2 > 0.0))
    throw DomainError("limit_w_m2 must be > 0");
  if (!(caution_fraction > 0.0 && caution_fraction < 1.0))
    throw DomainError("caution_fraction must lie in (0, 1)");
}

std::vector<double> linspace(double min, double max, std::size_t steps)
{
  if (steps < 2)
    throw DomainError("num_steps must be >= 2");
  std::vector<double> out(steps);
  const double span = max - min;
  for (std::size_t i = 0; i + 1 < steps; ++i)
    out[i] = min + span * (static_cast<double>(i) / static_cast<double>(steps - 1));
  out.back() = max;
  return out;
}

std::vector<TableRow> table_one(const rf::TransmitterConfig& tx, std::span<const double> distances_m)
{
  if (distances_m.empty())
    throw DomainError("distance list is empty");
  const double gain = tx.gain_linear();
  std::vector<TableRow> rows;
  rows.reserve(distances_m.size());
  for (double r : distances_m)
    rows.push_back({r, rf::power_density(tx.power_w, gain, r)});
  return rows;
}

SweepSeries ground_density_profile(const rf::TransmitterConfig& tx,
                                   double altitude_m,
                                   double offset_max_m,
                                   std::size_t num_steps)
{
  if (!std::isfinite(altitude_m) || !(altitude_m > 0.0))
    throw DomainError("altitude_m must be > 0: offset 0 would put the receiver at the antenna");
  if (!std::isfinite(offset_max_m) || offset_max_m < 0.0)
    throw DomainError("offset_max_m must be >= 0");
  if (num_steps < 2)
    throw DomainError("num_steps must be >= 2");

  const double gain = tx.gain_linear();
  auto density = [&](double d) {
    return rf::power_density(tx.power_w, gain, rf::slant_range(altitude_m, d));
  };
  char label[64];
  std::snprintf(label, sizeof label, "power density at altitude %g m", altitude_m);
  SweepSeries s{label, "ground_offset_m", "W/m^2", {}};
  // A zero-width sweep degenerates to the single point under the balloon.
  if (offset_max_m == 0.0) {
    s.points.push_back({0.0, density(0.0)});
    return s;
  }
  for (double d : linspace(0.0, offset_max_m, num_steps))
    s.points.push_back({d, density(d)});
  return s;
}

SweepSeries altitude_density_profile(const rf::TransmitterConfig& tx,
                                     double altitude_min_m,
                                     double altitude_max_m,
                                     double ground_offset_m,
                                     std::size_t num_steps)
{
  require_increasing_range(altitude_min_m, altitude_max_m, "altitude");
  const double gain = tx.gain_linear();
  return sweep("power density vs balloon altitude", "altitude_m", "W/m^2", altitude_min_m,
               altitude_max_m, num_steps, [&](double a) {
                 return rf::power_density(tx.power_w, gain, rf::slant_range(a, ground_offset_m));
               });
}

SweepSeries efield_profile(const rf::TransmitterConfig& tx,
                           double range_min_m,
                           double range_max_m,
                           std::size_t num_steps)
{
  require_increasing_range(range_min_m, range_max_m, "range");
  const double gain = tx.gain_linear();
  return sweep("rms E-field vs range", "range_m", "V/m", range_min_m, range_max_m, num_steps,
               [&](double r) { return rf::e_field_rms(tx.power_w, gain, r); });
}

SweepSeries range_density_profile(const rf::TransmitterConfig& tx,
                                  double range_min_m,
                                  double range_max_m,
                                  std::size_t num_steps)
{
  require_increasing_range(range_min_m, range_max_m, "range");
  const double gain = tx.gain_linear();
  return sweep("power density vs range", "range_m", "W/m^2", range_min_m, range_max_m, num_steps,
               [&](double r) { return rf::power_density(tx.power_w, gain, r); });
}

SweepSeries received_power_profile(const rf::TransmitterConfig& tx,
                                   double rx_gain_db,
                                   double freq_mhz,
                                   double altitude_min_m,
                                   double altitude_max_m,
                                   double ground_offset_m,
                                   std::size_t num_steps)
{
  require_increasing_range(altitude_min_m, altitude_max_m, "altitude");
  const double tx_gain = tx.gain_linear();
  const double rx_gain = rf::db_to_linear(rx_gain_db);
  return sweep("received power vs balloon altitude", "altitude_m", "W", altitude_min_m,
               altitude_max_m, num_steps, [&](double a) {
                 return rf::received_power(tx.power_w, tx_gain, rx_gain, freq_mhz,
                                           rf::slant_range(a, ground_offset_m));
               });
}

ExposureZone classify_zone(double density_w_m2, const ZoneThresholds& thresholds)
{
  if (!std::isfinite(density_w_m2) || density_w_m2 < 0.0)
    throw DomainError("density must be a finite value >= 0");
  thresholds.validate();
  if (density_w_m2 >= thresholds.limit_w_m2)
    return ExposureZone::ExceedsLimit;
  if (density_w_m2 >= thresholds.caution_fraction * thresholds.limit_w_m2)
    return ExposureZone::Caution;
  return ExposureZone::Safe;
}

} // namespace balloonlink::exposure
