#include "balloonlink/rf_core.hpp"

#include "balloonlink/errors.hpp"

#include <cmath>
#include <cstdio>

namespace balloonlink::rf {

namespace {

std::string fmt_g(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

void require_finite(double v, const char* name)
{
  if (!std::isfinite(v))
    throw DomainError(std::string(name) + " must be finite");
}

void require_positive(double v, const char* name)
{
  require_finite(v, name);
  if (!(v > 0.0))
    throw DomainError(std::string(name) + " must be > 0, got " + fmt_g(v));
}

void require_non_negative(double v, const char* name)
{
  require_finite(v, name);
  if (v < 0.0)
    throw DomainError(std::string(name) + " must be >= 0, got " + fmt_g(v));
}

void warn_if_outside(std::vector<std::string>& warnings,
                     const char* what,
                     double value,
                     double lo,
                     double hi,
                     const char* unit)
{
  if (value < lo || value > hi)
    warnings.push_back(std::string("Hata ") + what + " " + fmt_g(value) + " " + unit +
                       " outside validity range [" + fmt_g(lo) + ", " + fmt_g(hi) + "] " + unit);
}

} // namespace

double TransmitterConfig::gain_linear() const
{
  if (gain_linear_override)
    return *gain_linear_override;
  return db_to_linear(gain_db);
}

void TransmitterConfig::validate() const
{
  require_positive(power_w, "power_w");
  require_finite(gain_db, "gain_db");
  require_positive(freq_mhz, "freq_mhz");
  require_non_negative(antenna_dim_m, "antenna_dim_m");
  if (gain_linear_override)
    require_positive(*gain_linear_override, "gain_linear");
}

void LinkGeometry::validate() const
{
  require_non_negative(altitude_m, "altitude_m");
  require_non_negative(ground_offset_m, "ground_offset_m");
  require_positive(bs_antenna_height_m, "bs_antenna_height_m");
  require_positive(rx_antenna_height_m, "rx_antenna_height_m");
  require_finite(rx_gain_db, "rx_gain_db");
}

double db_to_linear(double gain_db)
{
  require_finite(gain_db, "gain_db");
  return std::pow(10.0, gain_db / 10.0);
}

double linear_to_db(double ratio)
{
  require_positive(ratio, "ratio");
  return 10.0 * std::log10(ratio);
}

double wavelength_m(double freq_mhz)
{
  require_positive(freq_mhz, "freq_mhz");
  return kSpeedOfLight / (freq_mhz * 1e6);
}

double near_field_distance(double antenna_dim_m, double freq_mhz)
{
  require_non_negative(antenna_dim_m, "antenna_dim_m");
  return 2.0 * antenna_dim_m * antenna_dim_m / wavelength_m(freq_mhz);
}

double hata_correction_small_city(double freq_mhz, double rx_antenna_height_m)
{
  require_positive(freq_mhz, "freq_mhz");
  require_positive(rx_antenna_height_m, "rx_antenna_height_m");
  const double log_f = std::log10(freq_mhz);
  return (1.1 * log_f - 0.7) * rx_antenna_height_m - (1.56 * log_f - 0.8);
}

double hata_distance_slope(double bs_antenna_height_m)
{
  require_positive(bs_antenna_height_m, "bs_antenna_height_m");
  return 44.9 - 6.55 * std::log10(bs_antenna_height_m);
}

HataPathLoss hata_path_loss(double freq_mhz,
                            double bs_antenna_height_m,
                            double rx_antenna_height_m,
                            double distance_km)
{
  require_positive(freq_mhz, "freq_mhz");
  require_positive(bs_antenna_height_m, "bs_antenna_height_m");
  require_positive(rx_antenna_height_m, "rx_antenna_height_m");
  require_positive(distance_km, "distance_km");

  HataPathLoss out;
  out.loss_db = 69.55 + 26.16 * std::log10(freq_mhz) -
                13.82 * std::log10(bs_antenna_height_m) -
                hata_correction_small_city(freq_mhz, rx_antenna_height_m) +
                hata_distance_slope(bs_antenna_height_m) * std::log10(distance_km);

  warn_if_outside(out.warnings, "carrier frequency", freq_mhz, kHataMinFreqMhz, kHataMaxFreqMhz, "MHz");
  warn_if_outside(out.warnings, "BS antenna height", bs_antenna_height_m, kHataMinBsHeightM,
                  kHataMaxBsHeightM, "m");
  warn_if_outside(out.warnings, "distance", distance_km, kHataMinDistanceKm, kHataMaxDistanceKm, "km");
  return out;
}

double slant_range(double altitude_m, double ground_offset_m)
{
  require_non_negative(altitude_m, "altitude_m");
  require_non_negative(ground_offset_m, "ground_offset_m");
  if (altitude_m == 0.0 && ground_offset_m == 0.0)
    throw DomainError("slant range is zero: altitude_m and ground_offset_m are both 0");
  return std::hypot(altitude_m, ground_offset_m);
}

double power_density(double power_w, double gain_linear, double range_m)
{
  require_non_negative(power_w, "power_w");
  require_positive(gain_linear, "gain_linear");
  require_positive(range_m, "range_m");
  return power_w * gain_linear / (4.0 * kPi * range_m * range_m);
}

double e_field_rms(double power_w, double gain_linear, double range_m)
{
  require_non_negative(power_w, "power_w");
  require_positive(gain_linear, "gain_linear");
  require_positive(range_m, "range_m");
  return std::sqrt(30.0 * power_w * gain_linear) / range_m;
}

double received_power(double power_w,
                      double tx_gain_linear,
                      double rx_gain_linear,
                      double freq_mhz,
                      double range_m)
{
  require_non_negative(power_w, "power_w");
  require_positive(tx_gain_linear, "tx_gain_linear");
  require_positive(rx_gain_linear, "rx_gain_linear");
  require_positive(range_m, "range_m");
  const double lambda = wavelength_m(freq_mhz);
  const double spreading = 4.0 * kPi * range_m;
  return power_w * tx_gain_linear * rx_gain_linear * lambda * lambda / (spreading * spreading);
}

LinkBudgetResult evaluate_link(const TransmitterConfig& tx, const LinkGeometry& geometry)
{
  tx.validate();
  geometry.validate();

  LinkBudgetResult r;
  r.range_m = slant_range(geometry.altitude_m, geometry.ground_offset_m);
  const double gain = tx.gain_linear();

  auto hata = hata_path_loss(tx.freq_mhz, geometry.bs_antenna_height_m,
                             geometry.rx_antenna_height_m, r.range_m / 1000.0);
  r.path_loss_db = hata.loss_db;
  r.warnings = std::move(hata.warnings);

  r.power_density_w_m2 = power_density(tx.power_w, gain, r.range_m);
  r.e_field_v_m = e_field_rms(tx.power_w, gain, r.range_m);
  r.received_power_w = received_power(tx.power_w, gain, db_to_linear(geometry.rx_gain_db),
                                      tx.freq_mhz, r.range_m);
  return r;
}

} // namespace balloonlink::rf
