#pragma once

// Closed-form link-budget physics for an elevated transmitter: Hata path
// loss (small-city form), near-field boundary, slant range, free-space power
// density, rms E-field and received power. Everything else in the library
// calls into these functions for physics.

#include <optional>
#include <string>
#include <vector>

namespace balloonlink::rf {

inline constexpr double kSpeedOfLight = 299'792'458.0; // m/s, exact
inline constexpr double kPi = 3.14159265358979323846;

/// Free-space wave impedance approximated as 120*pi ohms, the value that
/// makes E = sqrt(30 P G) / R consistent with P G / (4 pi R^2).
inline constexpr double kFreeSpaceImpedance = 120.0 * kPi;

// Classical Okumura-Hata validity ranges.
inline constexpr double kHataMinFreqMhz = 150.0;
inline constexpr double kHataMaxFreqMhz = 1500.0;
inline constexpr double kHataMinBsHeightM = 30.0;
inline constexpr double kHataMaxBsHeightM = 200.0;
inline constexpr double kHataMinDistanceKm = 1.0;
inline constexpr double kHataMaxDistanceKm = 20.0;

/// Radiating side of the link.
struct TransmitterConfig
{
  double power_w = 0.0;
  double gain_db = 0.0;
  double freq_mhz = 0.0;
  double antenna_dim_m = 0.0;
  /// When set, used verbatim instead of converting gain_db. Lets callers
  /// reproduce published tables that were computed with a rounded linear gain.
  std::optional<double> gain_linear_override;

  double gain_linear() const;
  double eirp_w() const { return power_w * gain_linear(); }

  /// Throws DomainError naming the first violated field.
  void validate() const;
};

/// Placement of the airborne transmitter relative to a ground receiver.
struct LinkGeometry
{
  double altitude_m = 0.0;
  double ground_offset_m = 0.0;
  double bs_antenna_height_m = 0.0;
  double rx_antenna_height_m = 0.0;
  double rx_gain_db = 0.0;

  void validate() const;
};

struct LinkBudgetResult
{
  double path_loss_db = 0.0;
  double power_density_w_m2 = 0.0;
  double e_field_v_m = 0.0;
  double received_power_w = 0.0;
  double range_m = 0.0;
  /// Non-fatal notes, e.g. Hata applied outside its fitted parameter range.
  std::vector<std::string> warnings;
};

/// Hata path loss with any validity-range warnings attached.
struct HataPathLoss
{
  double loss_db = 0.0;
  std::vector<std::string> warnings;
};

double db_to_linear(double gain_db);
double linear_to_db(double ratio);

double wavelength_m(double freq_mhz);

/// Far-field boundary 2 L^2 / lambda.
double near_field_distance(double antenna_dim_m, double freq_mhz);

/// Receiver-height correction a(h_re) for a small or medium city, in dB.
double hata_correction_small_city(double freq_mhz, double rx_antenna_height_m);

/// Slope of the Hata loss per decade of distance, 44.9 - 6.55 log10(h_te).
double hata_distance_slope(double bs_antenna_height_m);

/// Hata loss in dB. freq in MHz, heights in m, distance in km. Inputs outside
/// the classical validity ranges produce warnings, not errors.
HataPathLoss hata_path_loss(double freq_mhz,
                            double bs_antenna_height_m,
                            double rx_antenna_height_m,
                            double distance_km);

double slant_range(double altitude_m, double ground_offset_m);

/// P G / (4 pi R^2), W/m^2.
double power_density(double power_w, double gain_linear, double range_m);

/// sqrt(30 P G) / R, V/m.
double e_field_rms(double power_w, double gain_linear, double range_m);

/// Friis: P Gt Gr lambda^2 / (4 pi R)^2, W.
double received_power(double power_w,
                      double tx_gain_linear,
                      double rx_gain_linear,
                      double freq_mhz,
                      double range_m);

/// Every quantity above at one transmitter/receiver placement. The Hata
/// distance is the slant range expressed in km.
LinkBudgetResult evaluate_link(const TransmitterConfig& tx, const LinkGeometry& geometry);

} // namespace balloonlink::rf
