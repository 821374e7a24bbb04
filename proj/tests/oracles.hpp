#pragma once

// Independent reference evaluations used only by tests. Written from the
// textbook formulas with a different arithmetic path than the library
// (natural logs, metre/MHz shortcuts, effective-aperture Friis) so that a
// slip in either side shows up as a disagreement.

#include <cmath>
#include <cstdint>
#include <random>

namespace oracle {

inline constexpr double kPi = 3.14159265358979323846;

inline double log10_via_ln(double x) { return std::log(x) / std::log(10.0); }

// c / f with c expressed as 299.792458 m*MHz.
inline double wavelength_m(double freq_mhz) { return 299.792458 / freq_mhz; }

inline double hata_correction(double f_mhz, double h_re)
{
  const double lf = log10_via_ln(f_mhz);
  const double slope_in_h = 1.1 * lf - 0.7;
  const double offset = 1.56 * lf - 0.8;
  return slope_in_h * h_re - offset;
}

// Term-by-term Hata small-city loss.
inline double hata_loss(double f_mhz, double h_te, double h_re, double d_km)
{
  const double t_const = 69.55;
  const double t_freq = 26.16 * log10_via_ln(f_mhz);
  const double t_height = -13.82 * log10_via_ln(h_te);
  const double t_corr = -hata_correction(f_mhz, h_re);
  const double t_dist = (44.9 - 6.55 * log10_via_ln(h_te)) * log10_via_ln(d_km);
  return t_const + t_freq + t_height + t_corr + t_dist;
}

// Friis via effective aperture A_e = G_r lambda^2 / (4 pi).
inline double received_power_aperture(double p, double gt, double gr, double f_mhz, double r)
{
  const double eirp_density = p * gt / (4.0 * kPi * r * r);
  const double lambda = wavelength_m(f_mhz);
  return eirp_density * gr * lambda * lambda / (4.0 * kPi);
}

inline double rel_err(double got, double want)
{
  return want == 0.0 ? std::abs(got) : std::abs(got - want) / std::abs(want);
}

// Seeded uniform draws for hand-rolled property tests.
class Draw
{
public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  // Log-uniform: spreads draws evenly across decades.
  double log_uniform(double lo, double hi)
  {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

private:
  double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  std::mt19937_64 rng_;
};

} // namespace oracle
