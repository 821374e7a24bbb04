#include "balloonlink/coverage.hpp"

#include "balloonlink/errors.hpp"
#include "balloonlink/rf_core.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <string>

namespace balloonlink::coverage {

namespace {

const double kSqrt3 = std::sqrt(3.0);

// Axial lattice directions at 0, 60, ..., 300 degrees with basis
// a1 = (1, 0), a2 = (1/2, sqrt(3)/2).
constexpr std::array<std::array<int, 2>, 6> kDirections{{
  {1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};

void require_positive(double v, const char* name)
{
  if (!std::isfinite(v) || !(v > 0.0))
    throw DomainError(std::string(name) + " must be a finite value > 0");
}

} // namespace

double cell_radius_from_budget(double freq_mhz,
                               double bs_antenna_height_m,
                               double rx_antenna_height_m,
                               double max_path_loss_db)
{
  if (!std::isfinite(max_path_loss_db))
    throw DomainError("max_path_loss_db must be finite");
  const double slope = rf::hata_distance_slope(bs_antenna_height_m);
  if (!(slope > 0.0))
    throw DomainError("Hata distance slope 44.9 - 6.55 log10(h_te) is not positive; cannot invert");
  // Loss at D = 1 km carries every term except the distance one.
  const double loss_at_1km =
    rf::hata_path_loss(freq_mhz, bs_antenna_height_m, rx_antenna_height_m, 1.0).loss_db;
  return std::pow(10.0, (max_path_loss_db - loss_at_1km) / slope);
}

double cell_area_km2(double radius_km)
{
  require_positive(radius_km, "radius_km");
  return rf::kPi * radius_km * radius_km;
}

Constellation constellation_layout(std::size_t num_balloons, double radius_km)
{
  if (num_balloons == 0)
    throw DomainError("num_balloons must be >= 1");
  require_positive(radius_km, "radius_km");

  Constellation out;
  out.spacing_km = kSqrt3 * radius_km;
  out.cells.reserve(num_balloons);

  auto place = [&](int q, int r) {
    const double x = out.spacing_km * (q + 0.5 * r);
    const double y = out.spacing_km * (0.5 * kSqrt3 * r);
    out.cells.push_back({radius_km, x == 0.0 ? 0.0 : x, y == 0.0 ? 0.0 : y});
  };

  place(0, 0);
  for (int ring = 1; out.cells.size() < num_balloons; ++ring) {
    for (std::size_t side = 0; side < 6 && out.cells.size() < num_balloons; ++side) {
      const auto& from = kDirections[side];
      const auto& to = kDirections[(side + 1) % 6];
      for (int step = 0; step < ring && out.cells.size() < num_balloons; ++step) {
        place(ring * from[0] + step * (to[0] - from[0]),
              ring * from[1] + step * (to[1] - from[1]));
      }
    }
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> inter_balloon_links(const Constellation& c)
{
  std::vector<std::pair<std::size_t, std::size_t>> links;
  const double tol = 1e-9 * std::max(1.0, c.spacing_km);
  for (std::size_t i = 0; i < c.cells.size(); ++i) {
    for (std::size_t j = i + 1; j < c.cells.size(); ++j) {
      const double d = std::hypot(c.cells[i].center_x_km - c.cells[j].center_x_km,
                                  c.cells[i].center_y_km - c.cells[j].center_y_km);
      if (std::abs(d - c.spacing_km) <= tol)
        links.emplace_back(i, j);
    }
  }
  return links;
}

double union_area_km2(const Constellation& c, std::size_t samples, std::uint64_t seed)
{
  if (c.cells.empty())
    throw DomainError("constellation has no cells");
  if (samples == 0)
    throw DomainError("samples must be >= 1");

  double x_min = c.cells.front().center_x_km, x_max = x_min;
  double y_min = c.cells.front().center_y_km, y_max = y_min;
  for (const auto& cell : c.cells) {
    x_min = std::min(x_min, cell.center_x_km - cell.radius_km);
    x_max = std::max(x_max, cell.center_x_km + cell.radius_km);
    y_min = std::min(y_min, cell.center_y_km - cell.radius_km);
    y_max = std::max(y_max, cell.center_y_km + cell.radius_km);
  }

  // Raw 53-bit conversion rather than std::uniform_real_distribution, whose
  // output is not pinned by the standard across library implementations.
  std::mt19937_64 rng(seed);
  auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  std::size_t hits = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double x = x_min + (x_max - x_min) * unit();
    const double y = y_min + (y_max - y_min) * unit();
    for (const auto& cell : c.cells) {
      const double dx = x - cell.center_x_km;
      const double dy = y - cell.center_y_km;
      if (dx * dx + dy * dy <= cell.radius_km * cell.radius_km) {
        ++hits;
        break;
      }
    }
  }
  return (x_max - x_min) * (y_max - y_min) * static_cast<double>(hits) /
         static_cast<double>(samples);
}

std::uint64_t replacement_count(double balloon_radius_km, double terrestrial_radius_km)
{
  require_positive(balloon_radius_km, "balloon_radius_km");
  require_positive(terrestrial_radius_km, "terrestrial_radius_km");
  const double ratio = balloon_radius_km / terrestrial_radius_km;
  const double area_ratio = ratio * ratio;
  // Shave rounding noise so exact integer ratios (e.g. 100) do not round up.
  return static_cast<std::uint64_t>(std::ceil(area_ratio * (1.0 - 1e-12)));
}

} // namespace balloonlink::coverage
