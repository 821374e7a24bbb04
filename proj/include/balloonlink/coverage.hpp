#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace balloonlink::coverage {

struct Cell
{
  double radius_km = 0.0;
  double center_x_km = 0.0;
  double center_y_km = 0.0;
};

/// Balloon cells on a hexagonal lattice. Adjacent centers are spacing_km
/// apart, which equals sqrt(3) times the shared cell radius.
struct Constellation
{
  std::vector<Cell> cells;
  double spacing_km = 0.0;

  double radius_km() const { return cells.empty() ? 0.0 : cells.front().radius_km; }
};

inline constexpr std::size_t kUnionAreaSamples = 100'000;
inline constexpr std::uint64_t kUnionAreaSeed = 42;

/// Inverts the Hata model: the distance D (km) at which the small-city loss
/// equals max_path_loss_db. Throws DomainError when the distance slope is not
/// positive (h_te too tall for the loss to grow with distance).
double cell_radius_from_budget(double freq_mhz,
                               double bs_antenna_height_m,
                               double rx_antenna_height_m,
                               double max_path_loss_db);

double cell_area_km2(double radius_km);

/// num_balloons centers filled ring by ring around the origin. Within a ring
/// sites run counterclockwise starting on the +x axis.
Constellation constellation_layout(std::size_t num_balloons, double radius_km);

/// Index pairs (i < j) of lattice neighbours, i.e. balloons joined by an
/// inter-balloon link.
std::vector<std::pair<std::size_t, std::size_t>> inter_balloon_links(const Constellation& c);

/// Area of the union of all cell disks, estimated by uniform sampling over
/// the bounding box with a fixed-seed generator.
double union_area_km2(const Constellation& c,
                      std::size_t samples = kUnionAreaSamples,
                      std::uint64_t seed = kUnionAreaSeed);

/// Terrestrial cells needed to cover one balloon cell: the area ratio
/// rounded up.
std::uint64_t replacement_count(double balloon_radius_km, double terrestrial_radius_km);

} // namespace balloonlink::coverage
