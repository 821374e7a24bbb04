#pragma once

// CSV rendering for each CLI subcommand. Rendering is separate from file
// output so the exact bytes can be tested without touching the filesystem.
//
// Formatting rules shared by every file: header row first, `#` comment lines
// directly after it, floating-point values in lowercase scientific notation
// with 6 significant digits, '.' decimal separator, LF line endings.

#include "balloonlink/scenario.hpp"

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace balloonlink::cli {

inline constexpr double kDefaultMaxPathLossDb = 144.846;
inline constexpr std::size_t kDefaultNumBalloons = 7;
inline constexpr double kDefaultBalloonRadiusKm = 10.0;
inline constexpr double kDefaultTerrestrialRadiusKm = 1.0;

// Fixed balloon altitudes of the two ground-profile figures.
inline constexpr double kFig4AltitudeM = 150.0;
inline constexpr double kFig5AltitudeM = 200.0;

enum class Figure
{
  Fig4,
  Fig5,
  Fig6,
  Fig7,
  Fig8,
};

/// What the range sweep of fig7 reports.
enum class RangeQuantity
{
  PowerDensity,
  EField,
};

Figure figure_from_string(std::string_view id);
std::string_view to_string(Figure figure);
RangeQuantity range_quantity_from_string(std::string_view name);

std::string format_number(double value);

/// Parses a comma-separated list of numbers. Empty input gives an empty list.
std::vector<double> parse_number_list(std::string_view text);

std::string render_table1(const Scenario& sc);
std::string render_exposure(const Scenario& sc,
                            Figure figure,
                            RangeQuantity fig7_quantity = RangeQuantity::PowerDensity);
std::string render_coverage(const Scenario& sc, double max_path_loss_db, std::size_t num_balloons);
std::string render_green(const Scenario& sc, double balloon_radius_km, double terrestrial_radius_km);
/// Throws ValidationError if any density is negative or not finite.
std::string render_zones(const Scenario& sc, std::span<const double> densities_w_m2);
std::string render_linkbudget(const Scenario& sc);

/// One-line summary of every assumed green-model parameter.
std::string green_assumptions(const Scenario& sc, double balloon_radius_km, double terrestrial_radius_km);

/// Writes content to dir/filename, creating dir if needed. Throws IoError.
std::filesystem::path write_csv(const std::filesystem::path& dir,
                                std::string_view filename,
                                std::string_view content);

} // namespace balloonlink::cli
