#pragma once

#include "balloonlink/exposure.hpp"
#include "balloonlink/green_model.hpp"
#include "balloonlink/rf_core.hpp"

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace balloonlink {

struct SweepRange
{
  double min = 0.0;
  double max = 0.0;
  std::size_t steps = exposure::kDefaultSweepSteps;
};

/// Fully-defaulted, validated simulation input.
///
/// Scenario files are JSON objects with the sections `transmitter`,
/// `geometry`, `thresholds`, `green` and `sweeps`, plus an optional
/// top-level `output_dir` string. Only `transmitter.power_w` and
/// `transmitter.freq_mhz` are required. Unknown keys are rejected.
struct Scenario
{
  rf::TransmitterConfig transmitter;
  rf::LinkGeometry geometry;
  exposure::ZoneThresholds thresholds;
  green::PowerSourceProfile terrestrial;
  green::PowerSourceProfile balloon;
  double hours_per_year = green::kDefaultHoursPerYear;

  /// Horizontal offset sweep under the balloon; min is always 0.
  SweepRange ground_offset{0.0, 25.0, exposure::kDefaultSweepSteps};
  SweepRange altitude{200.0, 400.0, exposure::kDefaultSweepSteps};
  SweepRange range{10.0, 500.0, exposure::kDefaultSweepSteps};
  std::vector<double> distances_m{10.0, 100.0, 500.0};

  std::filesystem::path output_dir{"."};

  /// Load-time remarks that every output file repeats as `# warning:` lines.
  std::vector<std::string> warnings;
};

/// Defaults applied to absent geometry and transmitter keys.
namespace scenario_defaults {
inline constexpr double kGainDb = 0.0;
inline constexpr double kAntennaDimM = 1.0;
inline constexpr double kAltitudeM = 150.0;
inline constexpr double kGroundOffsetM = 0.0;
inline constexpr double kBsAntennaHeightM = 200.0;
inline constexpr double kRxAntennaHeightM = 1.5;
inline constexpr double kRxGainDb = 0.0;
} // namespace scenario_defaults

/// Parses and validates scenario JSON. Throws ParseError (with line number)
/// for malformed JSON and ValidationError listing every violated field.
Scenario parse_scenario(std::string_view json_text);

/// Reads a scenario file. Throws IoError when the file cannot be read.
Scenario load_scenario(const std::filesystem::path& path);

} // namespace balloonlink
