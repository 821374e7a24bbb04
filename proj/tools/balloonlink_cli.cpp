// balloonlink: link budget, exposure and CO2 tables for tethered-balloon
// base stations. One subcommand per invocation; CSV goes to --out (or the
// scenario's output_dir), linkbudget prints to stdout.
//
// Exit codes: 0 success, 1 validation or usage error, 2 I/O error.

#include "balloonlink/commands.hpp"
#include "balloonlink/errors.hpp"
#include "balloonlink/green_model.hpp"
#include "balloonlink/scenario.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

namespace {

namespace bl = balloonlink;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;

std::string defaults_footer()
{
  char buf[1024];
  std::snprintf(buf, sizeof buf,
                "Scenario defaults (override in the scenario JSON):\n"
                "  transmitter: gain_db=%g antenna_dim_m=%g (power_w and freq_mhz are required)\n"
                "  geometry: altitude_m=%g ground_offset_m=%g bs_antenna_height_m=%g "
                "rx_antenna_height_m=%g rx_gain_db=%g\n"
                "  thresholds: limit_w_m2=f/200 for 400-2000 MHz (2 below, 10 above), caution_fraction=0.1\n"
                "  sweeps: ground offset 0-25 m, altitude 200-400 m, range 10-500 m, 101 steps; "
                "distances_m=[10,100,500]\n"
                "Assumed green-model parameters (not measured values):\n"
                "  terrestrial DIESEL %g L/h at %g kg CO2/L; GRID %g kWh/h at %g kg CO2/kWh;\n"
                "  balloon SOLAR (0 t CO2); hours_per_year=%g",
                bl::scenario_defaults::kGainDb, bl::scenario_defaults::kAntennaDimM,
                bl::scenario_defaults::kAltitudeM, bl::scenario_defaults::kGroundOffsetM,
                bl::scenario_defaults::kBsAntennaHeightM, bl::scenario_defaults::kRxAntennaHeightM,
                bl::scenario_defaults::kRxGainDb, bl::green::kDefaultDieselLitersPerHour,
                bl::green::kDefaultDieselKgCo2PerLiter, bl::green::kDefaultGridKwhPerHour,
                bl::green::kDefaultGridKgCo2PerKwh, bl::green::kDefaultHoursPerYear);
  return buf;
}

struct CommonOptions
{
  std::string scenario;
  std::optional<std::string> out;
};

void add_common(CLI::App* sub, CommonOptions& opts)
{
  sub->add_option("--scenario", opts.scenario, "Scenario JSON file")->required();
  sub->add_option("--out", opts.out, "Output directory (default: scenario output_dir)");
  sub->footer(defaults_footer());
}

std::filesystem::path out_dir(const CommonOptions& opts, const bl::Scenario& sc)
{
  return opts.out ? std::filesystem::path(*opts.out) : sc.output_dir;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Link budget, EM exposure and CO2 calculator for tethered-balloon base stations"};
  app.require_subcommand(1);
  app.footer(defaults_footer());

  CommonOptions common;
  std::function<void()> action;

  auto* table1 = app.add_subcommand("table1", "Power density at each terrestrial distance (table1.csv)");
  add_common(table1, common);
  table1->callback([&] {
    action = [&] {
      const auto sc = bl::load_scenario(common.scenario);
      bl::cli::write_csv(out_dir(common, sc), "table1.csv", bl::cli::render_table1(sc));
    };
  });

  std::string figure;
  std::string quantity = "density";
  auto* exposure = app.add_subcommand("exposure", "Exposure sweep for one figure (<figure>.csv)");
  add_common(exposure, common);
  exposure->add_option("--figure", figure, "fig4|fig5|fig6|fig7|fig8")->required();
  exposure->add_option("--quantity", quantity, "fig7 only: density|efield")->capture_default_str();
  exposure->callback([&] {
    action = [&] {
      const auto fig = bl::cli::figure_from_string(figure);
      const auto q = bl::cli::range_quantity_from_string(quantity);
      const auto sc = bl::load_scenario(common.scenario);
      bl::cli::write_csv(out_dir(common, sc), std::string(bl::cli::to_string(fig)) + ".csv",
                         bl::cli::render_exposure(sc, fig, q));
    };
  });

  double max_path_loss_db = bl::cli::kDefaultMaxPathLossDb;
  std::size_t balloons = bl::cli::kDefaultNumBalloons;
  auto* cov = app.add_subcommand("coverage", "Cell radius and constellation layout (coverage.csv)");
  add_common(cov, common);
  cov->add_option("--max-path-loss-db", max_path_loss_db, "Hata loss budget, dB")->capture_default_str();
  cov->add_option("--balloons", balloons, "Number of balloons")->capture_default_str();
  cov->callback([&] {
    action = [&] {
      const auto sc = bl::load_scenario(common.scenario);
      bl::cli::write_csv(out_dir(common, sc), "coverage.csv",
                         bl::cli::render_coverage(sc, max_path_loss_db, balloons));
    };
  });

  double balloon_radius_km = bl::cli::kDefaultBalloonRadiusKm;
  double terrestrial_radius_km = bl::cli::kDefaultTerrestrialRadiusKm;
  auto* green = app.add_subcommand("green", "CO2 comparison against a terrestrial fleet (green.csv)");
  add_common(green, common);
  green->add_option("--balloon-radius-km", balloon_radius_km, "Balloon cell radius")->capture_default_str();
  green->add_option("--terrestrial-radius-km", terrestrial_radius_km, "Terrestrial cell radius")
    ->capture_default_str();
  green->callback([&] {
    action = [&] {
      const auto sc = bl::load_scenario(common.scenario);
      bl::cli::write_csv(out_dir(common, sc), "green.csv",
                         bl::cli::render_green(sc, balloon_radius_km, terrestrial_radius_km));
    };
  });

  std::string densities;
  auto* zones = app.add_subcommand("zones", "Classify power densities into exposure zones (zones.csv)");
  add_common(zones, common);
  zones->add_option("--densities", densities, "Comma-separated densities, W/m^2");
  zones->callback([&] {
    action = [&] {
      const auto values = bl::cli::parse_number_list(densities);
      const auto sc = bl::load_scenario(common.scenario);
      bl::cli::write_csv(out_dir(common, sc), "zones.csv", bl::cli::render_zones(sc, values));
    };
  });

  auto* link = app.add_subcommand("linkbudget", "Single-point link budget as key,value CSV on stdout");
  add_common(link, common);
  link->callback([&] {
    action = [&] { std::cout << bl::cli::render_linkbudget(bl::load_scenario(common.scenario)); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    action();
  } catch (const bl::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}
