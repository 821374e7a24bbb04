#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "balloonlink/commands.hpp"
#include "balloonlink/coverage.hpp"
#include "balloonlink/errors.hpp"
#include "balloonlink/exposure.hpp"
#include "balloonlink/green_model.hpp"
#include "balloonlink/rf_core.hpp"
#include "balloonlink/scenario.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
namespace bl = balloonlink;

PYBIND11_MODULE(_core, m)
{
  m.doc() = "Link budget, EM exposure and CO2 model for tethered-balloon base stations";

  py::register_exception<bl::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<bl::ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<bl::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<bl::UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<bl::IoError>(m, "IoError", PyExc_OSError);

  // rf_core
  py::class_<bl::rf::TransmitterConfig>(m, "TransmitterConfig")
    .def(py::init([](double power_w, double gain_db, double freq_mhz, double antenna_dim_m,
                     std::optional<double> gain_linear) {
           bl::rf::TransmitterConfig tx{power_w, gain_db, freq_mhz, antenna_dim_m, gain_linear};
           tx.validate();
           return tx;
         }),
         py::arg("power_w"), py::arg("gain_db") = 0.0, py::arg("freq_mhz") = 900.0,
         py::arg("antenna_dim_m") = 0.0, py::arg("gain_linear") = py::none())
    .def_readwrite("power_w", &bl::rf::TransmitterConfig::power_w)
    .def_readwrite("gain_db", &bl::rf::TransmitterConfig::gain_db)
    .def_readwrite("freq_mhz", &bl::rf::TransmitterConfig::freq_mhz)
    .def_readwrite("antenna_dim_m", &bl::rf::TransmitterConfig::antenna_dim_m)
    .def_readwrite("gain_linear_override", &bl::rf::TransmitterConfig::gain_linear_override)
    .def_property_readonly("gain_linear", &bl::rf::TransmitterConfig::gain_linear)
    .def_property_readonly("eirp_w", &bl::rf::TransmitterConfig::eirp_w);

  py::class_<bl::rf::LinkGeometry>(m, "LinkGeometry")
    .def(py::init([](double altitude_m, double ground_offset_m, double bs_h, double rx_h, double rx_gain_db) {
           bl::rf::LinkGeometry g{altitude_m, ground_offset_m, bs_h, rx_h, rx_gain_db};
           g.validate();
           return g;
         }),
         py::arg("altitude_m"), py::arg("ground_offset_m") = 0.0, py::arg("bs_antenna_height_m") = 200.0,
         py::arg("rx_antenna_height_m") = 1.5, py::arg("rx_gain_db") = 0.0)
    .def_readwrite("altitude_m", &bl::rf::LinkGeometry::altitude_m)
    .def_readwrite("ground_offset_m", &bl::rf::LinkGeometry::ground_offset_m)
    .def_readwrite("bs_antenna_height_m", &bl::rf::LinkGeometry::bs_antenna_height_m)
    .def_readwrite("rx_antenna_height_m", &bl::rf::LinkGeometry::rx_antenna_height_m)
    .def_readwrite("rx_gain_db", &bl::rf::LinkGeometry::rx_gain_db);

  py::class_<bl::rf::LinkBudgetResult>(m, "LinkBudgetResult")
    .def_readonly("path_loss_db", &bl::rf::LinkBudgetResult::path_loss_db)
    .def_readonly("power_density_w_m2", &bl::rf::LinkBudgetResult::power_density_w_m2)
    .def_readonly("e_field_v_m", &bl::rf::LinkBudgetResult::e_field_v_m)
    .def_readonly("received_power_w", &bl::rf::LinkBudgetResult::received_power_w)
    .def_readonly("range_m", &bl::rf::LinkBudgetResult::range_m)
    .def_readonly("warnings", &bl::rf::LinkBudgetResult::warnings);

  py::class_<bl::rf::HataPathLoss>(m, "HataPathLoss")
    .def_readonly("loss_db", &bl::rf::HataPathLoss::loss_db)
    .def_readonly("warnings", &bl::rf::HataPathLoss::warnings);

  m.def("db_to_linear", &bl::rf::db_to_linear, py::arg("gain_db"));
  m.def("linear_to_db", &bl::rf::linear_to_db, py::arg("ratio"));
  m.def("wavelength_m", &bl::rf::wavelength_m, py::arg("freq_mhz"));
  m.def("near_field_distance", &bl::rf::near_field_distance, py::arg("antenna_dim_m"), py::arg("freq_mhz"));
  m.def("hata_correction_small_city", &bl::rf::hata_correction_small_city, py::arg("freq_mhz"),
        py::arg("rx_antenna_height_m"));
  m.def("hata_path_loss", &bl::rf::hata_path_loss, py::arg("freq_mhz"), py::arg("bs_antenna_height_m"),
        py::arg("rx_antenna_height_m"), py::arg("distance_km"));
  m.def("slant_range", &bl::rf::slant_range, py::arg("altitude_m"), py::arg("ground_offset_m"));
  m.def("power_density", &bl::rf::power_density, py::arg("power_w"), py::arg("gain_linear"), py::arg("range_m"));
  m.def("e_field_rms", &bl::rf::e_field_rms, py::arg("power_w"), py::arg("gain_linear"), py::arg("range_m"));
  m.def("received_power", &bl::rf::received_power, py::arg("power_w"), py::arg("tx_gain_linear"),
        py::arg("rx_gain_linear"), py::arg("freq_mhz"), py::arg("range_m"));
  m.def("evaluate_link", &bl::rf::evaluate_link, py::arg("tx"), py::arg("geometry"));

  // coverage
  py::class_<bl::coverage::Cell>(m, "Cell")
    .def_readonly("radius_km", &bl::coverage::Cell::radius_km)
    .def_readonly("center_x_km", &bl::coverage::Cell::center_x_km)
    .def_readonly("center_y_km", &bl::coverage::Cell::center_y_km);
  py::class_<bl::coverage::Constellation>(m, "Constellation")
    .def_readonly("cells", &bl::coverage::Constellation::cells)
    .def_readonly("spacing_km", &bl::coverage::Constellation::spacing_km)
    .def_property_readonly("radius_km", &bl::coverage::Constellation::radius_km);

  m.def("cell_radius_from_budget", &bl::coverage::cell_radius_from_budget, py::arg("freq_mhz"),
        py::arg("bs_antenna_height_m"), py::arg("rx_antenna_height_m"), py::arg("max_path_loss_db"));
  m.def("cell_area_km2", &bl::coverage::cell_area_km2, py::arg("radius_km"));
  m.def("constellation_layout", &bl::coverage::constellation_layout, py::arg("num_balloons"),
        py::arg("radius_km"));
  m.def("inter_balloon_links", &bl::coverage::inter_balloon_links, py::arg("constellation"));
  m.def("union_area_km2", &bl::coverage::union_area_km2, py::arg("constellation"),
        py::arg("samples") = bl::coverage::kUnionAreaSamples, py::arg("seed") = bl::coverage::kUnionAreaSeed);
  m.def("replacement_count", &bl::coverage::replacement_count, py::arg("balloon_radius_km"),
        py::arg("terrestrial_radius_km"));

  // exposure
  py::enum_<bl::exposure::ExposureZone>(m, "ExposureZone")
    .value("SAFE", bl::exposure::ExposureZone::Safe)
    .value("CAUTION", bl::exposure::ExposureZone::Caution)
    .value("EXCEEDS_LIMIT", bl::exposure::ExposureZone::ExceedsLimit);

  py::class_<bl::exposure::ZoneThresholds>(m, "ZoneThresholds")
    .def(py::init([](double limit, double fraction) {
           bl::exposure::ZoneThresholds t{limit, fraction};
           t.validate();
           return t;
         }),
         py::arg("limit_w_m2"), py::arg("caution_fraction") = 0.1)
    .def_static("defaults_for", &bl::exposure::ZoneThresholds::defaults_for, py::arg("freq_mhz"))
    .def_readwrite("limit_w_m2", &bl::exposure::ZoneThresholds::limit_w_m2)
    .def_readwrite("caution_fraction", &bl::exposure::ZoneThresholds::caution_fraction);

  py::class_<bl::exposure::SweepSeries>(m, "SweepSeries")
    .def_readonly("label", &bl::exposure::SweepSeries::label)
    .def_readonly("abscissa_name", &bl::exposure::SweepSeries::abscissa_name)
    .def_readonly("unit", &bl::exposure::SweepSeries::unit)
    .def_property_readonly("abscissas", [](const bl::exposure::SweepSeries& s) {
      std::vector<double> v;
      for (const auto& p : s.points)
        v.push_back(p.abscissa);
      return v;
    })
    .def_property_readonly("values", [](const bl::exposure::SweepSeries& s) {
      std::vector<double> v;
      for (const auto& p : s.points)
        v.push_back(p.value);
      return v;
    });

  m.def("table_one", [](const bl::rf::TransmitterConfig& tx, const std::vector<double>& distances) {
    std::vector<std::pair<double, double>> rows;
    for (const auto& r : bl::exposure::table_one(tx, distances))
      rows.emplace_back(r.distance_m, r.power_density_w_m2);
    return rows;
  }, py::arg("tx"), py::arg("distances_m"));
  m.def("ground_density_profile", &bl::exposure::ground_density_profile, py::arg("tx"), py::arg("altitude_m"),
        py::arg("offset_max_m"), py::arg("num_steps") = bl::exposure::kDefaultSweepSteps);
  m.def("altitude_density_profile", &bl::exposure::altitude_density_profile, py::arg("tx"),
        py::arg("altitude_min_m"), py::arg("altitude_max_m"), py::arg("ground_offset_m") = 0.0,
        py::arg("num_steps") = bl::exposure::kDefaultSweepSteps);
  m.def("efield_profile", &bl::exposure::efield_profile, py::arg("tx"), py::arg("range_min_m"),
        py::arg("range_max_m"), py::arg("num_steps") = bl::exposure::kDefaultSweepSteps);
  m.def("range_density_profile", &bl::exposure::range_density_profile, py::arg("tx"), py::arg("range_min_m"),
        py::arg("range_max_m"), py::arg("num_steps") = bl::exposure::kDefaultSweepSteps);
  m.def("received_power_profile", &bl::exposure::received_power_profile, py::arg("tx"), py::arg("rx_gain_db"),
        py::arg("freq_mhz"), py::arg("altitude_min_m"), py::arg("altitude_max_m"),
        py::arg("ground_offset_m") = 0.0, py::arg("num_steps") = bl::exposure::kDefaultSweepSteps);
  m.def("classify_zone", &bl::exposure::classify_zone, py::arg("density_w_m2"), py::arg("thresholds"));

  // green_model
  py::enum_<bl::green::SourceKind>(m, "SourceKind")
    .value("DIESEL", bl::green::SourceKind::Diesel)
    .value("SOLAR", bl::green::SourceKind::Solar)
    .value("GRID", bl::green::SourceKind::Grid);

  py::class_<bl::green::PowerSourceProfile>(m, "PowerSourceProfile")
    .def_static("diesel", &bl::green::PowerSourceProfile::diesel,
                py::arg("liters_per_hour") = bl::green::kDefaultDieselLitersPerHour,
                py::arg("kg_per_liter") = bl::green::kDefaultDieselKgCo2PerLiter)
    .def_static("grid", &bl::green::PowerSourceProfile::grid,
                py::arg("kwh_per_hour") = bl::green::kDefaultGridKwhPerHour,
                py::arg("kg_per_kwh") = bl::green::kDefaultGridKgCo2PerKwh)
    .def_static("solar", &bl::green::PowerSourceProfile::solar)
    .def_readwrite("kind", &bl::green::PowerSourceProfile::kind)
    .def_readwrite("fuel_liters_per_hour", &bl::green::PowerSourceProfile::fuel_liters_per_hour)
    .def_readwrite("emission_factor_kg_per_liter", &bl::green::PowerSourceProfile::emission_factor_kg_per_liter)
    .def_readwrite("grid_kwh_per_hour", &bl::green::PowerSourceProfile::grid_kwh_per_hour)
    .def_readwrite("grid_emission_kg_per_kwh", &bl::green::PowerSourceProfile::grid_emission_kg_per_kwh);

  py::class_<bl::green::GreenComparison>(m, "GreenComparison")
    .def_readonly("terrestrial_annual_tons", &bl::green::GreenComparison::terrestrial_annual_tons)
    .def_readonly("balloon_annual_tons", &bl::green::GreenComparison::balloon_annual_tons)
    .def_readonly("avoided_tons", &bl::green::GreenComparison::avoided_tons)
    .def_readonly("replaced_bs_count", &bl::green::GreenComparison::replaced_bs_count);

  m.def("annual_emissions_tons", &bl::green::annual_emissions_tons, py::arg("profile"),
        py::arg("hours_per_year") = bl::green::kDefaultHoursPerYear);
  m.def("compare", &bl::green::compare, py::arg("terrestrial"), py::arg("balloon"), py::arg("balloon_radius_km"),
        py::arg("terrestrial_radius_km"), py::arg("hours_per_year") = bl::green::kDefaultHoursPerYear);

  // scenario and CSV rendering
  py::class_<bl::Scenario>(m, "Scenario")
    .def_readonly("transmitter", &bl::Scenario::transmitter)
    .def_readonly("geometry", &bl::Scenario::geometry)
    .def_readonly("thresholds", &bl::Scenario::thresholds)
    .def_readonly("terrestrial", &bl::Scenario::terrestrial)
    .def_readonly("balloon", &bl::Scenario::balloon)
    .def_readonly("hours_per_year", &bl::Scenario::hours_per_year)
    .def_readonly("distances_m", &bl::Scenario::distances_m)
    .def_readonly("output_dir", &bl::Scenario::output_dir)
    .def_readonly("warnings", &bl::Scenario::warnings);

  m.def("parse_scenario", [](const std::string& text) { return bl::parse_scenario(text); }, py::arg("json_text"));
  m.def("load_scenario", &bl::load_scenario, py::arg("path"));
  m.def("render_table1", &bl::cli::render_table1, py::arg("scenario"));
  m.def("render_exposure", [](const bl::Scenario& sc, const std::string& figure, const std::string& quantity) {
    return bl::cli::render_exposure(sc, bl::cli::figure_from_string(figure),
                                    bl::cli::range_quantity_from_string(quantity));
  }, py::arg("scenario"), py::arg("figure"), py::arg("quantity") = "density");
  m.def("render_coverage", &bl::cli::render_coverage, py::arg("scenario"),
        py::arg("max_path_loss_db") = bl::cli::kDefaultMaxPathLossDb,
        py::arg("num_balloons") = bl::cli::kDefaultNumBalloons);
  m.def("render_green", &bl::cli::render_green, py::arg("scenario"),
        py::arg("balloon_radius_km") = bl::cli::kDefaultBalloonRadiusKm,
        py::arg("terrestrial_radius_km") = bl::cli::kDefaultTerrestrialRadiusKm);
  m.def("render_zones", [](const bl::Scenario& sc, const std::vector<double>& d) {
    return bl::cli::render_zones(sc, d);
  }, py::arg("scenario"), py::arg("densities_w_m2"));
  m.def("render_linkbudget", &bl::cli::render_linkbudget, py::arg("scenario"));

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
