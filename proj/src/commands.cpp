#include "balloonlink/commands.hpp"

#include "balloonlink/coverage.hpp"
#include "balloonlink/errors.hpp"
#include "balloonlink/exposure.hpp"
#include "balloonlink/green_model.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <system_error>

namespace balloonlink::cli {

namespace {

std::string fmt_g(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

class CsvWriter
{
public:
  explicit CsvWriter(std::string_view header) { line(header); }

  void line(std::string_view text)
  {
    out_.append(text);
    out_.push_back('\n');
  }

  void comment(std::string_view text) { line("# " + std::string(text)); }
  void warning(std::string_view text) { line("# warning: " + std::string(text)); }

  void warnings(const std::vector<std::string>& ws)
  {
    for (const auto& w : ws)
      warning(w);
  }

  void row(std::string_view key, double value) { line(std::string(key) + "," + format_number(value)); }

  std::string str() && { return std::move(out_); }

private:
  std::string out_;
};

std::string render_series(const Scenario& sc, Figure figure, const exposure::SweepSeries& s)
{
  CsvWriter w("abscissa,value,unit");
  w.warnings(sc.warnings);
  w.comment("figure: " + std::string(to_string(figure)));
  w.comment("abscissa: " + s.abscissa_name);
  w.comment("series: " + s.label);
  for (const auto& p : s.points)
    w.line(format_number(p.abscissa) + "," + format_number(p.value) + "," + s.unit);
  return std::move(w).str();
}

} // namespace

Figure figure_from_string(std::string_view id)
{
  if (id == "fig4")
    return Figure::Fig4;
  if (id == "fig5")
    return Figure::Fig5;
  if (id == "fig6")
    return Figure::Fig6;
  if (id == "fig7")
    return Figure::Fig7;
  if (id == "fig8")
    return Figure::Fig8;
  throw UsageError("unknown figure id '" + std::string(id) + "' (expected fig4..fig8)");
}

std::string_view to_string(Figure figure)
{
  switch (figure) {
  case Figure::Fig4:
    return "fig4";
  case Figure::Fig5:
    return "fig5";
  case Figure::Fig6:
    return "fig6";
  case Figure::Fig7:
    return "fig7";
  case Figure::Fig8:
    return "fig8";
  }
  return "unknown";
}

RangeQuantity range_quantity_from_string(std::string_view name)
{
  if (name == "density")
    return RangeQuantity::PowerDensity;
  if (name == "efield")
    return RangeQuantity::EField;
  throw UsageError("unknown quantity '" + std::string(name) + "' (expected density or efield)");
}

std::string format_number(double value)
{
  if (value == 0.0)
    value = 0.0; // drop the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5e", value);
  return buf;
}

std::vector<double> parse_number_list(std::string_view text)
{
  std::vector<double> out;
  if (text.empty())
    return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    while (!item.empty() && item.front() == ' ')
      item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ')
      item.remove_suffix(1);
    double v = 0.0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || end != item.data() + item.size())
      throw UsageError("'" + std::string(item) + "' is not a number");
    out.push_back(v);
    if (comma == std::string_view::npos)
      break;
    pos = comma + 1;
  }
  return out;
}

std::string render_table1(const Scenario& sc)
{
  const auto rows = exposure::table_one(sc.transmitter, sc.distances_m);
  CsvWriter w("distance_m,power_density_w_m2");
  w.warnings(sc.warnings);
  for (const auto& r : rows)
    w.line(format_number(r.distance_m) + "," + format_number(r.power_density_w_m2));
  return std::move(w).str();
}

std::string render_exposure(const Scenario& sc, Figure figure, RangeQuantity fig7_quantity)
{
  const auto& tx = sc.transmitter;
  const auto& g = sc.geometry;
  switch (figure) {
  case Figure::Fig4:
    return render_series(sc, figure,
                         exposure::ground_density_profile(tx, kFig4AltitudeM, sc.ground_offset.max,
                                                          sc.ground_offset.steps));
  case Figure::Fig5:
    return render_series(sc, figure,
                         exposure::ground_density_profile(tx, kFig5AltitudeM, sc.ground_offset.max,
                                                          sc.ground_offset.steps));
  case Figure::Fig6:
    return render_series(sc, figure,
                         exposure::altitude_density_profile(tx, sc.altitude.min, sc.altitude.max,
                                                            g.ground_offset_m, sc.altitude.steps));
  case Figure::Fig7:
    return render_series(
      sc, figure,
      fig7_quantity == RangeQuantity::EField
        ? exposure::efield_profile(tx, sc.range.min, sc.range.max, sc.range.steps)
        : exposure::range_density_profile(tx, sc.range.min, sc.range.max, sc.range.steps));
  case Figure::Fig8:
    return render_series(sc, figure,
                         exposure::received_power_profile(tx, g.rx_gain_db, tx.freq_mhz, sc.altitude.min,
                                                          sc.altitude.max, g.ground_offset_m,
                                                          sc.altitude.steps));
  }
  throw UsageError("unknown figure");
}

std::string render_coverage(const Scenario& sc, double max_path_loss_db, std::size_t num_balloons)
{
  const auto& g = sc.geometry;
  const double freq = sc.transmitter.freq_mhz;
  const double radius = coverage::cell_radius_from_budget(freq, g.bs_antenna_height_m,
                                                          g.rx_antenna_height_m, max_path_loss_db);
  const auto layout = coverage::constellation_layout(num_balloons, radius);
  const auto hata = rf::hata_path_loss(freq, g.bs_antenna_height_m, g.rx_antenna_height_m, radius);

  CsvWriter w("cell_radius_km," + format_number(radius));
  w.warnings(hata.warnings);
  w.comment("max_path_loss_db=" + fmt_g(max_path_loss_db) + ", spacing_km=" + format_number(layout.spacing_km));
  w.line("index,x_km,y_km");
  for (std::size_t i = 0; i < layout.cells.size(); ++i)
    w.line(std::to_string(i) + "," + format_number(layout.cells[i].center_x_km) + "," +
           format_number(layout.cells[i].center_y_km));
  w.row("union_area_km2", coverage::union_area_km2(layout));
  return std::move(w).str();
}

std::string green_assumptions(const Scenario& sc, double balloon_radius_km, double terrestrial_radius_km)
{
  auto profile = [](const char* prefix, const green::PowerSourceProfile& p) {
    const std::string pre(prefix);
    return pre + "_source_kind=" + std::string(green::to_string(p.kind)) + ", " + pre +
           "_fuel_liters_per_hour=" + fmt_g(p.fuel_liters_per_hour) + ", " + pre +
           "_emission_factor_kg_per_liter=" + fmt_g(p.emission_factor_kg_per_liter) + ", " + pre +
           "_grid_kwh_per_hour=" + fmt_g(p.grid_kwh_per_hour) + ", " + pre +
           "_grid_emission_kg_per_kwh=" + fmt_g(p.grid_emission_kg_per_kwh);
  };
  return "assumptions: " + profile("terrestrial", sc.terrestrial) + ", " + profile("balloon", sc.balloon) +
         ", hours_per_year=" + fmt_g(sc.hours_per_year) + ", balloon_radius_km=" + fmt_g(balloon_radius_km) +
         ", terrestrial_radius_km=" + fmt_g(terrestrial_radius_km);
}

std::string render_green(const Scenario& sc, double balloon_radius_km, double terrestrial_radius_km)
{
  const auto cmp = green::compare(sc.terrestrial, sc.balloon, balloon_radius_km, terrestrial_radius_km,
                                  sc.hours_per_year);
  CsvWriter w("quantity,value");
  w.comment(green_assumptions(sc, balloon_radius_km, terrestrial_radius_km));
  w.line("replaced_bs_count," + std::to_string(cmp.replaced_bs_count));
  w.row("terrestrial_annual_tons", cmp.terrestrial_annual_tons);
  w.row("balloon_annual_tons", cmp.balloon_annual_tons);
  w.row("avoided_tons", cmp.avoided_tons);
  return std::move(w).str();
}

std::string render_zones(const Scenario& sc, std::span<const double> densities_w_m2)
{
  std::vector<std::string> bad;
  for (double d : densities_w_m2)
    if (!std::isfinite(d) || d < 0.0)
      bad.push_back("density " + fmt_g(d) + " must be >= 0");
  if (!bad.empty())
    throw ValidationError(std::move(bad));

  CsvWriter w("density_w_m2,zone");
  for (double d : densities_w_m2)
    w.line(format_number(d) + "," + std::string(exposure::to_string(exposure::classify_zone(d, sc.thresholds))));
  return std::move(w).str();
}

std::string render_linkbudget(const Scenario& sc)
{
  const auto r = rf::evaluate_link(sc.transmitter, sc.geometry);
  CsvWriter w("key,value");
  w.warnings(sc.warnings);
  w.warnings(r.warnings);
  w.row("range_m", r.range_m);
  w.row("path_loss_db", r.path_loss_db);
  w.row("power_density_w_m2", r.power_density_w_m2);
  w.row("e_field_v_m", r.e_field_v_m);
  w.row("received_power_w", r.received_power_w);
  w.row("near_field_distance_m",
        rf::near_field_distance(sc.transmitter.antenna_dim_m, sc.transmitter.freq_mhz));
  w.line("zone," + std::string(exposure::to_string(exposure::classify_zone(r.power_density_w_m2, sc.thresholds))));
  return std::move(w).str();
}

std::filesystem::path write_csv(const std::filesystem::path& dir,
                                std::string_view filename,
                                std::string_view content)
{
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec)
    throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());
  const auto path = dir / filename;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.close();
  if (!out)
    throw IoError("error while writing '" + path.string() + "'");
  return path;
}

} // namespace balloonlink::cli
