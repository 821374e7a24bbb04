#include "balloonlink/scenario.hpp"

#include "balloonlink/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <initializer_list>
#include <optional>
#include <set>
#include <sstream>
#include <system_error>

namespace balloonlink {

namespace {

using nlohmann::json;

std::string join_violations(const std::vector<std::string>& v)
{
  std::string out = "invalid scenario:";
  for (const auto& s : v)
    out += "\n  " + s;
  return out;
}

// Walks one section of the document, recording every problem instead of
// stopping at the first.
class SectionReader
{
public:
  SectionReader(const json* section, std::string name, std::vector<std::string>& violations)
    : section_(section), name_(std::move(name)), violations_(violations)
  {
  }

  bool has(const char* key) const { return section_ && section_->contains(key); }

  std::optional<double> number(const char* key)
  {
    seen_.insert(key);
    if (!has(key))
      return std::nullopt;
    const auto& v = (*section_)[key];
    if (!v.is_number()) {
      fail(key, "must be a number");
      return std::nullopt;
    }
    return v.get<double>();
  }

  double number(const char* key, double fallback) { return number(key).value_or(fallback); }

  std::optional<std::string> string(const char* key)
  {
    seen_.insert(key);
    if (!has(key))
      return std::nullopt;
    const auto& v = (*section_)[key];
    if (!v.is_string()) {
      fail(key, "must be a string");
      return std::nullopt;
    }
    return v.get<std::string>();
  }

  std::optional<std::vector<double>> number_list(const char* key)
  {
    seen_.insert(key);
    if (!has(key))
      return std::nullopt;
    const auto& v = (*section_)[key];
    if (!v.is_array()) {
      fail(key, "must be an array of numbers");
      return std::nullopt;
    }
    std::vector<double> out;
    for (const auto& item : v) {
      if (!item.is_number()) {
        fail(key, "must be an array of numbers");
        return std::nullopt;
      }
      out.push_back(item.get<double>());
    }
    return out;
  }

  std::size_t count(const char* key, std::size_t fallback)
  {
    seen_.insert(key);
    if (!has(key))
      return fallback;
    const auto& v = (*section_)[key];
    if (!v.is_number_integer() || v.get<long long>() < 0) {
      fail(key, "must be a non-negative integer");
      return fallback;
    }
    return static_cast<std::size_t>(v.get<long long>());
  }

  void check(bool ok, const char* key, const char* constraint)
  {
    if (!ok)
      fail(key, constraint);
  }

  void fail(const char* key, const std::string& constraint)
  {
    violations_.push_back(qualified(key) + " " + constraint);
  }

  void reject_unknown_keys()
  {
    if (!section_)
      return;
    for (const auto& [key, _] : section_->items())
      if (!seen_.count(key))
        violations_.push_back("unknown key '" + qualified(key.c_str()) + "'");
  }

  std::string qualified(const char* key) const { return name_ + "." + key; }

private:
  const json* section_;
  std::string name_;
  std::vector<std::string>& violations_;
  std::set<std::string> seen_;
};

const json* section_of(const json& root, const char* name, std::vector<std::string>& violations)
{
  if (!root.contains(name))
    return nullptr;
  const auto& s = root[name];
  if (!s.is_object()) {
    violations.push_back(std::string(name) + " must be an object");
    return nullptr;
  }
  return &s;
}

bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }
bool finite_non_negative(double v) { return std::isfinite(v) && v >= 0.0; }

green::PowerSourceProfile read_profile(SectionReader& r,
                                       const std::string& prefix,
                                       green::SourceKind default_kind)
{
  auto key = [&](const char* field) { return prefix + "_" + field; };

  green::SourceKind kind = default_kind;
  const auto kind_key = key("source_kind");
  if (auto name = r.string(kind_key.c_str())) {
    try {
      kind = green::source_kind_from_string(*name);
    } catch (const DomainError&) {
      r.fail(kind_key.c_str(), "must be one of DIESEL, SOLAR, GRID");
    }
  }

  green::PowerSourceProfile p = kind == green::SourceKind::Diesel ? green::PowerSourceProfile::diesel()
                                : kind == green::SourceKind::Grid ? green::PowerSourceProfile::grid()
                                                                  : green::PowerSourceProfile::solar();

  struct Field
  {
    const char* name;
    double* target;
  };
  const Field fields[] = {
    {"fuel_liters_per_hour", &p.fuel_liters_per_hour},
    {"emission_factor_kg_per_liter", &p.emission_factor_kg_per_liter},
    {"grid_kwh_per_hour", &p.grid_kwh_per_hour},
    {"grid_emission_kg_per_kwh", &p.grid_emission_kg_per_kwh},
  };
  for (const auto& f : fields) {
    const auto k = key(f.name);
    *f.target = r.number(k.c_str(), *f.target);
    r.check(finite_non_negative(*f.target), k.c_str(), "must be >= 0");
    if (kind == green::SourceKind::Solar && *f.target != 0.0)
      r.fail(k.c_str(), "must be 0 for a SOLAR source");
  }
  return p;
}

} // namespace

ValidationError::ValidationError(std::vector<std::string> violations)
  : std::runtime_error(join_violations(violations)), violations_(std::move(violations))
{
}

Scenario parse_scenario(std::string_view json_text)
{
  json root;
  try {
    root = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, json_text.size());
    const std::size_t line = 1 + static_cast<std::size_t>(
                                   std::count(json_text.begin(), json_text.begin() + upto, '\n'));
    throw ParseError("scenario parse error at line " + std::to_string(line) + ": " + e.what(), line);
  }
  if (!root.is_object())
    throw ValidationError({"scenario root must be a JSON object"});

  std::vector<std::string> violations;
  Scenario sc;
  namespace def = scenario_defaults;

  for (const auto& [key, _] : root.items()) {
    static const std::set<std::string> known{"transmitter", "geometry", "thresholds", "green",
                                             "sweeps", "output_dir"};
    if (!known.count(key))
      violations.push_back("unknown key '" + key + "'");
  }

  // transmitter
  {
    SectionReader r(section_of(root, "transmitter", violations), "transmitter", violations);
    auto& tx = sc.transmitter;
    if (auto p = r.number("power_w")) {
      tx.power_w = *p;
      r.check(finite_positive(tx.power_w), "power_w", "must be > 0");
    } else if (!r.has("power_w")) {
      r.fail("power_w", "is required");
    }
    if (auto f = r.number("freq_mhz")) {
      tx.freq_mhz = *f;
      r.check(finite_positive(tx.freq_mhz), "freq_mhz", "must be > 0");
    } else if (!r.has("freq_mhz")) {
      r.fail("freq_mhz", "is required");
    }
    tx.gain_db = r.number("gain_db", def::kGainDb);
    r.check(std::isfinite(tx.gain_db), "gain_db", "must be finite");
    tx.antenna_dim_m = r.number("antenna_dim_m", def::kAntennaDimM);
    r.check(finite_non_negative(tx.antenna_dim_m), "antenna_dim_m", "must be >= 0");
    const bool had_db = r.has("gain_db");
    if (auto g = r.number("gain_linear")) {
      r.check(finite_positive(*g), "gain_linear", "must be > 0");
      tx.gain_linear_override = *g;
      if (had_db) {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "gain_linear=%g overrides gain_db=%g (which converts to %g linear)", *g,
                      tx.gain_db, std::pow(10.0, tx.gain_db / 10.0));
        sc.warnings.emplace_back(buf);
      }
    }
    r.reject_unknown_keys();
  }

  // geometry
  {
    SectionReader r(section_of(root, "geometry", violations), "geometry", violations);
    auto& g = sc.geometry;
    g.altitude_m = r.number("altitude_m", def::kAltitudeM);
    r.check(finite_non_negative(g.altitude_m), "altitude_m", "must be >= 0");
    g.ground_offset_m = r.number("ground_offset_m", def::kGroundOffsetM);
    r.check(finite_non_negative(g.ground_offset_m), "ground_offset_m", "must be >= 0");
    g.bs_antenna_height_m = r.number("bs_antenna_height_m", def::kBsAntennaHeightM);
    r.check(finite_positive(g.bs_antenna_height_m), "bs_antenna_height_m", "must be > 0");
    g.rx_antenna_height_m = r.number("rx_antenna_height_m", def::kRxAntennaHeightM);
    r.check(finite_positive(g.rx_antenna_height_m), "rx_antenna_height_m", "must be > 0");
    g.rx_gain_db = r.number("rx_gain_db", def::kRxGainDb);
    r.check(std::isfinite(g.rx_gain_db), "rx_gain_db", "must be finite");
    r.check(!(g.altitude_m == 0.0 && g.ground_offset_m == 0.0), "altitude_m",
            "and geometry.ground_offset_m must not both be 0");
    r.reject_unknown_keys();
  }

  // thresholds
  {
    SectionReader r(section_of(root, "thresholds", violations), "thresholds", violations);
    auto limit = r.number("limit_w_m2");
    if (limit) {
      sc.thresholds.limit_w_m2 = *limit;
      r.check(finite_positive(*limit), "limit_w_m2", "must be > 0");
    } else if (finite_positive(sc.transmitter.freq_mhz)) {
      sc.thresholds.limit_w_m2 = exposure::ZoneThresholds::defaults_for(sc.transmitter.freq_mhz).limit_w_m2;
    }
    sc.thresholds.caution_fraction = r.number("caution_fraction", 0.1);
    r.check(sc.thresholds.caution_fraction > 0.0 && sc.thresholds.caution_fraction < 1.0,
            "caution_fraction", "must lie in (0, 1)");
    r.reject_unknown_keys();
  }

  // green
  {
    SectionReader r(section_of(root, "green", violations), "green", violations);
    sc.terrestrial = read_profile(r, "terrestrial", green::SourceKind::Diesel);
    sc.balloon = read_profile(r, "balloon", green::SourceKind::Solar);
    sc.hours_per_year = r.number("hours_per_year", green::kDefaultHoursPerYear);
    r.check(finite_positive(sc.hours_per_year), "hours_per_year", "must be > 0");
    r.reject_unknown_keys();
  }

  // sweeps
  {
    SectionReader r(section_of(root, "sweeps", violations), "sweeps", violations);
    sc.ground_offset.max = r.number("ground_offset_max_m", sc.ground_offset.max);
    r.check(finite_non_negative(sc.ground_offset.max), "ground_offset_max_m", "must be >= 0");
    sc.ground_offset.steps = r.count("ground_offset_steps", sc.ground_offset.steps);
    r.check(sc.ground_offset.steps >= 2, "ground_offset_steps", "must be >= 2");

    auto read_range = [&](SweepRange& range, const char* min_key, const char* max_key,
                          const char* steps_key) {
      range.min = r.number(min_key, range.min);
      range.max = r.number(max_key, range.max);
      range.steps = r.count(steps_key, range.steps);
      r.check(finite_positive(range.min), min_key, "must be > 0");
      r.check(std::isfinite(range.max) && range.max > range.min, max_key,
              "must be greater than the matching _min_m");
      r.check(range.steps >= 2, steps_key, "must be >= 2");
    };
    read_range(sc.altitude, "altitude_min_m", "altitude_max_m", "altitude_steps");
    read_range(sc.range, "range_min_m", "range_max_m", "range_steps");

    if (auto d = r.number_list("distances_m")) {
      sc.distances_m = std::move(*d);
      r.check(!sc.distances_m.empty(), "distances_m", "must not be empty");
      for (double v : sc.distances_m)
        if (!finite_positive(v)) {
          r.fail("distances_m", "entries must be > 0");
          break;
        }
    }
    r.reject_unknown_keys();
  }

  if (root.contains("output_dir")) {
    if (root["output_dir"].is_string())
      sc.output_dir = root["output_dir"].get<std::string>();
    else
      violations.push_back("output_dir must be a string");
  }

  if (!violations.empty())
    throw ValidationError(std::move(violations));
  return sc;
}

Scenario load_scenario(const std::filesystem::path& path)
{
  std::error_code ec;
  if (std::filesystem::is_directory(path, ec))
    throw IoError("scenario path '" + path.string() + "' is a directory");
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw IoError("cannot read scenario file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad())
    throw IoError("error while reading scenario file '" + path.string() + "'");
  return parse_scenario(buf.str());
}

} // namespace balloonlink
