#include "ampsup/config.hpp"

#include <fstream>
#include <sstream>

#include "ampsup/errors.hpp"

namespace ampsup::quaternion {

MaximalOrderConfig parse_config(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  MaximalOrderConfig cfg;
  try {
    cfg.params.a = j.at("a").get<std::int64_t>();
    cfg.params.b = j.at("b").get<std::int64_t>();
    cfg.height_check = j.value("height_check", 50);
    const auto& rows = j.at("order_basis");
    if (!rows.is_array() || rows.size() != 4) throw ConfigError("order_basis must be a 4x4 array");
    for (std::size_t i = 0; i < 4; ++i) {
      if (!rows[i].is_array() || rows[i].size() != 4) throw ConfigError("order_basis must be a 4x4 array");
      for (std::size_t k = 0; k < 4; ++k) {
        const auto& cell = rows[i][k];
        if (cell.is_string()) {
          cfg.order_basis[i][k] = parse_rational(cell.get<std::string>());
        } else if (cell.is_number_integer()) {
          cfg.order_basis[i][k] = Rational(cell.get<std::int64_t>());
        } else {
          throw ConfigError("order_basis entries must be \"p/q\" strings or integers");
        }
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config field error: ") + e.what());
  }
  if (cfg.height_check < 1) throw ConfigError("height_check must be positive");
  return cfg;
}

MaximalOrderConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

nlohmann::json config_to_json(const MaximalOrderConfig& config) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : config.order_basis) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& v : row) r.push_back(to_string(v));
    rows.push_back(r);
  }
  return {{"a", config.params.a}, {"b", config.params.b}, {"order_basis", rows}, {"height_check", config.height_check}};
}

std::string default_config_text() { return config_to_json(MaximalOrderConfig::default_instance()).dump(2) + "\n"; }

nlohmann::json report_to_json(const VerificationReport& report) {
  return {{"all_pass", report.all_pass()},
          {"independent", report.independent},
          {"unit_containment", report.unit_containment},
          {"ring_closure", report.ring_closure},
          {"integrality", report.integrality},
          {"denominators_bounded", report.denominators_bounded},
          {"discriminant_matches", report.discriminant_matches},
          {"discriminant", to_string(report.discriminant)},
          {"expected_discriminant", to_string(report.expected_discriminant)},
          {"ramified_primes", report.ramified_primes},
          {"failures", report.failures}};
}

}  // namespace ampsup::quaternion
