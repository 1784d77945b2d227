#pragma once

// JSON I/O for the algebra/order configuration and the verification report.
//
//   {"a": -1, "b": 3,
//    "order_basis": [["1","0","0","0"], ["0","1","0","0"], ["0","0","1","0"], ["1/2","1/2","1/2","1/2"]],
//    "height_check": 50}

#include <filesystem>
#include <string>

#include <json.hpp>

#include "ampsup/order.hpp"

namespace ampsup::quaternion {

/// Throws ConfigError on malformed JSON or a missing/ill-typed field.
MaximalOrderConfig parse_config(const std::string& json_text);
/// Throws ConfigError when the file is missing or unreadable.
MaximalOrderConfig load_config(const std::filesystem::path& path);

nlohmann::json config_to_json(const MaximalOrderConfig& config);
std::string default_config_text();

nlohmann::json report_to_json(const VerificationReport& report);

}  // namespace ampsup::quaternion
