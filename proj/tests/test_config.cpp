#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "ampsup/config.hpp"

using namespace ampsup;
using namespace ampsup::quaternion;

TEST_CASE("default text parses to the default instance") {
  const auto cfg = parse_config(default_config_text());
  const auto def = MaximalOrderConfig::default_instance();
  CHECK(cfg.params == def.params);
  CHECK(cfg.order_basis == def.order_basis);
  CHECK(cfg.height_check == def.height_check);
  const auto again = parse_config(config_to_json(cfg).dump());
  CHECK(again.order_basis == cfg.order_basis);
}

TEST_CASE("malformed configurations") {
  CHECK_THROWS_AS(parse_config("{"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"a": -1})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"a": -1, "b": 3, "order_basis": [["1","0","0","0"]]})"), ConfigError);
  CHECK_THROWS_AS(
      parse_config(R"({"a": "x", "b": 3, "order_basis": [["1","0","0","0"],["0","1","0","0"],["0","0","1","0"],["0","0","0","1"]]})"),
      ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/disc6.json"), ConfigError);
}

TEST_CASE("files load") {
  const auto path = std::filesystem::temp_directory_path() / "ampsup_cfg_test.json";
  std::ofstream(path) << default_config_text();
  const auto cfg = load_config(path);
  CHECK(cfg.params.a == -1);
  CHECK(cfg.params.b == 3);
  std::filesystem::remove(path);
}

TEST_CASE("report JSON") {
  const auto j = report_to_json(verify_order(MaximalOrderConfig::default_instance().basis()));
  CHECK(j.at("all_pass").get<bool>());
  CHECK(j.at("discriminant").get<std::string>() == "36");
}
