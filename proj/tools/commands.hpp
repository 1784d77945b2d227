#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ampsup/config.hpp"

namespace ampsup::cli {

enum class Precision { double_, extended };

struct Globals {
  std::string config_path;  // empty: built-in default algebra
  int threads = 0;          // 0: OpenMP default
  Precision precision = Precision::double_;
  std::size_t budget_elements = 20'000'000;
  std::uint64_t seed = 1;
  std::string out;          // empty: stdout
};

struct Point {
  double x = 0;
  double y = 1;
};

struct Args {
  std::int64_t n = 1;
  std::int64_t n_max = 30;
  Point z{0.0, 1.0};
  std::optional<Point> w;
  double cap = 20;
  double rho = 1;
  int k = 4;
  std::string ks = "20,40,60,80,100,120,140,160,180,200";
  std::optional<double> tol;
  bool psl = false;
  std::vector<double> box{-0.5, 0.5, 0.8, 1.8};
  std::vector<std::size_t> grid{10, 10};
  std::optional<double> N;
  double eps = 0;
  bool alt_exponent = false;
  double kmin = 1e5;
  double kmax = 1e9;
  int samples = 40;
  bool no_term2 = false;
};

// Each command writes its primary output to `out` and returns a summary that is
// merged into the run manifest.
using Summary = nlohmann::json;

Summary cmd_verify(const Globals& g, const quaternion::MaximalOrderConfig& cfg, std::ostream& out, int& status);
Summary cmd_enum(const Globals& g, const quaternion::MaximalOrderConfig& cfg, const Args& a, std::ostream& out);
Summary cmd_cosets(const Globals& g, const quaternion::MaximalOrderConfig& cfg, const Args& a, std::ostream& out);
Summary cmd_count(const Globals& g, const quaternion::MaximalOrderConfig& cfg, const Args& a, std::ostream& out);
Summary cmd_kernel(const Globals& g, const quaternion::MaximalOrderConfig& cfg, const Args& a, std::ostream& out);
Summary cmd_kernel_grid(const Globals& g, const quaternion::MaximalOrderConfig& cfg, const Args& a, std::ostream& out);
Summary cmd_hecke_kernel(const Globals& g, const quaternion::MaximalOrderConfig& cfg, const Args& a, std::ostream& out);
Summary cmd_iw_sar(const Globals& g, const quaternion::MaximalOrderConfig& cfg, const Args& a, std::ostream& out);
Summary cmd_bound(const Globals& g, const Args& a, std::ostream& out);
Summary cmd_curve(const Globals& g, const Args& a, std::ostream& out);
Summary cmd_check_tail(const Globals& g, const Args& a, std::ostream& out);
Summary cmd_check_amplified(const Globals& g, const quaternion::MaximalOrderConfig& cfg, const Args& a,
                            std::ostream& out);

/// 64-bit FNV-1a of the canonical JSON form of the configuration.
std::string config_hash(const quaternion::MaximalOrderConfig& cfg);

/// Shortest round-trip decimal form of a double.
std::string fmt(double v);

}  // namespace ampsup::cli
