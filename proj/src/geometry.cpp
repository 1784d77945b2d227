#include "ampsup/geometry.hpp"

#include <limits>

namespace ampsup::geometry {

double petersson_magnitude(std::complex<double> value, const UhpPoint& w, int k) {
  if (k < 1) throw InputError("petersson_magnitude: weight must be >= 1");
  if (!(w.y > 0)) throw InputError("petersson_magnitude: point must lie in the upper half-plane");
  const double m = std::abs(value);
  if (m == 0.0) return 0.0;
  return std::exp(0.5 * k * std::log(w.y) + std::log(m));
}

std::vector<UhpPoint> sample_grid(const Box& box, std::size_t nx, std::size_t ny) {
  if (nx == 0 || ny == 0) throw InputError("sample_grid: empty grid");
  if (!(box.y0 > 0) || !(box.y1 > 0)) throw InputError("sample_grid: box must stay above y = 0");
  if (!(box.x1 >= box.x0) || !(box.y1 >= box.y0)) throw InputError("sample_grid: inverted box");
  auto axis = [](double lo, double hi, std::size_t count, std::size_t i) {
    if (count == 1) return 0.5 * (lo + hi);
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  };
  std::vector<UhpPoint> out;
  out.reserve(nx * ny);
  for (std::size_t iy = 0; iy < ny; ++iy) {
    for (std::size_t ix = 0; ix < nx; ++ix) {
      out.push_back({axis(box.x0, box.x1, nx, ix), axis(box.y0, box.y1, ny, iy)});
    }
  }
  return out;
}

}  // namespace ampsup::geometry
