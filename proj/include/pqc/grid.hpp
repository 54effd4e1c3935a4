// grid.hpp - equispaced evaluation grids with exact endpoints.
#pragma once

#include <stdexcept>
#include <vector>

namespace pqc {

/// count equispaced points of [lo, hi], first and last exactly lo and hi so
/// that domain checks at the endpoints never trip on rounding.
inline std::vector<double> linspace(double lo, double hi, int count) {
  if (count < 2) throw std::invalid_argument("linspace requires count >= 2");
  if (!(lo < hi)) throw std::invalid_argument("linspace requires lo < hi");
  std::vector<double> out(static_cast<std::size_t>(count));
  const double step = (hi - lo) / static_cast<double>(count - 1);
  for (int i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = lo + step * static_cast<double>(i);
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

}  // namespace pqc
