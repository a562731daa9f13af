#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "poinv/int.hpp"

namespace poinv::kernels {

// Kernel backend selection. Serial is the reference implementation; the
// OpenMP backend must produce bit-identical results (exact integer
// arithmetic, independent chains). Auto resolves to OpenMP when compiled in
// unless the POINV_BACKEND environment variable says "serial".
enum class Backend { Auto, Serial, OpenMP };

Backend resolve(Backend b);
const char* name(Backend b);
bool openmp_compiled();

// Dense exact-coefficient box. Axis 0 is the most significant (outermost)
// expansion axis; cells are row-major with axis 0 slowest. Axes beyond
// naxes have extent 1.
struct DenseBox {
  int naxes = 0;
  std::array<std::int64_t, 3> origin{};
  std::array<std::int64_t, 3> extent{{1, 1, 1}};
  std::vector<Int> cells;

  void resize(int n, const std::array<std::int64_t, 3>& org, const std::array<std::int64_t, 3>& ext);

  std::size_t volume() const {
    return static_cast<std::size_t>(extent[0]) * static_cast<std::size_t>(extent[1]) *
           static_cast<std::size_t>(extent[2]);
  }

  bool in_range(std::int64_t i0, std::int64_t i1, std::int64_t i2) const {
    return i0 >= 0 && i0 < extent[0] && i1 >= 0 && i1 < extent[1] && i2 >= 0 && i2 < extent[2];
  }

  std::size_t index(std::int64_t i0, std::int64_t i1, std::int64_t i2) const {
    return static_cast<std::size_t>((i0 * extent[1] + i1) * extent[2] + i2);
  }

  Int& at(std::int64_t i0, std::int64_t i1, std::int64_t i2) { return cells[index(i0, i1, i2)]; }
};

// In-place truncated multiplication by the geometric series 1/(1 - step):
// cell(x) += cell(x - step), swept so that the summed prefix along the step
// direction is complete within the box. `step` must be lexicographically
// positive in axis order.
void geometric_accumulate_serial(DenseBox& box, const std::array<std::int64_t, 3>& step);
void geometric_accumulate_openmp(DenseBox& box, const std::array<std::int64_t, 3>& step);
void geometric_accumulate(DenseBox& box, const std::array<std::int64_t, 3>& step, Backend backend);

}  // namespace poinv::kernels
