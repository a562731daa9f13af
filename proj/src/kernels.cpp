#include "poinv/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace poinv::kernels {

bool openmp_compiled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

Backend resolve(Backend b) {
  if (b != Backend::Auto) {
    if (b == Backend::OpenMP && !openmp_compiled()) return Backend::Serial;
    return b;
  }
  if (const char* env = std::getenv("POINV_BACKEND")) {
    if (std::strcmp(env, "serial") == 0) return Backend::Serial;
    if (std::strcmp(env, "openmp") == 0 || std::strcmp(env, "omp") == 0)
      return openmp_compiled() ? Backend::OpenMP : Backend::Serial;
  }
  return openmp_compiled() ? Backend::OpenMP : Backend::Serial;
}

const char* name(Backend b) {
  switch (b) {
    case Backend::Auto: return "auto";
    case Backend::Serial: return "serial";
    case Backend::OpenMP: return "openmp";
  }
  return "?";
}

void DenseBox::resize(int n, const std::array<std::int64_t, 3>& org, const std::array<std::int64_t, 3>& ext) {
  naxes = n;
  origin = org;
  extent = ext;
  for (int a = n; a < 3; ++a) {
    origin[a] = 0;
    extent[a] = 1;
  }
  for (int a = 0; a < 3; ++a)
    if (extent[a] < 1) throw std::invalid_argument("dense box extent must be >= 1");
  cells.assign(volume(), Int(0));
}

namespace {

// An all-zero or lexicographically negative step would break the sweep
// order of the recurrence.
void check_step(const DenseBox&, const std::array<std::int64_t, 3>& step) {
  for (int a = 0; a < 3; ++a) {
    if (step[a] > 0) return;
    if (step[a] < 0) break;
  }
  throw std::invalid_argument("geometric step must be lexicographically positive");
}

}  // namespace

void geometric_accumulate_serial(DenseBox& box, const std::array<std::int64_t, 3>& step) {
  check_step(box, step);
  const std::int64_t e0 = box.extent[0], e1 = box.extent[1], e2 = box.extent[2];
  const std::int64_t s0 = step[0], s1 = step[1], s2 = step[2];
  for (std::int64_t i0 = 0; i0 < e0; ++i0) {
    const std::int64_t j0 = i0 - s0;
    if (j0 < 0 || j0 >= e0) continue;
    for (std::int64_t i1 = 0; i1 < e1; ++i1) {
      const std::int64_t j1 = i1 - s1;
      if (j1 < 0 || j1 >= e1) continue;
      Int* row = box.cells.data() + box.index(i0, i1, 0);
      const Int* src = box.cells.data() + box.index(j0, j1, 0);
      const std::int64_t lo = std::max<std::int64_t>(0, s2);
      const std::int64_t hi = std::min(e2, e2 + s2);
      for (std::int64_t i2 = lo; i2 < hi; ++i2) row[i2] += src[i2 - s2];
    }
  }
}

void geometric_accumulate_openmp(DenseBox& box, const std::array<std::int64_t, 3>& step) {
  check_step(box, step);
  const std::int64_t e0 = box.extent[0], e1 = box.extent[1], e2 = box.extent[2];
  const std::int64_t s0 = step[0], s1 = step[1], s2 = step[2];

  // Cells split into independent chains x, x+step, x+2*step, ...; each chain
  // is a serial prefix sum, chains run in parallel. A cell starts a chain iff
  // x - step falls outside the box.
  std::vector<std::size_t> starts;
  starts.reserve(static_cast<std::size_t>(e0) * static_cast<std::size_t>(e1));
  for (std::int64_t i0 = 0; i0 < e0; ++i0)
    for (std::int64_t i1 = 0; i1 < e1; ++i1)
      for (std::int64_t i2 = 0; i2 < e2; ++i2)
        if (!box.in_range(i0 - s0, i1 - s1, i2 - s2)) starts.push_back(box.index(i0, i1, i2));

  const std::int64_t n = static_cast<std::int64_t>(starts.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
  for (std::int64_t si = 0; si < n; ++si) {
    std::size_t lin = starts[static_cast<std::size_t>(si)];
    std::int64_t i2 = static_cast<std::int64_t>(lin) % e2;
    std::int64_t i1 = (static_cast<std::int64_t>(lin) / e2) % e1;
    std::int64_t i0 = static_cast<std::int64_t>(lin) / (e1 * e2);
    while (box.in_range(i0 + s0, i1 + s1, i2 + s2)) {
      const std::size_t from = box.index(i0, i1, i2);
      i0 += s0;
      i1 += s1;
      i2 += s2;
      const std::size_t to = box.index(i0, i1, i2);
      box.cells[to] += box.cells[from];
    }
  }
}

void geometric_accumulate(DenseBox& box, const std::array<std::int64_t, 3>& step, Backend backend) {
  switch (resolve(backend)) {
    case Backend::OpenMP:
      geometric_accumulate_openmp(box, step);
      return;
    default:
      geometric_accumulate_serial(box, step);
      return;
  }
}

}  // namespace poinv::kernels
