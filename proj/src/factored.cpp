#include "poinv/factored.hpp"

#include <algorithm>
#include <stdexcept>

namespace poinv {

namespace {

bool lex_less(const ExponentVector& a, const ExponentVector& b) {
  for (int i = 0; i < a.arity(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  // b > 0
  std::int64_t q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

}  // namespace

FactoredRational::FactoredRational(LaurentSeries numerator) : numerator_(std::move(numerator)) {
  if (!numerator_.fully_known())
    throw std::invalid_argument("factored rational numerator must be a Laurent polynomial");
}

void FactoredRational::multiply_factor(const ExponentVector& mu, int multiplicity) {
  if (mu.arity() != arity()) throw std::invalid_argument("factor arity mismatch");
  if (mu.is_zero()) throw std::invalid_argument("geometric factor 1 - 1 = 0 is not allowed");
  if (multiplicity < 1) throw std::invalid_argument("factor multiplicity must be >= 1");
  for (auto& f : factors_) {
    if (f.mu == mu) {
      f.multiplicity += multiplicity;
      return;
    }
  }
  factors_.push_back({mu, multiplicity});
  std::sort(factors_.begin(), factors_.end(),
            [](const GeometricFactor& a, const GeometricFactor& b) { return lex_less(a.mu, b.mu); });
}

std::int64_t FactoredRational::factor_count() const {
  std::int64_t n = 0;
  for (const auto& f : factors_) n += f.multiplicity;
  return n;
}

FactoredRational FactoredRational::scaled_exponents(const std::vector<std::int64_t>& mult) const {
  FactoredRational out(numerator_.scaled_exponents(mult));
  for (const auto& f : factors_) {
    ExponentVector mu(arity());
    for (int i = 0; i < arity(); ++i) mu[i] = f.mu[i] * mult[i];
    out.multiply_factor(mu, f.multiplicity);
  }
  return out;
}

LaurentSeries expanded_denominator(const FactoredRational& r) {
  LaurentSeries prod = LaurentSeries::constant(r.arity(), 1);
  for (const auto& f : r.denominator()) {
    LaurentSeries lin = LaurentSeries::polynomial(
        r.arity(), {{ExponentVector::zero(r.arity()), 1}, {f.mu, -1}});
    for (int m = 0; m < f.multiplicity; ++m) prod = prod * lin;
  }
  return prod;
}

namespace {

struct Direction {
  ExponentVector nu;  // expansion monomial, lexicographically positive
  int multiplicity;
  std::int64_t weight;  // w . nu, >= 1
};

struct Rewrite {
  // Numerator after large-factor rewrites: sign * shift * original numerator.
  int sign = 1;
  ExponentVector shift;
  std::vector<Direction> dirs;
};

Rewrite rewrite_factors(const FactoredRational& r, const ExpansionRegion& region) {
  Rewrite rw;
  rw.shift = ExponentVector::zero(r.arity());
  for (const auto& f : r.denominator()) {
    if (region.is_small(f.mu)) {
      rw.dirs.push_back({f.mu, f.multiplicity, 0});
    } else {
      // 1/(1-mu)^m = (-1)^m mu^-m / (1-mu^-1)^m
      rw.dirs.push_back({-f.mu, f.multiplicity, 0});
      rw.shift += std::int64_t{-f.multiplicity} * f.mu;
      if (f.multiplicity & 1) rw.sign = -rw.sign;
    }
  }
  return rw;
}

// A strictly positive weight functional on all expansion directions:
// w[innermost] = 1 and each outer weight dominates everything inside, so a
// lexicographically positive vector of bounded coordinates always has
// positive weight.
std::array<std::int64_t, kMaxArity> make_weights(const ExpansionRegion& region,
                                                 const std::vector<Direction>& dirs) {
  std::int64_t bound = 1;
  for (const auto& d : dirs)
    for (int i = 0; i < d.nu.arity(); ++i) bound = std::max(bound, std::abs(d.nu[i]));
  std::array<std::int64_t, kMaxArity> w{};
  std::int64_t inner_sum = 0;
  for (int a = region.arity() - 1; a >= 0; --a) {
    w[region.coordinate(a)] = 1 + bound * inner_sum;
    inner_sum += w[region.coordinate(a)];
  }
  return w;
}

}  // namespace

Window rewritten_numerator_box(const FactoredRational& r, const ExpansionRegion& region) {
  Rewrite rw = rewrite_factors(r, region);
  Window box = Window::none(r.arity());
  for (const auto& [e, c] : r.numerator().terms()) box.absorb(e + rw.shift);
  return box;
}

LaurentSeries expand(const FactoredRational& r, const Window& window, const ExpansionRegion& region,
                     kernels::Backend backend) {
  const int arity = r.arity();
  if (window.arity() != arity || region.arity() != arity)
    throw std::invalid_argument("expand arity mismatch");
  if (!window.finite())
    throw WindowError("expansion window must be finite in every coordinate: " + window.str());

  if (r.numerator().term_count() == 0) return LaurentSeries::zero(arity);

  Rewrite rw = rewrite_factors(r, region);

  // Overapproximate true support: the rewritten numerator box opened toward
  // every direction some factor can move in.
  Window support = Window::none(arity);
  for (const auto& [e, c] : r.numerator().terms()) support.absorb(e + rw.shift);
  for (int i = 0; i < arity; ++i) {
    for (const auto& d : rw.dirs) {
      if (d.nu[i] < 0) support.set_lo(i, Window::kNegInf);
      if (d.nu[i] > 0) support.set_hi(i, Window::kPosInf);
    }
  }

  if (window.empty()) return LaurentSeries(arity, support, window, {});

  // Rewritten numerator terms.
  std::vector<std::pair<ExponentVector, Int>> num;
  num.reserve(r.numerator().term_count());
  for (const auto& [e, c] : r.numerator().terms())
    num.emplace_back(e + rw.shift, rw.sign > 0 ? c : -c);

  auto weights = make_weights(region, rw.dirs);
  auto wdot = [&](const ExponentVector& e) {
    std::int64_t s = 0;
    for (int i = 0; i < arity; ++i) s += weights[i] * e[i];
    return s;
  };
  for (auto& d : rw.dirs) {
    d.weight = wdot(d.nu);
    if (d.weight < 1) throw std::logic_error("expansion direction has non-positive weight");
  }

  // Weight budget: any contribution landing inside the window has weight at
  // most wmax, and every path starts at numerator weight >= smin with each
  // geometric step adding at least 1.
  std::int64_t wmax = 0;
  for (int i = 0; i < arity; ++i) wmax += weights[i] * window.hi(i);
  std::int64_t smin = wdot(num[0].first);
  std::int64_t num_lo[kMaxArity], num_hi[kMaxArity];
  for (int i = 0; i < arity; ++i) {
    num_lo[i] = num[0].first[i];
    num_hi[i] = num[0].first[i];
  }
  for (const auto& [e, c] : num) {
    smin = std::min(smin, wdot(e));
    for (int i = 0; i < arity; ++i) {
      num_lo[i] = std::min(num_lo[i], e[i]);
      num_hi[i] = std::max(num_hi[i], e[i]);
    }
  }
  const std::int64_t budget = wmax - smin;
  if (budget < 0) return LaurentSeries(arity, support, window, {});

  // Reachability floors/ceilings: spending the whole weight budget on the
  // best per-weight mover bounds how far any partial product can drift.
  std::int64_t flo[kMaxArity], fhi[kMaxArity];
  for (int i = 0; i < arity; ++i) {
    std::int64_t down = 0, up = 0;
    for (const auto& d : rw.dirs) {
      if (d.nu[i] < 0) down = std::min(down, floor_div(budget * d.nu[i], d.weight));
      if (d.nu[i] > 0) up = std::max(up, floor_div(budget * d.nu[i], d.weight));
    }
    flo[i] = num_lo[i] + down;
    fhi[i] = num_hi[i] + up;
  }

  // Weight-slab caps: with every coordinate at its floor, the remaining
  // budget caps each coordinate from above (and from below symmetrically).
  std::int64_t blo[kMaxArity], bhi[kMaxArity];
  for (int i = 0; i < arity; ++i) {
    std::int64_t others_min = smin, others_max = wmax;
    for (int j = 0; j < arity; ++j) {
      if (j == i) continue;
      others_max -= weights[j] * flo[j];
      others_min -= weights[j] * fhi[j];
    }
    bhi[i] = std::min(fhi[i], floor_div(others_max, weights[i]));
    blo[i] = std::max(flo[i], ceil_div(others_min, weights[i]));
    if (blo[i] > bhi[i]) return LaurentSeries(arity, support, window, {});
  }

  // Dense work box in region-axis order.
  std::array<std::int64_t, 3> origin{}, ext{{1, 1, 1}};
  std::size_t vol = 1;
  for (int a = 0; a < arity; ++a) {
    int c = region.coordinate(a);
    origin[a] = blo[c];
    ext[a] = bhi[c] - blo[c] + 1;
    vol *= static_cast<std::size_t>(ext[a]);
  }
  if (vol > (std::size_t{1} << 26))
    throw WindowError("expansion work box too large (" + std::to_string(vol) + " cells)");

  kernels::DenseBox box;
  box.resize(arity, origin, ext);

  auto axis_index = [&](const ExponentVector& e, std::array<std::int64_t, 3>& idx) {
    for (int a = 0; a < arity; ++a) {
      int c = region.coordinate(a);
      idx[a] = e[c] - origin[a];
    }
    for (int a = arity; a < 3; ++a) idx[a] = 0;
  };

  for (const auto& [e, c] : num) {
    std::array<std::int64_t, 3> idx;
    axis_index(e, idx);
    if (box.in_range(idx[0], idx[1], idx[2])) box.at(idx[0], idx[1], idx[2]) += c;
  }

  for (const auto& d : rw.dirs) {
    std::array<std::int64_t, 3> step{};
    for (int a = 0; a < arity; ++a) step[a] = d.nu[region.coordinate(a)];
    for (int m = 0; m < d.multiplicity; ++m) kernels::geometric_accumulate(box, step, backend);
  }

  // Gather the window cells.
  LaurentSeries::Map out;
  std::array<std::int64_t, 3> glo{}, ghi{};
  for (int a = 0; a < arity; ++a) {
    int c = region.coordinate(a);
    glo[a] = std::max(window.lo(c), blo[c]) - origin[a];
    ghi[a] = std::min(window.hi(c), bhi[c]) - origin[a];
  }
  for (int a = arity; a < 3; ++a) glo[a] = ghi[a] = 0;
  for (std::int64_t i0 = glo[0]; i0 <= ghi[0]; ++i0)
    for (std::int64_t i1 = glo[1]; i1 <= ghi[1]; ++i1)
      for (std::int64_t i2 = glo[2]; i2 <= ghi[2]; ++i2) {
        const Int& v = box.at(i0, i1, i2);
        if (v == 0) continue;
        ExponentVector e(arity);
        std::array<std::int64_t, 3> idx{{i0, i1, i2}};
        for (int a = 0; a < arity; ++a) e[region.coordinate(a)] = origin[a] + idx[a];
        out.emplace(e, v);
      }
  return LaurentSeries(arity, support, window, std::move(out));
}

}  // namespace poinv
