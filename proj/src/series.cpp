#include "poinv/series.hpp"

#include <algorithm>
#include <sstream>

namespace poinv {

namespace {

// Knowledge floor/ceiling of one operand in one coordinate: the bound beyond
// which the operand has truncated (unknown) content. +/-inf when the operand
// is fully known in that direction.
std::int64_t known_from(const LaurentSeries& x, int i) {
  if (x.support().empty()) return Window::kNegInf;
  return x.support().lo(i) < x.window().lo(i) ? x.window().lo(i) : Window::kNegInf;
}

std::int64_t known_upto(const LaurentSeries& x, int i) {
  if (x.support().empty()) return Window::kPosInf;
  return x.support().hi(i) > x.window().hi(i) ? x.window().hi(i) : Window::kPosInf;
}

}  // namespace

LaurentSeries LaurentSeries::add_impl(const LaurentSeries& a, const LaurentSeries& b, int sign) {
  if (a.arity_ != b.arity_) throw std::invalid_argument("series arity mismatch");
  const int r = a.arity_;
  Window w = Window::all(r);
  for (int i = 0; i < r; ++i) {
    w.set_lo(i, std::max(known_from(a, i), known_from(b, i)));
    w.set_hi(i, std::min(known_upto(a, i), known_upto(b, i)));
  }
  Window sup = a.support_.hull(b.support_);
  Map m = a.coeffs_;
  for (const auto& [e, c] : b.coeffs_) {
    auto& slot = m[e];
    if (sign > 0)
      slot += c;
    else
      slot -= c;
  }
  return LaurentSeries(r, sup, w, std::move(m));
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.arity_ != b.arity_) throw std::invalid_argument("series arity mismatch");
  const int r = a.arity_;
  if (a.support_.empty() || b.support_.empty()) return LaurentSeries::zero(r);

  // A coefficient of the product at e is exact when every decomposition
  // e = x + y with x in supp(a), y in supp(b) has x and y inside the
  // respective windows. Evaluated coordinatewise.
  Window w = Window::all(r);
  auto constrain = [&](const LaurentSeries& x, const LaurentSeries& y) {
    for (int i = 0; i < r; ++i) {
      if (x.support_.lo(i) < x.window_.lo(i))
        w.set_lo(i, std::max(w.lo(i), Window::sat_add(x.window_.lo(i), y.support_.hi(i))));
      if (x.support_.hi(i) > x.window_.hi(i))
        w.set_hi(i, std::min(w.hi(i), Window::sat_add(x.window_.hi(i), y.support_.lo(i))));
    }
  };
  constrain(a, b);
  constrain(b, a);

  Window sup = a.support_.minkowski(b.support_);
  LaurentSeries::Map m;
  for (const auto& [ea, ca] : a.coeffs_) {
    for (const auto& [eb, cb] : b.coeffs_) {
      ExponentVector e = ea + eb;
      if (!w.contains(e)) continue;
      auto [it, inserted] = m.try_emplace(e);
      if (inserted) it->second = ca * cb;
      else it->second += ca * cb;
    }
  }
  return LaurentSeries(r, sup, w, std::move(m));
}

LaurentSeries q_pochhammer(const ExponentVector& a, const ExponentVector& ratio, int n) {
  a.require_same_arity(ratio);
  if (n < 0) throw std::invalid_argument("q_pochhammer order must be >= 0");
  const int r = a.arity();
  LaurentSeries prod = LaurentSeries::constant(r, 1);
  ExponentVector mu = a;
  for (int i = 0; i < n; ++i) {
    if (mu.is_zero()) throw std::invalid_argument("q_pochhammer factor degenerates to 1 - 1 = 0");
    prod = prod * LaurentSeries::polynomial(r, {{ExponentVector::zero(r), 1}, {mu, -1}});
    mu += ratio;
  }
  return prod;
}

bool agree_on(const LaurentSeries& a, const LaurentSeries& b, const Window& probe) {
  if (a.arity() != b.arity() || probe.arity() != a.arity())
    throw std::invalid_argument("arity mismatch in agree_on");
  for (const LaurentSeries* s : {&a, &b}) {
    Window in = probe.intersect(s->support());
    if (in.empty()) continue;
    for (int i = 0; i < s->arity(); ++i)
      if (in.lo(i) < s->window().lo(i) || in.hi(i) > s->window().hi(i))
        throw WindowError("series not fully known on comparison box " + probe.str());
  }
  for (const auto& [e, c] : a.terms())
    if (probe.contains(e) && b.coeff(e) != c) return false;
  for (const auto& [e, c] : b.terms())
    if (probe.contains(e) && a.coeff(e) != c) return false;
  return true;
}

std::string LaurentSeries::str() const {
  // Sorted, human-readable form for diagnostics and tests.
  std::vector<std::pair<ExponentVector, Int>> t(coeffs_.begin(), coeffs_.end());
  std::sort(t.begin(), t.end(), [](const auto& x, const auto& y) {
    for (int i = 0; i < x.first.arity(); ++i) {
      if (x.first[i] != y.first[i]) return x.first[i] < y.first[i];
    }
    return false;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : t) {
    if (!first) os << " + ";
    os << c.get_str() << "*" << e.str();
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace poinv
