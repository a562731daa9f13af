#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "poinv/exponent.hpp"
#include "poinv/int.hpp"

namespace poinv {

// Raised when a requested coefficient lies outside the completeness window
// of a truncated series (or when an expansion window cannot be satisfied).
class WindowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Truncated multivariate Laurent series with exact integer coefficients.
//
// Two boxes govern what is known:
//   support()  -- the true (untruncated) object has no terms outside it,
//                 so everything outside support() is exactly zero;
//   window()   -- inside it every stored coefficient is exact and absent
//                 terms are exactly zero.
// A coefficient is "known" inside the window or outside the support;
// elsewhere it was truncated away and is unknown, not zero.
//
// Polynomials (fully expanded finite objects) carry window = all, so they
// never shrink the knowledge of a partner in arithmetic.
class LaurentSeries {
 public:
  using Map = std::unordered_map<ExponentVector, Int, ExponentVectorHash>;

  LaurentSeries() = default;

  LaurentSeries(int arity, Window support, Window window, Map coeffs)
      : arity_(arity), support_(std::move(support)), window_(std::move(window)), coeffs_(std::move(coeffs)) {
    normalize();
  }

  // The zero series: empty support, known everywhere.
  static LaurentSeries zero(int arity) {
    return LaurentSeries(arity, Window::none(arity), Window::all(arity), {});
  }

  // A fully known Laurent polynomial. Support is the exact term box.
  static LaurentSeries polynomial(int arity, const std::vector<std::pair<ExponentVector, Int>>& terms) {
    Map m;
    Window sup = Window::none(arity);
    for (const auto& [e, c] : terms) {
      if (e.arity() != arity) throw std::invalid_argument("polynomial term arity mismatch");
      if (c == 0) continue;
      m[e] += c;
    }
    for (auto it = m.begin(); it != m.end();) {
      if (it->second == 0) {
        it = m.erase(it);
      } else {
        sup.absorb(it->first);
        ++it;
      }
    }
    return LaurentSeries(arity, sup, Window::all(arity), std::move(m));
  }

  static LaurentSeries monomial(const ExponentVector& e, Int c) {
    return polynomial(e.arity(), {{e, std::move(c)}});
  }

  static LaurentSeries constant(int arity, Int c) {
    return polynomial(arity, {{ExponentVector::zero(arity), std::move(c)}});
  }

  int arity() const { return arity_; }
  const Window& window() const { return window_; }
  const Window& support() const { return support_; }
  const Map& terms() const { return coeffs_; }
  std::size_t term_count() const { return coeffs_.size(); }

  // True when support is contained in the window, i.e. nothing was truncated.
  bool fully_known() const {
    if (support_.empty()) return true;
    for (int i = 0; i < arity_; ++i)
      if (support_.lo(i) < window_.lo(i) || support_.hi(i) > window_.hi(i)) return false;
    return true;
  }

  bool known(const ExponentVector& e) const {
    return window_.contains(e) || !support_.contains(e);
  }

  // Stored coefficient (zero if absent). Does not check knowledge.
  const Int& coeff(const ExponentVector& e) const {
    static const Int zero_v = 0;
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? zero_v : it->second;
  }

  // Exact coefficient, or nullopt when the window truncated it away.
  std::optional<Int> known_coeff(const ExponentVector& e) const {
    if (!known(e)) return std::nullopt;
    return coeff(e);
  }

  // Exponent scaling (z -> z^m per coordinate, m >= 1). Only meaningful for
  // fully known series; substitutions in this library happen on polynomials
  // and on factored rationals before expansion.
  LaurentSeries scaled_exponents(const std::vector<std::int64_t>& mult) const {
    if (static_cast<int>(mult.size()) != arity_) throw std::invalid_argument("scale arity mismatch");
    if (!fully_known()) throw std::invalid_argument("exponent scaling requires a fully known series");
    std::vector<std::pair<ExponentVector, Int>> terms;
    terms.reserve(coeffs_.size());
    for (const auto& [e, c] : coeffs_) {
      ExponentVector s(arity_);
      for (int i = 0; i < arity_; ++i) {
        if (mult[i] < 1) throw std::invalid_argument("scale factors must be >= 1");
        s[i] = e[i] * mult[i];
      }
      terms.emplace_back(s, c);
    }
    return polynomial(arity_, terms);
  }

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) { return add_impl(a, b, 1); }
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return add_impl(a, b, -1); }

  friend LaurentSeries operator-(const LaurentSeries& a) {
    Map m;
    for (const auto& [e, c] : a.coeffs_) m.emplace(e, -c);
    return LaurentSeries(a.arity_, a.support_, a.window_, std::move(m));
  }

  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);

  friend LaurentSeries operator*(const Int& s, const LaurentSeries& a) {
    if (s == 0) return zero(a.arity_);
    Map m;
    for (const auto& [e, c] : a.coeffs_) m.emplace(e, s * c);
    return LaurentSeries(a.arity_, a.support_, a.window_, std::move(m));
  }

  std::string str() const;

 private:
  static LaurentSeries add_impl(const LaurentSeries& a, const LaurentSeries& b, int sign);

  void normalize() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
      if (it->second == 0 || !window_.contains(it->first) || !support_.contains(it->first))
        it = coeffs_.erase(it);
      else
        ++it;
    }
  }

  int arity_ = 0;
  Window support_;
  Window window_;
  Map coeffs_;
};

// q-shifted factorial (a,q)_n = (1-a)(1-aq)...(1-aq^{n-1}), fully expanded.
// `a` and `ratio` are monomial exponent vectors. Throws if a factor
// degenerates to 1 - 1 = 0.
LaurentSeries q_pochhammer(const ExponentVector& a, const ExponentVector& ratio, int n);

// True iff a and b have exactly the same coefficients everywhere in `probe`.
// Throws WindowError unless both series are fully known on probe.
bool agree_on(const LaurentSeries& a, const LaurentSeries& b, const Window& probe);

}  // namespace poinv
