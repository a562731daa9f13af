#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace poinv {

inline constexpr int kMaxArity = 3;

// Exponent vector of a Laurent monomial. The arity is fixed by the ambient
// ring context: 1 for C[[z]], 2 for C[[t,z]] or C[[p,q,p^-1,q^-1]],
// 3 for C[[t,p,q,p^-1,q^-1]].
class ExponentVector {
 public:
  ExponentVector() = default;

  explicit ExponentVector(int arity) : arity_(check_arity(arity)) {}

  ExponentVector(std::initializer_list<std::int64_t> e) {
    arity_ = check_arity(static_cast<int>(e.size()));
    int i = 0;
    for (std::int64_t v : e) e_[i++] = v;
  }

  static ExponentVector zero(int arity) { return ExponentVector(arity); }

  int arity() const { return arity_; }

  std::int64_t operator[](int i) const { return e_[i]; }
  std::int64_t& operator[](int i) { return e_[i]; }

  bool is_zero() const {
    for (int i = 0; i < arity_; ++i)
      if (e_[i] != 0) return false;
    return true;
  }

  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) {
    a.require_same_arity(b);
    for (int i = 0; i < a.arity_; ++i) a.e_[i] += b.e_[i];
    return a;
  }

  friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) {
    a.require_same_arity(b);
    for (int i = 0; i < a.arity_; ++i) a.e_[i] -= b.e_[i];
    return a;
  }

  friend ExponentVector operator-(ExponentVector a) {
    for (int i = 0; i < a.arity_; ++i) a.e_[i] = -a.e_[i];
    return a;
  }

  friend ExponentVector operator*(std::int64_t s, ExponentVector a) {
    for (int i = 0; i < a.arity_; ++i) a.e_[i] *= s;
    return a;
  }

  ExponentVector& operator+=(const ExponentVector& b) {
    require_same_arity(b);
    for (int i = 0; i < arity_; ++i) e_[i] += b.e_[i];
    return *this;
  }

  bool operator==(const ExponentVector& b) const {
    if (arity_ != b.arity_) return false;
    for (int i = 0; i < arity_; ++i)
      if (e_[i] != b.e_[i]) return false;
    return true;
  }

  void require_same_arity(const ExponentVector& b) const {
    if (arity_ != b.arity_) throw std::invalid_argument("exponent arity mismatch");
  }

  std::string str() const {
    std::string s = "(";
    for (int i = 0; i < arity_; ++i) {
      if (i) s += ",";
      s += std::to_string(e_[i]);
    }
    return s + ")";
  }

 private:
  static int check_arity(int a) {
    if (a < 1 || a > kMaxArity) throw std::invalid_argument("arity must be 1..3");
    return a;
  }

  int arity_ = 0;
  std::array<std::int64_t, kMaxArity> e_{};
};

struct ExponentVectorHash {
  std::size_t operator()(const ExponentVector& e) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(e.arity());
    for (int i = 0; i < e.arity(); ++i) {
      std::uint64_t v = static_cast<std::uint64_t>(e[i]);
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

inline std::int64_t sat_clamp(std::int64_t v, std::int64_t lo, std::int64_t hi) {
  return v < lo ? lo : (v > hi ? hi : v);
}

// Truncation window: a per-coordinate interval of exponents, with saturating
// +/-infinity sentinels. Semantically a window is a promise of completeness:
// every coefficient inside it is exact, everything outside is unknown rather
// than zero.
class Window {
 public:
  static constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min() / 4;
  static constexpr std::int64_t kPosInf = std::numeric_limits<std::int64_t>::max() / 4;

  Window() = default;

  static Window all(int arity) {
    Window w;
    w.arity_ = arity;
    for (int i = 0; i < arity; ++i) {
      w.lo_[i] = kNegInf;
      w.hi_[i] = kPosInf;
    }
    return w;
  }

  static Window none(int arity) {
    Window w;
    w.arity_ = arity;
    for (int i = 0; i < arity; ++i) {
      w.lo_[i] = kPosInf;
      w.hi_[i] = kNegInf;
    }
    return w;
  }

  static Window box(const ExponentVector& lo, const ExponentVector& hi) {
    lo.require_same_arity(hi);
    Window w;
    w.arity_ = lo.arity();
    for (int i = 0; i < w.arity_; ++i) {
      w.lo_[i] = lo[i];
      w.hi_[i] = hi[i];
    }
    return w;
  }

  // Convenience for 1..3 coordinates: box({lo0,hi0},{lo1,hi1},...)
  static Window of(std::initializer_list<std::pair<std::int64_t, std::int64_t>> ranges) {
    Window w;
    w.arity_ = static_cast<int>(ranges.size());
    int i = 0;
    for (auto [l, h] : ranges) {
      w.lo_[i] = l;
      w.hi_[i] = h;
      ++i;
    }
    return w;
  }

  int arity() const { return arity_; }
  std::int64_t lo(int i) const { return lo_[i]; }
  std::int64_t hi(int i) const { return hi_[i]; }
  void set_lo(int i, std::int64_t v) { lo_[i] = sat_clamp(v, kNegInf, kPosInf); }
  void set_hi(int i, std::int64_t v) { hi_[i] = sat_clamp(v, kNegInf, kPosInf); }

  bool empty() const {
    for (int i = 0; i < arity_; ++i)
      if (lo_[i] > hi_[i]) return true;
    return arity_ == 0;
  }

  bool contains(const ExponentVector& e) const {
    if (e.arity() != arity_) throw std::invalid_argument("window arity mismatch");
    for (int i = 0; i < arity_; ++i)
      if (e[i] < lo_[i] || e[i] > hi_[i]) return false;
    return true;
  }

  bool finite() const {
    if (empty()) return true;
    for (int i = 0; i < arity_; ++i)
      if (lo_[i] <= kNegInf || hi_[i] >= kPosInf) return false;
    return true;
  }

  Window intersect(const Window& b) const {
    require_same_arity(b);
    Window w;
    w.arity_ = arity_;
    for (int i = 0; i < arity_; ++i) {
      w.lo_[i] = std::max(lo_[i], b.lo_[i]);
      w.hi_[i] = std::min(hi_[i], b.hi_[i]);
    }
    return w;
  }

  Window hull(const Window& b) const {
    require_same_arity(b);
    if (empty()) return b;
    if (b.empty()) return *this;
    Window w;
    w.arity_ = arity_;
    for (int i = 0; i < arity_; ++i) {
      w.lo_[i] = std::min(lo_[i], b.lo_[i]);
      w.hi_[i] = std::max(hi_[i], b.hi_[i]);
    }
    return w;
  }

  Window minkowski(const Window& b) const {
    require_same_arity(b);
    if (empty() || b.empty()) return none(arity_);
    Window w;
    w.arity_ = arity_;
    for (int i = 0; i < arity_; ++i) {
      w.lo_[i] = sat_add(lo_[i], b.lo_[i]);
      w.hi_[i] = sat_add(hi_[i], b.hi_[i]);
    }
    return w;
  }

  // Expands (or creates) the box to contain e.
  void absorb(const ExponentVector& e) {
    if (empty()) {
      for (int i = 0; i < arity_; ++i) {
        lo_[i] = e[i];
        hi_[i] = e[i];
      }
      return;
    }
    for (int i = 0; i < arity_; ++i) {
      lo_[i] = std::min(lo_[i], e[i]);
      hi_[i] = std::max(hi_[i], e[i]);
    }
  }

  bool operator==(const Window& b) const {
    if (arity_ != b.arity_) return false;
    for (int i = 0; i < arity_; ++i)
      if (lo_[i] != b.lo_[i] || hi_[i] != b.hi_[i]) return false;
    return true;
  }

  void require_same_arity(const Window& b) const {
    if (arity_ != b.arity_) throw std::invalid_argument("window arity mismatch");
  }

  static std::int64_t sat_add(std::int64_t a, std::int64_t b) {
    if (a <= kNegInf || b <= kNegInf) {
      if (a >= kPosInf || b >= kPosInf) throw std::logic_error("inf - inf in window arithmetic");
      return kNegInf;
    }
    if (a >= kPosInf || b >= kPosInf) return kPosInf;
    return sat_clamp(a + b, kNegInf, kPosInf);
  }

  std::string str() const {
    auto bound = [](std::int64_t v) {
      if (v <= kNegInf) return std::string("-inf");
      if (v >= kPosInf) return std::string("+inf");
      return std::to_string(v);
    };
    std::string s = "[";
    for (int i = 0; i < arity_; ++i) {
      if (i) s += " x ";
      s += bound(lo_[i]) + ".." + bound(hi_[i]);
    }
    return s + "]";
  }

 private:
  int arity_ = 0;
  std::array<std::int64_t, kMaxArity> lo_{};
  std::array<std::int64_t, kMaxArity> hi_{};
};

// Laurent expansion region: a total order on the ring variables, outermost
// (most significant) first. A monomial is "small" iff its exponent vector is
// lexicographically positive in this order; 1/(1-mu) expands geometrically in
// mu when mu is small and in mu^-1 otherwise. The all-zero monomial is
// excluded by the geometric-factor invariant.
class ExpansionRegion {
 public:
  ExpansionRegion() = default;

  static ExpansionRegion natural(int arity) {
    std::vector<int> ord(arity);
    for (int i = 0; i < arity; ++i) ord[i] = i;
    return ExpansionRegion(ord);
  }

  explicit ExpansionRegion(const std::vector<int>& order) {
    arity_ = static_cast<int>(order.size());
    if (arity_ < 1 || arity_ > kMaxArity) throw std::invalid_argument("region arity must be 1..3");
    std::array<bool, kMaxArity> seen{};
    for (int a = 0; a < arity_; ++a) {
      int c = order[a];
      if (c < 0 || c >= arity_ || seen[c]) throw std::invalid_argument("region order must be a permutation");
      seen[c] = true;
      order_[a] = c;
    }
  }

  int arity() const { return arity_; }

  // Coordinate index at significance position `axis` (0 = outermost).
  int coordinate(int axis) const { return order_[axis]; }

  bool is_small(const ExponentVector& mu) const {
    if (mu.arity() != arity_) throw std::invalid_argument("region arity mismatch");
    for (int a = 0; a < arity_; ++a) {
      std::int64_t v = mu[order_[a]];
      if (v > 0) return true;
      if (v < 0) return false;
    }
    throw std::invalid_argument("cannot classify the unit monomial");
  }

  std::string str() const {
    std::string s;
    for (int a = 0; a < arity_; ++a) {
      if (a) s += ">";
      s += std::to_string(order_[a]);
    }
    return s;
  }

 private:
  int arity_ = 0;
  std::array<int, kMaxArity> order_{};
};

}  // namespace poinv
