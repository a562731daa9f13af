#pragma once

#include <cstdint>
#include <vector>

#include "poinv/exponent.hpp"
#include "poinv/kernels.hpp"
#include "poinv/series.hpp"

namespace poinv {

// One denominator factor (1 - mu)^multiplicity, mu a nonzero monomial.
struct GeometricFactor {
  ExponentVector mu;
  int multiplicity = 1;
};

// A Laurent-polynomial numerator over a multiset of geometric factors:
//   numerator * prod (1 - mu)^(-multiplicity).
// Expansion is deferred and region-dependent; see expand().
class FactoredRational {
 public:
  explicit FactoredRational(LaurentSeries numerator);

  void multiply_factor(const ExponentVector& mu, int multiplicity = 1);

  const LaurentSeries& numerator() const { return numerator_; }
  const std::vector<GeometricFactor>& denominator() const { return factors_; }
  int arity() const { return numerator_.arity(); }

  // Number of denominator factors counted with multiplicity.
  std::int64_t factor_count() const;

  // Per-coordinate exponent scaling (e.g. z -> z^2, p -> p^3).
  FactoredRational scaled_exponents(const std::vector<std::int64_t>& mult) const;

 private:
  LaurentSeries numerator_;
  std::vector<GeometricFactor> factors_;  // canonical: sorted, merged
};

// Truncated Laurent expansion of `r` on `window` under `region`.
//
// Small factors (mu lexicographically positive in the region order) expand as
// sum_{u>=0} mu^u; large factors are first rewritten through the exact
// identity 1/(1-mu) = -mu^-1/(1-mu^-1). Internal work-box bounds and
// expansion depths are derived from the window, the factor directions and a
// positive weight functional so that every coefficient inside the window is
// complete. Throws WindowError when the window is not finite.
LaurentSeries expand(const FactoredRational& r, const Window& window, const ExpansionRegion& region,
                     kernels::Backend backend = kernels::Backend::Auto);

// The fully expanded denominator polynomial prod (1 - mu)^multiplicity.
// Used by tests to multiply an expansion back against the numerator.
LaurentSeries expanded_denominator(const FactoredRational& r);

// Bounding box of the numerator after the large-factor rewrites prescribed
// by `region` (the monomial shifts mu^-multiplicity). Gives the natural
// lower window bounds for partial-fraction comparisons.
Window rewritten_numerator_box(const FactoredRational& r, const ExpansionRegion& region);

}  // namespace poinv
