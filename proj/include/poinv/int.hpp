#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace poinv {

// Exact coefficient domain. Every series in this library has integer
// coefficients and all denominators are deferred as geometric factors,
// so no division and no rounding happen anywhere in the core.
using Int = mpz_class;

inline bool fits_int64(const Int& v) { return v.fits_slong_p(); }

inline std::string to_decimal(const Int& v) { return v.get_str(); }

}  // namespace poinv
