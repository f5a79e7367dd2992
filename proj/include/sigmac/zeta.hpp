#pragma once

#include "sigmac/types.hpp"

namespace sigmac {

struct ZetaResult {
    Complex value;
    double error = 0.0; ///< absolute bound, truncation plus rounding
};

/// zeta(s) for Re(s) > 1.01 by direct summation of k^{-s} up to K plus the
/// integral tail K^{1-s}/(s-1). The remainder after the tail correction is
/// bounded by (|s|/2) * (K^{-sigma-1} + K^{-sigma}/sigma); K is grown until
/// that bound (plus rounding slack) is at most tol.
///
/// Throws ConvergenceError with the required summation length when Re(s) is
/// too close to 1 for tol to be reachable.
ZetaResult zeta(Complex s, double tol = 1e-12);

/// Real-argument convenience wrapper.
CertifiedReal zeta_real(double s, double tol = 1e-12);

} // namespace sigmac
