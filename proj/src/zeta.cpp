#include "sigmac/zeta.hpp"

#include <cmath>
#include <limits>

namespace sigmac {

namespace {

// Remainder of sum_{k<=K} k^{-s} + K^{1-s}/(s-1) against zeta(s).
double tail_remainder_bound(double abs_s, double sigma, double k) {
    return 0.5 * abs_s * (std::pow(k, -sigma - 1.0) + std::pow(k, -sigma) / sigma);
}

} // namespace

ZetaResult zeta(Complex s, double tol) {
    if (!(tol > 0.0)) throw DomainError("zeta: tolerance must be positive");
    const double sigma = s.real();
    const double t = s.imag();
    const double abs_s = std::abs(s);
    if (!(sigma > 1.01)) {
        const double needed = std::pow(abs_s / (sigma > 1.0 ? (sigma - 1.0) * tol : tol),
                                       1.0 / std::max(sigma - 1.0, 1e-12));
        throw ConvergenceError("zeta: Re(s) too close to 1 for direct summation", needed);
    }

    const double budget = 0.5 * tol;
    std::uint64_t K = 32;
    const std::uint64_t K_cap = 1ULL << 27;
    while (tail_remainder_bound(abs_s, sigma, static_cast<double>(K)) > budget) {
        if (K >= K_cap) {
            const double needed = std::pow(abs_s / (sigma * budget), 1.0 / sigma);
            throw ConvergenceError("zeta: tolerance unreachable at the summation cap", needed);
        }
        K *= 2;
    }

    // Kahan-compensated ascending-magnitude summation (k = K .. 1).
    double re = 0.0, re_c = 0.0, im = 0.0, im_c = 0.0, abs_sum = 0.0;
    for (std::uint64_t k = K; k >= 1; --k) {
        const double lk = std::log(static_cast<double>(k));
        const double mag = std::exp(-sigma * lk);
        const double ang = -t * lk;
        const double tr = mag * std::cos(ang);
        const double ti = mag * std::sin(ang);
        double y = tr - re_c;
        double s1 = re + y;
        re_c = (s1 - re) - y;
        re = s1;
        y = ti - im_c;
        s1 = im + y;
        im_c = (s1 - im) - y;
        im = s1;
        abs_sum += mag;
    }
    const Complex one_minus_s = Complex(1.0, 0.0) - s;
    const Complex tail = std::exp(one_minus_s * std::log(static_cast<double>(K))) / (s - 1.0);
    const Complex value = Complex(re, im) + tail;

    const double eps = std::numeric_limits<double>::epsilon();
    const double fp_slack = 8.0 * eps * (abs_sum + std::abs(tail));
    const double err = tail_remainder_bound(abs_s, sigma, static_cast<double>(K)) + fp_slack;
    return {value, err};
}

CertifiedReal zeta_real(double s, double tol) {
    const ZetaResult z = zeta(Complex(s, 0.0), tol);
    return {z.value.real(), z.error};
}

} // namespace sigmac
