#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sigmac/types.hpp"

namespace sigmac {

/// Principal angle: reduces t modulo 2*pi into (-pi, pi].
double wrap_angle(double t);

/// All primes up to a fixed limit, immutable and shareable once built.
class Sieve {
public:
    explicit Sieve(std::uint64_t limit);

    std::uint64_t limit() const { return limit_; }
    const std::vector<std::uint64_t>& primes() const { return primes_; }
    bool is_prime(std::uint64_t n) const;

    /// Sieved primes p with lo <= p <= hi (closed interval).
    std::span<const std::uint64_t> in_range(double lo, double hi) const;

private:
    std::uint64_t limit_;
    std::vector<std::uint64_t> primes_;
};

/// Factory matching the operation vocabulary; caps at 1e9.
Sieve primes_up_to(std::uint64_t limit);

enum class BandKind { G, H, J };

/// One interval of the band families where arg(x^c) is pinned near 0 (G),
/// near +-pi (H), or inside [pi/4, 3pi/4] (J).
struct BandFamily {
    BandKind kind;
    double b;    ///< imaginary part of the exponent, positive
    double beta; ///< half-width in (0, pi/4); ignored for J
    int k;       ///< band index, k >= 0 (G, J) or k >= 1 (H)

    BandFamily(BandKind kind, double b, double beta, int k);
};

struct Interval {
    double lo;
    double hi;
};

/// Exact endpoints of the band's interval on the positive reals.
Interval band_interval(const BandFamily& fam);

/// Sieved primes inside the (closed) band interval.
/// Throws CoverageError naming the required limit when the band
/// extends past the sieve.
std::vector<std::uint64_t> primes_in_band(const Sieve& sieve, const BandFamily& fam);

/// Principal argument of x^c; depends only on b * log x.
double arg_of_power(double x, const ComplexExponent& c);

/// log |1 + p^c|. Returns -infinity when 1 + p^c is exactly zero in
/// floating arithmetic (only reachable through exact-exponent inputs).
double log_abs_one_plus_power(std::uint64_t p, const ComplexExponent& c);

/// Partial sum over all band primes <= x: log|1 + p^c| terms for G and H,
/// 1/p terms for J, accumulated in ascending prime order.
double band_partial_sum(const Sieve& sieve, BandKind kind, const ComplexExponent& c,
                        double beta, double x);

/// Smallest prime p >= min_prime with |wrap(b log p - phi)| < eps.
/// Searches window-by-window; throws CoverageError with the next window
/// bounds when the sieve runs out.
std::uint64_t prime_with_arg(double b, double phi, double eps, std::uint64_t min_prime,
                             const Sieve& sieve);

struct MertensWindow {
    double lhs;
    double rhs;
    bool holds;
};

/// Product of (1 - 1/p) over primes in [y, x] against log y/log x + 2/log^2 y.
MertensWindow mertens_window_check(double y, double x, const Sieve& sieve);

/// Ascending primes whose argument b*log p lies in [t_lo + 2 pi k, t_hi + 2 pi k]
/// for band indices k >= k_min. Drives the greedy constructions.
class ArgBandCursor {
public:
    ArgBandCursor(const Sieve& sieve, double b, double t_lo, double t_hi,
                  std::int64_t k_min, std::uint64_t start_prime);

    /// Next band prime, or nullopt once the sieve is exhausted.
    std::optional<std::uint64_t> next();

    /// Upper endpoint of the first band lying beyond the sieve limit.
    double next_band_start() const;

private:
    void load_band();

    const Sieve* sieve_;
    double b_, t_lo_, t_hi_;
    std::int64_t k_;
    std::span<const std::uint64_t> band_;
    std::size_t idx_ = 0;
    bool exhausted_ = false;
    std::uint64_t start_prime_;
};

} // namespace sigmac
