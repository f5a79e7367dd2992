#include "sigmac/bands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace sigmac {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
} // namespace

double wrap_angle(double t) {
    double r = std::remainder(t, kTwoPi);
    if (r <= -kPi) r += kTwoPi;
    return r;
}

Sieve::Sieve(std::uint64_t limit) : limit_(limit) {
    if (limit > 1'000'000'000ULL) throw ResourceError("sieve limit above 1e9");
    if (limit >= 2) primes_.push_back(2);
    if (limit < 3) return;
    // Odd-only Eratosthenes: bit i stands for 2i+1.
    const std::uint64_t half = (limit - 1) / 2 + 1;
    std::vector<std::uint64_t> words((half + 63) / 64, 0);
    auto set = [&](std::uint64_t i) { words[i >> 6] |= 1ULL << (i & 63); };
    auto test = [&](std::uint64_t i) { return (words[i >> 6] >> (i & 63)) & 1ULL; };
    for (std::uint64_t n = 3; n * n <= limit; n += 2) {
        if (test((n - 1) / 2)) continue;
        for (std::uint64_t m = n * n; m <= limit; m += 2 * n)
            set((m - 1) / 2);
    }
    for (std::uint64_t i = 1; i < half; ++i)
        if (!test(i)) primes_.push_back(2 * i + 1);
}

bool Sieve::is_prime(std::uint64_t n) const {
    return std::binary_search(primes_.begin(), primes_.end(), n);
}

std::span<const std::uint64_t> Sieve::in_range(double lo, double hi) const {
    if (!(lo <= hi)) return {};
    auto first = std::lower_bound(primes_.begin(), primes_.end(), lo,
                                  [](std::uint64_t p, double v) { return static_cast<double>(p) < v; });
    auto last = std::upper_bound(first, primes_.end(), hi,
                                 [](double v, std::uint64_t p) { return v < static_cast<double>(p); });
    return {std::to_address(first), static_cast<std::size_t>(last - first)};
}

Sieve primes_up_to(std::uint64_t limit) { return Sieve(limit); }

BandFamily::BandFamily(BandKind kind_, double b_, double beta_, int k_)
    : kind(kind_), b(b_), beta(beta_), k(k_) {
    if (!(b > 0.0)) throw DomainError("band: b must be positive");
    if (kind != BandKind::J && !(beta > 0.0 && beta < kPi / 4.0))
        throw DomainError("band: beta must lie in (0, pi/4)");
    if (k < (kind == BandKind::H ? 1 : 0)) throw DomainError("band: index out of range");
}

Interval band_interval(const BandFamily& fam) {
    double center;
    double half;
    switch (fam.kind) {
    case BandKind::G:
        center = 2.0 * fam.k * kPi;
        half = fam.beta;
        break;
    case BandKind::H:
        center = (2.0 * fam.k - 1.0) * kPi;
        half = fam.beta;
        break;
    default: // J
        return {std::exp((2.0 * fam.k + 0.25) * kPi / fam.b),
                std::exp((2.0 * fam.k + 0.75) * kPi / fam.b)};
    }
    return {std::exp((center - half) / fam.b), std::exp((center + half) / fam.b)};
}

std::vector<std::uint64_t> primes_in_band(const Sieve& sieve, const BandFamily& fam) {
    const Interval iv = band_interval(fam);
    if (iv.hi > static_cast<double>(sieve.limit()))
        throw CoverageError("band extends past the sieve; need limit >= " +
                                std::to_string(iv.hi),
                            iv.hi);
    auto span = sieve.in_range(iv.lo, iv.hi);
    return {span.begin(), span.end()};
}

double arg_of_power(double x, const ComplexExponent& c) {
    if (!(x > 0.0)) throw DomainError("arg_of_power: x must be positive");
    return wrap_angle(c.b * std::log(x));
}

double log_abs_one_plus_power(std::uint64_t p, const ComplexExponent& c) {
    if (!is_prime(p)) throw DomainError("log_abs_one_plus_power: p must be prime");
    const double lp = std::log(static_cast<double>(p));
    const double mag = std::exp(c.a * lp);
    const double ang = c.b * lp;
    const double re = 1.0 + mag * std::cos(ang);
    const double im = mag * std::sin(ang);
    const double m = std::hypot(re, im);
    if (m == 0.0) return -std::numeric_limits<double>::infinity();
    return std::log(m);
}

double band_partial_sum(const Sieve& sieve, BandKind kind, const ComplexExponent& c,
                        double beta, double x) {
    if (x > static_cast<double>(sieve.limit()))
        throw CoverageError("partial sum bound exceeds the sieve; need limit >= " +
                                std::to_string(x),
                            x);
    if (!(c.b > 0.0)) throw DomainError("band_partial_sum: requires b > 0");
    if (kind == BandKind::G && !(c.a >= -1.0))
        throw DomainError("band_partial_sum: G sums require a >= -1");
    if (kind == BandKind::H && !(c.a >= -1.0 && c.a < 0.0))
        throw DomainError("band_partial_sum: H sums require -1 <= a < 0");

    double sum = 0.0;
    for (int k = (kind == BandKind::H ? 1 : 0);; ++k) {
        const BandFamily fam(kind, c.b, kind == BandKind::J ? 0.0 : beta, k);
        const Interval iv = band_interval(fam);
        if (iv.lo > x) break;
        for (std::uint64_t p : sieve.in_range(iv.lo, std::min(iv.hi, x))) {
            if (kind == BandKind::J)
                sum += 1.0 / static_cast<double>(p);
            else
                sum += log_abs_one_plus_power(p, c);
        }
    }
    return sum;
}

std::uint64_t prime_with_arg(double b, double phi, double eps, std::uint64_t min_prime,
                             const Sieve& sieve) {
    if (!(b > 0.0)) throw DomainError("prime_with_arg: b must be positive");
    if (!(eps > 0.0)) throw DomainError("prime_with_arg: eps must be positive");
    phi = wrap_angle(phi);
    min_prime = std::max<std::uint64_t>(min_prime, 2);

    auto matches = [&](std::uint64_t p) {
        return std::abs(wrap_angle(b * std::log(static_cast<double>(p)) - phi)) < eps;
    };
    if (eps >= kPi) {
        auto span = sieve.in_range(static_cast<double>(min_prime),
                                   static_cast<double>(sieve.limit()));
        if (!span.empty()) return span.front();
        throw CoverageError("prime_with_arg: sieve holds no prime above min_prime",
                            static_cast<double>(min_prime));
    }

    // Window n holds the reals with b log x in (phi - eps + 2 pi n, phi + eps + 2 pi n).
    auto window = [&](std::int64_t n) {
        return Interval{std::exp((phi - eps + kTwoPi * n) / b),
                        std::exp((phi + eps + kTwoPi * n) / b)};
    };
    std::int64_t n = static_cast<std::int64_t>(
        std::ceil((b * std::log(static_cast<double>(min_prime)) - phi - eps) / kTwoPi));
    for (;; ++n) {
        const Interval w = window(n);
        if (w.lo > static_cast<double>(sieve.limit()))
            throw CoverageError("prime_with_arg: next window [" + std::to_string(w.lo) + ", " +
                                    std::to_string(w.hi) + "] lies beyond the sieve",
                                w.hi);
        const double lo = std::max(w.lo, static_cast<double>(min_prime));
        for (std::uint64_t p : sieve.in_range(lo, w.hi))
            if (matches(p)) return p;
        if (w.hi > static_cast<double>(sieve.limit()))
            throw CoverageError("prime_with_arg: window [" + std::to_string(w.lo) + ", " +
                                    std::to_string(w.hi) + "] is not fully sieved",
                                w.hi);
    }
}

MertensWindow mertens_window_check(double y, double x, const Sieve& sieve) {
    if (!(y >= 285.0 && y < x)) throw DomainError("mertens_window_check: need 285 <= y < x");
    if (x > static_cast<double>(sieve.limit()))
        throw CoverageError("mertens_window_check: x exceeds the sieve", x);
    double lhs = 1.0;
    for (std::uint64_t p : sieve.in_range(y, x))
        lhs *= 1.0 - 1.0 / static_cast<double>(p);
    const double ly = std::log(y);
    const double rhs = ly / std::log(x) + 2.0 / (ly * ly);
    return {lhs, rhs, lhs < rhs};
}

ArgBandCursor::ArgBandCursor(const Sieve& sieve, double b, double t_lo, double t_hi,
                             std::int64_t k_min, std::uint64_t start_prime)
    : sieve_(&sieve), b_(b), t_lo_(t_lo), t_hi_(t_hi), start_prime_(start_prime) {
    if (!(b > 0.0)) throw DomainError("band cursor: b must be positive");
    if (!(t_hi > t_lo) || t_hi - t_lo >= kTwoPi)
        throw DomainError("band cursor: window must have width in (0, 2 pi)");
    const double ls = std::log(static_cast<double>(std::max<std::uint64_t>(start_prime, 2)));
    k_ = std::max(k_min, static_cast<std::int64_t>(std::ceil((b_ * ls - t_hi_) / kTwoPi)));
    load_band();
}

void ArgBandCursor::load_band() {
    for (;; ++k_) {
        const double lo = std::exp((t_lo_ + kTwoPi * k_) / b_);
        const double hi = std::exp((t_hi_ + kTwoPi * k_) / b_);
        if (lo > static_cast<double>(sieve_->limit())) {
            exhausted_ = true;
            band_ = {};
            return;
        }
        band_ = sieve_->in_range(std::max(lo, static_cast<double>(start_prime_)), hi);
        idx_ = 0;
        if (!band_.empty()) return;
    }
}

std::optional<std::uint64_t> ArgBandCursor::next() {
    if (exhausted_) return std::nullopt;
    while (idx_ >= band_.size()) {
        ++k_;
        load_band();
        if (exhausted_) return std::nullopt;
    }
    return band_[idx_++];
}

double ArgBandCursor::next_band_start() const {
    return std::exp((t_lo_ + kTwoPi * k_) / b_);
}

} // namespace sigmac
