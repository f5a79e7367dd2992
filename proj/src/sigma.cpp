#include "sigmac/sigma.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <thread>

namespace sigmac {

namespace {

// Primes up to 1e6, enough to trial-divide anything under kFactorizeLimit.
const std::vector<std::uint32_t>& trial_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        const std::uint32_t limit = 1'000'000;
        std::vector<bool> composite(limit + 1, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i <= limit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= limit; j += i)
                composite[static_cast<std::uint32_t>(j)] = true;
        }
        return out;
    }();
    return primes;
}

} // namespace

Factorization factorize(std::uint64_t n) {
    if (n == 0) throw DomainError("factorize: n must be positive");
    if (n > kFactorizeLimit) throw DomainError("factorize: n exceeds the 1e12 limit");
    Factorization f;
    f.n = n;
    std::uint64_t rest = n;
    for (std::uint32_t p : trial_primes()) {
        if (static_cast<std::uint64_t>(p) * p > rest) break;
        if (rest % p != 0) continue;
        std::uint32_t e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        f.factors.push_back({p, e});
    }
    if (rest > 1) {
        // No factor below 1e6 and rest <= 1e12, so rest is prime; check anyway.
        if (!is_prime(rest)) throw ResourceError("factorize: cofactor unexpectedly composite");
        f.factors.push_back({rest, 1});
    }
    return f;
}

Complex complex_power(double x, const ComplexExponent& c) {
    if (!(x > 0.0)) throw DomainError("complex_power: base must be positive");
    const double lx = std::log(x);
    return std::polar(std::pow(x, c.a), c.b * lx);
}

Complex sigma_prime_power(std::uint64_t p, std::uint32_t alpha, const ComplexExponent& c) {
    if (alpha == 0) throw DomainError("sigma_prime_power: alpha must be positive");
    const double pd = static_cast<double>(p);
    const Complex pc = complex_power(pd, c);
    if (alpha == 1) return 1.0 + pc;
    if (std::abs(pc - 1.0) < kGeomTolerance) {
        // Near a root of unity the closed form divides by almost zero.
        Complex sum = 1.0;
        Complex term = 1.0;
        for (std::uint32_t i = 0; i < alpha; ++i) {
            term *= pc;
            sum += term;
        }
        return sum;
    }
    const ComplexExponent top(c.a * (alpha + 1.0), c.b * (alpha + 1.0));
    return (complex_power(pd, top) - 1.0) / (pc - 1.0);
}

Complex sigma(std::uint64_t n, const ComplexExponent& c) {
    Complex out = 1.0;
    for (const auto& pp : factorize(n).factors)
        out *= sigma_prime_power(pp.prime, pp.exponent, c);
    return out;
}

Complex sigma_direct(std::uint64_t n, const ComplexExponent& c) {
    if (n == 0) throw DomainError("sigma_direct: n must be positive");
    if (n > kDirectLimit) throw DomainError("sigma_direct: n exceeds the enumeration limit");
    std::vector<std::uint64_t> divisors;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        divisors.push_back(d);
        if (d != n / d) divisors.push_back(n / d);
    }
    std::sort(divisors.begin(), divisors.end());
    Complex out = 0.0;
    for (std::uint64_t d : divisors)
        out += complex_power(static_cast<double>(d), c);
    return out;
}

Complex sigma_of_multiset(const PrimeMultiset& ms, const ComplexExponent& c) {
    Complex out = 1.0;
    for (const auto& pp : ms.entries())
        out *= sigma_prime_power(pp.prime, pp.exponent, c);
    return out;
}

std::vector<std::uint32_t> smallest_factor_table(std::uint32_t n_max) {
    std::vector<std::uint32_t> spf(static_cast<std::size_t>(n_max) + 1, 0);
    for (std::uint32_t i = 2; i <= n_max; ++i) {
        if (spf[i] != 0) continue;
        for (std::uint64_t j = i; j <= n_max; j += i)
            if (spf[j] == 0) spf[j] = i;
    }
    return spf;
}

std::vector<Complex> sigma_range(std::uint64_t n_max, const ComplexExponent& c, unsigned threads) {
    if (n_max == 0) throw DomainError("sigma_range: n_max must be positive");
    if (n_max > 100'000'000ULL) throw ResourceError("sigma_range: n_max above 1e8");
    const auto spf = smallest_factor_table(static_cast<std::uint32_t>(n_max));
    std::vector<Complex> out(n_max);
    out[0] = 1.0;

    auto worker = [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t n = lo; n < hi; ++n) {
            std::uint64_t rest = n;
            Complex v = 1.0;
            while (rest > 1) {
                const std::uint64_t p = spf[rest];
                std::uint32_t e = 0;
                while (rest % p == 0) {
                    rest /= p;
                    ++e;
                }
                v *= sigma_prime_power(p, e, c);
            }
            out[n - 1] = v;
        }
    };

    unsigned nt = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    nt = std::min<unsigned>(nt, 16);
    if (nt <= 1 || n_max < 4096) {
        worker(2, n_max + 1);
        return out;
    }
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (n_max - 1) / nt + 1;
    for (unsigned t = 0; t < nt; ++t) {
        const std::uint64_t lo = 2 + t * chunk;
        const std::uint64_t hi = std::min<std::uint64_t>(n_max + 1, lo + chunk);
        if (lo < hi) pool.emplace_back(worker, lo, hi);
    }
    for (auto& th : pool) th.join();
    return out;
}

} // namespace sigmac
