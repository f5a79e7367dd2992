#pragma once

#include <cstdint>
#include <vector>

#include "sigmac/types.hpp"

namespace sigmac {

/// Largest n accepted by factorize(). Trial division by primes up to 1e6
/// leaves a cofactor that is provably prime below this limit.
inline constexpr std::uint64_t kFactorizeLimit = 1'000'000'000'000ULL;

/// Largest n accepted by the divisor-enumeration oracle sigma_direct().
inline constexpr std::uint64_t kDirectLimit = 10'000'000ULL;

/// Threshold on |p^c - 1| below which the geometric closed form of
/// sigma_prime_power is abandoned for the explicit (alpha+1)-term sum.
inline constexpr double kGeomTolerance = 1e-6;

/// Prime factorization by trial division; factorize(1) is the empty list.
Factorization factorize(std::uint64_t n);

/// x^c = x^a * e^{i b log x} for x > 0.
Complex complex_power(double x, const ComplexExponent& c);

/// sigma_c(p^alpha) = 1 + p^c + ... + p^{alpha c}, via the geometric closed
/// form when |p^c - 1| >= kGeomTolerance and the explicit sum otherwise.
Complex sigma_prime_power(std::uint64_t p, std::uint32_t alpha, const ComplexExponent& c);

/// sigma_c(n), evaluated multiplicatively over the prime factorization.
Complex sigma(std::uint64_t n, const ComplexExponent& c);

/// The brute-force oracle: enumerate every divisor of n up to sqrt(n) and
/// sum d^c directly. Deliberately independent of the multiplicative path.
Complex sigma_direct(std::uint64_t n, const ComplexExponent& c);

/// sigma_c of a factored integer that may not be materializable.
Complex sigma_of_multiset(const PrimeMultiset& ms, const ComplexExponent& c);

/// Smallest prime factor of every integer in [0, n_max]; entries 0 and 1 are 0.
std::vector<std::uint32_t> smallest_factor_table(std::uint32_t n_max);

/// sigma_c(n) for every n in [1, n_max], index i holding sigma_c(i + 1).
/// Partitioned across `threads` workers (0 = hardware choice) over a shared
/// smallest-prime-factor table.
std::vector<Complex> sigma_range(std::uint64_t n_max, const ComplexExponent& c,
                                 unsigned threads = 0);

} // namespace sigmac
