#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sigmac/errors.hpp"

namespace sigmac {

using Complex = std::complex<double>;

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// The exponent c = a + bi of the divisor function sigma_c.
struct ComplexExponent {
    double a = 0.0; ///< real part
    double b = 0.0; ///< imaginary part

    ComplexExponent() = default;
    ComplexExponent(double re, double im);

    ComplexExponent conj() const { return ComplexExponent(a, -b); }
    bool is_zero() const { return a == 0.0 && b == 0.0; }
};

/// Purely imaginary exponent in the symbolic form c = i * (ell/m) * pi / log p,
/// the only form in which zero membership of the range is decidable.
/// Stored reduced: gcd(|ell|, m) == 1 and m >= 1.
struct ExactExponent {
    std::uint64_t p;  ///< prime
    std::int64_t ell; ///< numerator of q
    std::uint64_t m;  ///< denominator of q, positive

    ExactExponent(std::uint64_t prime, std::int64_t numer, std::uint64_t denom);

    /// q = ell / m as a double.
    double q() const { return static_cast<double>(ell) / static_cast<double>(m); }
    /// The floating value of the imaginary part b = q * pi / log p.
    double b_value() const;
    /// True when q is an even integer (the excluded case of the zero criterion).
    bool q_is_even_integer() const { return m == 1 && ell % 2 == 0; }
    /// The floating exponent this symbol denotes.
    ComplexExponent to_floating() const { return ComplexExponent(0.0, b_value()); }
};

struct PrimePower {
    std::uint64_t prime;
    std::uint32_t exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization of a materialized integer n.
struct Factorization {
    std::vector<PrimePower> factors; ///< strictly increasing primes, exponents >= 1
    std::uint64_t n = 1;             ///< the represented integer
};

/// A factored integer that is never materialized; constructed witnesses
/// routinely exceed the 64-bit range.
class PrimeMultiset {
public:
    PrimeMultiset() = default;
    explicit PrimeMultiset(std::vector<PrimePower> entries);

    const std::vector<PrimePower>& entries() const { return entries_; }
    bool squarefree() const { return squarefree_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    /// True when `prime` already occurs.
    bool contains(std::uint64_t prime) const;
    /// Append a prime power above the current largest prime.
    void push_back(PrimePower pp);

    /// The integer product, when it fits in 64 bits.
    std::optional<std::uint64_t> materialize() const;
    /// Display form "2^1*3^5".
    std::string to_string() const;

private:
    std::vector<PrimePower> entries_;
    bool squarefree_ = true;
};

/// A computed value paired with a rigorous absolute error bound:
/// the true quantity lies in [value - error, value + error].
struct CertifiedReal {
    double value = 0.0;
    double error = 0.0;

    double lower() const { return value - error; }
    double upper() const { return value + error; }
};

/// Outcome of a strict inequality decided through certified values.
enum class Tristate { no, yes, indeterminate };

const char* to_string(Tristate t);

} // namespace sigmac
