#include "sigmac/types.hpp"

#include <cmath>
#include <numeric>

namespace sigmac {

namespace {

std::uint64_t mulmod(std::uint64_t x, std::uint64_t y, std::uint64_t mod) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(x) * y % mod);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t result = 1;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, mod);
        base = mulmod(base, base, mod);
        exp >>= 1;
    }
    return result;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // Deterministic witness set for the full 64-bit range.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < r - 1; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

ComplexExponent::ComplexExponent(double re, double im) : a(re), b(im) {
    if (!std::isfinite(re) || !std::isfinite(im))
        throw DomainError("exponent parts must be finite");
}

ExactExponent::ExactExponent(std::uint64_t prime, std::int64_t numer, std::uint64_t denom)
    : p(prime), ell(numer), m(denom) {
    if (m == 0) throw DomainError("exact exponent denominator must be positive");
    if (!is_prime(p)) throw DomainError("exact exponent base must be prime");
    std::uint64_t g = std::gcd(static_cast<std::uint64_t>(ell < 0 ? -ell : ell), m);
    if (g > 1) {
        ell /= static_cast<std::int64_t>(g);
        m /= g;
    }
}

double ExactExponent::b_value() const {
    const double pi = 3.14159265358979323846;
    return q() * pi / std::log(static_cast<double>(p));
}

PrimeMultiset::PrimeMultiset(std::vector<PrimePower> entries) : entries_(std::move(entries)) {
    std::uint64_t last = 0;
    for (const auto& pp : entries_) {
        if (pp.prime <= last) throw DomainError("multiset primes must be strictly increasing");
        if (pp.exponent == 0) throw DomainError("multiset exponents must be positive");
        if (pp.exponent > 1) squarefree_ = false;
        last = pp.prime;
    }
}

bool PrimeMultiset::contains(std::uint64_t prime) const {
    for (const auto& pp : entries_)
        if (pp.prime == prime) return true;
    return false;
}

void PrimeMultiset::push_back(PrimePower pp) {
    if (!entries_.empty() && pp.prime <= entries_.back().prime)
        throw DomainError("multiset primes must be appended in increasing order");
    if (pp.exponent == 0) throw DomainError("multiset exponents must be positive");
    if (pp.exponent > 1) squarefree_ = false;
    entries_.push_back(pp);
}

std::optional<std::uint64_t> PrimeMultiset::materialize() const {
    unsigned __int128 n = 1;
    const unsigned __int128 cap = ~static_cast<std::uint64_t>(0);
    for (const auto& pp : entries_) {
        for (std::uint32_t i = 0; i < pp.exponent; ++i) {
            n *= pp.prime;
            if (n > cap) return std::nullopt;
        }
    }
    return static_cast<std::uint64_t>(n);
}

std::string PrimeMultiset::to_string() const {
    if (entries_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += '*';
        out += std::to_string(entries_[i].prime);
        out += '^';
        out += std::to_string(entries_[i].exponent);
    }
    return out;
}

const char* to_string(Tristate t) {
    switch (t) {
    case Tristate::yes: return "true";
    case Tristate::no: return "false";
    default: return "indeterminate";
    }
}

} // namespace sigmac
