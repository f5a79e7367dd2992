#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sigmac/bands.hpp"
#include "sigmac/types.hpp"

namespace sigmac {

/// Caps on the prime supply a constructive witness search may consume.
struct WitnessBudget {
    std::uint64_t sieve_limit = 10'000'000;
    std::uint64_t max_primes = 200'000;
};

enum class ZeroMembership { yes, no, undecidable_float };

/// Topological classification of the range R(c) = { sigma_c(n) : n in N }.
struct Classification {
    bool bounded;              ///< iff a < -1
    bool dense_in_plane;       ///< iff -1 <= a <= 0 and b != 0
    bool all_points_isolated;  ///< iff a > 0 or c = 0
    bool no_isolated_points;   ///< iff a <= 0 and c != 0
    ZeroMembership contains_zero;
    std::optional<PrimeMultiset> zero_witness; ///< present iff contains_zero == yes
};

/// Decide the classification. Zero membership is decided exactly only when
/// the exact symbolic form of c is supplied; a floating b with a = 0 yields
/// undecidable_float, since membership hinges on the rationality of
/// b log p / pi, which finite precision cannot see.
Classification classify(const ComplexExponent& c,
                        const std::optional<ExactExponent>& exact = std::nullopt);

/// The witness p^(2m-1) with sigma_c(p^(2m-1)) = 0 for c = i (ell/m) pi / log p.
/// Throws DomainError when q = ell/m is an even integer (no zero exists).
PrimeMultiset zero_witness(const ExactExponent& exact);

/// A squarefree integer N with |sigma_c(N)| > M, built from ascending primes
/// (b = 0) or ascending G-band primes (b != 0). Requires a >= -1.
PrimeMultiset unbounded_witness(const ComplexExponent& c, double M, const WitnessBudget& budget);
PrimeMultiset unbounded_witness(const ComplexExponent& c, double M, const WitnessBudget& budget,
                                const Sieve& sieve);

struct NeighborWitness {
    std::uint64_t q;    ///< smallest prime > n with q^a |sigma_c(n)| < eps
    double error;       ///< the exact distance |sigma_c(qn) - sigma_c(n)| = q^a |sigma_c(n)|
};

/// The neighbor construction showing sigma_c(n) is not isolated when a < 0.
NeighborWitness isolated_neighbor(std::uint64_t n, const ComplexExponent& c, double eps,
                                  const Sieve& sieve);

/// The complete, finite list of m with |sigma_c(m)| < D for a > 0, found by
/// depth-first search over admissible prime powers with the per-prime lower
/// bound p^a - 1 as pruning.
std::vector<std::uint64_t> small_modulus_enumerate(const ComplexExponent& c, double D);

/// prod_{p < 2^(1/a)} (p^a - 1), the universal lower bound on |sigma_c| for a > 0.
double lower_bound_positive_a(const ComplexExponent& c);

} // namespace sigmac
