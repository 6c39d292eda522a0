#pragma once

/**
 * @file factor.hpp
 * @brief Integer factorization and square-free decomposition.
 *
 * Strategy: trial division up to a configurable bound, then Brent-cycle
 * Pollard rho with an iteration cap, with a Miller-Rabin primality test on
 * every cofactor. A composite cofactor surviving the cap is a hard error
 * (FactorizationIncomplete) -- a wrong factorization is never returned.
 */

#include <utility>
#include <vector>

#include "dioforge/rat.hpp"

namespace dioforge {

struct FactorConfig {
    /// Trial division bound; overridable via DIOFORGE_FACTOR_BOUND.
    unsigned long trial_bound = 1'000'000;
    /// Total rho iteration budget per factorize() call.
    unsigned long rho_max_iters = 10'000'000;
};

/// Default configuration, with DIOFORGE_FACTOR_BOUND applied if set.
const FactorConfig& default_factor_config();

/// Deterministic Miller-Rabin below 3.3e24 (strong-pseudoprime base set
/// 2..41); 64 fixed prime bases above that.
bool is_prime(const Int& n);

struct Factorization {
    int sign = 1;                                   // +1 or -1
    std::vector<std::pair<Int, unsigned>> factors;  // (prime, exponent), primes increasing

    Int reconstruct() const;
};

/// Complete prime factorization of n != 0.
/// Throws FactorizationIncomplete when the rho budget is exhausted with a
/// composite cofactor left.
Factorization factorize(const Int& n, const FactorConfig& cfg = default_factor_config());

/// n = q_sf * w^2 with q_sf square-free, sign(q_sf) = sign(n), w >= 1.
std::pair<Int, Int> squarefree_decompose(const Int& n,
                                         const FactorConfig& cfg = default_factor_config());

} // namespace dioforge
