#include "dioforge/factor.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace dioforge {

const FactorConfig& default_factor_config() {
    static const FactorConfig cfg = [] {
        FactorConfig c;
        if (const char* env = std::getenv("DIOFORGE_FACTOR_BOUND")) {
            char* end = nullptr;
            unsigned long v = std::strtoul(env, &end, 10);
            if (end && *end == '\0' && v >= 2) c.trial_bound = v;
        }
        return c;
    }();
    return cfg;
}

namespace {

// Below this bound, Miller-Rabin with bases 2..41 (the first 13 primes)
// is a proof of primality.
const Int kDeterministicBound("3317044064679887385961981");

constexpr int kSmallBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, unsigned long s) {
    Int x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;  // a witnesses compositeness
}

} // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (int p : kSmallBases) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    // n - 1 = d * 2^s
    Int d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    if (n < kDeterministicBound) {
        for (int a : kSmallBases)
            if (miller_rabin_witness(n, Int(a), d, s)) return false;
        return true;
    }
    // 64 rounds with the first 64 primes as bases.
    Int a = 1;
    for (int round = 0; round < 64; ++round) {
        mpz_nextprime(a.get_mpz_t(), a.get_mpz_t());
        if (miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

namespace {

// Brent's cycle variant of Pollard rho with batched gcds. Returns a
// nontrivial factor of composite n, or 0 when the budget runs out.
// `budget` bounds the total number of x -> x^2+c steps and is decremented
// in place.
Int pollard_rho_brent(const Int& n, unsigned long& budget) {
    const unsigned long batch = 128;
    for (unsigned long c = 1; budget > 0; ++c) {
        Int y = 2, q = 1, g = 1, x, ys;
        unsigned long r = 1;
        while (g == 1 && budget > 0) {
            x = y;
            for (unsigned long i = 0; i < r && budget > 0; ++i, --budget)
                y = (y * y + c) % n;
            for (unsigned long k = 0; k < r && g == 1 && budget > 0; k += batch) {
                ys = y;
                unsigned long steps = std::min({batch, r - k, budget});
                for (unsigned long i = 0; i < steps; ++i) {
                    y = (y * y + c) % n;
                    q = (q * abs(x - y)) % n;
                }
                budget -= steps;
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            r *= 2;
        }
        if (g == n) {
            // gcd batch overshot the cycle; replay one step at a time
            g = 1;
            while (g == 1 && budget > 0) {
                ys = (ys * ys + c) % n;
                --budget;
                mpz_gcd(g.get_mpz_t(), Int(abs(x - ys)).get_mpz_t(), n.get_mpz_t());
            }
        }
        if (g != 1 && g != n) return g;
        // this polynomial degenerated; retry with the next c
    }
    return 0;
}

} // namespace

Int Factorization::reconstruct() const {
    Int v = sign;
    for (const auto& [p, e] : factors) {
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        v *= pe;
    }
    return v;
}

Factorization factorize(const Int& n, const FactorConfig& cfg) {
    if (n == 0) raise(Errc::excluded_parameter, "factorize(0)");
    Factorization out;
    out.sign = sgn(n) < 0 ? -1 : 1;
    Int m = abs(n);
    std::map<Int, unsigned> acc;

    // trial division
    for (unsigned long d = 2; d <= cfg.trial_bound && Int(d) * d <= m;
         d = (d == 2 ? 3 : d + 2)) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
            ++acc[Int(d)];
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
        }
    }

    // rho on what is left
    unsigned long budget = cfg.rho_max_iters;
    std::vector<Int> pending;
    if (m > 1) pending.push_back(m);
    while (!pending.empty()) {
        Int c = pending.back();
        pending.pop_back();
        if (is_prime(c)) {
            ++acc[c];
            continue;
        }
        Int f = pollard_rho_brent(c, budget);
        if (f == 0)
            raise(Errc::factorization_incomplete,
                  "rho budget exhausted on composite cofactor " + c.get_str());
        pending.push_back(f);
        pending.push_back(c / f);
    }

    out.factors.assign(acc.begin(), acc.end());
    return out;
}

std::pair<Int, Int> squarefree_decompose(const Int& n, const FactorConfig& cfg) {
    Factorization f = factorize(n, cfg);
    Int q_sf = f.sign, w = 1;
    for (const auto& [p, e] : f.factors) {
        if (e % 2) q_sf *= p;
        if (e / 2 > 0) {
            Int ph;
            mpz_pow_ui(ph.get_mpz_t(), p.get_mpz_t(), e / 2);
            w *= ph;
        }
    }
    return {q_sf, w};
}

} // namespace dioforge
