#pragma once

/**
 * @file construct.hpp
 * @brief Constructions of strong rational D(q)-pairs and triples.
 *
 * Pairs {1, b} with q = r^2-1 come from multiples of S = (1, 1+q) on
 * y^2 = (x+q)(x^2+q). The one-parameter triple family in t is
 *
 *   { 1, -(625t^4-930t^2+49)/(1024 t^2), -(5t+1)(5t-1)(5t+7)(5t-7)/(1600 t^2) }
 *
 * with q(t) = (t-1)(t+1)(25t+7)(25t-7)/(1024 t^2). The seed family
 * q = u1 u2 (u1+81u2)(u1+256u2) feeds the end-to-end pipeline: multiples of
 * a non-torsion point on the twist q y^2 = x(x+81)(x+256) are pushed through
 * the birational map to parameter values t, and each admissible t yields a
 * triple rescaled to the square-free q itself.
 */

#include <vector>

#include "dioforge/curve.hpp"
#include "dioforge/factor.hpp"
#include "dioforge/twist.hpp"

namespace dioforge {

/// A value q with an ordered list of nonzero, pairwise distinct rationals
/// claimed to form a strong D(q)-tuple. The square property itself is the
/// verify module's business.
struct StrongTuple {
    Rat q;
    std::vector<Rat> elements;

    /// Validates nonzero + pairwise distinct; throws MalformedTuple.
    static StrongTuple make(Rat q, std::vector<Rat> elements);
};

/// Coprime parameter pair for the seed family q = u1 u2 (u1+81u2)(u1+256u2).
struct SeedPair {
    Int u1;
    Int u2;

    /// Throws DegenerateSeed when a component is zero, ExcludedParameter
    /// when the components share a factor.
    static SeedPair make(Int u1, Int u2);
};

/// {1, x(k S)} with q = r^2-1, S = (1, 1+q); a strong D(q)-pair for every
/// admissible r. Excluded r: {0, +-1, +-1/2} (singular curve / S of order 3).
StrongTuple pair_from_r(const Rat& r, int k);

/// Closed forms of x(kS) on E^{r^2-1} for k = 2, 3, 4.
Rat xcoord_closed_form(int k, const Rat& r);

/// The Prop.-3 triple family. Excluded t: {0, +-1/5, +-3/5, +-7/5, +-7/15}
/// (ExcludedParameter); t = +-1 gives q = 0 (DegenerateQ).
StrongTuple triple_from_t(const Rat& t);

/// r = -(25t^2+7)/(32t); satisfies 256 r^2 - 175 = (16r + 25t)^2.
Rat r_from_t(const Rat& t);

/// Scaling lemma: elements by z, q by z^2. z must be nonzero.
StrongTuple scale_tuple(const StrongTuple& s, const Rat& z);

struct NormalizedTuple {
    StrongTuple tuple;  // rescaled so its q equals q_sf exactly
    Int q_sf;           // square-free integer
    Rat w;              // positive; input q = q_sf * w^2
};

/// Writes q = q_sf * w^2 with q_sf a square-free integer and w > 0, and
/// rescales by 1/w. Throws DegenerateQ when q = 0.
NormalizedTuple normalize_to_squarefree(const StrongTuple& s);

/// q = u1 u2 (u1+81u2)(u1+256u2); DegenerateSeed when any factor vanishes.
Int q_from_seed(const SeedPair& seed);

struct FamilyResult {
    Int q_sf;
    std::vector<StrongTuple> triples;  // each has q exactly equal to q_sf
};

/// Theorem-1 pipeline: first `count` distinct strong D(q_sf)-triples from
/// multiples of the seed point. Throws TorsionSeed when the base point has
/// finite order on the twist.
FamilyResult triples_for_q(const SeedPair& seed, int count);

struct ScanRecord {
    Int q_sf;
    long u1;  // first witness seed in merge order
    long u2;
};

/// Grid scan over coprime seeds with |u1|, |u2| <= max_seed (u2 > 0; the
/// seed (-u1, -u2) gives the same q). Records each square-free |q_sf| <=
/// qmax whose base point is non-torsion. Results are deduplicated and
/// sorted by (|q_sf|, q_sf); the outcome is independent of `jobs`.
std::vector<ScanRecord> scan_seeds(long max_seed, const Int& qmax, int jobs = 1);

} // namespace dioforge
