#include "dioforge/construct.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <numeric>
#include <thread>

namespace dioforge {

StrongTuple StrongTuple::make(Rat q, std::vector<Rat> elements) {
    for (size_t i = 0; i < elements.size(); ++i) {
        if (elements[i].is_zero())
            raise(Errc::malformed_tuple, "element " + std::to_string(i) + " is zero");
        for (size_t j = i + 1; j < elements.size(); ++j)
            if (elements[i] == elements[j])
                raise(Errc::malformed_tuple, "duplicate element " + elements[i].str());
    }
    return StrongTuple{std::move(q), std::move(elements)};
}

SeedPair SeedPair::make(Int u1, Int u2) {
    if (u1 == 0 || u2 == 0) raise(Errc::degenerate_seed, "seed component is zero");
    Int g;
    mpz_gcd(g.get_mpz_t(), u1.get_mpz_t(), u2.get_mpz_t());
    if (g != 1)
        raise(Errc::excluded_parameter,
              "seed (" + u1.get_str() + ", " + u2.get_str() + ") is not coprime");
    return SeedPair{std::move(u1), std::move(u2)};
}

namespace {

// Admissible r for the pair construction: the curve is singular at
// r in {0, +-1}, and S has order 3 at r = +-1/2.
void require_admissible_r(const Rat& r) {
    static const Rat half(1, 2);
    if (r.is_zero() || abs(r) == Rat(1) || abs(r) == half)
        raise(Errc::excluded_parameter, "r = " + r.str() + " is excluded");
}

} // namespace

StrongTuple pair_from_r(const Rat& r, int k) {
    if (k < 2) raise(Errc::excluded_parameter, "k must be >= 2");
    require_admissible_r(r);
    EllipticCurveQ curve = curve_Eq_of_r(r);
    Rat q = r * r - Rat(1);
    PointQ s = PointQ::on(curve, Rat(1), Rat(1) + q);
    PointQ ks = mul(curve, k, s);
    if (ks.is_infinity())
        raise(Errc::degenerate_multiple, std::to_string(k) + "S is the point at infinity");
    if (ks.x() == Rat(1))
        raise(Errc::degenerate_multiple, "x(" + std::to_string(k) + "S) duplicates 1");
    return StrongTuple::make(q, {Rat(1), ks.x()});
}

Rat xcoord_closed_form(int k, const Rat& r) {
    require_admissible_r(r);
    Rat r2 = r * r;
    switch (k) {
        case 2:
            return Rat(5, 4) - r2;
        case 3: {
            Rat r4 = r2 * r2;
            Rat den = Rat(16) * r4 - Rat(8) * r2 + Rat(1);
            if (den.is_zero()) raise(Errc::excluded_parameter, "denominator vanishes");
            return (Rat(-16) * r4 + Rat(16) * r2 + Rat(1)) / den;
        }
        case 4: {
            Rat r4 = r2 * r2;
            Rat r6 = r4 * r2, r8 = r4 * r4;
            Rat den = Rat(256) * r4 - Rat(384) * r2 + Rat(144);
            if (den.is_zero()) raise(Errc::excluded_parameter, "denominator vanishes");
            return (Rat(256) * r8 - Rat(768) * r6 + Rat(864) * r4 - Rat(496) * r2 + Rat(145)) /
                   den;
        }
        default:
            raise(Errc::excluded_parameter, "closed form only for k in {2, 3, 4}");
    }
}

namespace {

bool t_is_excluded(const Rat& t) {
    static const std::array<Rat, 8> excluded = {Rat(1, 5),  Rat(-1, 5),  Rat(3, 5),  Rat(-3, 5),
                                                Rat(7, 5),  Rat(-7, 5),  Rat(7, 15), Rat(-7, 15)};
    if (t.is_zero()) return true;
    return std::find(excluded.begin(), excluded.end(), t) != excluded.end();
}

} // namespace

StrongTuple triple_from_t(const Rat& t) {
    if (t_is_excluded(t)) raise(Errc::excluded_parameter, "t = " + t.str() + " is excluded");
    if (abs(t) == Rat(1)) raise(Errc::degenerate_q, "t = " + t.str() + " gives q = 0");
    Rat t2 = t * t;
    Rat denb = Rat(1024) * t2;
    Rat b = -(Rat(625) * t2 * t2 - Rat(930) * t2 + Rat(49)) / denb;
    Rat c = -(Rat(5) * t + Rat(1)) * (Rat(5) * t - Rat(1)) * (Rat(5) * t + Rat(7)) *
            (Rat(5) * t - Rat(7)) / (Rat(1600) * t2);
    Rat q = quartic_rhs(t) / denb;
    return StrongTuple::make(q, {Rat(1), b, c});
}

Rat r_from_t(const Rat& t) {
    if (t.is_zero()) raise(Errc::excluded_parameter, "t = 0");
    return -(Rat(25) * t * t + Rat(7)) / (Rat(32) * t);
}

StrongTuple scale_tuple(const StrongTuple& s, const Rat& z) {
    if (z.is_zero()) raise(Errc::excluded_parameter, "z = 0");
    std::vector<Rat> scaled;
    scaled.reserve(s.elements.size());
    for (const Rat& e : s.elements) scaled.push_back(e * z);
    return StrongTuple{s.q * z * z, std::move(scaled)};
}

NormalizedTuple normalize_to_squarefree(const StrongTuple& s) {
    if (s.q.is_zero()) raise(Errc::degenerate_q, "q = 0 cannot be normalized");
    auto [nsf, wn] = squarefree_decompose(s.q.num());
    auto [dsf, wd] = squarefree_decompose(s.q.den());
    Int q_sf = nsf * dsf;             // num and den coprime, so this is square-free
    Rat w(wn, wd * dsf);              // positive: wn, wd, dsf all > 0
    StrongTuple scaled = scale_tuple(s, w.reciprocal());
    if (scaled.q != Rat(q_sf))
        raise(Errc::internal, "normalization drifted: " + scaled.q.str());
    return NormalizedTuple{std::move(scaled), std::move(q_sf), std::move(w)};
}

Int q_from_seed(const SeedPair& seed) {
    Int f1 = seed.u1 + 81 * seed.u2;
    Int f2 = seed.u1 + 256 * seed.u2;
    if (seed.u1 == 0 || seed.u2 == 0 || f1 == 0 || f2 == 0)
        raise(Errc::degenerate_seed,
              "q(" + seed.u1.get_str() + ", " + seed.u2.get_str() + ") = 0");
    return seed.u1 * seed.u2 * f1 * f2;
}

namespace {

struct LiftedSeed {
    Int q_sf;
    TwistModel twist;
    PointQ base;
};

// Decompose q0 = q_sf * w0^2 and lift (u1/u2, w0/u2^2) onto the normalized
// twist of q_sf. The relation q_sf y^2 = f(u) holds because
// f(u1/u2) = q0 / u2^4.
LiftedSeed lift_seed(const SeedPair& seed) {
    Int q0 = q_from_seed(seed);
    auto [q_sf, w0] = squarefree_decompose(q0);
    TwistModel twist(q_sf);
    Rat u(seed.u1, seed.u2);
    Rat y0(w0, seed.u2 * seed.u2);
    PointQ base = twist.lift(u, y0);
    return LiftedSeed{std::move(q_sf), std::move(twist), std::move(base)};
}

} // namespace

FamilyResult triples_for_q(const SeedPair& seed, int count) {
    if (count < 1) raise(Errc::excluded_parameter, "count must be >= 1");
    LiftedSeed lifted = lift_seed(seed);
    const EllipticCurveQ& curve = lifted.twist.normalized();
    if (order_at_most_12(curve, lifted.base))
        raise(Errc::torsion_seed, "base point of seed (" + seed.u1.get_str() + ", " +
                                      seed.u2.get_str() + ") is torsion");
    Rat q_sf_rat(lifted.q_sf);
    FamilyResult out{lifted.q_sf, {}};
    PointQ multiple = PointQ::infinity();
    // The base point has infinite order, so admissible multiples keep
    // coming; the cap only guards against an implementation bug.
    for (int m = 1; m <= 64 && static_cast<int>(out.triples.size()) < count; ++m) {
        multiple = add(curve, multiple, lifted.base);
        auto [x, y] = lifted.twist.lower(multiple);
        if (y.is_zero() || x == Rat(144)) continue;
        auto [t, v] = curve_to_quartic(x, y);
        if (t_is_excluded(t) || abs(t) == Rat(1)) continue;
        StrongTuple raw = triple_from_t(t);
        // q(t) = q_sf * (v/(32t))^2, so rescaling by the inverse lands on
        // q_sf itself.
        Rat w_scale = v / (Rat(32) * t);
        StrongTuple scaled = scale_tuple(raw, w_scale.reciprocal());
        if (scaled.q != q_sf_rat)
            raise(Errc::internal, "pipeline rescale missed q_sf at m = " + std::to_string(m));
        bool duplicate = std::any_of(out.triples.begin(), out.triples.end(),
                                     [&](const StrongTuple& s) { return s.elements == scaled.elements; });
        if (!duplicate) out.triples.push_back(std::move(scaled));
    }
    if (static_cast<int>(out.triples.size()) < count)
        raise(Errc::internal, "multiple cap reached before collecting requested triples");
    return out;
}

namespace {

// One seed of the grid scan; nullopt when the seed is skipped.
std::optional<ScanRecord> scan_one(long u1, long u2, const Int& qmax) {
    Int q0 = Int(u1) * u2 * (Int(u1) + 81 * Int(u2)) * (Int(u1) + 256 * Int(u2));
    if (q0 == 0) return std::nullopt;
    auto [q_sf, w0] = squarefree_decompose(q0);
    if (abs(q_sf) > qmax) return std::nullopt;
    TwistModel twist(q_sf);
    Rat u(u1, u2);
    Rat y0(w0, Int(u2) * u2);
    PointQ base = twist.lift(u, y0);
    if (order_at_most_12(twist.normalized(), base)) return std::nullopt;  // torsion: no rank witness
    return ScanRecord{q_sf, u1, u2};
}

} // namespace

std::vector<ScanRecord> scan_seeds(long max_seed, const Int& qmax, int jobs) {
    std::vector<std::pair<long, long>> seeds;
    for (long u2 = 1; u2 <= max_seed; ++u2)
        for (long u1 = -max_seed; u1 <= max_seed; ++u1) {
            if (u1 == 0 || std::gcd(std::abs(u1), u2) != 1) continue;
            seeds.emplace_back(u1, u2);
        }

    std::vector<std::optional<ScanRecord>> slots(seeds.size());
    if (qmax > 0) {
        auto worker = [&](size_t start, size_t stride) {
            for (size_t i = start; i < seeds.size(); i += stride)
                slots[i] = scan_one(seeds[i].first, seeds[i].second, qmax);
        };
        if (jobs <= 1) {
            worker(0, 1);
        } else {
            std::vector<std::thread> pool;
            std::vector<std::exception_ptr> errors(static_cast<size_t>(jobs));
            for (int j = 0; j < jobs; ++j)
                pool.emplace_back([&, j] {
                    try {
                        worker(static_cast<size_t>(j), static_cast<size_t>(jobs));
                    } catch (...) {
                        errors[static_cast<size_t>(j)] = std::current_exception();
                    }
                });
            for (auto& th : pool) th.join();
            for (auto& err : errors)
                if (err) std::rethrow_exception(err);
        }
    }

    std::vector<ScanRecord> records;
    for (auto& slot : slots)
        if (slot) records.push_back(std::move(*slot));
    std::sort(records.begin(), records.end(), [](const ScanRecord& a, const ScanRecord& b) {
        Int aa = abs(a.q_sf), ab = abs(b.q_sf);
        if (aa != ab) return aa < ab;
        if (a.q_sf != b.q_sf) return a.q_sf < b.q_sf;
        if (a.u1 != b.u1) return a.u1 < b.u1;
        return a.u2 < b.u2;
    });
    records.erase(std::unique(records.begin(), records.end(),
                              [](const ScanRecord& a, const ScanRecord& b) {
                                  return a.q_sf == b.q_sf;
                              }),
                  records.end());
    return records;
}

} // namespace dioforge
