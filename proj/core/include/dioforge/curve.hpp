#pragma once

/**
 * @file curve.hpp
 * @brief Chord-tangent arithmetic on monic cubic Weierstrass models over Q.
 *
 * Curves are y^2 = x^3 + a2 x^2 + a4 x + a6 with exact rational
 * coefficients; points are affine pairs or the point at infinity. The
 * group law is the textbook one, evaluated exactly. Torsion orders are
 * bounded at 12 (Mazur), which is all this artifact ever needs.
 */

#include <optional>

#include "dioforge/rat.hpp"

namespace dioforge {

class EllipticCurveQ {
public:
    /// Rejects singular input (vanishing cubic discriminant) with
    /// SingularCurve.
    EllipticCurveQ(Rat a2, Rat a4, Rat a6);

    const Rat& a2() const { return a2_; }
    const Rat& a4() const { return a4_; }
    const Rat& a6() const { return a6_; }

    /// Discriminant of the cubic x^3 + a2 x^2 + a4 x + a6.
    Rat cubic_discriminant() const;

    /// Right-hand side x^3 + a2 x^2 + a4 x + a6.
    Rat rhs(const Rat& x) const;

    bool contains(const Rat& x, const Rat& y) const { return y * y == rhs(x); }

    friend bool operator==(const EllipticCurveQ& a, const EllipticCurveQ& b) {
        return a.a2_ == b.a2_ && a.a4_ == b.a4_ && a.a6_ == b.a6_;
    }

private:
    Rat a2_, a4_, a6_;
};

class PointQ {
public:
    static PointQ infinity() { return PointQ(); }

    /// Affine point validated against a curve; throws PointOffCurve.
    static PointQ on(const EllipticCurveQ& curve, Rat x, Rat y);

    bool is_infinity() const { return infinity_; }
    const Rat& x() const { return x_; }
    const Rat& y() const { return y_; }

    friend bool operator==(const PointQ& a, const PointQ& b) {
        if (a.infinity_ || b.infinity_) return a.infinity_ == b.infinity_;
        return a.x_ == b.x_ && a.y_ == b.y_;
    }
    friend bool operator!=(const PointQ& a, const PointQ& b) { return !(a == b); }

private:
    PointQ() : infinity_(true) {}
    PointQ(Rat x, Rat y) : x_(std::move(x)), y_(std::move(y)), infinity_(false) {}

    friend PointQ unchecked_point(Rat x, Rat y);

    Rat x_, y_;
    bool infinity_;
};

PointQ neg(const PointQ& p);

/// Group sum. Both points must lie on the curve (PointOffCurve otherwise).
PointQ add(const EllipticCurveQ& curve, const PointQ& p, const PointQ& q);

/// k-fold sum by double-and-add; mul(-k, p) = neg(mul(k, p)), mul(0, p) = O.
PointQ mul(const EllipticCurveQ& curve, long k, const PointQ& p);

/// Smallest k in 1..12 with k*p = O, or nullopt: by Mazur's bound the point
/// then has infinite order.
std::optional<int> order_at_most_12(const EllipticCurveQ& curve, const PointQ& p);

/// The Prop.-2 curve y^2 = (x+q)(x^2+q) with q = r^2-1; singular exactly
/// for r in {0, 1, -1} (SingularCurve).
EllipticCurveQ curve_Eq_of_r(const Rat& r);

} // namespace dioforge
