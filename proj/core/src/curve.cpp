#include "dioforge/curve.hpp"

namespace dioforge {

EllipticCurveQ::EllipticCurveQ(Rat a2, Rat a4, Rat a6)
    : a2_(std::move(a2)), a4_(std::move(a4)), a6_(std::move(a6)) {
    if (cubic_discriminant().is_zero())
        raise(Errc::singular_curve, "y^2 = x^3 + (" + a2_.str() + ")x^2 + (" + a4_.str() +
                                        ")x + (" + a6_.str() + ") is singular");
}

Rat EllipticCurveQ::cubic_discriminant() const {
    const Rat &p = a2_, &q = a4_, &r = a6_;
    return Rat(18) * p * q * r - Rat(4) * p * p * p * r + p * p * q * q -
           Rat(4) * q * q * q - Rat(27) * r * r;
}

Rat EllipticCurveQ::rhs(const Rat& x) const {
    return ((x + a2_) * x + a4_) * x + a6_;
}

PointQ unchecked_point(Rat x, Rat y) { return PointQ(std::move(x), std::move(y)); }

PointQ PointQ::on(const EllipticCurveQ& curve, Rat x, Rat y) {
    if (!curve.contains(x, y))
        raise(Errc::point_off_curve, "(" + x.str() + ", " + y.str() + ")");
    return PointQ(std::move(x), std::move(y));
}

PointQ neg(const PointQ& p) {
    if (p.is_infinity()) return p;
    return unchecked_point(p.x(), -p.y());
}

namespace {

// Chord-tangent law; callers guarantee p, q on the curve.
PointQ add_unchecked(const EllipticCurveQ& c, const PointQ& p, const PointQ& q) {
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    Rat lambda;
    if (p.x() == q.x()) {
        if (p.y() == -q.y()) return PointQ::infinity();
        // tangent: (3x^2 + 2 a2 x + a4) / (2y)
        lambda = (Rat(3) * p.x() * p.x() + Rat(2) * c.a2() * p.x() + c.a4()) / (Rat(2) * p.y());
    } else {
        lambda = (q.y() - p.y()) / (q.x() - p.x());
    }
    Rat x3 = lambda * lambda - c.a2() - p.x() - q.x();
    Rat y3 = lambda * (p.x() - x3) - p.y();
    return unchecked_point(std::move(x3), std::move(y3));
}

void require_on_curve(const EllipticCurveQ& c, const PointQ& p) {
    if (!p.is_infinity() && !c.contains(p.x(), p.y()))
        raise(Errc::point_off_curve, "(" + p.x().str() + ", " + p.y().str() + ")");
}

} // namespace

PointQ add(const EllipticCurveQ& curve, const PointQ& p, const PointQ& q) {
    require_on_curve(curve, p);
    require_on_curve(curve, q);
    return add_unchecked(curve, p, q);
}

PointQ mul(const EllipticCurveQ& curve, long k, const PointQ& p) {
    require_on_curve(curve, p);
    if (k < 0) return neg(mul(curve, -k, p));
    PointQ acc = PointQ::infinity();
    PointQ base = p;
    while (k != 0) {
        if (k & 1) acc = add_unchecked(curve, acc, base);
        k >>= 1;
        if (k != 0) base = add_unchecked(curve, base, base);
    }
    return acc;
}

std::optional<int> order_at_most_12(const EllipticCurveQ& curve, const PointQ& p) {
    require_on_curve(curve, p);
    PointQ acc = PointQ::infinity();
    for (int k = 1; k <= 12; ++k) {
        acc = add_unchecked(curve, acc, p);
        if (acc.is_infinity()) return k;
    }
    return std::nullopt;
}

EllipticCurveQ curve_Eq_of_r(const Rat& r) {
    if (r.is_zero() || r == Rat(1) || r == Rat(-1))
        raise(Errc::singular_curve, "E^q singular at r = " + r.str());
    Rat q = r * r - Rat(1);
    return EllipticCurveQ(q, q, q * q);
}

} // namespace dioforge
