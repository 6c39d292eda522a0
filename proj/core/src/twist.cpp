#include "dioforge/twist.hpp"

#include "dioforge/factor.hpp"

namespace dioforge {

Rat base_cubic(const Rat& x) { return x * (x + Rat(81)) * (x + Rat(256)); }

Rat quartic_rhs(const Rat& t) {
    return (t - Rat(1)) * (t + Rat(1)) * (Rat(25) * t + Rat(7)) * (Rat(25) * t - Rat(7));
}

namespace {

EllipticCurveQ normalized_twist_curve(const Int& q) {
    if (q == 0) raise(Errc::excluded_parameter, "twist q = 0");
    // Y^2 = X(X + 81q)(X + 256q) = X^3 + 337q X^2 + 20736 q^2 X
    Rat qr(q);
    return EllipticCurveQ(Rat(337) * qr, Rat(20736) * qr * qr, Rat(0));
}

} // namespace

TwistModel::TwistModel(const Int& q) : q_(q), normalized_(normalized_twist_curve(q)) {
    auto [sf, w] = squarefree_decompose(q_);
    if (w != 1)
        raise(Errc::excluded_parameter, "twist q = " + q_.get_str() + " is not square-free");
}

PointQ TwistModel::lift(const Rat& x, const Rat& y) const {
    Rat qr(q_);
    if (qr * y * y != base_cubic(x))
        raise(Errc::not_on_twist,
              "q y^2 != x(x+81)(x+256) at (" + x.str() + ", " + y.str() + "), q = " + q_.get_str());
    return PointQ::on(normalized_, qr * x, qr * qr * y);
}

std::pair<Rat, Rat> TwistModel::lower(const PointQ& p) const {
    if (p.is_infinity()) raise(Errc::map_undefined, "cannot lower the point at infinity");
    if (!normalized_.contains(p.x(), p.y()))
        raise(Errc::point_off_curve, "(" + p.x().str() + ", " + p.y().str() + ")");
    Rat qr(q_);
    return {p.x() / qr, p.y() / (qr * qr)};
}

PointQ twist_lift(const Int& q, const Rat& x, const Rat& y) {
    return TwistModel(q).lift(x, y);
}

std::pair<Rat, Rat> curve_to_quartic(const Rat& x, const Rat& y) {
    if (x == Rat(144)) raise(Errc::map_undefined, "x = 144");
    Rat d = x - Rat(144);
    return {(Rat(144) + x) / (Rat(144) - x), Rat(576) * y / (d * d)};
}

std::pair<Rat, Rat> quartic_to_curve(const Rat& t, const Rat& v) {
    if (t == Rat(-1)) raise(Errc::map_undefined, "t = -1");
    Rat x = Rat(144) * (t - Rat(1)) / (t + Rat(1));
    Rat d = x - Rat(144);
    return {x, v * d * d / Rat(576)};
}

} // namespace dioforge
