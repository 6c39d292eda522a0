#pragma once

/**
 * @file twist.hpp
 * @brief Quadratic twists of y^2 = x(x+81)(x+256) and the birational maps
 *        between the quartic model and the cubic model.
 *
 * The twist q y^2 = x(x+81)(x+256) is handled through its normalized
 * integral model Y^2 = X^3 + 337 q X^2 + 20736 q^2 X obtained from the
 * substitution X = q x, Y = q^2 y. The quartic
 * q v^2 = (t-1)(t+1)(25t+7)(25t-7) corresponds to the cubic through
 * t = (144+x)/(144-x), v = 576 y/(x-144)^2.
 */

#include <utility>

#include "dioforge/curve.hpp"

namespace dioforge {

/// f(x) = x(x+81)(x+256), the base cubic of the twist family.
Rat base_cubic(const Rat& x);

class TwistModel {
public:
    /// q must be a nonzero square-free integer.
    explicit TwistModel(const Int& q);

    const Int& q() const { return q_; }
    const EllipticCurveQ& normalized() const { return normalized_; }

    /// (x, y) with q y^2 = f(x) -> (q x, q^2 y) on the normalized curve.
    /// Throws NotOnTwist when the relation fails.
    PointQ lift(const Rat& x, const Rat& y) const;

    /// Inverse of lift; the input must be affine and on the normalized
    /// curve.
    std::pair<Rat, Rat> lower(const PointQ& p) const;

private:
    Int q_;
    EllipticCurveQ normalized_;
};

/// Spec-surface form of TwistModel(q).lift(x, y).
PointQ twist_lift(const Int& q, const Rat& x, const Rat& y);

/// t = (144+x)/(144-x), v = 576 y/(x-144)^2. Throws MapUndefined at x=144.
std::pair<Rat, Rat> curve_to_quartic(const Rat& x, const Rat& y);

/// x = 144(t-1)/(t+1), y = v(x-144)^2/576. Throws MapUndefined at t=-1.
std::pair<Rat, Rat> quartic_to_curve(const Rat& t, const Rat& v);

/// (t-1)(t+1)(25t+7)(25t-7), the quartic the triple family lives on.
Rat quartic_rhs(const Rat& t);

} // namespace dioforge
