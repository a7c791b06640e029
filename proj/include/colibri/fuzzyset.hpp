#pragma once

// Convex piecewise-linear fuzzy sets on the hue circle.

#include <cmath>
#include <string>

#include "colibri/circle.hpp"
#include "colibri/error.hpp"

namespace colibri {

/// Trapezoidal membership function on the circle with knots a -> b -> c -> d
/// in ascending circular order: support (a, d), core [b, c], linear shoulders
/// on (a, b) and (c, d). b == c gives a triangle.
///
/// The knots are kept unrolled as reals a <= b <= c <= d with d - a < 360, a
/// in [0, 360). A query hue is lifted to the branch [a, a + 360) before the
/// piecewise-linear formula is applied, so wrapping sets need no special case.
class CircularTrapezoid {
public:
    /// Knots given as hues in circular order. Both shoulders must have
    /// positive width and the support must be shorter than the full circle.
    CircularTrapezoid(Hue a, Hue b, Hue c, Hue d) {
        a_ = a.degrees();
        b_ = a_ + ccw_distance(a, b);
        c_ = b_ + ccw_distance(b, c);
        d_ = c_ + ccw_distance(c, d);
        validate();
    }

    CircularTrapezoid(double a, double b, double c, double d)
        : CircularTrapezoid(Hue(a), Hue(b), Hue(c), Hue(d)) {}

    /// Builds from a start hue and the three successive knot spacings.
    static CircularTrapezoid from_spacings(Hue a, double rise, double plateau, double fall) {
        CircularTrapezoid t;
        t.a_ = a.degrees();
        t.b_ = t.a_ + rise;
        t.c_ = t.b_ + plateau;
        t.d_ = t.c_ + fall;
        t.validate();
        return t;
    }

    Hue a() const { return Hue(a_); }
    Hue b() const { return Hue(b_); }
    Hue c() const { return Hue(c_); }
    Hue d() const { return Hue(d_); }

    double rise_width() const noexcept { return b_ - a_; }
    double core_width() const noexcept { return c_ - b_; }
    double fall_width() const noexcept { return d_ - c_; }
    double support_width() const noexcept { return d_ - a_; }
    bool is_triangle() const noexcept { return b_ == c_; }

    double operator()(Hue h) const { return eval(h); }

    double eval(Hue h) const {
        const double x = a_ + ccw_distance(Hue(a_), h);
        if (x <= a_ || x >= d_) return 0.0;
        if (x < b_) return (x - a_) / (b_ - a_);
        if (x <= c_) return 1.0;
        return (d_ - x) / (d_ - c_);
    }

    /// {h : mu(h) >= alpha}, closed. Endpoints invert the shoulders.
    Arc alpha_cut(double alpha) const {
        if (!(alpha > 0.0 && alpha <= 1.0)) {
            throw DomainError("alpha_cut: alpha must lie in (0, 1]");
        }
        if (alpha == 1.0) return core();
        const double left = a_ + alpha * (b_ - a_);
        const double right = d_ - alpha * (d_ - c_);
        return {Hue(left), Hue(right)};
    }

    /// Length of the alpha-cut computed on the unrolled knots.
    double alpha_cut_measure(double alpha) const {
        if (!(alpha > 0.0 && alpha <= 1.0)) {
            throw DomainError("alpha_cut_measure: alpha must lie in (0, 1]");
        }
        return (d_ - alpha * (d_ - c_)) - (a_ + alpha * (b_ - a_));
    }

    Arc support() const { return {Hue(a_), Hue(d_)}; }
    Arc core() const { return {Hue(b_), Hue(c_)}; }

    /// Same shape shifted by delta degrees.
    CircularTrapezoid rotated(double delta) const {
        return from_spacings(Hue(a_ + delta), rise_width(), core_width(), fall_width());
    }

    friend bool operator==(const CircularTrapezoid&, const CircularTrapezoid&) = default;

private:
    CircularTrapezoid() = default;

    void validate() const {
        if (!(b_ > a_) || !(d_ > c_)) {
            throw DomainError("CircularTrapezoid: shoulders must have positive width");
        }
        if (!(c_ >= b_)) {
            throw DomainError("CircularTrapezoid: core end precedes core start");
        }
        if (!(d_ - a_ < kPeriod)) {
            throw DomainError("CircularTrapezoid: support must be shorter than the full circle");
        }
    }

    double a_ = 0.0;
    double b_ = 0.0;
    double c_ = 0.0;
    double d_ = 0.0;
};

inline double eval(const CircularTrapezoid& t, Hue h) { return t.eval(h); }
inline Arc alpha_cut(const CircularTrapezoid& t, double alpha) { return t.alpha_cut(alpha); }
inline Arc support(const CircularTrapezoid& t) { return t.support(); }
inline Arc core(const CircularTrapezoid& t) { return t.core(); }

}  // namespace colibri
