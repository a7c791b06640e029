#pragma once

// Exact arithmetic on the hue circle: angles in degrees, period 360.

#include <algorithm>
#include <cmath>
#include <compare>
#include <string>
#include <vector>

#include "colibri/error.hpp"

namespace colibri {

inline constexpr double kPeriod = 360.0;

/// Absolute tolerance for comparing angles, in degrees.
inline constexpr double kAngleTolerance = 1e-9;

/// Reduces any finite angle to [0, 360).
inline double wrap(double degrees) {
    if (!std::isfinite(degrees)) {
        throw DomainError("wrap: angle must be finite");
    }
    double r = std::fmod(degrees, kPeriod);
    if (r < 0.0) r += kPeriod;
    // fmod of a tiny negative value plus 360 rounds up to exactly 360
    if (r >= kPeriod) r = 0.0;
    return r;
}

/// A point on the hue circle. The stored value is always in [0, 360).
class Hue {
public:
    constexpr Hue() = default;
    explicit Hue(double degrees) : value_(wrap(degrees)) {}

    constexpr double degrees() const noexcept { return value_; }

    friend Hue operator+(Hue h, double delta) { return Hue(h.value_ + delta); }
    friend Hue operator-(Hue h, double delta) { return Hue(h.value_ - delta); }

    friend constexpr auto operator<=>(Hue, Hue) = default;

private:
    double value_ = 0.0;
};

/// Ascending (counter-clockwise on the usual wheel) distance from `from` to
/// `to`, in [0, 360).
inline double ccw_distance(Hue from, Hue to) {
    double d = to.degrees() - from.degrees();
    return d < 0.0 ? d + kPeriod : d;
}

/// Closed circular interval running from start ascending to end. If end is
/// numerically smaller than start the arc passes through 0. start == end is a
/// single point of measure zero; the whole circle has its own constructor.
class Arc {
public:
    constexpr Arc() = default;
    Arc(Hue start, Hue end) : start_(start), end_(end) {}
    Arc(double start, double end) : start_(start), end_(end) {}

    static Arc full_circle() {
        Arc a;
        a.full_ = true;
        return a;
    }

    Hue start() const noexcept { return start_; }
    Hue end() const noexcept { return end_; }
    bool is_full() const noexcept { return full_; }
    bool wraps() const noexcept { return !full_ && end_ < start_; }

    /// Length in degrees, in [0, 360].
    double measure() const {
        return full_ ? kPeriod : ccw_distance(start_, end_);
    }

    bool contains(Hue h) const {
        if (full_) return true;
        const double s = start_.degrees();
        const double e = end_.degrees();
        const double x = h.degrees();
        if (s <= e) return s <= x && x <= e;
        return x >= s || x <= e;
    }

    friend bool operator==(const Arc& a, const Arc& b) {
        if (a.full_ || b.full_) return a.full_ == b.full_;
        return a.start_ == b.start_ && a.end_ == b.end_;
    }

private:
    Hue start_{};
    Hue end_{};
    bool full_ = false;
};

inline double arc_measure(const Arc& a) { return a.measure(); }
inline bool arc_contains(const Arc& a, Hue h) { return a.contains(h); }

namespace detail {

struct Span {
    double lo;
    double hi;
};

// Closed sub-intervals of [0, 360] covering the arc.
inline std::vector<Span> unroll(const Arc& a) {
    if (a.is_full()) return {{0.0, kPeriod}};
    const double s = a.start().degrees();
    const double e = a.end().degrees();
    if (s <= e) return {{s, e}};
    return {{s, kPeriod}, {0.0, e}};
}

}  // namespace detail

/// Set intersection of two closed arcs: zero, one, or two arcs (two arcs
/// on a circle can meet in at most two components). Endpoints of the result
/// are copied from the inputs, never recomputed.
inline std::vector<Arc> arc_intersect(const Arc& a, const Arc& b) {
    if (a.is_full() && b.is_full()) return {Arc::full_circle()};

    std::vector<detail::Span> pieces;
    for (const auto& pa : detail::unroll(a)) {
        for (const auto& pb : detail::unroll(b)) {
            const double lo = std::max(pa.lo, pb.lo);
            const double hi = std::min(pa.hi, pb.hi);
            if (lo <= hi) pieces.push_back({lo, hi});
        }
    }

    // A piece ending at 360 continues through 0 into the piece starting at 0.
    auto at_top = std::find_if(pieces.begin(), pieces.end(),
                               [](const detail::Span& s) { return s.hi == kPeriod; });
    if (at_top != pieces.end()) {
        auto at_zero = std::find_if(pieces.begin(), pieces.end(),
                                    [](const detail::Span& s) { return s.lo == 0.0; });
        if (at_zero != pieces.end() && at_zero != at_top) {
            at_top->hi = at_zero->hi;
            pieces.erase(at_zero);
        }
    }

    std::sort(pieces.begin(), pieces.end(),
              [](const detail::Span& x, const detail::Span& y) { return x.lo < y.lo; });
    std::vector<Arc> out;
    out.reserve(pieces.size());
    for (const auto& p : pieces) out.emplace_back(p.lo, p.hi);
    return out;
}

inline double total_measure(const std::vector<Arc>& arcs) {
    double m = 0.0;
    for (const auto& a : arcs) m += a.measure();
    return m;
}

}  // namespace colibri
