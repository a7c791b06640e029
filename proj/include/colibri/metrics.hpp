#pragma once

// Category extent (wideness: measure of an alpha-cut) and transition extent
// (boundary width: measure of the overlap of adjacent supports).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "colibri/circle.hpp"
#include "colibri/error.hpp"
#include "colibri/format.hpp"
#include "colibri/partition.hpp"

namespace colibri {

inline constexpr double kDefaultAlpha = 0.5;

inline double wideness(const HuePartition& p, std::size_t i, double alpha = kDefaultAlpha) {
    return arc_measure(p.set(i).alpha_cut(alpha));
}

inline double wideness(const HuePartition& p, std::string_view name, double alpha = kDefaultAlpha) {
    return wideness(p, p.index_of(name), alpha);
}

/// Indicator integral of {mu >= alpha} over the whole circle: midpoint rule on
/// ceil(360 / step) equal cells. The count is an exact integer, so the result
/// does not depend on traversal order. Within 2 * step of wideness().
inline double wideness_numeric(const HuePartition& p, std::size_t i, double alpha, double step) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw DomainError("wideness_numeric: alpha must lie in (0, 1]");
    }
    if (!(step > 0.0 && step <= 1.0)) {
        throw DomainError("wideness_numeric: step must lie in (0, 1]");
    }
    const auto cells = static_cast<long>(std::ceil(kPeriod / step - 1e-9));
    const double cell = kPeriod / static_cast<double>(cells);
    const CircularTrapezoid& mu = p.set(i);
    long hits = 0;
    for (long k = 0; k < cells; ++k) {
        const double h = (static_cast<double>(k) + 0.5) * cell;
        if (mu.eval(Hue(h)) >= alpha) ++hits;
    }
    return static_cast<double>(hits) * cell;
}

inline double wideness_numeric(const HuePartition& p, std::string_view name, double alpha,
                               double step) {
    return wideness_numeric(p, p.index_of(name), alpha, step);
}

/// Total measure of the intersection of the supports of two ring neighbours.
/// With only two categories the supports meet on both sides and both zones
/// are counted.
inline double boundary_width(const HuePartition& p, std::size_t i, std::size_t j) {
    if (!p.adjacent(i, j)) {
        throw AdjacencyError("boundary_width: categories '" + p.name(i).str() + "' and '" +
                             p.name(j).str() + "' are not adjacent");
    }
    return total_measure(arc_intersect(p.set(i).support(), p.set(j).support()));
}

inline double boundary_width(const HuePartition& p, std::string_view i, std::string_view j) {
    return boundary_width(p, p.index_of(i), p.index_of(j));
}

/// The single transition zone where category i hands over to its successor:
/// the component of the support intersection that holds the successor's
/// support start. Empty arc (measure 0) when the supports do not meet there.
inline Arc transition_zone(const HuePartition& p, std::size_t i) {
    const CircularTrapezoid& next = p.set(p.next(i));
    const Hue rise_start = next.a();
    for (const Arc& piece : arc_intersect(p.set(i).support(), next.support())) {
        if (piece.contains(rise_start)) return piece;
    }
    return {rise_start, rise_start};
}

struct CategoryMetrics {
    CategoryName name;
    Arc wideness_range;
    double wideness = 0.0;
    double left_boundary_width = 0.0;
    double right_boundary_width = 0.0;
};

/// One row per category in ring order.
inline std::vector<CategoryMetrics> metrics_table(const HuePartition& p,
                                                  double alpha = kDefaultAlpha) {
    std::vector<double> right(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) right[i] = transition_zone(p, i).measure();

    std::vector<CategoryMetrics> rows;
    rows.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        Arc cut = p.set(i).alpha_cut(alpha);
        rows.push_back({p.name(i), cut, cut.measure(), right[p.prev(i)], right[i]});
    }
    return rows;
}

/// Recovers (crossing, width) per boundary from the membership functions.
/// from_boundaries() followed by this returns the original specs.
inline std::vector<BoundarySpec> boundary_specs(const HuePartition& p) {
    std::vector<BoundarySpec> out;
    out.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        out.push_back({p.set(i).alpha_cut(0.5).end().degrees(), transition_zone(p, i).measure()});
    }
    return out;
}

struct AsymmetryReport {
    CategoryName widest;
    CategoryName narrowest;
    double ratio = 1.0;
    std::vector<CategoryMetrics> per_category;
};

/// Widest and narrowest categories at alpha = 0.5; ties keep ring order.
inline AsymmetryReport asymmetry_report(const HuePartition& p) {
    auto rows = metrics_table(p, kDefaultAlpha);
    std::size_t wi = 0;
    std::size_t ni = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].wideness > rows[wi].wideness) wi = i;
        if (rows[i].wideness < rows[ni].wideness) ni = i;
    }
    const double ratio = rows[ni].wideness > 0.0 ? rows[wi].wideness / rows[ni].wideness
                                                  : std::numeric_limits<double>::infinity();
    return {rows[wi].name, rows[ni].name, ratio, std::move(rows)};
}

struct InvariantCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Every structural property a hue partition is expected to satisfy.
inline std::vector<InvariantCheck> validate_partition(const HuePartition& p) {
    std::vector<InvariantCheck> checks;
    const std::size_t n = p.size();

    double worst_sum = 0.0;
    std::size_t worst_count = 0;
    bool uncovered = false;
    for (int k = 0; k < 36000; ++k) {
        const auto m = p.memberships(Hue(k / 100.0));
        worst_sum = std::max(worst_sum, std::abs(m.sum() - 1.0));
        std::size_t positive = 0;
        for (double v : m.degrees) positive += v > 0.0 ? 1 : 0;
        worst_count = std::max(worst_count, positive);
        uncovered = uncovered || positive == 0;
    }
    checks.push_back({"sum-to-one", worst_sum < 1e-9,
                      "max |sum - 1| = " + format_shortest(worst_sum) + " over 36000 samples"});
    checks.push_back({"overlap-count", worst_count <= 2 && !uncovered,
                      "max simultaneous memberships = " + std::to_string(worst_count) +
                          (uncovered ? ", some hue uncovered" : "")});

    double tiled = 0.0;
    for (std::size_t i = 0; i < n; ++i) tiled += wideness(p, i);
    checks.push_back({"tiling", std::abs(tiled - kPeriod) < 1e-9,
                      "sum of widenesses = " + format_shortest(tiled)});

    double worst_gap = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = ccw_distance(p.set(i).alpha_cut(0.5).end(),
                                      p.set(p.next(i)).alpha_cut(0.5).start());
        worst_gap = std::max(worst_gap, std::min(d, kPeriod - d));
    }
    checks.push_back({"crossings-meet", worst_gap < 1e-9,
                      "max distance between adjacent 0.5-cut endpoints = " +
                          format_shortest(worst_gap)});

    bool adjacent_ok = true;
    bool disjoint_ok = true;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto pieces = arc_intersect(p.set(i).support(), p.set(j).support());
            const double m = total_measure(pieces);
            if (p.adjacent(i, j)) {
                const std::size_t expected = n == 2 ? 2 : 1;
                adjacent_ok = adjacent_ok && pieces.size() == expected && m > 0.0;
            } else {
                disjoint_ok = disjoint_ok && m == 0.0;
            }
        }
    }
    checks.push_back({"adjacent-overlap", adjacent_ok,
                      "each neighbouring pair shares one transition zone"});
    checks.push_back({"non-adjacent-disjoint", disjoint_ok,
                      "supports of non-neighbours have zero-measure overlap"});
    return checks;
}

}  // namespace colibri
