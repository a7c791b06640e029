#pragma once

// Ring of named hue categories and the reconstruction of their membership
// functions from published boundary crossings and transition widths.

#include <array>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "colibri/circle.hpp"
#include "colibri/error.hpp"
#include "colibri/fuzzyset.hpp"

namespace colibri {

class CategoryName {
public:
    explicit CategoryName(std::string label) : label_(std::move(label)) {
        if (label_.empty()) throw DomainError("CategoryName: label must not be empty");
    }

    const std::string& str() const noexcept { return label_; }

    friend bool operator==(const CategoryName&, const CategoryName&) = default;
    friend auto operator<=>(const CategoryName&, const CategoryName&) = default;

private:
    std::string label_;
};

/// Crossing between category k and its successor k + 1: where both
/// memberships equal 0.5, and the total width of their shared transition.
struct BoundarySpec {
    double position = 0.0;
    double width = 0.0;
};

/// Evaluation of every category at one hue, indexed in ring order.
struct MembershipVector {
    std::vector<double> degrees;

    double operator[](std::size_t i) const { return degrees[i]; }
    std::size_t size() const noexcept { return degrees.size(); }
    double sum() const { return std::accumulate(degrees.begin(), degrees.end(), 0.0); }
};

class HuePartition {
public:
    /// Categories in ring order. No partition-level invariant beyond distinct
    /// names is enforced here; see validate_partition() for the full set.
    HuePartition(std::vector<CategoryName> names, std::vector<CircularTrapezoid> sets)
        : names_(std::move(names)), sets_(std::move(sets)) {
        if (names_.size() != sets_.size()) {
            throw DomainError("HuePartition: names and membership functions differ in count");
        }
        if (names_.size() < 2) {
            throw DomainError("HuePartition: at least two categories are required");
        }
        for (std::size_t i = 0; i < names_.size(); ++i) {
            for (std::size_t j = i + 1; j < names_.size(); ++j) {
                if (names_[i] == names_[j]) {
                    throw DomainError("HuePartition: duplicate category '" + names_[i].str() + "'");
                }
            }
        }
    }

    std::size_t size() const noexcept { return names_.size(); }
    const CategoryName& name(std::size_t i) const { return names_.at(i); }
    const CircularTrapezoid& set(std::size_t i) const { return sets_.at(i); }
    const std::vector<CategoryName>& names() const noexcept { return names_; }
    const std::vector<CircularTrapezoid>& sets() const noexcept { return sets_; }

    std::size_t index_of(std::string_view label) const {
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i].str() == label) return i;
        }
        throw LookupError("unknown category '" + std::string(label) + "'");
    }

    const CircularTrapezoid& set(std::string_view label) const { return sets_[index_of(label)]; }

    std::size_t next(std::size_t i) const noexcept { return (i + 1) % size(); }
    std::size_t prev(std::size_t i) const noexcept { return (i + size() - 1) % size(); }
    bool adjacent(std::size_t i, std::size_t j) const noexcept {
        return i != j && (next(i) == j || next(j) == i);
    }

    MembershipVector memberships(Hue h) const {
        MembershipVector m;
        m.degrees.reserve(sets_.size());
        for (const auto& s : sets_) m.degrees.push_back(s.eval(h));
        return m;
    }

    /// Index of the maximal membership. Ties go to the lowest ring index.
    std::size_t category_index(Hue h) const {
        std::size_t best = 0;
        double best_mu = sets_[0].eval(h);
        for (std::size_t i = 1; i < sets_.size(); ++i) {
            const double mu = sets_[i].eval(h);
            if (mu > best_mu) {
                best = i;
                best_mu = mu;
            }
        }
        return best;
    }

    const CategoryName& category_of(Hue h) const { return names_[category_index(h)]; }

    HuePartition rotated(double delta) const {
        std::vector<CircularTrapezoid> sets;
        sets.reserve(sets_.size());
        for (const auto& s : sets_) sets.push_back(s.rotated(delta));
        return {names_, std::move(sets)};
    }

    friend bool operator==(const HuePartition&, const HuePartition&) = default;

private:
    std::vector<CategoryName> names_;
    std::vector<CircularTrapezoid> sets_;
};

inline MembershipVector memberships(const HuePartition& p, Hue h) { return p.memberships(h); }
inline const CategoryName& category_of(const HuePartition& p, Hue h) { return p.category_of(h); }

/// Reconstructs membership functions from boundary crossings. Boundary k
/// separates category k from category k + 1 (the last one separates the last
/// category from the first). Each transition is centred on its crossing,
/// extending width / 2 to either side with complementary linear shoulders,
/// so for category k bounded by (pl, wl) and (pr, wr):
///
///     a = pl - wl/2, b = pl + wl/2, c = pr - wr/2, d = pr + wr/2
///
/// The result is a Ruspini partition whose 0.5-crossings and support overlaps
/// reproduce the specs.
inline HuePartition from_boundaries(std::span<const BoundarySpec> specs,
                                    std::span<const CategoryName> names) {
    const std::size_t n = specs.size();
    if (names.size() != n) {
        throw DomainError("from_boundaries: need exactly one boundary per category");
    }
    if (n < 2) throw DomainError("from_boundaries: at least two categories are required");

    for (std::size_t k = 0; k < n; ++k) {
        const auto& s = specs[k];
        if (!std::isfinite(s.position)) {
            throw DomainError("from_boundaries: boundary position must be finite");
        }
        if (!(std::isfinite(s.width) && s.width > 0.0)) {
            throw InconsistentSpecError(names[k].str(),
                                        "transition width after category '" + names[k].str() +
                                            "' must be positive");
        }
    }

    // gap[k]: ascending distance from boundary k to boundary k + 1.
    std::vector<double> gap(n);
    double winding = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        gap[k] = ccw_distance(Hue(specs[k].position), Hue(specs[(k + 1) % n].position));
        if (!(gap[k] > 0.0)) {
            throw OrderingError("from_boundaries: boundaries " + std::to_string(k) + " and " +
                                std::to_string((k + 1) % n) + " coincide");
        }
        winding += gap[k];
    }
    if (std::abs(winding - kPeriod) > kAngleTolerance * static_cast<double>(n)) {
        throw OrderingError("from_boundaries: boundary positions are not in ascending circular order");
    }

    // Category i lies between boundary i - 1 and boundary i.
    std::vector<double> plateau(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t left = (i + n - 1) % n;
        plateau[i] = gap[left] - (specs[left].width + specs[i].width) / 2.0;
        if (plateau[i] < 0.0 && plateau[i] > -kAngleTolerance) plateau[i] = 0.0;
        if (plateau[i] < 0.0) {
            throw InconsistentSpecError(
                names[i].str(), "category '" + names[i].str() +
                                    "': transitions overlap, core would have negative width (" +
                                    std::to_string(plateau[i]) + " degrees)");
        }
    }

    std::vector<CircularTrapezoid> sets;
    sets.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const BoundarySpec& l = specs[(i + n - 1) % n];
        const BoundarySpec& r = specs[i];
        if (!(l.width + plateau[i] + r.width < kPeriod)) {
            throw InconsistentSpecError(names[i].str(), "category '" + names[i].str() +
                                                            "': support covers the whole circle");
        }
        sets.push_back(CircularTrapezoid::from_spacings(Hue(l.position - l.width / 2.0), l.width,
                                                        plateau[i], r.width));
    }
    return {std::vector<CategoryName>(names.begin(), names.end()), std::move(sets)};
}

inline HuePartition from_boundaries(const std::vector<BoundarySpec>& specs,
                                    const std::vector<CategoryName>& names) {
    return from_boundaries(std::span<const BoundarySpec>(specs), std::span<const CategoryName>(names));
}

/// The nine hue category labels in ring order.
inline std::vector<CategoryName> colibri_category_names() {
    static constexpr std::array<std::string_view, 9> kLabels = {
        "red", "orange", "yellow", "green", "cyan", "lightblue", "blue", "violet", "magenta"};
    std::vector<CategoryName> out;
    out.reserve(kLabels.size());
    for (auto l : kLabels) out.emplace_back(std::string(l));
    return out;
}

/// Published 0.5-crossings and transition widths of the COLIBRI hue model.
/// Entry k is the boundary between category k and k + 1 in ring order.
inline std::vector<BoundarySpec> colibri_boundaries() {
    return {
        {12.5, 15.0},   // red | orange
        {40.0, 12.0},   // orange | yellow
        {55.5, 19.0},   // yellow | green
        {151.5, 47.0},  // green | cyan
        {180.5, 11.0},  // cyan | lightblue
        {199.5, 27.0},  // lightblue | blue
        {255.0, 30.0},  // blue | violet
        {300.5, 45.0},  // violet | magenta
        {340.5, 21.0},  // magenta | red
    };
}

inline HuePartition builtin_colibri() {
    return from_boundaries(colibri_boundaries(), colibri_category_names());
}

}  // namespace colibri
