#pragma once

// Linguistic fuzzy descriptors for single colors and whole images.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "colibri/circle.hpp"
#include "colibri/error.hpp"
#include "colibri/image.hpp"
#include "colibri/partition.hpp"

namespace colibri {

struct HsvColor {
    std::optional<Hue> h;  // empty on the gray axis (s == 0)
    double s = 0.0;
    double v = 0.0;
};

/// Hexcone conversion. The hue numerator is formed in integers and divided
/// once, so hues that are exact in 8-bit RGB (e.g. 240,184,0 -> 46) come out
/// exact.
inline HsvColor rgb_to_hsv(RgbColor c) {
    const int r = c.r;
    const int g = c.g;
    const int b = c.b;
    const int hi = std::max({r, g, b});
    const int lo = std::min({r, g, b});
    const int delta = hi - lo;

    HsvColor out;
    out.v = hi / 255.0;
    out.s = hi == 0 ? 0.0 : static_cast<double>(delta) / hi;
    if (delta == 0) return out;

    double h;
    if (hi == r) {
        h = static_cast<double>(60 * (g - b)) / delta;
    } else if (hi == g) {
        h = 120.0 + static_cast<double>(60 * (b - r)) / delta;
    } else {
        h = 240.0 + static_cast<double>(60 * (r - g)) / delta;
    }
    out.h = Hue(h);
    return out;
}

/// Inverse hexcone conversion, channels rounded to the nearest integer.
inline RgbColor hsv_to_rgb(Hue h, double s, double v) {
    const double sector = h.degrees() / 60.0;
    const int i = static_cast<int>(std::floor(sector)) % 6;
    const double f = sector - std::floor(sector);
    const double p = v * (1.0 - s);
    const double q = v * (1.0 - s * f);
    const double t = v * (1.0 - s * (1.0 - f));
    double r = 0, g = 0, b = 0;
    switch (i) {
        case 0: r = v; g = t; b = p; break;
        case 1: r = q; g = v; b = p; break;
        case 2: r = p; g = v; b = t; break;
        case 3: r = p; g = q; b = v; break;
        case 4: r = t; g = p; b = v; break;
        default: r = v; g = p; b = q; break;
    }
    auto to8 = [](double x) {
        return static_cast<std::uint8_t>(std::lround(std::clamp(x, 0.0, 1.0) * 255.0));
    };
    return {to8(r), to8(g), to8(b)};
}

/// Colors failing any threshold are treated as achromatic (gray, black or,
/// optionally, white) instead of receiving hue memberships.
struct AchromaticGate {
    double s_min = 0.15;
    double v_min = 0.10;
    double v_max_for_white = 1.0;

    bool achromatic(const HsvColor& c) const {
        return !c.h || c.s < s_min || c.v < v_min || c.v > v_max_for_white;
    }
};

inline const std::string kAchromaticLabel = "achromatic";

struct FuzzyColorDescriptor {
    std::vector<double> category_mass;  // ring order
    double achromatic_mass = 0.0;

    double total() const {
        return std::accumulate(category_mass.begin(), category_mass.end(), achromatic_mass);
    }
};

inline FuzzyColorDescriptor classify_hsv(const HuePartition& p, const HsvColor& c,
                                         const AchromaticGate& gate = {}) {
    FuzzyColorDescriptor d;
    if (gate.achromatic(c)) {
        d.category_mass.assign(p.size(), 0.0);
        d.achromatic_mass = 1.0;
    } else {
        d.category_mass = p.memberships(*c.h).degrees;
    }
    return d;
}

inline FuzzyColorDescriptor classify_color(const HuePartition& p, RgbColor c,
                                           const AchromaticGate& gate = {}) {
    return classify_hsv(p, rgb_to_hsv(c), gate);
}

/// Equal-weight average of per-pixel descriptors, normalised to unit mass.
/// Pixels are first counted per distinct color and the colors are combined in
/// ascending RGB order, so the result is bit-identical under any permutation
/// of the pixels.
inline FuzzyColorDescriptor image_descriptor(const HuePartition& p, const PixelGrid& img,
                                             const AchromaticGate& gate = {}) {
    if (img.empty()) throw DomainError("image_descriptor: image has no pixels");

    std::map<std::uint32_t, std::size_t> histogram;
    for (const RgbColor& px : img.pixels()) {
        ++histogram[(std::uint32_t{px.r} << 16) | (std::uint32_t{px.g} << 8) | px.b];
    }

    FuzzyColorDescriptor sum;
    sum.category_mass.assign(p.size(), 0.0);
    for (const auto& [key, count] : histogram) {
        const RgbColor c{static_cast<std::uint8_t>(key >> 16), static_cast<std::uint8_t>(key >> 8),
                         static_cast<std::uint8_t>(key)};
        const auto d = classify_color(p, c, gate);
        const auto w = static_cast<double>(count);
        for (std::size_t i = 0; i < p.size(); ++i) sum.category_mass[i] += w * d.category_mass[i];
        sum.achromatic_mass += w * d.achromatic_mass;
    }

    const double total = sum.total();
    for (double& m : sum.category_mass) m /= total;
    sum.achromatic_mass /= total;
    return sum;
}

struct LabeledMass {
    std::string label;
    double mass = 0.0;

    friend bool operator==(const LabeledMass&, const LabeledMass&) = default;
};

/// Top-k labels by mass, descending, zero masses omitted. Equal masses keep
/// ring order with the achromatic label last. 1 <= k <= categories + 1.
inline std::vector<LabeledMass> dominant_labels(const HuePartition& p,
                                                const FuzzyColorDescriptor& d, std::size_t k) {
    if (k < 1 || k > p.size() + 1) {
        throw DomainError("dominant_labels: k must lie in [1, " + std::to_string(p.size() + 1) + "]");
    }
    if (d.category_mass.size() != p.size()) {
        throw DomainError("dominant_labels: descriptor does not match the partition");
    }
    std::vector<LabeledMass> all;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (d.category_mass[i] > 0.0) all.push_back({p.name(i).str(), d.category_mass[i]});
    }
    if (d.achromatic_mass > 0.0) all.push_back({kAchromaticLabel, d.achromatic_mass});
    std::stable_sort(all.begin(), all.end(),
                     [](const LabeledMass& x, const LabeledMass& y) { return x.mass > y.mass; });
    if (all.size() > k) all.resize(k);
    return all;
}

}  // namespace colibri
