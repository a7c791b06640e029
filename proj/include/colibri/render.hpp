#pragma once

// Standalone SVG 1.1 figures of a hue partition: the membership curves with
// an alpha-cut line, and the hue spectrum bar with category boundaries.
// Coordinates are written with three decimals, so output is byte-stable.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "colibri/circle.hpp"
#include "colibri/classify.hpp"
#include "colibri/error.hpp"
#include "colibri/format.hpp"
#include "colibri/partition.hpp"

namespace colibri {

struct PlotConfig {
    int width_px = 960;
    int height_px = 420;
    double alpha_line = 0.5;
    double sample_step = 1.0;
    bool show_labels = true;

    void validate() const {
        if (width_px < 200 || height_px < 100) {
            throw DomainError("PlotConfig: figure must be at least 200x100 pixels");
        }
        if (!(alpha_line > 0.0 && alpha_line <= 1.0)) {
            throw DomainError("PlotConfig: alpha_line must lie in (0, 1]");
        }
        if (!(sample_step > 0.0 && sample_step <= 5.0)) {
            throw DomainError("PlotConfig: sample_step must lie in (0, 5]");
        }
    }
};

namespace detail {

inline std::string hex_color(RgbColor c) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c.r, c.g, c.b);
    return buf;
}

inline std::string svg_open(int w, int h) {
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w
       << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n"
       << "<rect x=\"0\" y=\"0\" width=\"" << w << "\" height=\"" << h
       << "\" fill=\"#ffffff\"/>\n";
    return os.str();
}

// Color used to draw a category: its hue at the middle of the 0.5-cut.
inline Hue representative_hue(const CircularTrapezoid& t) {
    const Arc cut = t.alpha_cut(0.5);
    return cut.start() + cut.measure() / 2.0;
}

// Sample hues in [0, 360] for a polyline: the regular grid plus every knot,
// so peaks and corners are drawn exactly.
inline std::vector<double> sample_hues(const CircularTrapezoid& t, double step) {
    std::vector<double> xs;
    const auto steps = static_cast<long>(std::floor(kPeriod / step));
    for (long k = 0; k <= steps; ++k) xs.push_back(static_cast<double>(k) * step);
    xs.push_back(kPeriod);
    for (Hue knot : {t.a(), t.b(), t.c(), t.d()}) {
        xs.push_back(knot.degrees());
        if (knot.degrees() == 0.0) xs.push_back(kPeriod);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    while (!xs.empty() && xs.back() > kPeriod) xs.pop_back();
    return xs;
}

}  // namespace detail

/// Membership curves of every category over 0..360 degrees with a dashed
/// horizontal line at cfg.alpha_line.
inline std::string render_memberships(const HuePartition& p, const PlotConfig& cfg = {}) {
    cfg.validate();
    const double left = 50.0, right = 20.0, top = 20.0, bottom = 40.0;
    const double pw = cfg.width_px - left - right;
    const double ph = cfg.height_px - top - bottom;
    auto px = [&](double h) { return left + h / kPeriod * pw; };
    auto py = [&](double mu) { return top + (1.0 - mu) * ph; };

    std::ostringstream os;
    os << detail::svg_open(cfg.width_px, cfg.height_px);

    os << "<g class=\"axes\" stroke=\"#000000\" stroke-width=\"1\" font-family=\"sans-serif\" "
          "font-size=\"11\">\n";
    os << "<line x1=\"" << format_fixed(px(0)) << "\" y1=\"" << format_fixed(py(0))
       << "\" x2=\"" << format_fixed(px(kPeriod)) << "\" y2=\"" << format_fixed(py(0)) << "\"/>\n";
    os << "<line x1=\"" << format_fixed(px(0)) << "\" y1=\"" << format_fixed(py(0))
       << "\" x2=\"" << format_fixed(px(0)) << "\" y2=\"" << format_fixed(py(1)) << "\"/>\n";
    for (int deg = 0; deg <= 360; deg += 30) {
        const std::string x = format_fixed(px(deg));
        os << "<line x1=\"" << x << "\" y1=\"" << format_fixed(py(0)) << "\" x2=\"" << x
           << "\" y2=\"" << format_fixed(py(0) + 4) << "\"/>\n";
        os << "<text x=\"" << x << "\" y=\"" << format_fixed(py(0) + 16)
           << "\" stroke=\"none\" text-anchor=\"middle\">" << deg << "</text>\n";
    }
    for (int tenth = 0; tenth <= 10; tenth += 5) {
        const double mu = tenth / 10.0;
        const std::string y = format_fixed(py(mu));
        os << "<line x1=\"" << format_fixed(px(0) - 4) << "\" y1=\"" << y << "\" x2=\""
           << format_fixed(px(0)) << "\" y2=\"" << y << "\"/>\n";
        os << "<text x=\"" << format_fixed(px(0) - 8) << "\" y=\"" << format_fixed(py(mu) + 4)
           << "\" stroke=\"none\" text-anchor=\"end\">" << format_fixed(mu, 1) << "</text>\n";
    }
    os << "</g>\n";

    for (std::size_t i = 0; i < p.size(); ++i) {
        const CircularTrapezoid& mu = p.set(i);
        const std::string color = detail::hex_color(hsv_to_rgb(detail::representative_hue(mu), 1.0, 0.85));
        os << "<polyline class=\"membership\" data-category=\"" << p.name(i).str()
           << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        bool first = true;
        for (double h : detail::sample_hues(mu, cfg.sample_step)) {
            if (!first) os << ' ';
            first = false;
            os << format_fixed(px(h)) << ',' << format_fixed(py(mu.eval(Hue(h))));
        }
        os << "\"/>\n";
    }

    os << "<line class=\"alpha-cut\" x1=\"" << format_fixed(px(0)) << "\" y1=\""
       << format_fixed(py(cfg.alpha_line)) << "\" x2=\"" << format_fixed(px(kPeriod))
       << "\" y2=\"" << format_fixed(py(cfg.alpha_line))
       << "\" stroke=\"#444444\" stroke-width=\"1\" stroke-dasharray=\"6,4\"/>\n";

    if (cfg.show_labels) {
        os << "<g class=\"labels\" font-family=\"sans-serif\" font-size=\"11\" "
              "text-anchor=\"middle\">\n";
        for (std::size_t i = 0; i < p.size(); ++i) {
            const Hue at = detail::representative_hue(p.set(i));
            os << "<text x=\"" << format_fixed(px(at.degrees())) << "\" y=\""
               << format_fixed(py(1.0) - 6) << "\">" << p.name(i).str() << "</text>\n";
        }
        os << "</g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

/// Hue bar of fully saturated strips with a vertical marker at every
/// endpoint of the categories' alpha-cuts (at 0.5 these are the crossings
/// between neighbours) and one invisible region rectangle per cut.
inline std::string render_spectrum(const HuePartition& p, const PlotConfig& cfg = {}) {
    cfg.validate();
    const double side = 10.0, top = 10.0;
    const double pw = cfg.width_px - 2.0 * side;
    const double bar_h = cfg.height_px - top - 40.0;
    auto px = [&](double h) { return side + h / kPeriod * pw; };

    std::ostringstream os;
    os << detail::svg_open(cfg.width_px, cfg.height_px);

    os << "<g class=\"spectrum\" shape-rendering=\"crispEdges\">\n";
    const auto strips = static_cast<long>(std::ceil(kPeriod / cfg.sample_step - 1e-9));
    for (long k = 0; k < strips; ++k) {
        const double h0 = static_cast<double>(k) * cfg.sample_step;
        const double h1 = std::min(h0 + cfg.sample_step, kPeriod);
        const RgbColor c = hsv_to_rgb(Hue((h0 + h1) / 2.0), 1.0, 1.0);
        os << "<rect x=\"" << format_fixed(px(h0)) << "\" y=\"" << format_fixed(top)
           << "\" width=\"" << format_fixed(px(h1) - px(h0)) << "\" height=\""
           << format_fixed(bar_h) << "\" fill=\"" << detail::hex_color(c) << "\"/>\n";
    }
    os << "</g>\n";

    std::vector<double> marks;
    for (const auto& set : p.sets()) {
        const Arc cut = set.alpha_cut(cfg.alpha_line);
        marks.push_back(cut.start().degrees());
        marks.push_back(cut.end().degrees());
    }
    std::sort(marks.begin(), marks.end());
    std::vector<double> unique_marks;
    for (double m : marks) {
        if (unique_marks.empty() || std::abs(m - unique_marks.back()) > kAngleTolerance) {
            unique_marks.push_back(m);
        }
    }
    if (unique_marks.size() > 1 &&
        kPeriod - unique_marks.back() + unique_marks.front() <= kAngleTolerance) {
        unique_marks.pop_back();
    }

    for (std::size_t i = 0; i < p.size(); ++i) {
        const Arc cut = p.set(i).alpha_cut(cfg.alpha_line);
        std::vector<std::pair<double, double>> spans;
        if (cut.wraps()) {
            spans = {{cut.start().degrees(), kPeriod}, {0.0, cut.end().degrees()}};
        } else {
            spans = {{cut.start().degrees(), cut.start().degrees() + cut.measure()}};
        }
        for (const auto& [h0, h1] : spans) {
            os << "<rect class=\"region\" data-category=\"" << p.name(i).str() << "\" x=\""
               << format_fixed(px(h0)) << "\" y=\"" << format_fixed(top) << "\" width=\""
               << format_fixed(px(h1) - px(h0)) << "\" height=\"" << format_fixed(bar_h)
               << "\" fill=\"none\" stroke=\"none\"/>\n";
        }
    }

    for (double m : unique_marks) {
        const std::string x = format_fixed(px(m));
        os << "<line class=\"boundary\" data-hue=\"" << format_fixed(m) << "\" x1=\"" << x
           << "\" y1=\"" << format_fixed(top) << "\" x2=\"" << x << "\" y2=\""
           << format_fixed(top + bar_h) << "\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";
    }

    if (cfg.show_labels) {
        os << "<g class=\"labels\" font-family=\"sans-serif\" font-size=\"12\" "
              "text-anchor=\"middle\">\n";
        for (std::size_t i = 0; i < p.size(); ++i) {
            const Arc cut = p.set(i).alpha_cut(cfg.alpha_line);
            const Hue mid = cut.start() + cut.measure() / 2.0;
            os << "<text x=\"" << format_fixed(px(mid.degrees())) << "\" y=\""
               << format_fixed(top + bar_h + 22.0) << "\">" << p.name(i).str() << "</text>\n";
        }
        os << "</g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace colibri
