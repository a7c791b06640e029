#include <gtest/gtest.h>

#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "colibri/metrics.hpp"
#include "colibri/render.hpp"

using namespace colibri;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

struct Point {
    double x, y;
};

std::vector<Point> polyline_points(const std::string& svg, const std::string& category) {
    const std::regex re("data-category=\"" + category + "\"[^>]*points=\"([^\"]*)\"");
    std::smatch m;
    if (!std::regex_search(svg, m, re)) return {};
    std::vector<Point> pts;
    std::istringstream in(m[1].str());
    std::string pair;
    while (in >> pair) {
        const auto comma = pair.find(',');
        pts.push_back({std::stod(pair.substr(0, comma)), std::stod(pair.substr(comma + 1))});
    }
    return pts;
}

std::vector<double> boundary_xs(const std::string& svg) {
    const std::regex re("class=\"boundary\" data-hue=\"[^\"]*\" x1=\"([^\"]*)\"");
    std::vector<double> xs;
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it) {
        xs.push_back(std::stod((*it)[1].str()));
    }
    return xs;
}

double region_width(const std::string& svg, const std::string& category) {
    const std::regex re("class=\"region\" data-category=\"" + category +
                        "\" x=\"[^\"]*\" y=\"[^\"]*\" width=\"([^\"]*)\"");
    double total = 0.0;
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it) {
        total += std::stod((*it)[1].str());
    }
    return total;
}

}  // namespace

TEST(RenderMemberships, Structure) {
    const auto svg = render_memberships(builtin_colibri());
    EXPECT_EQ(count(svg, "<polyline class=\"membership\""), 9u);
    EXPECT_EQ(count(svg, "class=\"alpha-cut\""), 1u);
    EXPECT_EQ(svg.rfind("</svg>\n"), svg.size() - 7);
    EXPECT_EQ(svg, render_memberships(builtin_colibri()));
}

TEST(RenderMemberships, YellowPeakAt46) {
    const PlotConfig cfg;
    const auto pts = polyline_points(render_memberships(builtin_colibri(), cfg), "yellow");
    ASSERT_FALSE(pts.empty());
    auto top = std::min_element(pts.begin(), pts.end(), [](Point a, Point b) { return a.y < b.y; });
    // layout: 50 px left margin, 20 px right, 20 px top, 40 px bottom
    const double pw = cfg.width_px - 70.0;
    const double ph = cfg.height_px - 60.0;
    EXPECT_NEAR((top->x - 50.0) / pw * 360.0, 46.0, 0.002);
    EXPECT_NEAR(1.0 - (top->y - 20.0) / ph, 1.0, 1e-6);
}

TEST(RenderMemberships, RotatedPartitionKeepsStructure) {
    const auto a = render_memberships(builtin_colibri());
    const auto b = render_memberships(builtin_colibri().rotated(90.0));
    EXPECT_NE(a, b);
    EXPECT_EQ(count(b, "<polyline class=\"membership\""), 9u);
    EXPECT_EQ(count(b, "class=\"alpha-cut\""), 1u);
}

TEST(RenderMemberships, InvalidConfig) {
    PlotConfig cfg;
    cfg.width_px = 150;
    EXPECT_THROW(render_memberships(builtin_colibri(), cfg), DomainError);
    cfg = {};
    cfg.sample_step = 6.0;
    EXPECT_THROW(render_spectrum(builtin_colibri(), cfg), DomainError);
    cfg = {};
    cfg.alpha_line = 0.0;
    EXPECT_THROW(render_memberships(builtin_colibri(), cfg), DomainError);
}

TEST(RenderSpectrum, MarkersAtCrossings) {
    const PlotConfig cfg;
    const auto svg = render_spectrum(builtin_colibri(), cfg);
    const auto xs = boundary_xs(svg);
    const double want[] = {12.5, 40.0, 55.5, 151.5, 180.5, 199.5, 255.0, 300.5, 340.5};
    ASSERT_EQ(xs.size(), 9u);
    const double pw = cfg.width_px - 20.0;
    for (std::size_t i = 0; i < 9; ++i) {
        EXPECT_NEAR((xs[i] - 10.0) / pw * 360.0, want[i], 0.001);
    }
    EXPECT_NEAR(region_width(svg, "green"), 96.0 / 360.0 * pw, 0.002);
    EXPECT_NEAR(region_width(svg, "red"), 32.0 / 360.0 * pw, 0.002);
    EXPECT_EQ(svg, render_spectrum(builtin_colibri(), cfg));
}

TEST(RenderSpectrum, TwoCategoryPartition) {
    const auto p = from_boundaries(std::vector<BoundarySpec>{{90, 20}, {250, 40}},
                                   std::vector<CategoryName>{CategoryName("warm"), CategoryName("cool")});
    EXPECT_EQ(boundary_xs(render_spectrum(p)).size(), 2u);
}

TEST(RenderSpectrum, MinimumWidthStillResolvesMarkers) {
    PlotConfig cfg;
    cfg.width_px = 200;
    cfg.height_px = 100;
    const auto xs = boundary_xs(render_spectrum(builtin_colibri(), cfg));
    const auto specs = boundary_specs(builtin_colibri());
    ASSERT_EQ(xs.size(), 9u);
    std::vector<double> want;
    for (const auto& s : specs) want.push_back(s.position);
    std::sort(want.begin(), want.end());
    for (std::size_t i = 0; i < 9; ++i) EXPECT_NEAR((xs[i] - 10.0) / 180.0 * 360.0, want[i], 0.001);
}
