#pragma once

// colibri command-line front end. Exit codes: 0 success, 1 usage error,
// 2 data or validation error.

#include <charconv>
#include <cstdio>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "colibri/colibri.hpp"

namespace colibri::cli {

inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kDataError = 2;

namespace detail {

inline HuePartition load_model(const std::string& path) {
    if (path.empty()) return builtin_colibri();
    return load_partition(read_text_file(path));
}

inline std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

inline std::string four_significant(double x) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 4);
    return ec == std::errc{} ? std::string(buf, end) : "nan";
}

inline std::optional<RgbColor> parse_rgb(const std::string& text) {
    RgbColor c;
    std::uint8_t* channels[3] = {&c.r, &c.g, &c.b};
    std::size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
        const std::size_t comma = i < 2 ? text.find(',', pos) : text.size();
        if (comma == std::string::npos) return std::nullopt;
        unsigned value = 0;
        const char* first = text.data() + pos;
        const char* last = text.data() + comma;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last || first == last || value > 255) return std::nullopt;
        *channels[i] = static_cast<std::uint8_t>(value);
        pos = comma + 1;
    }
    return c;
}

inline void print_table(std::ostream& out, const std::vector<CategoryMetrics>& rows) {
    out << pad("category", 12) << pad("range", 18) << pad("wideness", 10) << pad("left_width", 12)
        << "right_width\n";
    for (const auto& r : rows) {
        const std::string range = format_shortest(r.wideness_range.start().degrees()) + " - " +
                                  format_shortest(r.wideness_range.end().degrees());
        out << pad(r.name.str(), 12) << pad(range, 18) << pad(format_shortest(r.wideness), 10)
            << pad(format_shortest(r.left_boundary_width), 12)
            << format_shortest(r.right_boundary_width) << '\n';
    }
}

inline void print_memberships(std::ostream& out, const HuePartition& p, const FuzzyColorDescriptor& d) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        out << pad(p.name(i).str(), 12) << format_fixed(d.category_mass[i], 3) << '\n';
    }
    out << pad(kAchromaticLabel, 12) << format_fixed(d.achromatic_mass, 3) << '\n';
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fuzzy hue categories: metrics, classification and figures"};
    app.name("colibri");
    app.require_subcommand(1);

    std::string model;
    double alpha = kDefaultAlpha;

    auto* metrics = app.add_subcommand("metrics", "Print wideness and boundary widths per category");
    std::string format = "table";
    metrics->add_option("--model", model, "Partition config (JSON); default is the built-in model");
    metrics->add_option("--alpha", alpha, "Alpha level of the cut");
    metrics->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "csv"}));

    auto* classify = app.add_subcommand("classify", "Membership vector and crisp label of one color");
    std::optional<double> hue;
    std::string rgb_text;
    auto* hue_opt = classify->add_option("--hue", hue, "Hue in degrees");
    auto* rgb_opt = classify->add_option("--rgb", rgb_text, "8-bit color as R,G,B");
    hue_opt->excludes(rgb_opt);
    classify->add_option("--model", model, "Partition config (JSON)");

    auto* label = app.add_subcommand("label", "Dominant fuzzy color labels of a PPM image");
    std::string image_path;
    std::size_t top_k = 3;
    AchromaticGate gate;
    label->add_option("IMAGE", image_path, "PPM image (P6 or P3)")->required();
    label->add_option("--top-k", top_k, "Number of labels to print");
    label->add_option("--model", model, "Partition config (JSON)");
    label->add_option("--s-min", gate.s_min, "Saturation below which a pixel is achromatic");
    label->add_option("--v-min", gate.v_min, "Value below which a pixel is achromatic");

    auto* plot = app.add_subcommand("plot", "Write an SVG figure");
    std::string figure;
    std::string out_path;
    plot->add_option("FIGURE", figure, "memberships or spectrum")
        ->required()
        ->check(CLI::IsMember({"memberships", "spectrum"}));
    plot->add_option("--out", out_path, "Output SVG file")->required();
    plot->add_option("--model", model, "Partition config (JSON)");
    plot->add_option("--alpha", alpha, "Alpha level of the cut line");

    auto* validate = app.add_subcommand("validate", "Check every partition invariant");
    validate->add_option("--model", model, "Partition config (JSON)")->required();

    auto* report = app.add_subcommand("report", "Widest/narrowest category asymmetry");
    report->add_option("--model", model, "Partition config (JSON)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "colibri: " << e.what() << "\n\n" << app.help();
        return kUsage;
    }

    try {
        if (*metrics) {
            const auto p = detail::load_model(model);
            const auto rows = metrics_table(p, alpha);
            if (format == "csv") {
                out << export_metrics_csv(rows);
            } else {
                detail::print_table(out, rows);
            }
        } else if (*classify) {
            if (!hue && rgb_text.empty()) {
                err << "colibri: classify needs --hue or --rgb\n\n" << classify->help();
                return kUsage;
            }
            const auto p = detail::load_model(model);
            HsvColor hsv;
            if (hue) {
                hsv = {Hue(*hue), 1.0, 1.0};
                out << "hue: " << format_shortest(hsv.h->degrees()) << '\n';
            } else {
                const auto rgb = detail::parse_rgb(rgb_text);
                if (!rgb) {
                    err << "colibri: --rgb expects R,G,B with integers in [0, 255]\n";
                    return kUsage;
                }
                hsv = rgb_to_hsv(*rgb);
                out << "rgb: " << int{rgb->r} << ',' << int{rgb->g} << ',' << int{rgb->b} << '\n'
                    << "hsv: " << (hsv.h ? format_fixed(hsv.h->degrees(), 3) : std::string("undefined"))
                    << ' ' << format_fixed(hsv.s, 3) << ' ' << format_fixed(hsv.v, 3) << '\n';
            }
            const auto d = classify_hsv(p, hsv, AchromaticGate{});
            detail::print_memberships(out, p, d);
            const bool achromatic = d.achromatic_mass > 0.0;
            out << "crisp: " << (achromatic ? kAchromaticLabel : p.category_of(*hsv.h).str()) << '\n';
        } else if (*label) {
            const auto p = detail::load_model(model);
            const auto img = read_image(image_path);
            const auto d = image_descriptor(p, img, gate);
            for (const auto& [name, mass] : dominant_labels(p, d, top_k)) {
                out << detail::pad(name, 12) << format_fixed(mass, 6) << '\n';
            }
        } else if (*plot) {
            const auto p = detail::load_model(model);
            PlotConfig cfg;
            cfg.alpha_line = alpha;
            const std::string svg =
                figure == "memberships" ? render_memberships(p, cfg) : render_spectrum(p, cfg);
            write_text_file(out_path, svg);
            out << "wrote " << out_path << '\n';
        } else if (*validate) {
            const auto p = detail::load_model(model);
            bool all = true;
            for (const auto& c : validate_partition(p)) {
                all = all && c.passed;
                out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
            }
            out << (all ? "all invariants hold\n" : "invariant violations found\n");
            return all ? kOk : kDataError;
        } else if (*report) {
            const auto p = detail::load_model(model);
            const auto r = asymmetry_report(p);
            out << detail::pad("category", 12) << "wideness\n";
            for (const auto& row : r.per_category) {
                out << detail::pad(row.name.str(), 12) << format_shortest(row.wideness) << '\n';
            }
            const auto& rows = r.per_category;
            auto width_of = [&](const CategoryName& n) {
                for (const auto& row : rows) {
                    if (row.name == n) return row.wideness;
                }
                return 0.0;
            };
            out << "widest: " << r.widest.str() << " (" << format_shortest(width_of(r.widest)) << ")\n"
                << "narrowest: " << r.narrowest.str() << " ("
                << format_shortest(width_of(r.narrowest)) << ")\n"
                << r.widest.str() << '/' << r.narrowest.str()
                << " ratio: " << detail::four_significant(r.ratio) << '\n';
        }
    } catch (const Error& e) {
        err << "colibri: " << e.what() << '\n';
        return kDataError;
    }
    return kOk;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.push_back("colibri");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace colibri::cli
