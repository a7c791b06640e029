#pragma once

// External formats: partition config (JSON), metrics export (CSV) and
// binary/ASCII PPM images.

#include <cctype>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "colibri/error.hpp"
#include "colibri/format.hpp"
#include "colibri/image.hpp"
#include "colibri/metrics.hpp"
#include "colibri/partition.hpp"

namespace colibri {

// ---------------------------------------------------------------------------
// Partition config
//
//   { "period": 360,
//     "categories": [ { "name": "red" }, ... ],
//     "boundaries": [ { "position": 12.5, "width": 15 }, ... ] }
//
// Boundary k separates category k from k + 1; the last one closes the ring.

namespace detail {

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

inline double finite_number(const nlohmann::json& j, const std::string& field) {
    if (!j.is_number()) throw SchemaError(field, field + ": expected a number");
    const double x = j.get<double>();
    if (!std::isfinite(x)) throw SchemaError(field, field + ": must be finite");
    return x;
}

}  // namespace detail

struct PartitionSpec {
    std::vector<CategoryName> names;
    std::vector<BoundarySpec> boundaries;
};

/// Parses and schema-checks a config document without building the
/// partition.
inline PartitionSpec parse_partition_spec(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
        auto [line, column] = detail::line_column(text, offset);
        throw ParseError(line, column, "config: JSON parse error at line " + std::to_string(line) +
                                           ", column " + std::to_string(column) + ": " + e.what());
    }

    if (!doc.is_object()) throw SchemaError("(root)", "config: top level must be an object");
    if (doc.contains("period")) {
        const double period = detail::finite_number(doc["period"], "period");
        if (period != kPeriod) throw SchemaError("period", "period: only 360 is supported");
    }
    if (!doc.contains("categories") || !doc["categories"].is_array()) {
        throw SchemaError("categories", "categories: required array is missing");
    }
    if (!doc.contains("boundaries") || !doc["boundaries"].is_array()) {
        throw SchemaError("boundaries", "boundaries: required array is missing");
    }
    const auto& cats = doc["categories"];
    const auto& bounds = doc["boundaries"];
    if (cats.size() < 2) {
        throw SchemaError("categories", "categories: at least two categories are required");
    }
    if (bounds.size() != cats.size()) {
        throw SchemaError("boundaries", "boundaries: expected one boundary per category (" +
                                            std::to_string(cats.size()) + "), got " +
                                            std::to_string(bounds.size()));
    }

    PartitionSpec spec;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < cats.size(); ++i) {
        const std::string field = "categories[" + std::to_string(i) + "].name";
        const auto& c = cats[i];
        if (!c.is_object() || !c.contains("name") || !c["name"].is_string() ||
            c["name"].get<std::string>().empty()) {
            throw SchemaError(field, field + ": expected a non-empty string");
        }
        std::string name = c["name"].get<std::string>();
        if (!seen.insert(name).second) {
            throw SchemaError(field, field + ": duplicate category '" + name + "'");
        }
        spec.names.emplace_back(std::move(name));
    }
    for (std::size_t k = 0; k < bounds.size(); ++k) {
        const std::string base = "boundaries[" + std::to_string(k) + "]";
        const auto& b = bounds[k];
        if (!b.is_object()) throw SchemaError(base, base + ": expected an object");
        if (!b.contains("position")) throw SchemaError(base + ".position", base + ".position: missing");
        if (!b.contains("width")) throw SchemaError(base + ".width", base + ".width: missing");
        BoundarySpec s;
        s.position = detail::finite_number(b["position"], base + ".position");
        s.width = detail::finite_number(b["width"], base + ".width");
        if (!(s.width > 0.0)) throw SchemaError(base + ".width", base + ".width: must be positive");
        if (k > 0 && !(s.position > spec.boundaries.back().position)) {
            throw SchemaError(base + ".position", base + ".position: positions must be strictly ascending");
        }
        spec.boundaries.push_back(s);
    }
    if (!(spec.boundaries.back().position - spec.boundaries.front().position < kPeriod)) {
        throw SchemaError("boundaries", "boundaries: positions must lie within one period");
    }
    return spec;
}

inline HuePartition load_partition(std::string_view text) {
    const PartitionSpec spec = parse_partition_spec(text);
    return from_boundaries(spec.boundaries, spec.names);
}

/// Document that load_partition() turns back into `p`. Positions are written
/// unrolled (ascending within one period) starting from the first boundary.
inline std::string emit_partition_config(const HuePartition& p) {
    const auto specs = boundary_specs(p);
    nlohmann::json doc;
    doc["period"] = 360;
    doc["categories"] = nlohmann::json::array();
    for (const auto& n : p.names()) doc["categories"].push_back({{"name", n.str()}});
    doc["boundaries"] = nlohmann::json::array();
    double pos = specs.front().position;
    for (std::size_t k = 0; k < specs.size(); ++k) {
        if (k > 0) pos += ccw_distance(Hue(specs[k - 1].position), Hue(specs[k].position));
        doc["boundaries"].push_back({{"position", pos}, {"width", specs[k].width}});
    }
    return doc.dump(2) + "\n";
}

inline std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path.string() + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_text_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path.string() + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error("write to '" + path.string() + "' failed");
}

// ---------------------------------------------------------------------------
// Metrics CSV

inline constexpr std::string_view kMetricsCsvHeader =
    "category,range_start,range_end,wideness,left_boundary_width,right_boundary_width";

inline std::string export_metrics_csv(const std::vector<CategoryMetrics>& rows) {
    if (rows.empty()) throw DomainError("export_metrics_csv: no rows");
    std::string out(kMetricsCsvHeader);
    out += '\n';
    for (const auto& r : rows) {
        out += r.name.str();
        for (double v : {r.wideness_range.start().degrees(), r.wideness_range.end().degrees(),
                         r.wideness, r.left_boundary_width, r.right_boundary_width}) {
            out += ',';
            out += format_shortest(v);
        }
        out += '\n';
    }
    return out;
}

// ---------------------------------------------------------------------------
// PPM images: P6 (binary) and P3 (ASCII), maxval 255.

namespace detail {

class PnmHeaderReader {
public:
    explicit PnmHeaderReader(std::string_view data) : data_(data) {}

    std::size_t pos() const noexcept { return pos_; }

    void skip_space_and_comments() {
        while (pos_ < data_.size()) {
            const char ch = data_[pos_];
            if (ch == '#') {
                while (pos_ < data_.size() && data_[pos_] != '\n') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(ch))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    // Unsigned decimal; returns false if no digit is present.
    bool read_uint(unsigned long& value) {
        skip_space_and_comments();
        const std::size_t start = pos_;
        value = 0;
        while (pos_ < data_.size() && std::isdigit(static_cast<unsigned char>(data_[pos_]))) {
            if (value > 100'000'000UL) return false;
            value = value * 10 + static_cast<unsigned long>(data_[pos_] - '0');
            ++pos_;
        }
        return pos_ > start;
    }

    bool at_space() const {
        return pos_ < data_.size() && std::isspace(static_cast<unsigned char>(data_[pos_]));
    }
    void advance() { ++pos_; }

private:
    std::string_view data_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline PixelGrid parse_ppm(std::string_view data) {
    using Kind = ImageError::Kind;
    if (data.size() < 2 || data[0] != 'P') {
        throw ImageError(Kind::unsupported_format, "image: not a PPM file");
    }
    const bool binary = data[1] == '6';
    if (!binary && data[1] != '3') {
        throw ImageError(Kind::unsupported_format,
                         std::string("image: unsupported netpbm variant P") + data[1]);
    }

    detail::PnmHeaderReader rd(data.substr(2));
    unsigned long width = 0, height = 0, maxval = 0;
    if (!rd.read_uint(width) || !rd.read_uint(height) || !rd.read_uint(maxval)) {
        throw ImageError(Kind::malformed_header, "image: header must hold width, height and maxval");
    }
    if (width == 0 || height == 0) {
        throw ImageError(Kind::malformed_header, "image: dimensions must be positive");
    }
    if (maxval == 0 || maxval > 65535) {
        throw ImageError(Kind::malformed_header, "image: maxval out of range");
    }
    if (maxval != 255) {
        throw ImageError(Kind::unsupported_format,
                         "image: only maxval 255 is supported (got " + std::to_string(maxval) + ")");
    }
    if (!rd.at_space()) {
        throw ImageError(Kind::malformed_header, "image: missing whitespace after maxval");
    }
    rd.advance();

    const std::size_t count = static_cast<std::size_t>(width) * height;
    const std::string_view payload = data.substr(2 + rd.pos());
    std::vector<RgbColor> pixels;

    if (binary) {
        if (payload.size() / 3 < count) {
            throw ImageError(Kind::malformed_payload,
                             "image: payload truncated, expected " + std::to_string(count * 3) +
                                 " bytes, found " + std::to_string(payload.size()));
        }
        pixels.resize(count);
        for (std::size_t i = 0; i < count; ++i) {
            pixels[i] = {static_cast<std::uint8_t>(payload[3 * i]),
                         static_cast<std::uint8_t>(payload[3 * i + 1]),
                         static_cast<std::uint8_t>(payload[3 * i + 2])};
        }
    } else {
        // Each sample needs at least two bytes of text.
        if (payload.size() / 2 + 1 < count * 3) {
            throw ImageError(Kind::malformed_payload, "image: payload truncated");
        }
        detail::PnmHeaderReader body(payload);
        pixels.resize(count);
        for (std::size_t i = 0; i < count; ++i) {
            unsigned long ch[3];
            for (auto& c : ch) {
                if (!body.read_uint(c) || c > maxval) {
                    throw ImageError(Kind::malformed_payload,
                                     "image: bad or missing sample for pixel " + std::to_string(i));
                }
            }
            pixels[i] = {static_cast<std::uint8_t>(ch[0]), static_cast<std::uint8_t>(ch[1]),
                         static_cast<std::uint8_t>(ch[2])};
        }
    }
    return {width, height, std::move(pixels)};
}

inline PixelGrid read_image(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ImageError(ImageError::Kind::missing_file, "image: cannot open '" + path.string() + "'");
    }
    const std::string data{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_ppm(data);
}

/// Binary P6 encoding of the grid.
inline std::string encode_ppm(const PixelGrid& img) {
    std::string out = "P6\n" + std::to_string(img.width()) + " " + std::to_string(img.height()) +
                      "\n255\n";
    out.reserve(out.size() + img.pixels().size() * 3);
    for (const RgbColor& c : img.pixels()) {
        out += static_cast<char>(c.r);
        out += static_cast<char>(c.g);
        out += static_cast<char>(c.b);
    }
    return out;
}

}  // namespace colibri
