#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "colibri/error.hpp"

namespace colibri {

struct RgbColor {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    friend bool operator==(const RgbColor&, const RgbColor&) = default;
};

/// Row-major raster of 8-bit RGB pixels.
class PixelGrid {
public:
    PixelGrid() = default;
    PixelGrid(std::size_t width, std::size_t height, std::vector<RgbColor> pixels)
        : width_(width), height_(height), pixels_(std::move(pixels)) {
        if (pixels_.size() != width_ * height_) {
            throw DomainError("PixelGrid: pixel count does not match dimensions");
        }
    }
    PixelGrid(std::size_t width, std::size_t height, RgbColor fill = {})
        : PixelGrid(width, height, std::vector<RgbColor>(width * height, fill)) {}

    std::size_t width() const noexcept { return width_; }
    std::size_t height() const noexcept { return height_; }
    bool empty() const noexcept { return pixels_.empty(); }
    const std::vector<RgbColor>& pixels() const noexcept { return pixels_; }

    RgbColor& at(std::size_t x, std::size_t y) { return pixels_.at(y * width_ + x); }
    const RgbColor& at(std::size_t x, std::size_t y) const { return pixels_.at(y * width_ + x); }

    friend bool operator==(const PixelGrid&, const PixelGrid&) = default;

private:
    std::size_t width_ = 0;
    std::size_t height_ = 0;
    std::vector<RgbColor> pixels_;
};

}  // namespace colibri
