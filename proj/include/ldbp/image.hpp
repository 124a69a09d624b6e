#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ldbp/error.hpp"

namespace ldbp {

/// 8-bit grayscale image, row-major, top-left origin, y grows downward.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    GrayImage() = default;

    GrayImage(int w, int h, std::uint8_t fill = 0)
        : width(w), height(h) {
        if (w < 1 || h < 1)
            throw Error("GrayImage: dimensions must be at least 1x1, got " +
                        std::to_string(w) + "x" + std::to_string(h));
        pixels.assign(static_cast<std::size_t>(w) * h, fill);
    }

    static GrayImage from_pixels(int w, int h, std::vector<std::uint8_t> px) {
        GrayImage img(w, h);
        if (px.size() != img.pixels.size())
            throw Error("GrayImage: pixel buffer has " + std::to_string(px.size()) +
                        " entries, expected " + std::to_string(img.pixels.size()));
        img.pixels = std::move(px);
        return img;
    }

    std::uint8_t at(int x, int y) const {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }
    std::uint8_t& at(int x, int y) {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }

    bool operator==(const GrayImage&) const = default;
};

/// Ordered stack of equally sized frames; voxel (x,y,t) = frames[t](x,y).
struct VideoVolume {
    std::vector<GrayImage> frames;

    int width() const { return frames.empty() ? 0 : frames.front().width; }
    int height() const { return frames.empty() ? 0 : frames.front().height; }
    int length() const { return static_cast<int>(frames.size()); }

    std::uint8_t voxel(int x, int y, int t) const { return frames[t].at(x, y); }
    const GrayImage& frame(int t) const { return frames[t]; }

    bool operator==(const VideoVolume&) const = default;
};

inline VideoVolume build_volume(std::vector<GrayImage> frames) {
    if (frames.empty())
        throw Error("build_volume: empty frame sequence");
    const int w = frames.front().width;
    const int h = frames.front().height;
    for (std::size_t i = 1; i < frames.size(); ++i) {
        if (frames[i].width != w || frames[i].height != h)
            throw Error("build_volume: frame " + std::to_string(i) + " is " +
                        std::to_string(frames[i].width) + "x" + std::to_string(frames[i].height) +
                        ", expected " + std::to_string(w) + "x" + std::to_string(h));
    }
    VideoVolume v;
    v.frames = std::move(frames);
    return v;
}

/// Axis-aligned pixel rectangle, fully inside the frame it partitions.
struct BlockRect {
    int x0 = 0;
    int y0 = 0;
    int w = 0;
    int h = 0;

    bool operator==(const BlockRect&) const = default;
};

/// Result of partitioning a frame into non-overlapping whole blocks.
/// Remainder pixels on the right/bottom edges are not covered; their
/// extent is reported so callers can see what was dropped.
struct BlockGrid {
    std::vector<BlockRect> blocks; // row-major
    int cols = 0;
    int rows = 0;
    int block_w = 0;
    int block_h = 0;
    int remainder_x = 0; // uncovered columns on the right
    int remainder_y = 0; // uncovered rows at the bottom
};

inline BlockGrid partition_blocks(int width, int height, int block_w, int block_h) {
    if (block_w < 1 || block_h < 1)
        throw Error("partition_blocks: block size must be positive");
    if (block_w > width || block_h > height)
        throw Error("partition_blocks: block " + std::to_string(block_w) + "x" +
                    std::to_string(block_h) + " exceeds frame " +
                    std::to_string(width) + "x" + std::to_string(height));
    BlockGrid grid;
    grid.cols = width / block_w;
    grid.rows = height / block_h;
    grid.block_w = block_w;
    grid.block_h = block_h;
    grid.remainder_x = width - grid.cols * block_w;
    grid.remainder_y = height - grid.rows * block_h;
    grid.blocks.reserve(static_cast<std::size_t>(grid.cols) * grid.rows);
    for (int r = 0; r < grid.rows; ++r)
        for (int c = 0; c < grid.cols; ++c)
            grid.blocks.push_back({c * block_w, r * block_h, block_w, block_h});
    return grid;
}

enum class PlaneKind : int {
    XY = 0, // appearance
    XT = 1, // horizontal motion
    YT = 2, // vertical motion
};

inline const char* plane_name(PlaneKind p) {
    switch (p) {
        case PlaneKind::XY: return "XY";
        case PlaneKind::XT: return "XT";
        case PlaneKind::YT: return "YT";
    }
    return "?";
}

using Patch3x3 = std::array<std::array<int, 3>, 3>;

/// 3x3 spatial neighborhood of (x,y); rows vary in y, columns in x.
inline Patch3x3 frame_patch(const GrayImage& img, int x, int y) {
    if (x < 1 || y < 1 || x > img.width - 2 || y > img.height - 2)
        throw Error("frame_patch: 3x3 patch at (" + std::to_string(x) + "," +
                    std::to_string(y) + ") exceeds image bounds");
    Patch3x3 p;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            p[r][c] = img.at(x - 1 + c, y - 1 + r);
    return p;
}

/// 3x3 patch of the volume centered at (x,y,t) in the requested plane.
/// Column index follows the plane's first axis, row index its second:
///   XY -> columns in x, rows in y
///   XT -> columns in x, rows in t
///   YT -> columns in y, rows in t
inline Patch3x3 plane_patch(const VideoVolume& vol, PlaneKind plane, int x, int y, int t) {
    const int W = vol.width(), H = vol.height(), T = vol.length();
    auto border = [&](const char* what) {
        throw Error(std::string("plane_patch: ") + plane_name(plane) + " patch at (" +
                    std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(t) +
                    ") too close to " + what + " border");
    };
    if (x < 0 || x >= W || y < 0 || y >= H || t < 0 || t >= T)
        throw Error("plane_patch: center outside volume");
    Patch3x3 p;
    switch (plane) {
        case PlaneKind::XY:
            if (x < 1 || x > W - 2) border("x");
            if (y < 1 || y > H - 2) border("y");
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c)
                    p[r][c] = vol.voxel(x - 1 + c, y - 1 + r, t);
            break;
        case PlaneKind::XT:
            if (x < 1 || x > W - 2) border("x");
            if (t < 1 || t > T - 2) border("t");
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c)
                    p[r][c] = vol.voxel(x - 1 + c, y, t - 1 + r);
            break;
        case PlaneKind::YT:
            if (y < 1 || y > H - 2) border("y");
            if (t < 1 || t > T - 2) border("t");
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c)
                    p[r][c] = vol.voxel(x, y - 1 + c, t - 1 + r);
            break;
    }
    return p;
}

namespace detail {

inline std::uint8_t round_half_up_u8(double v) {
    double r = std::floor(v + 0.5);
    if (r < 0) r = 0;
    if (r > 255) r = 255;
    return static_cast<std::uint8_t>(r);
}

} // namespace detail

/// Bilinear resize with corner-aligned sample mapping; intensities are
/// rounded half-up. A target equal to the source size is an exact copy.
inline GrayImage resize_bilinear(const GrayImage& img, int target_w, int target_h) {
    if (target_w < 1 || target_h < 1)
        throw Error("resize_bilinear: target size must be at least 1x1");
    if (target_w == img.width && target_h == img.height)
        return img;
    GrayImage out(target_w, target_h);
    const double sx = target_w > 1 ? double(img.width - 1) / double(target_w - 1) : 0.0;
    const double sy = target_h > 1 ? double(img.height - 1) / double(target_h - 1) : 0.0;
    for (int y = 0; y < target_h; ++y) {
        const double fy = y * sy;
        int y0 = static_cast<int>(std::floor(fy));
        if (y0 > img.height - 2) y0 = img.height - 2;
        if (y0 < 0) y0 = 0;
        const double wy = img.height > 1 ? fy - y0 : 0.0;
        for (int x = 0; x < target_w; ++x) {
            const double fx = x * sx;
            int x0 = static_cast<int>(std::floor(fx));
            if (x0 > img.width - 2) x0 = img.width - 2;
            if (x0 < 0) x0 = 0;
            const double wx = img.width > 1 ? fx - x0 : 0.0;
            const int x1 = img.width > 1 ? x0 + 1 : x0;
            const int y1 = img.height > 1 ? y0 + 1 : y0;
            const double v = (1.0 - wy) * ((1.0 - wx) * img.at(x0, y0) + wx * img.at(x1, y0)) +
                             wy * ((1.0 - wx) * img.at(x0, y1) + wx * img.at(x1, y1));
            out.at(x, y) = detail::round_half_up_u8(v);
        }
    }
    return out;
}

/// Resize every frame to the canonical size; frame count is unchanged.
inline VideoVolume canonicalize(const VideoVolume& vol, int target_w, int target_h) {
    if (target_w < 1 || target_h < 1)
        throw Error("canonicalize: target size must be at least 1x1");
    std::vector<GrayImage> out;
    out.reserve(vol.frames.size());
    for (const GrayImage& f : vol.frames)
        out.push_back(resize_bilinear(f, target_w, target_h));
    return build_volume(std::move(out));
}

} // namespace ldbp
