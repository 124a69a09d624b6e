#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>

#include "ldbp/error.hpp"
#include "ldbp/image.hpp"

namespace ldbp {

enum class CenterStat : std::uint8_t {
    Median = 0, // midpoint of the 4th and 5th order statistics
    Mean = 1,
};

inline const char* center_stat_name(CenterStat s) {
    return s == CenterStat::Median ? "median" : "mean";
}

using Mask3x3 = std::array<std::array<int, 3>, 3>;

struct KirschMaskSet {
    std::array<Mask3x3, 8> masks;
};

/// The eight Kirsch compass masks m_0..m_7. Every mask has a zero center,
/// three 5-entries and five -3-entries, and m_{i+2} is the 90-degree
/// counter-clockwise rotation of m_i.
constexpr KirschMaskSet kirsch_masks() {
    return {{{
        Mask3x3{{{-3, -3, 5}, {-3, 0, 5}, {-3, -3, 5}}},    // m0
        Mask3x3{{{-3, 5, 5}, {-3, 0, 5}, {-3, -3, -3}}},    // m1
        Mask3x3{{{5, 5, 5}, {-3, 0, -3}, {-3, -3, -3}}},    // m2
        Mask3x3{{{5, 5, -3}, {5, 0, -3}, {-3, -3, -3}}},    // m3
        Mask3x3{{{5, -3, -3}, {5, 0, -3}, {5, -3, -3}}},    // m4
        Mask3x3{{{-3, -3, -3}, {5, 0, -3}, {5, 5, -3}}},    // m5
        Mask3x3{{{-3, -3, -3}, {-3, 0, -3}, {5, 5, 5}}},    // m6
        Mask3x3{{{-3, -3, -3}, {-3, 0, 5}, {-3, 5, 5}}},    // m7
    }}};
}

/// Grid positions clockwise from the top-left corner. Response i (the
/// absolute mask-m_i response) sits at position i of this order.
enum GridPos : int { TL = 0, TM, TR, MR, BR, BM, BL, ML };

/// The eight absolute directional responses of a 3x3 patch plus the
/// center statistic over them.
struct ResponseGrid {
    std::array<int, 8> responses{};
    double center = 0.0;
};

namespace detail {

inline int mask_response(const Patch3x3& patch, const Mask3x3& mask) {
    int sum = 0;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            sum += patch[r][c] * mask[r][c];
    return sum < 0 ? -sum : sum;
}

inline double center_of(const std::array<int, 8>& responses, CenterStat stat) {
    if (stat == CenterStat::Mean) {
        long total = 0;
        for (int v : responses) total += v;
        return static_cast<double>(total) / 8.0;
    }
    std::array<int, 8> sorted = responses;
    std::sort(sorted.begin(), sorted.end());
    return (sorted[3] + sorted[4]) / 2.0;
}

} // namespace detail

inline ResponseGrid kirsch_response_grid(const Patch3x3& patch, CenterStat stat) {
    static constexpr KirschMaskSet kMasks = kirsch_masks();
    ResponseGrid grid;
    for (int i = 0; i < 8; ++i)
        grid.responses[i] = detail::mask_response(patch, kMasks.masks[i]);
    grid.center = detail::center_of(grid.responses, stat);
    return grid;
}

/// S(x) of the thresholding step: 1 iff x >= 0.
inline unsigned threshold_bit(double value, double threshold) {
    return value >= threshold ? 1u : 0u;
}

/// Cardinal grid positions in counter-clockwise sampling order
/// right, top, left, bottom; these hold the m3, m1, m7, m5 responses.
inline constexpr std::array<int, 4> kCardinalOrder = {MR, TM, ML, BM};

/// Directional binary code of a response grid: bit i = S(K_i - threshold).
/// P=4 samples the four cardinal positions with weights 2^0..2^3;
/// P=8 samples all eight responses m_0..m_7 with weights 2^0..2^7.
inline std::uint32_t ldbp_code(const ResponseGrid& grid, int neighbors, double threshold) {
    std::uint32_t code = 0;
    if (neighbors == 4) {
        for (int i = 0; i < 4; ++i)
            code |= threshold_bit(grid.responses[kCardinalOrder[i]], threshold) << i;
    } else if (neighbors == 8) {
        for (int i = 0; i < 8; ++i)
            code |= threshold_bit(grid.responses[i], threshold) << i;
    } else {
        throw Error("ldbp_code: unsupported neighbor count " + std::to_string(neighbors) +
                    " (supported: 4, 8)");
    }
    return code;
}

/// Code of a patch thresholded against its own center statistic.
inline std::uint32_t ldbp_patch_code(const Patch3x3& patch, int neighbors, CenterStat stat) {
    const ResponseGrid grid = kirsch_response_grid(patch, stat);
    return ldbp_code(grid, neighbors, grid.center);
}

} // namespace ldbp
