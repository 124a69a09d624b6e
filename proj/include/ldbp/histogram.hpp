#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

#include "ldbp/error.hpp"

namespace ldbp {

/// Histogram over descriptor codes. Raw histograms hold integer counts
/// (stored as doubles); normalized ones hold frequencies summing to 1.
struct CodeHistogram {
    std::vector<double> values;
    bool normalized = false;

    std::size_t bin_count() const { return values.size(); }
    double sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }

    bool operator==(const CodeHistogram&) const = default;
};

inline CodeHistogram normalize(const CodeHistogram& hist) {
    const double total = hist.sum();
    if (total <= 0.0)
        throw Error("normalize: histogram has zero mass");
    CodeHistogram out;
    out.values.reserve(hist.values.size());
    for (double v : hist.values)
        out.values.push_back(v / total);
    out.normalized = true;
    return out;
}

} // namespace ldbp
