#pragma once

#include <cstddef>
#include <vector>

namespace zdens {

/// Kahan-compensated accumulator.  All Dirichlet-type sums use this in a
/// fixed index order so results are bit-identical across thread counts.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

/// Fixed-size block partition of [begin, end).  Parallel kernels compute one
/// partial result per block (any schedule, any thread count) and merge the
/// partials serially in block order, which pins the floating-point result.
struct BlockRange {
    std::size_t begin;
    std::size_t end;
};

inline std::vector<BlockRange> make_blocks(std::size_t begin, std::size_t end,
                                           std::size_t block_size) {
    std::vector<BlockRange> blocks;
    for (std::size_t b = begin; b < end; b += block_size)
        blocks.push_back({b, b + block_size < end ? b + block_size : end});
    return blocks;
}

} // namespace zdens
