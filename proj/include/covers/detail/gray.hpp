#pragma once

#include <bit>
#include <cstdint>

namespace covers::detail {

/// Visits all 2^n subsets of {0, ..., n-1} in Gray-code order, so consecutive
/// subsets differ in exactly one element. `flip(j, now_in)` fires before each
/// `visit(mask)` except the first (the empty set); callers keep their running
/// sums in the flip callback and read them in the visit callback.
template <class FlipFn, class VisitFn>
void gray_subsets(unsigned n, FlipFn&& flip, VisitFn&& visit) {
    std::uint64_t mask = 0;
    visit(mask);
    if (n == 0) return;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t i = 1; i < total; ++i) {
        const unsigned j = static_cast<unsigned>(std::countr_zero(i));
        mask ^= std::uint64_t{1} << j;
        flip(j, (mask >> j) & 1u);
        visit(mask);
    }
}

} // namespace covers::detail
