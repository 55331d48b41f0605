#pragma once

#include "covers/core.hpp"

namespace covers {

/// Outcome of one windowed coverage check. The local and global verdicts are
/// computed independently; the local-global criteria assert that, at the
/// right window length, local_holds implies global_holds.
struct WindowVerdict {
    long long window_start = 0;
    long long window_length = 1;
    bool local_holds = false;
    bool global_holds = false;
};

/// Window length sufficient for the m-cover criterion: the number of distinct
/// fractional parts among all 2^k subset sums of the unit fractions.
std::size_t window_bound_cover(const CoverSystem& system,
                               unsigned enum_cap = kDefaultEnumCap);

/// Window length sufficient for the exact-m-cover criterion: the size of the
/// union of the per-modulus grids {r/n_s : r in [0, n_s)}. Requires k >= 1.
std::size_t window_bound_exact(const CoverSystem& system);

/// Does w_A >= m on [x0, x0 + window_bound_cover - 1], and does it hold
/// globally? Both answers are recorded.
WindowVerdict check_local_global_cover(const CoverSystem& system, int m,
                                       long long x0,
                                       unsigned enum_cap = kDefaultEnumCap,
                                       long long table_cap = kDefaultTableCap);

/// Same with w_A == m and window_bound_exact.
WindowVerdict check_local_global_exact(const CoverSystem& system, int m,
                                       long long x0,
                                       long long table_cap = kDefaultTableCap);

} // namespace covers
