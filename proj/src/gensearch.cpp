#include "covers/gensearch.hpp"

#include <numeric>

namespace covers {

CoverSystem erdos_example() {
    return CoverSystem({{0, 2}, {0, 3}, {1, 4}, {5, 6}, {7, 12}});
}

CoverSystem split_class(const CoverSystem& system, std::size_t index,
                        long long parts) {
    const ResidueClass& target = system.at(index);
    if (parts < 2)
        throw Error(Errc::bad_argument, "split needs at least 2 parts");
    std::vector<ResidueClass> classes;
    classes.reserve(system.size() + static_cast<std::size_t>(parts) - 1);
    for (std::size_t s = 1; s <= system.size(); ++s) {
        if (s != index) {
            classes.push_back(system.at(s));
            continue;
        }
        for (long long j = 0; j < parts; ++j)
            classes.emplace_back(target.residue + j * target.modulus,
                                 parts * target.modulus);
    }
    return CoverSystem(std::move(classes));
}

CoverSystem random_system(std::size_t k, long long max_modulus,
                          std::uint64_t seed) {
    if (max_modulus < 1)
        throw Error(Errc::bad_argument, "max_modulus must be positive");
    if (k > 1'000'000)
        throw Error(Errc::bad_argument, "k too large");
    SplitMix64 rng(seed);
    std::vector<ResidueClass> classes;
    classes.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        const long long n = 1 + static_cast<long long>(
                                    rng.next_below(static_cast<std::uint64_t>(max_modulus)));
        const long long a =
            static_cast<long long>(rng.next_below(static_cast<std::uint64_t>(n)));
        classes.emplace_back(a, n);
    }
    return CoverSystem(std::move(classes));
}

namespace {

// Incremental state for the residue search. shortfall is the total remaining
// deficit sum_x max(0, m - cnt[x]); every stamped position lowers it by at
// most one, which gives the prune against the suffix coverage. overcount is
// the number of positions already past m (fatal for exact searches, since
// counts only grow along a branch).
struct SearchState {
    std::vector<int> counts;
    long long shortfall = 0;
    long long overcount = 0;
    int m = 1;

    void stamp(long long residue, long long modulus, int delta) {
        const long long size = static_cast<long long>(counts.size());
        for (long long x = residue; x < size; x += modulus) {
            int& c = counts[static_cast<std::size_t>(x)];
            if (delta > 0) {
                if (c < m) --shortfall;
                if (c == m) ++overcount;
                ++c;
            } else {
                --c;
                if (c < m) ++shortfall;
                if (c == m) --overcount;
            }
        }
    }
};

} // namespace

std::vector<std::vector<long long>> find_covers(const SearchSpec& spec) {
    if (spec.moduli.empty())
        throw Error(Errc::empty_system, "no moduli");
    if (spec.target_multiplicity < 1)
        throw Error(Errc::bad_argument, "target multiplicity must be positive");
    BigInt space = 1;
    long long period = 1;
    for (long long n : spec.moduli) {
        if (n < 1) throw Error(Errc::bad_argument, "modulus must be positive");
        space *= n;
        period = std::lcm(period, n);
    }
    if (space > spec.assignment_cap)
        throw Error(Errc::search_cap_exceeded,
                    "assignment space " + space.str() + " exceeds cap " +
                        std::to_string(spec.assignment_cap));

    const std::size_t k = spec.moduli.size();
    const int m = spec.target_multiplicity;

    // suffix_coverage[d]: positions the classes d..k-1 can still stamp.
    std::vector<long long> suffix_coverage(k + 1, 0);
    for (std::size_t d = k; d-- > 0;)
        suffix_coverage[d] = suffix_coverage[d + 1] + period / spec.moduli[d];

    SearchState state;
    state.counts.assign(static_cast<std::size_t>(period), 0);
    state.m = m;
    state.shortfall = static_cast<long long>(m) * period;

    std::vector<std::vector<long long>> found;
    std::vector<long long> assignment(k, 0);

    auto dfs = [&](auto&& self, std::size_t depth) -> void {
        if (state.shortfall > suffix_coverage[depth]) return;
        if (spec.exact && state.overcount > 0) return;
        if (depth == k) {
            if (state.shortfall == 0 && (!spec.exact || state.overcount == 0))
                found.push_back(assignment);
            return;
        }
        const long long n = spec.moduli[depth];
        for (long long a = 0; a < n; ++a) {
            state.stamp(a, n, +1);
            assignment[depth] = a;
            self(self, depth + 1);
            state.stamp(a, n, -1);
        }
    };
    dfs(dfs, 0);
    return found;
}

} // namespace covers
