#include "covers/localglobal.hpp"

#include <algorithm>
#include <set>

#include "covers/unitfrac.hpp"

namespace covers {

namespace {

int table_at(const std::vector<int>& table, long long x) {
    const long long n = static_cast<long long>(table.size());
    long long i = x % n;
    if (i < 0) i += n;
    return table[static_cast<std::size_t>(i)];
}

WindowVerdict run_window_check(const CoverSystem& system, int m, long long x0,
                               std::size_t window_length, bool exact,
                               long long table_cap) {
    if (m < 1) throw Error(Errc::bad_argument, "m must be positive");
    const std::vector<int> table = covering_table(system, table_cap);

    WindowVerdict verdict;
    verdict.window_start = x0;
    verdict.window_length = static_cast<long long>(window_length);

    verdict.local_holds = true;
    for (std::size_t i = 0; i < window_length; ++i) {
        const int w = table_at(table, x0 + static_cast<long long>(i));
        if (exact ? (w != m) : (w < m)) {
            verdict.local_holds = false;
            break;
        }
    }

    const auto [lo, hi] = std::minmax_element(table.begin(), table.end());
    verdict.global_holds = exact ? (*lo == m && *hi == m) : (*lo >= m);
    return verdict;
}

} // namespace

std::size_t window_bound_cover(const CoverSystem& system, unsigned enum_cap) {
    std::vector<long long> moduli;
    for (const ResidueClass& c : system.classes()) moduli.push_back(c.modulus);
    std::set<Fraction> fracs;
    for (const Fraction& q : subset_sum_set(moduli, enum_cap))
        fracs.insert(frac_part(q));
    return fracs.size();
}

std::size_t window_bound_exact(const CoverSystem& system) {
    if (system.empty()) throw Error(Errc::empty_system, "no moduli");
    std::set<Fraction> grid;
    for (const ResidueClass& c : system.classes())
        for (long long r = 0; r < c.modulus; ++r)
            grid.insert(Fraction(r, c.modulus));
    return grid.size();
}

WindowVerdict check_local_global_cover(const CoverSystem& system, int m,
                                       long long x0, unsigned enum_cap,
                                       long long table_cap) {
    return run_window_check(system, m, x0, window_bound_cover(system, enum_cap),
                            /*exact=*/false, table_cap);
}

WindowVerdict check_local_global_exact(const CoverSystem& system, int m,
                                       long long x0, long long table_cap) {
    return run_window_check(system, m, x0, window_bound_exact(system),
                            /*exact=*/true, table_cap);
}

} // namespace covers
