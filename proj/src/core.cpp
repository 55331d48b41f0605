#include "covers/core.hpp"

#include <algorithm>
#include <numeric>

namespace covers {

std::size_t covering_count(const CoverSystem& system, long long x) {
    std::size_t n = 0;
    for (const ResidueClass& c : system.classes())
        if (c.contains(x)) ++n;
    return n;
}

BigInt lcm_moduli(const CoverSystem& system) {
    if (system.empty()) throw Error(Errc::empty_system, "no moduli");
    BigInt l = 1;
    for (const ResidueClass& c : system.classes())
        l = boost::multiprecision::lcm(l, BigInt(c.modulus));
    return l;
}

namespace {

// N_A as a plain integer, gated by the table cap. Empty system -> 1.
long long capped_period_length(const CoverSystem& system, long long table_cap) {
    if (system.empty()) return 1;
    BigInt l = lcm_moduli(system);
    if (l > table_cap)
        throw Error(Errc::period_too_large,
                    "period too large: N_A = " + l.str() + " exceeds cap " +
                        std::to_string(table_cap));
    return l.convert_to<long long>();
}

} // namespace

std::vector<int> covering_table(const CoverSystem& system, long long table_cap) {
    const long long n = capped_period_length(system, table_cap);
    std::vector<int> table(static_cast<std::size_t>(n), 0);
    // Arithmetic-progression stamping: each class touches N_A / n_s entries.
    for (const ResidueClass& c : system.classes())
        for (long long x = c.residue; x < n; x += c.modulus)
            ++table[static_cast<std::size_t>(x)];
    return table;
}

int covering_multiplicity(const CoverSystem& system, long long table_cap) {
    if (system.empty()) return 0;
    const std::vector<int> table = covering_table(system, table_cap);
    return *std::min_element(table.begin(), table.end());
}

long long minimal_period(const CoverSystem& system, long long table_cap) {
    const std::vector<int> table = covering_table(system, table_cap);
    const long long n = static_cast<long long>(table.size());
    // The periods of an N-periodic function form a subgroup of Z containing N,
    // so the minimal one is the smallest divisor d of N that works.
    for (long long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        bool ok = true;
        for (long long x = 0; x + d < n && ok; ++x)
            ok = table[static_cast<std::size_t>(x)] ==
                 table[static_cast<std::size_t>(x + d)];
        if (ok) return d;
    }
    return n; // unreachable: d = n always succeeds
}

bool is_m_cover(const CoverSystem& system, int m, long long table_cap) {
    if (m < 1) throw Error(Errc::bad_argument, "m must be positive");
    return covering_multiplicity(system, table_cap) >= m;
}

bool is_exact_m_cover(const CoverSystem& system, int m, long long table_cap) {
    if (m < 1) throw Error(Errc::bad_argument, "m must be positive");
    if (system.empty()) return false;
    const std::vector<int> table = covering_table(system, table_cap);
    return std::all_of(table.begin(), table.end(),
                       [m](int w) { return w == m; });
}

std::set<std::size_t> irredundant_indices(const CoverSystem& system, int m,
                                          long long table_cap) {
    if (!is_m_cover(system, m, table_cap))
        throw Error(Errc::not_m_cover, "not an m-cover for m = " + std::to_string(m));
    const std::vector<int> table = covering_table(system, table_cap);
    const long long n = static_cast<long long>(table.size());
    std::set<std::size_t> out;
    // Removing class t lowers w only on the class itself, so t is irredundant
    // iff w attains exactly m somewhere on t's residues.
    for (std::size_t t = 1; t <= system.size(); ++t) {
        const ResidueClass& c = system.at(t);
        for (long long x = c.residue; x < n; x += c.modulus) {
            if (table[static_cast<std::size_t>(x)] == m) {
                out.insert(t);
                break;
            }
        }
    }
    return out;
}

CoverReport analyze(const CoverSystem& system, long long table_cap) {
    CoverReport report;
    report.lcm = system.empty() ? BigInt(1) : lcm_moduli(system);
    report.table = covering_table(system, table_cap);
    report.multiplicity =
        *std::min_element(report.table.begin(), report.table.end());
    report.minimal_period = minimal_period(system, table_cap);
    if (report.multiplicity >= 1)
        report.irredundant =
            irredundant_indices(system, report.multiplicity, table_cap);
    return report;
}

Fraction unit_fraction_sum(const CoverSystem& system) {
    Fraction sum = 0;
    for (const ResidueClass& c : system.classes())
        sum += Fraction(1, c.modulus);
    return sum;
}

} // namespace covers
