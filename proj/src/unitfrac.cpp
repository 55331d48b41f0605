#include "covers/unitfrac.hpp"

#include <algorithm>

#include "covers/detail/gray.hpp"

namespace covers {

namespace {

void check_enum_size(std::size_t n, unsigned enum_cap, const char* what) {
    if (enum_cap > 62)
        throw Error(Errc::bad_argument, "enumeration cap must be at most 62");
    if (n > enum_cap)
        throw Error(Errc::too_many_classes,
                    std::string("too many classes: ") + what + " needs 2^" +
                        std::to_string(n) + " subsets, cap is 2^" +
                        std::to_string(enum_cap));
}

// Moduli of every class except the 1-based index t, in order.
std::vector<long long> moduli_without(const CoverSystem& system, std::size_t t) {
    std::vector<long long> out;
    out.reserve(system.size() - 1);
    for (std::size_t s = 1; s <= system.size(); ++s)
        if (s != t) out.push_back(system.at(s).modulus);
    return out;
}

// If q == r/n with r an integer in [0, n), returns r; otherwise nullopt.
// q must already be a fractional part (0 <= q < 1).
std::optional<long long> as_grid_index(const Fraction& q, long long n) {
    const Fraction scaled = q * n;
    if (denominator(scaled) != 1) return std::nullopt;
    return numerator(scaled).convert_to<long long>();
}

void profile_insert(SubsetSumProfile& profile, const Fraction& sum) {
    const BigInt fl = floor_of(sum);
    if (auto r = as_grid_index(frac_part(sum), profile.modulus)) {
        SubsetSumProfile::Row& row = profile.rows[static_cast<std::size_t>(*r)];
        row.floors.insert(fl.convert_to<long long>());
        ++row.count;
    } else {
        ++profile.unclassified;
    }
}

void profile_gray(SubsetSumProfile& profile, const std::vector<long long>& moduli) {
    Fraction sum = 0;
    detail::gray_subsets(
        static_cast<unsigned>(moduli.size()),
        [&](unsigned j, bool now_in) {
            const Fraction term(1, moduli[j]);
            if (now_in)
                sum += term;
            else
                sum -= term;
        },
        [&](std::uint64_t) { profile_insert(profile, sum); });
}

// floor -> number of subsets reaching it, among subsets with one fixed
// fractional part.
using FloorCounts = std::map<long long, std::uint64_t>;

std::map<Fraction, FloorCounts> half_sums(const std::vector<long long>& moduli,
                                          std::size_t begin, std::size_t end) {
    std::map<Fraction, FloorCounts> groups;
    const std::vector<long long> part(moduli.begin() + begin, moduli.begin() + end);
    Fraction sum = 0;
    detail::gray_subsets(
        static_cast<unsigned>(part.size()),
        [&](unsigned j, bool now_in) {
            const Fraction term(1, part[j]);
            if (now_in)
                sum += term;
            else
                sum -= term;
        },
        [&](std::uint64_t) {
            ++groups[frac_part(sum)][floor_of(sum).convert_to<long long>()];
        });
    return groups;
}

// Meet-in-the-middle: join two half enumerations on the fractional part.
// For each right half-sum with fractional part beta and each grid target
// r/n_t, the matching left fractional part is {r/n_t - beta}; the joined
// floor picks up a carry when alpha + beta >= 1.
void profile_mitm(SubsetSumProfile& profile, const std::vector<long long>& moduli) {
    const std::size_t half = moduli.size() / 2;
    const auto left = half_sums(moduli, 0, half);
    const auto right = half_sums(moduli, half, moduli.size());
    const long long n = profile.modulus;

    for (const auto& [beta, right_floors] : right) {
        for (long long r = 0; r < n; ++r) {
            Fraction alpha = Fraction(r, n) - beta;
            if (alpha < 0) alpha += 1;
            const auto it = left.find(alpha);
            if (it == left.end()) continue;
            const long long carry = (alpha + beta >= 1) ? 1 : 0;
            SubsetSumProfile::Row& row = profile.rows[static_cast<std::size_t>(r)];
            for (const auto& [fl, cl] : it->second) {
                for (const auto& [fr, cr] : right_floors) {
                    row.floors.insert(fl + fr + carry);
                    row.count += cl * cr;
                }
            }
        }
    }
    std::uint64_t total = 0;
    for (const auto& row : profile.rows) total += row.count;
    const std::uint64_t all = std::uint64_t{1} << moduli.size();
    profile.unclassified = all - total;
}

} // namespace

BigInt binomial(const BigInt& n, unsigned k) {
    if (n < 0) throw Error(Errc::bad_argument, "binomial needs n >= 0");
    if (n < k) return 0;
    BigInt result = 1;
    for (unsigned i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;
    }
    return result;
}

std::set<Fraction> subset_sum_set(const std::vector<long long>& moduli,
                                  unsigned enum_cap) {
    check_enum_size(moduli.size(), enum_cap, "subset_sum_set");
    for (long long n : moduli)
        if (n < 1) throw Error(Errc::bad_argument, "modulus must be positive");
    std::set<Fraction> sums;
    Fraction sum = 0;
    detail::gray_subsets(
        static_cast<unsigned>(moduli.size()),
        [&](unsigned j, bool now_in) {
            const Fraction term(1, moduli[j]);
            if (now_in)
                sum += term;
            else
                sum -= term;
        },
        [&](std::uint64_t) { sums.insert(sum); });
    return sums;
}

SubsetSumProfile subset_sum_profile(const CoverSystem& system, std::size_t t,
                                    unsigned enum_cap, EnumMode mode) {
    const ResidueClass& excluded = system.at(t);
    const std::vector<long long> moduli = moduli_without(system, t);
    check_enum_size(moduli.size(), enum_cap, "subset_sum_profile");

    SubsetSumProfile profile;
    profile.modulus = excluded.modulus;
    profile.excluded_index = t;
    profile.rows.assign(static_cast<std::size_t>(excluded.modulus), {});

    if (mode == EnumMode::auto_select)
        mode = moduli.size() > kMitmThreshold ? EnumMode::meet_in_the_middle
                                              : EnumMode::gray;
    if (mode == EnumMode::meet_in_the_middle)
        profile_mitm(profile, moduli);
    else
        profile_gray(profile, moduli);
    return profile;
}

std::vector<Theorem1Row> theorem1_check(const CoverSystem& system, int m,
                                        std::size_t t, unsigned enum_cap,
                                        long long table_cap, EnumMode mode) {
    if (!is_m_cover(system, m, table_cap))
        throw Error(Errc::not_m_cover, "not an m-cover for m = " + std::to_string(m));
    const ResidueClass& distinguished = system.at(t);
    if (!irredundant_indices(system, m, table_cap).count(t))
        throw Error(Errc::redundant_class,
                    "class " + std::to_string(t) + " is redundant");
    const long long period = minimal_period(system, table_cap);
    if (distinguished.modulus % period != 0)
        throw Error(Errc::not_a_period,
                    "modulus " + std::to_string(distinguished.modulus) +
                        " is not a period of the covering function (minimal period " +
                        std::to_string(period) + ")");

    const SubsetSumProfile profile = subset_sum_profile(system, t, enum_cap, mode);
    std::vector<Theorem1Row> rows;
    rows.reserve(profile.rows.size());
    for (std::size_t r = 0; r < profile.rows.size(); ++r) {
        Theorem1Row row;
        row.r = static_cast<long long>(r);
        row.floors = profile.rows[r].floors;
        row.count = profile.rows[r].count;
        row.pass = row.floors.size() >= static_cast<std::size_t>(m);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<ExactBoundRow> exact_cover_bound_check(const CoverSystem& system,
                                                   int m, unsigned enum_cap,
                                                   long long table_cap) {
    if (!is_exact_m_cover(system, m, table_cap))
        throw Error(Errc::not_exact_cover,
                    "not an exact m-cover for m = " + std::to_string(m));
    const std::size_t k = system.size();
    const long long nk = system.at(k).modulus;
    std::vector<long long> moduli;
    for (std::size_t s = 1; s < k; ++s) moduli.push_back(system.at(s).modulus);
    check_enum_size(moduli.size(), enum_cap, "exact_cover_bound_check");

    // For an exact m-cover the unit fractions sum to m exactly, so the sums
    // a/n_k range over a in [0, m*n_k - 1].
    Fraction rest = 0;
    for (long long n : moduli) rest += Fraction(1, n);
    const long long a_max = floor_of(rest * nk).convert_to<long long>();

    std::map<long long, std::uint64_t> counts;
    Fraction sum = 0;
    detail::gray_subsets(
        static_cast<unsigned>(moduli.size()),
        [&](unsigned j, bool now_in) {
            const Fraction term(1, moduli[j]);
            if (now_in)
                sum += term;
            else
                sum -= term;
        },
        [&](std::uint64_t) {
            const Fraction scaled = sum * nk;
            if (denominator(scaled) == 1)
                ++counts[numerator(scaled).convert_to<long long>()];
        });

    std::vector<ExactBoundRow> rows;
    for (long long a = 0; a <= a_max; ++a) {
        ExactBoundRow row;
        row.a = a;
        const auto it = counts.find(a);
        row.count = it == counts.end() ? 0 : it->second;
        row.bound = binomial(BigInt(m - 1), static_cast<unsigned>(a / nk));
        row.pass = BigInt(row.count) >= row.bound;
        rows.push_back(std::move(row));
    }
    return rows;
}

Corollary1Result corollary1_check(const CoverSystem& system,
                                  const std::set<long long>& excluded_floors,
                                  std::optional<long long> period,
                                  unsigned enum_cap, long long table_cap) {
    check_enum_size(system.size(), enum_cap, "corollary1_check");
    const int m = covering_multiplicity(system, table_cap);
    const long long pmin = minimal_period(system, table_cap);
    const long long n0 = period.value_or(pmin);
    if (n0 < 1) throw Error(Errc::bad_argument, "period must be positive");
    if (n0 % pmin != 0)
        throw Error(Errc::not_a_period,
                    std::to_string(n0) + " is not a period of the covering function");
    if (excluded_floors.size() != static_cast<std::size_t>(m))
        throw Error(Errc::bad_argument,
                    "|D| = " + std::to_string(excluded_floors.size()) +
                        " differs from the covering multiplicity " + std::to_string(m));

    Corollary1Result result;
    result.period = n0;
    long long hits = 0;
    for (long long x = 0; x < n0; ++x) {
        if (covering_count(system, x) == static_cast<std::size_t>(m)) {
            result.unique_minimum = x;
            ++hits;
        }
    }
    if (hits != 1)
        throw Error(Errc::minimum_not_unique,
                    "minimum-not-unique: covering minimum attained " +
                        std::to_string(hits) + " times per period " +
                        std::to_string(n0));

    std::set<Fraction> fracs;
    std::vector<long long> moduli;
    for (const ResidueClass& c : system.classes()) moduli.push_back(c.modulus);
    Fraction sum = 0;
    detail::gray_subsets(
        static_cast<unsigned>(moduli.size()),
        [&](unsigned j, bool now_in) {
            const Fraction term(1, moduli[j]);
            if (now_in)
                sum += term;
            else
                sum -= term;
        },
        [&](std::uint64_t) {
            if (!excluded_floors.count(floor_of(sum).convert_to<long long>()))
                fracs.insert(frac_part(sum));
        });

    for (long long r = 0; r < n0; ++r)
        if (!fracs.count(Fraction(r, n0))) result.missing.push_back(r);
    result.holds = result.missing.empty();
    return result;
}

} // namespace covers
