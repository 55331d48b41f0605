#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "covers/core.hpp"
#include "covers/fraction.hpp"

namespace covers {

/// Enumeration strategy for subset-sum profiles.
enum class EnumMode {
    auto_select,       // Gray code, switching to meet-in-the-middle for large k
    gray,              // incremental single-flip enumeration, one 2^(k-1) pass
    meet_in_the_middle // two 2^((k-1)/2) passes joined on fractional parts
};

/// Number of non-distinguished classes beyond which auto_select switches to
/// meet-in-the-middle.
inline constexpr unsigned kMitmThreshold = 24;

/// Per fractional class r/n_t: the set of integral parts of the subset sums
/// sum_{s in I} 1/n_s over I ⊆ [1,k]\{t} whose fractional part equals r/n_t,
/// and how many subsets land there. Sums whose fractional part is not of the
/// form r/n_t (possible when some modulus does not divide n_t) are tallied in
/// `unclassified`; counts + unclassified always total 2^(k-1).
struct SubsetSumProfile {
    struct Row {
        std::set<long long> floors;
        std::uint64_t count = 0;
    };

    long long modulus = 1;          // n_t
    std::size_t excluded_index = 0; // t, 1-based
    std::vector<Row> rows;          // indexed by r in [0, n_t)
    std::uint64_t unclassified = 0;
};

/// Verdict for one fractional class in the floor-set bound check.
struct Theorem1Row {
    long long r = 0;
    std::set<long long> floors;
    std::uint64_t count = 0;
    bool pass = false; // |floors| >= m
};

/// Verdict for one numerator a in the exact-cover lower bound check.
struct ExactBoundRow {
    long long a = 0;
    std::uint64_t count = 0; // |{I ⊆ [1,k-1] : sum_{s in I} 1/n_s = a/n_k}|
    BigInt bound;            // binom(m-1, floor(a/n_k)), 0 when the floor exceeds m-1
    bool pass = false;
};

struct Corollary1Result {
    bool holds = false;
    long long period = 1;                // the n_0 actually used
    long long unique_minimum = 0;        // a_0
    std::vector<long long> missing;      // r values with r/n_0 not attained
};

/// All 2^k subset sums of {1/n : n in moduli}, as a set of reduced fractions.
/// Throws too_many_classes past the enumeration cap.
std::set<Fraction> subset_sum_set(const std::vector<long long>& moduli,
                                  unsigned enum_cap = kDefaultEnumCap);

/// Tabulates, per fractional class r/n_t, the floors and subset counts over
/// I ⊆ [1,k]\{t}. Exact rational arithmetic throughout.
SubsetSumProfile subset_sum_profile(const CoverSystem& system, std::size_t t,
                                    unsigned enum_cap = kDefaultEnumCap,
                                    EnumMode mode = EnumMode::auto_select);

/// The floor-set lower bound: for an m-cover whose class t is irredundant and
/// whose modulus n_t is a period of the covering function, every fractional
/// class r/n_t must exhibit at least m distinct integral parts. Hypotheses are
/// validated here (not_m_cover / redundant_class / not_a_period) and the bound
/// is reported per r rather than assumed.
std::vector<Theorem1Row> theorem1_check(const CoverSystem& system, int m,
                                        std::size_t t,
                                        unsigned enum_cap = kDefaultEnumCap,
                                        long long table_cap = kDefaultTableCap,
                                        EnumMode mode = EnumMode::auto_select);

/// For an exact m-cover, the number of subsets of the first k-1 classes whose
/// sum equals a/n_k is at least binom(m-1, floor(a/n_k)), for every a >= 0.
/// Reports one row per a from 0 to n_k * sum_{s<k} 1/n_s.
std::vector<ExactBoundRow> exact_cover_bound_check(
    const CoverSystem& system, int m, unsigned enum_cap = kDefaultEnumCap,
    long long table_cap = kDefaultTableCap);

/// With n_0 a period of w_A carrying a unique minimum residue and |D| = m(A),
/// the fractional parts of subset sums whose floor avoids D must fill the full
/// grid {r/n_0 : r in [0, n_0)}. `period` overrides the minimal period.
Corollary1Result corollary1_check(const CoverSystem& system,
                                  const std::set<long long>& excluded_floors,
                                  std::optional<long long> period = std::nullopt,
                                  unsigned enum_cap = kDefaultEnumCap,
                                  long long table_cap = kDefaultTableCap);

/// binom(n, k) with the convention binom(n, k) = 0 for k > n >= 0.
BigInt binomial(const BigInt& n, unsigned k);

} // namespace covers
