#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "covers/errors.hpp"
#include "covers/fraction.hpp"

namespace covers {

/// Largest N_A for which full covering tables are materialized.
inline constexpr long long kDefaultTableCap = 10'000'000;

/// Largest number of classes admitted to a 2^k subset enumeration.
inline constexpr unsigned kDefaultEnumCap = 30;

/// One congruence class a(n) = { x : x ≡ a (mod n) }.
/// The residue is normalized to [0, n) on construction so that two classes
/// are equal as sets iff they compare equal field-by-field.
struct ResidueClass {
    long long residue = 0;
    long long modulus = 1;

    ResidueClass() = default;
    ResidueClass(long long a, long long n) : modulus(n) {
        if (n < 1) throw Error(Errc::bad_argument, "modulus must be positive");
        residue = a % n;
        if (residue < 0) residue += n;
    }

    bool contains(long long x) const {
        long long d = (x - residue) % modulus;
        return d == 0;
    }

    bool operator==(const ResidueClass&) const = default;
};

/// An ordered finite list of residue classes. Order matters: class indices
/// are 1-based throughout the public interface, and duplicates are allowed.
class CoverSystem {
public:
    CoverSystem() = default;
    explicit CoverSystem(std::vector<ResidueClass> classes)
        : classes_(std::move(classes)) {}

    std::size_t size() const { return classes_.size(); }
    bool empty() const { return classes_.empty(); }

    /// 1-based access; throws bad_index outside [1, k].
    const ResidueClass& at(std::size_t index) const {
        if (index < 1 || index > classes_.size())
            throw Error(Errc::bad_index, "class index " + std::to_string(index) +
                                             " out of range [1, " + std::to_string(classes_.size()) + "]");
        return classes_[index - 1];
    }

    const std::vector<ResidueClass>& classes() const { return classes_; }

    void add(ResidueClass c) { classes_.push_back(c); }

    /// Copy with class `index` (1-based) removed.
    CoverSystem without(std::size_t index) const {
        at(index);
        std::vector<ResidueClass> rest;
        rest.reserve(classes_.size() - 1);
        for (std::size_t i = 0; i < classes_.size(); ++i)
            if (i != index - 1) rest.push_back(classes_[i]);
        return CoverSystem(std::move(rest));
    }

    bool operator==(const CoverSystem&) const = default;

private:
    std::vector<ResidueClass> classes_;
};

/// Full analysis record of one system: lcm of the moduli, the covering
/// function tabulated over one period, its minimum, the least period, and
/// the indices whose removal destroys m-coverage (for m = multiplicity,
/// when the system is at least a 1-cover).
struct CoverReport {
    BigInt lcm;
    std::vector<int> table;
    int multiplicity = 0;
    long long minimal_period = 1;
    std::set<std::size_t> irredundant;
};

/// w_A(x): how many classes of A contain x. Pointwise, no cap.
std::size_t covering_count(const CoverSystem& system, long long x);

/// N_A = lcm(n_1, ..., n_k), exact. Throws empty_system for k = 0.
BigInt lcm_moduli(const CoverSystem& system);

/// w_A over one full period [0, N_A). The empty system yields {0}.
/// Throws period_too_large when N_A exceeds the cap.
std::vector<int> covering_table(const CoverSystem& system,
                                long long table_cap = kDefaultTableCap);

/// m(A) = min_x w_A(x).
int covering_multiplicity(const CoverSystem& system,
                          long long table_cap = kDefaultTableCap);

/// Least d >= 1 with w_A(x + d) = w_A(x) for all x; always divides N_A.
long long minimal_period(const CoverSystem& system,
                         long long table_cap = kDefaultTableCap);

/// Whether w_A >= m everywhere (m >= 1).
bool is_m_cover(const CoverSystem& system, int m,
                long long table_cap = kDefaultTableCap);

/// Whether w_A == m everywhere (m >= 1).
bool is_exact_m_cover(const CoverSystem& system, int m,
                      long long table_cap = kDefaultTableCap);

/// Indices t such that dropping class t from A destroys m-coverage.
/// Requires is_m_cover(A, m); throws not_m_cover otherwise.
std::set<std::size_t> irredundant_indices(const CoverSystem& system, int m,
                                          long long table_cap = kDefaultTableCap);

/// One-call analysis used by the CLI.
CoverReport analyze(const CoverSystem& system,
                    long long table_cap = kDefaultTableCap);

/// Exact sum of 1/n_s over the system.
Fraction unit_fraction_sum(const CoverSystem& system);

} // namespace covers
