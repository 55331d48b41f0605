#pragma once

#include <cstdint>
#include <vector>

#include "covers/core.hpp"

namespace covers {

/// Largest residue-assignment space find_covers will enumerate.
inline constexpr std::uint64_t kDefaultSearchCap = 10'000'000;

/// splitmix64 with the standard published constants. The generator is part of
/// the fixture contract: identical seeds must reproduce identical systems
/// across implementations. Draws below a bound use plain modulo reduction.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// next() % bound; bound >= 1.
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

/// Exhaustive residue search over fixed moduli.
struct SearchSpec {
    std::vector<long long> moduli;
    int target_multiplicity = 1;
    bool exact = false;
    std::uint64_t assignment_cap = kDefaultSearchCap;
};

/// The classical five-class cover {0(2), 0(3), 1(4), 5(6), 7(12)}.
CoverSystem erdos_example();

/// Replaces class `index` (1-based) a(n) by the p classes a + j*n (mod p*n),
/// j = 0..p-1, leaving the covering function pointwise unchanged.
CoverSystem split_class(const CoverSystem& system, std::size_t index,
                        long long parts);

/// Deterministic random system: k classes with moduli uniform in
/// [1, max_modulus] and residues uniform in [0, n), drawn from SplitMix64.
CoverSystem random_system(std::size_t k, long long max_modulus,
                          std::uint64_t seed);

/// All residue tuples (a_1, ..., a_k) over spec.moduli that make the system
/// an m-cover (exact m-cover when spec.exact), in mixed-radix order.
/// Throws search_cap_exceeded when the assignment space is larger than the cap.
std::vector<std::vector<long long>> find_covers(const SearchSpec& spec);

} // namespace covers
