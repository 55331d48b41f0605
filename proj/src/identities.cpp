#include "covers/identities.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <numbers>

#include "covers/detail/gray.hpp"
#include "covers/unitfrac.hpp"

namespace covers {

namespace {

using Complex = std::complex<double>;

double relative_gap(const Complex& lhs, const Complex& rhs) {
    return std::abs(lhs - rhs) / (1.0 + std::abs(rhs));
}

// Integer power by squaring; exponent may be a big integer (used for y^(N/n)).
Complex cpow_integer(Complex base, BigInt exponent) {
    assert(exponent >= 0);
    Complex result = 1.0;
    while (exponent > 0) {
        if (boost::multiprecision::bit_test(exponent, 0)) result *= base;
        base *= base;
        exponent >>= 1;
    }
    return result;
}

// Phase step for class s against base point z, scaled by m_s: (a_s - z)m_s/n_s,
// reduced to turns in [0, 1). Exact until the final conversion.
UnityPhase class_phase(const ResidueClass& c, long long z, long long scale) {
    return UnityPhase(Fraction(BigInt(c.residue - z) * scale, BigInt(c.modulus)));
}

// Running phase in [0, 1) under Gray flips: one step in or out per flip.
struct PhaseAccumulator {
    std::vector<Fraction> steps; // each in [0, 1)
    Fraction value = 0;

    void flip(unsigned j, bool now_in) {
        if (now_in) {
            value += steps[j];
            if (value >= 1) value -= 1;
        } else {
            value -= steps[j];
            if (value < 0) value += 1;
        }
    }

    Complex unit() const { return UnityPhase(value).to_complex(); }
};

void require_positive_m(int m) {
    if (m < 1) throw Error(Errc::bad_argument, "m must be positive");
}

void require_irredundant(const CoverSystem& system, int m, std::size_t t,
                         long long table_cap) {
    if (!is_m_cover(system, m, table_cap))
        throw Error(Errc::not_m_cover, "not an m-cover for m = " + std::to_string(m));
    system.at(t);
    if (!irredundant_indices(system, m, table_cap).count(t))
        throw Error(Errc::redundant_class,
                    "class " + std::to_string(t) + " is redundant");
}

} // namespace

Complex UnityPhase::to_complex() const {
    // Quarter turns are exact; everything else goes through sincos once.
    if (turns == 0) return {1.0, 0.0};
    if (turns == Fraction(1, 2)) return {-1.0, 0.0};
    if (turns == Fraction(1, 4)) return {0.0, 1.0};
    if (turns == Fraction(3, 4)) return {0.0, -1.0};
    const double angle = 2.0 * std::numbers::pi * turns.convert_to<double>();
    return {std::cos(angle), std::sin(angle)};
}

void SparsePolynomial::set_coefficient(const ExponentVector& exponents,
                                       Complex c) {
    if (exponents.size() != variables_)
        throw Error(Errc::bad_argument, "exponent vector has wrong length");
    if (c == Complex{})
        terms_.erase(exponents);
    else
        terms_[exponents] = c;
}

Complex SparsePolynomial::coefficient(const ExponentVector& exponents) const {
    const auto it = terms_.find(exponents);
    return it == terms_.end() ? Complex{} : it->second;
}

int SparsePolynomial::total_degree() const {
    int degree = -1;
    for (const auto& [exps, c] : terms_) {
        int d = 0;
        for (unsigned e : exps) d += static_cast<int>(e);
        degree = std::max(degree, d);
    }
    return degree;
}

Complex SparsePolynomial::evaluate01(std::uint64_t mask) const {
    Complex value = 0;
    for (const auto& [exps, c] : terms_) {
        bool live = true;
        for (unsigned s = 0; s < exps.size() && live; ++s)
            if (exps[s] != 0 && ((mask >> s) & 1u) == 0) live = false;
        if (live) value += c;
    }
    return value;
}

SparsePolynomial SparsePolynomial::constant(unsigned variables, Complex c) {
    SparsePolynomial p(variables);
    p.set_coefficient(ExponentVector(variables, 0), c);
    return p;
}

std::vector<Complex> default_product_samples() {
    using namespace std::complex_literals;
    return {0.0 + 0.0i, 0.5 + 0.0i, -1.0 / 3.0 + 0.0i, 0.7i,
            0.9 * UnityPhase(Fraction(1, 7)).to_complex()};
}

Lemma1Result lemma1_check(const CoverSystem& system,
                          const std::vector<long long>& m_list,
                          const SparsePolynomial& f, long long z, double tol,
                          unsigned enum_cap, long long table_cap) {
    const std::size_t k = system.size();
    if (m_list.size() != k)
        throw Error(Errc::bad_argument, "m_list must have one entry per class");
    if (f.variables() != k)
        throw Error(Errc::bad_argument, "polynomial must have one variable per class");
    if (enum_cap > 62 || k > enum_cap)
        throw Error(Errc::too_many_classes, "too many classes for enumeration");

    const int m = covering_multiplicity(system, table_cap);
    if (f.total_degree() > m)
        throw Error(Errc::degree_exceeds_multiplicity,
                    "degree-exceeds-multiplicity: deg f = " +
                        std::to_string(f.total_degree()) +
                        " > m(A) = " + std::to_string(m));

    // Support masks let each subset evaluate f in O(#terms).
    std::vector<std::pair<std::uint64_t, Complex>> terms;
    for (const auto& [exps, c] : f.terms()) {
        std::uint64_t support = 0;
        for (unsigned s = 0; s < exps.size(); ++s)
            if (exps[s] != 0) support |= std::uint64_t{1} << s;
        terms.emplace_back(support, c);
    }

    PhaseAccumulator phase;
    for (std::size_t s = 1; s <= k; ++s)
        phase.steps.push_back(class_phase(system.at(s), z, m_list[s - 1]).turns);

    Complex lhs = 0;
    detail::gray_subsets(
        static_cast<unsigned>(k),
        [&](unsigned j, bool now_in) { phase.flip(j, now_in); },
        [&](std::uint64_t mask) {
            Complex fval = 0;
            for (const auto& [support, c] : terms)
                if ((support & ~mask) == 0) fval += c;
            if (fval == Complex{}) return;
            const double sign = (std::popcount(mask) & 1u) ? -1.0 : 1.0;
            lhs += sign * fval * phase.unit();
        });

    SparsePolynomial::ExponentVector iz_exponents(k, 0);
    Complex product = 1.0;
    for (std::size_t s = 1; s <= k; ++s) {
        if (system.at(s).contains(z)) {
            iz_exponents[s - 1] = 1;
        } else {
            product *=
                class_phase(system.at(s), z, m_list[s - 1]).to_complex() - 1.0;
        }
    }
    const double sign_k = (k & 1u) ? -1.0 : 1.0;
    const Complex rhs = sign_k * f.coefficient(iz_exponents) * product;

    Lemma1Result result;
    result.lhs = lhs;
    result.rhs = rhs;
    result.residual = relative_gap(lhs, rhs);
    result.pass = std::abs(lhs - rhs) <= tol * (1.0 + std::abs(rhs));
    return result;
}

Lemma2Result lemma2_constancy_check(const CoverSystem& system, int m,
                                    std::size_t t,
                                    const std::vector<long long>& m_list,
                                    double tol, unsigned enum_cap,
                                    long long table_cap) {
    require_positive_m(m);
    require_irredundant(system, m, t, table_cap);
    const std::size_t k = system.size();
    if (m_list.size() != k - 1)
        throw Error(Errc::bad_argument, "m_list must have one entry per non-distinguished class");
    for (long long v : m_list)
        if (v < 1) throw Error(Errc::bad_argument, "m_list entries must be positive");
    if (enum_cap > 62 || k - 1 > enum_cap)
        throw Error(Errc::too_many_classes, "too many classes for enumeration");

    const ResidueClass& pivot = system.at(t);
    const long long nt = pivot.modulus;

    std::vector<Fraction> value_steps;
    PhaseAccumulator phase;
    {
        std::size_t i = 0;
        for (std::size_t s = 1; s <= k; ++s) {
            if (s == t) continue;
            const ResidueClass& c = system.at(s);
            value_steps.emplace_back(BigInt(m_list[i]), BigInt(c.modulus));
            phase.steps.push_back(
                class_phase(c, pivot.residue, m_list[i]).turns);
            ++i;
        }
    }

    // alpha -> the n_t accumulated sums C_0(alpha), ..., C_{n_t-1}(alpha)
    std::map<Fraction, std::vector<Complex>> groups;
    Fraction value = 0;
    detail::gray_subsets(
        static_cast<unsigned>(k - 1),
        [&](unsigned j, bool now_in) {
            if (now_in)
                value += value_steps[j];
            else
                value -= value_steps[j];
            phase.flip(j, now_in);
        },
        [&](std::uint64_t mask) {
            const BigInt floor = floor_of(value);
            const BigInt coefficient = binomial(floor, static_cast<unsigned>(m - 1));
            if (coefficient == 0) return;
            const Fraction scaled = frac_part(value) * nt; // alpha + r
            const BigInt r = floor_of(scaled);
            const Fraction alpha = scaled - Fraction(r);
            auto& sums = groups[alpha];
            if (sums.empty()) sums.assign(static_cast<std::size_t>(nt), Complex{});
            const double sign = (std::popcount(mask) & 1u) ? -1.0 : 1.0;
            sums[r.convert_to<std::size_t>()] +=
                sign * coefficient.convert_to<double>() * phase.unit();
        });

    Lemma2Result result;
    for (const auto& [alpha, sums] : groups) {
        for (const Complex& c : sums)
            result.residual = std::max(result.residual, std::abs(c - sums[0]));
    }
    result.pass = result.residual <= tol;
    return result;
}

Lemma3Result lemma3_check(const CoverSystem& system, int m, std::size_t t,
                          long long z, double tol, long long table_cap) {
    require_positive_m(m);
    require_irredundant(system, m, t, table_cap);
    const ResidueClass& pivot = system.at(t);
    const long long period = minimal_period(system, table_cap);
    if (pivot.modulus % period != 0)
        throw Error(Errc::not_a_period,
                    "modulus " + std::to_string(pivot.modulus) +
                        " is not a period of the covering function");
    if (!pivot.contains(z))
        throw Error(Errc::not_in_class,
                    "z = " + std::to_string(z) + " is not in the distinguished class");

    Complex lhs = 1.0;
    for (std::size_t s = 1; s <= system.size(); ++s) {
        const ResidueClass& c = system.at(s);
        if (!c.contains(z)) lhs *= 1.0 - class_phase(c, z, 1).to_complex();
    }

    Complex rhs = 1.0;
    for (std::size_t s = 1; s <= system.size(); ++s) {
        const ResidueClass& c = system.at(s);
        if (c.contains(z)) rhs *= static_cast<double>(c.modulus);
    }
    for (long long j = 1; j <= pivot.modulus; ++j) {
        const int w = static_cast<int>(covering_count(system, j));
        if ((j - pivot.residue) % pivot.modulus == 0) {
            // 0^(w-m): the hypotheses force w = m here, so the factor is empty.
            assert(w == m);
            continue;
        }
        const int exponent = w - m;
        assert(exponent >= 0);
        const Complex base =
            1.0 - UnityPhase(Fraction(j - pivot.residue, pivot.modulus)).to_complex();
        rhs *= cpow_integer(base, BigInt(exponent));
    }

    Lemma3Result result;
    result.lhs = lhs;
    result.rhs = rhs;
    result.residual = relative_gap(lhs, rhs);
    result.pass = std::abs(lhs - rhs) <= tol * (1.0 + std::abs(rhs));
    return result;
}

ProductIdentityResult product_identity_check(
    const CoverSystem& system, std::size_t t,
    const std::vector<Complex>& samples, double tol, bool enforce_period,
    long long table_cap) {
    const ResidueClass& pivot = system.at(t);
    if (enforce_period) {
        const long long period = minimal_period(system, table_cap);
        if (pivot.modulus % period != 0)
            throw Error(Errc::not_a_period,
                        "modulus " + std::to_string(pivot.modulus) +
                            " is not a period of the covering function");
    }
    const BigInt n = lcm_moduli(system);

    ProductIdentityResult result;
    result.pass = true;
    for (const Complex& y : samples) {
        Complex lhs = 1.0;
        for (const ResidueClass& c : system.classes()) {
            lhs *= 1.0 - cpow_integer(y, n / c.modulus) *
                             UnityPhase(Fraction(c.residue, c.modulus)).to_complex();
        }
        Complex rhs = 1.0;
        const Complex y_pow = cpow_integer(y, n / pivot.modulus);
        for (long long j = 1; j <= pivot.modulus; ++j) {
            const Complex base =
                1.0 - y_pow * UnityPhase(Fraction(j, pivot.modulus)).to_complex();
            rhs *= cpow_integer(base, BigInt(covering_count(system, j)));
        }
        const double gap = relative_gap(lhs, rhs);
        result.per_sample.push_back(gap);
        result.residual = std::max(result.residual, gap);
        if (std::abs(lhs - rhs) > tol * (1.0 + std::abs(rhs))) result.pass = false;
    }
    return result;
}

bool average_equality_check(const CoverSystem& system, long long table_cap) {
    const std::vector<int> table = covering_table(system, table_cap);
    BigInt total = 0;
    for (int w : table) total += w;
    const Fraction average(total, BigInt(table.size()));
    return average == unit_fraction_sum(system);
}

} // namespace covers
