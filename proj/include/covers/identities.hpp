#pragma once

#include <complex>
#include <map>
#include <vector>

#include "covers/core.hpp"
#include "covers/fraction.hpp"

namespace covers {

/// Default relative tolerance for complex identity comparisons.
inline constexpr double kDefaultTol = 1e-9;

/// A root-of-unity exponent held as an exact number of turns in [0, 1).
/// Conversion to a complex number is the only floating-point step; a zero
/// phase converts to exactly 1.
struct UnityPhase {
    Fraction turns;

    UnityPhase() : turns(0) {}
    explicit UnityPhase(const Fraction& t) : turns(frac_part(t)) {}

    std::complex<double> to_complex() const;
};

/// Multivariate polynomial over C with sparse exponent-vector storage.
/// Zero coefficients are never stored.
class SparsePolynomial {
public:
    using ExponentVector = std::vector<unsigned>;
    using TermMap = std::map<ExponentVector, std::complex<double>>;

    explicit SparsePolynomial(unsigned variables) : variables_(variables) {}

    unsigned variables() const { return variables_; }

    void set_coefficient(const ExponentVector& exponents, std::complex<double> c);
    std::complex<double> coefficient(const ExponentVector& exponents) const;

    /// Max total degree of stored terms; -1 for the zero polynomial.
    int total_degree() const;

    /// Evaluation with x_s = 1 if bit s of mask is set, else 0 (0-based bits).
    std::complex<double> evaluate01(std::uint64_t mask) const;

    const TermMap& terms() const { return terms_; }

    static SparsePolynomial constant(unsigned variables, std::complex<double> c);

private:
    unsigned variables_;
    TermMap terms_;
};

struct Lemma1Result {
    bool pass = false;
    double residual = 0; // |lhs - rhs| / (1 + |rhs|)
    std::complex<double> lhs, rhs;
};

struct Lemma2Result {
    bool pass = false;
    double residual = 0; // max over alpha of max_r |C_r(alpha) - C_0(alpha)|
};

struct Lemma3Result {
    bool pass = false;
    double residual = 0;
    std::complex<double> lhs, rhs;
};

struct ProductIdentityResult {
    bool pass = false;
    double residual = 0; // max relative residual over samples
    std::vector<double> per_sample;
};

/// The signed exponential-sum identity: for any integers m_1..m_k, any z and
/// any polynomial f with deg f <= m(A),
///   sum_{I ⊆ [1,k]} (-1)^|I| f([1 in I],...,[k in I]) e(sum_{s in I} (a_s-z)m_s/n_s)
///     = (-1)^k c(I_z) prod_{s not in I_z} (e((a_s-z)m_s/n_s) - 1),
/// where I_z collects the classes containing z and c(I_z) is the coefficient
/// of prod_{s in I_z} x_s in f. Throws degree_exceeds_multiplicity when the
/// degree hypothesis fails.
Lemma1Result lemma1_check(const CoverSystem& system,
                          const std::vector<long long>& m_list,
                          const SparsePolynomial& f, long long z,
                          double tol = kDefaultTol,
                          unsigned enum_cap = kDefaultEnumCap,
                          long long table_cap = kDefaultTableCap);

/// Constancy of the grouped alternating sums C_r(alpha): subsets of
/// [1,k]\{t} are keyed by the exact decomposition {sum m_s/n_s} = (alpha+r)/n_t
/// and, for every alpha that occurs, the n_t accumulated sums must coincide.
Lemma2Result lemma2_constancy_check(const CoverSystem& system, int m,
                                    std::size_t t,
                                    const std::vector<long long>& m_list,
                                    double tol = kDefaultTol,
                                    unsigned enum_cap = kDefaultEnumCap,
                                    long long table_cap = kDefaultTableCap);

/// The product evaluation at roots of unity: for an m-cover with class t
/// irredundant, n_t a period of w_A and z ≡ a_t (mod n_t),
///   prod_{s not in I_z} (1 - e((a_s-z)/n_s))
///     = prod_{s in I_z} n_s * prod_{j=1}^{n_t} (1 - e((j-a_t)/n_t))^{w_A(j)-m}.
/// The j ≡ a_t factor is 0^0 and is skipped; all other exponents are
/// nonnegative under the hypotheses (asserted).
Lemma3Result lemma3_check(const CoverSystem& system, int m, std::size_t t,
                          long long z, double tol = kDefaultTol,
                          long long table_cap = kDefaultTableCap);

/// Fixed sample points inside the unit disk (documented for reproducibility):
/// y in {0, 1/2, -1/3, 0.7i, 0.9 e(1/7)}.
std::vector<std::complex<double>> default_product_samples();

/// The generating identity behind lemma3_check, checked at sample points:
///   prod_{s=1}^k (1 - y^{N/n_s} e(a_s/n_s))
///     = prod_{j=1}^{n_t} (1 - y^{N/n_t} e(j/n_t))^{w_A(j)},  N = N_A.
/// Requires n_t to be a period of w_A; `enforce_period = false` skips that
/// gate so the identity's genuine failure off-hypothesis can be observed.
ProductIdentityResult product_identity_check(
    const CoverSystem& system, std::size_t t,
    const std::vector<std::complex<double>>& samples = default_product_samples(),
    double tol = kDefaultTol, bool enforce_period = true,
    long long table_cap = kDefaultTableCap);

/// Exact check of (1/N_A) sum_{x=0}^{N_A-1} w_A(x) = sum_s 1/n_s.
bool average_equality_check(const CoverSystem& system,
                            long long table_cap = kDefaultTableCap);

} // namespace covers
