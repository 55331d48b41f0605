#pragma once

#include <stdexcept>
#include <string>

namespace covers {

/// Machine-checkable reason attached to every covers::Error.
enum class Errc {
    empty_system,              // lcm/window bound asked of a system with no classes
    period_too_large,          // N_A exceeds the table cap
    too_many_classes,          // 2^k enumeration would exceed the class cap
    bad_index,                 // class index outside [1, k]
    bad_argument,              // malformed parameter (m < 1, p < 2, ...)
    not_m_cover,               // hypothesis w_A >= m fails
    not_exact_cover,           // hypothesis w_A == m fails
    redundant_class,           // distinguished class may be removed without losing m-coverage
    not_a_period,              // distinguished modulus is not a period of w_A
    not_in_class,              // evaluation point z is outside the distinguished class
    minimum_not_unique,        // covering minimum attained more than once per period
    degree_exceeds_multiplicity, // deg f > m(A)
    search_cap_exceeded,       // residue search space larger than the cap
    parse_error,               // system text is malformed
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace covers
