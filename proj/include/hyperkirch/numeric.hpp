#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hyperkirch {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised for well-formed requests the mathematics cannot satisfy
/// (nonpositive weights, infeasible parameters, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an enumeration would exceed its configured size cap.
class BudgetExceeded : public DomainError {
public:
    using DomainError::DomainError;
};

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// "num/den" in lowest terms; integers print without a denominator.
inline std::string to_string(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Integer parse_integer(const std::string& text);
Rational parse_rational(const std::string& text);

inline Integer ipow(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Rational rpow(const Rational& base, unsigned long exp) {
    Rational r = 1;
    for (unsigned long i = 0; i < exp; ++i) r *= base;
    return r;
}

/// If q = p^a with p prime and a >= 1, returns p; otherwise 0.
std::uint64_t prime_power_base(std::uint64_t q);
bool is_prime(std::uint64_t n);

}  // namespace hyperkirch
