#pragma once

// Exact integer and rational scalars plus the elementary number theory used
// throughout the library (p-parts, Euler's function, digit expansions).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace cyclowed {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an argument violates an operation's precondition.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a computed identity that is a theorem fails to hold.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

Rational make_rational(const Integer& num, const Integer& den = 1);

/// Parses "a", "-a" or "a/b" into a canonical rational.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& q);

bool is_prime(std::int64_t n);
std::vector<std::int64_t> prime_divisors(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);
std::int64_t ipow(std::int64_t base, unsigned exp);
Integer zpow(std::int64_t base, unsigned long exp);
std::int64_t gcd64(std::int64_t a, std::int64_t b);

/// Representative of j modulo k in [0, k-1].
std::int64_t mod_floor(std::int64_t j, std::int64_t k);

/// v_p(k) for k != 0.
int valuation_p(std::int64_t k, std::int64_t p);
int valuation_p(const Integer& k, std::int64_t p);

/// p^{v_p(k)}; throws DomainError for k == 0.
std::int64_t p_part(std::int64_t k, std::int64_t p);

/// Base-p digits of j, least significant first; empty for j == 0.
std::vector<int> digits_base(std::int64_t j, std::int64_t p);
int digit_sum(std::int64_t j, std::int64_t p);

/// Inverse of a modulo k, as a representative in [0, k-1].
std::int64_t inverse_mod(std::int64_t a, std::int64_t k);

/// If n = p^e for a prime p and e >= 1, stores p, e and returns true.
bool prime_power(std::int64_t n, std::int64_t& p, int& e);

/// Integer binomial coefficient, zero when k < 0 or k > n.
Integer binomial(std::int64_t n, std::int64_t k);

} // namespace cyclowed
