#pragma once

// Dense univariate integer polynomials, coefficient of X^k at index k.
// Used for cyclotomic polynomials and Gaussian binomials in q.

#include <cstdint>
#include <string>
#include <vector>

#include "cyclowed/arith.hpp"

namespace cyclowed {

struct IntPoly {
    std::vector<Integer> coeffs;

    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> c);
    static IntPoly monomial(Integer c, std::size_t degree);

    /// Degree, or -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    Integer coeff(std::size_t k) const { return k < coeffs.size() ? coeffs[k] : Integer(0); }

    friend bool operator==(const IntPoly&, const IntPoly&) = default;
    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a);

    IntPoly scaled(const Integer& c) const;
    /// Multiplication by X^k.
    IntPoly shifted(std::size_t k) const;

    std::string to_string(const std::string& var = "X") const;

private:
    void trim();
};

/// Quotient of a by a monic divisor; throws DomainError if the division is inexact.
IntPoly exact_div_monic(const IntPoly& a, const IntPoly& monic);

/// Phi_m(X), computed by dividing X^m - 1 by Phi_d(X) for the proper divisors d of m.
const IntPoly& cyclotomic_polynomial(std::int64_t m);

using GaussPoly = IntPoly;

/// Gaussian binomial [i choose j]_q via [i,j] = [i-1,j-1] + q^j [i-1,j]; zero for j outside [0,i].
GaussPoly gauss_binomial(std::int64_t i, std::int64_t j);

/// Coefficients of (1 + T + ... + T^k)^a, i.e. the generalized binomials C(a, b)_k.
std::vector<Integer> generalized_binomials(int a, int k);

} // namespace cyclowed
