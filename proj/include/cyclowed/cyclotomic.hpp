#pragma once

// Exact arithmetic in Q(zeta_m) over the power basis 1, zeta, ..., zeta^{phi(m)-1},
// with t-adic valuations at t = 1 - zeta_{p^n}.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "cyclowed/arith.hpp"
#include "cyclowed/poly.hpp"

namespace cyclowed {

/// A t-adic (or p-adic) valuation: a finite integer or INFINITY (the valuation of 0).
class Valuation {
public:
    constexpr Valuation() = default;
    constexpr explicit Valuation(long v) : value_(v), infinite_(false) {}
    static constexpr Valuation infinity()
    {
        Valuation v;
        v.infinite_ = true;
        return v;
    }

    constexpr bool is_infinite() const { return infinite_; }
    long value() const;

    friend constexpr bool operator==(const Valuation& a, const Valuation& b)
    {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(const Valuation& a, const Valuation& b)
    {
        if (a.infinite_ || b.infinite_)
            return a.infinite_ == b.infinite_ ? std::strong_ordering::equal
                   : a.infinite_             ? std::strong_ordering::greater
                                             : std::strong_ordering::less;
        return a.value_ <=> b.value_;
    }
    friend Valuation operator+(const Valuation& a, const Valuation& b)
    {
        if (a.infinite_ || b.infinite_)
            return infinity();
        return Valuation(a.value_ + b.value_);
    }

    std::string to_string() const;

private:
    long value_ = 0;
    bool infinite_ = false;
};

namespace detail {
struct CycField;
}

/// Element of Q(zeta_m), canonically reduced modulo Phi_m.
///
/// Stored as an integer numerator vector over a positive common denominator
/// with gcd(content, denominator) = 1, so equality is coefficientwise.
class CycElement {
public:
    /// Zero of Q = Q(zeta_1).
    CycElement();

    static CycElement zero(std::int64_t m);
    static CycElement one(std::int64_t m);
    static CycElement from_rational(std::int64_t m, const Rational& q);
    /// zeta_m^e for any integer e.
    static CycElement zeta_power(std::int64_t m, std::int64_t e);
    /// Element with the given coefficients of zeta^0, zeta^1, ...; any length, reduced mod Phi_m.
    static CycElement from_coeffs(std::int64_t m, const std::vector<Rational>& coeffs);
    static CycElement from_integers(std::int64_t m, const std::vector<Integer>& coeffs);

    std::int64_t conductor() const;
    /// phi(m), the length of the coefficient vector.
    std::size_t degree() const { return num_.size(); }

    Rational coeff(std::size_t j) const;
    std::vector<Rational> coeffs() const;
    const std::vector<Integer>& numerators() const { return num_; }
    const Integer& denominator() const { return den_; }

    bool is_zero() const;
    bool is_one() const;
    /// All coefficients are integers, i.e. the element lies in Z[zeta_m].
    bool is_integral() const { return den_ == 1; }
    /// No coefficient has p in its denominator.
    bool is_p_integral(std::int64_t p) const;

    CycElement& operator+=(const CycElement& b);
    CycElement& operator-=(const CycElement& b);
    CycElement& operator*=(const CycElement& b);
    CycElement& operator*=(const Rational& q);

    friend CycElement operator+(CycElement a, const CycElement& b) { return a += b; }
    friend CycElement operator-(CycElement a, const CycElement& b) { return a -= b; }
    friend CycElement operator*(CycElement a, const CycElement& b) { return a *= b; }
    friend CycElement operator*(CycElement a, const Rational& q) { return a *= q; }
    friend CycElement operator*(const Rational& q, CycElement a) { return a *= q; }
    friend CycElement operator-(CycElement a);

    friend bool operator==(const CycElement& a, const CycElement& b);

    CycElement inverse() const;
    CycElement pow(unsigned long e) const;
    /// zeta -> zeta^i for gcd(i, m) = 1.
    CycElement galois(std::int64_t i) const;

    std::string to_string(const std::string& zeta = "z") const;

private:
    CycElement(const detail::CycField* f, std::vector<Integer> num, Integer den);
    void normalize();
    void require_same_field(const CycElement& b) const;

    const detail::CycField* field_;
    std::vector<Integer> num_;
    Integer den_;
};

CycElement add(const CycElement& a, const CycElement& b);
CycElement sub(const CycElement& a, const CycElement& b);
CycElement mul(const CycElement& a, const CycElement& b);
CycElement neg(const CycElement& a);
CycElement invert(const CycElement& a);
CycElement galois_apply(const CycElement& a, std::int64_t i);

/// Coefficients b_i with a = sum_i b_i t^i, t = 1 - zeta.
std::vector<Rational> to_t_basis(const CycElement& a);

/// v_t(a) at t = 1 - zeta_{p^n}; requires a.conductor() == p^n.
Valuation t_valuation(const CycElement& a, std::int64_t p, int n);

/// 1 - zeta_m.
CycElement uniformizer(std::int64_t m);

/// Horner evaluation of g at q inside Q(zeta_m).
CycElement gauss_eval(const GaussPoly& g, const CycElement& q);

} // namespace cyclowed
