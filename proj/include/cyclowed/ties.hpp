#pragma once

// Triangular systems of congruences ("ties") describing the image of an
// embedding inside a product of rings. Each congruence reads
//
//     target == sum_k coeff_k * coord_k   (mod modulus)
//
// where every coord_k precedes target in the declared order.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cyclowed/cyclotomic.hpp"

namespace cyclowed {

class Modulus {
public:
    enum class Kind { TPower, Element, Integer };

    /// t^k with t = 1 - zeta_{p^n}, inside Z_(p)[zeta_{p^n}].
    static Modulus t_power(long k, std::int64_t p, int n);
    /// A nonzero element d of Z[zeta_m]; residues must lie in d Z[zeta_m].
    static Modulus element(CycElement d);
    /// A positive rational integer.
    static Modulus integer(Integer q);

    Kind kind() const { return kind_; }
    long t_exponent() const { return t_exponent_; }
    std::int64_t prime() const { return p_; }
    int level() const { return n_; }
    const CycElement& element_value() const { return element_; }
    const Integer& integer_value() const { return integer_; }

    /// Whether the residue r lies in the ideal generated by this modulus.
    bool divides(const CycElement& r) const;

    std::string to_string() const;

private:
    Kind kind_ = Kind::Integer;
    long t_exponent_ = 0;
    std::int64_t p_ = 0;
    int n_ = 0;
    CycElement element_;
    CycElement element_inv_;
    Integer integer_ = 1;
};

struct TieTerm {
    std::string coord;
    CycElement coeff;
};

struct Congruence {
    std::string target;
    Modulus modulus;
    std::vector<TieTerm> form;

    /// target - sum coeff * coord evaluated at the given values.
    CycElement residue(const std::map<std::string, CycElement>& values) const;
    std::string to_string() const;
};

class TieSystem {
public:
    TieSystem() = default;
    /// Throws DomainError unless every congruence only references earlier coordinates.
    TieSystem(std::vector<std::string> order, std::vector<Congruence> congruences);

    const std::vector<std::string>& order() const { return order_; }
    const std::vector<Congruence>& congruences() const { return congruences_; }

    /// Indices of the congruences that fail at the given coordinate values.
    std::vector<std::size_t> violations(const std::map<std::string, CycElement>& values) const;
    bool accepts(const std::map<std::string, CycElement>& values) const { return violations(values).empty(); }

    /// Binds values[k] to order()[k].
    std::map<std::string, CycElement> bind(const std::vector<CycElement>& values) const;

private:
    std::vector<std::string> order_;
    std::vector<Congruence> congruences_;
};

} // namespace cyclowed
