#pragma once

// The absolute embedding Z C_m -> prod_{d|m} Z[zeta_d], c_m -> (zeta_d)_d: the operators
// T^{m,s}_i on finitely supported sequences, the Kervaire-Murthy ties for m = p^n,
// inversion formulas, index and discriminant, and the reduction of composite m to
// prime powers.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cyclowed/wedderburn.hpp"

namespace cyclowed {

/// Integer sequence indexed by Z with finite support; zero entries are never stored.
class FinSuppSeq {
public:
    FinSuppSeq() = default;
    /// Entries at 0, 1, ..., size - 1.
    static FinSuppSeq from_vector(const std::vector<Integer>& v);

    Integer at(std::int64_t j) const;
    void set(std::int64_t j, const Integer& v);
    void add(std::int64_t j, const Integer& v);
    const std::map<std::int64_t, Integer>& support() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    /// Whether the support lies in [lo, hi].
    bool supported_in(std::int64_t lo, std::int64_t hi) const;

    FinSuppSeq& operator+=(const FinSuppSeq& b);
    FinSuppSeq& operator-=(const FinSuppSeq& b);
    FinSuppSeq& operator*=(const Integer& c);
    friend FinSuppSeq operator+(FinSuppSeq a, const FinSuppSeq& b) { return a += b; }
    friend FinSuppSeq operator-(FinSuppSeq a, const FinSuppSeq& b) { return a -= b; }
    friend FinSuppSeq operator*(const Integer& c, FinSuppSeq a) { return a *= c; }
    friend bool operator==(const FinSuppSeq&, const FinSuppSeq&) = default;

    /// Every entry divisible by q.
    bool divisible_by(const Integer& q) const;
    /// sum_j x_j zeta_{m}^j.
    CycElement evaluate(std::int64_t m) const;
    std::string to_string() const;

private:
    std::map<std::int64_t, Integer> entries_;
};

/// (T^{m,s}_i x)_j = chi_{[0,p^i-1]}(j) sum_k x_{[j]_{p^{i-m}} - p^{i-m} + k p^{i+s}} for i >= m, zero for i < m.
FinSuppSeq t_operator(int m, int s, int i, std::int64_t p, const FinSuppSeq& x);

/// Coefficient vectors x_i of elements of Z[zeta_{p^i}], i in [0, n].
class AbsoluteTuple {
public:
    /// Throws DomainError unless there are n + 1 components with support of x_i in [0, phi(p^i) - 1].
    AbsoluteTuple(std::int64_t p, int n, std::vector<FinSuppSeq> components);

    std::int64_t prime() const { return p_; }
    int level() const { return n_; }
    const FinSuppSeq& component(int i) const { return components_.at(static_cast<std::size_t>(i)); }
    const std::vector<FinSuppSeq>& components() const { return components_; }
    Integer x(int i, std::int64_t j) const { return component(i).at(j); }
    CycElement element(int i) const;

    friend bool operator==(const AbsoluteTuple&, const AbsoluteTuple&) = default;

private:
    std::int64_t p_;
    int n_;
    std::vector<FinSuppSeq> components_;
};

/// Image of an integral element of Q C_{p^n}; throws DomainError if x is not integral.
AbsoluteTuple absolute_apply(std::int64_t p, int n, const GroupRingElement& x);
/// Coefficients over zeta^0, ..., zeta^{phi-1} of each component of the image of x in prod Q(zeta_{p^i}).
std::vector<std::vector<Rational>> absolute_apply_rational(std::int64_t p, int n, const GroupRingElement& x);

/// One group p^{l-1-i} (sum_k x_{n-i, pos_k} - sum_k x_{n-i, neg_k}) of a tie.
struct KMGroup {
    Integer coefficient;
    int source_level = 0;
    std::vector<std::int64_t> positive;
    std::vector<std::int64_t> negative;
};

/// Coefficients of a linear form in the x_{i,j}, keyed by (i, j); zero coefficients are not stored.
using KMForm = std::map<std::pair<int, std::int64_t>, Integer>;

/// x_{n-l, j} == sum of groups  mod p^l.
struct KMCongruence {
    int l = 0;
    int target_level = 0;
    std::int64_t j = 0;
    Integer modulus;
    std::vector<KMGroup> groups;

    Integer rhs(const AbsoluteTuple& t) const;
    KMForm form() const;
    /// e.g. "x_{0,0} ≡_9 3(x_{2,2} + x_{2,5}) + (x_{1,0} + x_{1,1})".
    std::string render() const;
};

/// The explicit ties for l in [1, n], j in [0, phi(p^{n-l}) - 1], ordered by l then j.
std::vector<KMCongruence> km_ties(std::int64_t p, int n);

struct KMViolation {
    int l = 0;
    std::int64_t j = 0;
    Integer modulus;
    Integer lhs_residue;
    Integer rhs_residue;
};

struct KMReport {
    bool holds = true;
    std::vector<KMViolation> violations;
};

/// Evaluates every explicit tie modulo p^l.
KMReport km_ties_check(const AbsoluteTuple& t);

/// Operator form: x_{n-l} - sum_i p^{l-1-i}(T^{0,l-1-i}_{n-l} - T^{1,l-1-i}_{n-l}) x_{n-i} divisible by p^l for all l.
bool km_ties_check_operator(const AbsoluteTuple& t);

/// Right-hand side of tie (l, j) read off from the operator form by applying it to unit sequences.
KMForm km_operator_form(std::int64_t p, int n, int l, std::int64_t j);

/// Preimage in Q C_{p^n} by the explicit inversion formula; representatives may be non-reduced.
GroupRingElement absolute_preimage(std::int64_t p, int n, const std::vector<FinSuppSeq>& y);
/// Whether the preimage of the tuple is integral.
bool absolute_image_membership_oracle(const AbsoluteTuple& t);

/// p^{(p^n - 1)/(p - 1)}.
Integer absolute_index(std::int64_t p, int n);
/// prod_{p | m} p^{((m[p] - 1)/(p - 1)) m[p']}.
Integer absolute_index_m(std::int64_t m);

/// p^i with multiplicity phi(p^{n-i}), ascending.
std::vector<Integer> absolute_eldiv_z(std::int64_t p, int n);
/// p^n x p^n integer matrix; row h holds the coefficients of (zeta_{p^i}^h)_{i in [0,n]}.
IntMatrix absolute_matrix(std::int64_t p, int n);

/// |disc Z[zeta_m]| = prod_{p | m} p^{(m[p]/p)(v_p(m)(p-1) - 1) phi(m[p'])}.
Integer discriminant_magnitude(std::int64_t m);
/// index(omega_{Z,m})^2 prod_{d | m} Delta_d == m^m.
bool index_discriminant_consistent(std::int64_t m);

/// Representative of the inverse of k[p'] in (Z/k[p])^*, least nonnegative.
std::int64_t s_value(std::int64_t k, std::int64_t p);

/// Element of prod_{d | m} Z[zeta_d] in the digit convention: for each d, the coefficients
/// a_{d,(j_p)_{p | d}} of zeta_d^{sum_p s_{d,p} j_p d[p']}, j_p in [0, phi(d[p]) - 1], with the
/// digit tuples in lexicographic order over the primes of d ascending.
struct CompositeTuple {
    std::int64_t m = 1;
    std::map<std::int64_t, std::vector<Integer>> coeffs;
};

/// Primes of d ascending and the digit ranges phi(d[p]).
std::vector<std::pair<std::int64_t, std::int64_t>> digit_shape(std::int64_t d);
/// The basis element zeta_d^{sum_p s_{d,p} j_p d[p']} for a digit tuple.
CycElement digit_basis_element(std::int64_t d, const std::vector<std::int64_t>& digits);

/// Digit coefficients of an element of Z[zeta_d]; throws DomainError if they are not integers.
std::vector<Integer> to_digit_coeffs(const CycElement& y);
CycElement from_digit_coeffs(std::int64_t d, const std::vector<Integer>& a);

/// Image of an integral element of Q C_m in the digit convention.
CompositeTuple composite_apply(std::int64_t m, const GroupRingElement& x);

struct DelegatedCheck {
    std::int64_t p = 0;
    std::int64_t f = 1;
    /// (j_q)_{q | f}, primes ascending.
    std::vector<std::int64_t> digits;
    AbsoluteTuple slice;
    bool holds = false;
    /// e.g. "(a_{1,(•,•)}) × (a_{2,(0,•)}) × (a_{4,(0,•)} + a_{4,(1,•)}ζ_4) ∈ ZC_4".
    std::string description;
};

struct CompositeReport {
    bool member = true;
    std::vector<DelegatedCheck> checks;
};

/// For each p | m, f | m[p'] and digit tuple over f: the slice over e | m[p] checked by km_ties_check.
CompositeReport composite_membership(const CompositeTuple& t);

/// The explicit inverse of omega_{Q,m}; reps[d] is any a_d(c_m) in Q C_m representing a_d(zeta_d).
GroupRingElement inversion_formula_m(std::int64_t m, const std::map<std::int64_t, GroupRingElement>& reps);

/// (x(zeta_d))_{d | m}.
std::map<std::int64_t, CycElement> absolute_apply_m(const GroupRingElement& x);

} // namespace cyclowed
