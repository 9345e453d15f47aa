#pragma once

// The cyclic Wedderburn embedding
//     omega_m : Z[zeta_m] C_m -> prod_{j in [0, m-1]} Z[zeta_m],   c_m -> (zeta_m^j)_j,
// its q-Pascal diagonalization, tie system, elementary divisors, the Pascal tie
// rings W1 and W2 (the latter localized at p), and the radical series of W1.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cyclowed/dedekind.hpp"
#include "cyclowed/matrix.hpp"
#include "cyclowed/poly.hpp"
#include "cyclowed/ties.hpp"

namespace cyclowed {

/// Element of Q C_m; coefficient of c_m^j at index j.
class GroupRingElement {
public:
    /// Throws DomainError unless coeffs has length m >= 1.
    GroupRingElement(std::int64_t m, std::vector<Rational> coeffs);

    static GroupRingElement zero(std::int64_t m);
    static GroupRingElement one(std::int64_t m);
    /// c_m^k, k taken mod m.
    static GroupRingElement generator_power(std::int64_t m, std::int64_t k);

    std::int64_t order() const { return m_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& operator[](std::size_t j) const { return coeffs_[j]; }

    bool is_integral() const;
    bool is_p_integral(std::int64_t p) const;

    friend GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b);
    friend GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b);
    /// Cyclic convolution.
    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
    friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

    GroupRingElement pow(unsigned long e) const;
    std::string to_string() const;

private:
    std::int64_t m_;
    std::vector<Rational> coeffs_;
};

/// (sum_i x_i zeta_m^{ij})_j.
std::vector<CycElement> wedderburn_apply(const GroupRingElement& x);
/// Same for an element of Z[zeta_m] C_m given by its coefficients.
std::vector<CycElement> wedderburn_apply(std::int64_t m, const std::vector<CycElement>& coeffs);

/// V_{zeta_m^e} = (zeta_m^{e i j})_{i,j}; row i is the image of c_m^i when e = 1.
CycMatrix fourier_matrix(std::int64_t m, std::int64_t e = 1);

/// x with x * V_zeta = y; member iff every x_i lies in Z[zeta_m].
MembershipResult wedderburn_membership(std::int64_t m, const std::vector<CycElement>& y);

/// Preimage in Q C_m by Fourier inversion; throws DomainError if y is not the image of a rational element.
GroupRingElement wedderburn_preimage(std::int64_t m, const std::vector<CycElement>& y);

/// G_q = ([i choose j]_q)_{i,j in [0, m-1]}.
CycMatrix q_pascal(std::size_t m, const CycElement& q);
/// ((-1)^{j+k} q^{C(j-k,2)} [j choose k]_q)_{j,k}.
CycMatrix q_pascal_inverse(std::size_t m, const CycElement& q);

/// Polynomial matrices in q, entry (i, j) at index i * m + j.
std::vector<GaussPoly> q_pascal_poly(std::size_t m);
std::vector<GaussPoly> q_pascal_inverse_poly(std::size_t m);
/// G_q * G_q^{-1} == I as polynomials in q.
bool q_pascal_inverse_identity(std::size_t m);

/// [i]! (q - 1)^i q^{C(i,2)}, the diagonal of D_q.
CycElement d_entry(std::size_t i, const CycElement& q);

struct Diagonalization {
    CycMatrix left;     // G_{zeta^{-1}}^T
    CycMatrix right;    // G_{zeta^{-1}}
    CycMatrix diagonal; // m (D_{zeta^{-1}})^{-1}
};

/// left * V_zeta * right == diagonal, checked exactly; throws InternalError on any failed check
/// (identity, closed form of the diagonal, integrality, last entry zeta_m).
Diagonalization wedderburn_diagonalize(std::int64_t m);

/// m zeta^{i^2} / prod_{j in [1,i]} (1 - zeta^j).
CycElement wedderburn_diagonal_entry(std::int64_t m, std::int64_t i);

/// V_zeta V_{zeta^{-1}} == m I.
bool fourier_inversion_holds(std::int64_t m);
/// (det V_zeta)^2 computed by elimination.
CycElement fourier_det_squared(std::int64_t m);
/// (-1)^{(m-1)/2} m^m for odd m, (-1)^{(m-2)/2} m^m for even m.
Integer fourier_det_squared_expected(std::int64_t m);

/// For i in [0, m-1]: sum_{j >= i} y_j [j choose i]_{zeta^{-1}} in d_i Z[zeta_m], d_i = m / prod_{j in [1,i]}(1 - zeta^j).
/// Written as y_i == -sum_{j > i} [j choose i]_{zeta^{-1}} y_j mod d_i over the order y_{m-1}, ..., y_0.
TieSystem wedderburn_ties(std::int64_t m);

/// Rows ((-1)^k zeta^{C(k,2)} (m / prod_{l in [1,j]}(1 - zeta^l)) [j choose k]_zeta)_k, j in [0, m-1].
CycMatrix wedderburn_image_basis(std::int64_t m);

/// Rows (prod_{k<i}(zeta^j - zeta^k))_j: the Vandermonde basis at x_j = zeta^j.
CycMatrix wedderburn_vandermonde_basis(std::int64_t m);

/// Full tuple (1 - zeta_{p^n}^j)_{j in [0, p^n - 1]} and its Vandermonde matrix.
PointTuple<CycElement> wedderburn_tuple(std::int64_t p, int n);
CycMatrix wedderburn_matrix(std::int64_t p, int n);

/// sum_k (a_k - a_{k+1})(k+1) p^k over the p-adic digits a_k of j.
Valuation wedderburn_eldiv_closed_form(std::int64_t p, int n, std::int64_t j);
std::vector<Valuation> wedderburn_eldiv_closed_forms(std::int64_t p, int n);
/// sum_{i in [1,j]} i[p], i[p] the p-part of i.
Valuation wedderburn_eldiv_digit_oracle(std::int64_t p, int n, std::int64_t j);
/// n p^{2n-1} (p-1) / 2.
Integer wedderburn_det_valuation(std::int64_t p, int n);

/// Coordinates of an element of W1 over xi_{m,0}, ..., xi_{m,m-1}.
struct XiBasisVector {
    std::int64_t m = 1;
    std::vector<CycElement> coords;

    /// sum_i coords_i xi_{m,i} in W0.
    std::vector<CycElement> evaluate() const;
};

/// xi_{m,i} = ((-1)^i t^i C(j,i))_j with t = 1 - zeta_m.
std::vector<CycElement> xi_vector(std::int64_t m, std::int64_t i);
/// Rows xi_{m,0}, ..., xi_{m,m-1}.
CycMatrix w1_basis(std::int64_t m);
/// z_j = t^{-j} sum_{i <= j} (-1)^i C(j,i) y_i.
XiBasisVector w1_coordinates(std::int64_t m, const std::vector<CycElement>& y);
/// Whether every xi coordinate of y lies in Z[zeta_m].
bool w1_membership(std::int64_t m, const std::vector<CycElement>& y);
/// xi_{m,j} xi_{m,i} over the xi basis for j <= i; throws DomainError if j > i.
XiBasisVector xi_product(std::int64_t m, std::int64_t j, std::int64_t i);
/// Coordinates (((1 - zeta^i)/t)^k)_k of the image of c_m^i, with 0^0 = 1.
XiBasisVector xi_coords_of_generator_power(std::int64_t m, std::int64_t i);

/// Membership of an integral tuple in W1 for m = p prime, decided modulo p on the
/// integer coefficients y_{i,j} of y_i = sum_j y_{i,j} zeta^j.
bool w1_coefficient_criterion(std::int64_t p, const std::vector<CycElement>& y);

/// f(X) = gamma X^p - sum_{k in [1,p-1]} (t^{k-1}/k) X^k, coefficient of X^k at index k.
std::vector<CycElement> w2_polynomial(std::int64_t p, int n);
/// gamma = sum_{k in [1,p-1]} t^{k-1}/k.
CycElement w2_gamma(std::int64_t p, int n);
/// Column i + j p holds the coefficients of X^i f^j, i in [0,p-1], j in [0,p^{n-1}-1].
CycMatrix w2_condition_matrix(std::int64_t p, int n);
/// Column exponents j (p - 1) matching w2_condition_matrix.
std::vector<long> w2_condition_exponents(std::int64_t p, int n);
/// (X^i f^j)[z] == 0 mod t^{j(p-1)} for all conditions; false if some z_k is not p-integral.
bool w2_membership(std::int64_t p, int n, const XiBasisVector& z);
/// Membership of a tuple of W0 via its xi coordinates.
bool w2_membership(std::int64_t p, int n, const std::vector<CycElement>& y);
/// Basis of (W2)_(p) in W0 coordinates: rows of diag(t^{e}) C^{-1} A, A = w1_basis.
CycMatrix w2_basis(std::int64_t p, int n);

struct SubringReport {
    std::size_t products = 0;
    std::size_t closed = 0;
    /// Pairs (a, b) of basis rows whose product left W2.
    std::vector<std::pair<std::size_t, std::size_t>> failures;
};

/// Pointwise products of all pairs of w2_basis rows tested for W2 membership.
SubringReport w2_subring_experiment(std::int64_t p, int n);

/// l_{p^n,i} = sum_{j in [0,i]} C(n,j)_{p-1}.
long w1_radical_layer_dim(std::int64_t p, int n, long i);
/// max(i - q_p(j), 0) for j in [0, p^n - 1].
std::vector<long> w1_radical_exponents(std::int64_t p, int n, long i);
/// Rows t^{max(i - q_p(j), 0)} xi_{p^n,j}.
CycMatrix w1_radical_power_basis(std::int64_t p, int n, long i);

} // namespace cyclowed
