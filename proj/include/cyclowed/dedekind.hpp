#pragma once

// The cyclotomic Dedekind embedding
//     T (x)_S T -> prod_{u in (Z/p^n)^*} T,   x (x) y -> (x * sigma_u(y))_u,
// with S = Z_(p), T = Z_(p)[zeta_{p^n}], described through the Vandermonde
// matrix at theta^{sigma_u}.

#include <cstdint>
#include <string>
#include <vector>

#include "cyclowed/matrix.hpp"
#include "cyclowed/ties.hpp"
#include "cyclowed/vandermonde.hpp"

namespace cyclowed {

/// Generator theta of T over S.
enum class Generator { OneMinusZeta, Zeta };

/// Units u in [1, p^n - 1], ascending; position k carries sigma_k: zeta -> zeta^u.
std::vector<std::int64_t> unit_indices(std::int64_t p, int n);

/// (theta^{sigma_u})_u in the order of unit_indices.
PointTuple<CycElement> dedekind_tuple(std::int64_t p, int n, Generator g = Generator::OneMinusZeta);

/// V_tau, of size phi(p^n) over Q(zeta_{p^n}).
CycMatrix dedekind_matrix(std::int64_t p, int n);

/// Valuation of the N(j)-th elementary divisor, N(j) = #([0,j] \ pZ), via the p-adic digits of j.
Valuation dedekind_eldiv_closed_form(std::int64_t p, int n, std::int64_t j);

/// Closed forms for all unit indices, ascending.
std::vector<Valuation> dedekind_eldiv_closed_forms(std::int64_t p, int n);

/// p^{2n-2}(p-1)((p-1)n-1)/2.
Integer dedekind_det_valuation(std::int64_t p, int n);

/// eta_i == sum_{j<i} L_{j,i}(tau) eta_j  mod t^{phi_i}; coordinates eta_0, eta_1, ...
TieSystem dedekind_ties(std::int64_t p, int n);

/// Rows (prod_{k<i}(theta^{sigma_j} - theta^{sigma_k}))_j for i in [0, phi(p^n) - 1].
CycMatrix dedekind_image_basis(std::int64_t p, int n, Generator g = Generator::OneMinusZeta);

struct MembershipResult {
    bool member = false;
    /// Solution x of x * V = eta (coordinates over 1 (x) theta^i).
    std::vector<CycElement> witness;
};

MembershipResult dedekind_membership(std::int64_t p, int n, const std::vector<CycElement>& eta);

/// Image of zeta^k (x) zeta^l: (zeta^{k + u l})_u.
std::vector<CycElement> dedekind_image_of(std::int64_t p, int n, std::int64_t k, std::int64_t l);

struct HochschildDescriptor {
    enum class Kind { FreeRankOne, Zero, TModTPower };
    Kind kind = Kind::Zero;
    long exponent = 0;

    static HochschildDescriptor free_rank_one() { return {Kind::FreeRankOne, 0}; }
    static HochschildDescriptor zero() { return {Kind::Zero, 0}; }
    /// T/t^k T; k = 0 collapses to ZERO.
    static HochschildDescriptor quotient(long k) { return k == 0 ? zero() : HochschildDescriptor{Kind::TModTPower, k}; }

    friend bool operator==(const HochschildDescriptor&, const HochschildDescriptor&) = default;
    std::string to_string() const;
};

enum class HochschildVariant { Homology, Cohomology };

/// phi = sum_{u != 1} v_t(theta - theta^{sigma_u}).
long hochschild_phi(std::int64_t p, int n);

/// H_j(T, T_twist; S) or H^j(T, T_twist; S); twist 1 is the untwisted bimodule.
HochschildDescriptor hochschild(std::int64_t p, int n, std::int64_t twist, int degree, HochschildVariant variant);

/// dim_{T/tT} r^i Lambda / r^{i+1} Lambda = min(i + 1, phi(p^n)).
long lambda_radical_layers(std::int64_t p, int n, long i);

/// Checks p prime, n >= 1; returns p^n.
std::int64_t checked_prime_power(std::int64_t p, int n);

} // namespace cyclowed
