#pragma once

// Vandermonde diagonalization at concrete points: the matrices V, L, M, E, P, Y
// attached to a tuple x = (x_0, ..., x_{m-1}) of pairwise distinct field elements,
// the five identities relating them, and minimal orderings over Z_(p)[zeta_{p^n}].

#include <cstdint>
#include <string>
#include <vector>

#include "cyclowed/matrix.hpp"

namespace cyclowed {

template <class T>
class PointTuple {
public:
    /// Throws DomainError on an empty tuple or on repeated points.
    explicit PointTuple(std::vector<T> values);

    std::size_t size() const { return values_.size(); }
    const T& operator[](std::size_t i) const { return values_[i]; }
    const std::vector<T>& values() const { return values_; }
    const T& zero() const { return zero_; }

    /// The tuple (x_{perm[0]}, x_{perm[1]}, ...).
    PointTuple permuted(const std::vector<std::size_t>& perm) const;

private:
    std::vector<T> values_;
    T zero_;
};

/// V = (x_j^i).
template <class T>
Matrix<T> build_V(const PointTuple<T>& x);
/// L_{i,j} = prod_{k<j, k!=i}(x_j - x_k) / prod_{k<j, k!=i}(x_i - x_k) for i < j, else 0.
template <class T>
Matrix<T> build_L(const PointTuple<T>& x);
/// M_{i,j} = prod_{k<i}(x_j - x_k) / prod_{k<i}(x_i - x_k).
template <class T>
Matrix<T> build_M(const PointTuple<T>& x);
/// E_{i,j} = (-1)^{i-j} e_{i-j}(x_0, ..., x_{i-1}).
template <class T>
Matrix<T> build_E(const PointTuple<T>& x);
/// P_{i,j} = h_{i-j}(x_0, ..., x_j), complete homogeneous symmetric polynomials.
template <class T>
Matrix<T> build_P(const PointTuple<T>& x);
/// Y = diag(y_i), y_i = prod_{k<i}(x_i - x_k).
template <class T>
Matrix<T> build_Y(const PointTuple<T>& x);

struct IdentityCheck {
    std::string name;
    bool holds = false;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    bool all_hold() const;
};

/// Checks E P = I, M (I - L) = I, E V = Y M, E V (I - L) = Y and V = P Y M exactly.
template <class T>
IdentityReport verify_identities(const PointTuple<T>& x);

/// Matrix of v_t(x_i - x_j) (INFINITY on the diagonal).
std::vector<std::vector<Valuation>> difference_valuations(const PointTuple<CycElement>& x, std::int64_t p,
                                                          int n);

/// Sum_{i<j} v_t(x_j - x_i) <= sum_{i<j} v_t(x_k - x_i) for all j < k.
bool is_minimally_ordered(const PointTuple<CycElement>& x, std::int64_t p, int n);

/// Greedy reordering; result[j] is the original index placed at position j.
/// Throws InternalError if the result fails the minimal-ordering inequalities.
std::vector<std::size_t> minimal_order(const PointTuple<CycElement>& x, std::int64_t p, int n);

/// (sum_{j<i} v_t(x_i - x_j))_i for a minimally ordered tuple.
std::vector<Valuation> eldiv_valuations_by_ordering(const PointTuple<CycElement>& x, std::int64_t p, int n);

/// (1 - zeta_{p^n}^j) over j in [0, p^n - 1], skipping multiples of p when units_only.
PointTuple<CycElement> cyclotomic_tuple(std::int64_t p, int n, bool units_only);

extern template class PointTuple<Rational>;
extern template class PointTuple<CycElement>;

} // namespace cyclowed
