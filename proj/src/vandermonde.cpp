#include "cyclowed/vandermonde.hpp"

#include <algorithm>

namespace cyclowed {

template <class T>
PointTuple<T>::PointTuple(std::vector<T> values) : values_(std::move(values))
{
    if (values_.empty())
        throw DomainError("point tuple must be nonempty");
    zero_ = Scalar<T>::zero_like(values_.front());
    for (std::size_t i = 0; i < values_.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (values_[i] == values_[j])
                throw DomainError("points " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
}

template <class T>
PointTuple<T> PointTuple<T>::permuted(const std::vector<std::size_t>& perm) const
{
    if (perm.size() != values_.size())
        throw DomainError("permutation length mismatch");
    std::vector<T> v;
    v.reserve(perm.size());
    for (auto k : perm)
        v.push_back(values_.at(k));
    return PointTuple(std::move(v));
}

template class PointTuple<Rational>;
template class PointTuple<CycElement>;

namespace {

template <class T>
std::vector<T> diffs_y(const PointTuple<T>& x)
{
    const T one = Scalar<T>::one_like(x.zero());
    std::vector<T> y(x.size(), one);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t k = 0; k < i; ++k)
            y[i] *= x[i] - x[k];
    return y;
}

// inv[i][k] = 1 / (x_i - x_k) for i != k.
template <class T>
std::vector<std::vector<T>> inverse_differences(const PointTuple<T>& x)
{
    const std::size_t m = x.size();
    std::vector<std::vector<T>> inv(m, std::vector<T>(m, x.zero()));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < i; ++k) {
            inv[i][k] = Scalar<T>::inverse(x[i] - x[k]);
            inv[k][i] = -inv[i][k];
        }
    return inv;
}

} // namespace

template <class T>
Matrix<T> build_V(const PointTuple<T>& x)
{
    const std::size_t m = x.size();
    Matrix<T> v(m, m, x.zero());
    for (std::size_t j = 0; j < m; ++j) {
        T pw = Scalar<T>::one_like(x.zero());
        for (std::size_t i = 0; i < m; ++i) {
            v(i, j) = pw;
            pw *= x[j];
        }
    }
    return v;
}

template <class T>
Matrix<T> build_L(const PointTuple<T>& x)
{
    const std::size_t m = x.size();
    const auto y = diffs_y(x);
    const auto inv = inverse_differences(x);
    Matrix<T> l(m, m, x.zero());
    for (std::size_t i = 0; i < m; ++i) {
        // inv_den = 1 / prod_{k<j, k!=i}(x_i - x_k), extended as j grows.
        T inv_den = Scalar<T>::one_like(x.zero());
        for (std::size_t k = 0; k < i; ++k)
            inv_den *= inv[i][k];
        for (std::size_t j = i + 1; j < m; ++j) {
            if (j > i + 1)
                inv_den *= inv[i][j - 1];
            l(i, j) = y[j] * inv[j][i] * inv_den;
        }
    }
    return l;
}

template <class T>
Matrix<T> build_M(const PointTuple<T>& x)
{
    const std::size_t m = x.size();
    const auto y = diffs_y(x);
    Matrix<T> r(m, m, x.zero());
    for (std::size_t j = 0; j < m; ++j) {
        T num = Scalar<T>::one_like(x.zero());
        for (std::size_t i = 0; i < m; ++i) {
            if (i > 0)
                num *= x[j] - x[i - 1];
            if (num == x.zero())
                break;
            r(i, j) = num * Scalar<T>::inverse(y[i]);
        }
    }
    return r;
}

template <class T>
Matrix<T> build_E(const PointTuple<T>& x)
{
    const std::size_t m = x.size();
    const T one = Scalar<T>::one_like(x.zero());
    // e[d] = e_d(x_0, ..., x_{b-1}) for the current b.
    std::vector<T> e(m, x.zero());
    e[0] = one;
    Matrix<T> r(m, m, x.zero());
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            const T& v = e[i - j];
            r(i, j) = (i - j) % 2 ? -v : v;
        }
        for (std::size_t d = std::min(i + 1, m - 1); d >= 1; --d)
            e[d] += x[i] * e[d - 1];
    }
    return r;
}

template <class T>
Matrix<T> build_P(const PointTuple<T>& x)
{
    const std::size_t m = x.size();
    // h[d] = h_d(x_0, ..., x_b) for the current b.
    std::vector<T> h(m, x.zero());
    Matrix<T> r(m, m, x.zero());
    for (std::size_t j = 0; j < m; ++j) {
        if (j == 0) {
            T pw = Scalar<T>::one_like(x.zero());
            for (std::size_t d = 0; d < m; ++d) {
                h[d] = pw;
                pw *= x[0];
            }
        } else {
            for (std::size_t d = 1; d < m; ++d)
                h[d] += x[j] * h[d - 1];
        }
        for (std::size_t i = j; i < m; ++i)
            r(i, j) = h[i - j];
    }
    return r;
}

template <class T>
Matrix<T> build_Y(const PointTuple<T>& x)
{
    const auto y = diffs_y(x);
    Matrix<T> r(x.size(), x.size(), x.zero());
    for (std::size_t i = 0; i < x.size(); ++i)
        r(i, i) = y[i];
    return r;
}

bool IdentityReport::all_hold() const
{
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.holds; });
}

template <class T>
IdentityReport verify_identities(const PointTuple<T>& x)
{
    const Matrix<T> v = build_V(x), l = build_L(x), mm = build_M(x), e = build_E(x), p = build_P(x),
                    y = build_Y(x);
    const Matrix<T> id = identity_like(v);
    const Matrix<T> i_minus_l = matsub(id, l);
    const Matrix<T> ev = matmul(e, v);
    IdentityReport r;
    r.checks.push_back({"E*P = I", matmul(e, p) == id});
    r.checks.push_back({"M*(I-L) = I", matmul(mm, i_minus_l) == id});
    r.checks.push_back({"E*V = Y*M", ev == matmul(y, mm)});
    r.checks.push_back({"E*V*(I-L) = Y", matmul(ev, i_minus_l) == y});
    r.checks.push_back({"V = P*Y*M", v == matmul(p, matmul(y, mm))});
    return r;
}

#define CYCLOWED_INSTANTIATE(T)                                                                                   \
    template Matrix<T> build_V(const PointTuple<T>&);                                                             \
    template Matrix<T> build_L(const PointTuple<T>&);                                                             \
    template Matrix<T> build_M(const PointTuple<T>&);                                                             \
    template Matrix<T> build_E(const PointTuple<T>&);                                                             \
    template Matrix<T> build_P(const PointTuple<T>&);                                                             \
    template Matrix<T> build_Y(const PointTuple<T>&);                                                             \
    template IdentityReport verify_identities(const PointTuple<T>&);

CYCLOWED_INSTANTIATE(Rational)
CYCLOWED_INSTANTIATE(CycElement)
#undef CYCLOWED_INSTANTIATE

std::vector<std::vector<Valuation>> difference_valuations(const PointTuple<CycElement>& x, std::int64_t p, int n)
{
    const std::size_t m = x.size();
    std::vector<std::vector<Valuation>> v(m, std::vector<Valuation>(m, Valuation::infinity()));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < i; ++j)
            v[i][j] = v[j][i] = t_valuation(x[i] - x[j], p, n);
    return v;
}

namespace {

Valuation prefix_sum(const std::vector<std::vector<Valuation>>& v, const std::vector<std::size_t>& placed,
                     std::size_t candidate)
{
    Valuation s(0);
    for (auto i : placed)
        s = s + v[candidate][i];
    return s;
}

} // namespace

bool is_minimally_ordered(const PointTuple<CycElement>& x, std::int64_t p, int n)
{
    const auto v = difference_valuations(x, p, n);
    std::vector<std::size_t> placed;
    for (std::size_t j = 0; j < x.size(); ++j) {
        const Valuation here = prefix_sum(v, placed, j);
        for (std::size_t k = j + 1; k < x.size(); ++k)
            if (prefix_sum(v, placed, k) < here)
                return false;
        placed.push_back(j);
    }
    return true;
}

std::vector<std::size_t> minimal_order(const PointTuple<CycElement>& x, std::int64_t p, int n)
{
    const auto v = difference_valuations(x, p, n);
    const std::size_t m = x.size();
    std::vector<std::size_t> placed;
    std::vector<bool> used(m, false);
    for (std::size_t step = 0; step < m; ++step) {
        std::size_t best = m;
        Valuation best_v = Valuation::infinity();
        for (std::size_t c = 0; c < m; ++c) {
            if (used[c])
                continue;
            const Valuation s = prefix_sum(v, placed, c);
            if (best == m || s < best_v) {
                best = c;
                best_v = s;
            }
        }
        used[best] = true;
        placed.push_back(best);
    }
    if (!is_minimally_ordered(x.permuted(placed), p, n))
        throw InternalError("greedy reordering is not minimally ordered");
    return placed;
}

std::vector<Valuation> eldiv_valuations_by_ordering(const PointTuple<CycElement>& x, std::int64_t p, int n)
{
    if (!is_minimally_ordered(x, p, n))
        throw DomainError("tuple is not minimally ordered");
    const auto v = difference_valuations(x, p, n);
    std::vector<Valuation> out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        Valuation s(0);
        for (std::size_t j = 0; j < i; ++j)
            s = s + v[i][j];
        out.push_back(s);
    }
    return out;
}

PointTuple<CycElement> cyclotomic_tuple(std::int64_t p, int n, bool units_only)
{
    if (!is_prime(p) || n < 1)
        throw DomainError("need a prime p and n >= 1");
    const std::int64_t pn = ipow(p, static_cast<unsigned>(n));
    std::vector<CycElement> pts;
    for (std::int64_t j = 0; j < pn; ++j)
        if (!units_only || j % p != 0)
            pts.push_back(CycElement::one(pn) - CycElement::zeta_power(pn, j));
    return PointTuple<CycElement>(std::move(pts));
}

} // namespace cyclowed
