#include "cyclowed/wedderburn.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace cyclowed {

GroupRingElement::GroupRingElement(std::int64_t m, std::vector<Rational> coeffs) : m_(m), coeffs_(std::move(coeffs))
{
    if (m < 1)
        throw DomainError("group order must be positive");
    if (coeffs_.size() != static_cast<std::size_t>(m))
        throw DomainError("expected " + std::to_string(m) + " group ring coefficients");
}

GroupRingElement GroupRingElement::zero(std::int64_t m)
{
    if (m < 1)
        throw DomainError("group order must be positive");
    return GroupRingElement(m, std::vector<Rational>(static_cast<std::size_t>(m), Rational(0)));
}

GroupRingElement GroupRingElement::one(std::int64_t m)
{
    return generator_power(m, 0);
}

GroupRingElement GroupRingElement::generator_power(std::int64_t m, std::int64_t k)
{
    GroupRingElement r = zero(m);
    r.coeffs_[static_cast<std::size_t>(mod_floor(k, m))] = 1;
    return r;
}

bool GroupRingElement::is_integral() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q.get_den() == 1; });
}

bool GroupRingElement::is_p_integral(std::int64_t p) const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [p](const Rational& q) { return valuation_p(Integer(q.get_den()), p) == 0; });
}

GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b)
{
    if (a.m_ != b.m_)
        throw DomainError("group orders differ");
    GroupRingElement r = a;
    for (std::size_t j = 0; j < r.coeffs_.size(); ++j)
        r.coeffs_[j] += b.coeffs_[j];
    return r;
}

GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b)
{
    if (a.m_ != b.m_)
        throw DomainError("group orders differ");
    GroupRingElement r = a;
    for (std::size_t j = 0; j < r.coeffs_.size(); ++j)
        r.coeffs_[j] -= b.coeffs_[j];
    return r;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b)
{
    if (a.m_ != b.m_)
        throw DomainError("group orders differ");
    const std::size_t m = a.coeffs_.size();
    GroupRingElement r = GroupRingElement::zero(a.m_);
    for (std::size_t i = 0; i < m; ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < m; ++j)
            r.coeffs_[(i + j) % m] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
}

GroupRingElement GroupRingElement::pow(unsigned long e) const
{
    GroupRingElement r = one(m_), b = *this;
    for (; e; e >>= 1) {
        if (e & 1)
            r = r * b;
        if (e > 1)
            b = b * b;
    }
    return r;
}

std::string GroupRingElement::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0)
            continue;
        Rational c = coeffs_[j];
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        if (!first || c < 0)
            c = abs(c);
        first = false;
        if (j == 0) {
            os << format_rational(c);
            continue;
        }
        if (c != 1)
            os << format_rational(c) << "*";
        os << "c";
        if (j > 1)
            os << "^" << j;
    }
    return first ? "0" : os.str();
}

std::vector<CycElement> wedderburn_apply(const GroupRingElement& x)
{
    std::vector<CycElement> c;
    for (const auto& q : x.coeffs())
        c.push_back(CycElement::from_rational(x.order(), q));
    return wedderburn_apply(x.order(), c);
}

std::vector<CycElement> wedderburn_apply(std::int64_t m, const std::vector<CycElement>& coeffs)
{
    if (m < 1 || coeffs.size() != static_cast<std::size_t>(m))
        throw DomainError("expected " + std::to_string(m) + " coefficients");
    std::vector<CycElement> y;
    for (std::int64_t j = 0; j < m; ++j) {
        CycElement acc = CycElement::zero(m);
        for (std::int64_t i = 0; i < m; ++i)
            if (!coeffs[static_cast<std::size_t>(i)].is_zero())
                acc += coeffs[static_cast<std::size_t>(i)] * CycElement::zeta_power(m, i * j);
        y.push_back(std::move(acc));
    }
    return y;
}

CycMatrix fourier_matrix(std::int64_t m, std::int64_t e)
{
    if (m < 1)
        throw DomainError("m must be positive");
    const auto n = static_cast<std::size_t>(m);
    CycMatrix v(n, n, CycElement::zero(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            v(i, j) = CycElement::zeta_power(m, mod_floor(e * static_cast<std::int64_t>(i * j), m));
    return v;
}

MembershipResult wedderburn_membership(std::int64_t m, const std::vector<CycElement>& y)
{
    const CycMatrix v = fourier_matrix(m);
    if (y.size() != v.rows())
        throw DomainError("expected a tuple of length " + std::to_string(m));
    MembershipResult r;
    r.witness = solve_left(v, y);
    r.member = std::all_of(r.witness.begin(), r.witness.end(), [](const CycElement& x) { return x.is_integral(); });
    return r;
}

GroupRingElement wedderburn_preimage(std::int64_t m, const std::vector<CycElement>& y)
{
    if (m < 1 || y.size() != static_cast<std::size_t>(m))
        throw DomainError("expected a tuple of length " + std::to_string(m));
    std::vector<Rational> x;
    for (std::int64_t i = 0; i < m; ++i) {
        CycElement acc = CycElement::zero(m);
        for (std::int64_t j = 0; j < m; ++j)
            acc += y[static_cast<std::size_t>(j)] * CycElement::zeta_power(m, -i * j);
        acc *= make_rational(1, m);
        for (std::size_t k = 1; k < acc.degree(); ++k)
            if (acc.numerators()[k] != 0)
                throw DomainError("tuple is not the image of an element of QC_m");
        x.push_back(acc.coeff(0));
    }
    return GroupRingElement(m, std::move(x));
}

CycMatrix q_pascal(std::size_t m, const CycElement& q)
{
    CycMatrix g(m, m, CycElement::zero(q.conductor()));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            g(i, j) = gauss_eval(gauss_binomial(static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)), q);
    return g;
}

CycMatrix q_pascal_inverse(std::size_t m, const CycElement& q)
{
    CycMatrix g(m, m, CycElement::zero(q.conductor()));
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k <= j; ++k) {
            const auto d = static_cast<unsigned long>(j - k);
            CycElement e = q.pow(d * (d - (d > 0)) / 2) *
                           gauss_eval(gauss_binomial(static_cast<std::int64_t>(j), static_cast<std::int64_t>(k)), q);
            g(j, k) = (j + k) % 2 ? -e : e;
        }
    return g;
}

std::vector<GaussPoly> q_pascal_poly(std::size_t m)
{
    std::vector<GaussPoly> g(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            g[i * m + j] = gauss_binomial(static_cast<std::int64_t>(i), static_cast<std::int64_t>(j));
    return g;
}

std::vector<GaussPoly> q_pascal_inverse_poly(std::size_t m)
{
    std::vector<GaussPoly> g(m * m);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k <= j; ++k) {
            const std::size_t d = j - k;
            GaussPoly e = gauss_binomial(static_cast<std::int64_t>(j), static_cast<std::int64_t>(k))
                              .shifted(d * (d - (d > 0)) / 2);
            g[j * m + k] = (j + k) % 2 ? -e : e;
        }
    return g;
}

bool q_pascal_inverse_identity(std::size_t m)
{
    const auto g = q_pascal_poly(m), h = q_pascal_inverse_poly(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < m; ++k) {
            GaussPoly s;
            for (std::size_t j = 0; j < m; ++j)
                s = s + g[i * m + j] * h[j * m + k];
            if (s != (i == k ? IntPoly({Integer(1)}) : IntPoly()))
                return false;
        }
    return true;
}

CycElement d_entry(std::size_t i, const CycElement& q)
{
    const std::int64_t m = q.conductor();
    const CycElement one = CycElement::one(m);
    CycElement r = one;
    for (std::size_t k = 1; k <= i; ++k)
        r *= gauss_eval(gauss_binomial(static_cast<std::int64_t>(k), 1), q);
    r *= (q - one).pow(i);
    return r * q.pow(i * (i - (i > 0)) / 2);
}

CycElement wedderburn_diagonal_entry(std::int64_t m, std::int64_t i)
{
    if (m < 1 || i < 0 || i >= m)
        throw DomainError("diagonal index outside [0, m-1]");
    CycElement den = CycElement::one(m);
    for (std::int64_t j = 1; j <= i; ++j)
        den *= CycElement::one(m) - CycElement::zeta_power(m, j);
    return CycElement::zeta_power(m, mod_floor(i * i, m)) * make_rational(m) * den.inverse();
}

Diagonalization wedderburn_diagonalize(std::int64_t m)
{
    if (m < 1)
        throw DomainError("m must be positive");
    const auto n = static_cast<std::size_t>(m);
    const CycElement qinv = CycElement::zeta_power(m, -1);
    const CycMatrix g = q_pascal(n, qinv);
    Diagonalization d{transpose(g), g, CycMatrix(n, n, CycElement::zero(m))};
    for (std::size_t i = 0; i < n; ++i)
        d.diagonal(i, i) = make_rational(m) * d_entry(i, qinv).inverse();

    if (matmul(matmul(d.left, fourier_matrix(m)), d.right) != d.diagonal)
        throw InternalError("q-Pascal diagonalization failed at m = " + std::to_string(m));
    for (std::size_t i = 0; i < n; ++i) {
        if (d.diagonal(i, i) != wedderburn_diagonal_entry(m, static_cast<std::int64_t>(i)))
            throw InternalError("diagonal entry " + std::to_string(i) + " differs from its closed form");
        if (!d.diagonal(i, i).is_integral())
            throw InternalError("diagonal entry " + std::to_string(i) + " is not integral");
    }
    if (d.diagonal(n - 1, n - 1) != CycElement::zeta_power(m, 1))
        throw InternalError("last diagonal entry is not zeta_m");
    return d;
}

bool fourier_inversion_holds(std::int64_t m)
{
    const CycMatrix prod = matmul(fourier_matrix(m, 1), fourier_matrix(m, -1));
    return prod == scale(identity_like(prod), make_rational(m));
}

CycElement fourier_det_squared(std::int64_t m)
{
    const CycElement d = determinant(fourier_matrix(m));
    return d * d;
}

Integer fourier_det_squared_expected(std::int64_t m)
{
    if (m < 1)
        throw DomainError("m must be positive");
    const std::int64_t e = m % 2 ? (m - 1) / 2 : (m - 2) / 2;
    const Integer mm = zpow(m, static_cast<unsigned long>(m));
    return e % 2 ? Integer(-mm) : mm;
}

TieSystem wedderburn_ties(std::int64_t m)
{
    if (m < 1)
        throw DomainError("m must be positive");
    const CycElement qinv = CycElement::zeta_power(m, -1);
    std::vector<std::string> names;
    for (std::int64_t j = m - 1; j >= 0; --j)
        names.push_back("y_" + std::to_string(j));
    std::vector<Congruence> cs;
    CycElement den = CycElement::one(m);
    std::vector<CycElement> dens;
    for (std::int64_t i = 0; i < m; ++i) {
        if (i > 0)
            den *= CycElement::one(m) - CycElement::zeta_power(m, i);
        dens.push_back(make_rational(m) * den.inverse());
    }
    for (std::int64_t i = m - 1; i >= 0; --i) {
        Congruence c{"y_" + std::to_string(i), Modulus::element(dens[static_cast<std::size_t>(i)]), {}};
        for (std::int64_t j = m - 1; j > i; --j) {
            const CycElement g = gauss_eval(gauss_binomial(j, i), qinv);
            if (!g.is_zero())
                c.form.push_back({"y_" + std::to_string(j), -g});
        }
        cs.push_back(std::move(c));
    }
    return TieSystem(std::move(names), std::move(cs));
}

CycMatrix wedderburn_image_basis(std::int64_t m)
{
    if (m < 1)
        throw DomainError("m must be positive");
    const auto n = static_cast<std::size_t>(m);
    const CycElement zeta = CycElement::zeta_power(m, 1);
    CycMatrix b(n, n, CycElement::zero(m));
    CycElement den = CycElement::one(m);
    for (std::int64_t j = 0; j < m; ++j) {
        if (j > 0)
            den *= CycElement::one(m) - CycElement::zeta_power(m, j);
        const CycElement d = make_rational(m) * den.inverse();
        for (std::int64_t k = 0; k <= j; ++k) {
            CycElement e = CycElement::zeta_power(m, k * (k - 1) / 2) * d * gauss_eval(gauss_binomial(j, k), zeta);
            b(static_cast<std::size_t>(j), static_cast<std::size_t>(k)) = k % 2 ? -e : e;
        }
    }
    return b;
}

CycMatrix wedderburn_vandermonde_basis(std::int64_t m)
{
    if (m < 1)
        throw DomainError("m must be positive");
    const auto n = static_cast<std::size_t>(m);
    CycMatrix b(n, n, CycElement::zero(m));
    for (std::size_t j = 0; j < n; ++j) {
        const CycElement x = CycElement::zeta_power(m, static_cast<std::int64_t>(j));
        CycElement acc = CycElement::one(m);
        for (std::size_t i = 0; i < n; ++i) {
            if (i > 0)
                acc *= x - CycElement::zeta_power(m, static_cast<std::int64_t>(i - 1));
            b(i, j) = acc;
        }
    }
    return b;
}

PointTuple<CycElement> wedderburn_tuple(std::int64_t p, int n)
{
    checked_prime_power(p, n);
    return cyclotomic_tuple(p, n, false);
}

CycMatrix wedderburn_matrix(std::int64_t p, int n)
{
    return build_V(wedderburn_tuple(p, n));
}

Valuation wedderburn_eldiv_closed_form(std::int64_t p, int n, std::int64_t j)
{
    const std::int64_t pn = checked_prime_power(p, n);
    if (j < 0 || j >= pn)
        throw DomainError("index outside [0, p^n - 1]");
    const auto a = digits_base(j, p);
    auto digit = [&](std::size_t s) -> std::int64_t { return s < a.size() ? a[s] : 0; };
    std::int64_t v = 0, ps = 1;
    for (std::size_t k = 0; k < a.size(); ++k, ps *= p)
        v += (digit(k) - digit(k + 1)) * static_cast<std::int64_t>(k + 1) * ps;
    return Valuation(static_cast<long>(v));
}

std::vector<Valuation> wedderburn_eldiv_closed_forms(std::int64_t p, int n)
{
    const std::int64_t pn = checked_prime_power(p, n);
    std::vector<Valuation> r;
    for (std::int64_t j = 0; j < pn; ++j)
        r.push_back(wedderburn_eldiv_closed_form(p, n, j));
    return r;
}

Valuation wedderburn_eldiv_digit_oracle(std::int64_t p, int n, std::int64_t j)
{
    const std::int64_t pn = checked_prime_power(p, n);
    if (j < 0 || j >= pn)
        throw DomainError("index outside [0, p^n - 1]");
    long v = 0;
    for (std::int64_t i = 1; i <= j; ++i)
        v += static_cast<long>(p_part(i, p));
    return Valuation(v);
}

Integer wedderburn_det_valuation(std::int64_t p, int n)
{
    checked_prime_power(p, n);
    return Integer(n) * zpow(p, static_cast<unsigned long>(2 * n - 1)) * (p - 1) / 2;
}

std::vector<CycElement> XiBasisVector::evaluate() const
{
    std::vector<CycElement> y(coords.size(), CycElement::zero(m));
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i].is_zero())
            continue;
        const auto xi = xi_vector(m, static_cast<std::int64_t>(i));
        for (std::size_t j = 0; j < y.size(); ++j)
            y[j] += coords[i] * xi[j];
    }
    return y;
}

std::vector<CycElement> xi_vector(std::int64_t m, std::int64_t i)
{
    if (m < 1 || i < 0 || i >= m)
        throw DomainError("xi index outside [0, m-1]");
    const CycElement ti = uniformizer(m).pow(static_cast<unsigned long>(i));
    std::vector<CycElement> r;
    for (std::int64_t j = 0; j < m; ++j) {
        const Integer c = binomial(j, i);
        r.push_back(ti * make_rational(i % 2 ? Integer(-c) : c));
    }
    return r;
}

CycMatrix w1_basis(std::int64_t m)
{
    if (m < 1)
        throw DomainError("m must be positive");
    const auto n = static_cast<std::size_t>(m);
    CycMatrix a(n, n, CycElement::zero(m));
    for (std::size_t i = 0; i < n; ++i) {
        const auto xi = xi_vector(m, static_cast<std::int64_t>(i));
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = xi[j];
    }
    return a;
}

XiBasisVector w1_coordinates(std::int64_t m, const std::vector<CycElement>& y)
{
    if (m < 1 || y.size() != static_cast<std::size_t>(m))
        throw DomainError("expected a tuple of length " + std::to_string(m));
    XiBasisVector z{m, {}};
    const CycElement tinv = m > 1 ? uniformizer(m).inverse() : CycElement::one(m);
    CycElement scale_j = CycElement::one(m);
    for (std::int64_t j = 0; j < m; ++j) {
        if (j > 0)
            scale_j *= tinv;
        CycElement acc = CycElement::zero(m);
        for (std::int64_t i = 0; i <= j; ++i) {
            const Integer c = binomial(j, i);
            acc += y[static_cast<std::size_t>(i)] * make_rational(i % 2 ? Integer(-c) : c);
        }
        z.coords.push_back(acc * scale_j);
    }
    return z;
}

bool w1_membership(std::int64_t m, const std::vector<CycElement>& y)
{
    const auto z = w1_coordinates(m, y);
    return std::all_of(z.coords.begin(), z.coords.end(), [](const CycElement& x) { return x.is_integral(); });
}

XiBasisVector xi_product(std::int64_t m, std::int64_t j, std::int64_t i)
{
    if (m < 1 || i < 0 || i >= m || j < 0)
        throw DomainError("xi index outside [0, m-1]");
    if (j > i)
        throw DomainError("xi_product expects j <= i");
    XiBasisVector r{m, std::vector<CycElement>(static_cast<std::size_t>(m), CycElement::zero(m))};
    const CycElement t = uniformizer(m);
    for (std::int64_t k = 0; k <= j && i + k < m; ++k) {
        const Integer c = binomial(j, k) * binomial(i + k, j);
        CycElement e = t.pow(static_cast<unsigned long>(j - k)) * make_rational((j - k) % 2 ? Integer(-c) : c);
        r.coords[static_cast<std::size_t>(i + k)] += e;
    }
    return r;
}

XiBasisVector xi_coords_of_generator_power(std::int64_t m, std::int64_t i)
{
    if (m < 1)
        throw DomainError("m must be positive");
    XiBasisVector r{m, std::vector<CycElement>(static_cast<std::size_t>(m), CycElement::zero(m))};
    r.coords[0] = CycElement::one(m);
    if (mod_floor(i, m) == 0)
        return r;
    const CycElement u = (CycElement::one(m) - CycElement::zeta_power(m, i)) * uniformizer(m).inverse();
    for (std::size_t k = 1; k < r.coords.size(); ++k)
        r.coords[k] = r.coords[k - 1] * u;
    return r;
}

bool w1_coefficient_criterion(std::int64_t p, const std::vector<CycElement>& y)
{
    if (!is_prime(p))
        throw DomainError("coefficient criterion needs a prime");
    if (y.size() != static_cast<std::size_t>(p))
        throw DomainError("expected a tuple of length " + std::to_string(p));
    for (const auto& e : y)
        if (e.conductor() != p || !e.is_integral())
            throw DomainError("coefficient criterion needs integral entries of Z[zeta_p]");
    for (std::int64_t u = 1; u < p; ++u)
        for (std::int64_t v = 0; v < u; ++v) {
            Integer s = 0;
            for (std::int64_t i = 0; i < p; ++i) {
                const Integer cu = binomial(u, i);
                if (cu == 0)
                    continue;
                for (std::int64_t j = 0; j <= p - 2; ++j) {
                    const Integer term = cu * binomial(j, v) * y[static_cast<std::size_t>(i)].numerators()[static_cast<std::size_t>(j)];
                    if (i % 2)
                        s -= term;
                    else
                        s += term;
                }
            }
            if (s % p != 0)
                return false;
        }
    return true;
}

CycElement w2_gamma(std::int64_t p, int n)
{
    const std::int64_t pn = checked_prime_power(p, n);
    const CycElement t = uniformizer(pn);
    CycElement g = CycElement::zero(pn), tk = CycElement::one(pn);
    for (std::int64_t k = 1; k < p; ++k) {
        g += tk * make_rational(1, k);
        tk *= t;
    }
    return g;
}

std::vector<CycElement> w2_polynomial(std::int64_t p, int n)
{
    const std::int64_t pn = checked_prime_power(p, n);
    const CycElement t = uniformizer(pn);
    std::vector<CycElement> f(static_cast<std::size_t>(p + 1), CycElement::zero(pn));
    CycElement tk = CycElement::one(pn);
    for (std::int64_t k = 1; k < p; ++k) {
        f[static_cast<std::size_t>(k)] = -(tk * make_rational(1, k));
        tk *= t;
    }
    f[static_cast<std::size_t>(p)] = w2_gamma(p, n);
    return f;
}

namespace {

std::vector<CycElement> poly_mul(const std::vector<CycElement>& a, const std::vector<CycElement>& b)
{
    std::vector<CycElement> r(a.size() + b.size() - 1, CycElement::zero(a[0].conductor()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero())
                r[i + j] += a[i] * b[j];
    }
    return r;
}

CycMatrix build_w2_condition_matrix(std::int64_t p, int n)
{
    const std::int64_t pn = checked_prime_power(p, n);
    const auto m = static_cast<std::size_t>(pn);
    const auto up = static_cast<std::size_t>(p);
    const std::vector<CycElement> f = w2_polynomial(p, n);
    CycMatrix c(m, m, CycElement::zero(pn));
    std::vector<CycElement> fj{CycElement::one(pn)};
    for (std::size_t j = 0; j < m / up; ++j) {
        if (j > 0)
            fj = poly_mul(fj, f);
        for (std::size_t i = 0; i < up; ++i)
            for (std::size_t k = 0; k < fj.size(); ++k)
                c(i + k, i + j * up) = fj[k];
    }
    return c;
}

const CycMatrix& cached_condition_matrix(std::int64_t p, int n)
{
    static std::mutex mu;
    static std::map<std::pair<std::int64_t, int>, CycMatrix> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({p, n});
    if (it == cache.end())
        it = cache.emplace(std::make_pair(p, n), build_w2_condition_matrix(p, n)).first;
    return it->second;
}

} // namespace

CycMatrix w2_condition_matrix(std::int64_t p, int n)
{
    return cached_condition_matrix(p, n);
}

std::vector<long> w2_condition_exponents(std::int64_t p, int n)
{
    const std::int64_t pn = checked_prime_power(p, n);
    std::vector<long> e;
    for (std::int64_t c = 0; c < pn; ++c)
        e.push_back(static_cast<long>((c / p) * (p - 1)));
    return e;
}

bool w2_membership(std::int64_t p, int n, const XiBasisVector& z)
{
    const std::int64_t pn = checked_prime_power(p, n);
    if (z.m != pn || z.coords.size() != static_cast<std::size_t>(pn))
        throw DomainError("expected xi coordinates of length " + std::to_string(pn));
    for (const auto& x : z.coords)
        if (!x.is_p_integral(p))
            return false;
    const CycMatrix& c = cached_condition_matrix(p, n);
    const auto e = w2_condition_exponents(p, n);
    for (std::size_t col = 0; col < c.cols(); ++col) {
        if (e[col] == 0)
            continue;
        CycElement s = CycElement::zero(pn);
        for (std::size_t k = 0; k < c.rows(); ++k)
            if (!c(k, col).is_zero() && !z.coords[k].is_zero())
                s += c(k, col) * z.coords[k];
        const Valuation v = t_valuation(s, p, n);
        if (!v.is_infinite() && v.value() < e[col])
            return false;
    }
    return true;
}

bool w2_membership(std::int64_t p, int n, const std::vector<CycElement>& y)
{
    return w2_membership(p, n, w1_coordinates(checked_prime_power(p, n), y));
}

CycMatrix w2_basis(std::int64_t p, int n)
{
    const std::int64_t pn = checked_prime_power(p, n);
    CycMatrix b = inverse(cached_condition_matrix(p, n));
    const auto e = w2_condition_exponents(p, n);
    const CycElement t = uniformizer(pn);
    for (std::size_t r = 0; r < b.rows(); ++r) {
        const CycElement s = t.pow(static_cast<unsigned long>(e[r]));
        for (std::size_t c = 0; c < b.cols(); ++c)
            b(r, c) *= s;
    }
    return matmul(b, w1_basis(pn));
}

SubringReport w2_subring_experiment(std::int64_t p, int n)
{
    const CycMatrix b = w2_basis(p, n);
    SubringReport rep;
    for (std::size_t a = 0; a < b.rows(); ++a)
        for (std::size_t c = a; c < b.rows(); ++c) {
            std::vector<CycElement> y;
            for (std::size_t j = 0; j < b.cols(); ++j)
                y.push_back(b(a, j) * b(c, j));
            ++rep.products;
            if (w2_membership(p, n, y))
                ++rep.closed;
            else
                rep.failures.emplace_back(a, c);
        }
    return rep;
}

long w1_radical_layer_dim(std::int64_t p, int n, long i)
{
    checked_prime_power(p, n);
    if (i < 0)
        throw DomainError("layer index must be nonnegative");
    const auto g = generalized_binomials(n, static_cast<int>(p - 1));
    Integer s = 0;
    for (std::size_t j = 0; j < g.size() && static_cast<long>(j) <= i; ++j)
        s += g[j];
    return s.get_si();
}

std::vector<long> w1_radical_exponents(std::int64_t p, int n, long i)
{
    const std::int64_t pn = checked_prime_power(p, n);
    if (i < 0)
        throw DomainError("radical power must be nonnegative");
    std::vector<long> e;
    for (std::int64_t j = 0; j < pn; ++j)
        e.push_back(std::max(i - static_cast<long>(digit_sum(j, p)), 0L));
    return e;
}

CycMatrix w1_radical_power_basis(std::int64_t p, int n, long i)
{
    const std::int64_t pn = checked_prime_power(p, n);
    const auto e = w1_radical_exponents(p, n, i);
    CycMatrix a = w1_basis(pn);
    const CycElement t = uniformizer(pn);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        const CycElement s = t.pow(static_cast<unsigned long>(e[r]));
        for (std::size_t c = 0; c < a.cols(); ++c)
            a(r, c) *= s;
    }
    return a;
}

} // namespace cyclowed
