#include "cyclowed/poly.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace cyclowed {

IntPoly::IntPoly(std::vector<Integer> c) : coeffs(std::move(c))
{
    trim();
}

IntPoly IntPoly::monomial(Integer c, std::size_t degree)
{
    IntPoly r;
    if (c != 0) {
        r.coeffs.assign(degree + 1, Integer(0));
        r.coeffs[degree] = std::move(c);
    }
    return r;
}

void IntPoly::trim()
{
    while (!coeffs.empty() && coeffs.back() == 0)
        coeffs.pop_back();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b)
{
    std::vector<Integer> c(std::max(a.coeffs.size(), b.coeffs.size()));
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = a.coeff(k) + b.coeff(k);
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a)
{
    IntPoly r = a;
    for (auto& c : r.coeffs)
        c = -c;
    return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b)
{
    return a + (-b);
}

IntPoly operator*(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Integer> c(a.coeffs.size() + b.coeffs.size() - 1);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            c[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return IntPoly(std::move(c));
}

IntPoly IntPoly::scaled(const Integer& c) const
{
    std::vector<Integer> r(coeffs.size());
    for (std::size_t k = 0; k < r.size(); ++k)
        r[k] = coeffs[k] * c;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::shifted(std::size_t k) const
{
    if (is_zero())
        return {};
    std::vector<Integer> r(k, Integer(0));
    r.insert(r.end(), coeffs.begin(), coeffs.end());
    return IntPoly(std::move(r));
}

std::string IntPoly::to_string(const std::string& var) const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Integer& c = coeffs[k];
        if (c == 0)
            continue;
        Integer mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (k == 0 || mag != 1)
            os << mag;
        if (k > 0)
            os << var;
        if (k > 1)
            os << "^" << k;
    }
    return os.str();
}

IntPoly exact_div_monic(const IntPoly& a, const IntPoly& monic)
{
    if (monic.is_zero() || monic.coeffs.back() != 1)
        throw DomainError("divisor must be monic");
    std::vector<Integer> rem = a.coeffs;
    const int dm = monic.degree();
    if (a.degree() < dm) {
        if (!a.is_zero())
            throw DomainError("inexact polynomial division");
        return {};
    }
    std::vector<Integer> q(a.degree() - dm + 1);
    for (int k = a.degree(); k >= dm; --k) {
        const Integer c = rem[k];
        q[k - dm] = c;
        if (c == 0)
            continue;
        for (int i = 0; i <= dm; ++i)
            rem[k - dm + i] -= c * monic.coeffs[i];
    }
    for (int k = 0; k < dm; ++k)
        if (rem[k] != 0)
            throw DomainError("inexact polynomial division");
    return IntPoly(std::move(q));
}

const IntPoly& cyclotomic_polynomial(std::int64_t m)
{
    if (m < 1)
        throw DomainError("cyclotomic polynomial needs m >= 1");
    static std::mutex mu;
    static std::map<std::int64_t, IntPoly> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(m); it != cache.end())
            return it->second;
    }
    IntPoly r = IntPoly::monomial(1, static_cast<std::size_t>(m)) - IntPoly::monomial(1, 0);
    for (auto d : divisors(m))
        if (d < m)
            r = exact_div_monic(r, cyclotomic_polynomial(d));
    std::lock_guard lock(mu);
    return cache.emplace(m, std::move(r)).first->second;
}

GaussPoly gauss_binomial(std::int64_t i, std::int64_t j)
{
    if (i < 0 || j < 0 || j > i)
        return {};
    // Row-by-row q-Pascal triangle.
    std::vector<GaussPoly> row{IntPoly::monomial(1, 0)};
    for (std::int64_t r = 1; r <= i; ++r) {
        std::vector<GaussPoly> next(static_cast<std::size_t>(r + 1));
        for (std::int64_t c = 0; c <= r; ++c) {
            GaussPoly left = c >= 1 ? row[c - 1] : GaussPoly{};
            GaussPoly up = c <= r - 1 ? row[c].shifted(static_cast<std::size_t>(c)) : GaussPoly{};
            next[c] = left + up;
        }
        row = std::move(next);
    }
    return row[j];
}

std::vector<Integer> generalized_binomials(int a, int k)
{
    std::vector<Integer> cur{1};
    for (int step = 0; step < a; ++step) {
        std::vector<Integer> next(cur.size() + k, Integer(0));
        for (std::size_t b = 0; b < cur.size(); ++b)
            for (int e = 0; e <= k; ++e)
                next[b + e] += cur[b];
        cur = std::move(next);
    }
    return cur;
}

} // namespace cyclowed
