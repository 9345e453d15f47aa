#include "cyclowed/arith.hpp"

#include <algorithm>
#include <tuple>
#include <utility>

namespace cyclowed {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw DomainError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    auto strip = [](std::string& x) {
        x.erase(0, x.find_first_not_of(" \t"));
        x.erase(x.find_last_not_of(" \t") + 1);
    };
    strip(s);
    if (s.empty())
        throw DomainError("empty rational literal");
    const auto slash = s.find('/');
    Integer num, den = 1;
    try {
        if (slash == std::string::npos) {
            num = Integer(s, 10);
        } else {
            std::string a = s.substr(0, slash), b = s.substr(slash + 1);
            strip(a);
            strip(b);
            num = Integer(a, 10);
            den = Integer(b, 10);
        }
    } catch (const std::invalid_argument&) {
        throw DomainError("malformed rational literal '" + s + "'");
    }
    return make_rational(num, den);
}

std::string format_rational(const Rational& q)
{
    return q.get_str(10);
}

bool is_prime(std::int64_t n)
{
    if (n < 2)
        return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n)
{
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

std::vector<std::int64_t> divisors(std::int64_t n)
{
    std::vector<std::int64_t> out;
    for (std::int64_t d = 1; d <= n; ++d)
        if (n % d == 0)
            out.push_back(d);
    return out;
}

std::int64_t euler_phi(std::int64_t n)
{
    std::int64_t r = n;
    for (auto p : prime_divisors(n))
        r = r / p * (p - 1);
    return r;
}

std::int64_t ipow(std::int64_t base, unsigned exp)
{
    std::int64_t r = 1;
    while (exp--)
        r *= base;
    return r;
}

Integer zpow(std::int64_t base, unsigned long exp)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base), exp);
    if (base < 0 && (exp & 1))
        r = -r;
    return r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b)
{
    if (a < 0)
        a = -a;
    if (b < 0)
        b = -b;
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

std::int64_t mod_floor(std::int64_t j, std::int64_t k)
{
    std::int64_t r = j % k;
    return r < 0 ? r + k : r;
}

int valuation_p(std::int64_t k, std::int64_t p)
{
    if (k == 0)
        throw DomainError("valuation of zero");
    int v = 0;
    while (k % p == 0) {
        k /= p;
        ++v;
    }
    return v;
}

int valuation_p(const Integer& k, std::int64_t p)
{
    if (k == 0)
        throw DomainError("valuation of zero");
    Integer pz = static_cast<long>(p);
    Integer rest;
    return static_cast<int>(mpz_remove(rest.get_mpz_t(), k.get_mpz_t(), pz.get_mpz_t()));
}

std::int64_t p_part(std::int64_t k, std::int64_t p)
{
    if (k == 0)
        throw DomainError("p-part of zero");
    return ipow(p, static_cast<unsigned>(valuation_p(k, p)));
}

std::vector<int> digits_base(std::int64_t j, std::int64_t p)
{
    std::vector<int> d;
    while (j > 0) {
        d.push_back(static_cast<int>(j % p));
        j /= p;
    }
    return d;
}

int digit_sum(std::int64_t j, std::int64_t p)
{
    int s = 0;
    for (int d : digits_base(j, p))
        s += d;
    return s;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t k)
{
    if (k == 1)
        return 0;
    std::int64_t r0 = mod_floor(a, k), r1 = k, s0 = 1, s1 = 0;
    while (r1) {
        std::int64_t q = r0 / r1;
        std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
        std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
    }
    if (r0 != 1)
        throw DomainError("no inverse modulo " + std::to_string(k));
    return mod_floor(s0, k);
}

bool prime_power(std::int64_t n, std::int64_t& p, int& e)
{
    const auto ps = prime_divisors(n);
    if (ps.size() != 1)
        return false;
    p = ps.front();
    e = valuation_p(n, p);
    return true;
}

Integer binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

} // namespace cyclowed
