#include <doctest.h>

#include "cyclowed/cyclotomic.hpp"
#include "cyclowed/random.hpp"

using namespace cyclowed;

namespace {

IntPoly poly(std::vector<long> c)
{
    std::vector<Integer> v(c.begin(), c.end());
    return IntPoly(v);
}

CycElement z(std::int64_t m, std::int64_t e = 1)
{
    return CycElement::zeta_power(m, e);
}

CycElement q(std::int64_t m, long a, long b = 1)
{
    return CycElement::from_rational(m, make_rational(a, b));
}

} // namespace

TEST_CASE("cyclotomic polynomials")
{
    CHECK(cyclotomic_polynomial(1) == poly({-1, 1}));
    CHECK(cyclotomic_polynomial(4) == poly({1, 0, 1}));
    CHECK(cyclotomic_polynomial(9) == poly({1, 0, 0, 1, 0, 0, 1}));
    CHECK(cyclotomic_polynomial(12) == poly({1, 0, -1, 0, 1}));
    for (std::int64_t m = 1; m <= 40; ++m) {
        const auto& f = cyclotomic_polynomial(m);
        CHECK(f.degree() == euler_phi(m));
        CHECK(f.coeffs.back() == 1);
    }
}

TEST_CASE("ring operations on roots of unity")
{
    CHECK(z(4) * z(4) == q(4, -1));
    CHECK(z(3) * z(3, 2) == q(3, 1));
    CHECK(z(3) + z(3, 2) == q(3, -1));
    CHECK(z(7, 7) == q(7, 1));
    CHECK(z(7, -1) == z(7, 6));
    CHECK_THROWS_AS(z(3) + z(4), DomainError);
}

TEST_CASE("inverse")
{
    for (std::int64_t m : {1, 2, 5, 9, 12, 16}) {
        CHECK(invert(z(m)) == z(m, m - 1));
        CHECK(invert(q(m, 2)) == q(m, 1, 2));
    }
    const CycElement t = uniformizer(5);
    CHECK(t * invert(t) == q(5, 1));
    CHECK_THROWS_AS(invert(q(5, 0)), DomainError);

    Sampler s(7);
    for (std::int64_t m : {7, 15, 24}) {
        for (int k = 0; k < 10; ++k) {
            const CycElement a = s.cyc_rational(m, 9, 4);
            if (!a.is_zero())
                CHECK(a * invert(a) == q(m, 1));
        }
    }
}

TEST_CASE("galois action")
{
    CHECK(galois_apply(z(9), 1) == z(9));
    CHECK(galois_apply(q(9, 1) - z(9), 4) == q(9, 1) - z(9, 4));
    CHECK_THROWS_AS(galois_apply(z(9), 3), DomainError);
    Sampler s(11);
    for (int k = 0; k < 20; ++k) {
        const CycElement x = s.cyc_rational(15, 7, 3);
        CHECK(galois_apply(galois_apply(x, 2), 2) == galois_apply(x, 4));
    }
}

TEST_CASE("ring axioms")
{
    Sampler s(3);
    for (std::int64_t m = 1; m <= 24; ++m) {
        const CycElement a = s.cyc_rational(m, 5, 3), b = s.cyc_rational(m, 5, 3),
                         c = s.cyc_rational(m, 5, 3);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a - a == CycElement::zero(m));
    }
}

TEST_CASE("t-valuation")
{
    CHECK(t_valuation(z(9, 3) - z(9), 3, 2) == Valuation(1));
    CHECK(t_valuation(q(3, 3), 3, 1) == Valuation(2));
    CHECK(t_valuation(q(9, 0), 3, 2) == Valuation::infinity());
    CHECK(t_valuation(q(9, 1, 3), 3, 2) == Valuation(-6));
    CHECK(t_valuation(q(9, 2), 3, 2) == Valuation(0));
    CHECK_THROWS_AS(t_valuation(z(12), 2, 2), DomainError);

    for (std::int64_t pn : {8, 9, 27}) {
        std::int64_t p;
        int n;
        prime_power(pn, p, n);
        for (std::int64_t i = 1; i < pn; ++i)
            for (std::int64_t j = 0; j < i; ++j)
                CHECK(t_valuation(z(pn, i) - z(pn, j), p, n) == Valuation(p_part(i - j, p)));
    }
}

TEST_CASE("t-valuation is an ultrametric valuation")
{
    Sampler s(5);
    for (std::int64_t pn : {9, 8, 25}) {
        std::int64_t p;
        int n;
        prime_power(pn, p, n);
        for (int k = 0; k < 30; ++k) {
            CycElement a = s.cyc_rational(pn, 6, 6), b = s.cyc_rational(pn, 6, 6);
            if (k % 3 == 0)
                a *= uniformizer(pn).pow(static_cast<unsigned long>(k % 7));
            const Valuation va = t_valuation(a, p, n), vb = t_valuation(b, p, n);
            CHECK(t_valuation(a * b, p, n) == va + vb);
            const Valuation vs = t_valuation(a + b, p, n);
            CHECK(vs >= std::min(va, vb));
            if (va != vb)
                CHECK(vs == std::min(va, vb));
        }
        CHECK(t_valuation(CycElement::zero(pn) * s.cyc_rational(pn, 3, 3), p, n).is_infinite());
    }
}

TEST_CASE("t-basis expansion round trip")
{
    Sampler s(9);
    const CycElement a = s.cyc_rational(9, 5, 4);
    const auto b = to_t_basis(a);
    CycElement back = CycElement::zero(9);
    for (std::size_t i = 0; i < b.size(); ++i)
        back += uniformizer(9).pow(i) * b[i];
    CHECK(back == a);
}

TEST_CASE("p-part")
{
    CHECK(p_part(12, 2) == 4);
    CHECK(p_part(12, 3) == 3);
    CHECK(p_part(5, 3) == 1);
    CHECK_THROWS_AS(p_part(0, 3), DomainError);
}

TEST_CASE("Gaussian binomials")
{
    CHECK(gauss_binomial(2, 1) == poly({1, 1}));
    CHECK(gauss_binomial(4, 2) == poly({1, 1, 2, 1, 1}));
    CHECK(gauss_binomial(3, 5).is_zero());
    CHECK(gauss_binomial(3, -1).is_zero());

    for (int i = 1; i <= 8; ++i)
        for (int j = 0; j <= i; ++j) {
            const IntPoly g = gauss_binomial(i, j);
            CHECK(g.degree() == j * (i - j));
            for (const auto& c : g.coeffs)
                CHECK(c >= 0);
            // [i,j] = [i-1,j-1] + q^j [i-1,j] and [i,j] = q^{i-j}[i-1,j-1] + [i-1,j].
            CHECK(g == gauss_binomial(i - 1, j - 1) + gauss_binomial(i - 1, j).shifted(j));
            CHECK(g == gauss_binomial(i - 1, j - 1).shifted(i - j) + gauss_binomial(i - 1, j));
        }

    // (t;q)_i = sum_k (-1)^k q^{C(k,2)} [i,k] t^k, compared coefficientwise in t.
    for (int i = 0; i <= 8; ++i) {
        std::vector<IntPoly> lhs{poly({1})};
        for (int l = 0; l < i; ++l) {
            std::vector<IntPoly> next(lhs.size() + 1);
            for (std::size_t k = 0; k < lhs.size(); ++k) {
                next[k] = next[k] + lhs[k];
                next[k + 1] = next[k + 1] - lhs[k].shifted(l);
            }
            lhs = next;
        }
        for (int k = 0; k <= i; ++k) {
            IntPoly rhs = gauss_binomial(i, k).shifted(k * (k - 1) / 2);
            if (k % 2)
                rhs = -rhs;
            CHECK(lhs[k] == rhs);
        }
    }
}

TEST_CASE("Gaussian binomial evaluation")
{
    CHECK(gauss_eval(gauss_binomial(2, 1), z(3)) == q(3, 1) + z(3));
    for (int i = 0; i <= 6; ++i)
        for (int j = 0; j <= i; ++j) {
            CHECK(gauss_eval(gauss_binomial(i, j), q(1, 1)) == CycElement::from_rational(1, Rational(binomial(i, j))));
            for (std::int64_t m : {5, 7, 12}) {
                const CycElement lhs = gauss_eval(gauss_binomial(i, j), z(m, -1));
                const CycElement rhs = z(m, -j * (i - j)) * gauss_eval(gauss_binomial(i, j), z(m));
                CHECK(lhs == rhs);
            }
        }
}

TEST_CASE("element accessors")
{
    const CycElement a = CycElement::from_coeffs(5, {make_rational(1, 2), make_rational(-2, 3), 0, 0, 1});
    CHECK(a.degree() == 4);
    CHECK(a.coeff(0) == make_rational(-1, 2));
    CHECK(a.coeff(1) == make_rational(-5, 3));
    CHECK(a.coeff(2) == -1);
    CHECK(a.coeff(3) == -1);
    CHECK(a.coeff(4) == 0);
    CHECK(!a.is_integral());
    CHECK(a.is_p_integral(5));
    CHECK(!a.is_p_integral(3));
    CHECK(a.to_string() == "-1/2 - 5/3*z - z^2 - z^3");
    CHECK(q(5, 0).to_string() == "0");
    CHECK(z(5).to_string() == "z");
}
