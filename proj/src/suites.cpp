#include "cyclowed/suites.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "cyclowed/absolute.hpp"
#include "cyclowed/random.hpp"

namespace cyclowed {

bool SuiteReport::ok() const
{
    return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.ok(); });
}

namespace {

void tally(SuiteCheck& c, bool passed)
{
    ++c.total;
    c.passed += passed;
}

/// Runs f and counts an exception as a failure.
bool guarded(const std::function<bool()>& f)
{
    try {
        return f();
    } catch (const std::exception&) {
        return false;
    }
}

PointTuple<Rational> random_points(Sampler& s, std::size_t m)
{
    std::vector<Rational> v;
    while (v.size() < m) {
        const Rational q = s.rational(20, 6);
        if (std::find(v.begin(), v.end(), q) == v.end())
            v.push_back(q);
    }
    return PointTuple<Rational>(v);
}

constexpr std::array<std::int64_t, 9> prime_powers = {2, 3, 4, 5, 8, 9, 16, 25, 27};

} // namespace

SuiteReport vandermonde_suite(std::size_t trials, std::uint64_t seed)
{
    Sampler s(seed);
    SuiteReport r{"vandermonde", {}};
    for (std::size_t m = 1; m <= 7; ++m) {
        SuiteCheck c{"random rational tuples, m = " + std::to_string(m)};
        for (std::size_t t = 0; t < trials; ++t)
            tally(c, guarded([&] { return verify_identities(random_points(s, m)).all_hold(); }));
        r.checks.push_back(c);
    }
    SuiteCheck ded{"Dedekind tuples"}, wed{"Wedderburn tuples"};
    for (auto pn : prime_powers) {
        std::int64_t p;
        int n;
        prime_power(pn, p, n);
        tally(ded, guarded([&] { return verify_identities(dedekind_tuple(p, n)).all_hold(); }));
        tally(wed, guarded([&] { return verify_identities(wedderburn_tuple(p, n)).all_hold(); }));
    }
    r.checks.push_back(ded);
    r.checks.push_back(wed);
    return r;
}

SuiteReport qpascal_suite(std::size_t trials, std::uint64_t seed)
{
    Sampler s(seed);
    SuiteReport r{"qpascal", {}};
    SuiteCheck poly{"G_q G_q^-1 = I as polynomials, m <= 8"};
    for (std::size_t m = 1; m <= 8; ++m)
        tally(poly, guarded([&] { return q_pascal_inverse_identity(m); }));
    r.checks.push_back(poly);

    SuiteCheck at_q{"G_q G_q^-1 = I at random rational q"};
    for (std::size_t t = 0; t < trials; ++t)
        tally(at_q, guarded([&] {
                  const auto m = static_cast<std::size_t>(s.uniform(1, 8));
                  const CycElement q = CycElement::from_rational(1, s.rational(7, 5));
                  const CycMatrix g = q_pascal(m, q);
                  return matmul(g, q_pascal_inverse(m, q)) == identity_like(g);
              }));
    r.checks.push_back(at_q);

    SuiteCheck diag{"diagonalization, m in [1, 16]"}, inv{"Fourier inversion, m in [1, 16]"};
    for (std::int64_t m = 1; m <= 16; ++m) {
        tally(diag, guarded([&] {
                  const Diagonalization d = wedderburn_diagonalize(m);
                  return d.diagonal(static_cast<std::size_t>(m - 1), static_cast<std::size_t>(m - 1)) ==
                         CycElement::zeta_power(m, 1);
              }));
        tally(inv, guarded([&] { return fourier_inversion_holds(m); }));
    }
    r.checks.push_back(diag);
    r.checks.push_back(inv);

    SuiteCheck det{"det(V)^2 = +-m^m with the stated sign, m in [1, 12]"};
    for (std::int64_t m = 1; m <= 12; ++m)
        tally(det, guarded([&] {
                  return fourier_det_squared(m) == CycElement::from_rational(m, Rational(fourier_det_squared_expected(m)));
              }));
    r.checks.push_back(det);
    return r;
}

SuiteReport toperator_suite(std::size_t trials, std::uint64_t seed)
{
    Sampler s(seed);
    SuiteReport r{"toperators", {}};
    SuiteCheck comp{"T^{a,s}_b T^{c,t}_d = p^{d-b-s} T^{a,d-b+t}_b"}, comp0{"T^{a,s}_b T^{0,0}_d = T^{a,s}_b"},
        tele{"telescoping identity"}, eval{"x * zeta_{p^l} = ((T^{0,0}_l - T^{1,0}_l) x) * zeta_{p^l}"},
        supp{"(T^{0,s}_l - T^{1,s}_l) x supported in [0, phi(p^l) - 1]"};
    auto exponent = [&s] { return static_cast<int>(s.uniform(0, 4)); };
    for (std::int64_t p : {2, 3})
        for (std::size_t t = 0; t < trials; ++t) {
            FinSuppSeq x;
            for (int k = 0; k < 12; ++k)
                x.add(s.uniform(-40, 120), s.integer(9));

            int a, b, c, d, sv, tv;
            do {
                a = exponent(), b = exponent(), c = exponent(), d = exponent(), sv = exponent(), tv = exponent();
            } while (!(b - a <= d - c && d - c <= b + sv && b + sv <= d));
            tally(comp, t_operator(a, sv, b, p, t_operator(c, tv, d, p, x)) ==
                            zpow(p, static_cast<unsigned long>(d - b - sv)) * t_operator(a, d - b + tv, b, p, x));

            do {
                a = exponent(), b = exponent(), d = exponent(), sv = exponent();
            } while (b + sv > d);
            tally(comp0, t_operator(a, sv, b, p, t_operator(0, 0, d, p, x)) == t_operator(a, sv, b, p, x));

            const int m = static_cast<int>(s.uniform(1, 4));
            const int l = static_cast<int>(s.uniform(1, m));
            a = exponent();
            FinSuppSeq sum;
            for (int i = 0; i < l; ++i)
                sum += zpow(p, static_cast<unsigned long>(l - 1 - i)) *
                       t_operator(a, l - 1 - i, m - l, p, t_operator(0, 0, m - i, p, x) - t_operator(1, 0, m - i, p, x));
            tally(tele, sum == t_operator(a, 0, m - l, p, x) - zpow(p, static_cast<unsigned long>(l)) * t_operator(a, l, m - l, p, x));

            const int lv = exponent();
            const std::int64_t pl = ipow(p, static_cast<unsigned>(lv));
            tally(eval, x.evaluate(pl) == (t_operator(0, 0, lv, p, x) - t_operator(1, 0, lv, p, x)).evaluate(pl));
            sv = exponent();
            tally(supp, (t_operator(0, sv, lv, p, x) - t_operator(1, sv, lv, p, x)).supported_in(0, euler_phi(pl) - 1));
        }
    r.checks = {comp, comp0, tele, eval, supp};
    return r;
}

} // namespace cyclowed
