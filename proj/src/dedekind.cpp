#include "cyclowed/dedekind.hpp"

#include <algorithm>

namespace cyclowed {

std::int64_t checked_prime_power(std::int64_t p, int n)
{
    if (!is_prime(p))
        throw DomainError("p = " + std::to_string(p) + " is not prime");
    if (n < 1 || n > 62)
        throw DomainError("n must be a positive integer");
    std::int64_t pn = 1;
    for (int k = 0; k < n; ++k) {
        if (pn > (std::int64_t(1) << 40) / p)
            throw DomainError("p^n is too large");
        pn *= p;
    }
    return pn;
}

std::vector<std::int64_t> unit_indices(std::int64_t p, int n)
{
    const std::int64_t pn = checked_prime_power(p, n);
    std::vector<std::int64_t> u;
    for (std::int64_t j = 1; j < pn; ++j)
        if (j % p != 0)
            u.push_back(j);
    return u;
}

PointTuple<CycElement> dedekind_tuple(std::int64_t p, int n, Generator g)
{
    const std::int64_t pn = checked_prime_power(p, n);
    std::vector<CycElement> pts;
    for (auto u : unit_indices(p, n)) {
        const CycElement z = CycElement::zeta_power(pn, u);
        pts.push_back(g == Generator::Zeta ? z : CycElement::one(pn) - z);
    }
    return PointTuple<CycElement>(std::move(pts));
}

CycMatrix dedekind_matrix(std::int64_t p, int n)
{
    return build_V(dedekind_tuple(p, n));
}

Valuation dedekind_eldiv_closed_form(std::int64_t p, int n, std::int64_t j)
{
    const std::int64_t pn = checked_prime_power(p, n);
    if (j < 0 || j >= pn)
        throw DomainError("index outside [0, p^n - 1]");
    if (j % p == 0)
        throw DomainError("index divisible by p");
    const auto a = digits_base(j, p);
    auto digit = [&](std::size_t s) -> std::int64_t { return s < a.size() ? a[s] : 0; };
    std::int64_t v = -1, ps = 1;
    for (std::size_t s = 0; s < a.size(); ++s, ps *= p)
        v += (digit(s) * static_cast<std::int64_t>(s + 1) - digit(s + 1) * static_cast<std::int64_t>(s + 2)) * ps;
    return Valuation(static_cast<long>(v));
}

std::vector<Valuation> dedekind_eldiv_closed_forms(std::int64_t p, int n)
{
    std::vector<Valuation> r;
    for (auto u : unit_indices(p, n))
        r.push_back(dedekind_eldiv_closed_form(p, n, u));
    return r;
}

Integer dedekind_det_valuation(std::int64_t p, int n)
{
    checked_prime_power(p, n);
    return zpow(p, static_cast<unsigned long>(2 * n - 2)) * (p - 1) * ((p - 1) * n - 1) / 2;
}

TieSystem dedekind_ties(std::int64_t p, int n)
{
    const auto tau = dedekind_tuple(p, n);
    const CycMatrix l = build_L(tau);
    const auto phi = dedekind_eldiv_closed_forms(p, n);
    const std::size_t m = tau.size();
    std::vector<std::string> names;
    for (std::size_t i = 0; i < m; ++i)
        names.push_back("eta_" + std::to_string(i));
    std::vector<Congruence> cs;
    for (std::size_t i = 0; i < m; ++i) {
        Congruence c{names[i], Modulus::t_power(phi[i].value(), p, n), {}};
        for (std::size_t j = 0; j < i; ++j)
            if (!l(j, i).is_zero())
                c.form.push_back({names[j], l(j, i)});
        cs.push_back(std::move(c));
    }
    return TieSystem(std::move(names), std::move(cs));
}

CycMatrix dedekind_image_basis(std::int64_t p, int n, Generator g)
{
    const auto tau = dedekind_tuple(p, n, g);
    const std::size_t m = tau.size();
    CycMatrix b(m, m, tau.zero());
    for (std::size_t j = 0; j < m; ++j) {
        CycElement acc = CycElement::one(tau[0].conductor());
        for (std::size_t i = 0; i < m; ++i) {
            if (i > 0)
                acc *= tau[j] - tau[i - 1];
            b(i, j) = acc;
        }
    }
    return b;
}

MembershipResult dedekind_membership(std::int64_t p, int n, const std::vector<CycElement>& eta)
{
    const CycMatrix v = dedekind_matrix(p, n);
    if (eta.size() != v.rows())
        throw DomainError("expected a tuple of length " + std::to_string(v.rows()));
    MembershipResult r;
    r.witness = solve_left(v, eta);
    r.member = std::all_of(r.witness.begin(), r.witness.end(),
                           [p](const CycElement& x) { return x.is_p_integral(p); });
    return r;
}

std::vector<CycElement> dedekind_image_of(std::int64_t p, int n, std::int64_t k, std::int64_t l)
{
    const std::int64_t pn = checked_prime_power(p, n);
    std::vector<CycElement> r;
    for (auto u : unit_indices(p, n))
        r.push_back(CycElement::zeta_power(pn, k + u * l));
    return r;
}

std::string HochschildDescriptor::to_string() const
{
    switch (kind) {
    case Kind::FreeRankOne:
        return "T";
    case Kind::Zero:
        return "0";
    case Kind::TModTPower:
        return "T/t^" + std::to_string(exponent) + "T";
    }
    return {};
}

namespace {

long twist_exponent(std::int64_t p, int n, std::int64_t u)
{
    const std::int64_t pn = checked_prime_power(p, n);
    const CycElement theta = uniformizer(pn);
    return t_valuation(theta.galois(u) - theta, p, n).value();
}

} // namespace

long hochschild_phi(std::int64_t p, int n)
{
    long phi = 0;
    for (auto u : unit_indices(p, n))
        if (u != 1)
            phi += twist_exponent(p, n, u);
    return phi;
}

HochschildDescriptor hochschild(std::int64_t p, int n, std::int64_t twist, int degree, HochschildVariant variant)
{
    const std::int64_t pn = checked_prime_power(p, n);
    if (twist < 1 || twist >= pn || twist % p == 0)
        throw DomainError("twist must be a unit in [1, p^n - 1]");
    if (degree < 0)
        throw DomainError("degree must be nonnegative");
    const bool odd = degree % 2 == 1;
    const bool homology = variant == HochschildVariant::Homology;
    if (twist == 1) {
        if (degree == 0)
            return HochschildDescriptor::free_rank_one();
        const bool torsion = homology ? odd : !odd;
        return torsion ? HochschildDescriptor::quotient(hochschild_phi(p, n)) : HochschildDescriptor::zero();
    }
    const bool torsion = homology ? !odd : odd;
    return torsion ? HochschildDescriptor::quotient(twist_exponent(p, n, twist)) : HochschildDescriptor::zero();
}

long lambda_radical_layers(std::int64_t p, int n, long i)
{
    if (i < 0)
        throw DomainError("layer index must be nonnegative");
    return std::min(i + 1, static_cast<long>(euler_phi(checked_prime_power(p, n))));
}

} // namespace cyclowed
