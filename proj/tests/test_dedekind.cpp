#include <doctest.h>

#include "cyclowed/dedekind.hpp"
#include "cyclowed/random.hpp"
#include "cyclowed/smith.hpp"

using namespace cyclowed;

namespace {

std::vector<long> longs(const std::vector<Valuation>& v)
{
    std::vector<long> r;
    for (const auto& x : v)
        r.push_back(x.value());
    return r;
}

CycElement zi(std::int64_t m, std::vector<long> c)
{
    return CycElement::from_integers(m, std::vector<Integer>(c.begin(), c.end()));
}

} // namespace

TEST_CASE("Dedekind matrix")
{
    const CycMatrix v31 = dedekind_matrix(3, 1);
    CHECK(v31.rows() == 2);
    CHECK(v31(0, 0).is_one());
    CHECK(v31(0, 1).is_one());
    CHECK(v31(1, 0) == uniformizer(3));
    CHECK(v31(1, 1) == CycElement::one(3) - CycElement::zeta_power(3, 2));

    const CycMatrix v21 = dedekind_matrix(2, 1);
    CHECK(v21.rows() == 1);
    CHECK(v21(0, 0).is_one());

    CHECK(t_valuation(determinant(dedekind_matrix(3, 2)), 3, 2) == Valuation(27));
    CHECK_THROWS_AS(dedekind_matrix(4, 1), DomainError);
    CHECK_THROWS_AS(dedekind_matrix(3, 0), DomainError);
}

TEST_CASE("Dedekind closed form")
{
    CHECK(longs(dedekind_eldiv_closed_forms(3, 2)) == std::vector<long>{0, 1, 4, 5, 8, 9});
    CHECK(longs(dedekind_eldiv_closed_forms(5, 1)) == std::vector<long>{0, 1, 2, 3});
    for (std::int64_t p : {2, 3, 5, 7})
        for (int n = 1; n <= 3; ++n)
            CHECK(dedekind_eldiv_closed_form(p, n, 1) == Valuation(0));
    CHECK_THROWS_AS(dedekind_eldiv_closed_form(3, 2, 3), DomainError);
    CHECK_THROWS_AS(dedekind_eldiv_closed_form(3, 2, 9), DomainError);
}

TEST_CASE("Dedekind closed form against the local Smith form")
{
    for (std::int64_t pn : {2, 3, 4, 5, 8, 9, 25}) {
        std::int64_t p;
        int n;
        prime_power(pn, p, n);
        CAPTURE(pn);
        const auto closed = dedekind_eldiv_closed_forms(p, n);
        CHECK(closed == smith_valuations_dvr(dedekind_matrix(p, n), p, n));
        Integer sum = 0;
        for (const auto& v : closed)
            sum += v.value();
        CHECK(sum == dedekind_det_valuation(p, n));
        CHECK(Integer(t_valuation(determinant(dedekind_matrix(p, n)), p, n).value()) == sum);
    }
    CHECK(dedekind_det_valuation(3, 2) == 27);
    CHECK(dedekind_det_valuation(5, 1) == 6);
}

TEST_CASE("Dedekind ties")
{
    const TieSystem t21 = dedekind_ties(2, 1);
    CHECK(t21.congruences().size() == 1);
    CHECK(t21.congruences()[0].form.empty());
    CHECK(t21.congruences()[0].modulus.t_exponent() == 0);

    const TieSystem t31 = dedekind_ties(3, 1);
    REQUIRE(t31.congruences().size() == 2);
    const auto& c = t31.congruences()[1];
    CHECK(c.modulus.t_exponent() == 1);
    REQUIRE(c.form.size() == 1);
    CHECK(c.form[0].coord == "eta_0");
    CHECK(c.form[0].coeff.is_one());

    const TieSystem t32 = dedekind_ties(3, 2);
    std::vector<long> exps;
    for (const auto& cg : t32.congruences())
        exps.push_back(cg.modulus.t_exponent());
    CHECK(exps == std::vector<long>{0, 1, 4, 5, 8, 9});
}

TEST_CASE("Dedekind image basis")
{
    for (std::int64_t pn : {3, 4, 9, 8}) {
        std::int64_t p;
        int n;
        prime_power(pn, p, n);
        const CycMatrix b = dedekind_image_basis(p, n);
        const auto phi = dedekind_eldiv_closed_forms(p, n);
        for (std::size_t j = 0; j < b.cols(); ++j)
            CHECK(b(0, j).is_one());
        for (std::size_t i = 0; i < b.rows(); ++i) {
            for (std::size_t j = 0; j < i; ++j)
                CHECK(b(i, j).is_zero());
            CHECK(t_valuation(b(i, i), p, n) == phi[i]);
            CHECK(dedekind_membership(p, n, b.row(i)).member);
            CHECK(dedekind_ties(p, n).accepts(dedekind_ties(p, n).bind(b.row(i))));
        }
    }
    // The two generators give the same rows up to the sign (-1)^i.
    const CycMatrix a = dedekind_image_basis(3, 2), z = dedekind_image_basis(3, 2, Generator::Zeta);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            CHECK(a(i, j) == (i % 2 ? -z(i, j) : z(i, j)));
    CHECK(z(5, 5) == zi(9, {0, -3, 0, 0, 3}));
}

TEST_CASE("reference triangular matrix at exponents 1, 2, 3, 4, 7, 8")
{
    // Reference table for p = 3, n = 2 built from theta = zeta at these exponents.
    // Entry (3, 4) of the table omits the zeta^4 term; the check below restores it.
    const std::vector<std::vector<std::vector<long>>> table = {
        {{1}, {1}, {1}, {1}, {1}, {1}},
        {{0}, {0, -1, 1}, {0, -1, 0, 1}, {0, -1, 0, 0, 1}, {0, -2, 0, 0, -1}, {0, -1, -1, 0, 0, -1}},
        {{0}, {0}, {-1, 0, 0, 0, -1, -1}, {1, 0, -1, 2, 0, -2}, {-1, 0, 1, 1, 0, 2}, {-1, -2, 0, 1, -1, 0}},
        {{0}, {0}, {0}, {1, -2, -2, 2, -1, -1}, {2, 2, 2, 4, 0, 1}, {-1, -1, 2, 1, 1, 1}},
        {{0}, {0}, {0}, {0}, {3, 6, 0, 3, 0, -3}, {0, 3, 3, 3, 3, 3}},
        {{0}, {0}, {0}, {0}, {0}, {0, 0, 3, 0, 3, 3}}};
    const std::vector<long> exps = {1, 2, 3, 4, 7, 8};
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            CycElement expect = CycElement::one(9);
            for (std::size_t k = 0; k < i; ++k)
                expect *= CycElement::zeta_power(9, exps[j]) - CycElement::zeta_power(9, exps[k]);
            CycElement entry = zi(9, table[i][j]);
            if (i == 3 && j == 4)
                entry += CycElement::zeta_power(9, 4);
            CHECK(entry == expect);
        }
    // Exponent 3 is not a unit mod 9, so the table is not a basis of the image.
    CHECK(!dedekind_membership(3, 2, {zi(9, {0}), zi(9, {0, -1, 1}), zi(9, {0, -1, 0, 1}), zi(9, {0, -1, 0, 0, 1}),
                                      zi(9, {0, -2, 0, 0, -1}), zi(9, {0, -1, -1, 0, 0, -1})})
               .member);
}

TEST_CASE("Dedekind membership")
{
    for (std::int64_t k : {0, 2, 5})
        for (std::int64_t l : {0, 1, 4}) {
            const auto r = dedekind_membership(3, 2, dedekind_image_of(3, 2, k, l));
            CHECK(r.member);
            // zeta^k (x) zeta^l = sum_i zeta^k (-1)^i C(l, i) (1 (x) theta^i) with theta = 1 - zeta.
            for (std::size_t i = 0; i < r.witness.size(); ++i) {
                const Rational c(binomial(l, static_cast<std::int64_t>(i)) * (i % 2 ? -1 : 1));
                CHECK(r.witness[i] == CycElement::zeta_power(9, k) * c);
            }
        }

    std::vector<CycElement> e(6, CycElement::zero(9));
    e[0] = CycElement::one(9);
    CHECK(!dedekind_membership(3, 2, e).member);
    e[0] = uniformizer(9).pow(9);
    CHECK(dedekind_membership(3, 2, e).member);
    e[0] = uniformizer(9).pow(8);
    CHECK(!dedekind_membership(3, 2, e).member);
}

TEST_CASE("Dedekind ties agree with the preimage oracle")
{
    Sampler s(17);
    for (std::int64_t pn : {3, 4, 5, 8, 9}) {
        std::int64_t p;
        int n;
        prime_power(pn, p, n);
        const TieSystem ties = dedekind_ties(p, n);
        const CycMatrix basis = dedekind_image_basis(p, n);
        const std::size_t m = basis.rows();
        int members = 0;
        for (int trial = 0; trial < 200; ++trial) {
            // Random integral combination of basis rows, possibly perturbed by a small multiple of a unit vector.
            std::vector<CycElement> eta(m, CycElement::zero(pn));
            for (std::size_t i = 0; i < m; ++i) {
                const CycElement c = s.cyc_integral(pn, 3);
                for (std::size_t j = 0; j < m; ++j)
                    eta[j] += c * basis(i, j);
            }
            if (s.coin()) {
                const auto j = static_cast<std::size_t>(s.uniform(0, static_cast<std::int64_t>(m) - 1));
                eta[j] += uniformizer(pn).pow(static_cast<unsigned long>(s.uniform(0, 10)));
            }
            const bool oracle = dedekind_membership(p, n, eta).member;
            CHECK(ties.accepts(ties.bind(eta)) == oracle);
            members += oracle;
        }
        CHECK(members > 0);
        CHECK(members < 200);
    }
}

TEST_CASE("Hochschild descriptors")
{
    using H = HochschildDescriptor;
    const auto hom = HochschildVariant::Homology, coh = HochschildVariant::Cohomology;
    CHECK(hochschild(3, 1, 1, 1, hom) == H::quotient(1));
    CHECK(hochschild(3, 2, 1, 3, hom) == H::quotient(9));
    CHECK(hochschild(3, 2, 1, 0, hom) == H::free_rank_one());
    CHECK(hochschild(3, 2, 1, 2, hom) == H::zero());
    CHECK(hochschild(3, 2, 1, 2, coh) == H::quotient(9));
    CHECK(hochschild(3, 2, 1, 1, coh) == H::zero());
    CHECK(hochschild(3, 2, 4, 0, hom) == H::quotient(3));
    CHECK(hochschild(3, 2, 4, 1, hom) == H::zero());
    CHECK(hochschild(3, 2, 4, 1, coh) == H::quotient(3));
    CHECK(hochschild(3, 2, 2, 2, hom) == H::quotient(1));
    CHECK(H::quotient(0) == H::zero());
    CHECK_THROWS_AS(hochschild(3, 2, 3, 0, hom), DomainError);
    CHECK_THROWS_AS(hochschild(3, 2, 0, 0, hom), DomainError);

    for (std::int64_t p : {2, 3, 5})
        for (int n = 1; n <= 3; ++n) {
            const long phi = hochschild_phi(p, n);
            CHECK(phi == ipow(p, n - 1) * (n * (p - 1) - 1));
            CHECK(phi == dedekind_eldiv_closed_forms(p, n).back().value());
        }
    CHECK(hochschild(3, 2, 1, 1, hom).to_string() == "T/t^9T");
}

TEST_CASE("radical layers of Lambda")
{
    CHECK(lambda_radical_layers(3, 2, 0) == 1);
    CHECK(lambda_radical_layers(3, 2, 4) == 5);
    CHECK(lambda_radical_layers(3, 2, 100) == 6);
    // Count oracle from the basis exponents max(i - k, 0), k in [0, m-1].
    for (long i = 0; i < 12; ++i) {
        long grows = 0;
        for (long k = 0; k < 6; ++k)
            grows += std::max(i + 1 - k, 0L) > std::max(i - k, 0L);
        CHECK(lambda_radical_layers(3, 2, i) == grows);
    }
}
