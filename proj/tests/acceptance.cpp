// One PASS/FAIL line per acceptance criterion; exit status 1 if any criterion fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "cyclowed/absolute.hpp"
#include "cyclowed/random.hpp"
#include "cyclowed/smith.hpp"
#include "cyclowed/suites.hpp"

using namespace cyclowed;

namespace {

constexpr std::uint64_t seed = 20240531;

struct Verdict {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            if (pass)
                detail = what;
            pass = false;
        }
    }
};

std::string join(const std::vector<long>& v)
{
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k)
        s += (k ? "," : "") + std::to_string(v[k]);
    return s;
}

std::vector<long> longs(const std::vector<Valuation>& v)
{
    std::vector<long> r;
    for (const auto& x : v)
        r.push_back(x.value());
    return r;
}

CycElement zi(std::int64_t m, const std::vector<long>& c)
{
    return CycElement::from_integers(m, std::vector<Integer>(c.begin(), c.end()));
}

bool integral(const CycMatrix& a)
{
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a(i, j).is_integral())
                return false;
    return true;
}

bool is_unit(const CycElement& d)
{
    return !d.is_zero() && d.is_integral() && d.inverse().is_integral();
}

std::vector<CycElement> random_combination(Sampler& s, const CycMatrix& basis, std::int64_t m)
{
    std::vector<CycElement> y(basis.cols(), CycElement::zero(m));
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        const CycElement c = s.cyc_integral(m, 2);
        for (std::size_t j = 0; j < basis.cols(); ++j)
            y[j] += c * basis(i, j);
    }
    return y;
}

void perturb(Sampler& s, std::vector<CycElement>& y, std::int64_t m, long max_power)
{
    const auto j = static_cast<std::size_t>(s.uniform(0, static_cast<std::int64_t>(y.size()) - 1));
    y[j] += uniformizer(m).pow(static_cast<unsigned long>(s.uniform(0, max_power)));
}

std::string squash(const std::string& s)
{
    std::istringstream in(s);
    std::string w, r;
    while (in >> w)
        r += (r.empty() ? "" : " ") + w;
    return r;
}

Verdict criterion1()
{
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    const std::vector<long> expect = {0, 1, 4, 5, 8, 9};
    const auto closed = longs(dedekind_eldiv_closed_forms(3, 2));
    const auto snf = longs(smith_valuations_dvr(dedekind_matrix(3, 2), 3, 2));
    v.require(closed == expect, "closed form gives " + join(closed));
    v.require(snf == expect, "Smith form gives " + join(snf));
    v.require(dedekind_det_valuation(3, 2) == 27, "closed determinant valuation is not 27");
    v.require(t_valuation(determinant(dedekind_matrix(3, 2)), 3, 2) == Valuation(27), "determinant has valuation other than 27");
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    v.require(secs < 1.0, "took " + std::to_string(secs) + " s");
    return v;
}

Verdict criterion2()
{
    Verdict v;
    for (std::int64_t pn : {2, 3, 4, 5, 8, 9, 16, 25, 27}) {
        std::int64_t p;
        int n;
        prime_power(pn, p, n);
        v.require(dedekind_eldiv_closed_forms(p, n) == smith_valuations_dvr(dedekind_matrix(p, n), p, n),
                  "Dedekind disagreement at p^n = " + std::to_string(pn));
        v.require(wedderburn_eldiv_closed_forms(p, n) == smith_valuations_dvr(wedderburn_matrix(p, n), p, n),
                  "Wedderburn disagreement at p^n = " + std::to_string(pn));
    }
    return v;
}

Verdict from_suite(const SuiteReport& r)
{
    Verdict v;
    for (const auto& c : r.checks)
        v.require(c.ok(), c.name + ": " + std::to_string(c.passed) + "/" + std::to_string(c.total));
    return v;
}

Verdict criterion5()
{
    Verdict v;
    const CycMatrix q = wedderburn_image_basis(5), van = wedderburn_vandermonde_basis(5), xi = w1_basis(5);
    const std::vector<const CycMatrix*> all = {&q, &van, &xi};
    for (const auto* a : all)
        for (const auto* b : all) {
            const CycMatrix change = matmul(*a, inverse(*b));
            v.require(integral(change) && is_unit(determinant(change)), "change of basis is not unimodular");
        }
    // The q-Pascal basis matrix as printed for m = 5, coefficients over 1, z, z^2, z^3.
    const std::vector<std::vector<std::vector<long>>> printed = {
        {{5}, {0}, {0}, {0}, {0}},
        {{4, 3, 2, 1}, {-4, -3, -2, -1}, {0}, {0}, {0}},
        {{2, 1, 2}, {-1, -1, 0, 2}, {0, 2, 1, 2}, {0}, {0}},
        {{2, 1, 1, 1}, {-2, 0, -1, -2}, {3, 3, 2, 2}, {0, 0, 1, -1}, {0}},
        {{1}, {-1, 1, 0, 1}, {-2, -1, -2, 1}, {0, 0, -3, -1}, {0, 1}}};
    std::vector<std::string> bad;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            if (q(i, j) != zi(5, printed[i][j]))
                bad.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ") computed " + q(i, j).to_string("z"));
    std::string list;
    for (const auto& b : bad)
        list += (list.empty() ? "" : "; ") + b;
    v.require(bad.empty(), std::to_string(bad.size()) + " of 25 entries differ from the printed matrix: " + list);
    return v;
}

Verdict criterion6()
{
    Verdict v;
    Sampler s(seed + 6);
    for (std::int64_t p : {3, 5, 7}) {
        const CycMatrix image = wedderburn_image_basis(p), w1 = w1_basis(p);
        for (const CycMatrix* from : {&image, &w1})
            for (int trial = 0; trial < 200; ++trial) {
                auto y = random_combination(s, *from, p);
                if (s.coin(0.3))
                    perturb(s, y, p, p);
                v.require(w1_membership(p, y) == wedderburn_membership(p, y).member,
                          "W1 and image differ at p = " + std::to_string(p));
            }
    }
    const CycMatrix image = wedderburn_image_basis(9), w2 = w2_basis(3, 2);
    for (const CycMatrix* from : {&image, &w2})
        for (int trial = 0; trial < 200; ++trial) {
            auto y = random_combination(s, *from, 9);
            if (s.coin(0.4))
                perturb(s, y, 9, 12);
            const auto pre = wedderburn_membership(9, y).witness;
            const bool local = std::all_of(pre.begin(), pre.end(), [](const CycElement& x) { return x.is_p_integral(3); });
            v.require(w2_membership(3, 2, y) == local, "W2 and localized image differ at p^n = 9");
        }
    v.require(t_valuation(determinant(w2), 3, 2) == Valuation(54), "W2 basis determinant valuation is not 54");
    v.require(t_valuation(determinant(wedderburn_matrix(3, 2)), 3, 2) == Valuation(54), "image determinant valuation is not 54");
    v.require(wedderburn_det_valuation(3, 2) == 27 * 2, "closed determinant valuation is not p^3(p-1)");
    return v;
}

Verdict criterion7()
{
    Verdict v;
    std::vector<long> l81;
    for (long i = 0; i <= 12; ++i)
        l81.push_back(w1_radical_layer_dim(3, 4, i));
    v.require(l81 == std::vector<long>{1, 5, 15, 31, 50, 66, 76, 80, 81, 81, 81, 81, 81}, "l_81 = " + join(l81));
    for (std::int64_t pn : {9, 27, 81, 8}) {
        std::int64_t p;
        int n;
        prime_power(pn, p, n);
        for (long i = 0; i <= 2 * n * (p - 1); ++i)
            v.require(w1_radical_layer_dim(p, n, 1) * w1_radical_layer_dim(p, n, i) >= w1_radical_layer_dim(p, n, i + 1),
                      "l_1 l_i < l_{i+1} at p^n = " + std::to_string(pn) + ", i = " + std::to_string(i));
    }
    return v;
}

Verdict criterion8()
{
    Verdict v;
    using H = HochschildDescriptor;
    for (std::int64_t pn : {3, 9}) {
        std::int64_t p;
        int n;
        prime_power(pn, p, n);
        // v_t(theta^{sigma_i} - theta) = v_t(zeta^{i-1} - 1) = p^{v_p(i-1)}.
        auto twisted = [&](std::int64_t i) { return static_cast<long>(p_part(i - 1, p)); };
        long phi = 0;
        for (std::int64_t i = 2; i < pn; ++i)
            if (i % p)
                phi += twisted(i);
        const long different = static_cast<long>(ipow(p, static_cast<unsigned>(n - 1))) * (n * (p - 1) - 1);
        v.require(phi == different && hochschild_phi(p, n) == phi, "phi mismatch at p^n = " + std::to_string(pn));
        for (std::int64_t i = 1; i < pn; ++i) {
            if (i % p == 0)
                continue;
            for (int j = 0; j <= 5; ++j) {
                H hom, coh;
                if (i == 1) {
                    hom = j == 0 ? H::free_rank_one() : j % 2 ? H::quotient(phi) : H::zero();
                    coh = j == 0 ? H::free_rank_one() : j % 2 ? H::zero() : H::quotient(phi);
                } else {
                    hom = j % 2 ? H::zero() : H::quotient(twisted(i));
                    coh = j % 2 ? H::quotient(twisted(i)) : H::zero();
                }
                const std::string at = " at p^n = " + std::to_string(pn) + ", i = " + std::to_string(i) + ", j = " + std::to_string(j);
                v.require(hochschild(p, n, i, j, HochschildVariant::Homology) == hom, "homology" + at);
                v.require(hochschild(p, n, i, j, HochschildVariant::Cohomology) == coh, "cohomology" + at);
            }
        }
    }
    v.require(hochschild_phi(3, 2) == 9, "phi(3, 2) is not 9");
    return v;
}

Verdict criterion9()
{
    Verdict v;
    Sampler s(seed + 9);
    for (auto [p, n] : std::vector<std::pair<std::int64_t, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
        const std::int64_t pn = ipow(p, static_cast<unsigned>(n));
        int members = 0;
        for (int trial = 0; trial < 500; ++trial) {
            std::vector<Rational> c(static_cast<std::size_t>(pn));
            for (auto& x : c)
                x = Rational(s.integer(5));
            auto comps = absolute_apply(p, n, GroupRingElement(pn, c)).components();
            if (!s.coin(0.3)) {
                const int i = static_cast<int>(s.uniform(0, n));
                const std::int64_t j = s.uniform(0, euler_phi(ipow(p, static_cast<unsigned>(i))) - 1);
                comps[static_cast<std::size_t>(i)].add(j, zpow(p, static_cast<unsigned long>(s.uniform(0, n))) * s.integer(2));
            }
            const AbsoluteTuple t(p, n, comps);
            const bool oracle = absolute_image_membership_oracle(t);
            members += oracle;
            v.require(km_ties_check(t).holds == oracle, "ties and inversion oracle differ at (" + std::to_string(p) + "," + std::to_string(n) + ")");
        }
        v.require(members > 0 && members < 500, "degenerate sample at (" + std::to_string(p) + "," + std::to_string(n) + ")");
    }

    const std::vector<std::vector<std::string>> expect = {
        {"x_{0,0} ≡_3 x_{1,0} + x_{1,1}"},
        {"x_{1,0} ≡_3 x_{2,0} + x_{2,3} - x_{2,2} - x_{2,5}",
         "x_{1,1} ≡_3 x_{2,1} + x_{2,4} - x_{2,2} - x_{2,5}",
         "x_{0,0} ≡_9 3(x_{2,2} + x_{2,5}) + (x_{1,0} + x_{1,1})"},
        {"x_{2,0} ≡_3 x_{3,0} + x_{3,9}  - x_{3,6} - x_{3,15}",
         "x_{2,1} ≡_3 x_{3,1} + x_{3,10} - x_{3,7} - x_{3,16}",
         "x_{2,2} ≡_3 x_{3,2} + x_{3,11} - x_{3,8} - x_{3,17}",
         "x_{2,3} ≡_3 x_{3,3} + x_{3,12} - x_{3,6} - x_{3,15}",
         "x_{2,4} ≡_3 x_{3,4} + x_{3,13} - x_{3,7} - x_{3,16}",
         "x_{2,5} ≡_3 x_{3,5} + x_{3,14} - x_{3,8} - x_{3,17}",
         "x_{1,0} ≡_9 3(x_{3,6} + x_{3,15} - x_{3,8} - x_{3,17}) + (x_{2,0} + x_{2,3} - x_{2,2} - x_{2,5})",
         "x_{1,1} ≡_9 3(x_{3,7} + x_{3,16} - x_{3,8} - x_{3,17}) + (x_{2,1} + x_{2,4} - x_{2,2} - x_{2,5})",
         "x_{0,0} ≡_{27} 9(x_{3,8} + x_{3,17}) + 3(x_{2,2} + x_{2,5}) + (x_{1,0} + x_{1,1})"}};
    for (int n = 1; n <= 3; ++n) {
        std::vector<std::string> got;
        for (const auto& c : km_ties(3, n))
            got.push_back(c.render());
        std::vector<std::string> want;
        for (const auto& line : expect[static_cast<std::size_t>(n - 1)])
            want.push_back(squash(line));
        v.require(got == want, "Z C_" + std::to_string(ipow(3, static_cast<unsigned>(n))) + " system differs");
    }

    for (auto [p, n] : std::vector<std::pair<std::int64_t, int>>{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}, {5, 1}}) {
        const auto snf = smith_divisors_z(absolute_matrix(p, n));
        std::vector<Integer> multiset;
        for (int i = 0; i <= n; ++i)
            for (std::int64_t k = 0; k < euler_phi(ipow(p, static_cast<unsigned>(n - i))); ++k)
                multiset.push_back(zpow(p, static_cast<unsigned long>(i)));
        Integer prod = 1;
        for (const auto& d : snf)
            prod *= d;
        const std::string at = " at (" + std::to_string(p) + "," + std::to_string(n) + ")";
        v.require(snf == multiset, "Smith divisors differ" + at);
        v.require(prod == zpow(p, static_cast<unsigned long>((ipow(p, static_cast<unsigned>(n)) - 1) / (p - 1))), "index differs" + at);
        v.require(prod == absolute_index(p, n), "absolute_index differs" + at);
    }
    return v;
}

Verdict criterion10()
{
    Verdict v;
    v.require(s_value(6, 2) == 1 && s_value(6, 3) == 2 && s_value(12, 2) == 3 && s_value(12, 3) == 1, "s-values differ");
    CompositeTuple t = composite_apply(12, GroupRingElement::one(12));
    const CompositeReport rep = composite_membership(t);
    const std::vector<std::string> expect = {
        "(a_{1,(•,•)}) × (a_{2,(0,•)}) × (a_{4,(0,•)} + a_{4,(1,•)}ζ_4) ∈ ZC_4",
        "(a_{3,(•,0)}) × (a_{6,(0,0)}) × (a_{12,(0,0)} + a_{12,(1,0)}ζ_4) ∈ ZC_4",
        "(a_{3,(•,1)}) × (a_{6,(0,1)}) × (a_{12,(0,1)} + a_{12,(1,1)}ζ_4) ∈ ZC_4",
        "(a_{1,(•,•)}) × (a_{3,(•,0)} + a_{3,(•,1)}ζ_3) ∈ ZC_3",
        "(a_{2,(0,•)}) × (a_{6,(0,0)} + a_{6,(0,1)}ζ_3) ∈ ZC_3",
        "(a_{4,(0,•)}) × (a_{12,(0,0)} + a_{12,(0,1)}ζ_3) ∈ ZC_3",
        "(a_{4,(1,•)}) × (a_{12,(1,0)} + a_{12,(1,1)}ζ_3) ∈ ZC_3",
    };
    std::vector<std::string> got;
    for (const auto& c : rep.checks)
        got.push_back(c.description);
    v.require(got == expect, "delegated checks differ");
    v.require(rep.member, "image of 1 rejected");
    t.coeffs[2][0] += 1;
    v.require(!composite_membership(t).member, "perturbed tuple accepted");
    for (std::int64_t m = 1; m <= 12; ++m) {
        const Integer idx = absolute_index_m(m);
        Integer lhs = idx * idx;
        for (auto d : divisors(m))
            lhs *= discriminant_magnitude(d);
        v.require(lhs == zpow(m, static_cast<unsigned long>(m)), "index^2 prod disc != m^m at m = " + std::to_string(m));
    }
    return v;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
        {"Dedekind elementary divisors at p = 3, n = 2", criterion1},
        {"closed forms equal Smith forms for Dedekind and Wedderburn", criterion2},
        {"Vandermonde identities on random and cyclotomic tuples", [] { return from_suite(vandermonde_suite(50, seed)); }},
        {"q-Pascal inverse, diagonalization and det(V)^2", [] { return from_suite(qpascal_suite(20, seed)); }},
        {"m = 5 basis comparison and printed q-Pascal matrix", criterion5},
        {"W1 and W2 against the image; determinant valuation 54", criterion6},
        {"radical series of W1", criterion7},
        {"Hochschild (co)homology case table", criterion8},
        {"absolute ties, Z C_3/9/27 systems, Smith divisors and index", criterion9},
        {"composite m = 12 decomposition and index/discriminant identity", criterion10},
        {"T operator laws", [] { return from_suite(toperator_suite(100, seed)); }},
    };
    int passed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Verdict v;
        try {
            v = criteria[k].second();
        } catch (const std::exception& e) {
            v.pass = false;
            v.detail = std::string("exception: ") + e.what();
        }
        passed += v.pass;
        std::cout << (v.pass ? "PASS" : "FAIL") << " " << (k + 1) << " " << criteria[k].first;
        if (!v.pass)
            std::cout << ": " << v.detail;
        std::cout << std::endl;
    }
    std::cout << passed << "/" << criteria.size() << " criteria passed" << std::endl;
    return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
