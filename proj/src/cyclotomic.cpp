#include "cyclowed/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <utility>

namespace cyclowed {

long Valuation::value() const
{
    if (infinite_)
        throw DomainError("valuation is infinite");
    return value_;
}

std::string Valuation::to_string() const
{
    return infinite_ ? std::string("INFINITY") : std::to_string(value_);
}

namespace detail {

struct CycField {
    std::int64_t m = 1;
    std::size_t phi = 1;
    // Nonzero coefficients of Phi_m below the leading term.
    std::vector<std::pair<std::size_t, long>> tail;
    // Reduction of X^k mod Phi_m for 0 <= k < m.
    std::vector<std::vector<Integer>> monomials;

    mutable std::once_flag binom_once;
    // binom[j][i] = C(j, i) for i <= j < phi.
    mutable std::vector<std::vector<Integer>> binom;

    const std::vector<std::vector<Integer>>& binomials() const
    {
        std::call_once(binom_once, [this] {
            binom.resize(phi);
            for (std::size_t j = 0; j < phi; ++j) {
                binom[j].resize(j + 1);
                binom[j][0] = 1;
                binom[j][j] = 1;
                for (std::size_t i = 1; i < j; ++i)
                    binom[j][i] = binom[j - 1][i - 1] + binom[j - 1][i];
            }
        });
        return binom;
    }
};

namespace {

std::unique_ptr<CycField> build_field(std::int64_t m)
{
    auto f = std::make_unique<CycField>();
    f->m = m;
    const IntPoly& cp = cyclotomic_polynomial(m);
    f->phi = static_cast<std::size_t>(cp.degree());
    for (std::size_t i = 0; i < f->phi; ++i) {
        if (cp.coeffs[i] == 0)
            continue;
        if (!cp.coeffs[i].fits_slong_p())
            throw DomainError("cyclotomic coefficient too large");
        f->tail.emplace_back(i, cp.coeffs[i].get_si());
    }
    const std::size_t phi = f->phi;
    f->monomials.resize(static_cast<std::size_t>(m));
    std::vector<Integer> cur(phi, Integer(0));
    cur[0] = 1;
    for (std::int64_t k = 0; k < m; ++k) {
        f->monomials[k] = cur;
        // cur *= X
        Integer top = cur[phi - 1];
        for (std::size_t i = phi - 1; i > 0; --i)
            cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (const auto& [i, c] : f->tail)
                cur[i] -= top * c;
    }
    return f;
}

} // namespace

const CycField* field_for(std::int64_t m)
{
    if (m < 1)
        throw DomainError("conductor must be >= 1");
    static std::mutex mu;
    static std::map<std::int64_t, std::unique_ptr<CycField>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(m);
    if (it == cache.end())
        it = cache.emplace(m, build_field(m)).first;
    return it->second.get();
}

} // namespace detail

using detail::field_for;

CycElement::CycElement() : CycElement(field_for(1), {Integer(0)}, Integer(1)) {}

CycElement::CycElement(const detail::CycField* f, std::vector<Integer> num, Integer den)
    : field_(f), num_(std::move(num)), den_(std::move(den))
{
    normalize();
}

void CycElement::normalize()
{
    if (den_ == 0)
        throw DomainError("zero denominator");
    if (den_ < 0) {
        den_ = -den_;
        for (auto& c : num_)
            c = -c;
    }
    if (den_ == 1)
        return;
    Integer g = den_;
    bool all_zero = true;
    for (const auto& c : num_) {
        if (c == 0)
            continue;
        all_zero = false;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1)
            return;
    }
    if (all_zero) {
        den_ = 1;
        return;
    }
    for (auto& c : num_)
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

void CycElement::require_same_field(const CycElement& b) const
{
    if (field_ != b.field_)
        throw DomainError("elements of different cyclotomic fields: conductors " +
                          std::to_string(field_->m) + " and " + std::to_string(b.field_->m));
}

CycElement CycElement::zero(std::int64_t m)
{
    const auto* f = field_for(m);
    return CycElement(f, std::vector<Integer>(f->phi, Integer(0)), Integer(1));
}

CycElement CycElement::one(std::int64_t m)
{
    return from_rational(m, Rational(1));
}

CycElement CycElement::from_rational(std::int64_t m, const Rational& q)
{
    const auto* f = field_for(m);
    std::vector<Integer> num(f->phi, Integer(0));
    num[0] = q.get_num();
    return CycElement(f, std::move(num), q.get_den());
}

CycElement CycElement::zeta_power(std::int64_t m, std::int64_t e)
{
    const auto* f = field_for(m);
    return CycElement(f, f->monomials[static_cast<std::size_t>(mod_floor(e, m))], Integer(1));
}

CycElement CycElement::from_integers(std::int64_t m, const std::vector<Integer>& coeffs)
{
    const auto* f = field_for(m);
    std::vector<Integer> num(f->phi, Integer(0));
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0)
            continue;
        if (k < f->phi) {
            num[k] += coeffs[k];
            continue;
        }
        const auto& mono = f->monomials[k % static_cast<std::size_t>(m)];
        for (std::size_t i = 0; i < f->phi; ++i)
            if (mono[i] != 0)
                num[i] += coeffs[k] * mono[i];
    }
    return CycElement(f, std::move(num), Integer(1));
}

CycElement CycElement::from_coeffs(std::int64_t m, const std::vector<Rational>& coeffs)
{
    Integer den = 1;
    for (const auto& c : coeffs)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> ints(coeffs.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        ints[k] = coeffs[k].get_num() * (den / coeffs[k].get_den());
    CycElement r = from_integers(m, ints);
    r.den_ = den;
    r.normalize();
    return r;
}

std::int64_t CycElement::conductor() const
{
    return field_->m;
}

Rational CycElement::coeff(std::size_t j) const
{
    if (j >= num_.size())
        return Rational(0);
    return make_rational(num_[j], den_);
}

std::vector<Rational> CycElement::coeffs() const
{
    std::vector<Rational> r(num_.size());
    for (std::size_t j = 0; j < num_.size(); ++j)
        r[j] = make_rational(num_[j], den_);
    return r;
}

bool CycElement::is_zero() const
{
    return std::all_of(num_.begin(), num_.end(), [](const Integer& c) { return c == 0; });
}

bool CycElement::is_one() const
{
    if (den_ != 1 || num_[0] != 1)
        return false;
    return std::all_of(num_.begin() + 1, num_.end(), [](const Integer& c) { return c == 0; });
}

bool CycElement::is_p_integral(std::int64_t p) const
{
    return mpz_divisible_ui_p(den_.get_mpz_t(), static_cast<unsigned long>(p)) == 0;
}

CycElement& CycElement::operator+=(const CycElement& b)
{
    require_same_field(b);
    if (den_ == b.den_) {
        for (std::size_t i = 0; i < num_.size(); ++i)
            num_[i] += b.num_[i];
    } else {
        for (std::size_t i = 0; i < num_.size(); ++i) {
            num_[i] *= b.den_;
            mpz_addmul(num_[i].get_mpz_t(), b.num_[i].get_mpz_t(), den_.get_mpz_t());
        }
        den_ *= b.den_;
    }
    normalize();
    return *this;
}

CycElement& CycElement::operator-=(const CycElement& b)
{
    return *this += -b;
}

CycElement operator-(CycElement a)
{
    for (auto& c : a.num_)
        c = -c;
    return a;
}

CycElement& CycElement::operator*=(const Rational& q)
{
    for (auto& c : num_)
        c *= q.get_num();
    den_ *= q.get_den();
    normalize();
    return *this;
}

CycElement& CycElement::operator*=(const CycElement& b)
{
    require_same_field(b);
    const std::size_t phi = num_.size();
    std::vector<Integer> prod(2 * phi - 1, Integer(0));
    for (std::size_t i = 0; i < phi; ++i) {
        if (num_[i] == 0)
            continue;
        for (std::size_t j = 0; j < phi; ++j)
            if (b.num_[j] != 0)
                mpz_addmul(prod[i + j].get_mpz_t(), num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
    for (std::size_t k = prod.size(); k-- > phi;) {
        if (prod[k] == 0)
            continue;
        const Integer top = prod[k];
        for (const auto& [i, c] : field_->tail) {
            Integer& slot = prod[k - phi + i];
            if (c > 0)
                mpz_submul_ui(slot.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(c));
            else
                mpz_addmul_ui(slot.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(-c));
        }
    }
    prod.resize(phi);
    num_ = std::move(prod);
    den_ *= b.den_;
    normalize();
    return *this;
}

bool operator==(const CycElement& a, const CycElement& b)
{
    return a.field_ == b.field_ && a.den_ == b.den_ && a.num_ == b.num_;
}

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

// a mod b and the quotient, for b != 0.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b)
{
    trim(a);
    if (a.size() < b.size())
        return {QPoly{}, a};
    QPoly q(a.size() - b.size() + 1);
    const Rational lead_inv = 1 / b.back();
    for (std::size_t k = a.size(); k-- >= b.size();) {
        Rational c = a[k] * lead_inv;
        q[k - (b.size() - 1)] = c;
        if (c != 0)
            for (std::size_t i = 0; i < b.size(); ++i)
                a[k - (b.size() - 1) + i] -= c * b[i];
        if (k == b.size() - 1)
            break;
    }
    trim(a);
    trim(q);
    return {q, a};
}

QPoly sub_mul(const QPoly& a, const QPoly& q, const QPoly& b)
{
    QPoly r(std::max(a.size(), q.empty() || b.empty() ? 0 : q.size() + b.size() - 1));
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i];
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] -= q[i] * b[j];
    trim(r);
    return r;
}

} // namespace

CycElement CycElement::inverse() const
{
    if (is_zero())
        throw DomainError("inverse of zero");
    const IntPoly& cp = cyclotomic_polynomial(field_->m);
    QPoly r0(cp.coeffs.begin(), cp.coeffs.end());
    QPoly r1(num_.begin(), num_.end());
    trim(r1);
    QPoly s0, s1{Rational(1)};
    while (!r1.empty()) {
        auto [q, rem] = divmod(r0, r1);
        QPoly s2 = sub_mul(s0, q, s1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1)
        throw InternalError("cyclotomic polynomial not coprime to a nonzero element");
    const Rational scale = Rational(den_) / r0[0];
    for (auto& c : s0)
        c *= scale;
    return from_coeffs(field_->m, s0);
}

CycElement CycElement::pow(unsigned long e) const
{
    CycElement result = one(field_->m);
    CycElement base = *this;
    while (e) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return result;
}

CycElement CycElement::galois(std::int64_t i) const
{
    const std::int64_t m = field_->m;
    if (gcd64(i, m) != 1)
        throw DomainError("Galois exponent must be coprime to the conductor");
    std::vector<Integer> out(num_.size(), Integer(0));
    for (std::size_t j = 0; j < num_.size(); ++j) {
        if (num_[j] == 0)
            continue;
        const auto& mono =
            field_->monomials[static_cast<std::size_t>(mod_floor(i * static_cast<std::int64_t>(j), m))];
        for (std::size_t k = 0; k < out.size(); ++k)
            if (mono[k] != 0)
                out[k] += num_[j] * mono[k];
    }
    return CycElement(field_, std::move(out), den_);
}

std::string CycElement::to_string(const std::string& zeta) const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < num_.size(); ++j) {
        if (num_[j] == 0)
            continue;
        Rational c = make_rational(num_[j], den_);
        const bool negative = c < 0;
        if (negative)
            c = -c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        if (j == 0) {
            os << c;
            continue;
        }
        if (c != 1)
            os << c << "*";
        os << zeta;
        if (j > 1)
            os << "^" << j;
    }
    return first ? std::string("0") : os.str();
}

CycElement add(const CycElement& a, const CycElement& b) { return a + b; }
CycElement sub(const CycElement& a, const CycElement& b) { return a - b; }
CycElement mul(const CycElement& a, const CycElement& b) { return a * b; }
CycElement neg(const CycElement& a) { return -a; }
CycElement invert(const CycElement& a) { return a.inverse(); }
CycElement galois_apply(const CycElement& a, std::int64_t i) { return a.galois(i); }

namespace {

std::vector<Integer> t_numerators(const CycElement& a, const std::vector<std::vector<Integer>>& binom)
{
    const auto& num = a.numerators();
    const std::size_t phi = num.size();
    std::vector<Integer> b(phi, Integer(0));
    for (std::size_t j = 0; j < phi; ++j) {
        if (num[j] == 0)
            continue;
        for (std::size_t i = 0; i <= j; ++i)
            mpz_addmul(b[i].get_mpz_t(), num[j].get_mpz_t(), binom[j][i].get_mpz_t());
    }
    for (std::size_t i = 1; i < phi; i += 2)
        b[i] = -b[i];
    return b;
}

} // namespace

std::vector<Rational> to_t_basis(const CycElement& a)
{
    const auto* f = field_for(a.conductor());
    auto b = t_numerators(a, f->binomials());
    std::vector<Rational> out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] = make_rational(b[i], a.denominator());
    return out;
}

Valuation t_valuation(const CycElement& a, std::int64_t p, int n)
{
    if (!is_prime(p) || n < 1)
        throw DomainError("t-valuation needs a prime p and n >= 1");
    if (a.conductor() != ipow(p, static_cast<unsigned>(n)))
        throw DomainError("t-valuation: element conductor is not p^n");
    if (a.is_zero())
        return Valuation::infinity();
    const auto* f = field_for(a.conductor());
    const auto b = t_numerators(a, f->binomials());
    const long phi = static_cast<long>(b.size());
    const long vden = valuation_p(a.denominator(), p);
    bool found = false;
    long best = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] == 0)
            continue;
        const long v = phi * (valuation_p(b[i], p) - vden) + static_cast<long>(i);
        if (!found || v < best) {
            best = v;
            found = true;
        }
    }
    return Valuation(best);
}

CycElement uniformizer(std::int64_t m)
{
    return CycElement::one(m) - CycElement::zeta_power(m, 1);
}

CycElement gauss_eval(const GaussPoly& g, const CycElement& q)
{
    CycElement acc = CycElement::zero(q.conductor());
    for (std::size_t k = g.coeffs.size(); k-- > 0;) {
        acc *= q;
        if (g.coeffs[k] != 0)
            acc += CycElement::from_rational(q.conductor(), Rational(g.coeffs[k]));
    }
    return acc;
}

} // namespace cyclowed
