#include "cyclowed/absolute.hpp"

#include <mutex>
#include <sstream>

namespace cyclowed {

namespace {

Integer residue(const Integer& a, const Integer& q)
{
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t());
    return r;
}

std::int64_t phi_pp(std::int64_t p, int i)
{
    return i == 0 ? 1 : ipow(p, static_cast<unsigned>(i)) - ipow(p, static_cast<unsigned>(i - 1));
}

std::string subscript(std::int64_t v)
{
    const std::string s = std::to_string(v);
    return s.size() > 1 ? "{" + s + "}" : s;
}

std::string var(int i, std::int64_t j)
{
    return "x_{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

void require_prime_level(std::int64_t p, int n)
{
    if (!is_prime(p) || n < 0)
        throw DomainError("expected a prime p and n >= 0");
}

} // namespace

FinSuppSeq FinSuppSeq::from_vector(const std::vector<Integer>& v)
{
    FinSuppSeq r;
    for (std::size_t j = 0; j < v.size(); ++j)
        r.set(static_cast<std::int64_t>(j), v[j]);
    return r;
}

Integer FinSuppSeq::at(std::int64_t j) const
{
    const auto it = entries_.find(j);
    return it == entries_.end() ? Integer(0) : it->second;
}

void FinSuppSeq::set(std::int64_t j, const Integer& v)
{
    if (v == 0)
        entries_.erase(j);
    else
        entries_[j] = v;
}

void FinSuppSeq::add(std::int64_t j, const Integer& v)
{
    if (v != 0)
        set(j, at(j) + v);
}

bool FinSuppSeq::supported_in(std::int64_t lo, std::int64_t hi) const
{
    return entries_.empty() || (entries_.begin()->first >= lo && entries_.rbegin()->first <= hi);
}

FinSuppSeq& FinSuppSeq::operator+=(const FinSuppSeq& b)
{
    for (const auto& [j, v] : b.entries_)
        add(j, v);
    return *this;
}

FinSuppSeq& FinSuppSeq::operator-=(const FinSuppSeq& b)
{
    for (const auto& [j, v] : b.entries_) {
        const Integer w = -v;
        add(j, w);
    }
    return *this;
}

FinSuppSeq& FinSuppSeq::operator*=(const Integer& c)
{
    if (c == 0) {
        entries_.clear();
        return *this;
    }
    for (auto& e : entries_)
        e.second *= c;
    return *this;
}

bool FinSuppSeq::divisible_by(const Integer& q) const
{
    for (const auto& e : entries_)
        if (mpz_divisible_p(e.second.get_mpz_t(), q.get_mpz_t()) == 0)
            return false;
    return true;
}

CycElement FinSuppSeq::evaluate(std::int64_t m) const
{
    CycElement r = CycElement::zero(m);
    for (const auto& [j, v] : entries_)
        r += CycElement::zeta_power(m, j) * Rational(v);
    return r;
}

std::string FinSuppSeq::to_string() const
{
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [j, v] : entries_) {
        os << (first ? "" : ", ") << j << ": " << v.get_str();
        first = false;
    }
    os << "}";
    return os.str();
}

FinSuppSeq t_operator(int m, int s, int i, std::int64_t p, const FinSuppSeq& x)
{
    if (i < 0 || i + s < 0 || !is_prime(p))
        throw DomainError("t_operator: need i >= 0, i + s >= 0 and p prime");
    FinSuppSeq r;
    if (i < m)
        return r;
    const std::int64_t period = ipow(p, static_cast<unsigned>(i + s));
    const std::int64_t step = ipow(p, static_cast<unsigned>(i - m));
    std::map<std::int64_t, Integer> sums;
    for (const auto& [k, v] : x.support())
        sums[mod_floor(k, period)] += v;
    const std::int64_t len = ipow(p, static_cast<unsigned>(i));
    for (std::int64_t j = 0; j < len; ++j) {
        const auto it = sums.find(mod_floor(mod_floor(j, step) - step, period));
        if (it != sums.end())
            r.set(j, it->second);
    }
    return r;
}

AbsoluteTuple::AbsoluteTuple(std::int64_t p, int n, std::vector<FinSuppSeq> components)
    : p_(p), n_(n), components_(std::move(components))
{
    require_prime_level(p, n);
    if (components_.size() != static_cast<std::size_t>(n) + 1)
        throw DomainError("absolute tuple: expected n + 1 components");
    for (int i = 0; i <= n; ++i)
        if (!components_[static_cast<std::size_t>(i)].supported_in(0, phi_pp(p, i) - 1))
            throw DomainError("absolute tuple: component " + std::to_string(i) + " has support outside [0, phi(p^i) - 1]");
}

CycElement AbsoluteTuple::element(int i) const
{
    return component(i).evaluate(ipow(p_, static_cast<unsigned>(i)));
}

std::vector<std::vector<Rational>> absolute_apply_rational(std::int64_t p, int n, const GroupRingElement& x)
{
    require_prime_level(p, n);
    if (x.order() != ipow(p, static_cast<unsigned>(n)))
        throw DomainError("absolute_apply: group order is not p^n");
    std::vector<std::vector<Rational>> r;
    for (int i = 0; i <= n; ++i)
        r.push_back(CycElement::from_coeffs(ipow(p, static_cast<unsigned>(i)), x.coeffs()).coeffs());
    return r;
}

AbsoluteTuple absolute_apply(std::int64_t p, int n, const GroupRingElement& x)
{
    if (!x.is_integral())
        throw DomainError("absolute_apply: element is not integral");
    std::vector<FinSuppSeq> comps;
    for (const auto& c : absolute_apply_rational(p, n, x)) {
        FinSuppSeq s;
        for (std::size_t j = 0; j < c.size(); ++j)
            s.set(static_cast<std::int64_t>(j), c[j].get_num());
        comps.push_back(std::move(s));
    }
    return AbsoluteTuple(p, n, std::move(comps));
}

Integer KMCongruence::rhs(const AbsoluteTuple& t) const
{
    Integer r = 0;
    for (const auto& [key, c] : form())
        r += c * t.x(key.first, key.second);
    return r;
}

KMForm KMCongruence::form() const
{
    KMForm f;
    auto bump = [&f](int level, std::int64_t j, const Integer& c) {
        Integer& slot = f[{level, j}];
        slot += c;
        if (slot == 0)
            f.erase({level, j});
    };
    for (const auto& g : groups) {
        for (auto j : g.positive)
            bump(g.source_level, j, g.coefficient);
        for (auto j : g.negative)
            bump(g.source_level, j, -g.coefficient);
    }
    return f;
}

std::string KMCongruence::render() const
{
    std::string out = var(target_level, j) + " ≡_";
    const std::string mod = modulus.get_str();
    out += mod.size() > 1 ? "{" + mod + "}" : mod;
    out += " ";
    bool first_group = true;
    for (const auto& g : groups) {
        std::string body;
        for (auto k : g.positive)
            body += (body.empty() ? "" : " + ") + var(g.source_level, k);
        for (auto k : g.negative)
            body += " - " + var(g.source_level, k);
        const std::size_t terms = g.positive.size() + g.negative.size();
        if (!first_group)
            out += " + ";
        first_group = false;
        if (groups.size() == 1) {
            out += body;
            continue;
        }
        if (g.coefficient != 1)
            out += g.coefficient.get_str();
        out += terms > 1 ? "(" + body + ")" : body;
    }
    return out;
}

std::vector<KMCongruence> km_ties(std::int64_t p, int n)
{
    require_prime_level(p, n);
    std::vector<KMCongruence> r;
    for (int l = 1; l <= n; ++l) {
        const std::int64_t top = ipow(p, static_cast<unsigned>(n - l));
        for (std::int64_t j = 0; j < phi_pp(p, n - l); ++j) {
            KMCongruence c;
            c.l = l;
            c.target_level = n - l;
            c.j = j;
            c.modulus = zpow(p, static_cast<unsigned long>(l));
            for (int i = 0; i < l; ++i) {
                KMGroup g;
                g.coefficient = zpow(p, static_cast<unsigned long>(l - 1 - i));
                g.source_level = n - i;
                const std::int64_t stride = ipow(p, static_cast<unsigned>(n - 1 - i));
                for (std::int64_t k = 1; k < p; ++k)
                    g.positive.push_back(j - top + k * stride);
                if (l != n) {
                    const std::int64_t below = top / p;
                    for (std::int64_t k = 1; k < p; ++k)
                        g.negative.push_back(mod_floor(j, below) - below + k * stride);
                }
                c.groups.push_back(std::move(g));
            }
            r.push_back(std::move(c));
        }
    }
    return r;
}

KMReport km_ties_check(const AbsoluteTuple& t)
{
    KMReport rep;
    for (const auto& c : km_ties(t.prime(), t.level())) {
        const Integer lhs = residue(t.x(c.target_level, c.j), c.modulus);
        const Integer rhs = residue(c.rhs(t), c.modulus);
        if (lhs != rhs) {
            rep.holds = false;
            rep.violations.push_back({c.l, c.j, c.modulus, lhs, rhs});
        }
    }
    return rep;
}

namespace {

FinSuppSeq operator_term(std::int64_t p, int n, int l, int i, const FinSuppSeq& x)
{
    const int s = l - 1 - i;
    FinSuppSeq v = t_operator(0, s, n - l, p, x) - t_operator(1, s, n - l, p, x);
    v *= zpow(p, static_cast<unsigned long>(s));
    return v;
}

} // namespace

bool km_ties_check_operator(const AbsoluteTuple& t)
{
    const std::int64_t p = t.prime();
    const int n = t.level();
    for (int l = 1; l <= n; ++l) {
        FinSuppSeq d = t.component(n - l);
        for (int i = 0; i < l; ++i)
            d -= operator_term(p, n, l, i, t.component(n - i));
        if (!d.divisible_by(zpow(p, static_cast<unsigned long>(l))))
            return false;
    }
    return true;
}

KMForm km_operator_form(std::int64_t p, int n, int l, std::int64_t j)
{
    require_prime_level(p, n);
    if (l < 1 || l > n)
        throw DomainError("km_operator_form: l outside [1, n]");
    KMForm f;
    for (int i = 0; i < l; ++i)
        for (std::int64_t k = 0; k < phi_pp(p, n - i); ++k) {
            FinSuppSeq unit;
            unit.set(k, 1);
            const Integer c = operator_term(p, n, l, i, unit).at(j);
            if (c != 0)
                f[{n - i, k}] = c;
        }
    return f;
}

GroupRingElement absolute_preimage(std::int64_t p, int n, const std::vector<FinSuppSeq>& y)
{
    require_prime_level(p, n);
    if (y.size() != static_cast<std::size_t>(n) + 1)
        throw DomainError("absolute_preimage: expected n + 1 components");
    const std::int64_t pn = ipow(p, static_cast<unsigned>(n));
    // R[k][rho] = sum of y_{k,idx} over idx == rho mod p^n; the level n + 1 is zero.
    std::vector<std::vector<Integer>> sums(static_cast<std::size_t>(n) + 2,
                                           std::vector<Integer>(static_cast<std::size_t>(pn), Integer(0)));
    for (int k = 0; k <= n; ++k)
        for (const auto& [idx, v] : y[static_cast<std::size_t>(k)].support())
            sums[static_cast<std::size_t>(k)][static_cast<std::size_t>(mod_floor(idx, pn))] += v;
    std::vector<Rational> coeffs(static_cast<std::size_t>(pn));
    const Rational scale(1, zpow(p, static_cast<unsigned long>(n)));
    for (std::int64_t i = 0; i < pn; ++i) {
        Integer acc = 0;
        for (int k = 0; k <= n; ++k) {
            const std::int64_t pk = ipow(p, static_cast<unsigned>(k));
            Integer inner = 0;
            for (std::int64_t j = 1; j <= pn / pk; ++j) {
                const auto r = static_cast<std::size_t>(mod_floor(i - j * pk, pn));
                inner += sums[static_cast<std::size_t>(k)][r] - sums[static_cast<std::size_t>(k) + 1][r];
            }
            acc += pk * inner;
        }
        Rational c(acc);
        c *= scale;
        c.canonicalize();
        coeffs[static_cast<std::size_t>(i)] = c;
    }
    return GroupRingElement(pn, std::move(coeffs));
}

bool absolute_image_membership_oracle(const AbsoluteTuple& t)
{
    return absolute_preimage(t.prime(), t.level(), t.components()).is_integral();
}

Integer absolute_index(std::int64_t p, int n)
{
    require_prime_level(p, n);
    return zpow(p, static_cast<unsigned long>((ipow(p, static_cast<unsigned>(n)) - 1) / (p - 1)));
}

Integer absolute_index_m(std::int64_t m)
{
    if (m < 1)
        throw DomainError("absolute_index_m: m must be positive");
    Integer r = 1;
    for (auto p : prime_divisors(m)) {
        const std::int64_t mp = p_part(m, p);
        r *= zpow(p, static_cast<unsigned long>((mp - 1) / (p - 1) * (m / mp)));
    }
    return r;
}

std::vector<Integer> absolute_eldiv_z(std::int64_t p, int n)
{
    require_prime_level(p, n);
    std::vector<Integer> r;
    for (int i = 0; i <= n; ++i)
        for (std::int64_t k = 0; k < phi_pp(p, n - i); ++k)
            r.push_back(zpow(p, static_cast<unsigned long>(i)));
    return r;
}

IntMatrix absolute_matrix(std::int64_t p, int n)
{
    require_prime_level(p, n);
    const std::int64_t pn = ipow(p, static_cast<unsigned>(n));
    IntMatrix a(static_cast<std::size_t>(pn), static_cast<std::size_t>(pn), Integer(0));
    for (std::int64_t h = 0; h < pn; ++h) {
        std::size_t col = 0;
        for (int i = 0; i <= n; ++i) {
            const CycElement z = CycElement::zeta_power(ipow(p, static_cast<unsigned>(i)), h);
            for (const auto& c : z.numerators())
                a(static_cast<std::size_t>(h), col++) = c;
        }
    }
    return a;
}

Integer discriminant_magnitude(std::int64_t m)
{
    if (m < 1)
        throw DomainError("discriminant_magnitude: m must be positive");
    Integer r = 1;
    for (auto p : prime_divisors(m)) {
        const std::int64_t mp = p_part(m, p);
        const std::int64_t e = (mp / p) * (valuation_p(m, p) * (p - 1) - 1) * euler_phi(m / mp);
        r *= zpow(p, static_cast<unsigned long>(e));
    }
    return r;
}

bool index_discriminant_consistent(std::int64_t m)
{
    const Integer idx = absolute_index_m(m);
    Integer lhs = idx * idx;
    for (auto d : divisors(m))
        lhs *= discriminant_magnitude(d);
    return lhs == zpow(m, static_cast<unsigned long>(m));
}

std::int64_t s_value(std::int64_t k, std::int64_t p)
{
    if (k < 1 || !is_prime(p))
        throw DomainError("s_value: need k >= 1 and p prime");
    const std::int64_t kp = p_part(k, p);
    if (kp == 1)
        return 0;
    return inverse_mod(mod_floor(k / kp, kp), kp);
}

std::vector<std::pair<std::int64_t, std::int64_t>> digit_shape(std::int64_t d)
{
    std::vector<std::pair<std::int64_t, std::int64_t>> r;
    for (auto p : prime_divisors(d))
        r.emplace_back(p, euler_phi(p_part(d, p)));
    return r;
}

namespace {

/// All digit tuples of the shape in lexicographic order.
std::vector<std::vector<std::int64_t>> digit_tuples(const std::vector<std::pair<std::int64_t, std::int64_t>>& shape)
{
    std::vector<std::vector<std::int64_t>> r{{}};
    for (const auto& [p, range] : shape) {
        std::vector<std::vector<std::int64_t>> next;
        for (const auto& t : r)
            for (std::int64_t j = 0; j < range; ++j) {
                next.push_back(t);
                next.back().push_back(j);
            }
        r = std::move(next);
    }
    return r;
}

std::size_t flatten(const std::vector<std::pair<std::int64_t, std::int64_t>>& shape, const std::vector<std::int64_t>& digits)
{
    std::size_t idx = 0;
    for (std::size_t k = 0; k < shape.size(); ++k)
        idx = idx * static_cast<std::size_t>(shape[k].second) + static_cast<std::size_t>(digits[k]);
    return idx;
}

/// Inverse of the matrix whose rows are the digit basis elements of Z[zeta_d].
const RationalMatrix& digit_basis_inverse(std::int64_t d)
{
    static std::mutex mu;
    static std::map<std::int64_t, RationalMatrix> cache;
    const std::lock_guard<std::mutex> lock(mu);
    if (const auto it = cache.find(d); it != cache.end())
        return it->second;
    const auto phi = static_cast<std::size_t>(euler_phi(d));
    RationalMatrix b(phi, phi, Rational(0));
    const auto tuples = digit_tuples(digit_shape(d));
    for (std::size_t r = 0; r < tuples.size(); ++r) {
        const auto c = digit_basis_element(d, tuples[r]).coeffs();
        for (std::size_t j = 0; j < phi; ++j)
            b(r, j) = c[j];
    }
    return cache.emplace(d, inverse(b)).first->second;
}

} // namespace

CycElement digit_basis_element(std::int64_t d, const std::vector<std::int64_t>& digits)
{
    const auto shape = digit_shape(d);
    if (digits.size() != shape.size())
        throw DomainError("digit_basis_element: wrong number of digits");
    std::int64_t e = 0;
    for (std::size_t k = 0; k < shape.size(); ++k) {
        const auto [p, range] = shape[k];
        if (digits[k] < 0 || digits[k] >= range)
            throw DomainError("digit_basis_element: digit out of range");
        e += s_value(d, p) * digits[k] * (d / p_part(d, p));
    }
    return CycElement::zeta_power(d, e);
}

std::vector<Integer> to_digit_coeffs(const CycElement& y)
{
    const std::int64_t d = y.conductor();
    const RationalMatrix& inv = digit_basis_inverse(d);
    const auto c = y.coeffs();
    std::vector<Integer> r;
    for (std::size_t k = 0; k < c.size(); ++k) {
        Rational a = 0;
        for (std::size_t j = 0; j < c.size(); ++j)
            if (c[j] != 0)
                a += c[j] * inv(j, k);
        if (a.get_den() != 1)
            throw DomainError("to_digit_coeffs: element is not integral");
        r.push_back(a.get_num());
    }
    return r;
}

CycElement from_digit_coeffs(std::int64_t d, const std::vector<Integer>& a)
{
    const auto tuples = digit_tuples(digit_shape(d));
    if (a.size() != tuples.size())
        throw DomainError("from_digit_coeffs: expected phi(d) coefficients");
    CycElement r = CycElement::zero(d);
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] != 0)
            r += digit_basis_element(d, tuples[k]) * Rational(a[k]);
    return r;
}

std::map<std::int64_t, CycElement> absolute_apply_m(const GroupRingElement& x)
{
    std::map<std::int64_t, CycElement> r;
    for (auto d : divisors(x.order()))
        r.emplace(d, CycElement::from_coeffs(d, x.coeffs()));
    return r;
}

CompositeTuple composite_apply(std::int64_t m, const GroupRingElement& x)
{
    if (x.order() != m)
        throw DomainError("composite_apply: group order mismatch");
    if (!x.is_integral())
        throw DomainError("composite_apply: element is not integral");
    CompositeTuple t;
    t.m = m;
    for (const auto& [d, y] : absolute_apply_m(x))
        t.coeffs[d] = to_digit_coeffs(y);
    return t;
}

CompositeReport composite_membership(const CompositeTuple& t)
{
    const std::int64_t m = t.m;
    if (m < 1)
        throw DomainError("composite_membership: m must be positive");
    for (auto d : divisors(m)) {
        const auto it = t.coeffs.find(d);
        if (it == t.coeffs.end() || it->second.size() != static_cast<std::size_t>(euler_phi(d)))
            throw DomainError("composite_membership: missing or malformed component for d = " + std::to_string(d));
    }
    const auto primes_m = prime_divisors(m);
    auto label = [&](std::int64_t d, const std::vector<std::int64_t>& digits) {
        // digits follow the primes of d; print one slot per prime of m.
        std::string s = "a_{" + std::to_string(d) + ",(";
        std::size_t k = 0;
        for (std::size_t q = 0; q < primes_m.size(); ++q) {
            if (q)
                s += ",";
            s += d % primes_m[q] == 0 ? std::to_string(digits[k++]) : "•";
        }
        return s + ")}";
    };

    CompositeReport rep;
    for (auto p : primes_m) {
        const std::int64_t mp = p_part(m, p);
        const int v = valuation_p(m, p);
        for (auto f : divisors(m / mp)) {
            const auto f_shape = digit_shape(f);
            for (const auto& fd : digit_tuples(f_shape)) {
                std::vector<FinSuppSeq> comps;
                std::vector<std::string> parts;
                for (int i = 0; i <= v; ++i) {
                    const std::int64_t e = ipow(p, static_cast<unsigned>(i));
                    const std::int64_t d = e * f;
                    const auto d_shape = digit_shape(d);
                    const auto& coeffs = t.coeffs.at(d);
                    FinSuppSeq s;
                    std::string part;
                    for (std::int64_t jp = 0; jp < phi_pp(p, i); ++jp) {
                        std::vector<std::int64_t> digits;
                        std::size_t k = 0;
                        for (const auto& [q, range] : d_shape)
                            digits.push_back(q == p ? jp : fd[k++]);
                        s.set(jp, coeffs[flatten(d_shape, digits)]);
                        if (!part.empty())
                            part += " + ";
                        part += label(d, digits);
                        if (jp == 1)
                            part += "ζ_" + subscript(e);
                        else if (jp > 1)
                            part += "ζ_" + subscript(e) + "^" + subscript(jp);
                    }
                    comps.push_back(std::move(s));
                    parts.push_back("(" + part + ")");
                }
                std::string desc;
                for (const auto& part : parts)
                    desc += (desc.empty() ? "" : " × ") + part;
                desc += " ∈ ZC_" + subscript(mp);
                AbsoluteTuple slice(p, v, std::move(comps));
                const bool holds = km_ties_check(slice).holds;
                rep.member = rep.member && holds;
                rep.checks.push_back({p, f, fd, std::move(slice), holds, std::move(desc)});
            }
        }
    }
    return rep;
}

GroupRingElement inversion_formula_m(std::int64_t m, const std::map<std::int64_t, GroupRingElement>& reps)
{
    if (m < 1)
        throw DomainError("inversion_formula_m: m must be positive");
    std::vector<Rational> coeffs(static_cast<std::size_t>(m), Rational(0));
    for (auto d : divisors(m)) {
        const auto it = reps.find(d);
        if (it == reps.end() || it->second.order() != m)
            throw DomainError("inversion_formula_m: missing representative for d = " + std::to_string(d));
        const auto& a = it->second.coeffs();
        const auto pd = prime_divisors(d);
        std::int64_t rad = 1;
        for (auto q : pd)
            rad *= q;
        const std::int64_t dprime = d / rad;
        const std::int64_t range = m / dprime;
        std::vector<Rational> weight(static_cast<std::size_t>(range));
        for (std::int64_t k = 0; k < range; ++k) {
            Rational w = 1;
            for (auto q : pd)
                w *= k % q == 0 ? make_rational(q - 1, q) : make_rational(-1, q);
            weight[static_cast<std::size_t>(k)] = w;
        }
        for (std::int64_t l = 0; l < m; ++l) {
            Rational acc = 0;
            for (std::int64_t k = 0; k < range; ++k) {
                const Rational& c = a[static_cast<std::size_t>(mod_floor(l - k * dprime, m))];
                if (c != 0)
                    acc += c * weight[static_cast<std::size_t>(k)];
            }
            coeffs[static_cast<std::size_t>(l)] += acc * d;
        }
    }
    for (auto& c : coeffs)
        c /= m;
    return GroupRingElement(m, std::move(coeffs));
}

} // namespace cyclowed
