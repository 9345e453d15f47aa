#include "cyclowed/ties.hpp"

#include <sstream>

namespace cyclowed {

Modulus Modulus::t_power(long k, std::int64_t p, int n)
{
    if (k < 0)
        throw DomainError("t-power modulus needs a nonnegative exponent");
    if (!is_prime(p) || n < 1)
        throw DomainError("t-power modulus needs a prime p and n >= 1");
    Modulus m;
    m.kind_ = Kind::TPower;
    m.t_exponent_ = k;
    m.p_ = p;
    m.n_ = n;
    return m;
}

Modulus Modulus::element(CycElement d)
{
    if (d.is_zero())
        throw DomainError("zero modulus");
    Modulus m;
    m.kind_ = Kind::Element;
    m.element_ = std::move(d);
    m.element_inv_ = m.element_.inverse();
    return m;
}

Modulus Modulus::integer(Integer q)
{
    if (q <= 0)
        throw DomainError("integer modulus must be positive");
    Modulus m;
    m.kind_ = Kind::Integer;
    m.integer_ = std::move(q);
    return m;
}

bool Modulus::divides(const CycElement& r) const
{
    switch (kind_) {
    case Kind::TPower: {
        const Valuation v = t_valuation(r, p_, n_);
        return v.is_infinite() || v.value() >= t_exponent_;
    }
    case Kind::Element:
        return (r * element_inv_).is_integral();
    case Kind::Integer:
        return (r * make_rational(1, integer_)).is_integral();
    }
    return false;
}

std::string Modulus::to_string() const
{
    switch (kind_) {
    case Kind::TPower:
        return "t^" + std::to_string(t_exponent_);
    case Kind::Element:
        return "(" + element_.to_string() + ")";
    case Kind::Integer:
        return integer_.get_str();
    }
    return {};
}

CycElement Congruence::residue(const std::map<std::string, CycElement>& values) const
{
    auto get = [&](const std::string& name) -> const CycElement& {
        auto it = values.find(name);
        if (it == values.end())
            throw DomainError("no value for coordinate " + name);
        return it->second;
    };
    CycElement r = get(target);
    for (const auto& term : form)
        r -= term.coeff * get(term.coord);
    return r;
}

std::string Congruence::to_string() const
{
    std::ostringstream os;
    os << target << " == ";
    if (form.empty())
        os << "0";
    for (std::size_t k = 0; k < form.size(); ++k) {
        if (k)
            os << " + ";
        os << "(" << form[k].coeff.to_string() << ")*" << form[k].coord;
    }
    os << " mod " << modulus.to_string();
    return os.str();
}

TieSystem::TieSystem(std::vector<std::string> order, std::vector<Congruence> congruences)
    : order_(std::move(order)), congruences_(std::move(congruences))
{
    std::map<std::string, std::size_t> pos;
    for (std::size_t k = 0; k < order_.size(); ++k)
        if (!pos.emplace(order_[k], k).second)
            throw DomainError("duplicate coordinate " + order_[k]);
    for (const auto& c : congruences_) {
        auto t = pos.find(c.target);
        if (t == pos.end())
            throw DomainError("unknown target coordinate " + c.target);
        for (const auto& term : c.form) {
            auto s = pos.find(term.coord);
            if (s == pos.end())
                throw DomainError("unknown coordinate " + term.coord);
            if (s->second >= t->second)
                throw DomainError("tie for " + c.target + " references later coordinate " + term.coord);
        }
    }
}

std::vector<std::size_t> TieSystem::violations(const std::map<std::string, CycElement>& values) const
{
    std::vector<std::size_t> bad;
    for (std::size_t k = 0; k < congruences_.size(); ++k)
        if (!congruences_[k].modulus.divides(congruences_[k].residue(values)))
            bad.push_back(k);
    return bad;
}

std::map<std::string, CycElement> TieSystem::bind(const std::vector<CycElement>& values) const
{
    if (values.size() != order_.size())
        throw DomainError("expected " + std::to_string(order_.size()) + " coordinate values");
    std::map<std::string, CycElement> m;
    for (std::size_t k = 0; k < values.size(); ++k)
        m.emplace(order_[k], values[k]);
    return m;
}

} // namespace cyclowed
