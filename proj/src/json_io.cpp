#include "cyclowed/json_io.hpp"

namespace cyclowed {

namespace {

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw DomainError(std::string("JSON: missing field \"") + key + "\"");
    return j.at(key);
}

std::int64_t int_field(const Json& j, const char* key)
{
    const Json& v = field(j, key);
    if (!v.is_number_integer())
        throw DomainError(std::string("JSON: field \"") + key + "\" must be an integer");
    return v.get<std::int64_t>();
}

Json coeff_list(const CycElement& a)
{
    Json c = Json::array();
    for (const auto& q : a.coeffs())
        c.push_back(rational_to_json(q));
    return c;
}

CycElement cyc_from_list(std::int64_t m, const Json& c)
{
    if (!c.is_array() || c.size() != static_cast<std::size_t>(euler_phi(m)))
        throw DomainError("JSON: cyclotomic element needs phi(m) = " + std::to_string(euler_phi(m)) + " coefficients");
    std::vector<Rational> q;
    for (const auto& e : c)
        q.push_back(rational_from_json(e));
    return CycElement::from_coeffs(m, q);
}

template <class T, class F>
Json matrix_json(const Matrix<T>& a, Json domain, F entry)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < a.cols(); ++j)
            row.push_back(entry(a(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"rows", a.rows()}, {"cols", a.cols()}, {"domain", std::move(domain)}, {"entries", std::move(rows)}};
}

/// Checks the shape fields and returns the entry rows.
const Json& matrix_entries(const Json& j, std::size_t& rows, std::size_t& cols)
{
    const std::int64_t r = int_field(j, "rows"), c = int_field(j, "cols");
    if (r < 0 || c < 0)
        throw DomainError("JSON: negative matrix dimension");
    rows = static_cast<std::size_t>(r);
    cols = static_cast<std::size_t>(c);
    const Json& e = field(j, "entries");
    if (!e.is_array() || e.size() != rows)
        throw DomainError("JSON: matrix entries do not match rows");
    for (const auto& row : e)
        if (!row.is_array() || row.size() != cols)
            throw DomainError("JSON: matrix entries do not match cols");
    return e;
}

} // namespace

Json integer_to_json(const Integer& a)
{
    if (a.fits_slong_p())
        return Json(static_cast<std::int64_t>(a.get_si()));
    return Json(a.get_str());
}

Integer integer_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Integer(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        Integer a;
        if (a.set_str(j.get<std::string>(), 10) != 0)
            throw DomainError("JSON: malformed integer \"" + j.get<std::string>() + "\"");
        return a;
    }
    throw DomainError("JSON: expected an integer");
}

Json rational_to_json(const Rational& q)
{
    return Json(format_rational(q));
}

Rational rational_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Rational(integer_from_json(j));
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    throw DomainError("JSON: expected a rational as \"num/den\"");
}

Json to_json(const CycElement& a)
{
    return Json{{"m", a.conductor()}, {"coeffs", coeff_list(a)}};
}

CycElement cyc_from_json(const Json& j)
{
    const std::int64_t m = int_field(j, "m");
    if (m < 1)
        throw DomainError("JSON: conductor must be positive");
    return cyc_from_list(m, field(j, "coeffs"));
}

Json to_json(const RationalMatrix& a)
{
    return matrix_json(a, Json("Q"), [](const Rational& q) { return rational_to_json(q); });
}

Json to_json(const IntMatrix& a)
{
    return matrix_json(a, Json("Q"), [](const Integer& q) { return rational_to_json(Rational(q)); });
}

Json to_json(const CycMatrix& a)
{
    const std::int64_t m = a.rows() && a.cols() ? a(0, 0).conductor() : a.zero().conductor();
    return matrix_json(a, Json{{"cyclotomic", m}}, [](const CycElement& e) { return coeff_list(e); });
}

RationalMatrix rational_matrix_from_json(const Json& j)
{
    if (field(j, "domain") != Json("Q"))
        throw DomainError("JSON: expected domain \"Q\"");
    std::size_t rows, cols;
    const Json& e = matrix_entries(j, rows, cols);
    RationalMatrix a(rows, cols, Rational(0));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            a(r, c) = rational_from_json(e[r][c]);
    return a;
}

CycMatrix cyc_matrix_from_json(const Json& j)
{
    const std::int64_t m = int_field(field(j, "domain"), "cyclotomic");
    if (m < 1)
        throw DomainError("JSON: conductor must be positive");
    std::size_t rows, cols;
    const Json& e = matrix_entries(j, rows, cols);
    CycMatrix a(rows, cols, CycElement::zero(m));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            a(r, c) = cyc_from_list(m, e[r][c]);
    return a;
}

Json to_json(const TieSystem& t)
{
    Json cong = Json::array();
    for (const auto& c : t.congruences()) {
        Json val;
        const Modulus& md = c.modulus;
        if (md.kind() == Modulus::Kind::TPower) {
            val = md.t_exponent();
        } else if (md.kind() == Modulus::Kind::Element) {
            std::int64_t p;
            int n;
            if (prime_power(md.element_value().conductor(), p, n))
                val = t_valuation(md.element_value(), p, n).value();
        }
        Json modulus;
        switch (md.kind()) {
        case Modulus::Kind::TPower:
            modulus = Json{{"t_power", md.t_exponent()}, {"p", md.prime()}, {"n", md.level()}};
            break;
        case Modulus::Kind::Element:
            modulus = Json{{"element", to_json(md.element_value())}};
            break;
        case Modulus::Kind::Integer:
            modulus = Json{{"integer", integer_to_json(md.integer_value())}};
            break;
        }
        Json form = Json::array();
        for (const auto& term : c.form)
            form.push_back(Json::array({term.coord, to_json(term.coeff)}));
        cong.push_back(Json{{"target", c.target}, {"modulus_valuation", val}, {"modulus", modulus}, {"form", form}});
    }
    return Json{{"order", t.order()}, {"congruences", cong}};
}

Json to_json(const AbsoluteTuple& t)
{
    Json comps = Json::array();
    for (int i = 0; i <= t.level(); ++i) {
        Json coeffs = Json::object();
        for (const auto& [j, v] : t.component(i).support())
            coeffs[std::to_string(j)] = integer_to_json(v);
        comps.push_back(Json{{"i", i}, {"coeffs", coeffs}});
    }
    return Json{{"p", t.prime()}, {"n", t.level()}, {"components", comps}};
}

AbsoluteTuple absolute_tuple_from_json(const Json& j)
{
    const std::int64_t p = int_field(j, "p");
    const std::int64_t n = int_field(j, "n");
    if (n < 0 || n > 62)
        throw DomainError("JSON: n out of range");
    std::vector<FinSuppSeq> comps(static_cast<std::size_t>(n) + 1);
    std::vector<bool> seen(comps.size(), false);
    const Json& list = field(j, "components");
    if (!list.is_array())
        throw DomainError("JSON: components must be an array");
    for (const auto& c : list) {
        const std::int64_t i = int_field(c, "i");
        if (i < 0 || i > n || seen[static_cast<std::size_t>(i)])
            throw DomainError("JSON: component index " + std::to_string(i) + " out of range or repeated");
        seen[static_cast<std::size_t>(i)] = true;
        const Json& coeffs = field(c, "coeffs");
        auto& seq = comps[static_cast<std::size_t>(i)];
        if (coeffs.is_object()) {
            for (const auto& [key, v] : coeffs.items()) {
                std::size_t used = 0;
                std::int64_t idx = 0;
                try {
                    idx = std::stoll(key, &used);
                } catch (const std::exception&) {
                    used = 0;
                }
                if (used != key.size() || key.empty())
                    throw DomainError("JSON: coefficient key \"" + key + "\" is not an integer");
                seq.set(idx, integer_from_json(v));
            }
        } else if (coeffs.is_array()) {
            for (std::size_t k = 0; k < coeffs.size(); ++k)
                seq.set(static_cast<std::int64_t>(k), integer_from_json(coeffs[k]));
        } else {
            throw DomainError("JSON: coeffs must be an object or an array");
        }
    }
    return AbsoluteTuple(p, static_cast<int>(n), std::move(comps));
}

Json to_json(const KMCongruence& c)
{
    Json form = Json::array();
    for (const auto& [key, coeff] : c.form())
        form.push_back(Json::array({key.first, key.second, integer_to_json(coeff)}));
    return Json{{"l", c.l},
                {"target", Json::array({c.target_level, c.j})},
                {"modulus", integer_to_json(c.modulus)},
                {"form", form},
                {"text", c.render()}};
}

Json to_json(const KMReport& r)
{
    Json v = Json::array();
    for (const auto& x : r.violations)
        v.push_back(Json{{"l", x.l},
                         {"j", x.j},
                         {"modulus", integer_to_json(x.modulus)},
                         {"lhs_residue", integer_to_json(x.lhs_residue)},
                         {"rhs_residue", integer_to_json(x.rhs_residue)}});
    return Json{{"member", r.holds}, {"violations", v}};
}

Json to_json(const CompositeTuple& t)
{
    Json comps = Json::array();
    for (const auto& [d, a] : t.coeffs) {
        Json c = Json::array();
        for (const auto& x : a)
            c.push_back(integer_to_json(x));
        comps.push_back(Json{{"d", d}, {"coeffs", c}});
    }
    return Json{{"m", t.m}, {"components", comps}};
}

CompositeTuple composite_tuple_from_json(const Json& j)
{
    CompositeTuple t;
    t.m = int_field(j, "m");
    if (t.m < 1)
        throw DomainError("JSON: m must be positive");
    const Json& list = field(j, "components");
    if (!list.is_array())
        throw DomainError("JSON: components must be an array");
    for (const auto& c : list) {
        const std::int64_t d = int_field(c, "d");
        if (d < 1 || t.m % d != 0)
            throw DomainError("JSON: " + std::to_string(d) + " is not a divisor of m");
        const Json& a = field(c, "coeffs");
        if (!a.is_array())
            throw DomainError("JSON: coeffs must be an array");
        std::vector<Integer> v;
        for (const auto& x : a)
            v.push_back(integer_from_json(x));
        if (!t.coeffs.emplace(d, std::move(v)).second)
            throw DomainError("JSON: repeated component d = " + std::to_string(d));
    }
    return t;
}

Json to_json(const CompositeReport& r)
{
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        const KMReport rep = km_ties_check(c.slice);
        checks.push_back(Json{{"p", c.p},
                              {"f", c.f},
                              {"digits", c.digits},
                              {"text", c.description},
                              {"holds", c.holds},
                              {"slice", to_json(c.slice)},
                              {"violations", to_json(rep).at("violations")}});
    }
    return Json{{"member", r.member}, {"checks", checks}};
}

Json to_json(const SuiteReport& r)
{
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"total", c.total}});
    return Json{{"suite", r.suite}, {"ok", r.ok()}, {"checks", checks}};
}

} // namespace cyclowed
