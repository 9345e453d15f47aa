#pragma once

// JSON forms of the library types. Parsers throw DomainError on malformed input.

#include <json.hpp>

#include "cyclowed/absolute.hpp"
#include "cyclowed/suites.hpp"

namespace cyclowed {

using Json = nlohmann::ordered_json;

/// Integers as JSON numbers when they fit in 64 bits, strings otherwise.
Json integer_to_json(const Integer& a);
/// Accepts a JSON integer or a decimal string.
Integer integer_from_json(const Json& j);

/// "num/den" or "num".
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// {"m": m, "coeffs": ["num/den", ...]} with phi(m) entries.
Json to_json(const CycElement& a);
CycElement cyc_from_json(const Json& j);

/// {"rows", "cols", "domain": "Q" | {"cyclotomic": m}, "entries"}; cyclotomic entries are coefficient lists.
Json to_json(const RationalMatrix& a);
Json to_json(const IntMatrix& a);
Json to_json(const CycMatrix& a);
RationalMatrix rational_matrix_from_json(const Json& j);
CycMatrix cyc_matrix_from_json(const Json& j);

/// {"order": [...], "congruences": [{"target", "modulus_valuation", "modulus", "form": [[name, coeff], ...]}]}.
/// modulus_valuation is the t-adic exponent, null when the conductor is not a prime power.
Json to_json(const TieSystem& t);

/// {"p", "n", "components": [{"i": i, "coeffs": {"j": x_{i,j}, ...}}, ...]}.
Json to_json(const AbsoluteTuple& t);
AbsoluteTuple absolute_tuple_from_json(const Json& j);

Json to_json(const KMCongruence& c);
Json to_json(const KMReport& r);

/// {"m", "components": [{"d": d, "coeffs": [a_{d,0}, ...]}, ...]} in the digit convention.
Json to_json(const CompositeTuple& t);
CompositeTuple composite_tuple_from_json(const Json& j);
Json to_json(const CompositeReport& r);

Json to_json(const SuiteReport& r);

} // namespace cyclowed
