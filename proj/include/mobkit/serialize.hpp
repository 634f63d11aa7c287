#pragma once

#include <json.hpp>

#include <string>

#include "mobkit/arith.hpp"
#include "mobkit/dirichlet.hpp"
#include "mobkit/finfield.hpp"
#include "mobkit/inclexcl.hpp"
#include "mobkit/intpoly.hpp"
#include "mobkit/poset.hpp"

// JSON formats for files read and payloads written by the command line.
// Integers that may exceed 64 bits and all rationals are decimal strings
// ("7", "-3/4"). Malformed documents raise DomainError.
namespace mobkit::serialize {

using Json = nlohmann::ordered_json;

Json to_json(const BigInt& n);
Json to_json(const Rational& r);
// Accepts a JSON integer or a string "a" / "a/b" with b != 0.
Rational rational_from_json(const Json& j);
BigInt integer_from_json(const Json& j);

// Ascending coefficients, e.g. x^2 - x + 1 -> ["1", "-1", "1"].
Json to_json(const IntPolynomial& f);
IntPolynomial int_poly_from_json(const Json& j);

// {"p": 3, "m": 2, "modulus": [2, 2, 1]}
Json field_to_json(const finfield::FieldSpec& field);
// {"p", "m", "modulus", "coeffs": [[m residues], ...], "text"}, coefficients
// ascending and each coefficient ascending in the class of x.
Json to_json(const finfield::FqPolynomial& f);
finfield::FqPolynomial fq_poly_from_json(const Json& j);

// {"elements": ["a", ...], "relation": [["a", "b"], ...]} with a <= b per pair;
// the relation is closed reflexively and transitively.
poset::PosetPtr poset_from_json(const Json& j);
// {"label": value, ...} with integer or "a/b" values.
poset::ElementValues values_from_json(const Json& j);
Json to_json(const poset::ElementValues& values, const poset::Poset& order);
// [{"x", "y", "value"}] over every pair x <= y in topological order.
Json to_json(const poset::IncidenceFunction& f);

// {"universe": [...], "sets": [[...], ...]}
inclexcl::SetFamily set_family_from_json(const Json& j);
// {"outcomes": [...], "weights": [...], "events": [[...], ...]}
inclexcl::FiniteProbSpace prob_space_from_json(const Json& j);

Json to_json(const dirichlet::TruncatedSeries& s);
Json to_json(const dirichlet::ZetaBoundsReport& r);

Json parse_file(const std::string& path);

}  // namespace mobkit::serialize
