#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "carries/carries_matrix.hpp"
#include "carries/phib.hpp"
#include "carries/simulator.hpp"
#include "carries/veronese.hpp"

namespace carries {

// Key order is insertion order so that emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

// Every Rational is written as the string "p/q" (or "p" for integers).
// Readers throw ParseError on malformed documents and DomainError when a
// well-formed document violates a type invariant.

Json to_json(const Rational& x);
Json to_json(const Polynomial& p);
Json to_json(const RatMatrix& m);
Json to_json(const std::vector<Rational>& v);
Json to_json(const CarriesMatrix& k);
Json to_json(const ClassAFunction& f);
Json to_json(const HilbertFunction& f);
Json to_json(const VeroneseMatrix& m);
Json to_json(const SimulationConfig& c);
Json to_json(const CarrySequence& s);

Rational rational_from_json(const Json& j);
Polynomial polynomial_from_json(const Json& j);
RatMatrix matrix_from_json(const Json& j);
std::vector<Rational> vector_from_json(const Json& j);
CarriesMatrix carries_matrix_from_json(const Json& j);
ClassAFunction class_a_from_json(const Json& j);
HilbertFunction hilbert_from_json(const Json& j);
VeroneseMatrix veronese_matrix_from_json(const Json& j);
SimulationConfig config_from_json(const Json& j);
CarrySequence sequence_from_json(const Json& j);

/// One matrix row per line, entries as "p/q" separated by commas.
std::string to_csv(const RatMatrix& m);

/// Parses ascending comma-separated coefficients such as "1,0,-3/2".
Polynomial parse_coefficient_list(std::string_view text);

}  // namespace carries
