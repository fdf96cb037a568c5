#include "carries/serialize.hpp"

#include <sstream>

#include "carries/error.hpp"

namespace carries {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

template <typename T>
T integer_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
    return v.get<T>();
}

}  // namespace

Json to_json(const Rational& x) { return x.to_string(); }

Json to_json(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

Json to_json(const Polynomial& p) { return to_json(p.coefficients()); }

Json to_json(const RatMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (const auto& x : m.row(i)) row.push_back(to_json(x));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const CarriesMatrix& k) {
    return Json{{"base", k.base}, {"addends", k.addends}, {"matrix", to_json(k.matrix)}};
}

Json to_json(const ClassAFunction& f) {
    return Json{{"numerator", to_json(f.numerator())}, {"pole_order", f.pole_order()}};
}

Json to_json(const HilbertFunction& f) {
    return Json{{"numerator", to_json(f.numerator())}, {"n", f.n()}};
}

Json to_json(const VeroneseMatrix& m) {
    return Json{{"base", m.base}, {"n", m.n}, {"matrix", to_json(m.matrix)}};
}

Json to_json(const SimulationConfig& c) {
    return Json{{"base", c.base}, {"addends", c.addends}, {"columns", c.columns}, {"seed", c.seed}};
}

Json to_json(const CarrySequence& s) {
    return Json{{"config", to_json(s.config)}, {"carries", s.carries}};
}

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw ParseError("rational must be a \"p/q\" string or an integer");
}

std::vector<Rational> vector_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected an array of rationals");
    std::vector<Rational> v;
    v.reserve(j.size());
    for (const auto& x : j) v.push_back(rational_from_json(x));
    return v;
}

Polynomial polynomial_from_json(const Json& j) { return Polynomial(vector_from_json(j)); }

RatMatrix matrix_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("matrix must be an array of rows");
    std::vector<std::vector<Rational>> rows;
    rows.reserve(j.size());
    for (const auto& row : j) rows.push_back(vector_from_json(row));
    return RatMatrix::from_rows(rows);
}

CarriesMatrix carries_matrix_from_json(const Json& j) {
    CarriesMatrix k{integer_field<long>(j, "base"), integer_field<int>(j, "addends"),
                    matrix_from_json(field(j, "matrix"))};
    const auto m = static_cast<std::size_t>(k.addends);
    if (k.addends < 1 || k.matrix.rows() != m || k.matrix.cols() != m) {
        throw DomainError("carries matrix shape does not match its addend count");
    }
    return k;
}

ClassAFunction class_a_from_json(const Json& j) {
    return {polynomial_from_json(field(j, "numerator")), integer_field<int>(j, "pole_order")};
}

HilbertFunction hilbert_from_json(const Json& j) {
    return {polynomial_from_json(field(j, "numerator")), integer_field<int>(j, "n")};
}

VeroneseMatrix veronese_matrix_from_json(const Json& j) {
    VeroneseMatrix v{integer_field<long>(j, "base"), integer_field<int>(j, "n"),
                     matrix_from_json(field(j, "matrix"))};
    const auto size = static_cast<std::size_t>(v.n + 2);
    if (v.n < 0 || v.matrix.rows() != size || v.matrix.cols() != size) {
        throw DomainError("Veronese matrix shape does not match n");
    }
    return v;
}

SimulationConfig config_from_json(const Json& j) {
    SimulationConfig c{integer_field<long>(j, "base"), integer_field<int>(j, "addends"),
                       integer_field<std::size_t>(j, "columns"), integer_field<std::uint64_t>(j, "seed")};
    c.validate();
    return c;
}

CarrySequence sequence_from_json(const Json& j) {
    CarrySequence s{config_from_json(field(j, "config")), {}};
    const Json& carries = field(j, "carries");
    if (!carries.is_array()) throw ParseError("carries must be an array");
    for (const auto& c : carries) {
        if (!c.is_number_integer()) throw ParseError("carries must be integers");
        const int v = c.get<int>();
        if (v < 0 || v >= s.config.addends) throw DomainError("carry out of range");
        s.carries.push_back(v);
    }
    if (!s.carries.empty() && s.carries.front() != 0) throw DomainError("carry sequence must start at 0");
    return s;
}

std::string to_csv(const RatMatrix& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const auto row = m.row(i);
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j > 0) os << ',';
            os << row[j];
        }
        os << '\n';
    }
    return os.str();
}

Polynomial parse_coefficient_list(std::string_view text) {
    if (text.empty()) throw ParseError("empty coefficient list");
    std::vector<Rational> coeffs;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const auto token = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        coeffs.push_back(Rational::parse(token));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Polynomial(std::move(coeffs));
}

}  // namespace carries
