#include "acps/models.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "acps/errors.hpp"

namespace acps {
namespace {

using nlohmann::json;

[[noreturn]] void field_error(const std::string& path, const std::string& what) {
    throw ParseError("model config: field '" + path + "': " + what);
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& path) {
    for (const auto& [key, value] : obj.items()) {
        if (!allowed.contains(key)) {
            field_error(path.empty() ? key : path + "." + key, "unknown field");
        }
    }
}

const json& require_key(const json& obj, const std::string& key, const std::string& path) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        field_error(path.empty() ? key : path + "." + key, "missing required field");
    }
    return *it;
}

double as_number(const json& v, const std::string& path) {
    if (!v.is_number()) {
        field_error(path, "expected a number");
    }
    return v.get<double>();
}

unsigned as_exponent(const json& v, const std::string& path) {
    if (v.is_number_float()) {
        throw ValidationError("model config: '" + path +
                              "' must be a non-negative integer (non-grid exponents are not supported)");
    }
    if (!v.is_number_integer()) {
        field_error(path, "expected a non-negative integer");
    }
    const auto value = v.get<long long>();
    if (value < 0) {
        throw ValidationError("model config: '" + path + "' must be a non-negative integer");
    }
    return static_cast<unsigned>(value);
}

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

Monomial parse_term(const json& j, const std::string& path) {
    if (!j.is_object()) {
        field_error(path, "expected an object {coeff, powers, tpower}");
    }
    reject_unknown_keys(j, {"coeff", "powers", "tpower"}, path);
    Monomial m;
    m.coeff = as_number(require_key(j, "coeff", path), path + ".coeff");
    const json& powers = require_key(j, "powers", path);
    if (!powers.is_array()) {
        field_error(path + ".powers", "expected an array of integers");
    }
    for (std::size_t k = 0; k < powers.size(); ++k) {
        m.state_powers.push_back(as_exponent(powers[k], path + ".powers[" + std::to_string(k) + "]"));
    }
    if (const auto it = j.find("tpower"); it != j.end()) {
        m.time_power = as_exponent(*it, path + ".tpower");
    }
    return m;
}

}  // namespace

PolynomialVectorField sir_field(double p1, double p2) {
    if (!(p1 > 0.0) || !(p2 > 0.0)) {
        throw DomainError("SIR rates must be positive");
    }
    std::vector<TermList> eqs = {
        {Monomial{-p1, {1, 1, 0}, 0}},
        {Monomial{p1, {1, 1, 0}, 0}, Monomial{-p2, {0, 1, 0}, 0}},
        {Monomial{p2, {0, 1, 0}, 0}},
    };
    return PolynomialVectorField(std::move(eqs), {"S", "I", "R"});
}

ModelSpec sir_model(double p1, double p2) {
    const PolynomialVectorField f = sir_field(p1, p2);
    return ModelSpec{f.variable_names(), {620.0, 10.0, 70.0}, f.equations(), 1.0, 0.0};
}

void validate_model(const ModelSpec& spec) {
    const std::size_t n = spec.variable_names.size();
    if (n == 0) {
        throw ValidationError("model needs at least one variable");
    }
    if (spec.initial.size() != n) {
        throw ValidationError("initial has " + std::to_string(spec.initial.size()) +
                              " values for " + std::to_string(n) + " variables");
    }
    if (spec.equations.size() != n) {
        throw ValidationError("equations has " + std::to_string(spec.equations.size()) +
                              " entries for " + std::to_string(n) + " variables");
    }
    if (!(spec.alpha > 0.0 && spec.alpha <= 1.0)) {
        throw ValidationError("alpha out of (0,1]");
    }
    if (!std::isfinite(spec.t0)) {
        throw ValidationError("t0 must be finite");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < spec.equations[i].size(); ++k) {
            if (spec.equations[i][k].state_powers.size() != n) {
                throw ValidationError("equations[" + std::to_string(i) + "][" + std::to_string(k) +
                                      "].powers length must equal the variable count (" +
                                      std::to_string(n) + ")");
            }
        }
    }
    std::set<std::string> seen;
    for (const auto& name : spec.variable_names) {
        if (name.empty() || !seen.insert(name).second) {
            throw ValidationError("variable names must be non-empty and distinct");
        }
    }
}

ModelSpec parse_model_config(std::string_view document) {
    json root;
    try {
        root = json::parse(document.begin(), document.end());
    } catch (const json::parse_error& e) {
        const auto [line, column] = line_and_column(document, e.byte);
        std::ostringstream msg;
        msg << "model config: line " << line << ", column " << column << ": " << e.what();
        throw ParseError(msg.str());
    }
    if (!root.is_object()) {
        throw ParseError("model config: top level must be an object");
    }
    reject_unknown_keys(root, {"variables", "initial", "alpha", "t0", "equations"}, "");

    ModelSpec spec;
    const json& vars = require_key(root, "variables", "");
    if (!vars.is_array()) {
        field_error("variables", "expected an array of strings");
    }
    for (std::size_t k = 0; k < vars.size(); ++k) {
        if (!vars[k].is_string()) {
            field_error("variables[" + std::to_string(k) + "]", "expected a string");
        }
        spec.variable_names.push_back(vars[k].get<std::string>());
    }

    const json& initial = require_key(root, "initial", "");
    if (!initial.is_array()) {
        field_error("initial", "expected an array of numbers");
    }
    for (std::size_t k = 0; k < initial.size(); ++k) {
        spec.initial.push_back(as_number(initial[k], "initial[" + std::to_string(k) + "]"));
    }

    spec.alpha = as_number(require_key(root, "alpha", ""), "alpha");
    if (const auto it = root.find("t0"); it != root.end()) {
        spec.t0 = as_number(*it, "t0");
    }

    const json& eqs = require_key(root, "equations", "");
    if (!eqs.is_array()) {
        field_error("equations", "expected an array of term arrays");
    }
    for (std::size_t i = 0; i < eqs.size(); ++i) {
        const std::string path = "equations[" + std::to_string(i) + "]";
        if (!eqs[i].is_array()) {
            field_error(path, "expected an array of terms");
        }
        TermList terms;
        for (std::size_t k = 0; k < eqs[i].size(); ++k) {
            terms.push_back(parse_term(eqs[i][k], path + "[" + std::to_string(k) + "]"));
        }
        spec.equations.push_back(std::move(terms));
    }

    validate_model(spec);
    return spec;
}

ModelSpec load_model_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open model file " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_model_config(buf.str());
}

std::string serialize_model_config(const ModelSpec& spec) {
    json eqs = json::array();
    for (const TermList& terms : spec.equations) {
        json list = json::array();
        for (const Monomial& m : terms) {
            list.push_back({{"coeff", m.coeff}, {"powers", m.state_powers}, {"tpower", m.time_power}});
        }
        eqs.push_back(std::move(list));
    }
    json root = {
        {"variables", spec.variable_names},
        {"initial", spec.initial},
        {"alpha", spec.alpha},
        {"t0", spec.t0},
        {"equations", std::move(eqs)},
    };
    return root.dump(2) + "\n";
}

PolynomialVectorField to_field(const ModelSpec& spec) {
    validate_model(spec);
    return PolynomialVectorField(spec.equations, spec.variable_names);
}

AcpsProblem to_problem(const ModelSpec& spec, std::size_t degree) {
    return AcpsProblem{to_field(spec), spec.initial, spec.alpha, spec.t0, degree};
}

}  // namespace acps
