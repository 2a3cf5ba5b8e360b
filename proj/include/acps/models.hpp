#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "acps/acps_solver.hpp"
#include "acps/field_model.hpp"

namespace acps {

/// Parsed model configuration.
///
/// JSON schema (unknown keys are rejected):
///
///     {
///       "variables": ["S", "I", "R"],
///       "initial":   [620, 10, 70],
///       "alpha":     1.0,            // in (0, 1]
///       "t0":        0.0,            // optional, default 0
///       "equations": [               // one term list per variable
///         [ {"coeff": -0.001, "powers": [1, 1, 0], "tpower": 0} ],
///         ...
///       ]
///     }
///
/// `tpower` (optional, default 0) counts alpha-grid slots: the term carries
/// (t - t0)^{tpower * alpha}.
struct ModelSpec {
    std::vector<std::string> variable_names;
    std::vector<double> initial;
    std::vector<TermList> equations;
    double alpha = 1.0;
    double t0 = 0.0;

    friend bool operator==(const ModelSpec&, const ModelSpec&) = default;
};

inline constexpr double kSirInfectionRate = 0.001;
inline constexpr double kSirRecoveryRate = 0.072;

/// D^a S = -p1 S I,  D^a I = p1 S I - p2 I,  D^a R = p2 I.
/// Throws DomainError unless both rates are positive.
PolynomialVectorField sir_field(double p1, double p2);

/// Built-in SIR model: S(0) = 620, I(0) = 10, R(0) = 70, alpha 1, t0 0.
ModelSpec sir_model(double p1 = kSirInfectionRate, double p2 = kSirRecoveryRate);

/// Throws ValidationError naming the violated invariant.
void validate_model(const ModelSpec& spec);

/// Throws ParseError (with line/column or field path) for malformed text and
/// ValidationError for invariant violations.
ModelSpec parse_model_config(std::string_view document);

ModelSpec load_model_file(const std::filesystem::path& path);

/// Inverse of parse_model_config; doubles are written round-trip exact.
std::string serialize_model_config(const ModelSpec& spec);

PolynomialVectorField to_field(const ModelSpec& spec);

AcpsProblem to_problem(const ModelSpec& spec, std::size_t degree);

}  // namespace acps
