#include "doctest.h"

#include <map>
#include <random>

#include "acps/errors.hpp"
#include "acps/models.hpp"

using acps::ModelSpec;
using acps::Monomial;

namespace {

const char* kMinimal = R"({
  "variables": ["x"],
  "initial": [1.0],
  "alpha": 0.5,
  "equations": [[{"coeff": 2.0, "powers": [1]}]]
})";

std::string with_alpha(double alpha) {
    return R"({"variables": ["x"], "initial": [1], "alpha": )" + std::to_string(alpha) +
           R"(, "equations": [[{"coeff": 1, "powers": [1], "tpower": 0}]]})";
}

}  // namespace

TEST_CASE("sir_field structure") {
    const auto f = acps::sir_field(0.001, 0.072);
    REQUIRE(f.dimension() == 3);
    CHECK(f.equations()[0] == acps::TermList{Monomial{-0.001, {1, 1, 0}, 0}});
    CHECK(f.equations()[1] ==
          acps::TermList{Monomial{0.001, {1, 1, 0}, 0}, Monomial{-0.072, {0, 1, 0}, 0}});
    CHECK(f.equations()[2] == acps::TermList{Monomial{0.072, {0, 1, 0}, 0}});

    const std::vector<double> y = {0.0, 10.0, 0.0};
    const auto v = evaluate_field(f, 0.0, y);
    CHECK(v[0] == 0.0);
    CHECK(v[1] == doctest::Approx(-0.72).epsilon(1e-14));
    CHECK(v[2] == doctest::Approx(0.72).epsilon(1e-14));

    const std::vector<double> healthy = {500.0, 0.0, 30.0};
    for (double c : evaluate_field(acps::sir_field(0.3, 0.9), 0.0, healthy)) {
        CHECK(c == 0.0);
    }

    CHECK_THROWS_AS(acps::sir_field(0.0, 0.1), acps::DomainError);
    CHECK_THROWS_AS(acps::sir_field(0.1, -1.0), acps::DomainError);
}

TEST_CASE("sir_field terms cancel when the equations are summed") {
    std::map<std::vector<unsigned>, double> totals;
    const auto field = acps::sir_field(0.002, 0.05);
    for (const auto& eq : field.equations()) {
        for (const auto& m : eq) {
            totals[m.state_powers] += m.coeff;
        }
    }
    for (const auto& [powers, sum] : totals) {
        CHECK(sum == 0.0);
    }
}

TEST_CASE("shipped sir.json equals the builtin model") {
    const ModelSpec parsed = acps::load_model_file(ACPS_MODELS_DIR "/sir.json");
    CHECK(parsed == acps::sir_model());
    CHECK(acps::to_field(parsed) == acps::sir_field(0.001, 0.072));
    CHECK(parsed.initial == std::vector<double>{620.0, 10.0, 70.0});
    CHECK(parsed.alpha == 1.0);
    CHECK(parsed.t0 == 0.0);
}

TEST_CASE("optional fields default") {
    const ModelSpec spec = acps::parse_model_config(kMinimal);
    CHECK(spec.t0 == 0.0);
    CHECK(spec.equations[0][0].time_power == 0);
    CHECK(spec.alpha == 0.5);
}

TEST_CASE("validation errors") {
    CHECK_THROWS_WITH_AS(acps::parse_model_config(with_alpha(1.5)), "alpha out of (0,1]",
                         acps::ValidationError);
    CHECK_THROWS_AS(acps::parse_model_config(with_alpha(0.0)), acps::ValidationError);
    CHECK_THROWS_AS(acps::parse_model_config(
                        R"({"variables": ["x", "y"], "initial": [1, 2], "alpha": 1,
                            "equations": [[{"coeff": 1, "powers": [1]}], []]})"),
                    acps::ValidationError);
    CHECK_THROWS_AS(acps::parse_model_config(
                        R"({"variables": ["x"], "initial": [1, 2], "alpha": 1, "equations": [[]]})"),
                    acps::ValidationError);
    CHECK_THROWS_AS(acps::parse_model_config(
                        R"({"variables": ["x"], "initial": [1], "alpha": 1,
                            "equations": [[{"coeff": 1, "powers": [1], "tpower": 0.5}]]})"),
                    acps::ValidationError);
    CHECK_THROWS_AS(acps::parse_model_config(
                        R"({"variables": ["x"], "initial": [1], "alpha": 1,
                            "equations": [[{"coeff": 1, "powers": [-1]}]]})"),
                    acps::ValidationError);
    CHECK_THROWS_AS(acps::parse_model_config(
                        R"({"variables": ["x", "x"], "initial": [1, 1], "alpha": 1,
                            "equations": [[], []]})"),
                    acps::ValidationError);
}

TEST_CASE("parse errors carry context") {
    try {
        acps::parse_model_config("{\n  \"variables\": [\"x\"],\n  \"initial\": [1,,]\n}");
        FAIL("expected a parse error");
    } catch (const acps::ParseError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    try {
        acps::parse_model_config(
            R"({"variables": ["x"], "initial": [1], "alpha": 1, "beta": 2, "equations": [[]]})");
        FAIL("expected a parse error");
    } catch (const acps::ParseError& e) {
        CHECK(std::string(e.what()).find("'beta'") != std::string::npos);
    }
    try {
        acps::parse_model_config(
            R"({"variables": ["x"], "initial": [1], "alpha": 1,
                "equations": [[{"coeff": 1, "powers": [1], "scale": 3}]]})");
        FAIL("expected a parse error");
    } catch (const acps::ParseError& e) {
        CHECK(std::string(e.what()).find("equations[0][0].scale") != std::string::npos);
    }
    CHECK_THROWS_AS(acps::parse_model_config(R"({"variables": ["x"], "initial": ["1"], "alpha": 1, "equations": [[]]})"),
                    acps::ParseError);
    CHECK_THROWS_AS(acps::parse_model_config(R"({"variables": ["x"], "initial": [1], "equations": [[]]})"),
                    acps::ParseError);
    CHECK_THROWS_AS(acps::parse_model_config("[1, 2]"), acps::ParseError);
    CHECK_THROWS_AS(acps::load_model_file("/nonexistent/model.json"), acps::ParseError);
}

TEST_CASE("serialize / parse round trip") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> real(-10.0, 10.0);
    std::uniform_int_distribution<unsigned> small(0, 3);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t dim = 1 + trial % 4;
        ModelSpec spec;
        spec.alpha = std::uniform_real_distribution<double>(0.01, 1.0)(rng);
        spec.t0 = real(rng);
        for (std::size_t j = 0; j < dim; ++j) {
            spec.variable_names.push_back("v" + std::to_string(j));
            spec.initial.push_back(real(rng));
            acps::TermList terms(small(rng));
            for (auto& m : terms) {
                m.coeff = real(rng) * 1e-3;
                m.time_power = small(rng);
                for (std::size_t k = 0; k < dim; ++k) {
                    m.state_powers.push_back(small(rng));
                }
            }
            spec.equations.push_back(std::move(terms));
        }
        CHECK(acps::parse_model_config(acps::serialize_model_config(spec)) == spec);
    }
}
