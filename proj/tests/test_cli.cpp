#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "acps/cli.hpp"
#include "acps/csv.hpp"
#include "acps/special_fn.hpp"
#include "paper_data.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = acps::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("acps_cli_test_" + name);
    fs::remove_all(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

double cell(const std::vector<acps::csv::Row>& rows, std::size_t r, std::size_t c) {
    return std::stod(rows.at(r).at(c));
}

}  // namespace

TEST_CASE("number formatting") {
    using acps::csv::format_number;
    CHECK(format_number(620.0) == "620");
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(-6.2) == "-6.2");
    CHECK(format_number(5.357913991618984e-07) == "5.357913991618984e-07");
    CHECK(format_number(std::nan("")) == "nan");
    for (double x : {1.0 / 3.0, 619.3630315791875, 4.860112312599085e-10, -1e300}) {
        const auto s = format_number(x);
        CHECK(std::stod(s) == x);
        std::size_t digits = 0;
        for (char ch : s.substr(0, s.find('e'))) {
            digits += (ch >= '0' && ch <= '9') ? 1 : 0;
        }
        CHECK(digits <= 17 + 1);  // leading "0." of small numbers
    }
    CHECK(acps::csv::render({"a", "b"}, {{"1", "2"}}) == "a,b\n1,2\n");
}

TEST_CASE("solve writes coefficients and samples") {
    const auto dir = scratch("solve");
    const auto r = run({"solve", "--model", "sir", "--alpha", "1", "--degree", "9", "--t-end", "1",
                        "--samples", "10", "--out-dir", dir.string()});
    REQUIRE(r.code == 0);
    const auto coeffs = acps::csv::read_file(dir / "coefficients.csv");
    REQUIRE(coeffs.size() == 31);
    CHECK(coeffs[0] == acps::csv::Row{"variable", "index", "coefficient"});
    for (std::size_t k = 0; k < 10; ++k) {
        CHECK(coeffs[1 + k][0] == "S");
        CHECK(coeffs[1 + k][1] == std::to_string(k));
        const double expected = acps::testdata::kSirS[k];
        CHECK(std::abs(cell(coeffs, 1 + k, 2) - expected) <= 1e-9 * std::abs(expected));
    }
    const auto samples = acps::csv::read_file(dir / "samples.csv");
    REQUIRE(samples.size() == 12);
    CHECK(samples[0] == acps::csv::Row{"t", "S", "I", "R"});
    CHECK(samples[4][0] == "0.3");
    CHECK(std::abs(cell(samples, 2, 1) - 619.3630315791875) <= 1e-9);
}

TEST_CASE("solve degree 0 gives constant samples") {
    const auto dir = scratch("solve0");
    REQUIRE(run({"solve", "--alpha", "1", "--degree", "0", "--out-dir", dir.string()}).code == 0);
    const auto samples = acps::csv::read_file(dir / "samples.csv");
    for (std::size_t r = 1; r < samples.size(); ++r) {
        CHECK(samples[r][1] == "620");
        CHECK(samples[r][2] == "10");
        CHECK(samples[r][3] == "70");
    }
}

TEST_CASE("solve at alpha 0.5, degree 2") {
    const auto dir = scratch("solve_half");
    REQUIRE(run({"solve", "--alpha", "0.5", "--degree", "2", "--paper-form", "--out-dir", dir.string()}).code == 0);
    const auto coeffs = acps::csv::read_file(dir / "coefficients.csv");
    CHECK(coeffs[0].size() == 4);
    // Row 3 is S, index 2; Gamma(1 + 2 * 0.5) = 1.
    CHECK(coeffs[3][1] == "2");
    CHECK(cell(coeffs, 3, 2) == doctest::Approx(-3.3356).epsilon(1e-13));
    CHECK(cell(coeffs, 2, 3) == doctest::Approx(-6.2).epsilon(1e-13));
}

TEST_CASE("solve with a model file and overrides") {
    const auto dir = scratch("solve_file");
    REQUIRE(run({"solve", "--model", ACPS_MODELS_DIR "/sir.json", "--out-dir", dir.string()}).code == 0);
    const auto builtin = scratch("solve_builtin");
    REQUIRE(run({"solve", "--out-dir", builtin.string()}).code == 0);
    CHECK(slurp(dir / "coefficients.csv") == slurp(builtin / "coefficients.csv"));

    const auto over = scratch("solve_override");
    REQUIRE(run({"solve", "--p1", "0.002", "--initial", "600,30,70", "--degree", "1", "--out-dir",
                 over.string()})
                .code == 0);
    const auto coeffs = acps::csv::read_file(over / "coefficients.csv");
    CHECK(cell(coeffs, 1, 2) == 600.0);
    CHECK(cell(coeffs, 2, 2) == doctest::Approx(-0.002 * 600 * 30));
}

TEST_CASE("usage and domain errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"solve", "--degree", "abc"}).code == 2);
    CHECK(run({"solve", "--alpha", "1.5", "--out-dir", scratch("bad").string()}).code == 2);
    CHECK(run({"solve", "--model", "/nonexistent.json"}).code == 2);
    CHECK(run({"solve", "--model", ACPS_MODELS_DIR "/sir.json", "--p1", "0.1"}).code == 2);
    CHECK(run({"solve", "--p1", "-1", "--out-dir", scratch("bad").string()}).code == 1);
    CHECK(run({"--help"}).code == 0);

    const auto c = run({"compare", "--alpha", "0.5", "--out-dir", scratch("cmp_bad").string()});
    CHECK(c.code == 1);
    CHECK(c.err.find("compare requires --alpha 1") != std::string::npos);

    CHECK(run({"conformable", "--beta", "0", "--alpha", "0.5", "--out-dir", scratch("conf_bad").string()}).code == 1);
    CHECK(run({"conformable", "--beta", "1"}).code == 2);
}

TEST_CASE("compare writes error tables") {
    const auto dir = scratch("compare");
    REQUIRE(run({"compare", "--out-dir", dir.string()}).code == 0);
    const auto s = acps::csv::read_file(dir / "compare_S.csv");
    REQUIRE(s.size() == 12);
    CHECK(s[0] == acps::csv::Row{"t", "reference", "acps", "abs_err", "rel_err"});
    CHECK(s[2][0] == "0.1");
    CHECK(cell(s, 2, 3) < 1e-8);
    const auto rfile = acps::csv::read_file(dir / "compare_R.csv");
    const double r_err = cell(rfile, 11, 3);
    CHECK(r_err > 6.041290134817245e-10);
    CHECK(r_err < 6.041290134817245e-8);

    const auto self = scratch("compare_self");
    REQUIRE(run({"compare", "--reference", "acps", "--out-dir", self.string()}).code == 0);
    for (const char* var : {"S", "I", "R"}) {
        const auto rows = acps::csv::read_file(self / (std::string("compare_") + var + ".csv"));
        for (std::size_t r = 1; r < rows.size(); ++r) {
            CHECK(rows[r][3] == "0");
            CHECK(rows[r][4] == "0");
        }
    }
    CHECK(run({"compare", "--rk-step", "0.03", "--out-dir", scratch("cmp_step").string()}).code == 1);
}

TEST_CASE("conformable report") {
    const auto dir = scratch("conf");
    REQUIRE(run({"conformable", "--beta", "2", "--alpha", "1", "--out-dir", dir.string()}).code == 0);
    const auto rows = acps::csv::read_file(dir / "conformable.csv");
    CHECK(rows[0] == acps::csv::Row{"field", "value"});
    CHECK(rows.back() == acps::csv::Row{"ratio", "1"});

    REQUIRE(run({"conformable", "--beta", "1", "--alpha", "0.5", "--out-dir", dir.string()}).code == 0);
    const auto half = acps::csv::read_file(dir / "conformable.csv");
    CHECK(std::stod(half.back()[1]) == doctest::Approx(1.1283791671).epsilon(1e-10));
}

TEST_CASE("identical invocations produce identical files") {
    const auto a = scratch("det_a");
    const auto b = scratch("det_b");
    for (const auto& d : {a, b}) {
        REQUIRE(run({"sweep", "--alpha", "0.6", "--alpha", "0.8", "--alpha", "1", "--out-dir", d.string()}).code == 0);
        REQUIRE(run({"compare", "--out-dir", d.string()}).code == 0);
    }
    for (const char* f : {"sweep_S.csv", "sweep_I.csv", "sweep_R.csv", "compare_S.csv"}) {
        CHECK(slurp(a / f) == slurp(b / f));
        CHECK_FALSE(slurp(a / f).empty());
    }
}

TEST_CASE("alpha sweep approaches the integer-order curve") {
    const auto dir = scratch("sweep");
    REQUIRE(run({"sweep", "--alpha", "0.6", "--alpha", "0.7", "--alpha", "0.8", "--alpha", "0.9",
                 "--alpha", "1.0", "--samples", "20", "--out-dir", dir.string()})
                .code == 0);
    for (const char* var : {"S", "I", "R"}) {
        const auto rows = acps::csv::read_file(dir / (std::string("sweep_") + var + ".csv"));
        REQUIRE(rows[0].size() == 6);
        CHECK(rows[0][1] == "alpha_0.6");
        std::vector<double> gap(5, 0.0);
        for (std::size_t r = 1; r < rows.size(); ++r) {
            for (std::size_t c = 1; c <= 4; ++c) {
                gap[c] = std::max(gap[c], std::abs(cell(rows, r, c) - cell(rows, r, 5)));
            }
        }
        CAPTURE(var);
        CHECK(gap[4] < gap[3]);
        CHECK(gap[3] < gap[2]);
        CHECK(gap[2] < gap[1]);
    }
}
