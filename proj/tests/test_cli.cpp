#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "twistkit/checks.hpp"
#include "twistkit/errors.hpp"
#include "twistkit/modelfile.hpp"
#include "twistkit/zoo.hpp"

using namespace twistkit;

namespace {

const char* kHalfline = R"(# halfline model
MODEL
  coframe b0 b1 b2 b3
  coordinates x0
  dx x0 = b0
TWIST
  xi = ~b1, ~b2, ~b3
  F = b0^b1, b0^b2, b0^b3
  a = [[-x0, 0, 0], [0, -x0, 0], [0, 0, -x0]]
CHECKS
  validate_model
  validate_twist_data
)";

std::string run_cli(const std::string& args, int* exit_code) {
    const char* bin = std::getenv("TWISTKIT_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string(bin) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    *exit_code = WEXITSTATUS(status);
    return out;
}

std::string write_temp(const std::string& text, const std::string& name) {
    std::string path = "/tmp/twistkit_test_" + name + ".model";
    std::ofstream out(path, std::ios::binary);
    out << text;
    return path;
}

}  // namespace

TEST_CASE("parse a hand-written model file") {
    ModelFile f = parse_model_file(kHalfline);
    CHECK(f.model.coframe_names.size() == 4);
    CHECK(f.model.coordinates == std::vector<std::string>{"x0"});
    REQUIRE(f.twist.has_value());
    CHECK(f.twist->xi.size() == 3);
    CHECK(f.twist->F[0] == Form::basis({0, 1}));
    CHECK(f.checks.size() == 2);
    CHECK(validate_twist_data(f.model, *f.twist).ok());
}

TEST_CASE("degenerate wedge parses to the zero structure form") {
    ModelFile f = parse_model_file("MODEL\n  coframe e1 e2\n  d e1 = e1^e1\n");
    CHECK(f.model.structure[0].is_zero());
    CHECK(validate_model(f.model).ok());
}

TEST_CASE("semantic errors carry positions") {
    // Undeclared coframe symbol.
    try {
        parse_model_file("MODEL\n  coframe e1 e2\n  d e1 = e9^e2\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("e9") != std::string::npos);
        CHECK(e.line == 3);
    }
    // Non-square lifting matrix.
    CHECK_THROWS_AS(parse_model_file("MODEL\n  coframe e1 e2\nTWIST\n  xi = ~e1\n"
                                     "  F = 0\n  a = [[1, 0]]\n"),
                    ParseError);
    // Unknown check name.
    CHECK_THROWS_AS(parse_model_file("MODEL\n  coframe e1\nCHECKS\n  not_a_check\n"),
                    ParseError);
    // Check argument that does not resolve.
    CHECK_THROWS_AS(parse_model_file("MODEL\n  coframe e1 e2\nCHECKS\n  nijenhuis Q\n"),
                    ParseError);
}

TEST_CASE("print and parse are mutually inverse on registry examples") {
    for (const std::string name :
         {"halfline_t3", "kodaira_thurston", "skt_t2xt2_bundle", "skt_non_instanton",
          "hc_not_hkt_surrogate", "su2_su2", "hkt_instanton_t4xt4", "flat_torus(4)"}) {
        CAPTURE(name);
        NamedExample ex = make_example(name);
        std::string text = print_model_file(ex.file);
        ModelFile parsed = parse_model_file(text);
        CHECK(parsed == ex.file);
        CHECK(print_model_file(parsed) == text);
    }
}

TEST_CASE("shipped model files match the registry") {
    const char* dir = std::getenv("TWISTKIT_MODELS");
    REQUIRE(dir != nullptr);
    for (const std::string name : {"halfline_t3", "kodaira_thurston", "skt_t2xt2_bundle",
                                   "skt_non_instanton", "hc_not_hkt_surrogate", "su2_su2",
                                   "hkt_instanton_t4xt4"}) {
        CAPTURE(name);
        std::ifstream in(std::string(dir) + "/" + name + ".model", std::ios::binary);
        REQUIRE(in.good());
        std::ostringstream os;
        os << in.rdbuf();
        ModelFile parsed = parse_model_file(os.str());
        CHECK(parsed == make_example(name).file);
    }
}

TEST_CASE("run_checks keeps going after failures and reports in order") {
    NamedExample hc = make_example("hc_not_hkt_surrogate");
    std::vector<CheckReport> reports = run_checks(hc.file);
    REQUIRE(reports.size() == hc.file.checks.size());
    bool saw_fail = false;
    for (size_t k = 0; k < reports.size(); ++k) {
        CHECK(reports[k].name == hc.file.checks[k].name);
        if (reports[k].verdict == Verdict::Fail) saw_fail = true;
    }
    CHECK(saw_fail);
    CHECK(exit_code(reports) == 1);

    // Empty checks: empty report, exit 0.
    ModelFile empty = parse_model_file("MODEL\n  coframe e1\n");
    CHECK(run_checks(empty).empty());
    CHECK(exit_code(run_checks(empty)) == 0);
}

TEST_CASE("machine reports round-trip their key-value structure") {
    NamedExample hl = make_example("halfline_t3");
    auto reports = run_checks(hl.file);
    std::string machine = render_machine(reports, "halfline_t3.model", 7);
    std::istringstream is(machine);
    std::string line;
    std::getline(is, line);
    CHECK(line == "schema twistkit.report.v1");
    std::getline(is, line);
    CHECK(line == "seed 7");
    size_t checks = 0, ends = 0;
    bool summary = false;
    while (std::getline(is, line)) {
        if (line.rfind("check ", 0) == 0) ++checks;
        if (line == "end") ++ends;
        if (line.rfind("summary ", 0) == 0) summary = true;
    }
    CHECK(checks == reports.size());
    CHECK(ends == reports.size());
    CHECK(summary);
}

TEST_CASE("cli end to end") {
    int code = 0;

    // Passing file: exit 0 and the HKT witness appears.
    std::string out = run_cli("check " + write_temp(kHalfline, "ok"), &code);
    CHECK(code == 0);
    CHECK(out.find("[pass] validate_twist_data") != std::string::npos);

    // The halfline registry file shows the (2/x0) b123 witness.
    const char* models = std::getenv("TWISTKIT_MODELS");
    REQUIRE(models != nullptr);
    out = run_cli(std::string("check ") + models + "/halfline_t3.model", &code);
    CHECK(code == 1);  // the expected-fail is_instanton check is in the file
    CHECK(out.find("(2/x0)*b1^b2^b3") != std::string::npos);

    // Parse errors exit 2 with a position.
    std::string bad = write_temp("MODEL\n  coframe e1\n  d e1 = e9\n", "bad");
    out = run_cli("check " + bad, &code);
    CHECK(code == 2);
    CHECK(out.find("3:") != std::string::npos);

    // example --emit-model output reparses to the registry content.
    out = run_cli("example kodaira_thurston --emit-model", &code);
    CHECK(code == 0);
    CHECK(parse_model_file(out) == make_example("kodaira_thurston").file);

    // validate subcommand.
    out = run_cli("validate " + write_temp(kHalfline, "ok"), &code);
    CHECK(code == 0);

    // --only filters checks.
    out = run_cli("check --only validate_model " + write_temp(kHalfline, "ok"), &code);
    CHECK(code == 0);
    CHECK(out.find("validate_twist_data") == std::string::npos);
}

TEST_CASE("machine reports are byte-identical across runs") {
    const char* models = std::getenv("TWISTKIT_MODELS");
    REQUIRE(models != nullptr);
    for (const std::string name : {"halfline_t3", "su2_su2"}) {
        int c1 = 0, c2 = 0;
        std::string cmd = std::string("check --format machine ") + models + "/" + name + ".model";
        std::string a = run_cli(cmd, &c1);
        std::string b = run_cli(cmd, &c2);
        CHECK(a == b);
        CHECK(c1 == c2);
    }
}
