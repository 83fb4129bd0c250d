#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_support.hpp"

#include "qig/io.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

using namespace qig;
using namespace qig::test;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    const std::string command = env + " " + QIG_CLI_PATH + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    while (std::size_t got = std::fread(buffer, 1, sizeof buffer, pipe))
        output.append(buffer, got);
    const int status = pclose(pipe);
    return RunResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::filesystem::path scratch_dir() {
    auto dir = std::filesystem::temp_directory_path() / "qig-cli-tests";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string write_doc(const std::string& name, const Matrix& m) {
    auto path = scratch_dir() / name;
    std::ofstream out(path);
    out << matrix_to_json(m).dump() << "\n";
    return path.string();
}

std::string write_text(const std::string& name, const std::string& text) {
    auto path = scratch_dir() / name;
    std::ofstream out(path);
    out << text;
    return path.string();
}

} // namespace

TEST_CASE("divergence prints the classical value on diagonal states") {
    std::string rho = write_doc("rho.json", diag2(0.5, 0.5));
    std::string sigma = write_doc("sigma.json", diag2(0.75, 0.25));

    RunResult same = run_cli("divergence " + rho + " " + rho);
    CHECK(same.exit_code == 0);
    CHECK(std::abs(std::stod(same.output)) < 1e-12);

    RunResult pair = run_cli("divergence " + rho + " " + sigma);
    CHECK(pair.exit_code == 0);
    CHECK(std::stod(pair.output) == doctest::Approx(0.14384103622589042).epsilon(1e-12));
}

TEST_CASE("divergence distinguishes parse, validation, and missing-file errors") {
    std::string rho = write_doc("rho.json", diag2(0.5, 0.5));

    std::string skew = write_text(
        "skew.json", R"({"n":2,"matrix":[[[0.5,0],[0.3,0]],[[0,0],[0.5,0]]]})");
    RunResult not_hermitian = run_cli("divergence " + skew + " " + rho);
    CHECK(not_hermitian.exit_code == 2);
    CHECK(not_hermitian.output.find("NotHermitian") != std::string::npos);

    std::string heavy = write_doc("heavy.json", diag2(0.9, 0.3));
    RunResult bad_trace = run_cli("divergence " + heavy + " " + rho);
    CHECK(bad_trace.exit_code == 3);
    CHECK(bad_trace.output.find("TraceNotOne") != std::string::npos);

    std::string singular = write_doc("singular.json", diag2(1.0, 0.0));
    RunResult degenerate = run_cli("divergence " + singular + " " + rho);
    CHECK(degenerate.exit_code == 3);
    CHECK(degenerate.output.find("Degenerate") != std::string::npos);

    CHECK(run_cli("divergence missing.json " + rho).exit_code == 2);
}

TEST_CASE("arc echoes endpoints and evaluates interior points") {
    std::string rho = write_doc("rho.json", diag2(0.5, 0.5));
    std::string sigma = write_doc("sigma.json", diag2(0.75, 0.25));

    RunResult at_zero = run_cli("arc " + rho + " " + sigma + " --t 0");
    CHECK(at_zero.exit_code == 0);
    json doc0 = json::parse(at_zero.output);
    CHECK(distance(parse_matrix_document(doc0).matrix, diag2(0.5, 0.5)) < 1e-15);
    CHECK(std::abs(doc0["alpha"].get<double>()) < 1e-13);

    RunResult mid = run_cli("arc " + rho + " " + sigma + " --t 0.5");
    json doc = json::parse(mid.output);
    Matrix point = parse_matrix_document(doc).matrix;
    const double total = std::sqrt(0.375) + std::sqrt(0.125);
    CHECK(point(0, 0).real() == doctest::Approx(std::sqrt(0.375) / total).epsilon(1e-13));
    CHECK(doc["alpha"].get<double>() == doctest::Approx(std::log(total)).epsilon(1e-12));

    RunResult grid = run_cli("arc " + rho + " " + sigma + " --grid 4");
    json docs = json::parse(grid.output);
    REQUIRE(docs.is_array());
    REQUIRE(docs.size() == 5);
    CHECK(distance(parse_matrix_document(docs[0]).matrix, diag2(0.5, 0.5)) < 1e-15);
    CHECK(distance(parse_matrix_document(docs[4]).matrix, diag2(0.75, 0.25)) < 1e-12);

    CHECK(run_cli("arc " + rho + " " + sigma).exit_code == 2);
    CHECK(run_cli("arc " + rho + " " + sigma + " --t 0.5 --grid 2").exit_code == 2);
}

TEST_CASE("chart commands invert each other through files") {
    std::string rho = write_doc("rho.json", diag2(0.5, 0.5));
    std::string sigma = write_doc("sigma.json", diag2(0.75, 0.25));

    RunResult zero = run_cli("chart " + rho + " " + rho);
    CHECK(parse_matrix_document(json::parse(zero.output)).matrix.norm() < 1e-13);

    RunResult chart_out = run_cli("chart " + rho + " " + sigma);
    const double half_log3 = 0.5 * std::log(3.0);
    Matrix a = parse_matrix_document(json::parse(chart_out.output)).matrix;
    CHECK(a(0, 0).real() == doctest::Approx(half_log3).epsilon(1e-13));

    std::string a_path = write_text("a.json", chart_out.output);
    RunResult recovered = run_cli("chart-inverse " + rho + " " + a_path);
    CHECK(distance(parse_matrix_document(json::parse(recovered.output)).matrix,
                   diag2(0.75, 0.25))
          < 1e-12);

    std::string uncentered = write_doc("uncentered.json", Matrix::Identity(2, 2));
    CHECK(run_cli("chart-inverse " + rho + " " + uncentered).exit_code == 4);
}

TEST_CASE("kubo commands apply the transform and its inverse") {
    std::string rho = write_doc("rho.json", diag2(0.75, 0.25));
    std::string x = write_doc("x.json", pauli_x());

    RunResult forward = run_cli("kubo " + rho + " " + x);
    Matrix k = parse_matrix_document(json::parse(forward.output)).matrix;
    CHECK(k(0, 1).real() == doctest::Approx(0.45511961331341866).epsilon(1e-13));

    std::string k_path = write_text("k.json", forward.output);
    RunResult inverse = run_cli("kubo-inverse " + rho + " " + k_path);
    CHECK(distance(parse_matrix_document(json::parse(inverse.output)).matrix, pauli_x())
          < 1e-12);
}

TEST_CASE("tangent and transport commands") {
    std::string rho = write_doc("rho.json", diag2(0.5, 0.5));
    std::string sigma = write_doc("sigma.json", diag2(0.75, 0.25));
    std::string v = write_doc("v.json", pauli_z());

    RunResult trivial = run_cli("tangent " + rho + " " + rho);
    CHECK(parse_matrix_document(json::parse(trivial.output)).matrix.norm() < 1e-13);

    RunResult mixture = run_cli("transport " + rho + " " + sigma + " " + v + " --kind m");
    CHECK(distance(parse_matrix_document(json::parse(mixture.output)).matrix, pauli_z())
          == 0.0);

    RunResult expo = run_cli("transport " + rho + " " + sigma + " " + v + " --kind e");
    CHECK(expo.exit_code == 0);
    Matrix moved = parse_matrix_document(json::parse(expo.output)).matrix;
    CHECK(std::abs(moved.trace()) < 1e-12);

    std::string not_traceless = write_doc("nt.json", Matrix::Identity(2, 2));
    CHECK(run_cli("transport " + rho + " " + sigma + " " + not_traceless + " --kind m")
              .exit_code
          == 4);
    CHECK(run_cli("transport " + rho + " " + sigma + " " + v + " --kind x").exit_code == 2);
}

TEST_CASE("potential command reports the value and the contact state") {
    std::string rho = write_doc("rho.json", diag2(0.5, 0.5));
    std::string a = write_doc("a.json", diag2(1.0, -1.0));
    RunResult result = run_cli("potential " + rho + " " + a);
    CHECK(result.exit_code == 0);
    json j = json::parse(result.output);
    CHECK(j["value"].get<double>()
          == doctest::Approx(std::log(std::cosh(1.0))).epsilon(1e-13));
    Matrix contact = parse_matrix_document(j["contact"]).matrix;
    const double top = std::exp(1.0) / (std::exp(1.0) + std::exp(-1.0));
    CHECK(contact(0, 0).real() == doctest::Approx(top).epsilon(1e-13));
}

TEST_CASE("metric tensor and coordinates commands") {
    std::string rho = write_doc("rho.json", diag2(0.5, 0.5));
    RunResult tensor = run_cli("metric-tensor " + rho);
    json g = json::parse(tensor.output);
    REQUIRE(g["entries"].size() == 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(g["entries"][i][j].get<double>()
                  == doctest::Approx(i == j ? 0.5 : 0.0).epsilon(1e-12));

    std::string sigma = write_doc("sigma.json", diag2(0.75, 0.25));
    RunResult coords = run_cli("coords " + sigma);
    json c = json::parse(coords.output);
    REQUIRE(c["coords"].size() == 3);
    CHECK(c["coords"][2].get<double>()
          == doctest::Approx(std::log(3.0) / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("random command is deterministic and emits valid states") {
    RunResult first = run_cli("random --n 3 --seed 9");
    RunResult second = run_cli("random --n 3 --seed 9");
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);

    std::string state = write_text("state.json", first.output);
    RunResult self = run_cli("divergence " + state + " " + state);
    CHECK(self.exit_code == 0);
    CHECK(std::abs(std::stod(self.output)) < 1e-12);

    CHECK(run_cli("random --seed 9").exit_code == 2);
}

TEST_CASE("selftest runs the suite and honors --json") {
    RunResult empty = run_cli("selftest --samples 0");
    CHECK(empty.exit_code == 0);

    RunResult small = run_cli("selftest --n 2 --samples 1 --seed 5");
    CHECK(small.exit_code == 0);
    CHECK(small.output.find("PASS") != std::string::npos);

    RunResult machine = run_cli("selftest --n 2 --samples 1 --seed 5 --json");
    CHECK(machine.exit_code == 0);
    json reports = json::parse(machine.output);
    REQUIRE(reports.is_array());
    CHECK(reports.size() >= 50);
    for (const json& r : reports) CHECK(r["passed"] == true);
}

TEST_CASE("validation tolerance is adjustable through QIG_TOL") {
    Matrix near = diag2(0.5 + 2.5e-9, 0.5 + 2.5e-9);
    std::string path = write_doc("near.json", near);
    CHECK(run_cli("divergence " + path + " " + path).exit_code == 3);
    RunResult relaxed = run_cli("divergence " + path + " " + path, "QIG_TOL=1e-6");
    CHECK(relaxed.exit_code == 0);
}
