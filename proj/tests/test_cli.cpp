#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef HANKEL_ASYM_CLI
#error "HANKEL_ASYM_CLI must point at the built binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args) {
    std::string out_path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                           "/hankel_asym_cli_out.txt";
    std::string cmd = std::string(HANKEL_ASYM_CLI) + " " + args + " > " + out_path + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return {code, slurp(out_path)};
}

} // namespace

TEST_CASE("predict emits the 3/8 constant in diagnostic mode") {
    RunResult r = run_cli("predict --builtin hilbert_psi --beta 1 --diagnostic");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(std::fabs(j["exponent"][0].get<double>() - 0.375) < 1e-12);
    CHECK(std::fabs(j["exponent"][1].get<double>()) < 1e-12);
    CHECK(j["mu"].size() == 8);
}

TEST_CASE("predict at beta = 0 is identically zero") {
    RunResult r = run_cli("predict --builtin indicator_eta --beta 0");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["exponent"][0].get<double>() == 0.0);
    CHECK(j["exponent"][1].get<double>() == 0.0);
}

TEST_CASE("verify writes the documented CSV with the predicted slope") {
    RunResult r = run_cli("verify --builtin hilbert_psi --beta 0.9 --nmin 16 --nmax 128");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("N,logN,re_logdet,im_logdet,slope_re,slope_im,pred_re,pred_im,rel_err\n",
                      0) == 0);
    // the prediction column carries -(pi asin(0.9) + asin^2(0.9))/(2 pi^2)
    double expect = -(M_PI * std::asin(0.9) + std::asin(0.9) * std::asin(0.9)) /
                    (2.0 * M_PI * M_PI);
    std::size_t line1 = r.out.find('\n') + 1;
    std::string row = r.out.substr(line1, r.out.find('\n', line1) - line1);
    // pred_re is the 7th field
    std::istringstream ss(row);
    std::string field;
    for (int i = 0; i < 7; ++i) std::getline(ss, field, ',');
    CHECK(std::fabs(std::stod(field) - expect) < 1e-12);
}

TEST_CASE("identical runs produce byte-identical reports") {
    RunResult a = run_cli("verify --builtin indicator_eta --beta 0.5 --nmin 8 --nmax 64");
    RunResult b = run_cli("verify --builtin indicator_eta --beta 0.5 --nmin 8 --nmax 64");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("json reports re-parse") {
    RunResult r = run_cli("verify --builtin hilbert_psi --beta 0.4 --nmin 8 --nmax 32 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.contains("per_n"));
    CHECK(j.contains("predicted_slope"));
    CHECK(j["per_n"].size() == 3);

    RunResult t = run_cli("traces --builtin hilbert_psi --kmax 2 --nmin 8 --nmax 32 --format json");
    REQUIRE(t.exit_code == 0);
    auto jt = nlohmann::json::parse(t.out);
    CHECK(jt.size() == 2);
    CHECK(jt[0]["k"] == 1);
}

TEST_CASE("square subcommand emits discrepancy columns") {
    RunResult r = run_cli("square --beta 0.5 --nmin 8 --nmax 32");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("disc_k1,disc_k2,disc_k3") != std::string::npos);
}

TEST_CASE("validation failures exit with code 2") {
    CHECK(run_cli("verify --builtin hilbert_psi --beta 1.0 --nmin 8 --nmax 16").exit_code == 2);
    CHECK(run_cli("predict --builtin nope --beta 0.5").exit_code == 2);
    CHECK(run_cli("predict --beta 0.5").exit_code == 2);
    CHECK(run_cli("predict --builtin hilbert_psi --beta abc").exit_code == 2);
    CHECK(run_cli("verify --builtin hilbert_psi --beta 0.5 --nmin 64 --nmax 8").exit_code == 2);

    // malformed symbol file
    std::string bad = "/tmp/hankel_asym_bad_symbol.json";
    std::ofstream(bad) << "{ not json";
    CHECK(run_cli("predict --symbol " + bad + " --beta 0.5").exit_code == 2);
    // sup-norm violation is a config error through the CLI
    std::ofstream(bad) << R"({"jumps": [{"theta": 0.0, "re": 2.0, "im": 0.0}]})";
    CHECK(run_cli("predict --symbol " + bad + " --beta 0.5").exit_code == 2);
}

TEST_CASE("symbol files round through the CLI") {
    std::string path = "/tmp/hankel_asym_symbol.json";
    std::ofstream(path) << R"({"jumps": [{"theta": 1.0471975511965976, "re": 0.0, "im": 0.5},
                               {"theta": 5.235987755982989, "re": 0.0, "im": -0.5}],
                               "trig": [{"k": 1, "re": 0.05, "im": 0.0}]})";
    RunResult r = run_cli("predict --symbol " + path + " --beta 0.8 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    // conjugate pair of jumps: purely quadratic exponent
    CHECK(std::fabs(j["linear"][0].get<double>()) < 1e-14);
    CHECK(std::fabs(j["quadratic"][0].get<double>()) > 0.0);
}

TEST_CASE("gnuplot and matrix dumps") {
    std::string plot = "/tmp/hankel_asym_plot.dat";
    std::string mat = "/tmp/hankel_asym_matrix.csv";
    RunResult r = run_cli("compute --builtin hilbert_psi --beta 0.5 --nmin 4 --nmax 8 --gnuplot " +
                          plot + " --dump-matrix " + mat);
    REQUIRE(r.exit_code == 0);
    std::string plot_text = slurp(plot);
    CHECK(plot_text.find(' ') != std::string::npos);
    // 8x8 matrix, one row per line, 16 comma-separated numbers each
    std::string mat_text = slurp(mat);
    int lines = 0;
    for (char c : mat_text) lines += (c == '\n');
    CHECK(lines == 8);
}

TEST_CASE("selftest passes") {
    CHECK(run_cli("selftest").exit_code == 0);
}
