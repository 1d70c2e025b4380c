#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hankelasym/asymptotics.hpp"
#include "hankelasym/detcalc.hpp"
#include "hankelasym/errors.hpp"
#include "hankelasym/hankel.hpp"
#include "hankelasym/io.hpp"
#include "hankelasym/selftest.hpp"
#include "hankelasym/symbol.hpp"

namespace {

using namespace hankelasym;
using complexd = std::complex<double>;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct RunConfig {
    enum class Command { predict, compute, verify, traces, square, selftest };
    enum class Format { csv, json };

    Command command = Command::selftest;
    std::optional<Symbol> symbol;
    complexd beta{};
    GridSpec grid;
    int kmax = 8;
    std::string output_path = "-";
    std::string gnuplot_path;
    std::string matrix_dump_path;
    Format format = Format::csv;
    bool diagnostic = false;
};

complexd parse_beta(const std::string& text) {
    std::size_t comma = text.find(',');
    try {
        if (comma == std::string::npos) return {std::stod(text), 0.0};
        return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw ConfigError("--beta expects RE or RE,IM, got '" + text + "'");
    }
}

Symbol load_symbol(const std::string& builtin, const std::string& file) {
    if (!builtin.empty() && !file.empty())
        throw ConfigError("--builtin and --symbol are mutually exclusive");
    if (!builtin.empty()) {
        nlohmann::json j{{"builtin", builtin}};
        return io::symbol_from_json(j);
    }
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw ConfigError("cannot open symbol file '" + file + "'");
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError("malformed symbol JSON: " + std::string(e.what()));
        }
        return io::symbol_from_json(j);
    }
    throw ConfigError("a symbol is required: --builtin NAME or --symbol FILE.json");
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output path '" + path + "'");
    out << content;
}

void require_beta_in_disk(const RunConfig& cfg) {
    double ab = std::abs(cfg.beta);
    if (cfg.diagnostic) {
        if (ab > 1.0 + 1e-12) throw ConfigError("|beta| <= 1 required even in diagnostic mode");
        if (ab >= 1.0)
            std::cerr << "warning: |beta| = 1 runs are diagnostic; the asymptotic formula is "
                         "unproven there\n";
        return;
    }
    if (ab >= 1.0) throw ConfigError("|beta| < 1 required (pass --diagnostic to allow |beta| = 1)");
}

int run(const RunConfig& cfg) {
    switch (cfg.command) {
    case RunConfig::Command::predict: {
        require_beta_in_disk(cfg);
        auto p = gamma_exponent(*cfg.symbol, cfg.beta, cfg.diagnostic);
        std::vector<TraceCoefficient> mus;
        for (int k = 1; k <= cfg.kmax; ++k) mus.push_back(mu_k(*cfg.symbol, k));
        write_output(cfg.output_path, io::prediction_to_json(p, mus).dump(2) + "\n");
        return kExitOk;
    }
    case RunConfig::Command::compute: {
        require_beta_in_disk(cfg);
        std::vector<std::pair<int, complexd>> samples;
        for (int n : cfg.grid.n_values) {
            HankelTruncation h = truncate(*cfg.symbol, n);
            samples.emplace_back(n, log_det_direct(h, cfg.beta, cfg.diagnostic));
            if (!cfg.matrix_dump_path.empty() && n == cfg.grid.n_values.back())
                write_output(cfg.matrix_dump_path, io::matrix_to_csv(h.entries()));
        }
        if (cfg.format == RunConfig::Format::csv) {
            write_output(cfg.output_path, io::samples_to_csv(samples));
        } else {
            nlohmann::json per_n = nlohmann::json::array();
            for (const auto& [n, v] : samples)
                per_n.push_back({{"n", n}, {"re", v.real()}, {"im", v.imag()}});
            write_output(cfg.output_path, nlohmann::json{{"per_n", per_n}}.dump(2) + "\n");
        }
        if (!cfg.gnuplot_path.empty()) write_output(cfg.gnuplot_path, io::gnuplot_two_column(samples));
        return kExitOk;
    }
    case RunConfig::Command::verify: {
        require_beta_in_disk(cfg);
        ConvergenceReport rep = verify(*cfg.symbol, cfg.beta, cfg.grid);
        write_output(cfg.output_path, cfg.format == RunConfig::Format::csv
                                          ? io::report_to_csv(rep)
                                          : io::report_to_json(rep).dump(2) + "\n");
        if (!cfg.gnuplot_path.empty()) write_output(cfg.gnuplot_path, io::gnuplot_two_column(rep.per_n));
        return kExitOk;
    }
    case RunConfig::Command::traces: {
        auto reports = verify_traces(*cfg.symbol, cfg.kmax, cfg.grid);
        if (cfg.format == RunConfig::Format::csv) {
            write_output(cfg.output_path, io::traces_to_csv(reports));
        } else {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& [k, rep] : reports)
                arr.push_back({{"k", k}, {"report", io::report_to_json(rep)}});
            write_output(cfg.output_path, arr.dump(2) + "\n");
        }
        return kExitOk;
    }
    case RunConfig::Command::square: {
        if (cfg.beta.imag() != 0.0) throw ConfigError("square expects a real beta in [0, 1)");
        SquareCheckReport rep = compressed_square_check(cfg.beta.real(), cfg.grid);
        if (cfg.format == RunConfig::Format::csv) {
            write_output(cfg.output_path, io::square_to_csv(rep));
        } else {
            nlohmann::json disc = nlohmann::json::array();
            for (const auto& d : rep.trace_discrepancy) disc.push_back({d[0], d[1], d[2]});
            nlohmann::json j{{"report", io::report_to_json(rep.report)},
                             {"trace_discrepancy", disc}};
            write_output(cfg.output_path, j.dump(2) + "\n");
        }
        if (!cfg.gnuplot_path.empty())
            write_output(cfg.gnuplot_path, io::gnuplot_two_column(rep.report.per_n));
        return kExitOk;
    }
    case RunConfig::Command::selftest:
        return run_selftest(std::cout) ? kExitOk : kExitNumerical;
    }
    return kExitConfig;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hankel truncations of jump symbols: log-determinants, trace powers and "
                 "their log N asymptotics"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string builtin, symbol_file, beta_text = "0", format_text = "csv";
    int nmin = 64, nmax = 4096;

    auto add_symbol_flags = [&](CLI::App* sub) {
        sub->add_option("--builtin", builtin, "built-in symbol: hilbert_psi or indicator_eta");
        sub->add_option("--symbol", symbol_file, "symbol description file (JSON)");
    };
    auto add_common = [&](CLI::App* sub, bool with_grid) {
        sub->add_option("--beta", beta_text, "determinant parameter, RE or RE,IM");
        sub->add_option("--out", cfg.output_path, "output path ('-' for stdout)");
        sub->add_option("--format", format_text, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_flag("--diagnostic", cfg.diagnostic, "permit |beta| = 1 (flagged, unproven)");
        if (with_grid) {
            sub->add_option("--nmin", nmin, "smallest dimension of the doubling grid");
            sub->add_option("--nmax", nmax, "largest dimension of the doubling grid");
        }
    };

    CLI::App* predict = app.add_subcommand("predict", "closed-form exponent and trace coefficients");
    add_symbol_flags(predict);
    add_common(predict, false);
    predict->add_option("--kmax", cfg.kmax, "number of trace coefficients in the report");

    CLI::App* compute = app.add_subcommand("compute", "log det(I - beta H_N) over the grid");
    add_symbol_flags(compute);
    add_common(compute, true);
    compute->add_option("--gnuplot", cfg.gnuplot_path, "two-column logN/value file");
    compute->add_option("--dump-matrix", cfg.matrix_dump_path,
                        "dump the largest truncation as CSV re,im pairs");

    CLI::App* verify_cmd = app.add_subcommand("verify", "measured slope versus prediction");
    add_symbol_flags(verify_cmd);
    add_common(verify_cmd, true);
    verify_cmd->add_option("--gnuplot", cfg.gnuplot_path, "two-column logN/value file");

    CLI::App* traces = app.add_subcommand("traces", "Tr H_N^k slopes versus mu_k");
    add_symbol_flags(traces);
    add_common(traces, true);
    traces->add_option("--kmax", cfg.kmax, "largest trace power");

    CLI::App* square = app.add_subcommand("square", "compressed-square determinant check");
    add_common(square, true);
    square->add_option("--gnuplot", cfg.gnuplot_path, "two-column logN/value file");

    app.add_subcommand("selftest", "run the built-in invariant suite");

    CLI11_PARSE(app, argc, argv);

    try {
        CLI::App* sub = app.get_subcommands().front();
        const std::string name = sub->get_name();
        if (name == "predict") cfg.command = RunConfig::Command::predict;
        else if (name == "compute") cfg.command = RunConfig::Command::compute;
        else if (name == "verify") cfg.command = RunConfig::Command::verify;
        else if (name == "traces") cfg.command = RunConfig::Command::traces;
        else if (name == "square") cfg.command = RunConfig::Command::square;
        else cfg.command = RunConfig::Command::selftest;

        cfg.beta = parse_beta(beta_text);
        cfg.format = format_text == "json" ? RunConfig::Format::json : RunConfig::Format::csv;
        if (cfg.command != RunConfig::Command::square &&
            cfg.command != RunConfig::Command::selftest)
            cfg.symbol = load_symbol(builtin, symbol_file);
        if (cfg.command != RunConfig::Command::predict &&
            cfg.command != RunConfig::Command::selftest) {
            if (nmin < 2 || nmax < nmin) throw ConfigError("need 2 <= nmin <= nmax");
            cfg.grid = GridSpec::dyadic(nmin, nmax);
        }
        return run(cfg);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const InsufficientData& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const Error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
}
