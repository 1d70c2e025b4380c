#include "hankelasym/io.hpp"

#include <cmath>
#include <cstdio>

#include "hankelasym/errors.hpp"

namespace hankelasym::io {

namespace {

using complexd = std::complex<double>;
using nlohmann::json;

json complex_pair(complexd c) { return json::array({c.real(), c.imag()}); }

complexd pair_complex(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw ConfigError("expected [re, im] pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

} // namespace

std::string format_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

json symbol_to_json(const Symbol& sym) {
    switch (sym.builtin()) {
    case BuiltinTag::hilbert_psi: return json{{"builtin", "hilbert_psi"}};
    case BuiltinTag::indicator_eta: return json{{"builtin", "indicator_eta"}};
    default: break;
    }
    json jumps = json::array();
    for (const auto& jt : sym.jump_terms())
        jumps.push_back({{"theta", jt.location.theta()},
                         {"re", jt.coeff.real()},
                         {"im", jt.coeff.imag()}});
    json trig = json::array();
    for (const auto& tt : sym.smooth_part())
        trig.push_back({{"k", tt.k}, {"re", tt.coeff.real()}, {"im", tt.coeff.imag()}});
    return json{{"jumps", jumps}, {"trig", trig}};
}

Symbol symbol_from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("symbol: expected a JSON object");
    if (j.contains("builtin")) {
        if (j.size() != 1) throw ConfigError("symbol: 'builtin' excludes other keys");
        std::string name = j["builtin"].get<std::string>();
        if (name == "hilbert_psi") return Symbol::hilbert_psi();
        if (name == "indicator_eta") return Symbol::indicator_eta();
        throw ConfigError("symbol: unknown builtin '" + name + "'");
    }
    std::vector<Symbol::JumpTerm> jumps;
    std::vector<Symbol::TrigTerm> trig;
    if (j.contains("jumps")) {
        for (const auto& item : j["jumps"])
            jumps.push_back({complexd(item.at("re").get<double>(), item.at("im").get<double>()),
                             CirclePoint(item.at("theta").get<double>())});
    }
    if (j.contains("trig")) {
        for (const auto& item : j["trig"])
            trig.push_back({item.at("k").get<int>(),
                            complexd(item.at("re").get<double>(), item.at("im").get<double>())});
    }
    if (jumps.empty() && trig.empty())
        throw ConfigError("symbol: need 'builtin' or at least one of 'jumps'/'trig'");
    try {
        return Symbol::composite(std::move(jumps), std::move(trig));
    } catch (const DomainError& e) {
        throw ConfigError(std::string("symbol: ") + e.what());
    }
}

json prediction_to_json(const AsymptoticPrediction& p, const std::vector<TraceCoefficient>& mus) {
    json mu = json::array();
    for (const auto& m : mus)
        mu.push_back({{"k", m.k}, {"re", m.mu.real()}, {"im", m.mu.imag()}});
    return json{{"beta", complex_pair(p.beta)},
                {"exponent", complex_pair(p.exponent)},
                {"linear", complex_pair(p.linear_part)},
                {"quadratic", complex_pair(p.quadratic_part)},
                {"mu", mu}};
}

json report_to_json(const ConvergenceReport& rep) {
    json per_n = json::array();
    for (const auto& [n, v] : rep.per_n)
        per_n.push_back({{"n", n}, {"re", v.real()}, {"im", v.imag()}});
    json slopes = json::array();
    for (const auto& s : rep.slopes) slopes.push_back(complex_pair(s));
    return json{{"per_n", per_n},
                {"slopes", slopes},
                {"predicted_slope", complex_pair(rep.predicted_slope)},
                {"final_rel_err", rep.final_rel_err},
                {"trend_improving", rep.trend_improving}};
}

ConvergenceReport report_from_json(const json& j) {
    ConvergenceReport rep;
    for (const auto& item : j.at("per_n"))
        rep.per_n.emplace_back(item.at("n").get<int>(),
                               complexd(item.at("re").get<double>(), item.at("im").get<double>()));
    for (const auto& item : j.at("slopes")) rep.slopes.push_back(pair_complex(item));
    rep.predicted_slope = pair_complex(j.at("predicted_slope"));
    rep.final_rel_err = j.at("final_rel_err").get<double>();
    rep.trend_improving = j.at("trend_improving").get<bool>();
    return rep;
}

namespace {

void report_rows(std::string& out, const ConvergenceReport& rep) {
    for (std::size_t i = 0; i < rep.per_n.size(); ++i) {
        const auto& [n, v] = rep.per_n[i];
        out += std::to_string(n);
        out += ',' + format_g17(std::log(static_cast<double>(n)));
        out += ',' + format_g17(v.real());
        out += ',' + format_g17(v.imag());
        if (i == 0) {
            out += ",,,";
        } else {
            const complexd& s = rep.slopes[i - 1];
            out += ',' + format_g17(s.real());
            out += ',' + format_g17(s.imag());
            out += ',';
        }
        out += format_g17(rep.predicted_slope.real());
        out += ',' + format_g17(rep.predicted_slope.imag());
        if (i == 0) {
            out += ',';
        } else {
            double scale = std::max(std::abs(rep.predicted_slope), 1e-12);
            out += ',' + format_g17(std::abs(rep.slopes[i - 1] - rep.predicted_slope) / scale);
        }
        out += '\n';
    }
}

} // namespace

std::string report_to_csv(const ConvergenceReport& rep, const std::string& value_name) {
    std::string out = "N,logN,re_" + value_name + ",im_" + value_name +
                      ",slope_re,slope_im,pred_re,pred_im,rel_err\n";
    report_rows(out, rep);
    return out;
}

std::string samples_to_csv(const std::vector<std::pair<int, complexd>>& samples,
                           const std::string& value_name) {
    std::string out = "N,logN,re_" + value_name + ",im_" + value_name + "\n";
    for (const auto& [n, v] : samples) {
        out += std::to_string(n);
        out += ',' + format_g17(std::log(static_cast<double>(n)));
        out += ',' + format_g17(v.real());
        out += ',' + format_g17(v.imag());
        out += '\n';
    }
    return out;
}

std::string traces_to_csv(const std::vector<std::pair<int, ConvergenceReport>>& reports) {
    std::string out = "k,N,logN,re_trace,im_trace,slope_re,slope_im,pred_re,pred_im,rel_err\n";
    for (const auto& [k, rep] : reports) {
        std::string rows;
        report_rows(rows, rep);
        std::size_t pos = 0;
        while (pos < rows.size()) {
            std::size_t end = rows.find('\n', pos);
            out += std::to_string(k) + ',' + rows.substr(pos, end - pos) + '\n';
            pos = end + 1;
        }
    }
    return out;
}

std::string square_to_csv(const SquareCheckReport& rep) {
    std::string rows;
    report_rows(rows, rep.report);
    std::string out = "N,logN,re_logdet,im_logdet,slope_re,slope_im,pred_re,pred_im,rel_err,"
                      "disc_k1,disc_k2,disc_k3\n";
    std::size_t pos = 0, i = 0;
    while (pos < rows.size()) {
        std::size_t end = rows.find('\n', pos);
        out += rows.substr(pos, end - pos);
        const auto& d = rep.trace_discrepancy[i++];
        out += ',' + format_g17(d[0]) + ',' + format_g17(d[1]) + ',' + format_g17(d[2]) + '\n';
        pos = end + 1;
    }
    return out;
}

std::string gnuplot_two_column(const std::vector<std::pair<int, complexd>>& samples) {
    std::string out;
    for (const auto& [n, v] : samples) {
        out += format_g17(std::log(static_cast<double>(n)));
        out += ' ' + format_g17(v.real()) + '\n';
    }
    return out;
}

std::string matrix_to_csv(const Eigen::MatrixXcd& m) {
    std::string out;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (c > 0) out += ',';
            out += format_g17(m(r, c).real());
            out += ',' + format_g17(m(r, c).imag());
        }
        out += '\n';
    }
    return out;
}

} // namespace hankelasym::io
