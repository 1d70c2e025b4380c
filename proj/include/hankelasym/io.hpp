#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hankelasym/asymptotics.hpp"
#include "hankelasym/detcalc.hpp"
#include "hankelasym/hankel.hpp"
#include "hankelasym/symbol.hpp"

namespace hankelasym::io {

/// Doubles rendered with 17 significant digits and a lowercase exponent, so
/// repeated runs produce byte-identical reports.
std::string format_g17(double x);

/// Symbol schema: {"builtin": "hilbert_psi" | "indicator_eta"} or
/// {"jumps": [{"theta", "re", "im"}], "trig": [{"k", "re", "im"}]}.
nlohmann::json symbol_to_json(const Symbol& sym);
Symbol symbol_from_json(const nlohmann::json& j);

/// {"beta": [re,im], "exponent": [re,im], "linear": [re,im],
///  "quadratic": [re,im], "mu": [{"k", "re", "im"}, ...]}
nlohmann::json prediction_to_json(const AsymptoticPrediction& p,
                                  const std::vector<TraceCoefficient>& mus);

nlohmann::json report_to_json(const ConvergenceReport& rep);
ConvergenceReport report_from_json(const nlohmann::json& j);

/// Header: N,logN,re_logdet,im_logdet,slope_re,slope_im,pred_re,pred_im,rel_err
/// (slope and rel_err columns empty on the first row). `value_name` replaces
/// "logdet" in the header for trace reports.
std::string report_to_csv(const ConvergenceReport& rep, const std::string& value_name = "logdet");

/// Per-N values only: N,logN,re_<name>,im_<name>.
std::string samples_to_csv(const std::vector<std::pair<int, std::complex<double>>>& samples,
                           const std::string& value_name = "logdet");

/// Trace reports with a leading k column.
std::string traces_to_csv(const std::vector<std::pair<int, ConvergenceReport>>& reports);

/// Square-check report with trailing discrepancy columns disc_k1..disc_k3.
std::string square_to_csv(const SquareCheckReport& rep);

/// Two columns "logN re(value)" for gnuplot.
std::string gnuplot_two_column(const std::vector<std::pair<int, std::complex<double>>>& samples);

/// Row-major matrix dump; each entry as a "re,im" pair.
std::string matrix_to_csv(const Eigen::MatrixXcd& m);

} // namespace hankelasym::io
