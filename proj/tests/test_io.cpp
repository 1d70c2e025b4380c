#include <doctest.h>

#include <complex>

#include "hankelasym/errors.hpp"
#include "hankelasym/io.hpp"
#include "test_util.hpp"

using namespace hankelasym;
using testutil::cx_close;
using complexd = std::complex<double>;

TEST_CASE("format_g17") {
    CHECK(io::format_g17(1.0 / 3.0) == "0.33333333333333331");
    CHECK(io::format_g17(0.0) == "0");
    CHECK(io::format_g17(1e-20) == "9.9999999999999995e-21");
}

TEST_CASE("symbol JSON round-trips") {
    Symbol psi = Symbol::hilbert_psi();
    auto j = io::symbol_to_json(psi);
    CHECK(j["builtin"] == "hilbert_psi");
    Symbol back = io::symbol_from_json(j);
    CHECK(back.builtin() == BuiltinTag::hilbert_psi);

    Symbol comp = Symbol::composite({{complexd(0.3, 0.2), CirclePoint(1.25)}},
                                    {{2, complexd(0.1, -0.1)}});
    Symbol comp2 = io::symbol_from_json(io::symbol_to_json(comp));
    CHECK(comp2.jump_terms().size() == 1);
    CHECK(comp2.jump_terms()[0].coeff == complexd(0.3, 0.2));
    CHECK(comp2.jump_terms()[0].location.same_point(CirclePoint(1.25)));
    CHECK(comp2.smooth_part().size() == 1);
    for (long long k : {0LL, 3LL, 9LL})
        CHECK(comp2.fourier_coefficient(k) == comp.fourier_coefficient(k));

    // model symbols serialize through the jumps form
    Symbol m = model_symbol(CirclePoint(2.0));
    Symbol m2 = io::symbol_from_json(io::symbol_to_json(m));
    CHECK(cx_close(m2.fourier_coefficient(5), m.fourier_coefficient(5), 1e-16));

    CHECK_THROWS_AS(io::symbol_from_json(nlohmann::json{{"builtin", "nope"}}), ConfigError);
    CHECK_THROWS_AS(io::symbol_from_json(nlohmann::json::array()), ConfigError);
    CHECK_THROWS_AS(io::symbol_from_json(nlohmann::json::object()), ConfigError);
    // invalid symbols surface as ConfigError through the JSON path
    nlohmann::json bad = {{"jumps", {{{"theta", 0.0}, {"re", 2.0}, {"im", 0.0}}}}};
    CHECK_THROWS_AS(io::symbol_from_json(bad), ConfigError);
}

TEST_CASE("prediction JSON shape") {
    Symbol psi = Symbol::hilbert_psi();
    auto p = gamma_exponent(psi, 0.5);
    std::vector<TraceCoefficient> mus;
    for (int k = 1; k <= 4; ++k) mus.push_back(mu_k(psi, k));
    auto j = io::prediction_to_json(p, mus);
    CHECK(j["beta"][0] == 0.5);
    CHECK(j["exponent"][0].get<double>() == doctest::Approx(7.0 / 72.0).epsilon(1e-12));
    CHECK(j["mu"].size() == 4);
    CHECK(j["mu"][0]["k"] == 1);
}

TEST_CASE("report JSON round-trips") {
    ConvergenceReport rep;
    rep.per_n = {{64, complexd(-1.0, 0.25)}, {128, complexd(-1.5, 0.5)}};
    rep.slopes = {complexd(-0.72, 0.36)};
    rep.predicted_slope = complexd(-0.7, 0.3);
    rep.final_rel_err = 0.09;
    rep.trend_improving = false;
    ConvergenceReport back = io::report_from_json(io::report_to_json(rep));
    CHECK(back.per_n == rep.per_n);
    CHECK(back.slopes == rep.slopes);
    CHECK(back.predicted_slope == rep.predicted_slope);
    CHECK(back.final_rel_err == rep.final_rel_err);
    CHECK(back.trend_improving == rep.trend_improving);
}

TEST_CASE("report CSV layout and determinism") {
    Symbol psi = Symbol::hilbert_psi();
    GridSpec grid{{8, 16, 32}};
    ConvergenceReport rep = verify(psi, 0.5, grid);
    std::string csv = io::report_to_csv(rep);
    CHECK(csv.rfind("N,logN,re_logdet,im_logdet,slope_re,slope_im,pred_re,pred_im,rel_err\n", 0) ==
          0);
    // first data row carries empty slope and rel_err fields
    std::size_t line1 = csv.find('\n') + 1;
    std::string row = csv.substr(line1, csv.find('\n', line1) - line1);
    CHECK(row.rfind("8,", 0) == 0);
    CHECK(row.find(",,,") != std::string::npos);
    // three data rows
    int rows = 0;
    for (char c : csv) rows += (c == '\n');
    CHECK(rows == 4);

    // identical runs produce byte-identical reports
    ConvergenceReport rep2 = verify(psi, 0.5, grid);
    CHECK(io::report_to_csv(rep2) == csv);

    std::string twocol = io::gnuplot_two_column(rep.per_n);
    CHECK(twocol.find(io::format_g17(std::log(8.0))) == 0);
}

TEST_CASE("matrix CSV dump") {
    Eigen::MatrixXcd m(2, 2);
    m << complexd(1.0, -2.0), complexd(0.5, 0.0), complexd(0.0, 1.0), complexd(-1.0, 0.25);
    std::string csv = io::matrix_to_csv(m);
    CHECK(csv == "1,-2,0.5,0\n0,1,-1,0.25\n");
}
