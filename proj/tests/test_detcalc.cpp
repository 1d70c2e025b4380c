#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "hankelasym/detcalc.hpp"
#include "hankelasym/errors.hpp"
#include "hankelasym/parallel.hpp"
#include "test_util.hpp"

using namespace hankelasym;
using testutil::cx_close;
using complexd = std::complex<double>;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Cofactor-expansion determinant, the small-N oracle.
complexd det_cofactor(const Eigen::MatrixXcd& m) {
    const int n = static_cast<int>(m.rows());
    if (n == 1) return m(0, 0);
    complexd acc = 0.0;
    double sign = 1.0;
    for (int c = 0; c < n; ++c) {
        Eigen::MatrixXcd minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c2 = 0; c2 < n; ++c2) {
                if (c2 == c) continue;
                minor(r - 1, cc++) = m(r, c2);
            }
        }
        acc += sign * m(0, c) * det_cofactor(minor);
        sign = -sign;
    }
    return acc;
}

} // namespace

TEST_CASE("GridSpec") {
    GridSpec g = GridSpec::dyadic(64, 4096);
    CHECK(g.n_values == std::vector<int>{64, 128, 256, 512, 1024, 2048, 4096});
    CHECK_NOTHROW(g.validate());
    CHECK_THROWS_AS(GridSpec{}.validate(), InsufficientData);
    CHECK_THROWS_AS((GridSpec{{4, 4}}.validate()), InsufficientData);
    CHECK_THROWS_AS((GridSpec{{1, 2}}.validate()), InsufficientData);
}

TEST_CASE("log_det_direct small cases") {
    Symbol psi = Symbol::hilbert_psi();
    HankelTruncation h1 = truncate(psi, 1);
    CHECK(std::abs(log_det_direct(h1, 0.0)) == 0.0);
    CHECK(cx_close(log_det_direct(h1, 0.5), std::log(1.0 - 0.5 / kPi), 1e-14));

    // 2x2 oracle: log(ad - bc) for I - beta H
    HankelTruncation h2 = truncate(psi, 2);
    for (double beta : {0.5, 0.9}) {
        double a = 1.0 - beta / kPi, d = 1.0 - beta / (3.0 * kPi);
        double b = -beta / (2.0 * kPi);
        CHECK(cx_close(log_det_direct(h2, beta), std::log(a * d - b * b), 1e-12));
    }
}

TEST_CASE("log_det_direct matches the cofactor oracle for N <= 6") {
    Symbol psi = Symbol::hilbert_psi();
    Symbol eta = Symbol::indicator_eta();
    Symbol m = model_symbol(CirclePoint(M_PI_2));
    for (int n = 2; n <= 6; ++n) {
        for (const Symbol* s : {&psi, &eta, &m}) {
            HankelTruncation h = truncate(*s, n);
            for (complexd beta : {complexd(0.9, 0.0), complexd(0.0, 0.5)}) {
                Eigen::MatrixXcd a = Eigen::MatrixXcd::Identity(n, n) - beta * h.entries();
                complexd oracle = det_cofactor(a);
                complexd got = std::exp(log_det_direct(h, beta));
                CHECK(std::abs(got - oracle) <= 1e-10 * std::abs(oracle));
            }
        }
    }
}

TEST_CASE("log_det routes agree") {
    Symbol psi = Symbol::hilbert_psi();
    Symbol eta = Symbol::indicator_eta();
    const complexd betas[] = {complexd(0.3, 0.0), complexd(0.9, 0.0), complexd(0.0, 0.5),
                              complexd(-0.7, 0.0)};
    for (int n : {16, 64, 256}) {
        for (const Symbol* s : {&psi, &eta}) {
            HankelTruncation h = truncate(*s, n);
            for (complexd beta : betas) {
                CHECK(std::abs(log_det_direct(h, beta) - log_det_series(h, beta, 1e-12)) <= 1e-9);
            }
        }
    }
}

TEST_CASE("log_det_direct structure for the Hilbert symbol") {
    Symbol psi = Symbol::hilbert_psi();
    // real, negative, decreasing in N for real beta in (0,1)
    double prev = 0.0;
    for (int n : {16, 32, 64, 128}) {
        HankelTruncation h = truncate(psi, n);
        complexd v = log_det_direct(h, 0.8);
        CHECK(std::fabs(v.imag()) <= 1e-10);
        CHECK(v.real() < 0.0);
        CHECK(v.real() < prev);
        prev = v.real();
    }
    // conjugation symmetry for complex beta
    HankelTruncation h = truncate(psi, 32);
    complexd beta(0.4, 0.3);
    CHECK(cx_close(log_det_direct(h, std::conj(beta)), std::conj(log_det_direct(h, beta)), 1e-10));
}

TEST_CASE("log_det error paths") {
    Symbol psi = Symbol::hilbert_psi();
    HankelTruncation h = truncate(psi, 8);
    CHECK_THROWS_AS(log_det_direct(h, complexd(1.0, 0.0)), DomainError);
    CHECK_NOTHROW(log_det_direct(h, complexd(1.0, 0.0), /*diagnostic=*/true));
    CHECK_THROWS_AS(log_det_direct(h, complexd(1.5, 0.0), true), DomainError);
    CHECK_THROWS_AS(log_det_series(h, complexd(1.0, 0.0), 1e-10), DomainError);
    // an extreme beta needs more than the term budget
    CHECK_THROWS_AS(log_det_series(h, complexd(0.99999, 0.0), 1e-14), SeriesNotConverged);

    // a vanishing determinant factor, reachable only in diagnostic mode:
    // the constant symbol 1 has H_1 = [[1]], so 1 - beta*lambda = 0 at beta = 1
    Symbol one = Symbol::composite({}, {{0, complexd(1.0, 0.0)}});
    HankelTruncation h1 = truncate(one, 1);
    CHECK_THROWS_AS(log_det_direct(h1, complexd(1.0, 0.0), true), SingularMatrix);

    CHECK_THROWS_AS(mu_series_sum(psi, complexd(0.9999999, 0.0)), SeriesNotConverged);
}

TEST_CASE("thread cap honors the environment variable") {
    setenv("HANKEL_ASYM_THREADS", "3", 1);
    CHECK(detail::max_threads() == 3);
    setenv("HANKEL_ASYM_THREADS", "bogus", 1);
    CHECK(detail::max_threads() >= 1);
    unsetenv("HANKEL_ASYM_THREADS");
    CHECK(detail::max_threads() >= 1);
}

TEST_CASE("slope_estimate on synthetic data") {
    // exact c log N (+ offset): every slope equals c
    std::vector<std::pair<int, complexd>> lin, off, decay;
    const complexd c(2.0, -0.5);
    for (int n : {64, 128, 256, 512, 1024, 2048, 4096}) {
        double ln = std::log(static_cast<double>(n));
        lin.emplace_back(n, c * ln);
        off.emplace_back(n, c * ln + complexd(3.0, 1.0));
        decay.emplace_back(n, 2.0 * ln + 5.0 / std::sqrt(static_cast<double>(n)));
    }
    for (const auto& samples : {lin, off}) {
        ConvergenceReport rep = slope_estimate(samples, c);
        CHECK(rep.slopes.size() == samples.size() - 1);
        for (const auto& s : rep.slopes) CHECK(cx_close(s, c, 1e-12));
        CHECK(rep.final_rel_err <= 1e-12);
        CHECK(rep.trend_improving);
    }
    // decaying perturbation: slopes converge to 2 with improving trend
    ConvergenceReport rep = slope_estimate(decay, complexd(2.0, 0.0));
    CHECK(rep.trend_improving);
    CHECK(std::abs(rep.slopes.back() - complexd(2.0, 0.0)) < 0.05);
    CHECK(std::abs(rep.slopes.back() - 2.0) < std::abs(rep.slopes.front() - 2.0));

    CHECK_THROWS_AS(slope_estimate({{64, complexd(1.0, 0.0)}}), InsufficientData);
    CHECK_THROWS_AS(slope_estimate({{64, complexd(1.0, 0.0)}, {64, complexd(2.0, 0.0)}}),
                    InsufficientData);
}

TEST_CASE("verify attaches the predicted slope") {
    Symbol psi = Symbol::hilbert_psi();
    GridSpec grid{{16, 32, 64, 128}};
    ConvergenceReport rep = verify(psi, 0.5, grid);
    CHECK(cx_close(rep.predicted_slope, -gamma_exponent(psi, 0.5).exponent, 1e-15));
    CHECK(rep.per_n.size() == 4);
    CHECK(rep.slopes.size() == 3);
    // beta = 0: all values and the prediction vanish
    ConvergenceReport zero = verify(psi, 0.0, grid);
    for (const auto& [n, v] : zero.per_n) CHECK(std::abs(v) == 0.0);
    CHECK(std::abs(zero.predicted_slope) == 0.0);
}

TEST_CASE("verify slope sign flips for negative beta") {
    Symbol psi = Symbol::hilbert_psi();
    GridSpec grid{{64, 128, 256, 512}};
    ConvergenceReport rep = verify(psi, -0.5, grid);
    CHECK(rep.slopes.back().real() > 0.0);
    CHECK(rep.predicted_slope.real() > 0.0);
}

TEST_CASE("verify_traces for the Hilbert symbol") {
    Symbol psi = Symbol::hilbert_psi();
    GridSpec grid{{64, 128, 256, 512, 1024}};
    auto reports = verify_traces(psi, 2, grid);
    CHECK(reports.size() == 2);
    CHECK(reports[0].first == 1);
    // k = 1: the slope is already within a fraction of a percent at N = 1024
    CHECK(reports[0].second.final_rel_err < 0.02);
    CHECK(cx_close(reports[0].second.predicted_slope, 1.0 / (2.0 * kPi), 1e-14));
    // k = 2
    CHECK(reports[1].second.final_rel_err < 0.05);
    CHECK(cx_close(reports[1].second.predicted_slope, 1.0 / (kPi * kPi), 1e-14));
}

TEST_CASE("verify_traces sees a bounded trace for a lone rotated jump") {
    Symbol mi = model_symbol(CirclePoint(M_PI_2));
    GridSpec grid{{64, 128, 256, 512}};
    auto reports = verify_traces(mi, 1, grid);
    CHECK(std::abs(reports[0].second.predicted_slope) == 0.0);
    // Tr H_N(psi_i) converges, so the log N slope dies out
    CHECK(std::abs(reports[0].second.slopes.back()) < 1e-3);
}

TEST_CASE("verify_traces matches mu_2 for an off-axis conjugate pair") {
    // complex non-symmetric truncations through the general eigensolver
    Symbol pair = Symbol::composite(
        {{complexd(0.5, 0.0), CirclePoint(kPi / 3.0)}, {complexd(0.0, 0.3), CirclePoint(-kPi / 3.0)}},
        {});
    GridSpec grid{{64, 128, 256, 512}};
    auto reports = verify_traces(pair, 2, grid);
    // odd power: no jumps at +-1, so the log N coefficient vanishes
    CHECK(std::abs(reports[0].second.predicted_slope) == 0.0);
    // even power: slope settles on (-i)^2 (ab) B(1,1/2)/pi^2 = -(ab) 2/pi^2
    const ConvergenceReport& k2 = reports[1].second;
    CHECK(cx_close(k2.predicted_slope, complexd(0.0, -0.3) / (kPi * kPi), 1e-14));
    CHECK(k2.final_rel_err < 0.01);
}

TEST_CASE("compressed_square_check") {
    GridSpec grid{{16, 32, 64, 128, 256}};
    SquareCheckReport rep = compressed_square_check(0.9, grid);
    double a = std::asin(0.9);
    CHECK(cx_close(rep.report.predicted_slope, -a * a / (kPi * kPi), 1e-14));
    CHECK(rep.trace_discrepancy.size() == grid.n_values.size());
    for (std::size_t i = 0; i < grid.n_values.size(); ++i) {
        int n = grid.n_values[i];
        // k = 1 discrepancy equals tail_hs(N) exactly
        CHECK(rep.trace_discrepancy[i][0] == doctest::Approx(tail_hs(n)).epsilon(1e-9));
        CHECK(rep.trace_discrepancy[i][0] < 0.08);
        // higher powers stay O(1) as well
        for (double d : rep.trace_discrepancy[i]) CHECK(d < 0.5);
    }
    // beta = 0 gives identically zero values
    SquareCheckReport zero = compressed_square_check(0.0, grid);
    for (const auto& [n, v] : zero.report.per_n) CHECK(std::abs(v) == 0.0);

    CHECK_THROWS_AS(compressed_square_check(1.0, grid), DomainError);
    CHECK_THROWS_AS(compressed_square_check(-0.1, grid), DomainError);
}
