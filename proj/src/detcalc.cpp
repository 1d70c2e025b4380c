#include "hankelasym/detcalc.hpp"

#include <algorithm>
#include <cmath>

#include "hankelasym/errors.hpp"
#include "hankelasym/parallel.hpp"
#include "hankelasym/special.hpp"

namespace hankelasym {

namespace {

using complexd = std::complex<double>;

constexpr double kPi = 3.14159265358979323846;

} // namespace

GridSpec GridSpec::dyadic(int nmin, int nmax) {
    GridSpec g;
    for (long long n = nmin; n <= nmax; n *= 2) g.n_values.push_back(static_cast<int>(n));
    g.validate();
    return g;
}

void GridSpec::validate() const {
    if (n_values.empty()) throw InsufficientData("GridSpec: empty grid");
    int prev = 1;
    for (int n : n_values) {
        if (n < 2) throw InsufficientData("GridSpec: dimensions must be >= 2");
        if (n <= prev) throw InsufficientData("GridSpec: dimensions must be strictly increasing");
        prev = n;
    }
}

std::complex<double> log_det_direct(const HankelTruncation& h, complexd beta, bool diagnostic) {
    double ab = std::abs(beta);
    if (ab > 1.0 + 1e-12) throw DomainError("log_det_direct: |beta| <= 1 required");
    if (!diagnostic && ab >= 1.0)
        throw DomainError("log_det_direct: |beta| < 1 required (diagnostic mode permits |beta| = 1)");
    complexd acc = 0.0;
    for (const complexd& lam : h.eigenvalues()) {
        complexd factor = complexd(1.0, 0.0) - beta * lam;
        if (std::abs(factor) < 1e-14)
            throw SingularMatrix("log_det_direct: factor 1 - beta*lambda vanishes");
        acc += std::log(factor);
    }
    return acc;
}

std::complex<double> log_det_series(const HankelTruncation& h, complexd beta, double tol) {
    double ab = std::abs(beta);
    if (ab >= 1.0) throw DomainError("log_det_series: |beta| < 1 required");
    if (ab == 0.0) return 0.0;
    const double hs = hs_norm_sq(h);
    const Eigen::VectorXcd& lam = h.eigenvalues();
    Eigen::VectorXcd powers = lam;
    complexd acc = 0.0, bp = 1.0;
    for (std::size_t k = 1; k <= 100000; ++k) {
        bp *= beta;
        acc -= bp * powers.sum() / static_cast<double>(k);
        double bound = hs * std::pow(ab, k + 1) / ((k + 1) * (1.0 - ab));
        if (k >= 2 && bound < tol) return acc;
        powers.array() *= lam.array();
    }
    throw SeriesNotConverged("log_det_series: 1e5 terms without meeting tol");
}

ConvergenceReport slope_estimate(const std::vector<std::pair<int, complexd>>& samples,
                                 std::optional<complexd> predicted) {
    if (samples.size() < 2) throw InsufficientData("slope_estimate: need at least 2 samples");
    for (std::size_t i = 1; i < samples.size(); ++i)
        if (samples[i].first <= samples[i - 1].first)
            throw InsufficientData("slope_estimate: N must be strictly increasing");

    ConvergenceReport rep;
    rep.per_n = samples;
    for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
        double dlog = std::log(static_cast<double>(samples[i + 1].first)) -
                      std::log(static_cast<double>(samples[i].first));
        rep.slopes.push_back((samples[i + 1].second - samples[i].second) / dlog);
    }
    if (predicted) {
        rep.predicted_slope = *predicted;
        double scale = std::max(std::abs(*predicted), 1e-12);
        rep.final_rel_err = std::abs(rep.slopes.back() - *predicted) / scale;
        if (rep.slopes.size() >= 3) {
            std::size_t m = rep.slopes.size();
            double e0 = std::abs(rep.slopes[m - 3] - *predicted);
            double e1 = std::abs(rep.slopes[m - 2] - *predicted);
            double e2 = std::abs(rep.slopes[m - 1] - *predicted);
            // slack keeps roundoff-flat errors (exactly linear data) improving
            double slack = 1e-12 + 1e-9 * std::abs(*predicted);
            rep.trend_improving = e1 <= e0 + slack && e2 <= e1 + slack;
        }
    }
    return rep;
}

ConvergenceReport verify(const Symbol& sym, complexd beta, const GridSpec& grid) {
    grid.validate();
    complexd predicted = -gamma_exponent(sym, beta).exponent;
    std::vector<std::pair<int, complexd>> samples(grid.n_values.size());
    detail::parallel_for(grid.n_values.size(), [&](std::size_t i) {
        int n = grid.n_values[i];
        HankelTruncation h = truncate(sym, n);
        samples[i] = {n, log_det_direct(h, beta)};
    });
    return slope_estimate(samples, predicted);
}

std::vector<std::pair<int, ConvergenceReport>> verify_traces(const Symbol& sym, int k_max,
                                                             const GridSpec& grid) {
    if (k_max < 1) throw DomainError("verify_traces: k_max >= 1 required");
    grid.validate();
    const std::size_t m = grid.n_values.size();
    std::vector<std::vector<complexd>> traces(m, std::vector<complexd>(k_max));
    detail::parallel_for(m, [&](std::size_t i) {
        HankelTruncation h = truncate(sym, grid.n_values[i]);
        for (int k = 1; k <= k_max; ++k) traces[i][k - 1] = trace_power(h, k);
    });
    std::vector<std::pair<int, ConvergenceReport>> out;
    out.reserve(k_max);
    for (int k = 1; k <= k_max; ++k) {
        std::vector<std::pair<int, complexd>> samples(m);
        for (std::size_t i = 0; i < m; ++i) samples[i] = {grid.n_values[i], traces[i][k - 1]};
        out.emplace_back(k, slope_estimate(samples, mu_k(sym, k).mu));
    }
    return out;
}

SquareCheckReport compressed_square_check(double beta, const GridSpec& grid) {
    if (beta < 0.0 || beta >= 1.0)
        throw DomainError("compressed_square_check: beta in [0, 1) required");
    grid.validate();
    const std::size_t m = grid.n_values.size();
    std::vector<std::pair<int, complexd>> samples(m);
    std::vector<std::array<double, 3>> disc(m);
    const Symbol hilbert = Symbol::hilbert_psi();
    detail::parallel_for(m, [&](std::size_t i) {
        int n = grid.n_values[i];
        Eigen::MatrixXd sq = compressed_square(n);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sq, Eigen::EigenvaluesOnly);
        if (es.info() != Eigen::Success)
            throw EigensolverFailed("compressed_square_check: eigensolver failed");
        const Eigen::VectorXd& nu = es.eigenvalues();
        double logdet = 0.0;
        for (int j = 0; j < n; ++j) logdet += std::log1p(-beta * beta * nu[j]);
        samples[i] = {n, complexd(logdet, 0.0)};

        // discrepancy |Tr M^k - Tr H_N^{2k}|, k = 1..3
        HankelTruncation h = truncate(hilbert, n);
        const Eigen::VectorXcd& lam = h.eigenvalues();
        double tr_h2 = 0.0, tr_h4 = 0.0, tr_h6 = 0.0;
        for (int j = 0; j < n; ++j) {
            double l2 = std::norm(lam[j]); // real spectrum; lambda^2
            tr_h2 += l2;
            tr_h4 += l2 * l2;
            tr_h6 += l2 * l2 * l2;
        }
        double tr_m1 = sq.trace();
        double tr_m2 = sq.squaredNorm();
        double tr_m3 = nu.array().cube().sum();
        disc[i] = {std::fabs(tr_m1 - tr_h2), std::fabs(tr_m2 - tr_h4), std::fabs(tr_m3 - tr_h6)};
    });
    double a = std::asin(beta);
    complexd predicted(-a * a / (kPi * kPi), 0.0);
    SquareCheckReport rep;
    rep.report = slope_estimate(samples, predicted);
    rep.trace_discrepancy = std::move(disc);
    return rep;
}

} // namespace hankelasym
