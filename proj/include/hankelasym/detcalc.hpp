#pragma once

#include <array>
#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "hankelasym/asymptotics.hpp"
#include "hankelasym/hankel.hpp"
#include "hankelasym/symbol.hpp"

namespace hankelasym {

/// Strictly increasing list of truncation dimensions.
struct GridSpec {
    std::vector<int> n_values;

    /// Doubling grid nmin, 2 nmin, ..., <= nmax.
    static GridSpec dyadic(int nmin = 64, int nmax = 4096);

    /// Throws InsufficientData unless there are >= 1 entries, all >= 2,
    /// strictly increasing.
    void validate() const;
};

/// Per-N values of a quantity expected to grow like c * log N, together with
/// the finite-difference slope estimates
///     slope_i = (v(N_{i+1}) - v(N_i)) / (log N_{i+1} - log N_i)
/// and their comparison against a predicted slope. Consecutive differences
/// cancel the O(1) offsets the asymptotics do not control.
struct ConvergenceReport {
    std::vector<std::pair<int, std::complex<double>>> per_n;
    std::vector<std::complex<double>> slopes;
    std::complex<double> predicted_slope{};
    double final_rel_err = 0.0;
    bool trend_improving = false;
};

/// log det(I_N - beta H_N) = sum_i log(1 - beta lambda_i) with principal
/// logarithms; |beta| < 1 keeps every factor in the right half-plane.
/// `diagnostic` permits |beta| = 1. Throws SingularMatrix when a factor is
/// numerically zero.
std::complex<double> log_det_direct(const HankelTruncation& h, std::complex<double> beta,
                                    bool diagnostic = false);

/// Same quantity through the trace series -sum_k beta^k Tr H_N^k / k,
/// truncated once the rigorous tail bound
///     |tail| <= ||H_N||_2^2 |beta|^{M+1} / ((M+1)(1 - |beta|))
/// drops below tol.
std::complex<double> log_det_series(const HankelTruncation& h, std::complex<double> beta,
                                    double tol);

/// Finite-difference slope report from (N, value) samples. When `predicted`
/// is supplied, final_rel_err and trend_improving are filled in
/// (trend_improving needs at least three slope windows).
ConvergenceReport slope_estimate(const std::vector<std::pair<int, std::complex<double>>>& samples,
                                 std::optional<std::complex<double>> predicted = std::nullopt);

/// log det across the grid versus the predicted slope
/// -gamma_exponent(sym, beta).exponent. Grid points run in parallel.
ConvergenceReport verify(const Symbol& sym, std::complex<double> beta, const GridSpec& grid);

/// Tr H_N^k across the grid versus mu_k(sym), for each k = 1..k_max.
/// One truncation and one eigendecomposition per grid point, shared by all k.
std::vector<std::pair<int, ConvergenceReport>> verify_traces(const Symbol& sym, int k_max,
                                                             const GridSpec& grid);

/// Compressed-square experiment: log det(I_N - beta^2 1_N H^2 1_N) against
/// the predicted slope -arcsin^2(beta)/pi^2, plus the per-N discrepancies
/// |Tr M^k - Tr H_N^{2k}| for k = 1, 2, 3 (bounded in N; for k = 1 the
/// discrepancy equals tail_hs(N) exactly).
struct SquareCheckReport {
    ConvergenceReport report;
    std::vector<std::array<double, 3>> trace_discrepancy;
};
SquareCheckReport compressed_square_check(double beta, const GridSpec& grid);

} // namespace hankelasym
