#pragma once

#include <complex>

#include "hankelasym/symbol.hpp"

namespace hankelasym {

/// mu_k: the coefficient of log N in Tr H_N^k.
struct TraceCoefficient {
    int k;
    std::complex<double> mu;
};

/// Predicted determinant exponent built from the jump data of a symbol.
///
/// `gamma_raw` is the undivided value
///     pi (arcsin(-i beta kappa_1) + arcsin(-i beta kappa_{-1}))
///       + sum_{z in Omega} arcsin^2(-i beta (kappa_z kappa_zbar)^{1/2}),
/// split into `linear_part` and `quadratic_part`; `exponent` is
/// gamma_raw / (2 pi^2), the coefficient gamma with
/// log det(I_N - beta H_N) ~ -exponent * log N. Keeping both removes the
/// silent factor-of-2pi^2 ambiguity between the two common conventions.
struct AsymptoticPrediction {
    std::complex<double> beta;
    std::complex<double> gamma_raw;
    std::complex<double> exponent;
    std::complex<double> linear_part;
    std::complex<double> quadratic_part;
};

/// Trace coefficient of log N in Tr H_N^k:
///   k odd:  (kappa_1^k + kappa_{-1}^k) (-i)^k B(k/2,1/2) / (2 pi^2)
///   k even: sum_{z in Omega} (kappa_z kappa_zbar)^{k/2} (-i)^k B(k/2,1/2) / (2 pi^2)
TraceCoefficient mu_k(const Symbol& sym, int k);

/// The predicted exponent for |beta| < 1. `diagnostic` additionally permits
/// |beta| = 1 (the formula is evaluated without an accuracy claim there).
/// Throws DomainError outside the admissible range.
AsymptoticPrediction gamma_exponent(const Symbol& sym, std::complex<double> beta,
                                    bool diagnostic = false);

/// -sum_{k>=1} beta^k mu_k / k, the log N coefficient of log det obtained by
/// summing the trace series; equals -gamma_exponent(...).exponent.
std::complex<double> mu_series_sum(const Symbol& sym, std::complex<double> beta);

} // namespace hankelasym
