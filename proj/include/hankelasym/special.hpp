#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace hankelasym::special {

using complexd = std::complex<double>;

/// Termination control for the power-series evaluators.
struct SeriesEvalConfig {
    std::size_t max_terms = 1'000'000;
    double abs_tol = 1e-14;
};

/// B(k/2, 1/2) = Gamma(k/2) Gamma(1/2) / Gamma((k+1)/2), for k >= 1.
/// Positive and strictly decreasing in k; B(1/2,1/2) = pi, B(1,1/2) = 2.
double beta_half(int k);

/// Principal-branch complex arcsin, -i log(iw + sqrt(1 - w^2)) with the
/// principal square root and logarithm.
complexd arcsin_c(complexd w);

/// arcsin^2(v) evaluated as a function of u = v^2 through the even power
/// series
///     arcsin^2(v) = (1/2) sum_{m>=1} (m!)^2 4^m u^m / ((2m)! m^2),
/// which converges absolutely for |u| <= 1 and never selects a square-root
/// branch. For |u| > 1 falls back to (arcsin_c(sqrt(u)))^2.
complexd arcsin_sq_of_square(complexd u, const SeriesEvalConfig& cfg = {});

/// S(v) = sum_{m>=1} v^m B(m/2,1/2) / (2 pi^2 m), |v| <= 1.
/// Equals arcsin(v)/(2 pi) + arcsin^2(v)/(2 pi^2).
complexd series_S(complexd v, const SeriesEvalConfig& cfg = {});

/// T(v) = sum_{m>=1} v^{2m} B(m,1/2) / (4 pi^2 m), |v| <= 1.
/// Equals arcsin^2(v)/(2 pi^2).
complexd series_T(complexd v, const SeriesEvalConfig& cfg = {});

/// (1/pi) * integral_0^inf sech^m(pi u) du by quadrature; agrees with
/// beta_half(m)/(2 pi^2).
double sech_integral(int m);

/// (1/pi) * integral_0^inf log(1 - v sech(pi u)) du for v in [-1, 1];
/// equals -series_S(v). The endpoint v = 1 has an integrable logarithmic
/// singularity at u = 0, handled with geometrically shrinking panels.
double log_integral(double v);

/// Digamma psi(x) for x > 0.
double digamma(double x);

/// Trigamma psi'(x) = sum_{n>=0} (x+n)^{-2} for x > 0.
double trigamma(double x);

/// Lerch-type tail sum Phi(v, s, a) = sum_{n>=0} v^n (n+a)^{-s} for
/// |v| <= 1, a > 0 and s > 1, through the integral representation
///     Phi = (1/Gamma(s)) integral_0^inf t^{s-1} e^{-a t} / (1 - v e^{-t}) dt.
/// At v = 1 this is the Hurwitz zeta function zeta(s, a).
complexd lerch_phi(complexd v, double s, double a);

/// Gauss-Legendre nodes and weights on [-1, 1]; results are cached per n.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussRule& gauss_legendre(int n);

} // namespace hankelasym::special
