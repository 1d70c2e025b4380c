#include "hankelasym/special.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "hankelasym/errors.hpp"

namespace hankelasym::special {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Coefficients of Gamma(z)/Gamma(z + 1/2) ~ z^{-1/2} (1 + g1/z + g2/z^2 + ...).
constexpr double kGammaRatio[7] = {
    1.0, 1.0 / 8.0, 1.0 / 128.0, -5.0 / 1024.0, -21.0 / 32768.0,
    399.0 / 262144.0, 869.0 / 4194304.0};

// |v| above this threshold switches the series evaluators from plain
// geometric-tail summation to the asymptotic tail (the geometric bound
// would need more than ~10^6 terms).
constexpr double kBoundarySwitch = 0.99;

// Direct terms summed before attaching the asymptotic tail. 4096 keeps the
// truncated-expansion error of the Gamma-ratio asymptotics below 1e-16.
constexpr std::size_t kBoundaryDirectTerms = 4096;

GaussRule compute_gauss(int n) {
    GaussRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2 * j + 1) * x * p1 - j * p2) / (j + 1);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        r.nodes[i] = -x;
        r.nodes[n - 1 - i] = x;
        r.weights[i] = r.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
    return r;
}

// Composite Gauss-Legendre over [a, b] with `panels` equal panels.
template <typename F>
auto composite_gauss(const F& f, double a, double b, int panels, int order = 32)
    -> decltype(f(0.0)) {
    const GaussRule& rule = gauss_legendre(order);
    decltype(f(0.0)) total{};
    double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        double lo = a + p * h;
        double mid = lo + 0.5 * h, half = 0.5 * h;
        for (int i = 0; i < order; ++i)
            total += half * rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    return total;
}

// Panel-doubling refinement until two levels agree to a mixed
// absolute/relative tolerance.
template <typename F>
auto adaptive_gauss(const F& f, double a, double b, double tol, int start_panels = 4)
    -> decltype(f(0.0)) {
    auto prev = composite_gauss(f, a, b, start_panels);
    for (int panels = 2 * start_panels; panels <= 1024; panels *= 2) {
        auto cur = composite_gauss(f, a, b, panels);
        if (std::abs(cur - prev) <= tol * (1.0 + std::abs(cur))) return cur;
        prev = cur;
    }
    throw QuadratureNotConverged("adaptive quadrature did not settle");
}

// Tail sum_{m > M} v^m * scale * m^{-3/2} (c0 + c1/m + c2/m^2 + ...), where
// the c_k come from the Gamma-ratio asymptotics. `v_pow` must be v^M from the
// exact direct summation, reused to avoid re-raising v to a large power.
complexd beta_series_tail(complexd v, complexd v_pow, std::size_t direct_terms,
                          double scale, bool half_argument) {
    double a = static_cast<double>(direct_terms) + 1.0;
    complexd acc = 0.0;
    for (int k = 0; k < 7; ++k) {
        double ck = kGammaRatio[k] * (half_argument ? std::ldexp(1.0, k) : 1.0);
        acc += ck * lerch_phi(v, 1.5 + k, a);
    }
    return scale * (v_pow * v) * acc;
}

} // namespace

const GaussRule& gauss_legendre(int n) {
    if (n < 1) throw DomainError("gauss_legendre: order must be positive");
    static std::map<int, GaussRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_gauss(n)).first;
    return it->second;
}

double beta_half(int k) {
    if (k < 1) throw DomainError("beta_half: k >= 1 required");
    double x = 0.5 * k;
    return std::exp(std::lgamma(x) + std::lgamma(0.5) - std::lgamma(x + 0.5));
}

complexd arcsin_c(complexd w) {
    complexd iw(-w.imag(), w.real());
    complexd root = std::sqrt(complexd(1.0, 0.0) - w * w);
    complexd l = std::log(iw + root);
    return {l.imag(), -l.real()};
}

complexd lerch_phi(complexd v, double s, double a) {
    if (a <= 0.0) throw DomainError("lerch_phi: a > 0 required");
    double av = std::abs(v);
    if (av > 1.0 + 1e-12) throw DomainError("lerch_phi: |v| <= 1 required");
    if (av > 1.0) v /= av; // tolerance slack only; a true pole sits outside the disk
    if (s <= 1.0 && std::abs(v - 1.0) < 1e-15)
        throw DomainError("lerch_phi: divergent at v = 1 for s <= 1");
    // Substituting t = u^2 removes the t^{s-1} endpoint behaviour:
    //   Phi = (2/Gamma(s)) int_0^U u^{2s-1} e^{-a u^2} / (1 - v e^{-u^2}) du.
    // The denominator is evaluated as (1 - v) + v*(-expm1(-u^2)), which stays
    // accurate for v near 1 and small u. Geometrically shrinking panels
    // resolve the boundary layer at u ~ sqrt|1 - v| no matter how small.
    double U = std::sqrt(60.0 / a);
    complexd one_minus_v = complexd(1.0, 0.0) - v;
    auto integrand = [&](double u) -> complexd {
        double t = u * u;
        complexd den = one_minus_v + v * (-std::expm1(-t));
        return std::pow(u, 2.0 * s - 1.0) * std::exp(-a * t) / den;
    };
    auto octaves = [&](int order) {
        complexd total{};
        double hi = U;
        for (int j = 0; j < 64; ++j) {
            double lo = 0.5 * hi;
            total += composite_gauss(integrand, lo, hi, 1, order);
            hi = lo;
        }
        return total;
    };
    complexd coarse = octaves(24);
    complexd integral = octaves(32);
    if (std::abs(integral - coarse) > 1e-13 * (1.0 + std::abs(integral)))
        throw QuadratureNotConverged("lerch_phi: octave refinement gap");
    return 2.0 * integral / std::tgamma(s);
}

complexd series_S(complexd v, const SeriesEvalConfig& cfg) {
    double r = std::abs(v);
    if (r > 1.0 + 1e-12) throw DomainError("series_S: |v| <= 1 required");
    if (r == 0.0) return 0.0;
    const double inv_2pi2 = 1.0 / (2.0 * kPi * kPi);
    const bool boundary = r > kBoundarySwitch;
    const std::size_t cap =
        boundary ? std::min(cfg.max_terms, kBoundaryDirectTerms) : cfg.max_terms;
    if (boundary && cap < 32)
        throw SeriesNotConverged("series_S: max_terms too small for |v| near 1");

    complexd sum = 0.0, vp = 1.0;
    double beta_odd = kPi, beta_even = 2.0; // B(1/2,1/2), B(1,1/2)
    for (std::size_t m = 1; m <= cap; ++m) {
        vp *= v;
        double b;
        double x = 0.5 * static_cast<double>(m);
        if (m & 1) {
            b = beta_odd;
            beta_odd *= x / (x + 0.5);
        } else {
            b = beta_even;
            beta_even *= x / (x + 0.5);
        }
        double coeff = b * inv_2pi2 / static_cast<double>(m);
        sum += vp * coeff;
        if (!boundary && coeff * std::abs(vp) * r / (1.0 - r) < cfg.abs_tol)
            return sum;
    }
    if (!boundary) throw SeriesNotConverged("series_S: max_terms exhausted");
    // a_m = sqrt(2 pi)/(2 pi^2) m^{-3/2} (1 + 2 g1/m + 4 g2/m^2 + ...).
    double scale = std::sqrt(2.0 * kPi) * inv_2pi2;
    return sum + beta_series_tail(v, vp, cap, scale, /*half_argument=*/true);
}

complexd series_T(complexd v, const SeriesEvalConfig& cfg) {
    double r = std::abs(v);
    if (r > 1.0 + 1e-12) throw DomainError("series_T: |v| <= 1 required");
    if (r == 0.0) return 0.0;
    complexd w = v * v;
    double rw = std::abs(w);
    const double inv_4pi2 = 1.0 / (4.0 * kPi * kPi);
    const bool boundary = rw > kBoundarySwitch;
    const std::size_t cap =
        boundary ? std::min(cfg.max_terms, kBoundaryDirectTerms) : cfg.max_terms;
    if (boundary && cap < 32)
        throw SeriesNotConverged("series_T: max_terms too small for |v| near 1");

    complexd sum = 0.0, wp = 1.0;
    double beta = 2.0; // B(1,1/2)
    for (std::size_t m = 1; m <= cap; ++m) {
        wp *= w;
        double b = beta;
        double x = static_cast<double>(m);
        beta *= x / (x + 0.5);
        double coeff = b * inv_4pi2 / x;
        sum += wp * coeff;
        if (!boundary && coeff * std::abs(wp) * rw / (1.0 - rw) < cfg.abs_tol)
            return sum;
    }
    if (!boundary) throw SeriesNotConverged("series_T: max_terms exhausted");
    double scale = std::sqrt(kPi) * inv_4pi2;
    return sum + beta_series_tail(w, wp, cap, scale, /*half_argument=*/false);
}

complexd arcsin_sq_of_square(complexd u, const SeriesEvalConfig& cfg) {
    double r = std::abs(u);
    if (r > 1.0 + 1e-12) {
        complexd root = std::sqrt(u);
        complexd a = arcsin_c(root);
        return a * a;
    }
    if (r == 0.0) return 0.0;
    const bool boundary = r > kBoundarySwitch;
    const std::size_t cap =
        boundary ? std::min(cfg.max_terms, kBoundaryDirectTerms) : cfg.max_terms;
    if (boundary && cap < 32)
        throw SeriesNotConverged("arcsin_sq_of_square: max_terms too small for |u| near 1");

    // d_m = 4^m (m!)^2 / (2m)!; term_m = d_m u^m / (2 m^2).
    complexd sum = 0.0, up = 1.0;
    double d = 2.0; // d_1
    for (std::size_t m = 1; m <= cap; ++m) {
        up *= u;
        double x = static_cast<double>(m);
        double coeff = 0.5 * d / (x * x);
        sum += up * coeff;
        d *= (2.0 * x + 2.0) / (2.0 * x + 1.0);
        if (!boundary && coeff * std::abs(up) * r / (1.0 - r) < cfg.abs_tol)
            return sum;
    }
    if (!boundary) throw SeriesNotConverged("arcsin_sq_of_square: max_terms exhausted");
    // term_m = (sqrt(pi)/2) m^{-3/2} (1 + g1/m + g2/m^2 + ...).
    double scale = 0.5 * std::sqrt(kPi);
    return sum + beta_series_tail(u, up, cap, scale, /*half_argument=*/false);
}

double sech_integral(int m) {
    if (m < 1) throw DomainError("sech_integral: m >= 1 required");
    // sech^m(pi u) < 1e-18 beyond U.
    double U = (18.0 * std::log(10.0) + m * std::log(2.0)) / (kPi * m) + 1.0;
    auto integrand = [m](double u) {
        return std::pow(1.0 / std::cosh(kPi * u), m);
    };
    double integral = adaptive_gauss(integrand, 0.0, U, 1e-13, 8);
    return integral / kPi;
}

double log_integral(double v) {
    if (std::fabs(v) > 1.0 + 1e-12) throw DomainError("log_integral: |v| <= 1 required");
    if (v == 0.0) return 0.0;
    double U = 15.0; // |log(1 - v sech(pi u))| < 1e-19 beyond
    // log(1 - v sech x) = log((1-v) + (cosh x - 1)) - log(cosh x), with
    // cosh x - 1 = 2 sinh^2(x/2) so the v = 1 endpoint stays finite down to
    // u = 0
    auto integrand = [v](double u) {
        double x = kPi * u;
        double sh = std::sinh(0.5 * x);
        double cosh_m1 = 2.0 * sh * sh;
        return std::log((1.0 - v) + cosh_m1) - std::log1p(cosh_m1);
    };
    double integral;
    if (std::fabs(v) <= 0.999) {
        integral = adaptive_gauss(integrand, 0.0, U, 1e-13, 8);
    } else {
        // Geometric panels toward u = 0 absorb the log singularity at v = 1.
        integral = 0.0;
        double hi = U;
        for (int j = 0; j < 64; ++j) {
            double lo = hi * 0.5;
            integral += composite_gauss(integrand, lo, hi, 4);
            hi = lo;
        }
        // Remaining [0, hi] contributes ~ 2 hi log(hi) / pi, negligible.
    }
    return integral / kPi;
}

double digamma(double x) {
    if (!(x > 0.0)) throw DomainError("digamma: x > 0 required");
    double acc = 0.0;
    while (x < 14.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    double inv = 1.0 / x, inv2 = inv * inv;
    // ln x - 1/(2x) - sum_{n>=1} B_{2n}/(2n x^{2n})
    double series =
        inv2 * (1.0 / 12.0 -
                inv2 * (1.0 / 120.0 -
                        inv2 * (1.0 / 252.0 - inv2 * (1.0 / 240.0 - inv2 * (1.0 / 132.0)))));
    return acc + std::log(x) - 0.5 * inv - series;
}

double trigamma(double x) {
    if (!(x > 0.0)) throw DomainError("trigamma: x > 0 required");
    double acc = 0.0;
    while (x < 14.0) {
        acc += 1.0 / (x * x);
        x += 1.0;
    }
    double inv = 1.0 / x, inv2 = inv * inv;
    // 1/x + 1/(2x^2) + sum_{n>=1} B_{2n}/x^{2n+1}
    double series =
        inv * inv2 * (1.0 / 6.0 -
                      inv2 * (1.0 / 30.0 -
                              inv2 * (1.0 / 42.0 - inv2 * (1.0 / 30.0 - inv2 * (5.0 / 66.0)))));
    return acc + inv + 0.5 * inv2 + series;
}

} // namespace hankelasym::special
