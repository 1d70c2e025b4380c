#include "hankelasym/asymptotics.hpp"

#include <cmath>

#include "hankelasym/errors.hpp"
#include "hankelasym/special.hpp"

namespace hankelasym {

namespace {

using complexd = std::complex<double>;

constexpr double kPi = 3.14159265358979323846;

// (-i)^k, exact.
complexd minus_i_pow(int k) {
    switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, -1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, 1.0};
    }
}

complexd int_pow(complexd base, int e) {
    complexd acc(1.0, 0.0);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

} // namespace

TraceCoefficient mu_k(const Symbol& sym, int k) {
    if (k < 1) throw DomainError("mu_k: k >= 1 required");
    const double b = special::beta_half(k);
    const double inv_2pi2 = 1.0 / (2.0 * kPi * kPi);
    complexd mu;
    if (k % 2 == 1) {
        complexd k1 = sym.jump_height(CirclePoint(0.0));
        complexd km1 = sym.jump_height(CirclePoint(M_PI));
        mu = (int_pow(k1, k) + int_pow(km1, k)) * minus_i_pow(k) * b * inv_2pi2;
    } else {
        complexd acc = 0.0;
        for (const auto& j : sym.jumps()) {
            complexd kz = j.kappa;
            complexd kzbar = sym.jump_height(j.location.conjugate());
            acc += int_pow(kz * kzbar, k / 2);
        }
        mu = acc * minus_i_pow(k) * b * inv_2pi2;
    }
    return {k, mu};
}

AsymptoticPrediction gamma_exponent(const Symbol& sym, complexd beta, bool diagnostic) {
    double ab = std::abs(beta);
    if (ab > 1.0 + 1e-12)
        throw DomainError("gamma_exponent: |beta| <= 1 required");
    if (!diagnostic && ab >= 1.0)
        throw DomainError("gamma_exponent: |beta| < 1 required (diagnostic mode permits |beta| = 1)");

    const complexd minus_i(0.0, -1.0);
    complexd k1 = sym.jump_height(CirclePoint(0.0));
    complexd km1 = sym.jump_height(CirclePoint(M_PI));
    complexd linear =
        kPi * (special::arcsin_c(minus_i * beta * k1) + special::arcsin_c(minus_i * beta * km1));

    // arcsin^2(-i beta (kappa_z kappa_zbar)^{1/2}) evaluated through the even
    // series in the square -beta^2 kappa_z kappa_zbar, so no root is taken.
    complexd quadratic = 0.0;
    for (const auto& j : sym.jumps()) {
        complexd kzbar = sym.jump_height(j.location.conjugate());
        quadratic += special::arcsin_sq_of_square(-beta * beta * j.kappa * kzbar);
    }

    AsymptoticPrediction out;
    out.beta = beta;
    out.linear_part = linear;
    out.quadratic_part = quadratic;
    out.gamma_raw = linear + quadratic;
    out.exponent = out.gamma_raw / (2.0 * kPi * kPi);
    return out;
}

std::complex<double> mu_series_sum(const Symbol& sym, complexd beta) {
    double ab = std::abs(beta);
    if (ab >= 1.0) throw DomainError("mu_series_sum: |beta| < 1 required");
    if (ab == 0.0) return 0.0;
    complexd acc = 0.0, bp = 1.0;
    int small_run = 0;
    for (int k = 1; k <= 200000; ++k) {
        bp *= beta;
        complexd term = bp * mu_k(sym, k).mu / static_cast<double>(k);
        acc -= term;
        // odd-k coefficients can vanish identically, so one tiny term is not
        // enough to stop on
        small_run = std::abs(term) < 1e-14 ? small_run + 1 : 0;
        if (small_run >= 2 && k >= 4) return acc;
    }
    throw SeriesNotConverged("mu_series_sum: term budget exhausted");
}

} // namespace hankelasym
