#include "hankelasym/selftest.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <random>

#include "hankelasym/asymptotics.hpp"
#include "hankelasym/detcalc.hpp"
#include "hankelasym/hankel.hpp"
#include "hankelasym/special.hpp"
#include "hankelasym/symbol.hpp"

namespace hankelasym {

namespace {

using complexd = std::complex<double>;

constexpr double kPi = 3.14159265358979323846;

struct Runner {
    std::ostream& out;
    bool all_ok = true;

    void check(const char* name, const std::function<bool()>& body) {
        bool ok = false;
        try {
            ok = body();
        } catch (const std::exception& e) {
            out << "[FAIL] " << name << " (exception: " << e.what() << ")\n";
            all_ok = false;
            return;
        }
        out << (ok ? "[ok]   " : "[FAIL] ") << name << "\n";
        if (!ok) all_ok = false;
    }
};

} // namespace

bool run_selftest(std::ostream& out) {
    Runner r{out};
    const Symbol hilbert = Symbol::hilbert_psi();
    const Symbol eta = Symbol::indicator_eta();

    r.check("prediction constant gamma(1)/(2 pi^2) = 3/8 for the Hilbert symbol", [&] {
        auto p = gamma_exponent(hilbert, 1.0, /*diagnostic=*/true);
        return std::abs(p.exponent - complexd(0.375, 0.0)) < 1e-12;
    });

    r.check("series S, T match their arcsin closed forms on the disk", [&] {
        for (int i = 0; i < 24; ++i) {
            double rad = (i % 4 == 3) ? 1.0 : 0.3 * (1 + i % 3);
            complexd v = std::polar(rad, kTwoPi * i / 24.0);
            complexd a = special::arcsin_c(v);
            if (std::abs(special::series_S(v) - (a / (2 * kPi) + a * a / (2 * kPi * kPi))) > 1e-10)
                return false;
            if (std::abs(special::series_T(v) - a * a / (2 * kPi * kPi)) > 1e-10) return false;
        }
        return true;
    });

    r.check("arcsin^2 is branch independent", [&] {
        std::mt19937 rng(7);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        for (int i = 0; i < 50; ++i) {
            complexd u = std::polar(unif(rng), kTwoPi * unif(rng));
            complexd s = std::sqrt(u);
            complexd ref = special::arcsin_sq_of_square(u);
            complexd a1 = special::arcsin_c(s), a2 = special::arcsin_c(-s);
            if (std::abs(ref - a1 * a1) > 1e-10 || std::abs(ref - a2 * a2) > 1e-10) return false;
        }
        return true;
    });

    r.check("sech integrals reproduce beta_half(m)/(2 pi^2), m <= 16", [&] {
        for (int m = 1; m <= 16; ++m)
            if (std::fabs(special::sech_integral(m) -
                          special::beta_half(m) / (2 * kPi * kPi)) > 1e-8)
                return false;
        return true;
    });

    r.check("log integral equals -S(v) at v = +-1/2", [&] {
        return std::fabs(special::log_integral(0.5) + 7.0 / 72.0) < 1e-8 &&
               std::fabs(special::log_integral(-0.5) - 5.0 / 72.0) < 1e-8;
    });

    r.check("quadrature and closed-form Fourier coefficients agree", [&] {
        const Symbol model = model_symbol(CirclePoint(M_PI_2));
        for (long long k : {0LL, 1LL, 5LL, 32LL, 128LL}) {
            for (const Symbol* s : {&hilbert, &eta, &model}) {
                if (std::abs(s->fourier_coefficient_quadrature(k) - s->fourier_coefficient(k)) >
                    1e-8)
                    return false;
            }
        }
        return true;
    });

    r.check("Hankel entries are constant along anti-diagonals", [&] {
        HankelTruncation h = truncate(eta, 24);
        for (int j = 0; j < 24; ++j)
            for (int k = 0; k < 24; ++k)
                if (h.entries()(j, k) != h.entries()(k, j)) return false;
        return true;
    });

    r.check("spectral norm of built-ins stays within 1 + 1e-8", [&] {
        return operator_norm(truncate(hilbert, 128)) <= 1.0 + 1e-8 &&
               operator_norm(truncate(eta, 128)) <= 1.0 + 1e-8;
    });

    r.check("rotated model truncation equals conjugated Hilbert truncation", [&] {
        const int n = 32;
        CirclePoint z(M_PI_2);
        HankelTruncation lhs = truncate(model_symbol(z), n);
        HankelTruncation hh = truncate(hilbert, n);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                complexd rhs =
                    z.unit_power(-j) * (hh.entries()(j, k) * complexd(0, -1)) * z.unit_power(-k);
                if (std::abs(lhs.entries()(j, k) - rhs) > 1e-14) return false;
            }
        return true;
    });

    r.check("direct and series log-determinants agree", [&] {
        for (int n : {16, 64}) {
            HankelTruncation h = truncate(hilbert, n);
            for (complexd beta : {complexd(0.3, 0.0), complexd(0.0, 0.5)}) {
                if (std::abs(log_det_direct(h, beta) - log_det_series(h, beta, 1e-12)) > 1e-9)
                    return false;
            }
        }
        return true;
    });

    r.check("mu series sums to the negated exponent", [&] {
        for (complexd beta : {complexd(0.5, 0.0), complexd(-0.5, 0.0), complexd(0.0, 0.5)}) {
            for (const Symbol* s : {&hilbert, &eta}) {
                complexd lhs = mu_series_sum(*s, beta);
                complexd rhs = -gamma_exponent(*s, beta).exponent;
                if (std::abs(lhs - rhs) > 1e-8) return false;
            }
        }
        return true;
    });

    out << (r.all_ok ? "selftest: all checks passed\n" : "selftest: FAILURES present\n");
    return r.all_ok;
}

} // namespace hankelasym
