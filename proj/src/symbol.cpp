#include "hankelasym/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hankelasym/errors.hpp"
#include "hankelasym/special.hpp"

namespace hankelasym {

namespace {

using complexd = std::complex<double>;

constexpr double kPi = 3.14159265358979323846;

// psi_z(e^{it}) = (1/pi) e^{-is} (pi - s) with s = (t - arg z) mod 2pi.
// The [0, 2pi) parametrization makes the value at s = 0 the right limit.
complexd psi_z_value(const CirclePoint& z, double t) {
    double s = CirclePoint::normalize(t - z.theta());
    return (1.0 / kPi) * std::polar(1.0, -s) * (kPi - s);
}

std::string complex_str(complexd c) {
    std::ostringstream os;
    os << c.real();
    if (c.imag() != 0.0) os << (c.imag() > 0 ? "+" : "") << c.imag() << "i";
    return os.str();
}

} // namespace

Symbol::Symbol(BuiltinTag tag, std::vector<JumpTerm> jump_terms, std::vector<TrigTerm> smooth,
               std::string id)
    : tag_(tag), jump_terms_(std::move(jump_terms)), smooth_(std::move(smooth)),
      id_(std::move(id)) {
    for (const auto& jt : jump_terms_) {
        bool merged = false;
        for (auto& j : jumps_) {
            if (j.location.same_point(jt.location)) {
                j.kappa += jt.coeff;
                merged = true;
                break;
            }
        }
        if (!merged) jumps_.push_back({jt.location, jt.coeff});
    }
}

Symbol Symbol::hilbert_psi() {
    return Symbol(BuiltinTag::hilbert_psi, {{complexd(0.0, 1.0), CirclePoint(0.0)}}, {},
                  "hilbert_psi");
}

Symbol Symbol::indicator_eta() {
    return Symbol(BuiltinTag::indicator_eta,
                  {{complexd(-0.5, 0.0), CirclePoint(M_PI_2)},
                   {complexd(0.5, 0.0), CirclePoint(3.0 * M_PI_2)}},
                  {}, "indicator_eta");
}

Symbol Symbol::composite(std::vector<JumpTerm> jumps, std::vector<TrigTerm> trig) {
    for (std::size_t i = 0; i < jumps.size(); ++i)
        for (std::size_t j = i + 1; j < jumps.size(); ++j)
            if (jumps[i].location.same_point(jumps[j].location))
                throw DomainError("Symbol: jump locations must be pairwise distinct");
    std::ostringstream id;
    id << "composite[" << jumps.size() << "j," << trig.size() << "t]";
    Symbol sym(BuiltinTag::none, std::move(jumps), std::move(trig), id.str());
    sym.validate();
    return sym;
}

Symbol model_symbol(CirclePoint z) {
    std::ostringstream id;
    id << "model_psi@" << z.theta();
    return Symbol(BuiltinTag::model_psi_z, {{complexd(1.0, 0.0), z}}, {}, id.str());
}

complexd Symbol::evaluate(double theta) const {
    double t = CirclePoint::normalize(theta);
    if (tag_ == BuiltinTag::indicator_eta) {
        // Right-limit convention at the two jumps: just past pi/2 the cosine
        // is negative; just past 3pi/2 it is positive.
        if (std::fabs(t - M_PI_2) < 1e-12) return 0.0;
        if (std::fabs(t - 3.0 * M_PI_2) < 1e-12) return 1.0;
        return std::cos(t) > 0.0 ? 1.0 : 0.0;
    }
    complexd acc = 0.0;
    for (const auto& jt : jump_terms_) acc += jt.coeff * psi_z_value(jt.location, t);
    for (const auto& tt : smooth_) acc += tt.coeff * CirclePoint(t).unit_power(tt.k);
    return acc;
}

complexd Symbol::jump_height(const CirclePoint& z) const {
    complexd acc = 0.0;
    for (const auto& j : jumps_)
        if (j.location.same_point(z)) acc += j.kappa;
    return acc;
}

complexd Symbol::fourier_coefficient(long long k) const {
    if (k < 0) throw DomainError("fourier_coefficient: k >= 0 required");
    if (tag_ == BuiltinTag::indicator_eta) {
        if (k == 0) return 0.5;
        switch (k % 4) {
        case 1: return complexd(1.0 / (kPi * static_cast<double>(k)), 0.0);
        case 3: return complexd(-1.0 / (kPi * static_cast<double>(k)), 0.0);
        default: return 0.0;
        }
    }
    complexd acc = 0.0;
    const double inv = 1.0 / (kPi * static_cast<double>(k + 1));
    // a psi_z contributes a conj(z)^k / (i pi (k+1)): the rotation z-bar in
    // the definition of psi_z shifts the defining integral by -arg z
    for (const auto& jt : jump_terms_)
        acc += jt.coeff * jt.location.unit_power(-k) * complexd(0.0, -1.0) * inv;
    for (const auto& tt : smooth_)
        if (tt.k == k) acc += tt.coeff;
    return acc;
}

complexd Symbol::fourier_coefficient_quadrature(long long k) const {
    if (k < 0) throw DomainError("fourier_coefficient_quadrature: k >= 0 required");
    // Arcs between consecutive jump locations; smooth integrand per arc.
    std::vector<double> cuts;
    for (const auto& j : jumps_) cuts.push_back(j.location.theta());
    std::sort(cuts.begin(), cuts.end());
    std::vector<std::pair<double, double>> arcs;
    if (cuts.empty()) {
        arcs.emplace_back(0.0, kTwoPi);
    } else {
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) arcs.emplace_back(cuts[i], cuts[i + 1]);
        arcs.emplace_back(cuts.back(), cuts.front() + kTwoPi);
    }

    const int order = 32;
    const auto& rule = special::gauss_legendre(order);
    auto integrate = [&](int panels_per_arc) {
        complexd total = 0.0;
        for (const auto& arc : arcs) {
            double h = (arc.second - arc.first) / panels_per_arc;
            for (int p = 0; p < panels_per_arc; ++p) {
                double mid = arc.first + (p + 0.5) * h, half = 0.5 * h;
                for (int i = 0; i < order; ++i) {
                    double t = mid + half * rule.nodes[i];
                    complexd osc = std::polar(1.0, -static_cast<double>(k) * t);
                    total += half * rule.weights[i] * evaluate(t) * osc;
                }
            }
        }
        return total / kTwoPi;
    };

    long long target = std::max<long long>(32, 4 * k);
    int panels = static_cast<int>((target + order - 1) / order);
    complexd coarse = integrate(panels);
    complexd fine = integrate(2 * panels);
    if (std::abs(coarse - fine) > 1e-8)
        throw QuadratureNotConverged("fourier_coefficient_quadrature: refinement gap > 1e-8");
    return fine;
}

double Symbol::sup_norm_grid(int grid_points) const {
    int g = std::max(grid_points, 4096);
    double sup = 0.0;
    for (int i = 0; i < g; ++i)
        sup = std::max(sup, std::abs(evaluate(kTwoPi * i / g)));
    return sup;
}

void Symbol::validate() const {
    for (const auto& j : jumps_)
        if (std::abs(j.kappa) > 1.0 + 1e-12)
            throw DomainError("Symbol: |kappa| <= 1 violated at jump " +
                              complex_str(j.kappa));
    double sup = sup_norm_grid();
    if (sup > 1.0 + 1e-9)
        throw DomainError("Symbol: sup-norm bound violated, grid sup = " +
                          std::to_string(sup));
}

} // namespace hankelasym
