#pragma once

#include <complex>
#include <string>
#include <vector>

#include "hankelasym/circle.hpp"

namespace hankelasym {

/// One jump discontinuity of a symbol: location z on the unit circle and
/// height kappa_z = (f(z+) - f(z-)) / 2.
struct JumpSpec {
    CirclePoint location;
    std::complex<double> kappa;
};

enum class BuiltinTag { none, hilbert_psi, indicator_eta, model_psi_z };

/// A bounded function on the unit circle whose Fourier coefficients populate
/// a Hankel matrix. Symbols are immutable values; operations are pure.
///
/// The representable class is a finite combination of rotated Hilbert-type
/// jump terms plus a trigonometric polynomial,
///
///     f(e^{it}) = sum_j a_j psi_{z_j}(e^{it}) + sum_k t_k e^{ikt},
///
/// where psi_z(e^{it}) = psi(conj(z) e^{it}) / i has a single unit-height
/// jump at z and Hankel coefficients conj(z)^k / (i pi (k+1)). The indicator
/// built-in eta = 1_{cos t > 0} keeps its own exact closed forms (its
/// continuous remainder is not a trigonometric polynomial).
class Symbol {
public:
    struct JumpTerm {
        std::complex<double> coeff; // multiplies psi_z; equals kappa at z
        CirclePoint location;
    };
    struct TrigTerm {
        int k;
        std::complex<double> coeff;
    };

    /// The Hilbert-matrix symbol psi(e^{it}) = (i/pi) e^{-it} (pi - t);
    /// single jump at z = 1 of height i, coefficients 1/(pi (k+1)).
    static Symbol hilbert_psi();

    /// eta(e^{it}) = 1_{cos t > 0}; jumps of height -1/2 at i and +1/2 at -i,
    /// coefficients sin(pi k/2)/(pi k) with the convention 1/2 at k = 0.
    static Symbol indicator_eta();

    /// User symbol from jump terms and a trigonometric polynomial.
    /// Validates assumption-style invariants (see validate()).
    static Symbol composite(std::vector<JumpTerm> jumps, std::vector<TrigTerm> trig);

    /// f(e^{i theta}) with theta reduced mod 2pi. At a jump location the
    /// right limit f(z+) is returned.
    std::complex<double> evaluate(double theta) const;

    /// kappa_z = (f(z+) - f(z-))/2; zero off the jump set.
    std::complex<double> jump_height(const CirclePoint& z) const;

    /// Closed-form Fourier coefficient h(k), k >= 0.
    std::complex<double> fourier_coefficient(long long k) const;

    /// Independent validation path for h(k): the defining integral, split at
    /// every jump into arcs, composite Gauss-Legendre with at least
    /// max(32, 4k) nodes per arc and a two-level refinement check.
    /// Throws QuadratureNotConverged when the levels differ by more than 1e-8.
    std::complex<double> fourier_coefficient_quadrature(long long k) const;

    /// The jump set Omega with heights, one entry per distinct location.
    const std::vector<JumpSpec>& jumps() const { return jumps_; }

    const std::vector<JumpTerm>& jump_terms() const { return jump_terms_; }
    const std::vector<TrigTerm>& smooth_part() const { return smooth_; }
    BuiltinTag builtin() const { return tag_; }
    const std::string& id() const { return id_; }

    /// max |f| over a uniform grid of at least `grid_points` angles.
    double sup_norm_grid(int grid_points = 4096) const;

    /// Enforces the symbol-class invariants: grid sup-norm <= 1 + 1e-9,
    /// |kappa_z| <= 1 at every jump, pairwise distinct jump locations.
    /// Throws DomainError on violation.
    void validate() const;

private:
    friend Symbol model_symbol(CirclePoint z);

    Symbol(BuiltinTag tag, std::vector<JumpTerm> jump_terms, std::vector<TrigTerm> smooth,
           std::string id);

    BuiltinTag tag_ = BuiltinTag::none;
    std::vector<JumpTerm> jump_terms_;
    std::vector<TrigTerm> smooth_;
    std::vector<JumpSpec> jumps_;
    std::string id_;
};

/// The rotated model symbol psi_z: single jump at z with kappa_z = 1 and
/// Hankel coefficients conj(z)^k / (i pi (k+1)), so that the associated
/// Hankel matrix is (1/i) U H U with U = diag(conj(z)^n) and H the Hilbert
/// matrix.
Symbol model_symbol(CirclePoint z);

} // namespace hankelasym
