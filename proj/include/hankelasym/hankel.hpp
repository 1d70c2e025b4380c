#pragma once

#include <complex>
#include <optional>
#include <string>

#include <Eigen/Dense>

#include "hankelasym/symbol.hpp"

namespace hankelasym {

/// Dense-storage cap for truncations.
inline constexpr int kMaxTruncationDim = 8192;

/// Dense N x N truncation H_N of the Hankel matrix of a symbol,
/// entries(j,k) = h(j+k). Immutable after construction; the eigenvalue
/// cache is written once on first use (first access must not race).
class HankelTruncation {
public:
    HankelTruncation(Eigen::MatrixXcd entries, std::string symbol_id);

    int n() const { return static_cast<int>(entries_.rows()); }
    const Eigen::MatrixXcd& entries() const { return entries_; }
    const std::string& symbol_id() const { return symbol_id_; }

    /// True when every entry has exactly zero imaginary part; such
    /// truncations use the symmetric real eigensolver.
    bool real_symmetric() const { return real_symmetric_; }

    /// Eigenvalues, computed once and cached. Throws EigensolverFailed.
    const Eigen::VectorXcd& eigenvalues() const;

    bool eigenvalues_cached() const { return eigenvalues_.has_value(); }

private:
    Eigen::MatrixXcd entries_;
    std::string symbol_id_;
    bool real_symmetric_ = false;
    mutable std::optional<Eigen::VectorXcd> eigenvalues_;
};

/// Build H_N(sym) from 2n-1 Fourier coefficients. 1 <= n <= 8192.
HankelTruncation truncate(const Symbol& sym, int n);

/// Tr H_N^k. k = 1 sums the diagonal; k >= 2 sums eigenvalue powers,
/// falling back to repeated matrix multiplication if the solver fails.
std::complex<double> trace_power(const HankelTruncation& h, int k);

/// Tr H_N^k by repeated matrix multiplication (no eigendecomposition).
std::complex<double> trace_power_direct(const HankelTruncation& h, int k);

/// Squared Hilbert-Schmidt norm, sum of squared entry moduli.
double hs_norm_sq(const HankelTruncation& h);

/// Largest singular value.
double operator_norm(const HankelTruncation& h);

/// The compressed square 1_N H^2 1_N of the Hilbert matrix in closed form:
///   M(j,k) = (psi(j+1) - psi(k+1)) / (pi^2 (j-k))   for j != k,
///   M(j,j) = psi'(j+1) / pi^2,
/// where psi is the digamma function. Symmetric with positive entries.
Eigen::MatrixXd compressed_square(int n);

/// || 1_N H (1 - 1_N) ||_2^2 = (1/pi^2) sum_{j<n} psi'(j+n+1) for the
/// Hilbert matrix; bounded in n with limit log(2)/pi^2.
double tail_hs(int n);

} // namespace hankelasym
