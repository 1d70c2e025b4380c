#include "hankelasym/hankel.hpp"

#include <cmath>
#include <vector>

#include "hankelasym/errors.hpp"
#include "hankelasym/special.hpp"

namespace hankelasym {

namespace {

using complexd = std::complex<double>;

constexpr double kPi = 3.14159265358979323846;

void check_dim(int n) {
    if (n < 1 || n > kMaxTruncationDim)
        throw DimensionTooLarge("dimension " + std::to_string(n) + " outside [1, " +
                                std::to_string(kMaxTruncationDim) + "]");
}

} // namespace

HankelTruncation::HankelTruncation(Eigen::MatrixXcd entries, std::string symbol_id)
    : entries_(std::move(entries)), symbol_id_(std::move(symbol_id)) {
    real_symmetric_ = (entries_.imag().array() == 0.0).all();
}

const Eigen::VectorXcd& HankelTruncation::eigenvalues() const {
    if (!eigenvalues_) {
        if (real_symmetric_) {
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(entries_.real(),
                                                              Eigen::EigenvaluesOnly);
            if (es.info() != Eigen::Success)
                throw EigensolverFailed("symmetric eigensolver failed, n = " +
                                        std::to_string(n()));
            eigenvalues_ = es.eigenvalues().cast<complexd>();
        } else {
            Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(entries_, false);
            if (es.info() != Eigen::Success)
                throw EigensolverFailed("complex eigensolver failed, n = " +
                                        std::to_string(n()));
            eigenvalues_ = es.eigenvalues();
        }
    }
    return *eigenvalues_;
}

HankelTruncation truncate(const Symbol& sym, int n) {
    check_dim(n);
    std::vector<complexd> c(2 * n - 1);
    for (int k = 0; k < 2 * n - 1; ++k) c[k] = sym.fourier_coefficient(k);
    Eigen::MatrixXcd entries(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) entries(j, k) = c[j + k];
    return HankelTruncation(std::move(entries), sym.id());
}

std::complex<double> trace_power(const HankelTruncation& h, int k) {
    if (k < 1) throw DomainError("trace_power: k >= 1 required");
    if (k == 1) return h.entries().trace();
    try {
        const Eigen::VectorXcd& lam = h.eigenvalues();
        Eigen::VectorXcd p = lam;
        for (int j = 1; j < k; ++j) p.array() *= lam.array();
        return p.sum();
    } catch (const EigensolverFailed&) {
        return trace_power_direct(h, k);
    }
}

std::complex<double> trace_power_direct(const HankelTruncation& h, int k) {
    if (k < 1) throw DomainError("trace_power_direct: k >= 1 required");
    if (k == 1) return h.entries().trace();
    Eigen::MatrixXcd p = h.entries();
    for (int j = 1; j < k - 1; ++j) p = p * h.entries();
    // trace of p * H without forming the product
    return (p.transpose().array() * h.entries().array()).sum();
}

double hs_norm_sq(const HankelTruncation& h) { return h.entries().squaredNorm(); }

double operator_norm(const HankelTruncation& h) {
    if (h.real_symmetric()) {
        const Eigen::VectorXcd& lam = h.eigenvalues();
        return lam.cwiseAbs().maxCoeff();
    }
    Eigen::MatrixXcd gram = h.entries().adjoint() * h.entries();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw EigensolverFailed("operator_norm: gram eigensolver failed");
    return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

Eigen::MatrixXd compressed_square(int n) {
    check_dim(n);
    std::vector<double> dg(n), tg(n);
    for (int j = 0; j < n; ++j) {
        dg[j] = special::digamma(j + 1.0);
        tg[j] = special::trigamma(j + 1.0);
    }
    const double inv_pi2 = 1.0 / (kPi * kPi);
    Eigen::MatrixXd m(n, n);
    for (int j = 0; j < n; ++j) {
        m(j, j) = tg[j] * inv_pi2;
        for (int k = 0; k < j; ++k) {
            double v = (dg[j] - dg[k]) / (kPi * kPi * (j - k));
            m(j, k) = v;
            m(k, j) = v;
        }
    }
    return m;
}

double tail_hs(int n) {
    if (n < 1) throw DomainError("tail_hs: n >= 1 required");
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += special::trigamma(static_cast<double>(j + n + 1));
    return acc / (kPi * kPi);
}

} // namespace hankelasym
