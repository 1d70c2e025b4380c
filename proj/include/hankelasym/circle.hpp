#pragma once

#include <cmath>
#include <complex>

namespace hankelasym {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// A point z = e^{i theta} on the unit circle, stored as theta in [0, 2pi).
///
/// Equality is modulo 2pi with tolerance 1e-12. Powers z^k are computed with
/// extended-precision angle reduction so that coefficient identities relating
/// rotated Hankel matrices hold to near machine precision; the quarter-circle
/// angles {1, i, -1, -i} produce exact power cycles.
class CirclePoint {
public:
    CirclePoint() = default;
    explicit CirclePoint(double theta) : theta_(normalize(theta)) {}

    double theta() const { return theta_; }
    std::complex<double> value() const { return unit_power(1); }

    CirclePoint conjugate() const { return CirclePoint(-theta_); }

    /// e^{i k theta} for integer k (k may be negative).
    std::complex<double> unit_power(long long k) const;

    bool same_point(const CirclePoint& other, double tol = 1e-12) const {
        double d = std::fabs(theta_ - other.theta_);
        return d <= tol || kTwoPi - d <= tol;
    }

    /// Reduce an angle into [0, 2pi).
    static double normalize(double theta) {
        double t = std::fmod(theta, kTwoPi);
        if (t < 0.0) t += kTwoPi;
        if (t >= kTwoPi) t = 0.0;
        return t;
    }

private:
    double theta_ = 0.0;
};

} // namespace hankelasym
