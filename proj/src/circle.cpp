#include "hankelasym/circle.hpp"

namespace hankelasym {

namespace {

// Quarter-circle angles as they come out of normalize().
constexpr double kQuarter[4] = {0.0, M_PI_2, M_PI, 3.0 * M_PI_2};

} // namespace

std::complex<double> CirclePoint::unit_power(long long k) const {
    for (int q = 0; q < 4; ++q) {
        if (std::fabs(theta_ - kQuarter[q]) < 1e-15) {
            switch (((k * q) % 4 + 4) % 4) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            default: return {0.0, -1.0};
            }
        }
    }
    // Reduce k*theta mod 2pi in long double; the double-precision product
    // alone would drift by ~k*eps radians.
    constexpr long double two_pi_l = 6.283185307179586476925286766559006L;
    long double a = std::fmod(static_cast<long double>(k) * static_cast<long double>(theta_), two_pi_l);
    double ad = static_cast<double>(a);
    return {std::cos(ad), std::sin(ad)};
}

} // namespace hankelasym
