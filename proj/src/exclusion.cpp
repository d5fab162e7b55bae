#include "exb/exclusion.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "exb/special.hpp"

namespace exb {

ConstantsRegistry::ConstantsRegistry(double C_A_value) {
    C_A_max = M_PI;
    if (!(C_A_value >= C_A_min && C_A_value <= C_A_max))
        throw std::domain_error("ConstantsRegistry: C_A outside [1e-4, pi]");
    c_1 = 1.0 / 30720.0;
    c_2 = 11.0 / 30.0;
    c_2_prime = 11.0 / 61440.0;
    c_3 = M_PI * M_PI / 30720.0;
    C_S_lower = std::min({c_1, c_2_prime, 4.0 * c_3 / (M_PI * M_PI)});
    C_S_upper = 2.0 / 3.0;
    C_H = 1.0 / 32.0;
    C_H_upper = 2.0 / 3.0;
    C_A = C_A_value;
    C_A_prime = 1.0 / (4.0 * C_A);
    C_1 = 2.0 / M_PI;
    C_1_prime = M_PI * M_PI / 60.0;
    c_Omega_disk = 0.169;
    c_Omega_square = 0.112;
}

double ConstantsRegistry::C_d_prime(int d) {
    if (d < 1) throw std::domain_error("C_d_prime: dimension must be >= 1");
    double dd = d;
    return (M_PI * M_PI / 4.0) * std::pow(dd, 2.0 - 2.0 / dd) /
           ((dd + 2.0) * (dd + 4.0));
}

double xi_S(double y) {
    if (std::isnan(y) || y < 0.0)
        throw std::domain_error("xi_S: y must be >= 0");
    if (y == 0.0) return 0.0;
    if (std::isinf(y)) return M_PI / 2.0;
    // Near the pole bisection loses accuracy; switch to the asymptote,
    // whose error is O(1/y^2).
    if (y > 1e12) return M_PI / 2.0 - M_PI / (2.0 * y);
    // Pole-free reformulation: f(xi) = xi sin xi - y cos xi.
    // f(0) = -y < 0; at the double just below pi/2, cos is ~6e-17 so
    // f > 0 for every y up to the asymptotic cutoff.
    auto f = [y](double x) { return x * std::sin(x) - y * std::cos(x); };
    double hi = M_PI / 2.0;
    return special::find_root(f, {0.0, hi, -y, f(hi)}, 1e-14);
}

double xi_S_approx(double y) {
    if (std::isnan(y) || y < 0.0)
        throw std::domain_error("xi_S_approx: y must be >= 0");
    return std::atan(std::sqrt(y + 4.0 * y * y / (M_PI * M_PI)));
}

double xi_H(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 50.0))
        throw std::domain_error("xi_H: alpha outside [0, 50]");
    if (alpha == 0.0) return 0.0;
    double nu = alpha - 0.5;
    double j1 = special::first_bessel_zero(nu);
    auto F = [nu](double xi) {
        return special::bessel_j(nu, xi) +
               2.0 * xi * special::bessel_j_prime(nu, xi);
    };
    // F > 0 as xi -> 0+ (leading series term has coefficient 1 + 2 nu > 0)
    // and F < 0 at the first zero of J (where J' is negative), so the
    // smallest root lies strictly inside (0, j1). For alpha >= 1 no root
    // lies below sqrt(pi^2/4 + alpha(alpha-1)), which lets the bracket
    // start high enough that J does not underflow at large order.
    double lo = (alpha >= 1.0) ? 0.9 * xi_H_lower(alpha) : 1e-8;
    double f_lo = F(lo);
    if (!(f_lo > 0.0)) {
        // Scan fallback; not expected to trigger on the supported domain.
        lo = 1e-8;
        f_lo = F(lo);
        double step = (j1 - lo) / 1000.0;
        while (!(f_lo > 0.0) && lo + step < j1) {
            lo += step;
            f_lo = F(lo);
        }
        if (!(f_lo > 0.0))
            throw std::runtime_error("xi_H: failed to bracket the root");
    }
    double f_hi = F(j1);
    return special::find_root(F, {lo, j1, f_lo, f_hi}, 1e-13);
}

double xi_H_approx_small(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::domain_error("xi_H_approx_small: alpha outside [0, 1]");
    return std::sqrt(alpha + (M_PI * M_PI / 4.0 - 1.0) * alpha * alpha);
}

double xi_H_lower(double alpha) {
    if (!(alpha >= 1.0))
        throw std::domain_error("xi_H_lower: alpha must be >= 1");
    return std::sqrt(M_PI * M_PI / 4.0 + alpha * (alpha - 1.0));
}

double c_alpha_N(double alpha, long long N) {
    if (N < 2) throw std::domain_error("c_alpha_N: N must be >= 2");
    if (N - 2 > 20'000'000)
        throw std::domain_error(
            "c_alpha_N: N too large for the direct scan; use the exact "
            "fraction overload");
    double best = std::numeric_limits<double>::infinity();
    for (long long p = 0; p <= N - 2; ++p) {
        double t = (2.0 * p + 1.0) * alpha;
        double d = std::abs(t - 2.0 * std::round(t / 2.0));
        if (d < best) best = d;
        if (best == 0.0) break;
    }
    return best;
}

double c_alpha_N(const Fraction& f, long long N) {
    if (N < 2) throw std::domain_error("c_alpha_N: N must be >= 2");
    if (f.nu < 1) throw std::domain_error("c_alpha_N: nu must be positive");
    if (std::gcd(std::abs(f.mu), f.nu) != 1)
        throw std::invalid_argument("c_alpha_N: fraction not reduced");
    // (2p+1) mu mod 2 nu determines the distance exactly: with residue r
    // in [0, 2 nu), the distance to the nearest even integer is
    // min(r, 2 nu - r)/nu. The residue is periodic in p with period nu.
    long long two_nu = 2 * f.nu;
    long long span = std::min(N - 2, f.nu - 1);
    long long best = two_nu;
    for (long long p = 0; p <= span; ++p) {
        __int128 prod =
            static_cast<__int128>((2 * p + 1) % two_nu) * (f.mu % two_nu);
        long long r = static_cast<long long>(prod % two_nu);
        if (r < 0) r += two_nu;
        long long d = std::min(r, two_nu - r);
        if (d < best) best = d;
        if (best == 0) break;
    }
    return static_cast<double>(best) / static_cast<double>(f.nu);
}

double c_alpha_limit(long long mu, long long nu) {
    if (nu < 1) throw std::domain_error("c_alpha_limit: nu must be positive");
    if (std::gcd(std::abs(mu), nu) != 1)
        throw std::invalid_argument("c_alpha_limit: fraction not reduced");
    return (mu % 2 != 0) ? 1.0 / static_cast<double>(nu) : 0.0;
}

}  // namespace exb
