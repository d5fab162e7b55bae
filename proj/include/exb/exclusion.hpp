#pragma once

#include <optional>
#include <string>

namespace exb {

enum class StatKind { LiebLiniger, CalogeroSutherland, Anyon };

// Reduced fraction mu/nu with nu > 0, used for exact anyon statistics.
struct Fraction {
    long long mu = 0;
    long long nu = 1;
};

struct StatisticsParams {
    StatKind kind = StatKind::LiebLiniger;
    double eta = 0.0;    // Lieb-Liniger delta strength, 1/length
    double alpha = 0.0;  // Calogero-Sutherland / anyon parameter
    std::optional<Fraction> fraction;  // exact anyon statistics when known
};

// Fixed constants of the inequalities plus the one configurable knob C_A,
// which is only known to lie in [1e-4, pi]. Every bound records the values
// it consumed, since downstream results are meaningless without them.
struct ConstantsRegistry {
    static constexpr double C_A_min = 1e-4;
    double C_A_max;

    double c_1;        // 2^-11 / 15
    double c_2;        // 11/30
    double c_2_prime;  // 2^-12 * 11/15
    double c_3;        // pi^2 * 2^-11 / 15
    double C_S_lower;  // min{c_1, c_2_prime, 4 c_3 / pi^2} = c_1
    double C_S_upper;  // 2/3
    double C_H;        // 1/32
    double C_H_upper;  // 2/3
    double C_A;
    double C_A_prime;  // 1/(4 C_A)
    double C_1;        // 2/pi
    double C_1_prime;  // pi^2/60
    double c_Omega_disk;    // 0.169
    double c_Omega_square;  // 0.112

    explicit ConstantsRegistry(double C_A_value = 1e-4);

    // Optimal uncertainty constant pi^2/4 * d^(2-2/d) / ((d+2)(d+4)).
    static double C_d_prime(int d);
};

// Smallest nonnegative solution of xi tan xi = y, in [0, pi/2).
// Accepts y = +infinity, returning the limit pi/2.
double xi_S(double y);

// Closed-form approximation arctan sqrt(y + 4 y^2 / pi^2).
double xi_S_approx(double y);

// Smallest positive root of J_nu(xi) + 2 xi J_nu'(xi) with nu = alpha - 1/2,
// on alpha in [0, 50]; xi_H(0) = 0, xi_H(1) = pi/2.
double xi_H(double alpha);

// Approximation sqrt(alpha + (pi^2/4 - 1) alpha^2) on [0, 1].
double xi_H_approx_small(double alpha);

// Lower bound sqrt(pi^2/4 + alpha (alpha - 1)), valid for alpha >= 1.
double xi_H_lower(double alpha);

// Exclusion constant min over p in {0..N-2} of the distance from (2p+1)alpha
// to the nearest even integer. The float path is capped at N - 2 <= 2e7;
// beyond that use the exact fraction overload.
double c_alpha_N(double alpha, long long N);

// Exact rational path: distances are multiples of 1/nu and periodic in p
// with period nu, so the scan is O(min(N, nu)) for any N.
double c_alpha_N(const Fraction& f, long long N);

// Large-N limit: 1/nu for odd numerators, 0 otherwise. Requires mu/nu reduced.
double c_alpha_limit(long long mu, long long nu);

}  // namespace exb
