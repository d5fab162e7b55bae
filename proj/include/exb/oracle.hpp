#pragma once

#include <vector>

namespace exb::oracle {

// Lowest eigenvalue computed by a brute-force discretization, together
// with the certified enclosure width of the final bisection bracket.
struct EigenResult {
    double lambda_min = 0.0;
    int grid_size = 0;
    double residual = 0.0;
};

struct ShootingParams {
    int rk4_steps = 20000;
    double lambda_tol = 1e-12;  // relative width target for the bracket
};

// Nonnegative L2-normalized profile supported in [-1, 1], sampled on a
// uniform grid with analytic derivative samples.
struct BumpProfile {
    std::vector<double> x;
    std::vector<double> phi;
    std::vector<double> dphi;

    // c exp(-1/(1-x^2)) with c fixed by trapezoid normalization.
    static BumpProfile standard(int n = 4001);
};

struct GapResult {
    double lhs_upper = 0.0;
    double rhs = 0.0;
};

// Lowest eigenvalue of -u'' = lambda u on (0, l) with u'(0) = eta u(0)
// and u'(l) = 0, by a second-order ghost-point finite-difference scheme
// and Sturm-count bisection. Converges to xi_S(eta l)^2 / l^2.
EigenResult ll_neumann_ground_energy(double eta, double l, int n);

// Lowest lambda of -u'' + alpha(alpha-1)/r^2 u = lambda u on (0, l), regular
// branch u ~ r^alpha at 0, u'(l) = 0; shooting on w with u = r^alpha w
// (series start near 0, fixed-step RK4, bisection on the Neumann condition).
// Converges to xi_H(alpha)^2 / l^2. Supported alpha range [0.6, 50].
EigenResult cs_neumann_ground_energy(double alpha, double l,
                                     ShootingParams params = {});

// Lowest eigenvalue of the weighted radial form
// integral of (mu v'^2 - v^2/r) r dr on [delta, eps], natural boundary
// conditions, weight r dr. Certifies lambda_min >= -(1/mu + 2/eps) - slack.
EigenResult radial_coulomb_annulus_ground(double mu, double eps, double delta,
                                          int n);

// Kinetic upper bound eps^-2 N int(phi')^2 + 4.5 alpha(alpha-1) N(N-1)
// versus the candidate lower bound eps^-2 N (1/32) xi_H(alpha)^2 int phi^6.
// A crossing rhs > lhs as alpha grows shows no maximal-function-free
// inequality can hold with a nonzero constant.
GapResult counterexample_gap(int N, double alpha, double epsilon,
                             const BumpProfile& bump);

}  // namespace exb::oracle
