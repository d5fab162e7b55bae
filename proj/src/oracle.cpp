#include "exb/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "exb/exclusion.hpp"
#include "exb/special.hpp"

namespace exb::oracle {

namespace {

// Number of generalized eigenvalues of (A, B) below sigma, with A symmetric
// tridiagonal (diag a, off-diagonal e) and B diagonal positive: the count of
// negative pivots in the LDL^T factorization of A - sigma B.
int sturm_count(const std::vector<double>& a, const std::vector<double>& e,
                const std::vector<double>& b, double sigma) {
    int count = 0;
    double q = a[0] - sigma * b[0];
    if (q == 0.0) q = -1e-300;
    if (q < 0.0) ++count;
    for (size_t i = 1; i < a.size(); ++i) {
        q = (a[i] - sigma * b[i]) - e[i - 1] * e[i - 1] / q;
        if (q == 0.0) q = -1e-300;
        if (q < 0.0) ++count;
    }
    return count;
}

// Bisection for the lowest generalized eigenvalue given a bracket with
// sturm_count(lo) == 0 <= 1 <= sturm_count(hi).
EigenResult lowest_eigenvalue(const std::vector<double>& a,
                              const std::vector<double>& e,
                              const std::vector<double>& b, double lo,
                              double hi) {
    for (int it = 0; it < 200 && (hi - lo) > 1e-12; ++it) {
        double mid = 0.5 * (lo + hi);
        if (sturm_count(a, e, b, mid) >= 1)
            hi = mid;
        else
            lo = mid;
    }
    EigenResult res;
    res.lambda_min = 0.5 * (lo + hi);
    res.grid_size = static_cast<int>(a.size());
    res.residual = hi - lo;
    return res;
}

}  // namespace

EigenResult ll_neumann_ground_energy(double eta, double l, int n) {
    if (!(eta >= 0.0)) throw std::domain_error("ll_neumann: eta must be >= 0");
    if (!(l > 0.0)) throw std::domain_error("ll_neumann: l must be positive");
    if (n < 64) throw std::domain_error("ll_neumann: grid too coarse (n < 64)");
    double h = l / n;
    // Quadratic form sum (u_{i+1}-u_i)^2/h^2 (row weights halved at both
    // ends via B) plus the Robin term eta/h at the origin row.
    std::vector<double> a(n + 1), e(n), b(n + 1);
    a[0] = (1.0 + h * eta) / (h * h);
    b[0] = 0.5;
    for (int i = 1; i < n; ++i) {
        a[i] = 2.0 / (h * h);
        b[i] = 1.0;
    }
    a[n] = 1.0 / (h * h);
    b[n] = 0.5;
    for (int i = 0; i < n; ++i) e[i] = -1.0 / (h * h);
    double hi = (4.0 + 2.0 * h * eta) / (h * h) + 1.0;
    return lowest_eigenvalue(a, e, b, -1e-9, hi);
}

namespace {

// Neumann shooting function G(lambda) = alpha w(l) + l w'(l) for
// w'' + (2 alpha / r) w' + lambda w = 0, w ~ 1 at r = 0 (regular branch).
// G > 0 below the lowest eigenvalue and G < 0 just above it.
double cs_shoot(double alpha, double l, double lambda, int steps) {
    double r0 = l / 1000.0;
    // Series start w = sum c_k r^{2k}, c_0 = 1, avoids the singular origin.
    double w = 1.0, dw = 0.0;
    double term = 1.0;
    double r2 = r0 * r0;
    for (int k = 1; k < 80; ++k) {
        term *= -lambda * r2 / (2.0 * k * (2.0 * k + 2.0 * alpha - 1.0));
        w += term;
        dw += 2.0 * k * term / r0;
        if (std::abs(term) < 1e-18 * std::abs(w)) break;
    }
    double h = (l - r0) / steps;
    double r = r0;
    auto rhs = [alpha, lambda](double rr, double ww, double dd, double& ow,
                               double& od) {
        ow = dd;
        od = -(2.0 * alpha / rr) * dd - lambda * ww;
    };
    for (int i = 0; i < steps; ++i) {
        double k1w, k1d, k2w, k2d, k3w, k3d, k4w, k4d;
        rhs(r, w, dw, k1w, k1d);
        rhs(r + h / 2, w + h / 2 * k1w, dw + h / 2 * k1d, k2w, k2d);
        rhs(r + h / 2, w + h / 2 * k2w, dw + h / 2 * k2d, k3w, k3d);
        rhs(r + h, w + h * k3w, dw + h * k3d, k4w, k4d);
        w += h / 6 * (k1w + 2 * k2w + 2 * k3w + k4w);
        dw += h / 6 * (k1d + 2 * k2d + 2 * k3d + k4d);
        r += h;
    }
    return alpha * w + l * dw;
}

}  // namespace

EigenResult cs_neumann_ground_energy(double alpha, double l,
                                     ShootingParams params) {
    if (!(alpha >= 0.6 && alpha <= 50.0))
        throw std::domain_error("cs_neumann: alpha outside [0.6, 50]");
    if (!(l > 0.0)) throw std::domain_error("cs_neumann: l must be positive");
    if (params.rk4_steps < 64)
        throw std::domain_error("cs_neumann: too few integration steps");
    double j1 = special::first_bessel_zero(alpha - 0.5);
    double lo = 1e-12 / (l * l);
    double hi = (j1 / l) * (j1 / l);
    double g_lo = cs_shoot(alpha, l, lo, params.rk4_steps);
    double g_hi = cs_shoot(alpha, l, hi, params.rk4_steps);
    if (!(g_lo > 0.0 && g_hi < 0.0))
        throw std::runtime_error("cs_neumann: shooting failed to bracket");
    double width_target = params.lambda_tol * hi;
    int it = 0;
    while (hi - lo > width_target && it++ < 200) {
        double mid = 0.5 * (lo + hi);
        if (cs_shoot(alpha, l, mid, params.rk4_steps) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    EigenResult res;
    res.lambda_min = 0.5 * (lo + hi);
    res.grid_size = params.rk4_steps;
    res.residual = hi - lo;
    return res;
}

EigenResult radial_coulomb_annulus_ground(double mu, double eps, double delta,
                                          int n) {
    if (!(mu > 0.0)) throw std::domain_error("annulus: mu must be positive");
    if (!(eps > 0.0 && delta > 0.0 && delta < eps))
        throw std::domain_error("annulus: need 0 < delta < eps");
    if (n < 256) throw std::domain_error("annulus: grid too coarse (n < 256)");
    double h = (eps - delta) / n;
    // Assemble the weighted forms: stiffness with midpoint radii, the
    // Coulomb term -v^2 (the 1/r cancels the radial weight) and the mass
    // v^2 r with trapezoid lumping.
    std::vector<double> a(n + 1, 0.0), e(n), b(n + 1);
    for (int i = 0; i < n; ++i) {
        double rmid = delta + (i + 0.5) * h;
        double k = mu * rmid / h;
        a[i] += k;
        a[i + 1] += k;
        e[i] = -k;
    }
    for (int i = 0; i <= n; ++i) {
        double w = (i == 0 || i == n) ? h / 2 : h;
        double r = delta + i * h;
        a[i] -= w;       // potential -1/r times weight r dr
        b[i] = w * r;    // mass weight r dr
    }
    double lo = 0.0, hi = 0.0;
    for (int i = 0; i <= n; ++i) {
        double rad = std::abs(i > 0 ? e[i - 1] : 0.0) + std::abs(i < n ? e[i] : 0.0);
        lo = std::min(lo, (a[i] - rad) / b[i]);
        hi = std::max(hi, (a[i] + rad) / b[i]);
    }
    return lowest_eigenvalue(a, e, b, lo - 1.0, hi + 1.0);
}

BumpProfile BumpProfile::standard(int n) {
    if (n < 3) throw std::domain_error("BumpProfile: need n >= 3");
    BumpProfile bp;
    bp.x.resize(n);
    bp.phi.resize(n);
    bp.dphi.resize(n);
    for (int k = 0; k < n; ++k) {
        double x = -1.0 + 2.0 * k / (n - 1.0);
        bp.x[k] = x;
        double s = 1.0 - x * x;
        bp.phi[k] = s > 0.0 ? std::exp(-1.0 / s) : 0.0;
        bp.dphi[k] = s > 0.0 ? bp.phi[k] * (-2.0 * x / (s * s)) : 0.0;
    }
    double h = 2.0 / (n - 1.0);
    double m2 = 0.0;
    for (int k = 0; k < n; ++k) {
        double w = (k == 0 || k == n - 1) ? h / 2 : h;
        m2 += w * bp.phi[k] * bp.phi[k];
    }
    double c = 1.0 / std::sqrt(m2);
    for (int k = 0; k < n; ++k) {
        bp.phi[k] *= c;
        bp.dphi[k] *= c;
    }
    return bp;
}

GapResult counterexample_gap(int N, double alpha, double epsilon,
                             const BumpProfile& bump) {
    if (N < 2) throw std::domain_error("counterexample_gap: N must be >= 2");
    if (!(alpha >= 1.0))
        throw std::domain_error("counterexample_gap: alpha must be >= 1");
    if (!(epsilon > 0.0 && epsilon < 1.0 / 3.0))
        throw std::invalid_argument("counterexample_gap: eps outside (0, 1/3)");
    size_t n = bump.x.size();
    if (n < 3 || bump.phi.size() != n || bump.dphi.size() != n)
        throw std::invalid_argument("counterexample_gap: malformed bump");
    double m2 = 0.0, kin = 0.0, p6 = 0.0;
    for (size_t k = 0; k < n; ++k) {
        if (bump.phi[k] < 0.0)
            throw std::invalid_argument("counterexample_gap: negative bump");
        if (std::abs(bump.x[k]) > 1.0 + 1e-12)
            throw std::invalid_argument(
                "counterexample_gap: bump support exceeds [-1, 1]");
        double w;
        if (k == 0)
            w = (bump.x[1] - bump.x[0]) / 2;
        else if (k == n - 1)
            w = (bump.x[n - 1] - bump.x[n - 2]) / 2;
        else
            w = (bump.x[k + 1] - bump.x[k - 1]) / 2;
        m2 += w * bump.phi[k] * bump.phi[k];
        kin += w * bump.dphi[k] * bump.dphi[k];
        p6 += w * std::pow(bump.phi[k], 6);
    }
    if (std::abs(m2 - 1.0) > 1e-8)
        throw std::invalid_argument("counterexample_gap: bump not normalized");
    double ie = 1.0 / (epsilon * epsilon);
    GapResult g;
    g.lhs_upper = ie * N * kin + 4.5 * alpha * (alpha - 1.0) * N * (N - 1.0);
    g.rhs = ie * N * (1.0 / 32.0) * xi_H(alpha) * xi_H(alpha) * p6;
    return g;
}

}  // namespace exb::oracle
