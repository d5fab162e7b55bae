#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "exb/exclusion.hpp"
#include "exb/report.hpp"

namespace exb {

// Harmonically trapped 2D anyon gas. C_A is the configurable constant of
// the kinetic-energy inequality, only known inside [1e-4, pi].
struct TrapSpec {
    double alpha = 0.0;
    std::optional<Fraction> fraction;  // exact statistics when known
    long long N = 1;
    double omega = 1.0;
    double C_A = ConstantsRegistry::C_A_min;
    std::optional<double> L_angular;
};

// Thomas-Fermi minimum of C_A C^2 rho^2 + (omega^2 r^2 / 2) rho at fixed
// mass N, C = C_{alpha,N}:
//   E >= (1/3) sqrt(8 C_A / pi) C omega N^{3/2},
// with chemical potential lambda = omega C sqrt(2 C_A N / pi) and cloud
// radius sqrt(2 lambda)/omega. Falls back to the one-body uncertainty
// value (1/3) sqrt(8 C_A / pi) omega N when the exclusion constant
// vanishes (bosonic statistics or N = 1).
BoundReport harmonic_trap_bound(const TrapSpec& spec);

// Fixed angular momentum sector L (required in spec.L_angular):
//   E >= omega (N + |L + alpha N (N-1) / 2|).
BoundReport angular_momentum_bound(const TrapSpec& spec);

// 2D Coulomb system of N mobile anyons (statistics denominator nu,
// effective mass m) against K fixed charges of magnitude <= Z.
struct StabilitySpec {
    double m = 1.0;
    long long Z = 1;
    long long nu = 1;
    double K = 0.0;
    long long N = 1;
    std::optional<double> b;  // splitting parameter, default nu^2 m (2Z+1)
};

// Lower bound, linear in K and N at fixed b:
//   E(b) = -4 pi m C_A' nu^2 (2Z+1)^2 K
//            * (5 + 16 m^2 (2Z+1)^2 / b^2 + [ln(288 pi m C_A' nu^2 / b)]_+)
//          - (2Z+1) b N.
// Reports both the default-b value and the best value over b > 0 (never
// worse than the default); spec.b forces the evaluation point.
BoundReport stability_bound(const StabilitySpec& spec,
                            const ConstantsRegistry& reg);

// One confining interval with the infimum of the external potential on it.
struct ConfinedInterval {
    double lo = 0.0;
    double hi = 1.0;
    double V = 0.0;
};

// Calogero-Sutherland particles confined to disjoint intervals; mass may
// also sit outside at potential V_ext (possibly +infinity).
struct PartitionSpec {
    std::vector<ConfinedInterval> intervals;
    double V_ext = std::numeric_limits<double>::infinity();
    double alpha = 1.0;
    long long N = 2;
};

// Dimensionless per-interval energy E(rho) = max{0, rho - 1,
// [rho >= 2] rho^3 / 32}; convex, zero up to rho = 1, linear up to the
// crossover below, cubic beyond.
double confined_energy_density(double rho);

// Root of rho^3/32 = rho - 1 above 2; E is exactly rho^3/32 from here on.
inline constexpr double confined_density_crossover = 5.0681403934454631;

// Minimum of sum_j [ xi_H(alpha)^2 / |I_j|^2 E(rho_j) + V_j rho_j ]
// + V_ext rho_ext over rho >= 0 summing to N, solved exactly by a dual
// breakpoint walk; reports the multiplier and all occupations.
BoundReport cs_confined_energy(const PartitionSpec& spec);

// Best cs_confined_energy bound over the uniform partition family
// {[k a, (k+1) a], [-(k+1) a, -k a] : k < M} with V_j sampled as the
// interval minimum; scans a log grid of widths a and a fixed ladder of M,
// preferring smaller a then smaller M on ties.
BoundReport optimize_partition(const std::function<double(double)>& V,
                               double alpha, long long N);

// I(mu) = int_0^1 sqrt(1 - x^mu) dx in closed form.
double powerlaw_I(double mu);
// J(mu) = (1/3) int_0^1 (1 - x^mu)^{3/2} dx + int_0^1 x^mu sqrt(1 - x^mu) dx.
double powerlaw_J(double mu);
// The same two integrals by adaptive quadrature, for cross-checking.
double powerlaw_I_quad(double mu);
double powerlaw_J_quad(double mu);

// Large-N constant of the power-law trap V = |c x|^mu:
//   C_inf(mu) = (sqrt(3)/(4 sqrt(2 pi)))^{2mu/(mu+2)} (mu+2)/(2 mu^2)
//               * Gamma(1/mu)/Gamma(5/2 + 1/mu)
//               * (Gamma(3/2 + 1/mu)/Gamma(1 + 1/mu))^{(3mu+2)/(mu+2)}.
double powerlaw_asymptotic_constant(double mu);

// E >= C_inf(mu) (xi_H(alpha) c)^{2mu/(mu+2)} N^{(3mu+2)/(mu+2)}, valid in
// the large-N regime; diagnostics carry the two validity ratios, both of
// which should exceed 100 for the asymptotics to be trustworthy.
BoundReport powerlaw_bound(double mu, double c, double alpha, long long N);

}  // namespace exb
