#pragma once

#include <vector>

#include "exb/exclusion.hpp"
#include "exb/report.hpp"

namespace exb {

// Homogeneous gas at mean density rhobar with N particles on a region of
// size extent (length in 1D, area for 2D anyons). gamma >= 1 weakens the
// Lieb-Liniger bound by evaluating the exclusion strength at the reduced
// density rhobar * gamma; gamma = 1 is the sharp choice.
struct GasSpec {
    StatisticsParams statistics;
    double rhobar = 1.0;
    long long N = 1;
    double extent = 1.0;
    double gamma = 1.0;
};

// Throws std::invalid_argument unless rhobar > 0, N >= 1, extent > 0,
// gamma >= 1, and rhobar * extent == N to 1e-9 relative.
void validate_gas_spec(const GasSpec& spec);

// Variational shape constant for N anyons,
//   c_N = sup_{g > 0} [ 1/(pi g^2) - (1 + 2 g / sqrt(N))^2 / (pi^2 g^4) ],
// located by a coarse logarithmic scan over [1e-3, 1e3] refined with
// golden-section search. Nondecreasing in N with limit 1/4.
double anyon_cN(long long N);

// Total ground-state energy lower bound for N anyons in area extent:
// the larger of the exclusion term (c_Omega_disk/2) c_N C_{alpha,N}^2 N^2
// / extent and the one-body Dirichlet term N pi^2 / extent. Reports which
// term won; with N = 1 or vanishing exclusion only the Dirichlet term is
// available.
BoundReport anyon_gas_bound(const GasSpec& spec, const ConstantsRegistry& reg);

// Energy per unit length of the Lieb-Liniger gas:
//   C_S * xi_S(2 eta / (gamma rhobar))^2 * rhobar^3.
// diagnostics["value_total"] carries the bound integrated over extent.
BoundReport ll_gas_bound(const GasSpec& spec, const ConstantsRegistry& reg);

// Energy per unit length of the Calogero-Sutherland gas,
//   (1/32) xi_H(alpha)^2 rhobar^3, valid for alpha >= 1 only.
BoundReport cs_gas_bound(const GasSpec& spec, const ConstantsRegistry& reg);

// Known ground-state energy density the bounds are compared against:
// free fermions pi rhobar^2 for anyons, (pi^2/6) alpha^2 rhobar^3 for
// Calogero-Sutherland, and for Lieb-Liniger the envelope
// (1/2) e(2 eta / rhobar) rhobar^3 with e(t) = t for t <= 0.1 and
// e(t) = pi^2/3 for t >= 10. In between the value is a logarithmic
// interpolation flagged in diagnostics; strict mode refuses instead,
// since only the asymptotic regimes are known.
BoundReport reference_energy(const GasSpec& spec, bool strict = false);

// Lieb-Thirring form for the Lieb-Liniger gas in an external potential
// sampled uniformly with cell size dx:
//   E >= - C_S' / xi_S(2 eta / (gamma rhobar)) * sum |V_-|^{3/2} dx,
// with C_S' = (2/3) (3 C_S)^{-1/2}. Inapplicable at eta = 0 where the
// exclusion strength vanishes.
BoundReport ll_potential_bound(const GasSpec& spec,
                               const std::vector<double>& V, double dx,
                               const ConstantsRegistry& reg);

// 2D analogue for anyons, cells of area dA:
//   E >= - C_A' C_{alpha,N}^{-2} * sum |V_-|^2 dA.
// Inapplicable when C_{alpha,N} = 0 (the bound is vacuous).
BoundReport anyon_potential_bound(const GasSpec& spec,
                                  const std::vector<double>& V, double dA,
                                  const ConstantsRegistry& reg);

}  // namespace exb
