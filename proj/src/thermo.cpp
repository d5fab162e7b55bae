#include "exb/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "exb/errors.hpp"

namespace exb {

namespace {

// Exclusion constant for the requested statistics, exact when a fraction
// is attached (mandatory for N beyond the float-path cap).
double spec_c_alpha_N(const StatisticsParams& st, long long N) {
    if (st.fraction) return c_alpha_N(*st.fraction, N);
    return c_alpha_N(st.alpha, N);
}

double xi_S_of_gas(const GasSpec& spec) {
    return xi_S(2.0 * spec.statistics.eta / (spec.gamma * spec.rhobar));
}

void put_xi_S_diagnostics(BoundReport& rep, const GasSpec& spec) {
    rep.diagnostics["xi_S_arg"] =
        2.0 * spec.statistics.eta / (spec.gamma * spec.rhobar);
    rep.diagnostics["xi_S_value"] = xi_S_of_gas(spec);
}

}  // namespace

void validate_gas_spec(const GasSpec& spec) {
    if (!(spec.rhobar > 0.0) || !std::isfinite(spec.rhobar))
        throw std::invalid_argument("gas spec: rhobar must be positive");
    if (spec.N < 1) throw std::invalid_argument("gas spec: N must be >= 1");
    if (!(spec.extent > 0.0) || !std::isfinite(spec.extent))
        throw std::invalid_argument("gas spec: extent must be positive");
    if (!(spec.gamma >= 1.0))
        throw std::invalid_argument("gas spec: gamma must be >= 1");
    double n = static_cast<double>(spec.N);
    if (std::fabs(spec.rhobar * spec.extent - n) > 1e-9 * std::max(1.0, n))
        throw std::invalid_argument(
            "gas spec: rhobar * extent must equal N to 1e-9");
}

double anyon_cN(long long N) {
    if (N < 2) throw std::domain_error("anyon_cN requires N >= 2");
    double s = std::sqrt(static_cast<double>(N));
    auto f = [s](double g) {
        double a = 1.0 + 2.0 * g / s;
        double g2 = g * g;
        return 1.0 / (M_PI * g2) - a * a / (M_PI * M_PI * g2 * g2);
    };
    // Coarse logarithmic scan to localize the maximum, then refine.
    double best_g = 1e-3;
    double best = f(best_g);
    for (double g = 1e-3; g <= 1e3; g *= 1.05) {
        double v = f(g);
        if (v > best) {
            best = v;
            best_g = g;
        }
    }
    double lo = best_g / 1.1025;
    double hi = best_g * 1.1025;
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - invphi * (hi - lo);
    double x2 = lo + invphi * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 200 && hi - lo > 1e-13 * best_g; ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + invphi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - invphi * (hi - lo);
            f1 = f(x1);
        }
    }
    return f(0.5 * (lo + hi));
}

BoundReport anyon_gas_bound(const GasSpec& spec, const ConstantsRegistry& reg) {
    validate_gas_spec(spec);
    if (spec.statistics.kind != StatKind::Anyon)
        throw std::invalid_argument("anyon_gas_bound: statistics must be Anyon");
    BoundReport rep;
    rep.kind = "anyon_gas_bound";
    rep.statistics = spec.statistics;
    rep.constants_used["c_Omega_disk"] = reg.c_Omega_disk;

    double dirichlet =
        static_cast<double>(spec.N) * M_PI * M_PI / spec.extent;
    double exclusion = 0.0;
    double C = 0.0;
    double cN = 0.0;
    if (spec.N >= 2) {
        C = spec_c_alpha_N(spec.statistics, spec.N);
        if (C > 0.0) {
            cN = anyon_cN(spec.N);
            double n = static_cast<double>(spec.N);
            exclusion =
                0.5 * reg.c_Omega_disk * cN * C * C * n * n / spec.extent;
        }
    }
    bool use_exclusion = exclusion > dirichlet;
    rep.value = use_exclusion ? exclusion : dirichlet;
    rep.diagnostics["exclusion_term"] = exclusion;
    rep.diagnostics["dirichlet_term"] = dirichlet;
    rep.diagnostics["used_exclusion"] = use_exclusion ? 1.0 : 0.0;
    rep.diagnostics["c_N"] = cN;
    rep.diagnostics["C_alpha_N"] = C;
    return rep;
}

BoundReport ll_gas_bound(const GasSpec& spec, const ConstantsRegistry& reg) {
    validate_gas_spec(spec);
    if (spec.statistics.kind != StatKind::LiebLiniger)
        throw std::invalid_argument(
            "ll_gas_bound: statistics must be LiebLiniger");
    if (spec.statistics.eta < 0.0)
        throw std::domain_error("ll_gas_bound: eta must be >= 0");
    BoundReport rep;
    rep.kind = "ll_gas_bound";
    rep.statistics = spec.statistics;
    rep.constants_used["C_S"] = reg.C_S_lower;
    double xi = xi_S_of_gas(spec);
    double r3 = spec.rhobar * spec.rhobar * spec.rhobar;
    rep.value = reg.C_S_lower * xi * xi * r3;
    put_xi_S_diagnostics(rep, spec);
    rep.diagnostics["value_total"] = rep.value * spec.extent;
    return rep;
}

BoundReport cs_gas_bound(const GasSpec& spec, const ConstantsRegistry& reg) {
    validate_gas_spec(spec);
    if (spec.statistics.kind != StatKind::CalogeroSutherland)
        throw std::invalid_argument(
            "cs_gas_bound: statistics must be CalogeroSutherland");
    double alpha = spec.statistics.alpha;
    if (alpha < 1.0)
        throw InapplicableError(
            "cs_gas_bound: requires alpha >= 1, the sub-fermionic regime "
            "has no bound of this form");
    BoundReport rep;
    rep.kind = "cs_gas_bound";
    rep.statistics = spec.statistics;
    rep.constants_used["C_H"] = reg.C_H;
    double xi = xi_H(alpha);
    double r3 = spec.rhobar * spec.rhobar * spec.rhobar;
    rep.value = reg.C_H * xi * xi * r3;
    double reference = (M_PI * M_PI / 6.0) * alpha * alpha * r3;
    rep.diagnostics["xi_H"] = xi;
    rep.diagnostics["ratio_to_reference"] = rep.value / reference;
    rep.diagnostics["value_total"] = rep.value * spec.extent;
    return rep;
}

BoundReport reference_energy(const GasSpec& spec, bool strict) {
    validate_gas_spec(spec);
    BoundReport rep;
    rep.kind = "reference_energy";
    rep.statistics = spec.statistics;
    double r2 = spec.rhobar * spec.rhobar;
    double r3 = r2 * spec.rhobar;
    switch (spec.statistics.kind) {
        case StatKind::Anyon:
            rep.value = M_PI * r2;  // free fermions in 2D
            break;
        case StatKind::CalogeroSutherland: {
            double alpha = spec.statistics.alpha;
            rep.value = (M_PI * M_PI / 6.0) * alpha * alpha * r3;
            break;
        }
        case StatKind::LiebLiniger: {
            double t = 2.0 * spec.statistics.eta / spec.rhobar;
            const double t_small = 0.1, t_large = 10.0;
            const double e_large = M_PI * M_PI / 3.0;
            double e;
            if (t <= t_small) {
                e = t;
                rep.diagnostics["asymptotic_regime"] = -1.0;
            } else if (t >= t_large) {
                e = e_large;
                rep.diagnostics["asymptotic_regime"] = 1.0;
            } else {
                if (strict)
                    throw InapplicableError(
                        "reference_energy: coupling 2 eta / rhobar is in the "
                        "crossover regime, asymptotics only");
                double w = (std::log(t) - std::log(t_small)) /
                           (std::log(t_large) - std::log(t_small));
                e = std::exp((1.0 - w) * std::log(t_small) +
                             w * std::log(e_large));
                rep.diagnostics["asymptotic_regime"] = 0.0;
                rep.diagnostics["interpolated"] = 1.0;
            }
            rep.diagnostics["coupling"] = t;
            rep.value = 0.5 * e * r3;
            break;
        }
    }
    return rep;
}

BoundReport ll_potential_bound(const GasSpec& spec,
                               const std::vector<double>& V, double dx,
                               const ConstantsRegistry& reg) {
    validate_gas_spec(spec);
    if (spec.statistics.kind != StatKind::LiebLiniger)
        throw std::invalid_argument(
            "ll_potential_bound: statistics must be LiebLiniger");
    if (!(dx > 0.0))
        throw std::invalid_argument("ll_potential_bound: dx must be positive");
    if (spec.statistics.eta == 0.0)
        throw InapplicableError(
            "ll_potential_bound: vanishing exclusion strength at eta = 0, "
            "no bound of this form exists for free bosons");
    double sum = 0.0;
    for (double v : V) {
        double neg = std::max(0.0, -v);
        sum += neg * std::sqrt(neg) * dx;
    }
    double C_S_prime = (2.0 / 3.0) / std::sqrt(3.0 * reg.C_S_lower);
    BoundReport rep;
    rep.kind = "ll_potential_bound";
    rep.statistics = spec.statistics;
    rep.constants_used["C_S"] = reg.C_S_lower;
    rep.constants_used["C_S_prime"] = C_S_prime;
    double xi = xi_S_of_gas(spec);
    rep.value = (sum == 0.0) ? 0.0 : -C_S_prime / xi * sum;
    put_xi_S_diagnostics(rep, spec);
    rep.diagnostics["integral_v_neg_3_2"] = sum;
    return rep;
}

BoundReport anyon_potential_bound(const GasSpec& spec,
                                  const std::vector<double>& V, double dA,
                                  const ConstantsRegistry& reg) {
    validate_gas_spec(spec);
    if (spec.statistics.kind != StatKind::Anyon)
        throw std::invalid_argument(
            "anyon_potential_bound: statistics must be Anyon");
    if (!(dA > 0.0))
        throw std::invalid_argument(
            "anyon_potential_bound: dA must be positive");
    double C = spec.N >= 2 ? spec_c_alpha_N(spec.statistics, spec.N) : 0.0;
    if (C == 0.0)
        throw InapplicableError(
            "anyon_potential_bound: exclusion constant C_{alpha,N} vanishes, "
            "the bound is vacuous for these statistics");
    double sum = 0.0;
    for (double v : V) {
        double neg = std::max(0.0, -v);
        sum += neg * neg * dA;
    }
    BoundReport rep;
    rep.kind = "anyon_potential_bound";
    rep.statistics = spec.statistics;
    rep.constants_used["C_A"] = reg.C_A;
    rep.constants_used["C_A_prime"] = reg.C_A_prime;
    rep.value = -reg.C_A_prime / (C * C) * sum;
    rep.diagnostics["C_alpha_N"] = C;
    rep.diagnostics["integral_v_neg_2"] = sum;
    return rep;
}

}  // namespace exb
