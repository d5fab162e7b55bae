#pragma once

#include <vector>

#include "exb/report.hpp"

namespace exb {

// Nonnegative piecewise-constant density on a uniform grid over [x0, x1].
// Masses over arbitrary subintervals are exact (prefix sums plus linear
// partial cells), which the split-tree thresholds rely on.
struct DensityProfile {
    double x0 = 0.0;
    double x1 = 1.0;
    std::vector<double> cells;
    double mass = 0.0;

    DensityProfile(double x0_, double x1_, std::vector<double> cells_);

    double cell_width() const { return (x1 - x0) / cells.size(); }
    double value_at(double x) const;
    double mass_on(double a, double b) const;

  private:
    std::vector<double> prefix_;  // prefix_[i] = mass of the first i cells
};

enum class NodeLabel { Internal, A, B };

struct SplitNode {
    double lo = 0.0;
    double hi = 0.0;
    double mass = 0.0;
    NodeLabel label = NodeLabel::Internal;
    int left = -1;
    int right = -1;
};

// Dyadic halving of Q0: a node of mass >= 4 splits, mass in [2, 4) is a
// B leaf, mass < 2 is an A leaf. Every branch ends in at least one B leaf
// because a mass >= 4 parent always has a child of mass >= 2.
struct SplitTree {
    double q0_lo = 0.0;
    double q0_hi = 0.0;
    std::vector<SplitNode> nodes;  // nodes[0] is the root

    std::vector<int> leaves() const;  // left-to-right leaf indices
};

// Piecewise-constant function on the (non-uniform) leaf intervals of a
// split tree: values[i] on [edges[i], edges[i+1]), zero outside.
struct LeafProfile {
    std::vector<double> edges;
    std::vector<double> values;
    double mass = 0.0;

    double integral_pow3() const;
};

// Exact uncentered Hardy-Littlewood maximal function at each cell center.
// For piecewise-constant rho the supremum over intervals containing x is
// attained with one endpoint at x itself and the other at a cell boundary:
// a straddling interval's mean never exceeds the larger one-sided mean,
// and one-sided means are monotone in the free endpoint between
// boundaries. Returns a profile on the same grid.
DensityProfile maximal_function(const DensityProfile& rho);

// Recursive A/B labeling over Q0 = [q0_lo, q0_hi]. Total mass below 2 is
// rejected as InapplicableError (the bound it feeds is vacuous there).
SplitTree split_tree(const DensityProfile& rho, double q0_lo, double q0_hi);

// Leaf-average approximation: on each leaf the mean of rho, zero outside
// Q0. Mass over Q0 is preserved exactly.
LeafProfile rho_tilde(const SplitTree& tree, const DensityProfile& rho);

// C_S * sum xi_S(2 eta / rho*)^2 rho^3 over cells, cells with rho = 0
// contributing zero. Accepts eta = +infinity (fermion-type saturation).
BoundReport ll_density_bound(const DensityProfile& rho, double eta);

// (1/32) xi_H(alpha)^2 * integral of rho_tilde^3 over Q0, alpha >= 1.
// Diagnostics carry the weaker (mass/|Q0|)-form as well.
BoundReport cs_density_bound(const DensityProfile& rho, double alpha,
                             double q0_lo, double q0_hi);

}  // namespace exb
