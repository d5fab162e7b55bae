#include "exb/density.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "exb/errors.hpp"

namespace exb {

DensityProfile::DensityProfile(double x0_, double x1_,
                               std::vector<double> cells_)
    : x0(x0_), x1(x1_), cells(std::move(cells_)) {
    if (!(x1 > x0))
        throw std::invalid_argument("DensityProfile: x1 must exceed x0");
    if (cells.empty())
        throw std::invalid_argument("DensityProfile: no cells");
    for (double v : cells) {
        if (!(v >= 0.0) || !std::isfinite(v))
            throw std::invalid_argument("DensityProfile: negative cell value");
    }
    double w = cell_width();
    prefix_.resize(cells.size() + 1);
    prefix_[0] = 0.0;
    for (size_t i = 0; i < cells.size(); ++i)
        prefix_[i + 1] = prefix_[i] + cells[i] * w;
    mass = prefix_.back();
}

double DensityProfile::value_at(double x) const {
    if (x < x0 || x >= x1) return 0.0;
    double w = cell_width();
    auto i = static_cast<size_t>((x - x0) / w);
    if (i >= cells.size()) i = cells.size() - 1;
    return cells[i];
}

double DensityProfile::mass_on(double a, double b) const {
    a = std::max(a, x0);
    b = std::min(b, x1);
    if (!(b > a)) return 0.0;
    double w = cell_width();
    auto idx = [&](double t) {
        auto i = static_cast<long long>(std::floor((t - x0) / w));
        return std::clamp<long long>(i, 0, static_cast<long long>(cells.size()) - 1);
    };
    long long ca = idx(a), cb = idx(b);
    double lo_a = x0 + ca * w, lo_b = x0 + cb * w;
    if (ca == cb) return cells[ca] * (b - a);
    double m = cells[ca] * (lo_a + w - a) + cells[cb] * (b - lo_b);
    m += prefix_[cb] - prefix_[ca + 1];
    return m;
}

DensityProfile maximal_function(const DensityProfile& rho) {
    size_t n = rho.cells.size();
    double w = rho.cell_width();
    // prefix masses at cell boundaries
    std::vector<double> pre(n + 1, 0.0);
    for (size_t i = 0; i < n; ++i) pre[i + 1] = pre[i] + rho.cells[i] * w;
    std::vector<double> out(n);
    for (size_t i = 0; i < n; ++i) {
        double best = rho.cells[i];
        double half = 0.5 * w * rho.cells[i];  // mass between center and edge
        // [x, boundary j] to the right, j = i+1 .. n
        for (size_t j = i + 1; j <= n; ++j) {
            double m = half + pre[j] - pre[i + 1];
            double len = (static_cast<double>(j) - i - 0.5) * w;
            best = std::max(best, m / len);
        }
        // [boundary j, x] to the left, j = i .. 0
        for (size_t j = 0; j <= i; ++j) {
            double m = half + pre[i] - pre[j];
            double len = (static_cast<double>(i) - j + 0.5) * w;
            best = std::max(best, m / len);
        }
        out[i] = best;
    }
    return DensityProfile(rho.x0, rho.x1, std::move(out));
}

namespace {

int build_split(const DensityProfile& rho, SplitTree& tree, double lo,
                double hi, int depth) {
    if (depth > 40)
        throw std::runtime_error("split_tree: depth cap exceeded");
    SplitNode node;
    node.lo = lo;
    node.hi = hi;
    node.mass = rho.mass_on(lo, hi);
    int self = static_cast<int>(tree.nodes.size());
    tree.nodes.push_back(node);
    if (node.mass >= 4.0) {
        double mid = 0.5 * (lo + hi);
        int l = build_split(rho, tree, lo, mid, depth + 1);
        int r = build_split(rho, tree, mid, hi, depth + 1);
        tree.nodes[self].label = NodeLabel::Internal;
        tree.nodes[self].left = l;
        tree.nodes[self].right = r;
    } else {
        tree.nodes[self].label =
            node.mass >= 2.0 ? NodeLabel::B : NodeLabel::A;
    }
    return self;
}

void collect_leaves(const SplitTree& tree, int idx, std::vector<int>& out) {
    const SplitNode& nd = tree.nodes[idx];
    if (nd.label == NodeLabel::Internal) {
        collect_leaves(tree, nd.left, out);
        collect_leaves(tree, nd.right, out);
    } else {
        out.push_back(idx);
    }
}

}  // namespace

std::vector<int> SplitTree::leaves() const {
    std::vector<int> out;
    if (!nodes.empty()) collect_leaves(*this, 0, out);
    return out;
}

SplitTree split_tree(const DensityProfile& rho, double q0_lo, double q0_hi) {
    if (!(q0_hi > q0_lo))
        throw std::invalid_argument("split_tree: empty interval");
    if (rho.mass_on(q0_lo, q0_hi) < 2.0)
        throw InapplicableError(
            "split_tree: mass on Q0 is below 2; the local exclusion bound "
            "is vacuous");
    SplitTree tree;
    tree.q0_lo = q0_lo;
    tree.q0_hi = q0_hi;
    build_split(rho, tree, q0_lo, q0_hi, 0);
    return tree;
}

double LeafProfile::integral_pow3() const {
    double s = 0.0;
    for (size_t i = 0; i < values.size(); ++i)
        s += values[i] * values[i] * values[i] * (edges[i + 1] - edges[i]);
    return s;
}

LeafProfile rho_tilde(const SplitTree& tree, const DensityProfile& rho) {
    LeafProfile lp;
    auto ls = tree.leaves();
    if (ls.empty()) throw std::invalid_argument("rho_tilde: empty tree");
    lp.edges.reserve(ls.size() + 1);
    lp.values.reserve(ls.size());
    lp.edges.push_back(tree.nodes[ls.front()].lo);
    for (int idx : ls) {
        const SplitNode& nd = tree.nodes[idx];
        double m = rho.mass_on(nd.lo, nd.hi);
        lp.edges.push_back(nd.hi);
        lp.values.push_back(m / (nd.hi - nd.lo));
        lp.mass += m;
    }
    return lp;
}

BoundReport ll_density_bound(const DensityProfile& rho, double eta) {
    if (std::isnan(eta) || eta < 0.0)
        throw std::domain_error("ll_density_bound: eta must be >= 0");
    ConstantsRegistry reg;
    DensityProfile star = maximal_function(rho);
    double w = rho.cell_width();
    double acc = 0.0;
    double int_rho3 = 0.0;
    for (size_t i = 0; i < rho.cells.size(); ++i) {
        double r = rho.cells[i];
        if (r <= 0.0) continue;
        double cube = r * r * r * w;
        int_rho3 += cube;
        double xi = xi_S(2.0 * eta / star.cells[i]);
        acc += xi * xi * cube;
    }
    BoundReport rep;
    rep.kind = "ll_density_bound";
    rep.statistics.kind = StatKind::LiebLiniger;
    rep.statistics.eta = eta;
    rep.value = reg.C_S_lower * acc;
    rep.constants_used["C_S"] = reg.C_S_lower;
    rep.diagnostics["int_rho3"] = int_rho3;
    rep.diagnostics["int_xi2_rho3"] = acc;
    rep.diagnostics["mass"] = rho.mass;
    return rep;
}

BoundReport cs_density_bound(const DensityProfile& rho, double alpha,
                             double q0_lo, double q0_hi) {
    if (!(alpha >= 1.0))
        throw InapplicableError(
            "cs_density_bound: the bound requires alpha >= 1");
    SplitTree tree = split_tree(rho, q0_lo, q0_hi);
    LeafProfile lp = rho_tilde(tree, rho);
    ConstantsRegistry reg;
    double xi = xi_H(alpha);
    double int_t3 = lp.integral_pow3();
    double q0_len = q0_hi - q0_lo;
    double mass_q0 = lp.mass;
    double weak = mass_q0 * mass_q0 * mass_q0 / (q0_len * q0_len);
    BoundReport rep;
    rep.kind = "cs_density_bound";
    rep.statistics.kind = StatKind::CalogeroSutherland;
    rep.statistics.alpha = alpha;
    rep.value = reg.C_H * xi * xi * int_t3;
    rep.constants_used["C_H"] = reg.C_H;
    rep.diagnostics["xi_H"] = xi;
    rep.diagnostics["int_rho_tilde3"] = int_t3;
    rep.diagnostics["weak_form_int"] = weak;
    rep.diagnostics["value_weak_form"] = reg.C_H * xi * xi * weak;
    rep.diagnostics["mass_q0"] = mass_q0;
    return rep;
}

}  // namespace exb
