#include "exb/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "exb/applications.hpp"
#include "exb/density.hpp"
#include "exb/errors.hpp"
#include "exb/exclusion.hpp"
#include "exb/io.hpp"
#include "exb/oracle.hpp"
#include "exb/thermo.hpp"

namespace exb::cli {

namespace {

using nlohmann::ordered_json;

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(h));
    return std::string(buf);
}

// Canonical record of everything that influenced a run: the resolved
// parameter values (not the raw flags, so an option given through the
// environment digests the same as a flag) and the bytes of every input
// file.
struct Digest {
    std::string buf;
    void add(const std::string& s) {
        buf.append(s);
        buf.push_back('\x1f');
    }
    void kv(const std::string& key, const std::string& value) {
        add(key + "=" + value);
    }
    void kv(const std::string& key, double value) {
        std::ostringstream ss;
        ss.precision(17);
        ss << value;
        kv(key, ss.str());
    }
    void kv(const std::string& key, long long value) {
        kv(key, std::to_string(value));
    }
    std::string hex() const { return "fnv1a:" + fnv1a_hex(buf); }
};

std::string num(double v) {
    std::ostringstream ss;
    ss.precision(17);
    ss << v;
    return ss.str();
}

struct AlphaArg {
    double value = 0.0;
    std::optional<Fraction> fraction;
};

// Accepts plain decimals and exact ratios like "2/3" (reduced on input).
AlphaArg parse_alpha(const std::string& s) {
    AlphaArg out;
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            size_t u1 = 0, u2 = 0;
            long long mu = std::stoll(s.substr(0, slash), &u1);
            std::string den = s.substr(slash + 1);
            long long nu = std::stoll(den, &u2);
            if (u1 != slash || u2 != den.size())
                throw std::invalid_argument("bad alpha");
            if (mu < 0 || nu <= 0)
                throw std::invalid_argument(
                    "alpha ratio must be nonnegative over a positive "
                    "denominator");
            long long g = std::gcd(mu, nu);
            if (g > 1) {
                mu /= g;
                nu /= g;
            }
            if (nu == 0) nu = 1;
            out.fraction = Fraction{mu, nu};
            out.value = static_cast<double>(mu) / static_cast<double>(nu);
            return out;
        }
        size_t used = 0;
        out.value = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument("bad alpha");
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("cannot parse alpha '" + s + "'");
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("alpha '" + s + "' out of range");
    }
    if (!(out.value >= 0.0))
        throw std::invalid_argument("alpha must be >= 0");
    return out;
}

double parse_CA(const std::string& s) {
    double v;
    if (s == "pi") {
        v = M_PI;
    } else {
        try {
            size_t used = 0;
            v = std::stod(s, &used);
            if (used != s.size()) throw std::invalid_argument("bad C_A");
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse C_A '" + s + "'");
        }
    }
    if (!(v >= ConstantsRegistry::C_A_min && v <= M_PI))
        throw std::invalid_argument("C_A must lie in [1e-4, pi], got '" + s +
                                    "'");
    return v;
}

double parse_vext(const std::string& s) {
    if (s == "inf" || s == "infinity" || s == "+inf")
        return std::numeric_limits<double>::infinity();
    try {
        size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument("bad Vext");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse Vext '" + s + "'");
    }
}

ordered_json statistics_json(const StatisticsParams& st) {
    ordered_json j;
    switch (st.kind) {
        case StatKind::LiebLiniger:
            j["kind"] = "lieb_liniger";
            break;
        case StatKind::CalogeroSutherland:
            j["kind"] = "calogero_sutherland";
            break;
        case StatKind::Anyon:
            j["kind"] = "anyon";
            break;
    }
    j["eta"] = st.eta;
    j["alpha"] = st.alpha;
    if (st.fraction)
        j["fraction"] = {{"mu", st.fraction->mu}, {"nu", st.fraction->nu}};
    else
        j["fraction"] = nullptr;
    return j;
}

ordered_json report_json(const std::string& command, const BoundReport& rep,
                         const Digest& digest) {
    ordered_json j;
    j["command"] = command;
    j["statistics"] = statistics_json(rep.statistics);
    j["value"] = rep.value;
    j["constants_used"] = ordered_json::object();
    for (const auto& kv : rep.constants_used)
        j["constants_used"][kv.first] = kv.second;
    j["diagnostics"] = ordered_json::object();
    for (const auto& kv : rep.diagnostics) j["diagnostics"][kv.first] = kv.second;
    j["inputs_digest"] = digest.hex();
    return j;
}

void emit_json(std::ostream& out, const ordered_json& j) {
    out << j.dump(2) << "\n";
}

void write_svg(const std::string& path, const std::vector<double>& xs,
               const std::vector<double>& ys) {
    std::ofstream f(path);
    if (!f) throw io::ParseError("cannot write '" + path + "'");
    double xlo = xs.front(), xhi = xs.back();
    double ylo = *std::min_element(ys.begin(), ys.end());
    double yhi = *std::max_element(ys.begin(), ys.end());
    double xr = xhi > xlo ? xhi - xlo : 1.0;
    double yr = yhi > ylo ? yhi - ylo : 1.0;
    f << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" "
         "height=\"480\" viewBox=\"0 0 640 480\">\n";
    f << "<rect width=\"640\" height=\"480\" fill=\"white\"/>\n";
    f << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" "
         "points=\"";
    for (size_t i = 0; i < xs.size(); ++i) {
        double px = 40.0 + 560.0 * (xs[i] - xlo) / xr;
        double py = 440.0 - 400.0 * (ys[i] - ylo) / yr;
        if (i) f << " ";
        f << num(px) << "," << num(py);
    }
    f << "\"/>\n</svg>\n";
}

struct XiArgs {
    std::string kind;
    std::vector<double> range;
    int steps = 100;
    std::string out_path, svg_path;
};

int cmd_xi(const XiArgs& a, std::ostream& out) {
    if (a.steps < 1) throw std::invalid_argument("steps must be >= 1");
    double lo = a.range[0], hi = a.range[1];
    if (a.steps > 1 && !(hi > lo))
        throw std::invalid_argument(
            "range upper end must exceed the lower end when steps > 1");
    if (!(lo >= 0.0)) throw std::invalid_argument("range must be >= 0");
    bool is_h = a.kind == "H";
    if (!is_h && a.kind != "S")
        throw std::invalid_argument("kind must be S or H");
    if (is_h && hi > 50.0)
        throw std::invalid_argument("H range is limited to [0, 50]");

    std::vector<double> ps(a.steps), xs(a.steps), ap(a.steps);
    for (int i = 0; i < a.steps; ++i) {
        double p = a.steps == 1 ? lo : lo + (hi - lo) * i / (a.steps - 1);
        ps[i] = p;
        if (is_h) {
            xs[i] = xi_H(p);
            ap[i] = p < 1.0 ? xi_H_approx_small(p) : xi_H_lower(p);
        } else {
            xs[i] = xi_S(p);
            ap[i] = xi_S_approx(p);
        }
    }
    std::ostringstream csv;
    csv << "param,xi,approx\n";
    for (int i = 0; i < a.steps; ++i)
        csv << num(ps[i]) << "," << num(xs[i]) << "," << num(ap[i]) << "\n";
    if (!a.out_path.empty()) {
        std::ofstream f(a.out_path);
        if (!f) throw io::ParseError("cannot write '" + a.out_path + "'");
        f << csv.str();
    } else {
        out << csv.str();
    }
    if (!a.svg_path.empty()) write_svg(a.svg_path, ps, xs);
    return 0;
}

struct BoundArgs {
    bool ll = false, cs = false, anyon = false;
    std::string density_path, potential_path;
    bool uniform = false;
    double rhobar = 0.0, length = 0.0;
    double eta = std::numeric_limits<double>::quiet_NaN();
    std::string alpha_str;
    double gamma = 1.0;
    long long N = 1;
    std::vector<double> q0;
    std::string CA_str;
};

GasSpec gas_spec_for(StatKind kind, double eta, const AlphaArg& alpha,
                     double rhobar, long long N, double extent,
                     double gamma) {
    GasSpec spec;
    spec.statistics.kind = kind;
    spec.statistics.eta = eta;
    spec.statistics.alpha = alpha.value;
    spec.statistics.fraction = alpha.fraction;
    spec.rhobar = rhobar;
    spec.N = N;
    spec.extent = extent;
    spec.gamma = gamma;
    return spec;
}

int cmd_bound(const BoundArgs& a, std::ostream& out, Digest& digest) {
    int kinds = (a.ll ? 1 : 0) + (a.cs ? 1 : 0) + (a.anyon ? 1 : 0);
    if (kinds != 1)
        throw std::invalid_argument(
            "exactly one of --ll, --cs, --anyon is required");
    int sources = (!a.density_path.empty() ? 1 : 0) +
                  (!a.potential_path.empty() ? 1 : 0) + (a.uniform ? 1 : 0);
    if (sources != 1)
        throw std::invalid_argument(
            "exactly one input among --density, --potential, --uniform is "
            "required");

    ConstantsRegistry reg(a.CA_str.empty() ? ConstantsRegistry::C_A_min
                                           : parse_CA(a.CA_str));
    digest.add("bound");
    digest.kv("C_A", reg.C_A);
    BoundReport rep;

    if (!a.density_path.empty() || a.uniform) {
        DensityProfile rho = [&] {
            if (!a.density_path.empty()) {
                std::string text = io::read_file(a.density_path);
                digest.kv("source", "density");
                digest.add(text);
                return io::read_density_csv(text);
            }
            if (!(a.rhobar > 0.0) || !(a.length > 0.0))
                throw std::invalid_argument(
                    "--uniform needs positive --rhobar and --length");
            digest.kv("source", "uniform");
            digest.kv("rhobar", a.rhobar);
            digest.kv("length", a.length);
            return DensityProfile(0.0, a.length,
                                  std::vector<double>(64, a.rhobar));
        }();
        if (a.ll) {
            if (!std::isfinite(a.eta))
                throw std::invalid_argument("--ll needs --eta");
            digest.kv("kind", "ll");
            digest.kv("eta", a.eta);
            rep = ll_density_bound(rho, a.eta);
        } else if (a.cs) {
            if (a.alpha_str.empty())
                throw std::invalid_argument("--cs needs --alpha");
            AlphaArg alpha = parse_alpha(a.alpha_str);
            double q0lo = rho.x0, q0hi = rho.x1;
            if (!a.q0.empty()) {
                q0lo = a.q0[0];
                q0hi = a.q0[1];
            }
            digest.kv("kind", "cs");
            digest.kv("alpha", alpha.value);
            digest.kv("q0_lo", q0lo);
            digest.kv("q0_hi", q0hi);
            rep = cs_density_bound(rho, alpha.value, q0lo, q0hi);
            rep.statistics.fraction = alpha.fraction;
        } else {
            throw std::invalid_argument(
                "--anyon has no 1D density bound; use --potential with a "
                "2D grid or the gas command");
        }
    } else {
        std::string text = io::read_file(a.potential_path);
        digest.kv("source", "potential");
        digest.add(text);
        auto pd = io::read_potential_csv(text);
        if (a.ll) {
            if (pd.two_d)
                throw std::invalid_argument(
                    "--ll expects a 1D potential (header x,V)");
            if (!std::isfinite(a.eta))
                throw std::invalid_argument("--ll needs --eta");
            if (!(a.rhobar > 0.0))
                throw std::invalid_argument("--ll potential needs --rhobar");
            digest.kv("kind", "ll");
            digest.kv("eta", a.eta);
            digest.kv("rhobar", a.rhobar);
            digest.kv("gamma", a.gamma);
            digest.kv("N", a.N);
            GasSpec spec = gas_spec_for(
                StatKind::LiebLiniger, a.eta, AlphaArg{}, a.rhobar, a.N,
                static_cast<double>(a.N) / a.rhobar, a.gamma);
            rep = ll_potential_bound(spec, pd.grid1.V, pd.grid1.dx, reg);
        } else if (a.anyon) {
            if (!pd.two_d)
                throw std::invalid_argument(
                    "--anyon expects a 2D potential (header x,y,V)");
            if (a.alpha_str.empty())
                throw std::invalid_argument("--anyon needs --alpha");
            AlphaArg alpha = parse_alpha(a.alpha_str);
            digest.kv("kind", "anyon");
            digest.kv("alpha", alpha.value);
            if (alpha.fraction) {
                digest.kv("mu", alpha.fraction->mu);
                digest.kv("nu", alpha.fraction->nu);
            }
            digest.kv("N", a.N);
            GasSpec spec =
                gas_spec_for(StatKind::Anyon, 0.0, alpha, 1.0, a.N,
                             static_cast<double>(a.N), 1.0);
            rep = anyon_potential_bound(spec, pd.grid2.V, pd.grid2.dA, reg);
        } else {
            throw std::invalid_argument(
                "--cs has no potential-based bound; use --density");
        }
    }
    emit_json(out, report_json("bound", rep, digest));
    return 0;
}

struct GasArgs {
    bool ll = false, cs = false, anyon = false;
    double eta = std::numeric_limits<double>::quiet_NaN();
    std::string alpha_str;
    double rhobar = 0.0;
    long long N = 0;
    double extent = 0.0;
    double gamma = 1.0;
    std::string CA_str;
    bool reference = false;
    bool strict = false;
};

int cmd_gas(const GasArgs& a, std::ostream& out, Digest& digest) {
    int kinds = (a.ll ? 1 : 0) + (a.cs ? 1 : 0) + (a.anyon ? 1 : 0);
    if (kinds != 1)
        throw std::invalid_argument(
            "exactly one of --ll, --cs, --anyon is required");
    if (a.N < 1) throw std::invalid_argument("--N must be >= 1");
    ConstantsRegistry reg(a.CA_str.empty() ? ConstantsRegistry::C_A_min
                                           : parse_CA(a.CA_str));
    digest.add("gas");
    digest.kv("C_A", reg.C_A);
    digest.kv("N", a.N);
    digest.kv("reference", a.reference ? 1LL : 0LL);
    digest.kv("strict", a.strict ? 1LL : 0LL);
    BoundReport rep;
    if (a.anyon) {
        if (a.alpha_str.empty())
            throw std::invalid_argument("--anyon needs --alpha");
        if (!(a.extent > 0.0))
            throw std::invalid_argument("--anyon needs --extent (area)");
        AlphaArg alpha = parse_alpha(a.alpha_str);
        digest.kv("kind", "anyon");
        digest.kv("alpha", alpha.value);
        if (alpha.fraction) {
            digest.kv("mu", alpha.fraction->mu);
            digest.kv("nu", alpha.fraction->nu);
        }
        digest.kv("extent", a.extent);
        GasSpec spec =
            gas_spec_for(StatKind::Anyon, 0.0, alpha,
                         static_cast<double>(a.N) / a.extent, a.N, a.extent,
                         1.0);
        rep = a.reference ? reference_energy(spec, a.strict)
                          : anyon_gas_bound(spec, reg);
    } else if (a.ll) {
        if (!std::isfinite(a.eta))
            throw std::invalid_argument("--ll needs --eta");
        if (!(a.rhobar > 0.0))
            throw std::invalid_argument("--ll needs --rhobar");
        digest.kv("kind", "ll");
        digest.kv("eta", a.eta);
        digest.kv("rhobar", a.rhobar);
        digest.kv("gamma", a.gamma);
        GasSpec spec = gas_spec_for(
            StatKind::LiebLiniger, a.eta, AlphaArg{}, a.rhobar, a.N,
            static_cast<double>(a.N) / a.rhobar, a.gamma);
        rep = a.reference ? reference_energy(spec, a.strict)
                          : ll_gas_bound(spec, reg);
    } else {
        if (a.alpha_str.empty())
            throw std::invalid_argument("--cs needs --alpha");
        if (!(a.rhobar > 0.0))
            throw std::invalid_argument("--cs needs --rhobar");
        AlphaArg alpha = parse_alpha(a.alpha_str);
        digest.kv("kind", "cs");
        digest.kv("alpha", alpha.value);
        digest.kv("rhobar", a.rhobar);
        GasSpec spec = gas_spec_for(
            StatKind::CalogeroSutherland, 0.0, alpha, a.rhobar, a.N,
            static_cast<double>(a.N) / a.rhobar, 1.0);
        rep = a.reference ? reference_energy(spec, a.strict)
                          : cs_gas_bound(spec, reg);
    }
    emit_json(out, report_json("gas", rep, digest));
    return 0;
}

struct TrapArgs {
    std::string alpha_str = "0";
    long long N = 1;
    double omega = 1.0;
    std::string CA_str;
    double L = std::numeric_limits<double>::quiet_NaN();
};

int cmd_trap(const TrapArgs& a, std::ostream& out, Digest& digest) {
    AlphaArg alpha = parse_alpha(a.alpha_str);
    TrapSpec spec;
    spec.alpha = alpha.value;
    spec.fraction = alpha.fraction;
    spec.N = a.N;
    spec.omega = a.omega;
    spec.C_A = a.CA_str.empty() ? ConstantsRegistry::C_A_min
                                : parse_CA(a.CA_str);
    digest.add("trap");
    digest.kv("alpha", alpha.value);
    if (alpha.fraction) {
        digest.kv("mu", alpha.fraction->mu);
        digest.kv("nu", alpha.fraction->nu);
    }
    digest.kv("N", a.N);
    digest.kv("omega", a.omega);
    digest.kv("C_A", spec.C_A);
    BoundReport rep;
    if (std::isfinite(a.L)) {
        digest.kv("L", a.L);
        spec.L_angular = a.L;
        rep = angular_momentum_bound(spec);
    } else {
        rep = harmonic_trap_bound(spec);
    }
    emit_json(out, report_json("trap", rep, digest));
    return 0;
}

struct StabilityArgs {
    double m = 1.0;
    long long Z = 1;
    long long nu = 1;
    double K = 0.0;
    long long N = 1;
    double b = std::numeric_limits<double>::quiet_NaN();
    std::string CA_str;
};

int cmd_stability(const StabilityArgs& a, std::ostream& out, Digest& digest) {
    ConstantsRegistry reg(a.CA_str.empty() ? ConstantsRegistry::C_A_min
                                           : parse_CA(a.CA_str));
    StabilitySpec spec;
    spec.m = a.m;
    spec.Z = a.Z;
    spec.nu = a.nu;
    spec.K = a.K;
    spec.N = a.N;
    if (std::isfinite(a.b)) spec.b = a.b;
    digest.add("stability");
    digest.kv("m", a.m);
    digest.kv("Z", a.Z);
    digest.kv("nu", a.nu);
    digest.kv("K", a.K);
    digest.kv("N", a.N);
    if (std::isfinite(a.b))
        digest.kv("b", a.b);
    else
        digest.kv("b", "auto");
    digest.kv("C_A", reg.C_A);
    auto rep = stability_bound(spec, reg);
    emit_json(out, report_json("stability", rep, digest));
    return 0;
}

struct ConfineArgs {
    std::string intervals_path, potential_path;
    std::string alpha_str;
    long long N = 2;
    std::string vext_str = "inf";
};

int cmd_confine(const ConfineArgs& a, std::ostream& out, Digest& digest) {
    if (a.alpha_str.empty()) throw std::invalid_argument("--alpha required");
    AlphaArg alpha = parse_alpha(a.alpha_str);
    int sources = (!a.intervals_path.empty() ? 1 : 0) +
                  (!a.potential_path.empty() ? 1 : 0);
    if (sources != 1)
        throw std::invalid_argument(
            "exactly one of --intervals, --potential is required");
    digest.add("confine");
    digest.kv("alpha", alpha.value);
    digest.kv("N", a.N);
    BoundReport rep;
    if (!a.intervals_path.empty()) {
        std::string text = io::read_file(a.intervals_path);
        digest.kv("source", "intervals");
        digest.add(text);
        PartitionSpec spec;
        spec.intervals = io::read_intervals_csv(text);
        spec.V_ext = parse_vext(a.vext_str);
        digest.kv("V_ext", spec.V_ext);
        spec.alpha = alpha.value;
        spec.N = a.N;
        rep = cs_confined_energy(spec);
    } else {
        std::string text = io::read_file(a.potential_path);
        digest.kv("source", "potential");
        digest.add(text);
        auto pd = io::read_potential_csv(text);
        if (pd.two_d)
            throw std::invalid_argument(
                "confinement optimization expects a 1D potential (x,V)");
        auto g = pd.grid1;
        auto fn = [g](double x) {
            if (x <= g.x.front()) return g.V.front();
            if (x >= g.x.back()) return g.V.back();
            double t = (x - g.x.front()) / g.dx;
            size_t i = std::min(static_cast<size_t>(t), g.x.size() - 2);
            double w = t - static_cast<double>(i);
            return g.V[i] * (1.0 - w) + g.V[i + 1] * w;
        };
        rep = optimize_partition(fn, alpha.value, a.N);
    }
    rep.statistics.fraction = alpha.fraction;
    emit_json(out, report_json("confine", rep, digest));
    return 0;
}

struct CounterArgs {
    long long N = 3;
    double epsilon = std::numeric_limits<double>::quiet_NaN();
    double alpha_max = 50.0;
    int bump_samples = 4001;
};

int cmd_counterexample(const CounterArgs& a, std::ostream& out,
                       Digest& digest) {
    if (a.N < 2) throw std::invalid_argument("--N must be >= 2");
    if (!(a.alpha_max > 1.0) || a.alpha_max > 50.0)
        throw std::invalid_argument("--alpha-max must lie in (1, 50]");
    auto bump = oracle::BumpProfile::standard(a.bump_samples);
    // Trapezoid moment of the bump, same node weights as the gap evaluation.
    double phi6 = 0.0;
    size_t n = bump.x.size();
    for (size_t k = 0; k < n; ++k) {
        double w;
        if (k == 0)
            w = (bump.x[1] - bump.x[0]) / 2;
        else if (k == n - 1)
            w = (bump.x[n - 1] - bump.x[n - 2]) / 2;
        else
            w = (bump.x[k + 1] - bump.x[k - 1]) / 2;
        phi6 += w * std::pow(bump.phi[k], 6);
    }
    // Crossing exists when epsilon^2 < C_H phi6 / (9 (N-1)); default is
    // half the threshold.
    double threshold =
        std::sqrt(phi6 / (32.0 * 9.0 * static_cast<double>(a.N - 1)));
    double eps = std::isfinite(a.epsilon) ? a.epsilon : 0.5 * threshold;
    digest.add("counterexample");
    digest.kv("N", a.N);
    digest.kv("epsilon", eps);
    digest.kv("alpha_max", a.alpha_max);
    digest.kv("bump_samples", static_cast<long long>(a.bump_samples));

    auto gap = [&](double alpha) {
        auto g = oracle::counterexample_gap(a.N, alpha, eps, bump);
        return g;
    };
    double alpha_lo = 1.0, alpha_hi = 0.0;
    bool found = false;
    {
        auto g = gap(1.0);
        if (g.rhs > g.lhs_upper) {
            alpha_hi = 1.0;
            found = true;
        }
    }
    for (double aa = 2.0; !found && aa <= a.alpha_max + 1e-12; aa += 1.0) {
        auto g = gap(aa);
        if (g.rhs > g.lhs_upper) {
            alpha_hi = aa;
            alpha_lo = aa - 1.0;
            found = true;
        }
    }
    if (!found)
        throw InapplicableError(
            "no crossing below alpha-max; epsilon " + num(eps) +
            " is too large against threshold " + num(threshold));
    if (alpha_hi > 1.0) {
        for (int it = 0; it < 100; ++it) {
            double mid = 0.5 * (alpha_lo + alpha_hi);
            auto g = gap(mid);
            if (g.rhs > g.lhs_upper)
                alpha_hi = mid;
            else
                alpha_lo = mid;
        }
    }
    double alpha_star = alpha_hi;
    auto g = gap(alpha_star);

    BoundReport rep;
    rep.kind = "counterexample";
    rep.statistics.kind = StatKind::CalogeroSutherland;
    rep.statistics.alpha = alpha_star;
    rep.value = alpha_star;
    rep.constants_used["C_H"] = 1.0 / 32.0;
    rep.diagnostics["alpha_star"] = alpha_star;
    rep.diagnostics["lhs_upper"] = g.lhs_upper;
    rep.diagnostics["rhs"] = g.rhs;
    rep.diagnostics["epsilon"] = eps;
    rep.diagnostics["epsilon_threshold"] = threshold;
    rep.diagnostics["N"] = static_cast<double>(a.N);
    rep.diagnostics["phi6_integral"] = phi6;
    emit_json(out, report_json("counterexample", rep, digest));
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
    Digest digest;

    CLI::App app{"Exclusion-statistics energy bounds"};
    app.require_subcommand(1);

    XiArgs xi;
    auto* xi_cmd =
        app.add_subcommand("xi", "Tabulate exclusion strengths as CSV");
    xi_cmd->add_option("--kind", xi.kind, "S or H")->required();
    xi_cmd->add_option("--range", xi.range, "lo hi")
        ->expected(2)
        ->required();
    xi_cmd->add_option("--steps", xi.steps, "row count");
    xi_cmd->add_option("--out", xi.out_path, "CSV output file");
    xi_cmd->add_option("--svg", xi.svg_path, "SVG output file");

    BoundArgs bound;
    auto* bound_cmd = app.add_subcommand(
        "bound", "Kinetic or potential energy bound from sampled data");
    bound_cmd->add_flag("--ll", bound.ll, "Lieb-Liniger statistics");
    bound_cmd->add_flag("--cs", bound.cs, "Calogero-Sutherland statistics");
    bound_cmd->add_flag("--anyon", bound.anyon, "2D anyon statistics");
    bound_cmd->add_option("--density", bound.density_path,
                          "density CSV (x,rho)");
    bound_cmd->add_option("--potential", bound.potential_path,
                          "potential CSV (x,V or x,y,V)");
    bound_cmd->add_flag("--uniform", bound.uniform,
                        "uniform density from --rhobar and --length");
    bound_cmd->add_option("--rhobar", bound.rhobar, "mean density");
    bound_cmd->add_option("--length", bound.length, "support length");
    bound_cmd->add_option("--eta", bound.eta, "contact strength");
    bound_cmd->add_option("--alpha", bound.alpha_str,
                          "statistics parameter, decimals or mu/nu");
    bound_cmd->add_option("--gamma", bound.gamma, "density safety factor");
    bound_cmd->add_option("--N", bound.N, "particle number");
    bound_cmd->add_option("--q0", bound.q0, "confinement box lo hi")
        ->expected(2);
    bound_cmd->add_option("--CA", bound.CA_str, "C_A in [1e-4, pi]")
        ->envname("EXCLUSION_BOUNDS_CA");

    GasArgs gas;
    auto* gas_cmd =
        app.add_subcommand("gas", "Homogeneous gas energy bound");
    gas_cmd->add_flag("--ll", gas.ll, "Lieb-Liniger statistics");
    gas_cmd->add_flag("--cs", gas.cs, "Calogero-Sutherland statistics");
    gas_cmd->add_flag("--anyon", gas.anyon, "2D anyon statistics");
    gas_cmd->add_option("--eta", gas.eta, "contact strength");
    gas_cmd->add_option("--alpha", gas.alpha_str,
                        "statistics parameter, decimals or mu/nu");
    gas_cmd->add_option("--rhobar", gas.rhobar, "mean density");
    gas_cmd->add_option("--N", gas.N, "particle number")->required();
    gas_cmd->add_option("--extent", gas.extent, "length or area");
    gas_cmd->add_option("--gamma", gas.gamma, "density safety factor");
    gas_cmd->add_option("--CA", gas.CA_str, "C_A in [1e-4, pi]")
        ->envname("EXCLUSION_BOUNDS_CA");
    gas_cmd->add_flag("--reference", gas.reference,
                      "emit the reference energy instead of the bound");
    gas_cmd->add_flag("--strict", gas.strict,
                      "refuse interpolated reference values");

    TrapArgs trap;
    auto* trap_cmd =
        app.add_subcommand("trap", "Harmonically trapped anyon gas");
    trap_cmd->add_option("--alpha", trap.alpha_str,
                         "statistics parameter, decimals or mu/nu");
    trap_cmd->add_option("--N", trap.N, "particle number")->required();
    trap_cmd->add_option("--omega", trap.omega, "trap frequency");
    trap_cmd->add_option("--CA", trap.CA_str, "C_A in [1e-4, pi]")
        ->envname("EXCLUSION_BOUNDS_CA");
    trap_cmd->add_option("--L", trap.L,
                         "angular momentum; switches to the rotation bound");

    StabilityArgs stability;
    auto* stability_cmd = app.add_subcommand(
        "stability", "2D Coulomb stability bound for fractional statistics");
    stability_cmd->add_option("--m", stability.m, "effective mass");
    stability_cmd->add_option("--Z", stability.Z, "max nuclear charge");
    stability_cmd->add_option("--nu", stability.nu,
                              "statistics denominator");
    stability_cmd->add_option("--K", stability.K, "nucleus count");
    stability_cmd->add_option("--N", stability.N, "anyon count");
    stability_cmd->add_option("--b", stability.b, "splitting parameter");
    stability_cmd->add_option("--CA", stability.CA_str, "C_A in [1e-4, pi]")
        ->envname("EXCLUSION_BOUNDS_CA");

    ConfineArgs confine;
    auto* confine_cmd = app.add_subcommand(
        "confine", "Confined Calogero-Sutherland energy lower bound");
    confine_cmd->add_option("--intervals", confine.intervals_path,
                            "interval CSV (lo,hi,V)");
    confine_cmd->add_option("--potential", confine.potential_path,
                            "potential CSV (x,V) to optimize over");
    confine_cmd->add_option("--alpha", confine.alpha_str,
                            "statistics parameter")->required();
    confine_cmd->add_option("--N", confine.N, "particle number")->required();
    confine_cmd->add_option("--Vext", confine.vext_str,
                            "exterior potential, number or inf");

    CounterArgs counter;
    auto* counter_cmd = app.add_subcommand(
        "counterexample",
        "Locate the statistics value where the trial state beats the "
        "conjectured bound");
    counter_cmd->add_option("--N", counter.N, "particle number");
    counter_cmd->add_option("--epsilon", counter.epsilon,
                            "trial state width");
    counter_cmd->add_option("--alpha-max", counter.alpha_max,
                            "search limit");
    counter_cmd->add_option("--bump-samples", counter.bump_samples,
                            "bump discretization");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (xi_cmd->parsed()) return cmd_xi(xi, out);
        if (bound_cmd->parsed()) return cmd_bound(bound, out, digest);
        if (gas_cmd->parsed()) return cmd_gas(gas, out, digest);
        if (trap_cmd->parsed()) return cmd_trap(trap, out, digest);
        if (stability_cmd->parsed())
            return cmd_stability(stability, out, digest);
        if (confine_cmd->parsed()) return cmd_confine(confine, out, digest);
        if (counter_cmd->parsed())
            return cmd_counterexample(counter, out, digest);
        err << "usage error: no subcommand\n";
        return 2;
    } catch (const InapplicableError& e) {
        err << "inapplicable: " << e.what() << "\n";
        return 4;
    } catch (const io::ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace exb::cli
