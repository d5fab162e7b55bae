#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "exb/exclusion.hpp"
#include "exb/oracle.hpp"

using namespace exb;
using namespace exb::oracle;

TEST_CASE("ll_neumann ground energy basics") {
    auto free_gas = ll_neumann_ground_energy(0.0, 1.0, 500);
    CHECK(std::abs(free_gas.lambda_min) <= 1e-9);
    CHECK(free_gas.grid_size >= 64);
    CHECK(free_gas.residual <= 1e-11);

    // Dirichlet proxy: eta huge pushes the ground state to (pi/2)^2.
    auto dir = ll_neumann_ground_energy(1e8, 1.0, 100000);
    CHECK(std::abs(dir.lambda_min - M_PI * M_PI / 4) <= 1e-2);

    CHECK_THROWS_AS(ll_neumann_ground_energy(-1.0, 1.0, 500), std::domain_error);
    CHECK_THROWS_AS(ll_neumann_ground_energy(1.0, 0.0, 500), std::domain_error);
    CHECK_THROWS_AS(ll_neumann_ground_energy(1.0, 1.0, 32), std::domain_error);
}

TEST_CASE("ll_neumann agrees with xi_S") {
    for (double target : {0.1, 1.0, 10.0}) {
        for (double l : {0.5, 1.0, 2.0}) {
            double eta = target / l;
            auto r = ll_neumann_ground_energy(eta, l, 20000);
            double xi2 = std::pow(xi_S(target), 2);
            CAPTURE(target);
            CAPTURE(l);
            CHECK(std::abs(r.lambda_min * l * l - xi2) <= 1e-3);
        }
    }
}

TEST_CASE("ll_neumann depends only on the product eta*l") {
    auto r1 = ll_neumann_ground_energy(1.0, 1.0, 20000);
    auto r2 = ll_neumann_ground_energy(0.5, 2.0, 20000);
    CHECK(std::abs(r1.lambda_min * 1.0 - r2.lambda_min * 4.0) <= 1e-6);
}

TEST_CASE("cs_neumann ground energy matches xi_H") {
    auto r = cs_neumann_ground_energy(1.0, 1.0);
    CHECK(r.lambda_min == doctest::Approx(M_PI * M_PI / 4).epsilon(1e-9));
    CHECK(r.residual <= 1e-9);

    auto r2 = cs_neumann_ground_energy(1.0, 2.0);
    CHECK(r2.lambda_min == doctest::Approx(M_PI * M_PI / 16).epsilon(1e-9));

    auto r3 = cs_neumann_ground_energy(2.0, 1.0);
    CHECK(r3.lambda_min >= M_PI * M_PI / 4 + 2.0 - 1e-9);

    for (double alpha : {1.0, 1.5, 2.0, 5.0, 10.0}) {
        auto res = cs_neumann_ground_energy(alpha, 1.0);
        double xi2 = std::pow(xi_H(alpha), 2);
        CAPTURE(alpha);
        CHECK(std::abs(res.lambda_min - xi2) <= 1e-8 * xi2);
    }

    CHECK_THROWS_AS(cs_neumann_ground_energy(0.5, 1.0), std::domain_error);
    CHECK_THROWS_AS(cs_neumann_ground_energy(51.0, 1.0), std::domain_error);
}

TEST_CASE("cs_neumann scale invariance of lambda l^2") {
    for (double alpha : {1.5, 7.0, 25.0}) {
        auto r1 = cs_neumann_ground_energy(alpha, 1.0);
        auto r2 = cs_neumann_ground_energy(alpha, 3.0);
        CAPTURE(alpha);
        CHECK(std::abs(r1.lambda_min - r2.lambda_min * 9.0) <=
              1e-6 * r1.lambda_min);
    }
}

TEST_CASE("radial annulus lower bound certifies the lemma inequality") {
    // Stiffness entries grow like mu/h^2, so at extreme mu the grid must
    // stay moderate or the O(1) potential scale drowns in roundoff.
    const struct { double mu, eps, delta; int n; } cases[] = {
        {1e6, 1.0, 1e-3, 4000}, {1.0, 1.0, 0.5, 4000}, {1e9, 2.0, 0.01, 1000},
        {10.0, 0.5, 0.2, 4000}, {0.5, 3.0, 1e-3, 4000}, {1e9, 2.0, 0.01, 256},
    };
    for (const auto& c : cases) {
        auto r = radial_coulomb_annulus_ground(c.mu, c.eps, c.delta, c.n);
        double lemma = 1.0 / c.mu + 2.0 / c.eps;
        CAPTURE(c.mu);
        CAPTURE(c.eps);
        CAPTURE(c.delta);
        CHECK(r.lambda_min >= -lemma - 1e-2 * lemma);
    }
    auto r = radial_coulomb_annulus_ground(1.0, 1.0, 0.5, 4000);
    CHECK(r.lambda_min >= -3.0);
    CHECK_THROWS_AS(radial_coulomb_annulus_ground(1.0, 1.0, 1.5, 4000),
                    std::domain_error);
    CHECK_THROWS_AS(radial_coulomb_annulus_ground(1.0, 1.0, 0.5, 100),
                    std::domain_error);
}

TEST_CASE("standard bump profile is normalized and symmetric") {
    auto bp = BumpProfile::standard();
    CHECK(bp.x.size() == 4001);
    double h = 2.0 / 4000.0;
    double m2 = 0.0;
    for (size_t k = 0; k < bp.x.size(); ++k) {
        double w = (k == 0 || k + 1 == bp.x.size()) ? h / 2 : h;
        m2 += w * bp.phi[k] * bp.phi[k];
        CHECK(bp.phi[k] >= 0.0);
    }
    CHECK(m2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(bp.phi.front() == 0.0);
    CHECK(bp.phi.back() == 0.0);
    CHECK(bp.phi[2000] == doctest::Approx(bp.phi[2000]).epsilon(1e-15));
    CHECK(bp.dphi[2000] == 0.0);  // even profile, odd derivative
}

TEST_CASE("counterexample gap values and scaling") {
    auto bp = BumpProfile::standard();
    auto g = counterexample_gap(3, 1.0, 0.1, bp);
    // Frozen trapezoid integrals of the standard bump on its 4001 grid:
    // int (phi')^2 = 3.0776091312318, int phi^6 = 0.686471430084.
    CHECK(g.lhs_upper ==
          doctest::Approx(100.0 * 3 * 3.0776091312317799).epsilon(1e-12));
    CHECK(g.rhs == doctest::Approx(100.0 * 3 / 32.0 * (M_PI * M_PI / 4) *
                                   0.68647143008399503)
                       .epsilon(1e-9));
    CHECK(g.lhs_upper > 0.0);
    CHECK(g.rhs > 0.0);

    // At alpha = 1 the pair-interaction term vanishes, so the lhs scales
    // exactly as eps^-2.
    auto a = counterexample_gap(2, 1.0, 0.3, bp);
    auto b = counterexample_gap(2, 1.0, 0.15, bp);
    CHECK(b.lhs_upper == doctest::Approx(4.0 * a.lhs_upper).epsilon(1e-14));

    CHECK_THROWS_AS(counterexample_gap(1, 1.0, 0.1, bp), std::domain_error);
    CHECK_THROWS_AS(counterexample_gap(3, 0.9, 0.1, bp), std::domain_error);
    CHECK_THROWS_AS(counterexample_gap(3, 1.0, 0.4, bp), std::invalid_argument);

    auto bad = bp;
    for (auto& v : bad.phi) v *= 1.1;
    CHECK_THROWS_AS(counterexample_gap(3, 1.0, 0.1, bad),
                    std::invalid_argument);
    auto neg = bp;
    neg.phi[1000] = -neg.phi[1000];
    CHECK_THROWS_AS(counterexample_gap(3, 1.0, 0.1, neg),
                    std::invalid_argument);
}
