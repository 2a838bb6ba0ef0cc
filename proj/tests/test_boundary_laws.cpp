#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "alphastable/boundary_laws.hpp"
#include "alphastable/errors.hpp"
#include "alphastable/quadrature.hpp"
#include "alphastable/specfun.hpp"

#include <cmath>
#include <numbers>

using namespace alphastable;

namespace {

constexpr double PI = std::numbers::pi;

// Mass of the exit density over both outer rays, by tail quadrature with
// the edge exponents read off the closed form.
double h_mass(const StableParams& p, double x) {
    double up = quad_upper_tail([&](double y) { return h_density(p, x, y); },
                                1.0, p.alpha + 1.0, -p.alpha * p.rho, 1e-11);
    double down = quad_upper_tail([&](double u) { return h_density(p, x, -u); },
                                  1.0, p.alpha + 1.0, -p.alpha * p.rho_hat, 1e-11);
    return up + down;
}

double hstar_mass(const StableParams& p, double x) {
    return quad_singular([&](double y) { return hstar_density(p, x, y); },
                         -1.0, 1.0, -p.alpha * p.rho, -p.alpha * p.rho_hat, 1e-11);
}

// Potential-kernel weight appearing in the integral equations below.
double u_kernel(const StableParams& p, double t, double y) {
    double c = y > t ? p.c_rho : p.c_rho_hat;
    return c * std::pow(std::abs(t - y), p.alpha - 1.0);
}

}  // namespace

TEST_CASE("exit density closed values and shape") {
    auto cauchy = make_params(1.0, 0.5);
    CHECK(h_density(cauchy, 0.0, 2.0)
          == doctest::Approx(1.0 / (2.0 * PI * std::sqrt(3.0))).epsilon(1e-14));
    CHECK(h_density(cauchy, 0.0, -2.0) == doctest::Approx(h_density(cauchy, 0.0, 2.0)).epsilon(1e-14));

    // Boundary exponent: (y-1)^{alpha rho} h(x,y) approaches a positive limit.
    auto p = make_params(1.5, 0.6);
    double ar = p.alpha * p.rho;
    double s1 = std::pow(1e-6, ar) * h_density(p, 0.2, 1.0 + 1e-6);
    double s2 = std::pow(1e-8, ar) * h_density(p, 0.2, 1.0 + 1e-8);
    CHECK(s1 > 0.0);
    CHECK(s1 / s2 == doctest::Approx(1.0).epsilon(1e-4));

    CHECK_THROWS_AS(h_density(p, 1.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(h_density(p, 0.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(h_density(make_params(2.0, 0.5), 0.0, 2.0), not_applicable_error);
    CHECK_THROWS_AS(h_density(make_params(0.5, 1.0), 0.0, 2.0), not_applicable_error);
}

TEST_CASE("exit and entrance densities are dual under reflection") {
    for (double alpha : {0.7, 1.0, 1.5}) {
        for (double rho : {0.35, 0.5, 0.62}) {
            auto p = make_params(alpha, rho);
            auto q = p.dual();
            CHECK(h_density(p, 0.3, 1.7) == doctest::Approx(h_density(q, -0.3, -1.7)).epsilon(1e-13));
            CHECK(h_density(p, -0.5, -2.4) == doctest::Approx(h_density(q, 0.5, 2.4)).epsilon(1e-13));
            CHECK(hstar_density(p, 2.2, 0.4) == doctest::Approx(hstar_density(q, -2.2, -0.4)).epsilon(1e-13));
        }
    }
}

TEST_CASE("exit density mass is one across the two-sided grid") {
    struct Pt { double alpha, rho; };
    const Pt grid[] = {{0.6, 0.3}, {0.6, 0.7}, {1.0, 0.45}, {1.3, 0.5}, {1.5, 0.65}, {1.8, 0.52}};
    for (const auto& g : grid) {
        auto p = make_params(g.alpha, g.rho);
        for (double x : {-0.4, 0.55}) {
            CAPTURE(g.alpha); CAPTURE(g.rho); CAPTURE(x);
            CHECK(h_mass(p, x) == doctest::Approx(1.0).epsilon(1e-8));
        }
    }
}

TEST_CASE("entrance density closed value and masses") {
    auto cauchy = make_params(1.0, 0.5);
    CHECK(hstar_density(cauchy, 2.0, 0.0)
          == doctest::Approx(std::sqrt(3.0) / (2.0 * PI)).epsilon(1e-14));

    // alpha >= 1 enters with probability one.
    struct Pt { double alpha, rho; };
    for (Pt pt : {Pt{1.0, 0.45}, Pt{1.3, 0.6}, Pt{1.8, 0.55}}) {
        auto p = make_params(pt.alpha, pt.rho);
        for (double x : {1.4, -2.5}) {
            CAPTURE(pt.alpha); CAPTURE(x);
            CHECK(hstar_mass(p, x) == doctest::Approx(1.0).epsilon(1e-8));
        }
    }
    // alpha < 1 leaves exactly the never-entering mass on the table.
    for (double rho : {0.3, 0.65}) {
        auto p = make_params(0.6, rho);
        for (double x : {1.4, -2.5}) {
            CAPTURE(rho); CAPTURE(x);
            CHECK(hstar_mass(p, x) == doctest::Approx(1.0 - pstar_infinity(p, x)).epsilon(1e-8));
        }
    }
}

TEST_CASE("entrance density stays positive through the cancellation regime") {
    // For large x the two bracket terms agree to many digits; mass must
    // still come out full and the density nonnegative.
    auto p = make_params(1.5, 0.6);
    for (double x : {5.0, 50.0, 1e4}) {
        CAPTURE(x);
        CHECK(hstar_mass(p, x) == doctest::Approx(1.0).epsilon(1e-8));
        for (double y = -0.95; y < 1.0; y += 0.19) {
            CAPTURE(y);
            CHECK(hstar_density(p, x, y) > 0.0);
        }
    }
    // Far-field entrance profile approaches the equilibrium shape: the
    // ratio density/phi-hat stabilises in y (the residual y-dependence of
    // the bracket decays like x^{alpha-2}).
    double r1 = hstar_density(p, 1e7, -0.5) / phi_kernel(p, -0.5, true);
    double r2 = hstar_density(p, 1e7, 0.5) / phi_kernel(p, 0.5, true);
    CHECK(r1 == doctest::Approx(r2).epsilon(5e-3));
}

TEST_CASE("compensation term: integral and hypergeometric routes agree") {
    for (double alpha : {1.3, 1.7}) {
        for (double rho : {0.5, alpha == 1.3 ? 0.62 : 0.55}) {
            auto p = make_params(alpha, rho);
            double arh = alpha * p.rho_hat;
            for (double x : {1.5, 3.0, 20.0}) {
                double viaint = kappa_star(p, x).value;
                double f = hyp2f1(1.0 - alpha * rho, arh, 1.0 + arh, 0.5 * (1.0 - x));
                double via2f1 = p.c_rho_hat * (alpha - 1.0) * std::pow(2.0, alpha - 1.0) / arh *
                                std::pow(0.5 * (x - 1.0), arh) * f;
                CAPTURE(alpha); CAPTURE(rho); CAPTURE(x);
                CHECK(viaint == doctest::Approx(via2f1).epsilon(1e-10));
            }
        }
    }
    auto p = make_params(1.5, 0.5);
    CHECK(kappa_star(p, 1.0).value == 0.0);
    CHECK(kappa_star(p, 2.0).value < kappa_star(p, 3.0).value);
    CHECK_THROWS_AS(kappa_star(make_params(0.8, 0.5), 2.0), not_applicable_error);
    CHECK_THROWS_AS(kappa_star(p, 0.5), std::domain_error);

    CHECK(tstar_tail_constant(p, 2.0) > 0.0);
    CHECK(tstar_tail_constant(p, 1.0) == 0.0);
    CHECK_THROWS_AS(tstar_tail_constant(make_params(2.0, 0.5), 2.0), not_applicable_error);
}

TEST_CASE("Abelian integral equation for the entrance law") {
    // integral of u(t,y) against the entrance density, plus the
    // compensation term when recurrent, recovers the potential kernel.
    struct Pt { double alpha, rho, x, y; };
    const Pt pts[] = {
        {0.7, 0.4, 2.0, 0.3}, {0.7, 0.4, 2.0, -0.6}, {0.5, 0.55, 1.3, 0.0},
        {1.5, 0.6, 1.7, -0.3}, {1.5, 0.6, 1.7, 0.5}, {1.3, 0.45, 3.0, 0.2},
    };
    for (const auto& c : pts) {
        auto p = make_params(c.alpha, c.rho);
        double ar = p.alpha * p.rho, arh = p.alpha * p.rho_hat;
        double sing = c.alpha < 1.0 ? c.alpha - 1.0 : 0.0;
        auto f = [&](double t) { return u_kernel(p, t, c.y) * hstar_density(p, c.x, t); };
        double lhs = quad_singular(f, -1.0, c.y, -ar, sing, 1e-10)
                   + quad_singular(f, c.y, 1.0, sing, -arh, 1e-10);
        if (c.alpha > 1.0) lhs += kappa_star(p, c.x).value;
        double rhs = p.c_rho_hat * std::pow(c.x - c.y, c.alpha - 1.0);
        CAPTURE(c.alpha); CAPTURE(c.rho); CAPTURE(c.x); CAPTURE(c.y);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-7));
    }
}

TEST_CASE("never-entering probability") {
    auto p = make_params(0.5, 0.5);
    // Approach to 0 near the boundary goes like (x-1)^{alpha rho-hat}.
    CHECK(pstar_infinity(p, 1.0 + 1e-8) < 0.01);
    CHECK(pstar_infinity(p, 1.0 + 1e-8) < pstar_infinity(p, 1.01));
    CHECK(pstar_infinity(p, 1e8) == doctest::Approx(1.0).epsilon(1e-3));
    double v3 = pstar_infinity(p, 3.0);
    CHECK(v3 > 0.0);
    CHECK(v3 < 1.0);
    // Symmetric case: same defect from either side.
    CHECK(pstar_infinity(p, -3.0) == doctest::Approx(v3).epsilon(1e-13));
    // Cross-check the closed form against 1 - entered mass.
    auto q = make_params(0.5, 0.6);
    CHECK(pstar_infinity(q, -3.0) == doctest::Approx(1.0 - hstar_mass(q, -3.0)).epsilon(1e-8));
    // Recurrent classes never miss.
    CHECK(pstar_infinity(make_params(1.4, 0.5), 2.0) == 0.0);
    // Increasing paths from above never come back.
    CHECK(pstar_infinity(make_params(0.5, 1.0), 2.0) == 1.0);
    CHECK(pstar_infinity(make_params(0.5, 1.0), -2.0) < 1.0);
}

TEST_CASE("half-line passage density") {
    auto cauchy = make_params(1.0, 0.5);
    CHECK(semiinf_exit_density(cauchy, 0.0, 2.0) == doctest::Approx(1.0 / (2.0 * PI)).epsilon(1e-14));

    // Mass is one whenever upward passage is certain (rho > 0 here).
    for (double alpha : {0.5, 1.0, 1.5}) {
        auto p = make_params(alpha, alpha == 1.5 ? 0.6 : 0.5);
        double ar = p.alpha * p.rho;
        for (double x : {-2.0, 0.4}) {
            double mass = quad_upper_tail([&](double y) { return semiinf_exit_density(p, x, y); },
                                          1.0, 1.0 + ar, -ar, 1e-11);
            CAPTURE(alpha); CAPTURE(x);
            CHECK(mass == doctest::Approx(1.0).epsilon(1e-8));
        }
    }

    // Interval scaling carries the density to other half-lines: passage
    // above level b from x scales with k = (b - x)/(1 - x') for matching
    // relative geometry; check the pure scaling relation on the formula.
    auto p = make_params(1.3, 0.55);
    double k = 3.0;
    // level 1, start x, observed y  <->  level k..., all distances scaled
    double lhs = semiinf_exit_density(p, 1.0 - k * (1.0 - 0.2), 1.0 + k * (2.3 - 1.0)) * k;
    CHECK(lhs == doctest::Approx(semiinf_exit_density(p, 0.2, 2.3)).epsilon(1e-12));

    CHECK_THROWS_AS(semiinf_exit_density(make_params(2.0, 0.5), 0.0, 2.0), not_applicable_error);
    CHECK_THROWS_AS(semiinf_exit_density(make_params(1.5, 1.0 / 1.5), 0.0, 2.0), not_applicable_error);
    CHECK_THROWS_AS(semiinf_exit_density(cauchy, 1.2, 2.0), std::domain_error);
}

TEST_CASE("assembled exit laws: interval") {
    // Brownian branch is purely atomic.
    auto bm_law = exit_law(make_params(2.0, 0.5), Region::Interval, 0.3);
    REQUIRE(bm_law.atoms.size() == 2);
    CHECK(bm_law.atoms[0].weight == doctest::Approx(0.35));
    CHECK(bm_law.atoms[1].weight == doctest::Approx(0.65));
    CHECK(bm_law.density(2.0) == 0.0);
    CHECK(bm_law.defect == 0.0);

    // Creeping exit at the upper end: atom plus density below.
    auto sn = make_params(1.5, 1.0 / 1.5);
    auto sn_law = exit_law(sn, Region::Interval, 0.0);
    REQUIRE(sn_law.atoms.size() == 1);
    CHECK(sn_law.atoms[0].location == 1.0);
    CHECK(sn_law.atoms[0].weight == doctest::Approx(std::pow(0.5, 0.5)).epsilon(1e-14));
    CHECK(sn_law.density(2.0) == 0.0);  // no upward jumps
    double below = quad_upper_tail([&](double u) { return sn_law.density(-u); },
                                   1.0, sn.alpha + 1.0, -(sn.alpha - 1.0), 1e-11);
    CHECK(below + sn_law.atoms[0].weight == doctest::Approx(1.0).epsilon(1e-8));

    // Increasing paths leave through the upper ray only.
    auto sub = make_params(0.5, 1.0);
    auto sub_law = exit_law(sub, Region::Interval, 0.2);
    CHECK(sub_law.atoms.empty());
    CHECK(sub_law.density(-2.0) == 0.0);
    double c_half = std::sin(PI * 0.5) / PI;
    CHECK(sub_law.density(3.0)
          == doctest::Approx(c_half * std::pow(0.8, 0.5) * std::pow(2.0, -0.5) / 2.8).epsilon(1e-14));
    double up = quad_upper_tail([&](double y) { return sub_law.density(y); },
                                1.0, sub.alpha + 1.0, -sub.alpha, 1e-11);
    CHECK(up == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("assembled exit laws: entrance from outside") {
    // Creeping toward the interval: single boundary atom.
    auto sn = make_params(1.5, 1.0 / 1.5);
    auto creep = exit_law(sn, Region::Complement, -2.0);
    REQUIRE(creep.atoms.size() == 1);
    CHECK(creep.atoms[0].location == -1.0);
    CHECK(creep.atoms[0].weight == 1.0);

    // From the jump side: density inside plus an atom at the far endpoint.
    auto law = exit_law(sn, Region::Complement, 2.0);
    REQUIRE(law.atoms.size() == 1);
    CHECK(law.atoms[0].location == -1.0);
    double dens = quad_singular([&](double y) { return law.density(y); },
                                -1.0, 1.0, 0.0, 1.0 - sn.alpha, 1e-11);
    CHECK(dens + law.atoms[0].weight == doctest::Approx(1.0).epsilon(1e-9));

    // Mirror image for the spectrally positive class.
    auto sp_law = exit_law(make_params(1.5, 1.0 - 1.0 / 1.5), Region::Complement, -2.0);
    REQUIRE(sp_law.atoms.size() == 1);
    CHECK(sp_law.atoms[0].location == 1.0);
    CHECK(sp_law.atoms[0].weight == doctest::Approx(law.atoms[0].weight).epsilon(1e-13));

    // Transient two-sided: defect matches the closed form.
    auto tr = make_params(0.5, 0.5);
    auto tr_law = exit_law(tr, Region::Complement, 3.0);
    CHECK(tr_law.defect == doctest::Approx(pstar_infinity(tr, 3.0)).epsilon(1e-13));

    // Increasing paths from above never enter at all.
    auto sub_law = exit_law(make_params(0.5, 1.0), Region::Complement, 2.0);
    CHECK(sub_law.defect == 1.0);
    CHECK(sub_law.density(0.0) == 0.0);
}

TEST_CASE("assembled exit laws: half-line") {
    auto creep = exit_law(make_params(1.5, 1.0 / 1.5), Region::HalfLine, 0.0);
    REQUIRE(creep.atoms.size() == 1);
    CHECK(creep.atoms[0].location == 1.0);
    CHECK(creep.atoms[0].weight == 1.0);

    auto stuck = exit_law(make_params(0.5, 0.0), Region::HalfLine, 0.0);
    CHECK(stuck.defect == 1.0);

    auto law = exit_law(make_params(1.0, 0.5), Region::HalfLine, 0.0);
    CHECK(law.density(2.0) == doctest::Approx(1.0 / (2.0 * PI)).epsilon(1e-14));
    CHECK(law.defect == 0.0);
}

TEST_CASE("mean exit time of the interval") {
    auto bm = make_params(2.0, 0.5);
    CHECK(expected_exit_time(bm, 0.3) == doctest::Approx((1.0 - 0.09) / 2.0).epsilon(1e-14));
    auto p = make_params(1.5, 0.6);
    CHECK(expected_exit_time(p, 0.0) == doctest::Approx(1.0 / std::tgamma(2.5)).epsilon(1e-14));
    // Vanishes at the boundary, maximal somewhere inside.
    CHECK(expected_exit_time(p, 1.0 - 1e-12) < 1e-8);
    CHECK_THROWS_AS(expected_exit_time(p, 1.0), std::domain_error);
}
