#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "tempent/entropy.hpp"
#include "tempent/fracderiv.hpp"

using namespace tempent;

TEST(Gamma, ClassicalValues) {
    EXPECT_NEAR(gamma_fn(1.0), 1.0, 1e-15);
    EXPECT_NEAR(gamma_fn(0.5), std::sqrt(std::numbers::pi), 2e-15);
    EXPECT_NEAR(gamma_fn(5.0), 24.0, 24.0 * 1e-14);
    // pi / sin(0.3 pi), mpmath.
    EXPECT_NEAR(gamma_fn(0.3) * gamma_fn(0.7), 3.8832220774509332, 1e-13);
}

TEST(Gamma, RelativeErrorAgainstLibm) {
    for (double t = 0.01; t <= 10.0; t += 0.01) {
        const double ref = std::tgamma(t);
        EXPECT_LE(std::abs(gamma_fn(t) / ref - 1.0), 1e-13) << "t=" << t;
    }
}

TEST(Gamma, DomainError) {
    EXPECT_THROW((void)gamma_fn(0.0), DomainError);
    EXPECT_THROW((void)gamma_fn(-1.5), DomainError);
}

TEST(LaplaceQuad, Examples) {
    EXPECT_NEAR(laplace_singular_quad(1.0, 0.5).value, 1.772453850905516, 1e-9);
    EXPECT_NEAR(laplace_singular_quad(2.0, 0.5).value, 1.2533141373155003, 1e-9);
    // Gamma(0.99), mpmath.
    EXPECT_NEAR(laplace_singular_quad(1.0, 0.01).value, 1.0058719796441078, 1e-9);
}

TEST(LaplaceQuad, GammaIdentityAcrossRange) {
    const double tol = 1e-10;
    for (double c : {0.1, 0.37, 1.0, 2.0, 7.5, 20.0, 50.0}) {
        for (double s = 0.05; s < 0.96; s += 0.05) {
            const auto r = laplace_singular_quad(c, s, tol);
            const double closed = std::tgamma(1.0 - s) * std::pow(c, s - 1.0);
            EXPECT_LE(std::abs(r.value / closed - 1.0), tol) << "c=" << c << " s=" << s;
            EXPECT_LE(r.err_estimate, tol * r.value);
        }
    }
}

TEST(LaplaceQuad, ToleranceNotReached) {
    // Asking for a tolerance below double resolution cannot be certified.
    EXPECT_THROW((void)laplace_singular_quad(1.0, 0.5, 1e-300), ToleranceNotReached);
}

TEST(LaplaceQuad, DomainErrors) {
    EXPECT_THROW((void)laplace_singular_quad(0.0, 0.5), DomainError);
    EXPECT_THROW((void)laplace_singular_quad(1.0, 1.0), DomainError);
    EXPECT_THROW((void)laplace_singular_quad(1.0, 0.5, 0.0), DomainError);
}

TEST(FracParams, Validation) {
    EXPECT_NO_THROW((void)FracParams::make(0.5, 0.0, 0.5, -1.0));
    EXPECT_THROW((void)FracParams::make(1.0, 0.0, 0.5, -1.0), DomainError);
    EXPECT_THROW((void)FracParams::make(0.0, 0.0, 0.5, -1.0), DomainError);
    EXPECT_THROW((void)FracParams::make(0.5, -0.1, 0.5, -1.0), DomainError);
    EXPECT_THROW((void)FracParams::make(0.5, 0.0, 1.0, -1.0), DomainError);
    EXPECT_THROW((void)FracParams::make(0.5, 0.0, 0.0, -1.0), DomainError);
    EXPECT_THROW((void)FracParams::make(0.5, 0.0, 0.5, NAN), DomainError);
}

TEST(TemperedIntegral, Examples) {
    const auto at_zero = tempered_integral(FracParams::make(0.5, 0.0, std::exp(-1.0), 0.0));
    EXPECT_NEAR(at_zero.value, 1.772453850905516, 1e-9);

    // e^-(1 + ln 2) Gamma(0.5) (1 + ln 2)^-0.5, mpmath.
    const auto r = tempered_integral(FracParams::make(0.5, 1.0, 0.5, -1.0));
    EXPECT_NEAR(r.value, 0.25055501678071339, 1e-10);
}

TEST(TemperedIntegral, UnitShiftScalesByRate) {
    for (double p : {0.1, 0.5, 0.9}) {
        for (double l : {0.0, 1.0}) {
            const auto prm = FracParams::make(0.3, l, p, -1.0);
            const double ratio = tempered_integral(prm.at(0.0)).value / tempered_integral(prm).value;
            EXPECT_NEAR(ratio, std::exp(l - std::log(p)), 1e-12 * ratio);
        }
    }
}

TEST(ClosedForm, Examples) {
    EXPECT_NEAR(closed_form_derivative(FracParams::make(0.5, 0.0, 0.5, -1.0)), 0.41627730557884888, 1e-15);
    // sigma = 1 is outside the derivative's order range; the first-order value is
    // p (lambda - ln p), checked here as the sigma -> 1 limit.
    EXPECT_NEAR(closed_form_derivative(FracParams::make(1.0 - 1e-12, 0.0, 0.5, -1.0)), 0.34657359027997265, 1e-12);
    const auto at0 = FracParams::make(0.4, 2.0, 0.3, 0.0);
    EXPECT_NEAR(closed_form_derivative(at0), std::pow(2.0 - std::log(0.3), 0.4), 1e-15);
}

TEST(TemperedDerivative, MatchesClosedFormAtMinusOne) {
    for (double p : {0.1, 0.5, 0.9}) {
        for (double s : {0.1, 0.5, 0.9}) {
            for (double l : {0.0, 2.0}) {
                const auto prm = FracParams::make(s, l, p, -1.0);
                const double closed = closed_form_derivative(prm);
                const double numeric = tempered_derivative_numeric(prm, default_fd_step(-1.0));
                EXPECT_LE(std::abs(numeric - closed), std::max(1e-6 * std::abs(closed), 1e-9));
            }
        }
    }
}

TEST(TemperedDerivative, UntemperedCaseIsLiouville) {
    // lambda = 0: p (-ln p)^sigma, the untempered generator term.
    for (double p : {0.2, 0.7}) {
        const auto prm = FracParams::make(0.5, 0.0, p, -1.0);
        const double numeric = tempered_derivative_numeric(prm, default_fd_step(-1.0));
        EXPECT_NEAR(numeric, generator(p, EntropyParams::make(0.5, 0.0)), 1e-6 * numeric);
    }
}

TEST(TemperedDerivative, OtherEvaluationPoints) {
    for (double t : {-2.0, 0.5}) {
        const auto prm = FracParams::make(0.35, 1.0, 0.4, t);
        const double closed = closed_form_derivative(prm);
        EXPECT_LE(std::abs(tempered_derivative_numeric(prm, default_fd_step(t)) - closed), 1e-6 * closed);
    }
}

TEST(TemperedDerivative, SecondOrderConvergence) {
    const auto prm = FracParams::make(0.5, 1.0, 0.3, -1.0);
    const double closed = closed_form_derivative(prm);
    const double hs[] = {1e-3, 5e-4, 2.5e-4};
    double lx[3], ly[3];
    for (int i = 0; i < 3; ++i) {
        lx[i] = std::log(hs[i]);
        ly[i] = std::log(std::abs(tempered_derivative_numeric(prm, hs[i]) - closed));
    }
    const double mx = (lx[0] + lx[1] + lx[2]) / 3, my = (ly[0] + ly[1] + ly[2]) / 3;
    double num = 0, den = 0;
    for (int i = 0; i < 3; ++i) {
        num += (lx[i] - mx) * (ly[i] - my);
        den += (lx[i] - mx) * (lx[i] - mx);
    }
    EXPECT_NEAR(num / den, 2.0, 0.2);
    // Halving h divides the error by about 4.
    EXPECT_NEAR(std::exp(ly[0] - ly[1]), 4.0, 0.4);
}

TEST(TemperedDerivative, RichardsonImproves) {
    const auto prm = FracParams::make(0.5, 1.0, 0.3, -1.0);
    const double closed = closed_form_derivative(prm);
    const double plain = std::abs(tempered_derivative_numeric(prm, 1e-3) - closed);
    const double extrap = std::abs(tempered_derivative_numeric(prm, 1e-3, true) - closed);
    EXPECT_LT(extrap, plain / 100.0);
}

TEST(TemperedDerivative, ConsistentWithGenerator) {
    for (double p = 0.1; p < 0.95; p += 0.1) {
        for (double s = 0.1; s < 0.95; s += 0.1) {
            for (double l : {0.0, 0.5, 1.0, 2.0}) {
                const double kernel = closed_form_derivative(FracParams::make(s, l, p, -1.0));
                EXPECT_NEAR(generator(p, EntropyParams::make(s, l)), p * (kernel / p - std::pow(l, s)), 1e-12);
            }
        }
    }
}

TEST(FracGrid, StandardGridPassesSeriallyAndInParallel) {
    const auto grid = FracGrid::standard();
    EXPECT_EQ(grid.size(), 9u * 9u * 4u);
    const auto a = verify_frac_grid(grid, 1e-6, 1e-9, Execution::Serial);
    const auto b = verify_frac_grid(grid, 1e-6, 1e-9, Execution::Parallel);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_TRUE(a[i].passed) << "p=" << a[i].p << " s=" << a[i].sigma << " l=" << a[i].lambda;
        EXPECT_EQ(a[i].numeric, b[i].numeric);
    }
    EXPECT_EQ(a.front().p, 0.1);
    EXPECT_EQ(a.front().lambda, 0.0);
    EXPECT_EQ(a[1].lambda, 0.5);
}
