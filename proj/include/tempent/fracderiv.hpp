#pragma once

#include <cstddef>
#include <vector>

#include "tempent/kernels.hpp"
#include "tempent/quadrature.hpp"

namespace tempent {

/// Inputs of the tempered Liouville derivative of u(s) = exp(-s ln p) at t.
class FracParams {
public:
    /// Throws DomainError unless 0 < sigma < 1, lambda >= 0, 0 < p < 1 and t is finite.
    static FracParams make(double sigma, double lambda, double p, double t);

    double sigma() const noexcept { return sigma_; }
    double lambda() const noexcept { return lambda_; }
    double p() const noexcept { return p_; }
    double t() const noexcept { return t_; }
    /// Decay rate lambda - ln p of the integrand; always > 0.
    double rate() const noexcept;

    FracParams at(double t) const { return make(sigma_, lambda_, p_, t); }

private:
    FracParams(double s, double l, double p, double t) : sigma_(s), lambda_(l), p_(p), t_(t) {}
    double sigma_;
    double lambda_;
    double p_;
    double t_;
};

/// Lanczos approximation (g = 7, 9 terms) with reflection below 1/2.
/// Throws DomainError for t <= 0.
double gamma_fn(double t);

inline constexpr double kDefaultQuadTol = 1e-10;

/// integral_0^inf u^(-sigma) exp(-c u) du.
///
/// (0, 1] is integrated after u = v^(1/(1-sigma)), which makes the integrand
/// bounded; [1, U] is integrated adaptively with U chosen so exp(-c U) < tol * 1e-3,
/// and the analytic bound on the dropped tail is folded into err_estimate.
/// Throws ToleranceNotReached if err_estimate > tol * |value|.
QuadResult laplace_singular_quad(double c, double sigma, double tol = kDefaultQuadTol);

/// integral_{-inf}^t (t - s)^(-sigma) e^(lambda s) e^(-s ln p) ds, computed as
/// exp(t * rate) * laplace_singular_quad(rate, sigma).
QuadResult tempered_integral(const FracParams& params, double tol = kDefaultQuadTol);

/// h = 1e-5 * max(1, |t|).
double default_fd_step(double t);

/// exp(-lambda t) / Gamma(1 - sigma) times the central difference of the
/// tempered integral at t with step h. With richardson = true the (h, h/2)
/// pair is combined to cancel the h^2 term.
double tempered_derivative_numeric(const FracParams& params, double h, bool richardson = false,
                                   double tol = kDefaultQuadTol);

/// exp(-t ln p) * (lambda - ln p)^sigma.
double closed_form_derivative(const FracParams& params);

/// One row of a derivative verification grid.
struct FracCheck {
    double p;
    double sigma;
    double lambda;
    double t;
    double numeric;
    double closed_form;
    double rel_err;
    bool passed;
};

struct FracGrid {
    std::vector<double> p;
    std::vector<double> sigma;
    std::vector<double> lambda;
    std::vector<double> t;

    /// p, sigma in {0.1, ..., 0.9}, lambda in {0, 0.5, 1, 2}, t = -1.
    static FracGrid standard();
    std::size_t size() const { return p.size() * sigma.size() * lambda.size() * t.size(); }
};

/// Numeric vs closed form at every grid point, in (p, sigma, lambda, t)
/// lexicographic order. A point passes when
/// |numeric - closed| <= max(rel_tol * |closed|, abs_tol); a quadrature failure
/// yields a failing row with a NaN numeric value.
std::vector<FracCheck> verify_frac_grid(const FracGrid& grid, double rel_tol, double abs_tol,
                                        Execution exec = Execution::Parallel);

}  // namespace tempent
