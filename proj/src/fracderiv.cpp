#include "tempent/fracderiv.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "tempent/errors.hpp"

namespace tempent {

FracParams FracParams::make(double sigma, double lambda, double p, double t) {
    if (!(sigma > 0.0 && sigma < 1.0)) throw DomainError("fractional order must lie in (0, 1)");
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw DomainError("lambda must be finite and >= 0");
    if (!(p > 0.0 && p < 1.0)) throw DomainError("p must lie in (0, 1)");
    if (!std::isfinite(t)) throw DomainError("t must be finite");
    return FracParams(sigma, lambda, p, t);
}

double FracParams::rate() const noexcept { return lambda_ - std::log(p_); }

double gamma_fn(double t) {
    if (!(t > 0.0)) throw DomainError("gamma_fn requires t > 0");
    if (t < 0.5) {
        return std::numbers::pi / (std::sin(std::numbers::pi * t) * gamma_fn(1.0 - t));
    }
    static constexpr double g = 7.0;
    static constexpr std::array<double, 9> coef = {
        0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
    };
    const double z = t - 1.0;
    double series = coef[0];
    for (std::size_t i = 1; i < coef.size(); ++i) series += coef[i] / (z + static_cast<double>(i));
    const double base = z + g + 0.5;
    // Split the power so large t does not overflow before the exp(-base) factor applies.
    const double half_pow = std::pow(base, 0.5 * (z + 0.5));
    return std::sqrt(2.0 * std::numbers::pi) * half_pow * (half_pow * std::exp(-base)) * series;
}

QuadResult laplace_singular_quad(double c, double sigma, double tol) {
    if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("decay rate must be positive");
    if (!(sigma > 0.0 && sigma < 1.0)) throw DomainError("sigma must lie in (0, 1)");
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");

    const double piece_tol = 0.25 * tol;
    const double power = 1.0 / (1.0 - sigma);

    // u = v^power on (0, 1]: u^(-sigma) du = power dv.
    auto head_f = [c, power](double v) { return power * std::exp(-c * std::pow(v, power)); };
    QuadResult head = integrate_adaptive(head_f, 0.0, 1.0, 0.0, piece_tol);

    const double cutoff = std::max(1.0, -std::log(tol * 1e-3) / c);
    QuadResult tail{};
    if (cutoff > 1.0) {
        auto tail_f = [c, sigma](double u) { return std::pow(u, -sigma) * std::exp(-c * u); };
        tail = integrate_adaptive(tail_f, 1.0, cutoff, 0.0, piece_tol);
    }
    // integral_U^inf u^-sigma e^-cu du <= U^-sigma e^-cU / c
    const double dropped = std::pow(cutoff, -sigma) * std::exp(-c * cutoff) / c;

    QuadResult out{head.value + tail.value, head.err_estimate + tail.err_estimate + dropped,
                   head.evaluations + tail.evaluations};
    if (!(out.err_estimate <= tol * std::abs(out.value))) {
        std::ostringstream os;
        os << "laplace_singular_quad(c=" << c << ", sigma=" << sigma << ") error estimate "
           << out.err_estimate << " exceeds tol " << tol;
        throw ToleranceNotReached(os.str());
    }
    return out;
}

QuadResult tempered_integral(const FracParams& params, double tol) {
    const double rate = params.rate();
    const QuadResult base = laplace_singular_quad(rate, params.sigma(), tol);
    const double scale = std::exp(params.t() * rate);
    return {scale * base.value, scale * base.err_estimate, base.evaluations};
}

double default_fd_step(double t) { return 1e-5 * std::max(1.0, std::abs(t)); }

namespace {

double central_difference(const FracParams& params, double h, double tol) {
    const double t = params.t();
    const double ahead = tempered_integral(params.at(t + h), tol).value;
    const double behind = tempered_integral(params.at(t - h), tol).value;
    return (ahead - behind) / (2.0 * h);
}

}  // namespace

double tempered_derivative_numeric(const FracParams& params, double h, bool richardson, double tol) {
    if (!(h > 0.0)) throw DomainError("finite-difference step must be positive");
    double slope = central_difference(params, h, tol);
    if (richardson) {
        const double fine = central_difference(params, 0.5 * h, tol);
        slope = (4.0 * fine - slope) / 3.0;
    }
    return std::exp(-params.lambda() * params.t()) / gamma_fn(1.0 - params.sigma()) * slope;
}

double closed_form_derivative(const FracParams& params) {
    return std::exp(-params.t() * std::log(params.p())) * std::pow(params.rate(), params.sigma());
}

FracGrid FracGrid::standard() {
    FracGrid g;
    for (int i = 1; i <= 9; ++i) {
        g.p.push_back(i / 10.0);
        g.sigma.push_back(i / 10.0);
    }
    g.lambda = {0.0, 0.5, 1.0, 2.0};
    g.t = {-1.0};
    return g;
}

std::vector<FracCheck> verify_frac_grid(const FracGrid& grid, double rel_tol, double abs_tol, Execution exec) {
    const std::size_t nt = grid.t.size();
    const std::size_t nl = grid.lambda.size();
    const std::size_t ns = grid.sigma.size();
    std::vector<FracCheck> rows(grid.size());
    kernels::for_each_index(exec, rows.size(), [&](std::size_t k) {
        const double t = grid.t[k % nt];
        const double lambda = grid.lambda[(k / nt) % nl];
        const double sigma = grid.sigma[(k / (nt * nl)) % ns];
        const double p = grid.p[k / (nt * nl * ns)];
        FracCheck row{p, sigma, lambda, t, std::numeric_limits<double>::quiet_NaN(), 0.0,
                      std::numeric_limits<double>::quiet_NaN(), false};
        try {
            const auto params = FracParams::make(sigma, lambda, p, t);
            row.closed_form = closed_form_derivative(params);
            row.numeric = tempered_derivative_numeric(params, default_fd_step(t));
            const double diff = std::abs(row.numeric - row.closed_form);
            row.rel_err = diff / std::abs(row.closed_form);
            row.passed = diff <= std::max(rel_tol * std::abs(row.closed_form), abs_tol);
        } catch (const std::exception&) {
            row.passed = false;
        }
        rows[k] = row;
    });
    return rows;
}

}  // namespace tempent
