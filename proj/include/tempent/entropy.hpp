#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tempent/errors.hpp"

namespace tempent {

/// Absolute tolerance on |sum(weights) - 1| accepted by ProbDist.
inline constexpr double kSumTolerance = 1e-12;

/// A validated point of the probability simplex with at least two outcomes.
///
/// Weights are stored exactly as given; construction never renormalizes.
class ProbDist {
public:
    /// Throws InvalidDistribution on n < 2, negative or > 1 weights,
    /// non-finite entries, or |sum - 1| > kSumTolerance.
    static ProbDist make(std::vector<double> weights);

    std::size_t size() const noexcept { return weights_.size(); }
    double operator[](std::size_t i) const noexcept { return weights_[i]; }
    std::span<const double> weights() const noexcept { return weights_; }

    /// Copy with one extra zero-probability outcome appended.
    ProbDist with_zero_appended() const;

    friend bool operator==(const ProbDist&, const ProbDist&) = default;

private:
    explicit ProbDist(std::vector<double> w) : weights_(std::move(w)) {}
    std::vector<double> weights_;
};

inline ProbDist make_dist(std::vector<double> weights) { return ProbDist::make(std::move(weights)); }

/// sum |p_i - q_i|; throws DimensionMismatch on unequal sizes.
double l1_distance(const ProbDist& p, const ProbDist& q);

/// Order sigma in (0, 1] and tempering lambda >= 0.
class EntropyParams {
public:
    /// Throws DomainError when either parameter is out of range or not finite.
    static EntropyParams make(double sigma, double lambda);

    double sigma() const noexcept { return sigma_; }
    double lambda() const noexcept { return lambda_; }

    friend bool operator==(const EntropyParams&, const EntropyParams&) = default;

private:
    EntropyParams(double s, double l) : sigma_(s), lambda_(l) {}
    double sigma_;
    double lambda_;
};

/// (lambda + x)^sigma - lambda^sigma for x >= 0.
///
/// When lambda > 0 and x / lambda < 0.5 the difference of powers is formed as
/// lambda^sigma * expm1(sigma * log1p(x / lambda)), which keeps full relative
/// precision for small x.
double g_func(double x, const EntropyParams& params);

/// Per-outcome term x * g(-ln x) on [0, 1]; exactly 0 at both endpoints.
double generator(double x, const EntropyParams& params);

/// d/dx of generator(x). Diverges to -infinity as x -> 1 when lambda = 0 and
/// sigma < 1; that case is reported as an explicit unbounded value.
class DerivativeValue {
public:
    static DerivativeValue finite(double v) noexcept { return DerivativeValue(false, v); }
    static DerivativeValue negative_unbounded() noexcept { return DerivativeValue(true, 0.0); }

    bool is_unbounded() const noexcept { return unbounded_; }
    /// Only meaningful when !is_unbounded().
    double value() const noexcept { return value_; }

private:
    DerivativeValue(bool u, double v) : unbounded_(u), value_(v) {}
    bool unbounded_;
    double value_;
};

/// Throws DomainError for x <= 0 or x > 1.
DerivativeValue generator_derivative(double x, const EntropyParams& params);

/// Compensated sum of generator(p_i); zero weights are skipped.
double entropy(const ProbDist& p, const EntropyParams& params);

/// sum p_i (-ln p_i)^alpha, evaluated directly. alpha in (0, 1].
double ubriaco_entropy(const ProbDist& p, double alpha);

/// -sum p_i ln p_i with 0 ln 0 = 0.
double shannon_entropy(const ProbDist& p);

/// Entropy of the uniform distribution on n outcomes, (lambda + ln n)^sigma - lambda^sigma.
double max_entropy(std::size_t n, const EntropyParams& params);

}  // namespace tempent
