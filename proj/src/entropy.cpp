#include "tempent/entropy.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "tempent/detail/summation.hpp"

namespace tempent {

namespace {

std::string fmt_index(const char* what, std::size_t i, double v) {
    std::ostringstream os;
    os.precision(17);
    os << what << " at index " << i << ": " << v;
    return os.str();
}

}  // namespace

ProbDist ProbDist::make(std::vector<double> weights) {
    using R = InvalidDistribution::Reason;
    if (weights.size() < 2) {
        throw InvalidDistribution(R::TooFewOutcomes, "distribution needs at least 2 outcomes");
    }
    for (std::size_t i = 0; i < weights.size(); ++i) {
        const double w = weights[i];
        if (!std::isfinite(w)) throw InvalidDistribution(R::NotFinite, fmt_index("non-finite weight", i, w));
        if (w < 0.0) throw InvalidDistribution(R::NegativeWeight, fmt_index("negative weight", i, w));
        if (w > 1.0) throw InvalidDistribution(R::WeightAboveOne, fmt_index("weight above one", i, w));
    }
    const double total = detail::compensated_sum(weights);
    if (std::abs(total - 1.0) > kSumTolerance) {
        std::ostringstream os;
        os.precision(17);
        os << "weights sum to " << total << ", not 1";
        throw InvalidDistribution(R::SumNotOne, os.str());
    }
    return ProbDist(std::move(weights));
}

ProbDist ProbDist::with_zero_appended() const {
    std::vector<double> w = weights_;
    w.push_back(0.0);
    return ProbDist(std::move(w));
}

double l1_distance(const ProbDist& p, const ProbDist& q) {
    if (p.size() != q.size()) throw DimensionMismatch("L1 distance needs distributions of equal size");
    double d = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) d += std::abs(p[i] - q[i]);
    return d;
}

EntropyParams EntropyParams::make(double sigma, double lambda) {
    if (!(sigma > 0.0 && sigma <= 1.0)) {
        throw DomainError("sigma must lie in (0, 1], got " + std::to_string(sigma));
    }
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
        throw DomainError("lambda must be finite and >= 0, got " + std::to_string(lambda));
    }
    return EntropyParams(sigma, lambda);
}

double g_func(double x, const EntropyParams& params) {
    if (!(x >= 0.0)) throw DomainError("g_func requires x >= 0");
    const double s = params.sigma();
    const double l = params.lambda();
    if (x == 0.0) return 0.0;
    if (l > 0.0 && x / l < 0.5) {
        return std::pow(l, s) * std::expm1(s * std::log1p(x / l));
    }
    return std::pow(l + x, s) - std::pow(l, s);
}

double generator(double x, const EntropyParams& params) {
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("generator requires 0 <= x <= 1");
    if (x == 0.0 || x == 1.0) return 0.0;
    return x * g_func(-std::log(x), params);
}

DerivativeValue generator_derivative(double x, const EntropyParams& params) {
    if (!(x > 0.0 && x <= 1.0)) throw DomainError("generator_derivative requires 0 < x <= 1");
    const double s = params.sigma();
    const double l = params.lambda();
    const double y = -std::log(x);
    const double base = l + y;
    if (base == 0.0) {
        // x == 1 with lambda == 0: sigma * base^(sigma - 1) blows up unless sigma == 1.
        if (s < 1.0) return DerivativeValue::negative_unbounded();
        return DerivativeValue::finite(-1.0);
    }
    return DerivativeValue::finite(g_func(y, params) - s * std::pow(base, s - 1.0));
}

double entropy(const ProbDist& p, const EntropyParams& params) {
    detail::CompensatedSum sum;
    for (double w : p.weights()) {
        if (w == 0.0) continue;
        sum.add(generator(w, params));
    }
    return sum.value();
}

double ubriaco_entropy(const ProbDist& p, double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("alpha must lie in (0, 1]");
    detail::CompensatedSum sum;
    for (double w : p.weights()) {
        if (w == 0.0 || w == 1.0) continue;
        sum.add(w * std::pow(-std::log(w), alpha));
    }
    return sum.value();
}

double shannon_entropy(const ProbDist& p) {
    detail::CompensatedSum sum;
    for (double w : p.weights()) {
        if (w == 0.0) continue;
        sum.add(-w * std::log(w));
    }
    return sum.value();
}

double max_entropy(std::size_t n, const EntropyParams& params) {
    if (n < 2) throw DomainError("max_entropy requires n >= 2");
    return g_func(std::log(static_cast<double>(n)), params);
}

}  // namespace tempent
