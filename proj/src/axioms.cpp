#include "tempent/axioms.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "tempent/detail/random.hpp"

namespace tempent {

std::string_view axiom_name(Axiom a) {
    switch (a) {
        case Axiom::Nonnegativity: return "nonnegativity";
        case Axiom::Continuity: return "continuity";
        case Axiom::Maximality: return "maximality";
        case Axiom::Expansibility: return "expansibility";
        case Axiom::GeneratorConcavity: return "generator_concavity";
        case Axiom::EntropyConcavity: return "entropy_concavity";
        case Axiom::LambdaInequality: return "lambda_inequality";
        case Axiom::PowerSubadditivity: return "power_subadditivity";
    }
    return "unknown";
}

std::vector<ProbDist> sample_simplex(std::size_t n, std::size_t count, std::uint64_t seed) {
    if (n < 2) throw DomainError("sample_simplex requires n >= 2");
    detail::Rng rng(seed);
    std::vector<ProbDist> out;
    out.reserve(count);
    std::vector<double> w(n);
    for (std::size_t k = 0; k < count; ++k) {
        double total = 0.0;
        for (auto& x : w) {
            x = detail::standard_exponential(rng);
            total += x;
        }
        for (auto& x : w) x /= total;
        out.push_back(ProbDist::make(w));
    }
    return out;
}

// --- margins ---------------------------------------------------------------

double nonnegativity_margin(const ProbDist& p, const EntropyParams& params) {
    return -entropy(p, params);
}

double maximality_margin(const ProbDist& p, const EntropyParams& params) {
    return entropy(p, params) - max_entropy(p.size(), params);
}

double expansibility_margin(const ProbDist& p, const EntropyParams& params) {
    return std::abs(entropy(p.with_zero_appended(), params) - entropy(p, params));
}

double lambda_gap(const ProbDist& p, double sigma, double lambda) {
    return entropy(p, EntropyParams::make(sigma, lambda)) - entropy(p, EntropyParams::make(sigma, 0.0));
}

double power_subadditivity_margin(double x, double y, double alpha) {
    if (!(x >= 0.0 && y >= 0.0)) throw DomainError("power subadditivity requires x, y >= 0");
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("power subadditivity requires alpha in (0, 1)");
    return std::pow(x + y, alpha) - (std::pow(x, alpha) + std::pow(y, alpha));
}

namespace {

ProbDist mixture(const ProbDist& p, const ProbDist& q, double t) {
    std::vector<double> w(p.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = t * p[i] + (1.0 - t) * q[i];
    return ProbDist::make(std::move(w));
}

}  // namespace

double entropy_concavity_margin(const ProbDist& p, const ProbDist& q, double t,
                                const EntropyParams& params) {
    if (p.size() != q.size()) throw DimensionMismatch("concavity check needs distributions of equal size");
    if (!(t >= 0.0 && t <= 1.0)) throw DomainError("mixing weight must lie in [0, 1]");
    return t * entropy(p, params) + (1.0 - t) * entropy(q, params) - entropy(mixture(p, q, t), params);
}

double generator_second_difference(double x, double h, const EntropyParams& params) {
    return (generator(x + h, params) - 2.0 * generator(x, params) + generator(x - h, params)) / (h * h);
}

// --- single-instance checks ------------------------------------------------

AxiomReport check_expansibility(const ProbDist& p, const EntropyParams& params) {
    return {Axiom::Expansibility, 1, expansibility_margin(p, params), 0.0, {p}, {}, params};
}

AxiomReport check_entropy_concavity(const ProbDist& p, const ProbDist& q, double t,
                                    const EntropyParams& params) {
    return {Axiom::EntropyConcavity, 1, entropy_concavity_margin(p, q, t, params),
            kEntropyConcavityTol, {p, q}, {t}, params};
}

AxiomReport check_lambda_inequality(const ProbDist& p, double sigma, double lambda) {
    return {Axiom::LambdaInequality, 1, lambda_gap(p, sigma, lambda), kLambdaInequalityTol,
            {p}, {sigma, lambda}, EntropyParams::make(sigma, lambda)};
}

AxiomReport check_power_subadditivity(double x, double y, double alpha) {
    return {Axiom::PowerSubadditivity, 1, power_subadditivity_margin(x, y, alpha),
            kPowerSubadditivityTol, {}, {x, y, alpha}, std::nullopt};
}

// --- sampled checks --------------------------------------------------------

namespace {

template <class Margin>
AxiomReport sampled_report(Axiom axiom, double tol, const std::vector<ProbDist>& draws,
                           const EntropyParams& params, Execution exec, Margin&& margin) {
    const auto best = kernels::max_margin(exec, draws.size(), [&](std::size_t i) { return margin(draws[i]); });
    AxiomReport r{axiom, draws.size(), best.value, tol, {}, {}, params};
    if (!draws.empty()) r.witness.push_back(draws[best.index]);
    return r;
}

void require_samples(std::size_t samples) {
    if (samples < 1) throw DomainError("at least one sample is required");
}

}  // namespace

AxiomReport check_nonnegativity(std::size_t n, const EntropyParams& params, std::size_t samples,
                                std::uint64_t seed, Execution exec) {
    require_samples(samples);
    const auto draws = sample_simplex(n, samples, seed);
    return sampled_report(Axiom::Nonnegativity, kNonnegativityTol, draws, params, exec,
                          [&](const ProbDist& p) { return nonnegativity_margin(p, params); });
}

AxiomReport check_maximality(std::size_t n, const EntropyParams& params, std::size_t samples,
                             std::uint64_t seed, Execution exec) {
    require_samples(samples);
    const auto draws = sample_simplex(n, samples, seed);
    return sampled_report(Axiom::Maximality, kMaximalityTol, draws, params, exec,
                          [&](const ProbDist& p) { return maximality_margin(p, params); });
}

AxiomReport check_expansibility(std::size_t n, const EntropyParams& params, std::size_t samples,
                                std::uint64_t seed, Execution exec) {
    require_samples(samples);
    const auto draws = sample_simplex(n, samples, seed);
    return sampled_report(Axiom::Expansibility, 0.0, draws, params, exec,
                          [&](const ProbDist& p) { return expansibility_margin(p, params); });
}

AxiomReport check_lambda_inequality(std::size_t n, double sigma, double lambda, std::size_t samples,
                                    std::uint64_t seed, Execution exec) {
    require_samples(samples);
    const auto params = EntropyParams::make(sigma, lambda);
    const auto draws = sample_simplex(n, samples, seed);
    auto r = sampled_report(Axiom::LambdaInequality, kLambdaInequalityTol, draws, params, exec,
                            [&](const ProbDist& p) { return lambda_gap(p, sigma, lambda); });
    r.witness_scalars = {sigma, lambda};
    return r;
}

AxiomReport check_continuity(std::size_t n, const EntropyParams& params, std::size_t samples,
                             std::uint64_t seed, Execution exec) {
    require_samples(samples);
    const auto draws = sample_simplex(n, 2 * samples, seed);
    // Nudge each base draw toward its partner until the L1 gap is just under the radius.
    std::vector<ProbDist> nudged;
    nudged.reserve(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        const auto& p = draws[2 * i];
        const auto& r = draws[2 * i + 1];
        const double dist = l1_distance(p, r);
        const double eta = dist > 0.0 ? std::min(1.0, 0.999 * kContinuityRadius / dist) : 0.0;
        nudged.push_back(mixture(r, p, eta));
    }
    const auto best = kernels::max_margin(exec, samples, [&](std::size_t i) {
        return std::abs(entropy(draws[2 * i], params) - entropy(nudged[i], params));
    });
    return {Axiom::Continuity, samples, best.value, kContinuityTol,
            {draws[2 * best.index], nudged[best.index]}, {}, params};
}

AxiomReport check_entropy_concavity(std::size_t n, const EntropyParams& params, std::size_t samples,
                                    std::uint64_t seed, Execution exec) {
    require_samples(samples);
    const auto draws = sample_simplex(n, 2 * samples, seed);
    detail::Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<double> ts(samples);
    for (auto& t : ts) t = detail::uniform01(rng);
    const auto best = kernels::max_margin(exec, samples, [&](std::size_t i) {
        return entropy_concavity_margin(draws[2 * i], draws[2 * i + 1], ts[i], params);
    });
    return {Axiom::EntropyConcavity, samples, best.value, kEntropyConcavityTol,
            {draws[2 * best.index], draws[2 * best.index + 1]}, {ts[best.index]}, params};
}

AxiomReport check_generator_concavity(const EntropyParams& params, std::size_t grid_points, Execution exec) {
    if (grid_points < 3) throw DomainError("generator concavity grid needs at least 3 points");
    const double step = (kConcavityGridHi - kConcavityGridLo) / static_cast<double>(grid_points - 1);
    auto x_at = [&](std::size_t i) { return kConcavityGridLo + step * static_cast<double>(i); };
    const auto best = kernels::max_margin(exec, grid_points, [&](std::size_t i) {
        return generator_second_difference(x_at(i), kConcavityFdStep, params);
    });
    return {Axiom::GeneratorConcavity, grid_points, best.value, kConcavityFdTol,
            {}, {x_at(best.index), kConcavityFdStep}, params};
}

AxiomReport check_power_subadditivity_grid(const std::vector<double>& alphas, std::size_t grid_points,
                                           Execution exec) {
    if (alphas.empty() || grid_points < 2) throw DomainError("power subadditivity grid is empty");
    // 0 followed by log-spaced values in [1e-6, 1e3].
    std::vector<double> xs{0.0};
    for (std::size_t i = 0; i + 1 < grid_points; ++i) {
        const double e = -6.0 + 9.0 * static_cast<double>(i) / static_cast<double>(grid_points > 2 ? grid_points - 2 : 1);
        xs.push_back(std::pow(10.0, e));
    }
    const std::size_t m = xs.size();
    const std::size_t total = alphas.size() * m * m;
    auto unpack = [&](std::size_t k) {
        const std::size_t a = k / (m * m);
        const std::size_t rem = k % (m * m);
        return std::array<double, 3>{xs[rem / m], xs[rem % m], alphas[a]};
    };
    const auto best = kernels::max_margin(exec, total, [&](std::size_t k) {
        const auto [x, y, a] = unpack(k);
        return power_subadditivity_margin(x, y, a);
    });
    const auto [x, y, a] = unpack(best.index);
    return {Axiom::PowerSubadditivity, total, best.value, kPowerSubadditivityTol, {}, {x, y, a}, std::nullopt};
}

double reevaluate(const AxiomReport& r) {
    auto need = [&](bool ok) {
        if (!ok) throw std::invalid_argument("report witness is incomplete");
    };
    switch (r.axiom) {
        case Axiom::Nonnegativity:
            need(!r.witness.empty() && r.params.has_value());
            return nonnegativity_margin(r.witness[0], *r.params);
        case Axiom::Continuity:
            need(r.witness.size() == 2 && r.params.has_value());
            return std::abs(entropy(r.witness[0], *r.params) - entropy(r.witness[1], *r.params));
        case Axiom::Maximality:
            need(!r.witness.empty() && r.params.has_value());
            return maximality_margin(r.witness[0], *r.params);
        case Axiom::Expansibility:
            need(!r.witness.empty() && r.params.has_value());
            return expansibility_margin(r.witness[0], *r.params);
        case Axiom::GeneratorConcavity:
            need(r.witness_scalars.size() == 2 && r.params.has_value());
            return generator_second_difference(r.witness_scalars[0], r.witness_scalars[1], *r.params);
        case Axiom::EntropyConcavity:
            need(r.witness.size() == 2 && r.witness_scalars.size() == 1 && r.params.has_value());
            return entropy_concavity_margin(r.witness[0], r.witness[1], r.witness_scalars[0], *r.params);
        case Axiom::LambdaInequality:
            need(!r.witness.empty() && r.witness_scalars.size() == 2);
            return lambda_gap(r.witness[0], r.witness_scalars[0], r.witness_scalars[1]);
        case Axiom::PowerSubadditivity:
            need(r.witness_scalars.size() == 3);
            return power_subadditivity_margin(r.witness_scalars[0], r.witness_scalars[1], r.witness_scalars[2]);
    }
    throw std::invalid_argument("unknown axiom");
}

}  // namespace tempent
