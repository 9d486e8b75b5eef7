#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "tempent/entropy.hpp"
#include "tempent/kernels.hpp"

namespace tempent {

enum class Axiom {
    Nonnegativity,
    Continuity,
    Maximality,
    Expansibility,
    GeneratorConcavity,
    EntropyConcavity,
    LambdaInequality,
    PowerSubadditivity,
};

std::string_view axiom_name(Axiom a);

// Default pass thresholds.
inline constexpr double kNonnegativityTol = 1e-15;
inline constexpr double kContinuityTol = 1e-3;
inline constexpr double kContinuityRadius = 1e-8;
inline constexpr double kMaximalityTol = 1e-9;
inline constexpr double kConcavityFdTol = 1e-6;
inline constexpr double kConcavityFdStep = 1e-4;
inline constexpr double kConcavityGridLo = 0.005;
inline constexpr double kConcavityGridHi = 0.995;
inline constexpr double kEntropyConcavityTol = 1e-10;
inline constexpr double kLambdaInequalityTol = 1e-12;
inline constexpr double kPowerSubadditivityTol = 1e-12;

/// Outcome of one property check.
///
/// worst_violation is the largest observed value of the checked quantity,
/// arranged so that <= 0 means the property holds exactly; the check passes
/// when worst_violation <= tolerance. The witness fields are enough for
/// reevaluate() to reproduce worst_violation.
struct AxiomReport {
    Axiom axiom;
    std::size_t samples_checked = 0;
    double worst_violation = 0.0;
    double tolerance = 0.0;
    std::vector<ProbDist> witness;
    std::vector<double> witness_scalars;
    std::optional<EntropyParams> params;

    bool passed() const noexcept { return worst_violation <= tolerance; }
};

/// Recomputes the margin recorded in report from its witness.
double reevaluate(const AxiomReport& report);

/// count i.i.d. flat-Dirichlet draws on the n-simplex from normalized
/// standard exponentials; deterministic in seed.
std::vector<ProbDist> sample_simplex(std::size_t n, std::size_t count, std::uint64_t seed);

// Per-instance margins.
double nonnegativity_margin(const ProbDist& p, const EntropyParams& params);
double maximality_margin(const ProbDist& p, const EntropyParams& params);
double expansibility_margin(const ProbDist& p, const EntropyParams& params);
double lambda_gap(const ProbDist& p, double sigma, double lambda);
double power_subadditivity_margin(double x, double y, double alpha);
double entropy_concavity_margin(const ProbDist& p, const ProbDist& q, double t,
                                const EntropyParams& params);
/// Central second difference of generator at x with step h.
double generator_second_difference(double x, double h, const EntropyParams& params);

// Single-instance checks.
AxiomReport check_expansibility(const ProbDist& p, const EntropyParams& params);
AxiomReport check_entropy_concavity(const ProbDist& p, const ProbDist& q, double t,
                                    const EntropyParams& params);
AxiomReport check_lambda_inequality(const ProbDist& p, double sigma, double lambda);
AxiomReport check_power_subadditivity(double x, double y, double alpha);

// Sampled checks over seeded simplex draws.
AxiomReport check_nonnegativity(std::size_t n, const EntropyParams& params, std::size_t samples,
                                std::uint64_t seed, Execution exec = Execution::Parallel);
AxiomReport check_continuity(std::size_t n, const EntropyParams& params, std::size_t samples,
                             std::uint64_t seed, Execution exec = Execution::Parallel);
AxiomReport check_maximality(std::size_t n, const EntropyParams& params, std::size_t samples,
                             std::uint64_t seed, Execution exec = Execution::Parallel);
AxiomReport check_expansibility(std::size_t n, const EntropyParams& params, std::size_t samples,
                                std::uint64_t seed, Execution exec = Execution::Parallel);
AxiomReport check_lambda_inequality(std::size_t n, double sigma, double lambda, std::size_t samples,
                                    std::uint64_t seed, Execution exec = Execution::Parallel);
/// Mixtures of consecutive sample pairs at seeded t in [0, 1].
AxiomReport check_entropy_concavity(std::size_t n, const EntropyParams& params, std::size_t samples,
                                    std::uint64_t seed, Execution exec = Execution::Parallel);

/// Second differences of generator on grid_points equally spaced points of
/// [0.005, 0.995], step 1e-4.
AxiomReport check_generator_concavity(const EntropyParams& params, std::size_t grid_points,
                                      Execution exec = Execution::Parallel);

/// (x + y)^alpha <= x^alpha + y^alpha over a log-spaced x, y grid on [0, 1e3]
/// and the given exponents.
AxiomReport check_power_subadditivity_grid(const std::vector<double>& alphas, std::size_t grid_points,
                                           Execution exec = Execution::Parallel);

}  // namespace tempent
