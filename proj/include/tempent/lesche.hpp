#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tempent/entropy.hpp"
#include "tempent/kernels.hpp"

namespace tempent {

enum class Family { CertaintyA, UniformB, RandomSearch };

/// Which functional a stability record measures.
enum class Functional { Tempered, RenyiControl };

/// Two distributions on the same simplex at L1 distance at most delta.
struct PerturbPair {
    ProbDist p;
    ProbDist p_prime;
    double delta;
    Family family;
};

/// A pair whose distributions are (head, tail, ..., tail) with n - 1 identical
/// tail entries. Both structured families have this form, so entropies can be
/// summed as f(head) + (n - 1) f(tail) without materializing n weights.
struct StructuredPair {
    Family family;
    std::size_t n;
    double delta;
    double head_p;
    double tail_p;
    double head_q;
    double tail_q;

    PerturbPair materialize() const;
    double l1() const;
};

struct StabilityRecord {
    Family family;
    Functional functional = Functional::Tempered;
    std::size_t n;
    double delta;
    double sigma;
    double lambda;
    double s_p;
    double s_p_prime;
    double ratio;
};

/// CSV label: A, B, search, A_renyi, B_renyi.
std::string family_label(const StabilityRecord& r);

/// p = (1, 0, ..., 0); p' = (1 - delta/2, delta/(2(n-1)), ...). 0 <= delta <= 1.
StructuredPair family_a_structured(std::size_t n, double delta);
/// p = (0, 1/(n-1), ...); p' = (delta/2, (1 - delta/2)/(n-1), ...). n >= 3, 0 <= delta <= 1.
StructuredPair family_b_structured(std::size_t n, double delta);

PerturbPair family_a_pair(std::size_t n, double delta);
PerturbPair family_b_pair(std::size_t n, double delta);

/// |S(p) - S(p')| / max_entropy(n).
StabilityRecord stability_ratio(const PerturbPair& pair, const EntropyParams& params);
/// Same ratio from the aggregated head/tail sums.
StabilityRecord stability_ratio(const StructuredPair& pair, const EntropyParams& params);

/// (1/(1-q)) ln sum p_i^q over nonzero weights. q > 0, q != 1.
double renyi_entropy(const ProbDist& p, double q);

/// Renyi gap normalized by ln n. sigma/lambda fields are copied from params.
StabilityRecord renyi_ratio(const PerturbPair& pair, double q, const EntropyParams& params);
StabilityRecord renyi_ratio(const StructuredPair& pair, double q, const EntropyParams& params);

/// One record per (family, n) from the aggregated path, ordered by family then n;
/// with control_q, each family's Renyi records follow its tempered ones.
std::vector<StabilityRecord> sweep(const std::vector<Family>& families, const std::vector<std::size_t>& n_grid,
                                   double delta, const EntropyParams& params,
                                   std::optional<double> control_q = std::nullopt,
                                   Execution exec = Execution::Parallel);

struct SearchResult {
    PerturbPair pair;
    StabilityRecord record;
    /// Ratio of the Family A pair at the same (n, delta), when defined.
    std::optional<double> family_a_ratio;
    std::size_t improvements = 0;
};

/// Seeded hill climb for the pair maximizing the stability ratio under the L1
/// budget delta. Starts from the better of a random pair and the Family A pair.
SearchResult random_pair_search(std::size_t n, double delta, const EntropyParams& params,
                                std::size_t iterations, std::uint64_t seed);

}  // namespace tempent
