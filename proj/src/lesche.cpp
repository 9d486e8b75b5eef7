#include "tempent/lesche.hpp"

#include <algorithm>
#include <cmath>

#include "tempent/detail/random.hpp"
#include "tempent/detail/summation.hpp"

namespace tempent {

namespace {

void check_delta(double delta, double upper) {
    if (!(delta >= 0.0 && delta <= upper)) {
        throw DomainError("delta must lie in [0, " + std::to_string(upper) + "], got " + std::to_string(delta));
    }
}

double aggregated_entropy(double head, double tail, std::size_t n, const EntropyParams& params) {
    return generator(head, params) + static_cast<double>(n - 1) * generator(tail, params);
}

double aggregated_renyi(double head, double tail, std::size_t n, double q) {
    double power_sum = 0.0;
    if (head > 0.0) power_sum += std::pow(head, q);
    if (tail > 0.0) power_sum += static_cast<double>(n - 1) * std::pow(tail, q);
    return std::log(power_sum) / (1.0 - q);
}

void check_renyi_order(double q) {
    if (!(q > 0.0) || q == 1.0 || !std::isfinite(q)) throw DomainError("Renyi order must be positive and != 1");
}

StabilityRecord make_record(Family family, Functional functional, std::size_t n, double delta,
                            const EntropyParams& params, double s_p, double s_q, double norm) {
    return {family, functional, n, delta, params.sigma(), params.lambda(), s_p, s_q, std::abs(s_p - s_q) / norm};
}

}  // namespace

std::string family_label(const StabilityRecord& r) {
    std::string base;
    switch (r.family) {
        case Family::CertaintyA: base = "A"; break;
        case Family::UniformB: base = "B"; break;
        case Family::RandomSearch: base = "search"; break;
    }
    return r.functional == Functional::RenyiControl ? base + "_renyi" : base;
}

StructuredPair family_a_structured(std::size_t n, double delta) {
    if (n < 2) throw DomainError("family A requires n >= 2");
    check_delta(delta, 1.0);
    const double tail_q = delta / (2.0 * static_cast<double>(n - 1));
    return {Family::CertaintyA, n, delta, 1.0, 0.0, 1.0 - delta / 2.0, tail_q};
}

StructuredPair family_b_structured(std::size_t n, double delta) {
    if (n < 3) throw DomainError("family B requires n >= 3");
    check_delta(delta, 1.0);
    const double m = static_cast<double>(n - 1);
    return {Family::UniformB, n, delta, 0.0, 1.0 / m, delta / 2.0, (1.0 - delta / 2.0) / m};
}

PerturbPair StructuredPair::materialize() const {
    std::vector<double> p(n, tail_p);
    std::vector<double> q(n, tail_q);
    p[0] = head_p;
    q[0] = head_q;
    return {ProbDist::make(std::move(p)), ProbDist::make(std::move(q)), delta, family};
}

double StructuredPair::l1() const {
    return std::abs(head_p - head_q) + static_cast<double>(n - 1) * std::abs(tail_p - tail_q);
}

PerturbPair family_a_pair(std::size_t n, double delta) { return family_a_structured(n, delta).materialize(); }
PerturbPair family_b_pair(std::size_t n, double delta) { return family_b_structured(n, delta).materialize(); }

StabilityRecord stability_ratio(const PerturbPair& pair, const EntropyParams& params) {
    if (pair.p.size() != pair.p_prime.size()) throw DimensionMismatch("pair distributions differ in size");
    const std::size_t n = pair.p.size();
    return make_record(pair.family, Functional::Tempered, n, pair.delta, params, entropy(pair.p, params),
                       entropy(pair.p_prime, params), max_entropy(n, params));
}

StabilityRecord stability_ratio(const StructuredPair& pair, const EntropyParams& params) {
    return make_record(pair.family, Functional::Tempered, pair.n, pair.delta, params,
                       aggregated_entropy(pair.head_p, pair.tail_p, pair.n, params),
                       aggregated_entropy(pair.head_q, pair.tail_q, pair.n, params), max_entropy(pair.n, params));
}

double renyi_entropy(const ProbDist& p, double q) {
    check_renyi_order(q);
    double power_sum = 0.0;
    for (double w : p.weights()) {
        if (w > 0.0) power_sum += std::pow(w, q);
    }
    return std::log(power_sum) / (1.0 - q);
}

StabilityRecord renyi_ratio(const PerturbPair& pair, double q, const EntropyParams& params) {
    if (pair.p.size() != pair.p_prime.size()) throw DimensionMismatch("pair distributions differ in size");
    const std::size_t n = pair.p.size();
    return make_record(pair.family, Functional::RenyiControl, n, pair.delta, params, renyi_entropy(pair.p, q),
                       renyi_entropy(pair.p_prime, q), std::log(static_cast<double>(n)));
}

StabilityRecord renyi_ratio(const StructuredPair& pair, double q, const EntropyParams& params) {
    check_renyi_order(q);
    return make_record(pair.family, Functional::RenyiControl, pair.n, pair.delta, params,
                       aggregated_renyi(pair.head_p, pair.tail_p, pair.n, q),
                       aggregated_renyi(pair.head_q, pair.tail_q, pair.n, q), std::log(static_cast<double>(pair.n)));
}

std::vector<StabilityRecord> sweep(const std::vector<Family>& families, const std::vector<std::size_t>& n_grid,
                                   double delta, const EntropyParams& params, std::optional<double> control_q,
                                   Execution exec) {
    if (n_grid.empty()) throw DomainError("sweep needs a nonempty n grid");
    if (!std::is_sorted(n_grid.begin(), n_grid.end())) throw DomainError("sweep n grid must be ascending");
    if (control_q) check_renyi_order(*control_q);

    // Build every pair up front so constructor errors surface outside the parallel region.
    std::vector<StructuredPair> pairs;
    for (Family f : families) {
        for (std::size_t n : n_grid) {
            switch (f) {
                case Family::CertaintyA: pairs.push_back(family_a_structured(n, delta)); break;
                case Family::UniformB: pairs.push_back(family_b_structured(n, delta)); break;
                case Family::RandomSearch: throw DomainError("sweep supports only the structured families");
            }
        }
    }

    const std::size_t per_family = n_grid.size();
    const std::size_t block = control_q ? 2 * per_family : per_family;
    std::vector<StabilityRecord> out(families.size() * block);
    kernels::for_each_index(exec, pairs.size(), [&](std::size_t k) {
        const std::size_t fam = k / per_family;
        const std::size_t slot = fam * block + k % per_family;
        out[slot] = stability_ratio(pairs[k], params);
        if (control_q) out[slot + per_family] = renyi_ratio(pairs[k], *control_q, params);
    });
    return out;
}

SearchResult random_pair_search(std::size_t n, double delta, const EntropyParams& params,
                                std::size_t iterations, std::uint64_t seed) {
    if (n < 2) throw DomainError("search requires n >= 2");
    check_delta(delta, 2.0);
    if (iterations < 1) throw DomainError("search requires at least one iteration");

    detail::Rng rng(seed);
    const double s_max = max_entropy(n, params);
    auto draw = [&] {
        std::vector<double> w(n);
        double total = 0.0;
        for (auto& x : w) total += (x = detail::standard_exponential(rng));
        for (auto& x : w) x /= total;
        return w;
    };
    auto l1 = [](const std::vector<double>& a, const std::vector<double>& b) {
        double d = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) d += std::abs(a[i] - b[i]);
        return d;
    };
    auto sum_entropy = [&](const std::vector<double>& w) {
        detail::CompensatedSum s;
        for (double x : w) {
            if (x > 0.0) s.add(generator(std::min(x, 1.0), params));
        }
        return s.value();
    };
    auto ratio_of = [&](const std::vector<double>& a, const std::vector<double>& b) {
        return std::abs(sum_entropy(a) - sum_entropy(b)) / s_max;
    };

    // Random start: move a seeded base toward another draw along the segment, inside the budget.
    std::vector<double> cur_p = draw();
    std::vector<double> cur_q = cur_p;
    {
        const auto target = draw();
        const double dist = l1(cur_p, target);
        const double eta = dist > 0.0 ? std::min(1.0, delta * (1.0 - 1e-9) / dist) : 0.0;
        for (std::size_t i = 0; i < n; ++i) cur_q[i] = (1.0 - eta) * cur_p[i] + eta * target[i];
    }
    double best = ratio_of(cur_p, cur_q);

    std::optional<double> family_a_ratio;
    if (delta <= 1.0) {
        const auto fa = family_a_pair(n, delta);
        family_a_ratio = stability_ratio(fa, params).ratio;
        if (*family_a_ratio >= best) {
            cur_p.assign(fa.p.weights().begin(), fa.p.weights().end());
            cur_q.assign(fa.p_prime.weights().begin(), fa.p_prime.weights().end());
            best = ratio_of(cur_p, cur_q);
        }
    }

    double step = delta / 10.0;
    const std::size_t patience = std::max<std::size_t>(1, iterations / 5);
    std::size_t stale = 0;
    std::size_t improvements = 0;
    for (std::size_t it = 0; it < iterations && step > 0.0; ++it) {
        auto& side = detail::uniform01(rng) < 0.5 ? cur_q : cur_p;
        const std::size_t to = detail::uniform_index(rng, n);
        std::size_t from = detail::uniform_index(rng, n - 1);
        if (from >= to) ++from;
        const double amount = std::min(side[from], step * detail::uniform01(rng));
        const double old_to = side[to];
        const double old_from = side[from];
        side[from] = old_from - amount;
        side[to] = std::min(1.0, old_to + amount);

        bool accepted = false;
        if (l1(cur_p, cur_q) <= delta) {
            const double r = ratio_of(cur_p, cur_q);
            if (r > best) {
                best = r;
                accepted = true;
            }
        }
        if (accepted) {
            ++improvements;
            stale = 0;
        } else {
            side[to] = old_to;
            side[from] = old_from;
            if (++stale >= patience) {
                step *= 0.5;
                stale = 0;
            }
        }
    }

    PerturbPair pair{ProbDist::make(std::move(cur_p)), ProbDist::make(std::move(cur_q)), delta, Family::RandomSearch};
    StabilityRecord record = stability_ratio(pair, params);
    return {std::move(pair), record, family_a_ratio, improvements};
}

}  // namespace tempent
