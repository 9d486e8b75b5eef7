#include "tempent/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "tempent/axioms.hpp"
#include "tempent/fracderiv.hpp"

namespace tempent::cli {

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.8g", v);
    return buf;
}

namespace {

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    return parts;
}

double parse_real(const std::string& flag, const std::string& token) {
    double v = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (!token.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (token.empty() || ec != std::errc{} || ptr != last || !std::isfinite(v)) {
        throw UsageError(flag + ": '" + token + "' is not a finite decimal number");
    }
    return v;
}

std::vector<double> parse_real_list(const std::string& flag, const std::string& text) {
    std::vector<double> out;
    for (const auto& tok : split_commas(text)) out.push_back(parse_real(flag, tok));
    return out;
}

std::vector<std::size_t> parse_count_list(const std::string& flag, const std::string& text) {
    std::vector<std::size_t> out;
    for (const auto& tok : split_commas(text)) {
        const double v = parse_real(flag, tok);
        if (v < 1.0 || v != std::floor(v) || v > 1e15) {
            throw UsageError(flag + ": '" + tok + "' is not a positive integer");
        }
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

std::vector<Family> parse_families(const std::string& text) {
    std::vector<Family> out;
    for (const auto& tok : split_commas(text)) {
        if (tok == "A") {
            out.push_back(Family::CertaintyA);
        } else if (tok == "B") {
            out.push_back(Family::UniformB);
        } else {
            throw UsageError("--family: '" + tok + "' is not one of A, B");
        }
    }
    return out;
}

void require(bool ok, const std::string& message) {
    if (!ok) throw UsageError(message);
}

void validate_params(const RunConfig& c) {
    require(c.sigma > 0.0 && c.sigma <= 1.0, "--sigma: must lie in (0, 1]");
    require(c.lambda >= 0.0, "--lambda: must be >= 0");
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
    CLI::App app{"tempent: tempered fractional entropy toolkit", "tempent"};
    app.require_subcommand(1);

    std::string sigma_s, lambda_s, dist_s, family_s = "A,B", delta_s, n_s, samples_s, seed_s, control_s, out_s,
                                          tol_s, t_s;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--sigma", sigma_s, "order sigma in (0, 1]");
        sub->add_option("--lambda", lambda_s, "tempering lambda >= 0");
        sub->add_option("--out", out_s, "write output to this path instead of stdout");
    };

    auto* ent = app.add_subcommand("entropy", "evaluate S_{sigma,lambda} of one distribution");
    add_common(ent);
    ent->add_option("--dist", dist_s, "comma-separated probabilities")->required();

    auto* axioms = app.add_subcommand("check-axioms", "run the axiom and inequality suite");
    add_common(axioms);
    axioms->add_option("--n", n_s, "comma-separated outcome counts");
    axioms->add_option("--samples", samples_s, "simplex samples per configuration");
    axioms->add_option("--seed", seed_s, "random seed");
    axioms->add_option("--tol", tol_s, "override every pass threshold");

    auto* sw = app.add_subcommand("sweep", "Lesche ratio of structured families across n");
    add_common(sw);
    sw->add_option("--family", family_s, "A, B or A,B");
    sw->add_option("--delta", delta_s, "L1 budget in [0, 1]");
    sw->add_option("--n", n_s, "ascending comma-separated outcome counts")->required();
    sw->add_option("--control-renyi", control_s, "add Renyi control rows of this order");
    sw->add_option("--tol", tol_s, "fail when a tempered ratio reaches this bound");

    auto* search = app.add_subcommand("search", "hill-climb for a high Lesche ratio");
    add_common(search);
    search->add_option("--n", n_s, "outcome count")->required();
    search->add_option("--delta", delta_s, "L1 budget in [0, 2]");
    search->add_option("--samples", samples_s, "hill-climb iterations");
    search->add_option("--seed", seed_s, "random seed");
    search->add_option("--tol", tol_s, "fail when the best ratio reaches this bound");

    auto* frac = app.add_subcommand("verify-frac", "check the tempered derivative against its closed form");
    add_common(frac);
    frac->add_option("--t", t_s, "comma-separated evaluation points");
    frac->add_option("--tol", tol_s, "relative tolerance (absolute floor is 1e-3 * tol)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        const auto subs = app.get_subcommands();
        throw HelpRequested(subs.empty() ? app.help() : subs.front()->help());
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    RunConfig c;
    CLI::App* chosen = app.get_subcommands().front();
    const std::string name = chosen->get_name();
    if (name == "entropy") c.command = Command::Entropy;
    if (name == "check-axioms") c.command = Command::CheckAxioms;
    if (name == "sweep") c.command = Command::Sweep;
    if (name == "search") c.command = Command::Search;
    if (name == "verify-frac") c.command = Command::VerifyFrac;

    if (!sigma_s.empty()) {
        c.sigma = parse_real("--sigma", sigma_s);
        c.sigma_given = true;
    }
    if (!lambda_s.empty()) {
        c.lambda = parse_real("--lambda", lambda_s);
        c.lambda_given = true;
    }
    if (!out_s.empty()) c.output_path = out_s;
    if (!tol_s.empty()) c.tol = parse_real("--tol", tol_s);
    if (!delta_s.empty()) c.delta = parse_real("--delta", delta_s);
    if (!control_s.empty()) c.control_q = parse_real("--control-renyi", control_s);
    if (!seed_s.empty()) {
        std::uint64_t seed = 0;
        const auto [ptr, ec] = std::from_chars(seed_s.data(), seed_s.data() + seed_s.size(), seed);
        require(ec == std::errc{} && ptr == seed_s.data() + seed_s.size(),
                "--seed: '" + seed_s + "' is not a non-negative integer");
        c.seed = seed;
    }
    if (!samples_s.empty()) {
        const auto v = parse_count_list("--samples", samples_s);
        require(v.size() == 1, "--samples: expects one value");
        c.samples = v[0];
    }
    if (!n_s.empty()) c.n_grid = parse_count_list("--n", n_s);
    if (!t_s.empty()) c.t_grid = parse_real_list("--t", t_s);

    switch (c.command) {
        case Command::Entropy: {
            validate_params(c);
            c.dist = parse_real_list("--dist", dist_s);
            try {
                (void)ProbDist::make(c.dist);
            } catch (const std::exception& e) {
                throw UsageError(std::string("--dist: ") + e.what());
            }
            break;
        }
        case Command::CheckAxioms:
            validate_params(c);
            if (c.n_grid.empty()) c.n_grid = {2, 5, 10};
            for (auto n : c.n_grid) require(n >= 2, "--n: every outcome count must be >= 2");
            break;
        case Command::Sweep:
            validate_params(c);
            c.families = parse_families(family_s);
            require(c.delta >= 0.0 && c.delta <= 1.0, "--delta: must lie in [0, 1]");
            require(std::is_sorted(c.n_grid.begin(), c.n_grid.end()), "--n: grid must be ascending");
            for (auto n : c.n_grid) require(n >= 2, "--n: every outcome count must be >= 2");
            for (auto f : c.families) {
                if (f == Family::UniformB) {
                    for (auto n : c.n_grid) require(n >= 3, "--n: family B needs n >= 3");
                }
            }
            if (c.control_q) {
                require(*c.control_q > 0.0 && *c.control_q != 1.0, "--control-renyi: order must be > 0 and != 1");
            }
            break;
        case Command::Search:
            validate_params(c);
            require(c.n_grid.size() == 1 && c.n_grid[0] >= 2, "--n: search expects one outcome count >= 2");
            require(c.delta >= 0.0 && c.delta <= 2.0, "--delta: must lie in [0, 2]");
            break;
        case Command::VerifyFrac:
            if (c.sigma_given) require(c.sigma > 0.0 && c.sigma < 1.0, "--sigma: must lie in (0, 1)");
            if (c.lambda_given) require(c.lambda >= 0.0, "--lambda: must be >= 0");
            if (c.tol) require(*c.tol > 0.0, "--tol: must be positive");
            break;
    }
    return c;
}

namespace {

void write_csv_row(std::ostream& os, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) os << ',';
        os << cells[i];
    }
    os << '\n';
}

std::string config_label(std::size_t n, double sigma, double lambda) {
    return "n=" + std::to_string(n) + ";sigma=" + format_number(sigma) + ";lambda=" + format_number(lambda);
}

int run_entropy(const RunConfig& c, std::ostream& out) {
    const auto p = ProbDist::make(c.dist);
    out << format_number(entropy(p, EntropyParams::make(c.sigma, c.lambda))) << '\n';
    return kExitOk;
}

int run_axioms(const RunConfig& c, std::ostream& out) {
    const auto params = EntropyParams::make(c.sigma, c.lambda);
    out << "axiom,config,samples,worst_violation,pass\n";
    bool all_pass = true;
    auto emit = [&](const AxiomReport& r, const std::string& config) {
        const double tol = c.tol.value_or(r.tolerance);
        const bool pass = r.worst_violation <= tol;
        all_pass = all_pass && pass;
        write_csv_row(out, {std::string(axiom_name(r.axiom)), config, std::to_string(r.samples_checked),
                            format_number(r.worst_violation), pass ? "true" : "false"});
    };
    for (std::size_t n : c.n_grid) {
        const auto label = config_label(n, c.sigma, c.lambda);
        emit(check_nonnegativity(n, params, c.samples, c.seed), label);
        emit(check_continuity(n, params, c.samples, c.seed), label);
        emit(check_maximality(n, params, c.samples, c.seed), label);
        emit(check_expansibility(n, params, c.samples, c.seed), label);
        emit(check_entropy_concavity(n, params, c.samples, c.seed), label);
        emit(check_lambda_inequality(n, c.sigma, c.lambda, c.samples, c.seed), label);
    }
    emit(check_generator_concavity(params, 199), "sigma=" + format_number(c.sigma) + ";lambda=" + format_number(c.lambda));
    emit(check_power_subadditivity_grid({0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}, 61), "alpha=0.1..0.9");
    return all_pass ? kExitOk : kExitCheckFailed;
}

void write_record(std::ostream& out, const StabilityRecord& r) {
    write_csv_row(out, {family_label(r), std::to_string(r.n), format_number(r.delta), format_number(r.sigma),
                        format_number(r.lambda), format_number(r.s_p), format_number(r.s_p_prime),
                        format_number(r.ratio)});
}

constexpr const char* kSweepHeader = "family,n,delta,sigma,lambda,s_p,s_p_prime,ratio\n";

int run_sweep(const RunConfig& c, std::ostream& out) {
    const auto params = EntropyParams::make(c.sigma, c.lambda);
    const auto records = sweep(c.families, c.n_grid, c.delta, params, c.control_q);
    out << kSweepHeader;
    bool ok = true;
    for (const auto& r : records) {
        write_record(out, r);
        if (c.tol && r.functional == Functional::Tempered && r.ratio >= *c.tol) ok = false;
    }
    return ok ? kExitOk : kExitCheckFailed;
}

int run_search(const RunConfig& c, std::ostream& out) {
    const auto params = EntropyParams::make(c.sigma, c.lambda);
    const auto result = random_pair_search(c.n_grid[0], c.delta, params, c.samples, c.seed);
    out << kSweepHeader;
    write_record(out, result.record);
    return (c.tol && result.record.ratio >= *c.tol) ? kExitCheckFailed : kExitOk;
}

int run_verify_frac(const RunConfig& c, std::ostream& out) {
    FracGrid grid = FracGrid::standard();
    if (c.sigma_given) grid.sigma = {c.sigma};
    if (c.lambda_given) grid.lambda = {c.lambda};
    grid.t = c.t_grid;
    const double rel_tol = c.tol.value_or(1e-6);
    const auto rows = verify_frac_grid(grid, rel_tol, 1e-3 * rel_tol);
    out << "p,sigma,lambda,t,numeric,closed_form,rel_err\n";
    bool ok = true;
    for (const auto& r : rows) {
        ok = ok && r.passed;
        write_csv_row(out, {format_number(r.p), format_number(r.sigma), format_number(r.lambda), format_number(r.t),
                            format_number(r.numeric), format_number(r.closed_form), format_number(r.rel_err)});
    }
    return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int execute(const RunConfig& c, std::ostream& out, std::ostream& err) {
    std::ofstream file;
    std::ostream* sink = &out;
    if (c.output_path) {
        file.open(*c.output_path, std::ios::binary | std::ios::trunc);
        if (!file) {
            err << "--out: cannot open '" << *c.output_path << "' for writing\n";
            return kExitUsage;
        }
        sink = &file;
    }
    switch (c.command) {
        case Command::Entropy: return run_entropy(c, *sink);
        case Command::CheckAxioms: return run_axioms(c, *sink);
        case Command::Sweep: return run_sweep(c, *sink);
        case Command::Search: return run_search(c, *sink);
        case Command::VerifyFrac: return run_verify_frac(c, *sink);
    }
    return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig config;
    try {
        config = parse_args(args);
    } catch (const HelpRequested& h) {
        out << h.what();
        return kExitOk;
    } catch (const UsageError& e) {
        std::string msg = e.what();
        std::replace(msg.begin(), msg.end(), '\n', ' ');
        err << "tempent: " << msg << '\n';
        return kExitUsage;
    }
    try {
        return execute(config, out, err);
    } catch (const std::exception& e) {
        err << "tempent: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace tempent::cli
