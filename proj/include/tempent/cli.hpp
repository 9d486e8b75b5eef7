#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tempent/lesche.hpp"

namespace tempent::cli {

enum class Command { Entropy, CheckAxioms, Sweep, Search, VerifyFrac };

/// Bad flag or flag value; the message names the flag.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// --help was given; what() holds the help text.
class HelpRequested : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    Command command = Command::Entropy;
    double sigma = 1.0;
    double lambda = 0.0;
    std::vector<double> dist;
    std::vector<Family> families{Family::CertaintyA, Family::UniformB};
    std::vector<std::size_t> n_grid;
    double delta = 1e-3;
    std::uint64_t seed = 0;
    std::size_t samples = 10000;
    std::optional<std::string> output_path;
    std::optional<double> control_q;
    std::optional<double> tol;
    std::vector<double> t_grid{-1.0};
    /// verify-frac only: restrict the grid to one sigma / lambda.
    bool sigma_given = false;
    bool lambda_given = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Parses argv (without the program name) and validates every value the
/// target command will use. Throws UsageError.
RunConfig parse_args(const std::vector<std::string>& args);

/// Runs a validated configuration, writing results to out (or output_path).
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + execute with the exit-code contract: 0 ok, 1 failed check, 2 usage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// printf("%.8g") in the C locale.
std::string format_number(double v);

}  // namespace tempent::cli
