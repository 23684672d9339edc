#ifndef COEFBOUND_CLI_HPP
#define COEFBOUND_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <coefbound/bounds.hpp>
#include <coefbound/oracle.hpp>

namespace coefbound::cli
{

enum class Command { bound, table, verify, report, roots };
enum class OutputFormat { text, json, csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig
{
    Command command = Command::roots;
    std::vector<double> lambdas;
    std::vector<double> ps;
    FunctionClass cls = FunctionClass::starlike;
    std::optional<int> n;
    std::optional<CoefficientDiff> diff;
    bool general = false;
    std::vector<std::string> claims;
    std::size_t budget = kDefaultBudget;
    std::uint64_t seed = kDefaultSeed;
    double tol = kDefaultTol;
    Psi2Variant psi2_variant = Psi2Variant::proof;
    OutputFormat format = OutputFormat::text;
    unsigned workers = 1;
};

// Bad flags, malformed numbers, out-of-range values.
class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Thrown by parse_args for --help; carries the help text.
class HelpRequested : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

std::string usage();

/// Maps flags (without the program name) onto a validated RunConfig.
/// `env_workers` is the value of COEFBOUND_WORKERS, if set; --workers wins.
RunConfig parse_args(std::span<const std::string> args,
                     std::optional<std::string> env_workers = std::nullopt);

// Writes data to `out`; returns 0, or 1 when a verification found violations.
int run(const RunConfig &config, std::ostream &out);

// parse_args + run with exit-code mapping; diagnostics go to `err`.
int main_entry(std::span<const std::string> args, std::ostream &out, std::ostream &err,
               std::optional<std::string> env_workers = std::nullopt);

} // namespace coefbound::cli

#endif
