#ifndef BPF_CLI_HPP
#define BPF_CLI_HPP

#include "bpf/identities.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bpf::cli {

enum class OutputFormat { Json, Csv };

/// Exit codes: 0 success, 1 identity mismatch, 2 usage or validation error.
enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2 };

/// Validated command configuration. Parameters are checked against the
/// Params invariants before anything reaches the core.
struct RunConfig {
    std::vector<Params> grid;
    bool default_grid = false;
    long n_max = 20;
    std::vector<long> r_values;
    std::size_t order = 40;
    OutputFormat output = OutputFormat::Json;
    std::optional<std::string> out_path;
    bool octonion = false;
    bool negative = false;
    unsigned workers = 1;
};

/// (a, b) in {(1,1), (2,1), (1,2), (2,3), (1,-3), (1/2,3)} crossed with
/// (w0, w1) in {(0,1), Lucas swap, (1,1), (1,4)}, in that order.
std::vector<Params> default_grid();

/// Parses "a,b,w0,w1;a,b,w0,w1;...". Throws std::invalid_argument.
std::vector<Params> parse_grid(const std::string& text);

/// Worker count from BPF_WORKERS, else the hardware concurrency.
unsigned worker_count_from_env();

/// All checks for one grid point, in a fixed order.
std::vector<IdentityReport> verify_point(const Params& params, long n_max,
                                         const std::vector<long>& r_values);

int cmd_table(const RunConfig& config, std::ostream& out);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_genfunc(const RunConfig& config, std::ostream& out);
int cmd_norm(const RunConfig& config, std::ostream& out);

/// Full front end: argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bpf::cli

#endif  // BPF_CLI_HPP
