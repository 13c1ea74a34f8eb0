#ifndef QPARTID_CLI_HPP
#define QPARTID_CLI_HPP

#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include <qpartid/identities.hpp>
#include <qpartid/partitions.hpp>

namespace qpartid::cli
{

inline constexpr const char *tool_version = "0.1.0";

enum class Format
{
    json,
    tsv,
    human,
};

// Raised for anything that should end the process with exit code 2 before any
// computation starts.
struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct RunConfig
{
    std::vector<std::string> families;
    bool all = false;
    bool preset_desk = false;
    std::optional<long> n_max;
    std::optional<long> m_max;
    std::optional<long> p_max;
    std::optional<std::vector<long>> a_set;
    std::optional<std::vector<long>> b_set;
    std::optional<std::vector<long>> c_set;
    Format format = Format::human;
    std::optional<std::string> out;
    unsigned workers = 1;
    long oracle_limit = default_oracle_limit;
    // Hidden test hook: the first case of this family gets a perturbed right side.
    std::optional<std::string> inject_failure;
};

// Throws UsageError for unknown ids, negative ranges, b/c below 1, no family
// selected, or workers == 0.
void validate(const RunConfig &config);

// Selected descriptor ids in registry order.
std::vector<std::string> selected_ids(const RunConfig &config);

// The descriptor's default grid (which is the desk preset) with the
// --n-max/--m-max/--p-max and --a-set/--b-set/--c-set overrides applied.
Grid effective_grid(const IdentityDescriptor &d, const RunConfig &config);

struct IdentityTiming
{
    std::string id;
    std::size_t cases = 0;
    double wall_ms = 0.0;
};

struct Totals
{
    std::size_t cases = 0;
    std::size_t passes = 0;
    std::size_t failures = 0;
};

struct RunReport
{
    std::string version = tool_version;
    nlohmann::ordered_json config;
    // sorted by (id, parameter tuple in descriptor order)
    std::vector<CaseResult> results;
    Totals totals;
    std::vector<IdentityTiming> timing;
    // Parameter names per id, for rendering.
    std::map<std::string, std::vector<std::string>> param_names;

    [[nodiscard]] bool all_pass() const { return totals.failures == 0; }
};

// Evaluates fn over cases on a pool of `workers` threads; result i belongs to
// cases[i]. The first exception thrown by any worker is rethrown.
std::vector<CaseResult> evaluate_parallel(const std::vector<IdentityCase> &cases,
                                          const std::function<CaseResult(const IdentityCase &)> &fn,
                                          unsigned workers);

RunReport run_verify(const RunConfig &config);

// Case (n, m, p) compares P and Q against the brute-force enumerator, for all
// n <= n_max, m <= n, p <= n. Throws UsageError if n_max exceeds oracle_limit
// or is negative.
RunReport run_oracle_diff(long n_max, unsigned workers, long oracle_limit);

nlohmann::ordered_json to_json(const RunReport &report);
void write_report(const RunReport &report, Format format, std::ostream &os);

// Format::human prints at most this many failures per identity.
inline constexpr std::size_t human_failure_limit = 10;

unsigned default_workers();

// Entry point behind the qpartid executable. Exit codes: 0 all pass,
// 1 an identity failed, 2 usage error.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace qpartid::cli

#endif
