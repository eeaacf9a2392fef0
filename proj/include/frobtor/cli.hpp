#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "frobtor/quotient_ring.hpp"

namespace frobtor::cli {

inline constexpr std::string_view kToolName = "frobtor";
std::string_view tool_version() noexcept;

enum class Command { resolve, hk, tor, verdict, phantom, tcevidence, compare_req, crosscheck };

std::string_view to_string(Command c) noexcept;
std::optional<Command> command_from_string(std::string_view text) noexcept;

/// A parsed job: the ring presentation plus one command and its parameters.
struct JobSpec {
    RingPtr descriptor;
    std::vector<Polynomial> ideal;
    bool equidimensional = false;

    Command command = Command::hk;
    std::vector<std::size_t> spots{1};
    unsigned emax = 3;
    std::optional<std::size_t> length;  ///< resolution length; derived from the spots when absent
    double tol = 1e-2;
    std::optional<Polynomial> c;
    std::vector<Polynomial> req;
    std::vector<Polynomial> N;
    std::vector<Polynomial> W;

    /// Resolution length actually used: the explicit value, else max(spots) + 1 (3 for resolve).
    std::size_t effective_length() const;
};

/// Parses the `[ring]` / `[job]` key-value format. Throws ParseError with 1-based line and column
/// for syntax errors, unknown keys, bad values, non-prime p and undeclared variables.
JobSpec parse_jobspec(std::string_view text);

/// Canonical job text; parse_jobspec(to_text(job)) reproduces the same job.
std::string to_text(const JobSpec& job);

/// Parses a value the way the job file does, for command-line overrides.
std::vector<std::size_t> parse_spot_list(std::string_view text);
Polynomial parse_multiplier(const JobSpec& job, std::string_view text);

struct CsvRow {
    unsigned e;
    std::uint64_t q;
    std::size_t i;
    std::uint64_t lambda;
    double normalized;
};

std::string csv_text(const std::vector<CsvRow>& rows);

/// Content-addressed store for ring Groebner bases and resolutions. Entries carry a format
/// version; entries written by another version, or for a different ring, are ignored.
class Cache {
public:
    explicit Cache(std::filesystem::path dir);

    const std::filesystem::path& dir() const noexcept { return dir_; }

    /// Hex SHA-256 of (canonical ring, operation, parameters).
    static std::string key(std::string_view ring, std::string_view op, std::string_view params);

    std::optional<nlohmann::json> load(std::string_view ring, std::string_view op, std::string_view params) const;
    void store(std::string_view ring, std::string_view op, std::string_view params,
               const nlohmann::json& payload) const;

    static constexpr int kFormatVersion = 1;

private:
    std::filesystem::path dir_;
};

/// Directory from --cache-dir, else $FROBTOR_CACHE_DIR, else $XDG_CACHE_HOME/frobtor or ~/.cache/frobtor.
std::filesystem::path default_cache_dir();

struct ExecOptions {
    std::optional<std::filesystem::path> cache_dir;  ///< no caching when empty
    unsigned threads = 1;
};

enum ExitCode : int { kOk = 0, kComputationError = 1, kInputError = 2, kIoError = 3 };

struct Report {
    nlohmann::json result;  ///< deterministic body
    std::vector<CsvRow> csv;
    int exit_code = kOk;
    bool cache_hit = false;
    double elapsed_ms = 0;

    /// Full document: {"provenance": {...}, "result": {...}} with sorted keys.
    nlohmann::json document(std::string_view input_hash) const;
};

/// Runs the job. Computation failures are embedded in the result ("error") with exit code 1;
/// input problems discovered while executing (e.g. an R^eq ideal not containing I) throw.
Report execute(const JobSpec& job, const ExecOptions& options = {});

/// Whether an exception represents bad input (exit 2) rather than a failed computation (exit 1).
bool is_input_error(const std::exception& err) noexcept;

/// Hex SHA-256 of arbitrary bytes.
std::string sha256_hex(std::string_view bytes);

/// Writes `content` to `path` through a temporary file and rename; throws std::runtime_error.
void write_atomically(const std::filesystem::path& path, std::string_view content);

}  // namespace frobtor::cli
