// Batch front-end plumbing: structured JSON config parsing with
// field-addressed diagnostics, command dispatch, and deterministic report
// serialization.
//
// Config schema (JSON object; complex numbers are [re, im] pairs, matrices
// 4x4 nested row-major arrays, qubit strategies length-2 arrays):
//   command        "classical" | "outcome" | "verify" | "search" | "cases" | "minimax"
//   unitary        gate name, 4x4 matrix, "random", or {"name":..., "matrix":...}
//   game           "prisoners_dilemma" or {"targets1":[...], "targets2":[...]}
//   play           [[x1,y1],[x2,y2]] pair of unit strategies
//   alt_play       second play, for `cases`
//   target         basis index 1..4, for `minimax`
//   grid           {"n_alpha":..,"n_phi":..,"refine_depth":..,"top_k":..}
//   epsilon        nonnegative real, for `verify` / `search`
//   convention     "corrected" | "paper-literal", for `cases`
//   seed           unsigned integer, required when unitary is "random"
//   include_maximin  bool, for `minimax`
//   classical_game {"strategies":...,"table":...,"preferences":...}
//   output         report path (default standard output)
//
// Reports carry the resolved config echo; re-running the echo reproduces
// the payload byte-for-byte except for wall-time fields.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qnash/classical.hpp"
#include "qnash/inequalities.hpp"
#include "qnash/search.hpp"

namespace qnash {

inline constexpr std::string_view kToolName = "qnash";
inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

// Process exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitInternalError = 3;

enum class Command { classical, outcome, verify, search, cases, minimax };

std::optional<Command> parse_command(std::string_view name);
std::string_view command_string(Command c);

struct UnitarySpec {
    enum class Kind { named, custom, random };
    Kind kind = Kind::named;
    GateName name = GateName::identity;
    std::array<std::array<Complex, 4>, 4> matrix{};  // kind == custom
};

struct TargetSets {
    std::vector<int> targets1;
    std::vector<int> targets2;
    std::optional<std::string> preset;
};

struct ClassicalGameConfig {
    std::array<std::string, 2> strategies1;
    std::array<std::string, 2> strategies2;
    std::array<std::array<std::string, 2>, 2> table;
    std::array<std::string, 4> preferences1;
    std::array<std::string, 4> preferences2;
};

struct RunConfig {
    Command command = Command::verify;
    std::optional<UnitarySpec> unitary;
    std::optional<TargetSets> game;
    std::optional<ClassicalGameConfig> classical_game;
    std::optional<Play> play;
    std::optional<Play> alt_play;
    std::optional<int> target;
    GridSpec grid;
    double epsilon = kVerifyEpsilon;
    Convention convention = Convention::corrected;
    std::optional<std::uint64_t> seed;
    bool include_maximin = false;
    std::optional<std::string> output;
};

struct Diagnostic {
    std::string field;    // JSON-pointer-style path of the offending field
    std::string message;
};

struct ValidationResult {
    // Engaged exactly when `diagnostics` is empty.
    std::optional<RunConfig> config;
    std::vector<Diagnostic> diagnostics;
};

// Parses and fully validates a config document. `command_override` and
// `seed_override` come from the command line and take precedence over the
// corresponding config fields (a mismatched explicit command is an error).
ValidationResult validate_config_text(std::string_view text,
                                      std::optional<std::string> command_override = {},
                                      std::optional<std::uint64_t> seed_override = {});
ValidationResult validate_config_json(const nlohmann::json& doc,
                                      std::optional<std::string> command_override = {},
                                      std::optional<std::uint64_t> seed_override = {});

struct Report {
    nlohmann::json config;   // resolved echo; re-runnable
    nlohmann::json payload;  // command-specific
};

// Dispatches a validated config. Throws std::invalid_argument for input
// that validation could not have accepted and InternalInvariantError when
// a numerical invariant breaks downstream.
Report run(const RunConfig& config);

nlohmann::json config_echo(const RunConfig& config);
nlohmann::json report_json(const Report& report);

// Domain-object serializers shared by run() and the test suites.
nlohmann::json to_json(const QubitState& s);
nlohmann::json to_json(const TwoQubitState& s);
nlohmann::json to_json(const Play& p);
nlohmann::json to_json(const NashCertificate& cert);
nlohmann::json to_json(const SearchReport& report);
nlohmann::json to_json(const MinimaxReport& report);
nlohmann::json to_json(const CaseReport& report);

// Removes the informational wall-time fields, leaving the deterministic
// part of a serialized report.
void erase_wall_time(nlohmann::json& report);

}  // namespace qnash
