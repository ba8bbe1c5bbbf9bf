// qnash: batch analyzer for two-qubit quantum games. Reads a JSON config,
// runs one command, writes a JSON report.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include <CLI11.hpp>

#include "qnash/cli.hpp"

namespace {

int fail_invalid(const std::vector<qnash::Diagnostic>& diags) {
    for (const qnash::Diagnostic& d : diags) {
        std::cerr << "error: " << d.field << ": " << d.message << "\n";
    }
    return qnash::kExitInvalidInput;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nash equilibrium solver and certifier for gamed two-qubit computations"};
    app.require_subcommand(1);

    std::string config_path;
    std::string output_path;
    std::uint64_t seed_value = 0;

    const std::pair<const char*, const char*> commands[] = {
        {"classical", "dominance and pure Nash analysis of a 2x2 normal-form game"},
        {"outcome", "outcome state and theta distances for one play"},
        {"verify", "closed-form Nash certificate for one play"},
        {"search", "grid search with refinement for candidate equilibria"},
        {"cases", "coefficient set, case inequalities and raw deviation checks"},
        {"minimax", "strictly-competitive value of a target amplitude"},
    };
    for (const auto& [name, description] : commands) {
        CLI::App* sub = app.add_subcommand(name, description);
        sub->add_option("--config", config_path, "path to the JSON config")->required();
        sub->add_option("--output", output_path, "report path (default: config's, else stdout)");
        sub->add_option("--seed", seed_value, "seed override for random unitaries");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? qnash::kExitOk : qnash::kExitInvalidInput;
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string subcommand = sub->get_name();
    std::optional<std::uint64_t> seed;
    if (sub->count("--seed") > 0) seed = seed_value;

    std::ifstream in(config_path);
    if (!in) {
        std::cerr << "error: config: cannot open '" << config_path << "'\n";
        return qnash::kExitInvalidInput;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();

    const qnash::ValidationResult validated =
        qnash::validate_config_text(buffer.str(), subcommand, seed);
    if (!validated.config) {
        return fail_invalid(validated.diagnostics);
    }

    qnash::Report report;
    try {
        report = qnash::run(*validated.config);
    } catch (const qnash::InternalInvariantError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return qnash::kExitInternalError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return qnash::kExitInvalidInput;
    }

    const std::string text = qnash::report_json(report).dump(2) + "\n";
    std::string destination = output_path;
    if (destination.empty() && validated.config->output) {
        destination = *validated.config->output;
    }
    if (destination.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(destination);
        if (!out) {
            std::cerr << "error: output: cannot write '" << destination << "'\n";
            return qnash::kExitInvalidInput;
        }
        out << text;
    }
    return qnash::kExitOk;
}
