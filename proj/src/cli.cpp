#include "qnash/cli.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace qnash {

namespace {

using nlohmann::json;

std::string_view convention_string(Convention c) {
    return c == Convention::corrected ? "corrected" : "paper-literal";
}

std::optional<Convention> parse_convention(std::string_view s) {
    if (s == "corrected") return Convention::corrected;
    if (s == "paper-literal") return Convention::paper_literal;
    return std::nullopt;
}

// Collects field-addressed diagnostics while pulling typed values out of
// the config document.
struct Validator {
    const json& doc;
    std::vector<Diagnostic>& diags;

    void fail(const std::string& field, std::string message) {
        diags.push_back(Diagnostic{field, std::move(message)});
    }

    bool has(const char* key) const { return doc.contains(key); }

    const json* field(const char* key) {
        auto it = doc.find(key);
        return it == doc.end() ? nullptr : &*it;
    }

    std::optional<Complex> complex_at(const json& j, const std::string& path) {
        if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
            fail(path, "expected a complex number as a [re, im] pair");
            return std::nullopt;
        }
        const Complex c{j[0].get<double>(), j[1].get<double>()};
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            fail(path, "complex entry must be finite");
            return std::nullopt;
        }
        return c;
    }

    std::optional<QubitState> strategy_at(const json& j, const std::string& path) {
        if (!j.is_array() || j.size() != 2) {
            fail(path, "expected a strategy as a [x, y] pair of complex numbers");
            return std::nullopt;
        }
        auto x = complex_at(j[0], path + "/0");
        auto y = complex_at(j[1], path + "/1");
        if (!x || !y) return std::nullopt;
        const QubitState s{*x, *y};
        if (!is_normalized(s)) {
            fail(path, "strategy not normalized: |x|^2 + |y|^2 = " +
                           std::to_string(norm_squared(s)));
            return std::nullopt;
        }
        return s;
    }

    std::optional<Play> play_at(const json& j, const std::string& path) {
        if (!j.is_array() || j.size() != 2) {
            fail(path, "expected a play as a pair of strategies");
            return std::nullopt;
        }
        auto a = strategy_at(j[0], path + "/0");
        auto b = strategy_at(j[1], path + "/1");
        if (!a || !b) return std::nullopt;
        return Play{*a, *b};
    }

    std::optional<std::array<std::array<Complex, 4>, 4>> matrix_at(const json& j,
                                                                   const std::string& path) {
        if (!j.is_array() || j.size() != 4) {
            fail(path, "expected a 4x4 matrix as four rows");
            return std::nullopt;
        }
        std::array<std::array<Complex, 4>, 4> m{};
        bool ok = true;
        for (int r = 0; r < 4; ++r) {
            const json& row = j[r];
            if (!row.is_array() || row.size() != 4) {
                fail(path + "/" + std::to_string(r), "expected a row of four complex entries");
                ok = false;
                continue;
            }
            for (int c = 0; c < 4; ++c) {
                auto e = complex_at(row[c], path + "/" + std::to_string(r) + "/" +
                                                std::to_string(c));
                if (!e) {
                    ok = false;
                    continue;
                }
                m[r][c] = *e;
            }
        }
        if (!ok) return std::nullopt;
        return m;
    }

    std::optional<UnitarySpec> unitary_at(const json& j, const std::string& path) {
        UnitarySpec spec;
        if (j.is_string()) {
            const std::string name = j.get<std::string>();
            if (name == "random") {
                spec.kind = UnitarySpec::Kind::random;
                return spec;
            }
            auto g = parse_gate_name(name);
            if (!g) {
                fail(path, "unknown gate name '" + name +
                               "' (expected identity, cnot, swap, cz, random, or a matrix)");
                return std::nullopt;
            }
            spec.kind = UnitarySpec::Kind::named;
            spec.name = *g;
            return spec;
        }
        if (j.is_array()) {
            auto m = matrix_at(j, path);
            if (!m) return std::nullopt;
            spec.kind = UnitarySpec::Kind::custom;
            spec.matrix = *m;
            return check_custom(spec, path);
        }
        if (j.is_object()) {
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (it.key() != "name" && it.key() != "matrix") {
                    fail(path + "/" + it.key(), "unknown field in unitary object");
                    return std::nullopt;
                }
            }
            if (!j.contains("name") || !j["name"].is_string()) {
                fail(path + "/name", "unitary object requires a string name");
                return std::nullopt;
            }
            const std::string name = j["name"].get<std::string>();
            if (name == "custom") {
                if (!j.contains("matrix")) {
                    fail(path + "/matrix", "custom unitary requires a matrix");
                    return std::nullopt;
                }
                auto m = matrix_at(j["matrix"], path + "/matrix");
                if (!m) return std::nullopt;
                spec.kind = UnitarySpec::Kind::custom;
                spec.matrix = *m;
                return check_custom(spec, path);
            }
            if (j.contains("matrix")) {
                fail(path + "/matrix", "matrix is only valid with name \"custom\"");
                return std::nullopt;
            }
            if (name == "random") {
                spec.kind = UnitarySpec::Kind::random;
                return spec;
            }
            auto g = parse_gate_name(name);
            if (!g) {
                fail(path + "/name", "unknown gate name '" + name + "'");
                return std::nullopt;
            }
            spec.kind = UnitarySpec::Kind::named;
            spec.name = *g;
            return spec;
        }
        fail(path, "expected a gate name, a 4x4 matrix, or a unitary object");
        return std::nullopt;
    }

    std::optional<UnitarySpec> check_custom(const UnitarySpec& spec, const std::string& path) {
        try {
            make_unitary(spec.matrix);
        } catch (const std::invalid_argument& e) {
            fail(path, e.what());
            return std::nullopt;
        }
        return spec;
    }

    std::optional<std::vector<int>> targets_at(const json& j, const std::string& path) {
        if (!j.is_array() || j.empty()) {
            fail(path, "empty target set (expected a nonempty subset of {1,2,3,4})");
            return std::nullopt;
        }
        std::set<int> seen;
        for (const json& e : j) {
            if (!e.is_number_integer()) {
                fail(path, "target indices must be integers");
                return std::nullopt;
            }
            const int t = e.get<int>();
            if (t < 1 || t > 4) {
                fail(path, "target index " + std::to_string(t) + " outside 1..4");
                return std::nullopt;
            }
            seen.insert(t);
        }
        return std::vector<int>(seen.begin(), seen.end());
    }

    std::optional<TargetSets> game_at(const json& j, const std::string& path) {
        if (j.is_string()) {
            const std::string name = j.get<std::string>();
            if (name != "prisoners_dilemma") {
                fail(path, "unknown game preset '" + name + "'");
                return std::nullopt;
            }
            return TargetSets{{3, 4}, {2, 4}, name};
        }
        if (!j.is_object()) {
            fail(path, "expected a preset name or an object with targets1/targets2");
            return std::nullopt;
        }
        TargetSets sets;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.key() != "targets1" && it.key() != "targets2" && it.key() != "preset") {
                fail(path + "/" + it.key(), "unknown field in game object");
                return std::nullopt;
            }
        }
        if (j.contains("preset")) {
            if (!j["preset"].is_string() || j["preset"].get<std::string>() != "prisoners_dilemma") {
                fail(path + "/preset", "unknown game preset");
                return std::nullopt;
            }
            sets.preset = j["preset"].get<std::string>();
        }
        if (!j.contains("targets1") || !j.contains("targets2")) {
            if (sets.preset) return TargetSets{{3, 4}, {2, 4}, sets.preset};
            fail(path, "game object requires targets1 and targets2 (or a preset)");
            return std::nullopt;
        }
        auto t1 = targets_at(j["targets1"], path + "/targets1");
        auto t2 = targets_at(j["targets2"], path + "/targets2");
        if (!t1 || !t2) return std::nullopt;
        sets.targets1 = *t1;
        sets.targets2 = *t2;
        if (sets.preset &&
            (sets.targets1 != std::vector<int>{3, 4} || sets.targets2 != std::vector<int>{2, 4})) {
            fail(path, "explicit targets conflict with the prisoners_dilemma preset");
            return std::nullopt;
        }
        return sets;
    }

    std::optional<GridSpec> grid_at(const json& j, const std::string& path, GridSpec defaults) {
        if (!j.is_object()) {
            fail(path, "expected a grid object");
            return std::nullopt;
        }
        GridSpec grid = defaults;
        bool ok = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            const std::string key = it.key();
            int* slot = nullptr;
            if (key == "n_alpha") slot = &grid.n_alpha;
            else if (key == "n_phi") slot = &grid.n_phi;
            else if (key == "refine_depth") slot = &grid.refine_depth;
            else if (key == "top_k") slot = &grid.top_k;
            else {
                fail(path + "/" + key, "unknown field in grid object");
                ok = false;
                continue;
            }
            if (!it.value().is_number_integer()) {
                fail(path + "/" + key, "expected an integer");
                ok = false;
                continue;
            }
            *slot = it.value().get<int>();
        }
        if (!ok) return std::nullopt;
        if (grid.n_alpha < 2) {
            fail(path + "/n_alpha", "degenerate grid: n_alpha must be >= 2");
            ok = false;
        }
        if (grid.n_phi < 1) {
            fail(path + "/n_phi", "n_phi must be >= 1");
            ok = false;
        }
        if (grid.refine_depth < 0) {
            fail(path + "/refine_depth", "refine_depth must be >= 0");
            ok = false;
        }
        if (grid.top_k < 1) {
            fail(path + "/top_k", "top_k must be >= 1");
            ok = false;
        }
        if (!ok) return std::nullopt;
        return grid;
    }

    std::optional<ClassicalGameConfig> classical_at(const json& j, const std::string& path) {
        if (!j.is_object()) {
            fail(path, "expected a classical game object");
            return std::nullopt;
        }
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.key() != "strategies" && it.key() != "table" && it.key() != "preferences") {
                fail(path + "/" + it.key(), "unknown field in classical game object");
                return std::nullopt;
            }
        }
        ClassicalGameConfig cfg;
        const auto labels2 = [&](const json& a, const std::string& p,
                                 std::array<std::string, 2>& out) {
            if (!a.is_array() || a.size() != 2 || !a[0].is_string() || !a[1].is_string()) {
                fail(p, "expected two strategy labels");
                return false;
            }
            out = {a[0].get<std::string>(), a[1].get<std::string>()};
            return true;
        };
        if (!j.contains("strategies") || !j["strategies"].is_array() ||
            j["strategies"].size() != 2) {
            fail(path + "/strategies", "expected [player1 labels, player2 labels]");
            return std::nullopt;
        }
        if (!labels2(j["strategies"][0], path + "/strategies/0", cfg.strategies1) ||
            !labels2(j["strategies"][1], path + "/strategies/1", cfg.strategies2)) {
            return std::nullopt;
        }
        if (!j.contains("table") || !j["table"].is_array() || j["table"].size() != 2) {
            fail(path + "/table", "expected a 2x2 outcome table");
            return std::nullopt;
        }
        for (int r = 0; r < 2; ++r) {
            std::array<std::string, 2> row;
            if (!labels2(j["table"][r], path + "/table/" + std::to_string(r), row)) {
                return std::nullopt;
            }
            cfg.table[r] = row;
        }
        if (!j.contains("preferences") || !j["preferences"].is_array() ||
            j["preferences"].size() != 2) {
            fail(path + "/preferences", "expected [player1 ranking, player2 ranking]");
            return std::nullopt;
        }
        for (int p = 0; p < 2; ++p) {
            const json& r = j["preferences"][p];
            const std::string rpath = path + "/preferences/" + std::to_string(p);
            if (!r.is_array() || r.size() != 4) {
                fail(rpath, "expected a ranking of four outcome labels");
                return std::nullopt;
            }
            auto& out = (p == 0) ? cfg.preferences1 : cfg.preferences2;
            for (int i = 0; i < 4; ++i) {
                if (!r[i].is_string()) {
                    fail(rpath + "/" + std::to_string(i), "expected an outcome label");
                    return std::nullopt;
                }
                out[i] = r[i].get<std::string>();
            }
        }
        try {
            make_classical_game(cfg.strategies1, cfg.strategies2, cfg.table,
                                PreferenceOrder{cfg.preferences1},
                                PreferenceOrder{cfg.preferences2});
        } catch (const std::invalid_argument& e) {
            fail(path, e.what());
            return std::nullopt;
        }
        return cfg;
    }
};

struct FieldRule {
    const char* key;
    bool required;
};

const std::vector<FieldRule>& rules_for(Command c) {
    static const std::vector<FieldRule> classical{{"classical_game", true}};
    static const std::vector<FieldRule> outcome{{"unitary", true}, {"play", true}};
    static const std::vector<FieldRule> verify{
        {"unitary", true}, {"game", true}, {"play", true}, {"epsilon", false}};
    static const std::vector<FieldRule> search{
        {"unitary", true}, {"game", true}, {"grid", false}, {"epsilon", false}};
    static const std::vector<FieldRule> cases{
        {"unitary", true}, {"play", true}, {"alt_play", true}, {"convention", false}};
    static const std::vector<FieldRule> minimax{
        {"unitary", true}, {"target", true}, {"grid", false}, {"include_maximin", false}};
    switch (c) {
        case Command::classical: return classical;
        case Command::outcome: return outcome;
        case Command::verify: return verify;
        case Command::search: return search;
        case Command::cases: return cases;
        case Command::minimax: return minimax;
    }
    throw std::invalid_argument("unknown command");
}

json unitary_json(const UnitarySpec& spec) {
    json j;
    switch (spec.kind) {
        case UnitarySpec::Kind::named:
            j["name"] = std::string(gate_name_string(spec.name));
            break;
        case UnitarySpec::Kind::random:
            j["name"] = "random";
            break;
        case UnitarySpec::Kind::custom: {
            j["name"] = "custom";
            json rows = json::array();
            for (const auto& row : spec.matrix) {
                json r = json::array();
                for (const Complex& e : row) r.push_back(json::array({e.real(), e.imag()}));
                rows.push_back(r);
            }
            j["matrix"] = rows;
            break;
        }
    }
    return j;
}

json grid_json(const GridSpec& g) {
    return json{{"n_alpha", g.n_alpha},
                {"n_phi", g.n_phi},
                {"refine_depth", g.refine_depth},
                {"top_k", g.top_k}};
}

json inequality_json(const InequalityRecord& r) {
    return json{{"lhs", r.lhs}, {"rhs", r.rhs}, {"holds", r.holds}};
}

Unitary4 resolve_unitary(const RunConfig& config) {
    const UnitarySpec& spec = *config.unitary;
    switch (spec.kind) {
        case UnitarySpec::Kind::named: return gate(spec.name);
        case UnitarySpec::Kind::custom: return make_unitary(spec.matrix);
        case UnitarySpec::Kind::random: return random_unitary(*config.seed);
    }
    throw std::invalid_argument("unresolved unitary");
}

QuantumGameSpec resolve_game(const RunConfig& config) {
    const TargetSets& sets = *config.game;
    return make_game(resolve_unitary(config), sets.targets1, sets.targets2,
                     sets.preset.value_or(""));
}

json classical_payload(const ClassicalGameConfig& cfg) {
    const ClassicalGame g = make_classical_game(cfg.strategies1, cfg.strategies2, cfg.table,
                                                PreferenceOrder{cfg.preferences1},
                                                PreferenceOrder{cfg.preferences2});
    json dominant;
    for (int player : {1, 2}) {
        const auto& own = (player == 1) ? g.strategies1 : g.strategies2;
        json per;
        for (const std::string& s : own) {
            per[s] = is_strongly_dominant(g, player, s);
        }
        dominant[player == 1 ? "player1" : "player2"] = per;
    }
    json nash = json::array();
    for (const auto& [s1, s2] : pure_nash(g)) {
        nash.push_back(json{{"play", json::array({s1, s2})}, {"outcome", outcome_of(g, s1, s2)}});
    }
    return json{{"strongly_dominant", dominant}, {"pure_nash", nash}};
}

json outcome_payload(const Unitary4& u, const Play& play) {
    const TwoQubitState n = apply(u, tensor(play.a, play.b));
    json moduli = json::array();
    json thetas = json::array();
    for (int i = 1; i <= 4; ++i) {
        moduli.push_back(std::abs(n.amplitude(i)));
        thetas.push_back(theta(n, i));
    }
    return json{{"outcome", to_json(n)}, {"amplitude_moduli", moduli}, {"theta", thetas}};
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
    if (name == "classical") return Command::classical;
    if (name == "outcome") return Command::outcome;
    if (name == "verify") return Command::verify;
    if (name == "search") return Command::search;
    if (name == "cases") return Command::cases;
    if (name == "minimax") return Command::minimax;
    return std::nullopt;
}

std::string_view command_string(Command c) {
    switch (c) {
        case Command::classical: return "classical";
        case Command::outcome: return "outcome";
        case Command::verify: return "verify";
        case Command::search: return "search";
        case Command::cases: return "cases";
        case Command::minimax: return "minimax";
    }
    return "unknown";
}

ValidationResult validate_config_text(std::string_view text,
                                      std::optional<std::string> command_override,
                                      std::optional<std::uint64_t> seed_override) {
    ValidationResult result;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        result.diagnostics.push_back(Diagnostic{"(document)", e.what()});
        return result;
    }
    return validate_config_json(doc, std::move(command_override), seed_override);
}

ValidationResult validate_config_json(const nlohmann::json& doc,
                                      std::optional<std::string> command_override,
                                      std::optional<std::uint64_t> seed_override) {
    ValidationResult result;
    auto& diags = result.diagnostics;
    if (!doc.is_object()) {
        diags.push_back(Diagnostic{"(document)", "config must be a JSON object"});
        return result;
    }
    Validator v{doc, diags};
    RunConfig config;

    // Command: the command line wins; an explicit mismatch is an error.
    std::optional<Command> command;
    if (const json* j = v.field("command")) {
        if (!j->is_string()) {
            v.fail("command", "expected a command name string");
        } else {
            command = parse_command(j->get<std::string>());
            if (!command) {
                v.fail("command", "unknown command '" + j->get<std::string>() + "'");
            }
        }
    }
    if (command_override) {
        auto cli = parse_command(*command_override);
        if (!cli) {
            v.fail("command", "unknown command '" + *command_override + "'");
        } else if (command && *command != *cli) {
            v.fail("command", "config command '" + std::string(command_string(*command)) +
                                  "' conflicts with subcommand '" + *command_override + "'");
        } else {
            command = cli;
        }
    }
    if (!command) {
        if (diags.empty()) v.fail("command", "missing command");
        return result;
    }
    config.command = *command;

    const auto& rules = rules_for(*command);
    const auto rule_for = [&](const std::string& key) -> const FieldRule* {
        for (const FieldRule& r : rules) {
            if (key == r.key) return &r;
        }
        return nullptr;
    };
    static const std::set<std::string> common{"command", "seed", "output"};
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        if (common.count(it.key()) || rule_for(it.key())) continue;
        static const std::set<std::string> known{"unitary",  "game",       "play",
                                                 "alt_play", "target",     "grid",
                                                 "epsilon",  "convention", "include_maximin",
                                                 "classical_game"};
        if (known.count(it.key())) {
            v.fail(it.key(), "field not applicable to command '" +
                                 std::string(command_string(*command)) + "'");
        } else {
            v.fail(it.key(), "unknown field");
        }
    }
    for (const FieldRule& r : rules) {
        if (r.required && !doc.contains(r.key)) {
            v.fail(r.key, "required for command '" + std::string(command_string(*command)) + "'");
        }
    }

    if (const json* j = v.field("seed")) {
        if (j->is_number_unsigned()) {
            config.seed = j->get<std::uint64_t>();
        } else if (j->is_number_integer() && j->get<std::int64_t>() >= 0) {
            config.seed = static_cast<std::uint64_t>(j->get<std::int64_t>());
        } else {
            v.fail("seed", "expected a nonnegative integer");
        }
    }
    if (seed_override) config.seed = *seed_override;

    if (const json* j = v.field("output")) {
        if (!j->is_string() || j->get<std::string>().empty()) {
            v.fail("output", "expected a nonempty path string");
        } else {
            config.output = j->get<std::string>();
        }
    }

    if (const json* j = v.field("unitary"); j && rule_for("unitary")) {
        if (auto u = v.unitary_at(*j, "unitary")) {
            config.unitary = *u;
            if (u->kind == UnitarySpec::Kind::random && !config.seed) {
                v.fail("seed", "required when unitary is \"random\"");
            }
        }
    }
    if (const json* j = v.field("game"); j && rule_for("game")) {
        if (auto g = v.game_at(*j, "game")) config.game = *g;
    }
    if (const json* j = v.field("play"); j && rule_for("play")) {
        if (auto p = v.play_at(*j, "play")) config.play = *p;
    }
    if (const json* j = v.field("alt_play"); j && rule_for("alt_play")) {
        if (auto p = v.play_at(*j, "alt_play")) config.alt_play = *p;
    }
    if (const json* j = v.field("target"); j && rule_for("target")) {
        if (!j->is_number_integer()) {
            v.fail("target", "expected a basis index 1..4");
        } else {
            const int t = j->get<int>();
            if (t < 1 || t > 4) {
                v.fail("target", "basis index " + std::to_string(t) + " outside 1..4");
            } else {
                config.target = t;
            }
        }
    }
    const GridSpec grid_default =
        (*command == Command::minimax) ? GridSpec{64, 64, 3, 1} : GridSpec{};
    config.grid = grid_default;
    if (const json* j = v.field("grid"); j && rule_for("grid")) {
        if (auto g = v.grid_at(*j, "grid", grid_default)) config.grid = *g;
    }
    config.epsilon = (*command == Command::search) ? kSearchEpsilon : kVerifyEpsilon;
    if (const json* j = v.field("epsilon"); j && rule_for("epsilon")) {
        if (!j->is_number() || !std::isfinite(j->get<double>()) || j->get<double>() < 0.0) {
            v.fail("epsilon", "expected a finite nonnegative real");
        } else {
            config.epsilon = j->get<double>();
        }
    }
    if (const json* j = v.field("convention"); j && rule_for("convention")) {
        if (!j->is_string()) {
            v.fail("convention", "expected \"corrected\" or \"paper-literal\"");
        } else if (auto c = parse_convention(j->get<std::string>())) {
            config.convention = *c;
        } else {
            v.fail("convention", "unknown convention '" + j->get<std::string>() + "'");
        }
    }
    if (const json* j = v.field("include_maximin"); j && rule_for("include_maximin")) {
        if (!j->is_boolean()) {
            v.fail("include_maximin", "expected a boolean");
        } else {
            config.include_maximin = j->get<bool>();
        }
    }
    if (const json* j = v.field("classical_game"); j && rule_for("classical_game")) {
        if (auto c = v.classical_at(*j, "classical_game")) config.classical_game = *c;
    }

    if (!diags.empty()) return result;
    result.config = std::move(config);
    return result;
}

nlohmann::json config_echo(const RunConfig& config) {
    json j;
    j["command"] = std::string(command_string(config.command));
    if (config.seed) j["seed"] = *config.seed;
    if (config.output) j["output"] = *config.output;
    if (config.unitary) j["unitary"] = unitary_json(*config.unitary);
    if (config.game) {
        json g;
        if (config.game->preset) g["preset"] = *config.game->preset;
        g["targets1"] = config.game->targets1;
        g["targets2"] = config.game->targets2;
        j["game"] = g;
    }
    if (config.play) j["play"] = to_json(*config.play);
    if (config.alt_play) j["alt_play"] = to_json(*config.alt_play);
    if (config.target) j["target"] = *config.target;
    switch (config.command) {
        case Command::verify:
            j["epsilon"] = config.epsilon;
            break;
        case Command::search:
            j["epsilon"] = config.epsilon;
            j["grid"] = grid_json(config.grid);
            break;
        case Command::minimax:
            j["grid"] = grid_json(config.grid);
            j["include_maximin"] = config.include_maximin;
            break;
        case Command::cases:
            j["convention"] = std::string(convention_string(config.convention));
            break;
        default:
            break;
    }
    if (config.classical_game) {
        const ClassicalGameConfig& c = *config.classical_game;
        j["classical_game"] =
            json{{"strategies", json::array({c.strategies1, c.strategies2})},
                 {"table", json::array({c.table[0], c.table[1]})},
                 {"preferences", json::array({c.preferences1, c.preferences2})}};
    }
    return j;
}

Report run(const RunConfig& config) {
    Report report;
    report.config = config_echo(config);
    switch (config.command) {
        case Command::classical:
            report.payload = classical_payload(*config.classical_game);
            break;
        case Command::outcome:
            report.payload = outcome_payload(resolve_unitary(config), *config.play);
            break;
        case Command::verify: {
            const QuantumGameSpec spec = resolve_game(config);
            report.payload = to_json(verify_nash(spec, *config.play, config.epsilon));
            break;
        }
        case Command::search: {
            const QuantumGameSpec spec = resolve_game(config);
            report.payload = to_json(search_nash(spec, config.grid, config.epsilon));
            break;
        }
        case Command::cases:
            report.payload = to_json(classify_cases(resolve_unitary(config), *config.play,
                                                    *config.alt_play, config.convention));
            break;
        case Command::minimax:
            report.payload = to_json(minimax_search(resolve_unitary(config), *config.target,
                                                    config.grid, config.include_maximin));
            break;
    }
    return report;
}

nlohmann::json report_json(const Report& report) {
    return json{{"tool", std::string(kToolName)},
                {"version", std::string(kToolVersion)},
                {"schema_version", kSchemaVersion},
                {"config", report.config},
                {"payload", report.payload}};
}

nlohmann::json to_json(const QubitState& s) {
    return json::array({json::array({s.x.real(), s.x.imag()}),
                        json::array({s.y.real(), s.y.imag()})});
}

nlohmann::json to_json(const TwoQubitState& s) {
    json j = json::array();
    for (const Complex& a : s.amp) j.push_back(json::array({a.real(), a.imag()}));
    return j;
}

nlohmann::json to_json(const Play& p) {
    return json::array({to_json(p.a), to_json(p.b)});
}

nlohmann::json to_json(const NashCertificate& cert) {
    json margins = json::array();
    for (const TargetMargin& m : cert.margins) {
        margins.push_back(json{{"player", m.player},
                               {"target", m.target},
                               {"achieved", m.achieved},
                               {"best_response_max", m.best_response_max},
                               {"margin", m.margin}});
    }
    return json{{"play", to_json(cert.play)},     {"outcome", to_json(cert.outcome)},
                {"margins", margins},             {"epsilon", cert.epsilon},
                {"verdict", cert.verdict},        {"dominant", cert.dominant}};
}

nlohmann::json to_json(const SearchReport& report) {
    json candidates = json::array();
    for (const SearchCandidate& c : report.candidates) {
        candidates.push_back(json{{"grid_index", c.grid_index},
                                  {"play", to_json(c.play)},
                                  {"worst_margin", c.worst_margin},
                                  {"is_equilibrium", c.is_equilibrium},
                                  {"certificate", to_json(c.certificate)}});
    }
    json j{{"grid", grid_json(report.grid)},
           {"epsilon", report.epsilon},
           {"equilibrium_found", report.equilibrium_found},
           {"candidates", candidates},
           {"stats", json{{"cells_evaluated", report.cells_evaluated},
                          {"wall_time_ms", report.wall_time_ms}}}};
    if (!report.message.empty()) j["message"] = report.message;
    return j;
}

nlohmann::json to_json(const MinimaxReport& report) {
    json j{{"target", report.target},
           {"value", report.value},
           {"closed_form_value", report.closed_form_value},
           {"minimizing_strategy", to_json(report.minimizing_strategy)},
           {"maximizing_response", to_json(report.maximizing_response)}};
    if (report.maximin) {
        j["maximin"] = json{{"value", report.maximin->value},
                            {"witness_a", to_json(report.maximin->witness_a)},
                            {"witness_b", to_json(report.maximin->witness_b)},
                            {"note", report.maximin->note}};
    }
    return j;
}

nlohmann::json to_json(const CaseReport& report) {
    const CoefficientSet& c = report.coeffs;
    json coeffs{{"P", c.P},        {"Q", c.Q},        {"P_prime", c.Pp}, {"Q_prime", c.Qp},
                {"S", c.S},        {"T", c.T},        {"S_prime", c.Sp}, {"T_prime", c.Tp}};
    json cases;
    for (int i = 0; i < 8; ++i) {
        cases["case" + std::to_string(18 + i)] = inequality_json(report.cases[i]);
    }
    json raw{{"ineq1", inequality_json(report.player1_raw.first)},
             {"ineq2", inequality_json(report.player1_raw.second)},
             {"ineq3", inequality_json(report.player2_raw.first)},
             {"ineq4", inequality_json(report.player2_raw.second)}};
    return json{{"convention", std::string(convention_string(c.convention))},
                {"coefficients", coeffs},
                {"cases", cases},
                {"raw", raw}};
}

void erase_wall_time(nlohmann::json& report) {
    if (report.is_object()) {
        report.erase("wall_time_ms");
        for (auto& [key, value] : report.items()) erase_wall_time(value);
    } else if (report.is_array()) {
        for (auto& value : report) erase_wall_time(value);
    }
}

}  // namespace qnash
