#include "qnash/classical.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qnash {

namespace {

int rank_of(const PreferenceOrder& order, const std::string& label) {
    for (int i = 0; i < 4; ++i) {
        if (order.ranking[i] == label) return i;
    }
    throw std::invalid_argument("preference order does not rank outcome '" + label + "'");
}

int own_index(const std::array<std::string, 2>& strategies, const std::string& s) {
    if (strategies[0] == s) return 0;
    if (strategies[1] == s) return 1;
    throw std::invalid_argument("unknown strategy label '" + s + "'");
}

const PreferenceOrder& prefs_for(const ClassicalGame& g, int player) {
    if (player == 1) return g.prefs1;
    if (player == 2) return g.prefs2;
    throw std::invalid_argument("player must be 1 or 2");
}

void require_partition(const ClassicalGame& g, const std::array<std::string, 2>& upper,
                       const std::array<std::string, 2>& lower) {
    std::set<std::string> outcomes;
    for (const auto& row : g.table) {
        for (const auto& o : row) outcomes.insert(o);
    }
    std::set<std::string> given{upper[0], upper[1], lower[0], lower[1]};
    if (given.size() != 4 || given != outcomes) {
        throw std::invalid_argument("upper/lower sets do not partition the outcome set");
    }
}

}  // namespace

bool prefers(const PreferenceOrder& order, const std::string& a, const std::string& b) {
    return rank_of(order, a) < rank_of(order, b);
}

ClassicalGame make_classical_game(std::array<std::string, 2> strategies1,
                                  std::array<std::string, 2> strategies2,
                                  std::array<std::array<std::string, 2>, 2> table,
                                  PreferenceOrder prefs1, PreferenceOrder prefs2) {
    if (strategies1[0] == strategies1[1]) {
        throw std::invalid_argument("player 1 strategy labels must be distinct");
    }
    if (strategies2[0] == strategies2[1]) {
        throw std::invalid_argument("player 2 strategy labels must be distinct");
    }
    std::set<std::string> outcomes;
    for (const auto& row : table) {
        for (const auto& o : row) outcomes.insert(o);
    }
    if (outcomes.size() != 4) {
        throw std::invalid_argument("outcome table must contain four distinct labels");
    }
    for (const PreferenceOrder* p : {&prefs1, &prefs2}) {
        std::set<std::string> ranked(p->ranking.begin(), p->ranking.end());
        if (ranked != outcomes) {
            throw std::invalid_argument("preference order must rank exactly the table's outcomes");
        }
    }
    return ClassicalGame{std::move(strategies1), std::move(strategies2), std::move(table),
                         std::move(prefs1), std::move(prefs2)};
}

ClassicalGame prisoners_dilemma() {
    return make_classical_game({"C", "D"}, {"C", "D"},
                               {{{"o1", "o2"}, {"o3", "o4"}}},
                               PreferenceOrder{{"o3", "o1", "o4", "o2"}},
                               PreferenceOrder{{"o2", "o1", "o4", "o3"}});
}

const std::string& outcome_of(const ClassicalGame& g, const std::string& s1,
                              const std::string& s2) {
    return g.table[own_index(g.strategies1, s1)][own_index(g.strategies2, s2)];
}

bool is_strongly_dominant(const ClassicalGame& g, int player, const std::string& strategy) {
    const PreferenceOrder& prefs = prefs_for(g, player);
    if (player == 1) {
        const int s = own_index(g.strategies1, strategy);
        for (int t = 0; t < 2; ++t) {
            if (!prefers(prefs, g.table[s][t], g.table[1 - s][t])) return false;
        }
    } else {
        const int s = own_index(g.strategies2, strategy);
        for (int t = 0; t < 2; ++t) {
            if (!prefers(prefs, g.table[t][s], g.table[t][1 - s])) return false;
        }
    }
    return true;
}

bool strict_pairwise_set_preference(const ClassicalGame& g, int player,
                                    const std::array<std::string, 2>& upper,
                                    const std::array<std::string, 2>& lower) {
    require_partition(g, upper, lower);
    const PreferenceOrder& prefs = prefs_for(g, player);
    for (const auto& u : upper) {
        for (const auto& l : lower) {
            if (!prefers(prefs, u, l)) return false;
        }
    }
    return true;
}

bool dominance_induced_set_preference(const ClassicalGame& g, int player,
                                      const std::array<std::string, 2>& upper,
                                      const std::array<std::string, 2>& lower) {
    require_partition(g, upper, lower);
    const std::set<std::string> want{upper[0], upper[1]};
    const auto& own = (player == 1) ? g.strategies1 : g.strategies2;
    prefs_for(g, player);  // validates the player index
    for (int s = 0; s < 2; ++s) {
        std::set<std::string> reach;
        for (int t = 0; t < 2; ++t) {
            reach.insert(player == 1 ? g.table[s][t] : g.table[t][s]);
        }
        if (reach == want && is_strongly_dominant(g, player, own[s])) return true;
    }
    return false;
}

std::vector<std::pair<std::string, std::string>> pure_nash(const ClassicalGame& g) {
    std::vector<std::pair<std::string, std::string>> result;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const std::string& here = g.table[i][j];
            const bool p1_deviates = prefers(g.prefs1, g.table[1 - i][j], here);
            const bool p2_deviates = prefers(g.prefs2, g.table[i][1 - j], here);
            if (!p1_deviates && !p2_deviates) {
                result.emplace_back(g.strategies1[i], g.strategies2[j]);
            }
        }
    }
    return result;
}

}  // namespace qnash
