// Two-player, two-strategy normal-form games with strict preference
// orderings over four distinct outcomes: dominance analysis and
// pure-strategy Nash enumeration.

#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace qnash {

// Strict total order over the four outcome labels, most-preferred first.
struct PreferenceOrder {
    std::array<std::string, 4> ranking;
};

// True iff `a` is strictly preferred over `b`. Throws on unknown labels.
bool prefers(const PreferenceOrder& order, const std::string& a, const std::string& b);

// table[i][j] is the outcome of the play (strategies1[i], strategies2[j]).
// The four table entries are distinct and both orders rank exactly them.
struct ClassicalGame {
    std::array<std::string, 2> strategies1;
    std::array<std::string, 2> strategies2;
    std::array<std::array<std::string, 2>, 2> table;
    PreferenceOrder prefs1;
    PreferenceOrder prefs2;
};

// Validating factory; throws std::invalid_argument with a description of
// the first violated invariant.
ClassicalGame make_classical_game(std::array<std::string, 2> strategies1,
                                  std::array<std::string, 2> strategies2,
                                  std::array<std::array<std::string, 2>, 2> table,
                                  PreferenceOrder prefs1, PreferenceOrder prefs2);

// The canonical baseline: strategies {C, D}, outcomes o1..o4 with
//   (C,C) -> o1, (C,D) -> o2, (D,C) -> o3, (D,D) -> o4,
//   player I:  o3 > o1 > o4 > o2
//   player II: o2 > o1 > o4 > o3.
ClassicalGame prisoners_dilemma();

const std::string& outcome_of(const ClassicalGame& g, const std::string& s1,
                              const std::string& s2);

// True iff `strategy` yields a strictly preferred outcome against every
// opponent strategy, compared with the player's other strategy.
bool is_strongly_dominant(const ClassicalGame& g, int player, const std::string& strategy);

// Two readings of the "upper pair preferred over lower pair" structure.
// Both require {upper, lower} to partition the outcome set into two pairs.
//
// Strict pairwise: every outcome in upper is strictly preferred over every
// outcome in lower under the player's order.
bool strict_pairwise_set_preference(const ClassicalGame& g, int player,
                                    const std::array<std::string, 2>& upper,
                                    const std::array<std::string, 2>& lower);

// Dominance-induced: some own strategy maps (row- or column-wise) exactly
// onto the upper pair and is strongly dominant.
bool dominance_induced_set_preference(const ClassicalGame& g, int player,
                                      const std::array<std::string, 2>& upper,
                                      const std::array<std::string, 2>& lower);

// All plays from which neither player's unilateral deviation yields a
// strictly preferred outcome, in lexicographic play order (by declared
// strategy index).
std::vector<std::pair<std::string, std::string>> pure_nash(const ClassicalGame& g);

}  // namespace qnash
