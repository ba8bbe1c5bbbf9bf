// The gamed two-qubit computation: game specification, outcome
// computation, theta-distance to the basis observables, the OR-form
// preference relation, the AND-form deviation conditions, and closed-form
// Nash certification via exact best-response maxima.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qnash/linalg.hpp"

namespace qnash {

// Default verification tolerance for analytically constructed plays.
inline constexpr double kVerifyEpsilon = 1e-9;
// Default tolerance for plays found by grid search, where discretization
// error dominates floating-point noise.
inline constexpr double kSearchEpsilon = 1e-6;

// A two-qubit computation gamed with per-player preferred-basis targets.
struct QuantumGameSpec {
    Unitary4 u;
    std::vector<int> targets1;  // sorted, unique, nonempty subset of {1..4}
    std::vector<int> targets2;
    std::string name;           // optional preset label
};

// Validating factory: target sets must be nonempty subsets of {1,2,3,4}.
QuantumGameSpec make_game(Unitary4 u, std::vector<int> targets1, std::vector<int> targets2,
                          std::string name = "");

// Preset with targets I -> {3,4}, II -> {2,4}.
QuantumGameSpec prisoners_dilemma_game(Unitary4 u);

// One pure strategy per player.
struct Play {
    QubitState a;  // player I
    QubitState b;  // player II
};

// Angular distance of a state to basis observable b_i, defined as
// arccos(|amp_i|^2). Strictly decreasing in |amp_i|, so every ordering it
// induces agrees with ordering amplitude moduli directly.
double theta(const TwoQubitState& n, int basis_index);

// N = u (a tensor b).
TwoQubitState outcome(const QuantumGameSpec& spec, const Play& play);

// OR-form preference: p is preferred over q iff p is strictly closer to at
// least one of the player's targets. Not antisymmetric; exposed for
// inspection, never used for certification.
bool prefers_or(const QuantumGameSpec& spec, int player, const TwoQubitState& p,
                const TwoQubitState& q);

// AND-form deviation condition: the deviated outcome is at least as far
// from every one of the player's targets as n is. This is the operative
// Nash condition.
bool deviation_dominates(const QuantumGameSpec& spec, int player, const TwoQubitState& n,
                         const TwoQubitState& deviated);

// Factored own-strategy-linear form of one outcome component: with the
// opponent fixed, amp_target = c1 * own.x + c2 * own.y.
// For player 1, target i: c1 = U_i1 x2 + U_i2 y2, c2 = U_i3 x2 + U_i4 y2.
// For player 2, target i: c1 = U_i1 x1 + U_i3 y1, c2 = U_i2 x1 + U_i4 y1.
std::pair<Complex, Complex> row_coefficients(const Unitary4& u, int player, int target,
                                             const QubitState& opponent);

struct CoefficientPair {
    int target;
    Complex c1;
    Complex c2;
};

// row_coefficients over the player's whole target set.
std::vector<CoefficientPair> best_response_coeffs(const QuantumGameSpec& spec, int player,
                                                  const QubitState& opponent);

struct BestResponse {
    double value;        // sqrt(|c1|^2 + |c2|^2), the exact maximum
    QubitState strategy; // achieving unit strategy, canonical phase
};

// Exact maximum of |c1 x + c2 y| over unit (x, y), with an achieving
// strategy in the conjugate direction. Sharpens the triangle bound
// P|x*| + Q|y*| into the Cauchy-Schwarz maximum.
BestResponse max_deviation_amplitude(Complex c1, Complex c2);

struct TargetMargin {
    int player;
    int target;
    double achieved;           // |amp_target| at the play
    double best_response_max;  // exact unilateral-deviation maximum
    double margin;             // achieved - best_response_max, always <= 1e-12
};

struct NashCertificate {
    Play play;
    TwoQubitState outcome;
    std::vector<TargetMargin> margins;  // player 1's targets first, then player 2's
    double epsilon;
    bool verdict;   // every margin >= -epsilon
    bool dominant;  // equal to verdict: equilibrium strategies here are
                    // best replies against every opponent strategy
};

// Closed-form certification: for each player and target, compares the
// achieved amplitude modulus with the exact best-response maximum.
NashCertificate verify_nash(const QuantumGameSpec& spec, const Play& play,
                            double epsilon = kVerifyEpsilon);

}  // namespace qnash
