#include "qnash/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qnash {

namespace {

std::vector<int> normalize_targets(std::vector<int> targets, const char* which) {
    if (targets.empty()) {
        throw std::invalid_argument(std::string(which) + ": empty target set");
    }
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (int t : targets) {
        if (t < 1 || t > 4) {
            throw std::invalid_argument(std::string(which) + ": target index " +
                                        std::to_string(t) + " outside 1..4");
        }
    }
    return targets;
}

const std::vector<int>& targets_for(const QuantumGameSpec& spec, int player) {
    if (player == 1) return spec.targets1;
    if (player == 2) return spec.targets2;
    throw std::invalid_argument("player must be 1 or 2");
}

}  // namespace

QuantumGameSpec make_game(Unitary4 u, std::vector<int> targets1, std::vector<int> targets2,
                          std::string name) {
    if (!is_unitary(u)) {
        throw std::invalid_argument("make_game: matrix is not unitary");
    }
    return QuantumGameSpec{u, normalize_targets(std::move(targets1), "targets1"),
                           normalize_targets(std::move(targets2), "targets2"), std::move(name)};
}

QuantumGameSpec prisoners_dilemma_game(Unitary4 u) {
    return make_game(std::move(u), {3, 4}, {2, 4}, "prisoners_dilemma");
}

double theta(const TwoQubitState& n, int basis_index) {
    if (basis_index < 1 || basis_index > 4) {
        throw std::invalid_argument("theta: basis index outside 1..4");
    }
    const double p = std::clamp(std::norm(n.amp[basis_index - 1]), 0.0, 1.0);
    return std::acos(p);
}

TwoQubitState outcome(const QuantumGameSpec& spec, const Play& play) {
    return apply(spec.u, tensor(play.a, play.b));
}

bool prefers_or(const QuantumGameSpec& spec, int player, const TwoQubitState& p,
                const TwoQubitState& q) {
    for (int t : targets_for(spec, player)) {
        if (theta(p, t) < theta(q, t)) return true;
    }
    return false;
}

bool deviation_dominates(const QuantumGameSpec& spec, int player, const TwoQubitState& n,
                         const TwoQubitState& deviated) {
    for (int t : targets_for(spec, player)) {
        if (!(theta(deviated, t) >= theta(n, t))) return false;
    }
    return true;
}

std::pair<Complex, Complex> row_coefficients(const Unitary4& u, int player, int target,
                                             const QubitState& opponent) {
    if (target < 1 || target > 4) {
        throw std::invalid_argument("row_coefficients: target outside 1..4");
    }
    const auto& row = u.u[target - 1];
    if (player == 1) {
        return {row[0] * opponent.x + row[1] * opponent.y,
                row[2] * opponent.x + row[3] * opponent.y};
    }
    if (player == 2) {
        return {row[0] * opponent.x + row[2] * opponent.y,
                row[1] * opponent.x + row[3] * opponent.y};
    }
    throw std::invalid_argument("player must be 1 or 2");
}

std::vector<CoefficientPair> best_response_coeffs(const QuantumGameSpec& spec, int player,
                                                  const QubitState& opponent) {
    std::vector<CoefficientPair> out;
    out.reserve(targets_for(spec, player).size());
    for (int t : targets_for(spec, player)) {
        auto [c1, c2] = row_coefficients(spec.u, player, t, opponent);
        out.push_back(CoefficientPair{t, c1, c2});
    }
    return out;
}

BestResponse max_deviation_amplitude(Complex c1, Complex c2) {
    const double value = std::sqrt(std::norm(c1) + std::norm(c2));
    if (value == 0.0) {
        return BestResponse{0.0, QubitState{Complex{1.0, 0.0}, Complex{0.0, 0.0}}};
    }
    const QubitState direction{std::conj(c1) / value, std::conj(c2) / value};
    return BestResponse{value, canonical_phase(direction)};
}

NashCertificate verify_nash(const QuantumGameSpec& spec, const Play& play, double epsilon) {
    if (epsilon < 0.0) {
        throw std::invalid_argument("verify_nash: epsilon must be nonnegative");
    }
    NashCertificate cert;
    cert.play = play;
    cert.outcome = outcome(spec, play);
    cert.epsilon = epsilon;
    cert.verdict = true;
    for (int player : {1, 2}) {
        const QubitState& own = (player == 1) ? play.a : play.b;
        const QubitState& opp = (player == 1) ? play.b : play.a;
        for (int t : targets_for(spec, player)) {
            auto [c1, c2] = row_coefficients(spec.u, player, t, opp);
            const double achieved = std::abs(c1 * own.x + c2 * own.y);
            const double best = max_deviation_amplitude(c1, c2).value;
            const double margin = achieved - best;
            if (margin > 1e-12) {
                throw InternalInvariantError(
                    "verify_nash: achieved amplitude exceeds the Cauchy-Schwarz maximum");
            }
            cert.margins.push_back(TargetMargin{player, t, achieved, best, margin});
            if (margin < -epsilon) cert.verdict = false;
        }
    }
    cert.dominant = cert.verdict;
    return cert;
}

}  // namespace qnash
