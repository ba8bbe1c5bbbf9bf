#include "qnash/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace qnash {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void validate_grid(const GridSpec& grid) {
    if (grid.n_alpha < 2) throw std::invalid_argument("grid: n_alpha must be >= 2");
    if (grid.n_phi < 1) throw std::invalid_argument("grid: n_phi must be >= 1");
    if (grid.refine_depth < 0) throw std::invalid_argument("grid: refine_depth must be >= 0");
    if (grid.top_k < 1) throw std::invalid_argument("grid: top_k must be >= 1");
}

double wrap_phi(double phi) {
    double w = std::fmod(phi, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    if (w >= kTwoPi) w = 0.0;
    return w;
}

double clamp_alpha(double alpha) {
    return std::clamp(alpha, 0.0, std::numbers::pi);
}

struct PlayAngles {
    double a1, p1, a2, p2;

    Play to_play() const {
        return Play{from_angles(BlochAngles{a1, p1}), from_angles(BlochAngles{a2, p2})};
    }
};

double worst_margin_of(const NashCertificate& cert) {
    double worst = std::numeric_limits<double>::infinity();
    for (const TargetMargin& m : cert.margins) {
        worst = std::min(worst, m.margin);
    }
    return worst;
}

// One step-halving pattern-search pass around `point`; returns the best
// point found (the input when nothing strictly improves) and accumulates
// evaluation counts. Enumeration order of the 3^4 neighborhood is fixed,
// so ties resolve deterministically to the earliest improvement.
PlayAngles refine_candidate(const QuantumGameSpec& spec, PlayAngles point, double& worst,
                            double step_alpha, double step_phi, int rounds,
                            std::int64_t& evals) {
    for (int round = 0; round < rounds; ++round) {
        step_alpha /= 2.0;
        step_phi /= 2.0;
        PlayAngles best = point;
        double best_worst = worst;
        for (int da1 = -1; da1 <= 1; ++da1)
        for (int dp1 = -1; dp1 <= 1; ++dp1)
        for (int da2 = -1; da2 <= 1; ++da2)
        for (int dp2 = -1; dp2 <= 1; ++dp2) {
            if (da1 == 0 && dp1 == 0 && da2 == 0 && dp2 == 0) continue;
            PlayAngles cand{clamp_alpha(point.a1 + da1 * step_alpha),
                            wrap_phi(point.p1 + dp1 * step_phi),
                            clamp_alpha(point.a2 + da2 * step_alpha),
                            wrap_phi(point.p2 + dp2 * step_phi)};
            const double w = worst_margin_of(verify_nash(spec, cand.to_play(), 0.0));
            ++evals;
            if (w > best_worst) {
                best_worst = w;
                best = cand;
            }
        }
        point = best;
        worst = best_worst;
    }
    return point;
}

}  // namespace

SearchReport search_nash(const QuantumGameSpec& spec, const GridSpec& grid, double epsilon) {
    validate_grid(grid);
    if (epsilon < 0.0) throw std::invalid_argument("search_nash: epsilon must be nonnegative");
    const auto start = std::chrono::steady_clock::now();

    const double step_alpha = std::numbers::pi / (grid.n_alpha - 1);
    const double step_phi = kTwoPi / grid.n_phi;

    struct Entry {
        std::array<int, 4> index;
        PlayAngles angles;
        double worst;
    };
    // Kept sorted by descending worst margin, then ascending grid index.
    std::vector<Entry> top;
    top.reserve(grid.top_k + 1);
    const auto before = [](const Entry& a, const Entry& b) {
        if (a.worst != b.worst) return a.worst > b.worst;
        return a.index < b.index;
    };

    std::int64_t evals = 0;
    for (int ia1 = 0; ia1 < grid.n_alpha; ++ia1)
    for (int ip1 = 0; ip1 < grid.n_phi; ++ip1)
    for (int ia2 = 0; ia2 < grid.n_alpha; ++ia2)
    for (int ip2 = 0; ip2 < grid.n_phi; ++ip2) {
        const PlayAngles angles{ia1 * step_alpha, ip1 * step_phi, ia2 * step_alpha,
                                ip2 * step_phi};
        const double worst = worst_margin_of(verify_nash(spec, angles.to_play(), 0.0));
        ++evals;
        const Entry entry{{ia1, ip1, ia2, ip2}, angles, worst};
        if (static_cast<int>(top.size()) < grid.top_k || before(entry, top.back())) {
            top.insert(std::upper_bound(top.begin(), top.end(), entry, before), entry);
            if (static_cast<int>(top.size()) > grid.top_k) top.pop_back();
        }
    }

    SearchReport report;
    report.grid = grid;
    report.epsilon = epsilon;
    report.candidates.reserve(top.size());
    for (Entry& e : top) {
        e.angles = refine_candidate(spec, e.angles, e.worst, step_alpha, step_phi,
                                    grid.refine_depth, evals);
        SearchCandidate cand;
        cand.grid_index = e.index;
        cand.play = e.angles.to_play();
        cand.certificate = verify_nash(spec, cand.play, epsilon);
        cand.worst_margin = worst_margin_of(cand.certificate);
        cand.is_equilibrium = cand.worst_margin >= -epsilon;
        report.candidates.push_back(std::move(cand));
    }
    std::sort(report.candidates.begin(), report.candidates.end(),
              [](const SearchCandidate& a, const SearchCandidate& b) {
                  if (a.worst_margin != b.worst_margin) return a.worst_margin > b.worst_margin;
                  return a.grid_index < b.grid_index;
              });

    report.equilibrium_found = !report.candidates.empty() && report.candidates.front().is_equilibrium;
    if (!report.equilibrium_found) {
        report.message = "no equilibrium found at this resolution; nearest candidates listed";
    }
    report.cells_evaluated = evals;
    report.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

std::array<std::array<Complex, 2>, 2> target_submatrix(const Unitary4& u, int target) {
    if (target < 1 || target > 4) {
        throw std::invalid_argument("target_submatrix: target outside 1..4");
    }
    const auto& row = u.u[target - 1];
    return {{{row[0], row[1]}, {row[2], row[3]}}};
}

SingularValues2 singular_values_2x2(const std::array<std::array<Complex, 2>, 2>& m) {
    double trace = 0.0;  // of M^dagger M, i.e. the squared Frobenius norm
    for (const auto& row : m) {
        for (const Complex& e : row) trace += std::norm(e);
    }
    const double det2 = std::norm(m[0][0] * m[1][1] - m[0][1] * m[1][0]);
    const double disc = std::max(trace * trace - 4.0 * det2, 0.0);
    const double root = std::sqrt(disc);
    const double big = (trace + root) / 2.0;
    // Stable small root: sigma_min^2 = det2 / sigma_max^2 avoids the
    // cancellation in (trace - root) / 2.
    const double small = big > 0.0 ? det2 / big : 0.0;
    return SingularValues2{std::sqrt(small), std::sqrt(big)};
}

MinimaxReport minimax_search(const Unitary4& u, int target, const GridSpec& grid,
                             bool include_maximin) {
    validate_grid(grid);
    if (!is_unitary(u)) throw std::invalid_argument("minimax_search: matrix is not unitary");
    if (target < 1 || target > 4) {
        throw std::invalid_argument("minimax_search: target outside 1..4");
    }

    const auto response_max = [&](const QubitState& b) {
        const auto [c1, c2] = row_coefficients(u, 1, target, b);
        return std::sqrt(std::norm(c1) + std::norm(c2));
    };

    const double step_alpha = std::numbers::pi / (grid.n_alpha - 1);
    const double step_phi = kTwoPi / grid.n_phi;

    double best_value = std::numeric_limits<double>::infinity();
    BlochAngles best{0.0, 0.0};
    for (int ia = 0; ia < grid.n_alpha; ++ia) {
        for (int ip = 0; ip < grid.n_phi; ++ip) {
            const BlochAngles angles{ia * step_alpha, ip * step_phi};
            const double v = response_max(from_angles(angles));
            if (v < best_value) {
                best_value = v;
                best = angles;
            }
        }
    }

    double ha = step_alpha;
    double hp = step_phi;
    for (int round = 0; round < grid.refine_depth; ++round) {
        ha /= 2.0;
        hp /= 2.0;
        BlochAngles local = best;
        double local_value = best_value;
        for (int da = -1; da <= 1; ++da) {
            for (int dp = -1; dp <= 1; ++dp) {
                if (da == 0 && dp == 0) continue;
                const BlochAngles cand{clamp_alpha(best.alpha + da * ha),
                                       wrap_phi(best.phi + dp * hp)};
                const double v = response_max(from_angles(cand));
                if (v < local_value) {
                    local_value = v;
                    local = cand;
                }
            }
        }
        best = local;
        best_value = local_value;
    }

    MinimaxReport report;
    report.target = target;
    report.value = best_value;
    report.closed_form_value = singular_values_2x2(target_submatrix(u, target)).min;
    report.minimizing_strategy = from_angles(best);
    const auto [c1, c2] = row_coefficients(u, 1, target, report.minimizing_strategy);
    report.maximizing_response = max_deviation_amplitude(c1, c2).strategy;

    if (include_maximin) {
        MaximinNote note;
        note.value = 0.0;
        note.witness_a = QubitState{Complex{1.0, 0.0}, Complex{0.0, 0.0}};
        const auto [d1, d2] = row_coefficients(u, 2, target, note.witness_a);
        const double nrm = std::sqrt(std::norm(d1) + std::norm(d2));
        if (nrm > 0.0) {
            note.witness_b = canonical_phase(QubitState{-d2 / nrm, d1 / nrm});
        } else {
            note.witness_b = QubitState{Complex{1.0, 0.0}, Complex{0.0, 0.0}};
        }
        const double residual =
            std::abs(d1 * note.witness_b.x + d2 * note.witness_b.y);
        if (residual > 1e-12) {
            throw InternalInvariantError("minimax_search: maximin witness failed to zero the form");
        }
        note.note = "the responder's minimum of a linear form over the two-dimensional "
                    "unit sphere is identically zero, so max-over-A of min-over-B is 0";
        report.maximin = note;
    }
    return report;
}

}  // namespace qnash
