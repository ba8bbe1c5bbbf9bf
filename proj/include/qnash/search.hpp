// Candidate-equilibrium search by deterministic grid scan with local
// step-halving refinement over Bloch-parameterized strategies, and the
// strictly-competitive mini-max value of a target amplitude.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qnash/quantum.hpp"

namespace qnash {

struct GridSpec {
    int n_alpha = 17;      // points on each alpha axis, both endpoints included
    int n_phi = 8;         // points on each phi axis, 2*pi seam excluded
    int refine_depth = 4;  // step-halving rounds around each kept candidate
    int top_k = 5;         // candidates kept and refined
};

struct SearchCandidate {
    std::array<int, 4> grid_index;  // (i_alpha1, i_phi1, i_alpha2, i_phi2)
    Play play;                      // refined; may sit off the original grid
    double worst_margin;            // min over all certified target margins
    bool is_equilibrium;            // worst_margin >= -epsilon
    NashCertificate certificate;
};

struct SearchReport {
    GridSpec grid;
    double epsilon;
    // Sorted by descending worst margin, ties by lexicographic grid index.
    std::vector<SearchCandidate> candidates;
    bool equilibrium_found;
    std::string message;  // set when nothing certifies at this resolution
    std::int64_t cells_evaluated;
    double wall_time_ms;  // informational; excluded from determinism guarantees
};

// Evaluates verify_nash margins on every grid play, keeps the top_k by
// worst margin, and refines each by halving the angular step refine_depth
// times. Fully deterministic for a fixed spec and grid.
SearchReport search_nash(const QuantumGameSpec& spec, const GridSpec& grid,
                         double epsilon = kSearchEpsilon);

// 2x2 block of u whose bilinear form gives the target amplitude:
//   amp_target = (x1, y1) K (x2, y2)^T,  K = [[U_t1, U_t2], [U_t3, U_t4]].
std::array<std::array<Complex, 2>, 2> target_submatrix(const Unitary4& u, int target);

struct SingularValues2 {
    double min;
    double max;
};

// Closed-form singular values of a complex 2x2 matrix.
SingularValues2 singular_values_2x2(const std::array<std::array<Complex, 2>, 2>& m);

// Present only when requested: the max-over-A of min-over-B value, which
// is identically zero because the responder can always steer a rank-one
// linear form to zero on the two-dimensional unit sphere.
struct MaximinNote {
    double value;
    QubitState witness_a;
    QubitState witness_b;  // zeroing response against witness_a
    std::string note;
};

struct MinimaxReport {
    int target;
    double value;                   // grid-with-refinement min over B of exact max over A
    double closed_form_value;       // smallest singular value of the target submatrix
    QubitState minimizing_strategy; // B achieving `value`
    QubitState maximizing_response; // exact best A against it
    std::optional<MaximinNote> maximin;
};

// value = min over the B grid (with refinement) of the exact best-response
// maximum of |amp_target|; the closed form is sigma_min of the target
// submatrix.
MinimaxReport minimax_search(const Unitary4& u, int target, const GridSpec& grid,
                             bool include_maximin = false);

}  // namespace qnash
