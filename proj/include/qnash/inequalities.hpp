// Coefficient sets and deviation-inequality machinery for a starred play:
// the raw per-row modulus inequalities, their compact triangle bounds, and
// the eight-case classification over a pair of plays.

#pragma once

#include <array>

#include "qnash/linalg.hpp"
#include "qnash/quantum.hpp"

namespace qnash {

// Comparison slack for reporting: inequalities are evaluated with 1e-12
// slack so that exact-equality cases survive floating-point noise, and the
// le/ge pair of a case both hold within that slack of equality.
inline constexpr double kIneqTol = 1e-12;

// The published coefficient display defines S' and T' with identical
// right-hand sides; `corrected` derives S' from the player-II factoring of
// the fourth amplitude instead (the same derivation that produces S and T),
// `paper_literal` keeps the duplicate.
enum class Convention { corrected, paper_literal };

// Moduli of the factored row combinations of u at the starred play:
//   P  = |U31 x2* + U32 y2*|   Q  = |U33 x2* + U34 y2*|
//   P' = |U41 x2* + U42 y2*|   Q' = |U43 x2* + U44 y2*|
//   S  = |U21 x1* + U23 y1*|   T  = |U22 x1* + U24 y1*|
//   S' = |U41 x1* + U43 y1*|   T' = |U42 x1* + U44 y1*|   (corrected)
//   S' = T' = |U42 x1* + U44 y1*|                         (paper_literal)
struct CoefficientSet {
    double P, Q, Pp, Qp;
    double S, T, Sp, Tp;
    Convention convention;
};

CoefficientSet coefficients(const Unitary4& u, const Play& star,
                            Convention convention = Convention::corrected);

struct InequalityRecord {
    double lhs;
    double rhs;
    bool holds;
};

// The two raw modulus inequalities for one player's unilateral deviation:
// rows 3 and 4 for player 1, rows 2 and 4 for player 2. LHS is evaluated
// at the deviated play, RHS at the starred play; holds means lhs <= rhs
// within kIneqTol.
struct DeviationInequalities {
    InequalityRecord first;   // row 3 (player 1) / row 2 (player 2)
    InequalityRecord second;  // row 4
};

DeviationInequalities raw_deviation_inequalities(const Unitary4& u, const Play& star,
                                                 const QubitState& deviation, int player);

// Compact triangle bounds on the deviated rows: the deviated LHS against
// P|x1*| + Q|y1*| (and primed / S,T analogues).
struct TriangleBoundRecord {
    double lhs;
    double bound;
    bool holds;
};

struct TriangleBounds {
    TriangleBoundRecord first;
    TriangleBoundRecord second;
};

TriangleBounds triangle_bounds(const Unitary4& u, const Play& star,
                               const QubitState& deviation, int player,
                               Convention convention = Convention::corrected);

// The eight case inequalities over (star, alt): four complementary <= / >=
// pairs of weighted coordinate sums, one pair per coefficient family
// (P,Q), (P',Q'), (S,T), (S',T'). Indices 0..7 correspond to the pairs
//   0: P-sum(alt)  <= P-sum(star)     1: P-sum(alt)  >= P-sum(star)
//   2: P'-sum(alt) <= P'-sum(star)    3: P'-sum(alt) >= P'-sum(star)
//   4: S-sum(alt)  <= S-sum(star)     5: S-sum(alt)  >= S-sum(star)
//   6: S'-sum(alt) <= S'-sum(star)    7: S'-sum(alt) >= S'-sum(star)
// (serialized as "case18".."case25"). At least one of each pair holds;
// both hold within kIneqTol of equality.
struct CaseReport {
    CoefficientSet coeffs;
    std::array<InequalityRecord, 8> cases;
    DeviationInequalities player1_raw;  // ineq1, ineq2 with alt.a as deviation
    DeviationInequalities player2_raw;  // ineq3, ineq4 with alt.b as deviation
};

CaseReport classify_cases(const Unitary4& u, const Play& star, const Play& alt,
                          Convention convention = Convention::corrected);

}  // namespace qnash
