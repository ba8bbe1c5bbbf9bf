#include "qnash/inequalities.hpp"

#include <cmath>
#include <stdexcept>

namespace qnash {

namespace {

double row_amplitude(const Unitary4& u, int row, const QubitState& a, const QubitState& b) {
    const auto& r = u.u[row - 1];
    return std::abs(r[0] * a.x * b.x + r[1] * a.x * b.y + r[2] * a.y * b.x + r[3] * a.y * b.y);
}

InequalityRecord le_record(double lhs, double rhs) {
    return InequalityRecord{lhs, rhs, lhs <= rhs + kIneqTol};
}

InequalityRecord ge_record(double lhs, double rhs) {
    return InequalityRecord{lhs, rhs, lhs >= rhs - kIneqTol};
}

}  // namespace

CoefficientSet coefficients(const Unitary4& u, const Play& star, Convention convention) {
    const QubitState& a = star.a;
    const QubitState& b = star.b;
    CoefficientSet c{};
    const auto [p, q] = row_coefficients(u, 1, 3, b);
    const auto [pp, qp] = row_coefficients(u, 1, 4, b);
    const auto [s2, t2] = row_coefficients(u, 2, 2, a);
    const auto [s4, t4] = row_coefficients(u, 2, 4, a);
    c.P = std::abs(p);
    c.Q = std::abs(q);
    c.Pp = std::abs(pp);
    c.Qp = std::abs(qp);
    c.S = std::abs(s2);
    c.T = std::abs(t2);
    if (convention == Convention::corrected) {
        c.Sp = std::abs(s4);
        c.Tp = std::abs(t4);
    } else {
        c.Sp = std::abs(t4);
        c.Tp = std::abs(t4);
    }
    c.convention = convention;
    return c;
}

DeviationInequalities raw_deviation_inequalities(const Unitary4& u, const Play& star,
                                                 const QubitState& deviation, int player) {
    if (player == 1) {
        return DeviationInequalities{
            le_record(row_amplitude(u, 3, deviation, star.b), row_amplitude(u, 3, star.a, star.b)),
            le_record(row_amplitude(u, 4, deviation, star.b), row_amplitude(u, 4, star.a, star.b))};
    }
    if (player == 2) {
        return DeviationInequalities{
            le_record(row_amplitude(u, 2, star.a, deviation), row_amplitude(u, 2, star.a, star.b)),
            le_record(row_amplitude(u, 4, star.a, deviation), row_amplitude(u, 4, star.a, star.b))};
    }
    throw std::invalid_argument("player must be 1 or 2");
}

TriangleBounds triangle_bounds(const Unitary4& u, const Play& star,
                               const QubitState& deviation, int player,
                               Convention convention) {
    const CoefficientSet c = coefficients(u, star, convention);
    if (player == 1) {
        const double ax = std::abs(star.a.x);
        const double ay = std::abs(star.a.y);
        const double lhs3 = row_amplitude(u, 3, deviation, star.b);
        const double lhs4 = row_amplitude(u, 4, deviation, star.b);
        return TriangleBounds{
            TriangleBoundRecord{lhs3, c.P * ax + c.Q * ay, lhs3 <= c.P * ax + c.Q * ay + kIneqTol},
            TriangleBoundRecord{lhs4, c.Pp * ax + c.Qp * ay,
                                lhs4 <= c.Pp * ax + c.Qp * ay + kIneqTol}};
    }
    if (player == 2) {
        const double bx = std::abs(star.b.x);
        const double by = std::abs(star.b.y);
        const double lhs2 = row_amplitude(u, 2, star.a, deviation);
        const double lhs4 = row_amplitude(u, 4, star.a, deviation);
        return TriangleBounds{
            TriangleBoundRecord{lhs2, c.S * bx + c.T * by, lhs2 <= c.S * bx + c.T * by + kIneqTol},
            TriangleBoundRecord{lhs4, c.Sp * bx + c.Tp * by,
                                lhs4 <= c.Sp * bx + c.Tp * by + kIneqTol}};
    }
    throw std::invalid_argument("player must be 1 or 2");
}

CaseReport classify_cases(const Unitary4& u, const Play& star, const Play& alt,
                          Convention convention) {
    CaseReport report;
    report.coeffs = coefficients(u, star, convention);
    const CoefficientSet& c = report.coeffs;

    const double ax = std::abs(alt.a.x), ay = std::abs(alt.a.y);
    const double sx = std::abs(star.a.x), sy = std::abs(star.a.y);
    const double bx = std::abs(alt.b.x), by = std::abs(alt.b.y);
    const double tx = std::abs(star.b.x), ty = std::abs(star.b.y);

    const double p_alt = c.P * ax + c.Q * ay, p_star = c.P * sx + c.Q * sy;
    const double pp_alt = c.Pp * ax + c.Qp * ay, pp_star = c.Pp * sx + c.Qp * sy;
    const double s_alt = c.S * bx + c.T * by, s_star = c.S * tx + c.T * ty;
    const double sp_alt = c.Sp * bx + c.Tp * by, sp_star = c.Sp * tx + c.Tp * ty;

    report.cases = {le_record(p_alt, p_star),   ge_record(p_alt, p_star),
                    le_record(pp_alt, pp_star), ge_record(pp_alt, pp_star),
                    le_record(s_alt, s_star),   ge_record(s_alt, s_star),
                    le_record(sp_alt, sp_star), ge_record(sp_alt, sp_star)};

    report.player1_raw = raw_deviation_inequalities(u, star, alt.a, 1);
    report.player2_raw = raw_deviation_inequalities(u, star, alt.b, 2);
    return report;
}

}  // namespace qnash
