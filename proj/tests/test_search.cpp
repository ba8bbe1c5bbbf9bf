#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "helpers.hpp"
#include "qnash/cli.hpp"
#include "qnash/search.hpp"

using namespace qnash;
using test_helpers::fs_angle;
using test_helpers::ket0;
using test_helpers::ket1;
using test_helpers::random_state;

namespace {

QuantumGameSpec pd(GateName g) { return prisoners_dilemma_game(gate(g)); }

}  // namespace

TEST_CASE("search_nash recovers the identity-gate equilibrium") {
    const SearchReport r = search_nash(pd(GateName::identity), GridSpec{17, 8, 4, 5});
    REQUIRE(!r.candidates.empty());
    const SearchCandidate& top = r.candidates.front();
    CHECK(r.equilibrium_found);
    CHECK(top.is_equilibrium);
    CHECK(top.worst_margin >= -1e-6);
    CHECK(fs_angle(top.play.a, ket1()) <= std::numbers::pi / 16.0);
    CHECK(fs_angle(top.play.b, ket1()) <= std::numbers::pi / 16.0);
    CHECK(r.cells_evaluated >= 17 * 8 * 17 * 8);
}

TEST_CASE("search_nash recovers the CNOT equilibrium") {
    const SearchReport r = search_nash(pd(GateName::cnot), GridSpec{17, 8, 4, 5});
    REQUIRE(!r.candidates.empty());
    const SearchCandidate& top = r.candidates.front();
    CHECK(top.worst_margin >= -1e-6);
    CHECK(fs_angle(top.play.a, ket1()) <= std::numbers::pi / 16.0);
    CHECK(fs_angle(top.play.b, ket0()) <= std::numbers::pi / 16.0);
}

TEST_CASE("search reports are internally consistent") {
    const SearchReport r = search_nash(pd(GateName::cnot), GridSpec{9, 4, 2, 4});
    REQUIRE(r.candidates.size() == 4);
    for (size_t i = 1; i < r.candidates.size(); ++i) {
        CHECK(r.candidates[i - 1].worst_margin >= r.candidates[i].worst_margin);
    }
    for (const SearchCandidate& c : r.candidates) {
        // Certificates are reproducible from their plays.
        const NashCertificate again = verify_nash(pd(GateName::cnot), c.play, r.epsilon);
        REQUIRE(again.margins.size() == c.certificate.margins.size());
        for (size_t i = 0; i < again.margins.size(); ++i) {
            CHECK(again.margins[i].margin == c.certificate.margins[i].margin);
        }
        CHECK(again.verdict == c.certificate.verdict);
        CHECK(c.is_equilibrium == (c.worst_margin >= -r.epsilon));

        // Plays come from the canonical parameterization.
        CHECK(c.play.a.x.imag() == 0.0);
        CHECK(c.play.a.x.real() >= 0.0);
        CHECK(c.play.b.x.imag() == 0.0);
        CHECK(c.play.b.x.real() >= 0.0);
    }
}

TEST_CASE("search twice gives byte-identical reports apart from wall time") {
    const GridSpec grid{9, 4, 0, 1};
    nlohmann::json a = to_json(search_nash(pd(GateName::cz), grid));
    nlohmann::json b = to_json(search_nash(pd(GateName::cz), grid));
    erase_wall_time(a);
    erase_wall_time(b);
    CHECK(a.dump() == b.dump());
}

TEST_CASE("refinement never worsens the top candidate") {
    const QuantumGameSpec spec = prisoners_dilemma_game(random_unitary(5));
    double previous = -2.0;
    for (int depth = 0; depth <= 4; ++depth) {
        const SearchReport r = search_nash(spec, GridSpec{9, 6, depth, 3});
        REQUIRE(!r.candidates.empty());
        CHECK(r.candidates.front().worst_margin >= previous - 1e-15);
        previous = r.candidates.front().worst_margin;
    }
}

TEST_CASE("degenerate grids are rejected") {
    CHECK_THROWS_AS(search_nash(pd(GateName::identity), GridSpec{1, 8, 0, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(search_nash(pd(GateName::identity), GridSpec{9, 0, 0, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(search_nash(pd(GateName::identity), GridSpec{9, 4, -1, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(search_nash(pd(GateName::identity), GridSpec{9, 4, 0, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(minimax_search(gate(GateName::cnot), 4, GridSpec{1, 1, 0, 1}),
                    std::invalid_argument);
}

TEST_CASE("singular values of 2x2 blocks") {
    // CNOT target 4: K = [[0,0],[1,0]] has singular values {1, 0}.
    const SingularValues2 cnot4 = singular_values_2x2(target_submatrix(gate(GateName::cnot), 4));
    CHECK(cnot4.min == 0.0);
    CHECK(cnot4.max == 1.0);

    // Identity target 1: K = [[1,0],[0,0]] is rank one.
    const SingularValues2 id1 = singular_values_2x2(target_submatrix(gate(GateName::identity), 1));
    CHECK(id1.min == 0.0);
    CHECK(id1.max == 1.0);

    CHECK_THROWS_AS(target_submatrix(gate(GateName::identity), 0), std::invalid_argument);

    // Random matrices: the two squared singular values solve the
    // characteristic equation of M^dagger M.
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 500; ++trial) {
        std::array<std::array<Complex, 2>, 2> m;
        double frob = 0.0;
        for (auto& row : m) {
            for (Complex& e : row) {
                e = test_helpers::random_complex(rng);
                frob += std::norm(e);
            }
        }
        const SingularValues2 sv = singular_values_2x2(m);
        CHECK(sv.min >= 0.0);
        CHECK(sv.min <= sv.max);
        const double det2 = std::norm(m[0][0] * m[1][1] - m[0][1] * m[1][0]);
        CHECK(std::abs(sv.min * sv.min + sv.max * sv.max - frob) <= 1e-9 * (1.0 + frob));
        CHECK(std::abs(sv.min * sv.min * sv.max * sv.max - det2) <= 1e-9 * (1.0 + det2));
    }
}

TEST_CASE("minimax value matches the closed form") {
    const MinimaxReport cnot4 = minimax_search(gate(GateName::cnot), 4, GridSpec{64, 64, 3, 1});
    CHECK(cnot4.closed_form_value == 0.0);
    CHECK(cnot4.value <= 0.02);

    const MinimaxReport id1 = minimax_search(gate(GateName::identity), 1, GridSpec{64, 64, 3, 1});
    CHECK(id1.closed_form_value == 0.0);

    const MinimaxReport rnd = minimax_search(random_unitary(7), 2, GridSpec{64, 64, 3, 1});
    CHECK(rnd.value >= 0.0);
    CHECK(rnd.value <= 1.0);
    // The grid minimum can only overshoot the true minimum.
    CHECK(rnd.value >= rnd.closed_form_value - 1e-12);
    CHECK(rnd.value - rnd.closed_form_value <= 0.02);

    // The reported response attains the inner maximum at the minimizer.
    const auto [c1, c2] = row_coefficients(random_unitary(7), 1, 2, rnd.minimizing_strategy);
    const double attained = std::abs(c1 * rnd.maximizing_response.x +
                                     c2 * rnd.maximizing_response.y);
    CHECK(std::abs(attained - rnd.value) <= 1e-12);

    CHECK_THROWS_AS(minimax_search(gate(GateName::cnot), 5, GridSpec{8, 8, 0, 1}),
                    std::invalid_argument);
}

TEST_CASE("maximin appears only behind the flag and is exactly zero") {
    const MinimaxReport without = minimax_search(gate(GateName::swap), 2, GridSpec{16, 16, 1, 1});
    CHECK(!without.maximin.has_value());

    const MinimaxReport with =
        minimax_search(gate(GateName::swap), 2, GridSpec{16, 16, 1, 1}, true);
    REQUIRE(with.maximin.has_value());
    CHECK(with.maximin->value == 0.0);
    const auto [d1, d2] = row_coefficients(gate(GateName::swap), 2, 2, with.maximin->witness_a);
    CHECK(std::abs(d1 * with.maximin->witness_b.x + d2 * with.maximin->witness_b.y) <= 1e-12);
}

TEST_CASE("property: grid best response never beats the analytic maximum") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 20; ++trial) {
        const Unitary4 u = random_unitary(trial + 1);
        const QubitState opp = random_state(rng);
        for (int target = 1; target <= 4; ++target) {
            const auto [c1, c2] = row_coefficients(u, 1, target, opp);
            const double analytic = max_deviation_amplitude(c1, c2).value;
            double best_grid = 0.0;
            for (int ia = 0; ia < 64; ++ia) {
                for (int ip = 0; ip < 64; ++ip) {
                    const QubitState s = from_angles(BlochAngles{
                        std::numbers::pi * ia / 63.0, 2.0 * std::numbers::pi * ip / 64.0});
                    best_grid = std::max(best_grid, std::abs(c1 * s.x + c2 * s.y));
                }
            }
            CHECK(best_grid <= analytic + 1e-12);
            CHECK(analytic - best_grid <= 0.02);
        }
    }
}
