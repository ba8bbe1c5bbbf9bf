#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "helpers.hpp"
#include "qnash/quantum.hpp"

using namespace qnash;
using test_helpers::basis_state;
using test_helpers::inv_sqrt2;
using test_helpers::ket0;
using test_helpers::ket1;
using test_helpers::random_state;

namespace {

QuantumGameSpec pd(GateName g) { return prisoners_dilemma_game(gate(g)); }

const TargetMargin& margin_for(const NashCertificate& cert, int player, int target) {
    for (const TargetMargin& m : cert.margins) {
        if (m.player == player && m.target == target) return m;
    }
    throw std::logic_error("margin not found");
}

}  // namespace

TEST_CASE("make_game validates target sets") {
    CHECK_THROWS_AS(make_game(gate(GateName::identity), {}, {2, 4}), std::invalid_argument);
    CHECK_THROWS_AS(make_game(gate(GateName::identity), {3, 5}, {2, 4}), std::invalid_argument);
    const QuantumGameSpec spec = make_game(gate(GateName::identity), {4, 3, 3}, {2, 4});
    CHECK(spec.targets1 == std::vector<int>{3, 4});

    const QuantumGameSpec preset = pd(GateName::cnot);
    CHECK(preset.targets1 == std::vector<int>{3, 4});
    CHECK(preset.targets2 == std::vector<int>{2, 4});
    CHECK(preset.name == "prisoners_dilemma");
}

TEST_CASE("outcome matches direct expansion") {
    const TwoQubitState n1 = outcome(pd(GateName::identity), Play{ket0(), ket0()});
    for (int i = 0; i < 4; ++i) {
        CHECK(std::abs(n1.amp[i] - basis_state(1).amp[i]) <= 1e-15);
    }

    const TwoQubitState n2 = outcome(pd(GateName::cnot), Play{ket1(), ket0()});
    for (int i = 0; i < 4; ++i) {
        CHECK(std::abs(n2.amp[i] - basis_state(4).amp[i]) <= 1e-15);
    }

    const QubitState plus{{inv_sqrt2(), 0.0}, {inv_sqrt2(), 0.0}};
    const TwoQubitState n3 = outcome(pd(GateName::cnot), Play{plus, ket0()});
    CHECK(std::abs(n3.amp[0] - Complex{inv_sqrt2(), 0.0}) <= 1e-15);
    CHECK(std::abs(n3.amp[1]) <= 1e-15);
    CHECK(std::abs(n3.amp[2]) <= 1e-15);
    CHECK(std::abs(n3.amp[3] - Complex{inv_sqrt2(), 0.0}) <= 1e-15);
}

TEST_CASE("theta spot values") {
    CHECK(theta(basis_state(3), 3) == 0.0);
    CHECK(std::abs(theta(basis_state(3), 1) - std::numbers::pi / 2.0) <= 1e-15);

    const TwoQubitState uniform{{Complex{0.5, 0.0}, Complex{0.5, 0.0}, Complex{0.5, 0.0},
                                 Complex{0.5, 0.0}}};
    for (int i = 1; i <= 4; ++i) {
        CHECK(std::abs(theta(uniform, i) - std::acos(0.25)) <= 1e-15);
    }
    CHECK_THROWS_AS(theta(uniform, 0), std::invalid_argument);
    CHECK_THROWS_AS(theta(uniform, 5), std::invalid_argument);
}

TEST_CASE("theta orders states exactly as amplitude moduli do") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const TwoQubitState p = tensor(random_state(rng), random_state(rng));
        const TwoQubitState q = tensor(random_state(rng), random_state(rng));
        for (int i = 1; i <= 4; ++i) {
            const bool by_theta = theta(p, i) < theta(q, i);
            const bool by_modulus = std::abs(p.amplitude(i)) > std::abs(q.amplitude(i));
            CHECK(by_theta == by_modulus);
        }
    }
}

TEST_CASE("prefers_or is the literal OR-form and is not antisymmetric") {
    const QuantumGameSpec spec = pd(GateName::identity);
    CHECK(prefers_or(spec, 1, basis_state(3), basis_state(1)));
    CHECK(!prefers_or(spec, 1, basis_state(1), basis_state(1)));

    // b3 beats b4 on target 3 while b4 beats b3 on target 4: both directions
    // of the relation hold at once.
    CHECK(prefers_or(spec, 1, basis_state(3), basis_state(4)));
    CHECK(prefers_or(spec, 1, basis_state(4), basis_state(3)));
}

TEST_CASE("deviation_dominates is the AND-form condition") {
    const QuantumGameSpec spec = pd(GateName::identity);

    // Against n = b4, a player-1 deviation survives iff it kills amp3.
    const TwoQubitState n = basis_state(4);
    CHECK(deviation_dominates(spec, 1, n, n));
    CHECK(deviation_dominates(spec, 1, n, basis_state(2)));
    CHECK(!deviation_dominates(spec, 1, n, basis_state(3)));
    const TwoQubitState half{{Complex{0.0, 0.0}, Complex{inv_sqrt2(), 0.0},
                              Complex{inv_sqrt2(), 0.0}, Complex{0.0, 0.0}}};
    CHECK(!deviation_dominates(spec, 1, n, half));

    CHECK(!deviation_dominates(spec, 1, basis_state(1), basis_state(3)));
}

TEST_CASE("best response coefficients factor the outcome rows") {
    const auto cnot_coeffs = best_response_coeffs(pd(GateName::cnot), 1, ket0());
    REQUIRE(cnot_coeffs.size() == 2);
    CHECK(cnot_coeffs[1].target == 4);
    CHECK(std::abs(cnot_coeffs[1].c1) <= 1e-15);
    CHECK(std::abs(cnot_coeffs[1].c2 - Complex{1.0, 0.0}) <= 1e-15);

    const auto id_coeffs = best_response_coeffs(pd(GateName::identity), 1, ket1());
    CHECK(id_coeffs[0].target == 3);
    CHECK(std::abs(id_coeffs[0].c1) <= 1e-15);
    CHECK(std::abs(id_coeffs[0].c2) <= 1e-15);

    const auto p2_coeffs = best_response_coeffs(pd(GateName::identity), 2, ket1());
    CHECK(p2_coeffs[1].target == 4);
    CHECK(std::abs(p2_coeffs[1].c1) <= 1e-15);
    CHECK(std::abs(p2_coeffs[1].c2 - Complex{1.0, 0.0}) <= 1e-15);
}

TEST_CASE("property: the factored form reproduces the outcome amplitude") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        const Unitary4 u = random_unitary(trial + 1000);
        const QuantumGameSpec spec = make_game(u, {1, 2, 3, 4}, {1, 2, 3, 4});
        const Play play{random_state(rng), random_state(rng)};
        const TwoQubitState n = outcome(spec, play);
        for (int t = 1; t <= 4; ++t) {
            const auto [c1, c2] = row_coefficients(u, 1, t, play.b);
            CHECK(std::abs(c1 * play.a.x + c2 * play.a.y - n.amplitude(t)) <= 1e-12);
            const auto [d1, d2] = row_coefficients(u, 2, t, play.a);
            CHECK(std::abs(d1 * play.b.x + d2 * play.b.y - n.amplitude(t)) <= 1e-12);
        }
    }
}

TEST_CASE("max_deviation_amplitude gives the exact Cauchy-Schwarz maximum") {
    const BestResponse unit = max_deviation_amplitude(Complex{0.0, 0.0}, Complex{1.0, 0.0});
    CHECK(unit.value == 1.0);
    CHECK(std::abs(unit.strategy.x) <= 1e-15);
    CHECK(std::abs(unit.strategy.y - Complex{1.0, 0.0}) <= 1e-15);

    CHECK(max_deviation_amplitude(Complex{0.0, 0.0}, Complex{0.0, 0.0}).value == 0.0);

    const Complex c1{0.6, 0.0};
    const Complex c2{0.0, 0.8};
    const BestResponse br = max_deviation_amplitude(c1, c2);
    CHECK(std::abs(br.value - 1.0) <= 1e-15);
    CHECK(std::abs(br.strategy.x - Complex{0.6, 0.0}) <= 1e-12);
    CHECK(std::abs(br.strategy.y - Complex{0.0, -0.8}) <= 1e-12);

    // Dense angular scan: no strategy beats the stated maximum, and the
    // returned strategy attains it.
    double best_seen = 0.0;
    for (int ia = 0; ia <= 64; ++ia) {
        for (int ip = 0; ip < 64; ++ip) {
            const QubitState s = from_angles(BlochAngles{
                std::numbers::pi * ia / 64.0, 2.0 * std::numbers::pi * ip / 64.0});
            best_seen = std::max(best_seen, std::abs(c1 * s.x + c2 * s.y));
        }
    }
    CHECK(best_seen <= br.value + 1e-12);
    CHECK(std::abs(c1 * br.strategy.x + c2 * br.strategy.y) >= br.value - 1e-12);
}

TEST_CASE("verify_nash certifies the derived equilibria and rejects the rest") {
    const NashCertificate cnot_cert =
        verify_nash(pd(GateName::cnot), Play{ket1(), ket0()}, 1e-9);
    CHECK(cnot_cert.verdict);
    CHECK(cnot_cert.dominant);
    REQUIRE(cnot_cert.margins.size() == 4);
    CHECK(margin_for(cnot_cert, 1, 3).achieved == 0.0);
    CHECK(margin_for(cnot_cert, 1, 3).best_response_max == 0.0);
    CHECK(margin_for(cnot_cert, 1, 4).achieved == 1.0);
    CHECK(margin_for(cnot_cert, 1, 4).best_response_max == 1.0);
    CHECK(margin_for(cnot_cert, 2, 2).margin == 0.0);
    CHECK(margin_for(cnot_cert, 2, 4).margin == 0.0);

    const NashCertificate id_cert =
        verify_nash(pd(GateName::identity), Play{ket1(), ket1()}, 1e-9);
    CHECK(id_cert.verdict);
    for (const TargetMargin& m : id_cert.margins) {
        CHECK(std::abs(m.margin) <= 1e-12);
    }

    const NashCertificate reject =
        verify_nash(pd(GateName::identity), Play{ket0(), ket0()}, 1e-9);
    CHECK(!reject.verdict);
    CHECK(!reject.dominant);
    // The play loses target 3 outright: nothing achieved against a
    // unit-high best response.
    CHECK(margin_for(reject, 1, 3).achieved == 0.0);
    CHECK(margin_for(reject, 1, 3).best_response_max == 1.0);

    CHECK_THROWS_AS(verify_nash(pd(GateName::identity), Play{ket0(), ket0()}, -1.0),
                    std::invalid_argument);
}

TEST_CASE("property: margins never exceed the Cauchy-Schwarz bound") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 500; ++trial) {
        const QuantumGameSpec spec = prisoners_dilemma_game(random_unitary(trial + 1));
        const Play play{random_state(rng), random_state(rng)};
        const NashCertificate cert = verify_nash(spec, play, 1e-9);
        for (const TargetMargin& m : cert.margins) {
            CHECK(m.margin <= 1e-12);
            CHECK(m.achieved >= 0.0);
            CHECK(m.best_response_max >= 0.0);
        }
    }
}

TEST_CASE("property: margins are invariant under global strategy phases") {
    std::mt19937_64 rng(123);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    for (int trial = 0; trial < 200; ++trial) {
        const QuantumGameSpec spec = prisoners_dilemma_game(random_unitary(trial + 500));
        const Play play{random_state(rng), random_state(rng)};
        const Complex ga = std::polar(1.0, angle(rng));
        const Complex gb = std::polar(1.0, angle(rng));
        const Play rotated{QubitState{play.a.x * ga, play.a.y * ga},
                           QubitState{play.b.x * gb, play.b.y * gb}};
        const NashCertificate base = verify_nash(spec, play, 1e-9);
        const NashCertificate rot = verify_nash(spec, rotated, 1e-9);
        for (size_t i = 0; i < base.margins.size(); ++i) {
            CHECK(std::abs(base.margins[i].margin - rot.margins[i].margin) <= 1e-12);
        }
        CHECK(base.verdict == rot.verdict);
    }
}

TEST_CASE("the analytic verdict agrees with the AND-form over a deviation grid") {
    const QuantumGameSpec spec = pd(GateName::identity);
    const Play star{ket1(), ket1()};
    const TwoQubitState n = outcome(spec, star);
    REQUIRE(verify_nash(spec, star, 0.0).verdict);

    for (int ia = 0; ia <= 24; ++ia) {
        for (int ip = 0; ip < 12; ++ip) {
            const QubitState dev = from_angles(BlochAngles{
                std::numbers::pi * ia / 24.0, 2.0 * std::numbers::pi * ip / 12.0});
            CHECK(deviation_dominates(spec, 1, n, outcome(spec, Play{dev, star.b})));
            CHECK(deviation_dominates(spec, 2, n, outcome(spec, Play{star.a, dev})));
        }
    }

    // A rejected play admits a strictly improving deviation.
    const Play rejected{ket0(), ket0()};
    REQUIRE(!verify_nash(spec, rejected, 0.0).verdict);
    const TwoQubitState m = outcome(spec, rejected);
    CHECK(!deviation_dominates(spec, 1, m, outcome(spec, Play{ket1(), rejected.b})));
}
