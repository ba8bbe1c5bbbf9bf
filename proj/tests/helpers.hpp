// Shared fixtures for the test suites: seeded random states independent of
// the library's own sampling, basis-state shorthands, and angular-distance
// helpers.

#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include "qnash/linalg.hpp"

namespace test_helpers {

using qnash::Complex;
using qnash::QubitState;
using qnash::TwoQubitState;

inline TwoQubitState basis_state(int i) {
    TwoQubitState s;
    s.amp[i - 1] = Complex{1.0, 0.0};
    return s;
}

inline QubitState ket0() { return QubitState{{1.0, 0.0}, {0.0, 0.0}}; }
inline QubitState ket1() { return QubitState{{0.0, 0.0}, {1.0, 0.0}}; }

inline double gaussian(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unif(1e-300, 1.0);
    return std::sqrt(-2.0 * std::log(unif(rng))) *
           std::cos(2.0 * std::numbers::pi * unif(rng));
}

inline Complex random_complex(std::mt19937_64& rng) {
    return Complex{gaussian(rng), gaussian(rng)};
}

// Haar-uniform pure qubit state: normalized complex Gaussian pair.
inline QubitState random_state(std::mt19937_64& rng) {
    Complex x = random_complex(rng);
    Complex y = random_complex(rng);
    const double nrm = std::sqrt(std::norm(x) + std::norm(y));
    return QubitState{x / nrm, y / nrm};
}

// Angle between physical states, insensitive to global phase.
inline double fs_angle(const QubitState& a, const QubitState& b) {
    const Complex overlap = std::conj(a.x) * b.x + std::conj(a.y) * b.y;
    return std::acos(std::min(std::abs(overlap), 1.0));
}

inline double inv_sqrt2() { return 1.0 / std::sqrt(2.0); }

}  // namespace test_helpers
