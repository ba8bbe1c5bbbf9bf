// Small dense complex linear algebra for two-qubit games: qubit and
// two-qubit state vectors, tensor products, 4x4 unitaries, a named gate
// library, and seeded random unitary sampling.
//
// Basis convention, used everywhere in this project:
//   b1 = |00>, b2 = |01>, b3 = |10>, b4 = |11>
// Matrices are row-major in this order; row = output index, column = input
// index. Basis indices in public interfaces are 1-based to match that
// numbering.

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>

namespace qnash {

using Complex = std::complex<double>;

// State normalization tolerance.
inline constexpr double kNormTol = 1e-12;
// Entrywise tolerance on U^dagger U - I.
inline constexpr double kUnitaryTol = 1e-10;

// Raised when a value the library itself computed breaks a numerical
// invariant (output norm drift, a margin above the Cauchy-Schwarz bound).
// Distinct from std::invalid_argument, which flags bad caller input.
struct InternalInvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Pure single-qubit strategy x|0> + y|1>. Unit norm within kNormTol.
struct QubitState {
    Complex x{1.0, 0.0};
    Complex y{0.0, 0.0};
};

// Two-qubit state over b1..b4. Unit norm within kNormTol.
struct TwoQubitState {
    std::array<Complex, 4> amp{};

    // 1-based accessor matching the b1..b4 numbering.
    Complex amplitude(int basis_index) const { return amp[basis_index - 1]; }
};

// 4x4 unitary; entry(i, j) is 1-based.
struct Unitary4 {
    std::array<std::array<Complex, 4>, 4> u{};

    Complex entry(int row, int col) const { return u[row - 1][col - 1]; }
};

// Pure-state parameterization up to global phase:
//   x = cos(alpha/2), y = e^{i phi} sin(alpha/2)
// with alpha in [0, pi] and phi in [0, 2*pi).
struct BlochAngles {
    double alpha{0.0};
    double phi{0.0};
};

enum class GateName { identity, cnot, swap, cz };

double norm_squared(const QubitState& s);
double norm_squared(const TwoQubitState& s);
bool is_normalized(const QubitState& s, double tol = kNormTol);
bool is_normalized(const TwoQubitState& s, double tol = kNormTol);

// Largest entrywise |(U^dagger U - I)_{ij}|.
double unitarity_defect(const Unitary4& u);
bool is_unitary(const Unitary4& u, double tol = kUnitaryTol);

// Kronecker product a (x) b. Throws std::invalid_argument if either input
// is not normalized.
TwoQubitState tensor(const QubitState& a, const QubitState& b);

// Matrix-vector product u * s. Validates unitarity of u and the norm of s;
// the output norm is re-checked and drift beyond kNormTol raises
// InternalInvariantError.
TwoQubitState apply(const Unitary4& u, const TwoQubitState& s);

// <p|q>, conjugate-linear in the first argument.
Complex inner(const TwoQubitState& p, const TwoQubitState& q);

Unitary4 gate(GateName name);

// Validating factory for custom gates: entries must be finite and the
// matrix unitary within kUnitaryTol. This is the only route by which
// user-supplied matrices enter the library.
Unitary4 make_unitary(const std::array<std::array<Complex, 4>, 4>& rows);

// Deterministic unitary from a seeded complex Gaussian matrix,
// orthonormalized by modified Gram-Schmidt.
Unitary4 random_unitary(std::uint64_t seed);

// Throws std::invalid_argument if angles are out of range.
QubitState from_angles(const BlochAngles& a);

// Inverse of from_angles up to global phase.
BlochAngles angles_of(const QubitState& s);

// Representative with x real nonnegative (y real nonnegative when x = 0),
// i.e. the image of from_angles for the same physical state.
QubitState canonical_phase(const QubitState& s);

std::optional<GateName> parse_gate_name(std::string_view name);
std::string_view gate_name_string(GateName name);

}  // namespace qnash
