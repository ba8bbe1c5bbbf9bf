#include "qnash/linalg.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace qnash {

namespace {

bool finite(Complex c) {
    return std::isfinite(c.real()) && std::isfinite(c.imag());
}

void require_normalized(const QubitState& s, const char* what) {
    if (!finite(s.x) || !finite(s.y)) {
        throw std::invalid_argument(std::string(what) + ": non-finite amplitude");
    }
    if (!is_normalized(s)) {
        throw std::invalid_argument(std::string(what) + ": strategy not normalized (|x|^2+|y|^2 = " +
                                    std::to_string(norm_squared(s)) + ")");
    }
}

void require_normalized(const TwoQubitState& s, const char* what) {
    for (const Complex& a : s.amp) {
        if (!finite(a)) {
            throw std::invalid_argument(std::string(what) + ": non-finite amplitude");
        }
    }
    if (!is_normalized(s)) {
        throw std::invalid_argument(std::string(what) + ": state not normalized (sum |amp|^2 = " +
                                    std::to_string(norm_squared(s)) + ")");
    }
}

// [0, 1) doubles straight off the generator, independent of libstdc++'s
// distribution implementations.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double gaussian(std::mt19937_64& rng) {
    // Box-Muller; u1 shifted away from 0 so the log is finite.
    double u1 = uniform01(rng);
    double u2 = uniform01(rng);
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace

double norm_squared(const QubitState& s) {
    return std::norm(s.x) + std::norm(s.y);
}

double norm_squared(const TwoQubitState& s) {
    double total = 0.0;
    for (const Complex& a : s.amp) total += std::norm(a);
    return total;
}

bool is_normalized(const QubitState& s, double tol) {
    return std::abs(norm_squared(s) - 1.0) <= tol;
}

bool is_normalized(const TwoQubitState& s, double tol) {
    return std::abs(norm_squared(s) - 1.0) <= tol;
}

double unitarity_defect(const Unitary4& u) {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            Complex dot{0.0, 0.0};
            for (int k = 0; k < 4; ++k) {
                dot += std::conj(u.u[k][i]) * u.u[k][j];
            }
            if (i == j) dot -= 1.0;
            worst = std::max(worst, std::abs(dot));
        }
    }
    return worst;
}

bool is_unitary(const Unitary4& u, double tol) {
    for (const auto& row : u.u) {
        for (const Complex& e : row) {
            if (!finite(e)) return false;
        }
    }
    return unitarity_defect(u) <= tol;
}

TwoQubitState tensor(const QubitState& a, const QubitState& b) {
    require_normalized(a, "tensor: first factor");
    require_normalized(b, "tensor: second factor");
    return TwoQubitState{{a.x * b.x, a.x * b.y, a.y * b.x, a.y * b.y}};
}

TwoQubitState apply(const Unitary4& u, const TwoQubitState& s) {
    if (!is_unitary(u)) {
        throw std::invalid_argument("apply: matrix is not unitary (defect " +
                                    std::to_string(unitarity_defect(u)) + ")");
    }
    require_normalized(s, "apply: input state");
    TwoQubitState out;
    for (int i = 0; i < 4; ++i) {
        Complex acc{0.0, 0.0};
        for (int j = 0; j < 4; ++j) {
            acc += u.u[i][j] * s.amp[j];
        }
        out.amp[i] = acc;
    }
    if (!is_normalized(out)) {
        throw InternalInvariantError("apply: output norm drifted beyond tolerance");
    }
    return out;
}

Complex inner(const TwoQubitState& p, const TwoQubitState& q) {
    Complex acc{0.0, 0.0};
    for (int i = 0; i < 4; ++i) {
        acc += std::conj(p.amp[i]) * q.amp[i];
    }
    return acc;
}

Unitary4 gate(GateName name) {
    const Complex o{0.0, 0.0};
    const Complex l{1.0, 0.0};
    switch (name) {
        case GateName::identity:
            return Unitary4{{{{l, o, o, o}, {o, l, o, o}, {o, o, l, o}, {o, o, o, l}}}};
        case GateName::cnot:
            // Control on the first qubit: |10> <-> |11>.
            return Unitary4{{{{l, o, o, o}, {o, l, o, o}, {o, o, o, l}, {o, o, l, o}}}};
        case GateName::swap:
            return Unitary4{{{{l, o, o, o}, {o, o, l, o}, {o, l, o, o}, {o, o, o, l}}}};
        case GateName::cz:
            return Unitary4{{{{l, o, o, o}, {o, l, o, o}, {o, o, l, o}, {o, o, o, -l}}}};
    }
    throw std::invalid_argument("gate: unknown gate name");
}

Unitary4 make_unitary(const std::array<std::array<Complex, 4>, 4>& rows) {
    Unitary4 u{rows};
    for (const auto& row : u.u) {
        for (const Complex& e : row) {
            if (!finite(e)) {
                throw std::invalid_argument("make_unitary: non-finite matrix entry");
            }
        }
    }
    const double defect = unitarity_defect(u);
    if (defect > kUnitaryTol) {
        throw std::invalid_argument("make_unitary: matrix is not unitary (entrywise defect " +
                                    std::to_string(defect) + " > 1e-10)");
    }
    return u;
}

Unitary4 random_unitary(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::array<std::array<Complex, 4>, 4> cols{};
    for (auto& col : cols) {
        for (Complex& e : col) {
            e = Complex{gaussian(rng), gaussian(rng)};
        }
    }
    // Modified Gram-Schmidt on columns, run twice for orthogonality well
    // below kUnitaryTol.
    for (int pass = 0; pass < 2; ++pass) {
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < i; ++j) {
                Complex proj{0.0, 0.0};
                for (int k = 0; k < 4; ++k) proj += std::conj(cols[j][k]) * cols[i][k];
                for (int k = 0; k < 4; ++k) cols[i][k] -= proj * cols[j][k];
            }
            double nrm = 0.0;
            for (int k = 0; k < 4; ++k) nrm += std::norm(cols[i][k]);
            nrm = std::sqrt(nrm);
            if (nrm < 1e-8) {
                // A seeded Gaussian matrix is singular with probability zero;
                // fall back to a basis column to keep the factory total.
                for (int k = 0; k < 4; ++k) cols[i][k] = (k == i) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
                nrm = 1.0;
            }
            for (int k = 0; k < 4; ++k) cols[i][k] /= nrm;
        }
    }
    Unitary4 u;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            u.u[r][c] = cols[c][r];
        }
    }
    return u;
}

QubitState from_angles(const BlochAngles& a) {
    if (!(a.alpha >= 0.0 && a.alpha <= std::numbers::pi)) {
        throw std::invalid_argument("from_angles: alpha out of [0, pi]");
    }
    if (!(a.phi >= 0.0 && a.phi < 2.0 * std::numbers::pi)) {
        throw std::invalid_argument("from_angles: phi out of [0, 2*pi)");
    }
    const double half = a.alpha / 2.0;
    return QubitState{Complex{std::cos(half), 0.0},
                      std::polar(std::sin(half), a.phi)};
}

BlochAngles angles_of(const QubitState& s) {
    require_normalized(s, "angles_of: input");
    const double ax = std::abs(s.x);
    const double ay = std::abs(s.y);
    BlochAngles out;
    out.alpha = 2.0 * std::atan2(ay, ax);
    if (ax > 0.0 && ay > 0.0) {
        double phi = std::arg(s.y * std::conj(s.x));
        if (phi < 0.0) phi += 2.0 * std::numbers::pi;
        if (phi >= 2.0 * std::numbers::pi) phi = 0.0;
        out.phi = phi;
    } else {
        out.phi = 0.0;  // pole: relative phase is not defined
    }
    return out;
}

QubitState canonical_phase(const QubitState& s) {
    const double ax = std::abs(s.x);
    const double ay = std::abs(s.y);
    if (ax > 0.0) {
        const Complex phase = std::conj(s.x) / ax;
        return QubitState{Complex{ax, 0.0}, s.y * phase};
    }
    if (ay > 0.0) {
        return QubitState{Complex{0.0, 0.0}, Complex{ay, 0.0}};
    }
    return s;  // zero vector; nothing to canonicalize
}

std::optional<GateName> parse_gate_name(std::string_view name) {
    if (name == "identity") return GateName::identity;
    if (name == "cnot") return GateName::cnot;
    if (name == "swap") return GateName::swap;
    if (name == "cz") return GateName::cz;
    return std::nullopt;
}

std::string_view gate_name_string(GateName name) {
    switch (name) {
        case GateName::identity: return "identity";
        case GateName::cnot: return "cnot";
        case GateName::swap: return "swap";
        case GateName::cz: return "cz";
    }
    return "unknown";
}

}  // namespace qnash
