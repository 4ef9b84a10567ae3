#pragma once

// Topological quantum teleportation and dense coding: the Bell basis and
// correction table, braid-generated measurement states, and the braided
// 8-point dense-coding protocol evaluated exactly in the diagram algebra.

#include <Eigen/Dense>
#include <array>

#include "knotqm/hilbert.hpp"

namespace knotqm {

struct GateSet {
    Eigen::Matrix2cd X, Z, H, I;
    static GateSet standard();
};

// Phi+, Phi-, Psi+, Psi- in the computational basis |00>,|01>,|10>,|11>
struct BellBasis {
    std::array<Eigen::Vector4cd, 4> states;
    static std::array<const char*, 4> labels() { return {"Phi+", "Phi-", "Psi+", "Psi-"}; }
    // correction exponents (a, b) of Z^a X^b for each measurement outcome
    static std::pair<int, int> correction_bits(int label);
};

// Throws on degenerate parameters (d^2 = 1).  Also verifies that the
// normalized ladder diagram expansion reproduces Phi+.
BellBasis bell_basis(const NumericParams& params);

struct TeleportResult {
    int bell_label = -1;  // -1 when the measurement state came from a braid
    double probability = 0.0;
    Eigen::Vector2cd bob_state;  // conditioned state before correction
    Eigen::Matrix2cd correction;
    Eigen::Vector2cd corrected;
    double fidelity = 0.0;
    nlohmann::json to_json() const;
};

// Measurement of Alice's qubits in the given Bell state; Bob applies Z^a X^b.
TeleportResult teleport(const Eigen::Vector2cd& psi, int bell_label,
                        const NumericParams& params);

// Measurement in the state (B x I) Phi+ for a 4-strand braid B on Alice's
// side; Bob undoes the induced unitary.
TeleportResult teleport(const Eigen::Vector2cd& psi, const BraidWord& alice_braid,
                        const NumericParams& params);

// Teleportation through an arbitrary shared resource state (coefficients in
// the computational basis) with Bell-label measurement and the standard table
// correction.  A non-unitary entangler degrades the fidelity.
TeleportResult teleport_with_resource(const Eigen::Vector2cd& psi, int bell_label,
                                      const Eigen::Vector4cd& resource,
                                      const NumericParams& params);

struct DenseCodeResult {
    int a = 0, b = 0;          // decoded bits
    int outcome_label = -1;    // Bell label (simple) or ignored (braided)
    std::array<double, 4> probabilities{};
    nlohmann::json to_json() const;
};

// Bob applies Z^a X^b to his half of Phi+; Alice measures in the Bell basis.
DenseCodeResult densecode_simple(int a, int b, const NumericParams& params);

// The braided 8-point protocol: shared rainbow state, table-braid encoding,
// permutation analogues of H and CNOT, projection on the four cap-diagram
// outcomes.  Returns the measured labels (top qubit, bottom qubit) in the
// non-orthonormal cap basis; exact in the diagram algebra.
std::pair<int, int> densecode_braided(int a, int b);

// the exact final diagram state of the braided protocol (for traces/tests)
TLElement densecode_braided_state(int a, int b);

}  // namespace knotqm
