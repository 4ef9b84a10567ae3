#pragma once

// The n-point Hilbert space of the topological quantum mechanics: cap-diagram
// bases, Gram matrices, orthonormal (computational) bases, expansion of
// diagram states, and the projected qudit subspaces.

#include <Eigen/Dense>
#include <array>

#include "knotqm/diagram.hpp"
#include "knotqm/poly.hpp"
#include "knotqm/rmatrix.hpp"

namespace knotqm {

// Element of the quadratic extension Q(A)[s] / (s^2 - (d^2 - 1)): scalars
// a + b s.  Keeps computational-basis expansions of qubit factors exact.
struct ExtScalar {
    RationalFunc a, b;

    ExtScalar() = default;
    ExtScalar(long c) : a(c) {}
    ExtScalar(const RationalFunc& a_) : a(a_) {}
    ExtScalar(const RationalFunc& a_, const RationalFunc& b_) : a(a_), b(b_) {}

    // the generator s itself
    static ExtScalar root();
    // d^2 - 1 as a rational function
    static RationalFunc d2m1();

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    bool is_rational() const { return b.is_zero(); }

    ExtScalar operator+(const ExtScalar& o) const;
    ExtScalar operator-(const ExtScalar& o) const;
    ExtScalar operator-() const;
    ExtScalar operator*(const ExtScalar& o) const;
    ExtScalar operator/(const ExtScalar& o) const;
    ExtScalar& operator+=(const ExtScalar& o) { return *this = *this + o; }
    ExtScalar& operator*=(const ExtScalar& o) { return *this = *this * o; }
    bool operator==(const ExtScalar& o) const { return a == o.a && b == o.b; }
    bool operator!=(const ExtScalar& o) const { return !(*this == o); }

    // the A -> A^-1 involution (s is fixed: d is symmetric)
    ExtScalar conj_A() const;

    std::complex<double> eval(const NumericParams& p) const;
    std::string str() const;
};

RationalFunc rational_mirror(const RationalFunc& r);

// Formal combination of boundary matchings.  Unlike TLElement terms these
// need not be planar (connectomes of braids may cross).
struct DiagramState {
    int n_points = 0;
    std::map<PlanarMatching, RationalFunc> terms;

    static DiagramState from_tl(const TLElement& x);  // requires n_bottom == 0
    static DiagramState single(const PlanarMatching& m);
    nlohmann::json to_json() const;
    static DiagramState from_json(const nlohmann::json& j);
};

// Number of closed loops formed by gluing the reflected bra matching to the
// ket matching along the common boundary.
int glue_loops(const PlanarMatching& bra, const PlanarMatching& ket);

// <bra|ket> = sum over term pairs of conj(c_bra) c_ket d^loops, exact
RationalFunc overlap(const DiagramState& bra, const DiagramState& ket);
RationalFunc overlap(const TLElement& bra, const TLElement& ket);
std::complex<double> overlap_numeric(const DiagramState& bra, const DiagramState& ket,
                                     const NumericParams& p);

struct GramData {
    int n_points = 0;
    std::vector<PlanarMatching> basis;  // canonical enumeration order
    LaurentMatrix gram;                 // exact d-power entries
    Eigen::MatrixXcd gram_numeric;
    // columns = orthonormal vectors in cap-basis coordinates (kept ones only)
    Eigen::MatrixXcd transform;
    int numeric_rank = 0;
    double tolerance = 0.0;
};

// Gram matrix of the n-point cap basis plus a numeric Gram-Schmidt transform
// at the given parameters (null directions dropped).
GramData gram_matrix(int n_points, const NumericParams& params, double tolerance = 1e-9);

// State with exact extension-ring coefficients.
struct ExtState {
    int n_points = 0;
    std::map<PlanarMatching, ExtScalar> terms;

    void add(const PlanarMatching& m, const ExtScalar& c);
    ExtState scaled(const ExtScalar& c) const;
};

ExtScalar overlap_ext(const ExtState& bra, const ExtState& ket);

// |0> = e0/d, |1> = (e1 - e0/d)/sqrt(d^2-1) on 4 points, exact
std::array<ExtState, 2> orthonormal_qubit_basis();

// Exact computational-basis coefficients of a state on 4p points read as p
// four-point qubit parties (party q owns points 4q..4q+3).  Index bit order:
// party 0 is the most significant bit.
std::vector<ExtScalar> expand_qubit_parties(const DiagramState& state, int parties);
std::vector<ExtScalar> expand_qubit_parties(const TLElement& state, int parties);

struct QuditBasis {
    int twoj = 1;                       // 2j
    int n_points = 4;                   // 8j: four groups of 2j projected lines
    std::vector<TLElement> raw_states;  // exact projected states, spin 0..2j
    std::vector<PlanarMatching> cap_basis;
    Eigen::MatrixXcd ortho;             // columns: orthonormal states in cap coords
};

// Basis of the spin-j qudit (dimension 2j+1): four Jones-Wenzl projected
// groups of 2j lines, states labeled by the intermediate spin channel.
QuditBasis qudit_basis(int twoj, const NumericParams& params, double tolerance = 1e-9);

// the raw (unprojected) intermediate-spin-s matching used by qudit_basis
PlanarMatching qudit_matching(int twoj, int s);

// Numeric matrix of a TL operator action on the n-point space in the
// orthonormal basis of gram_matrix (square only when the space has full rank).
Eigen::MatrixXcd operator_in_orthonormal_basis(const TLElement& op, const GramData& g,
                                               const NumericParams& params);

// 2x2 computational-basis action of a 4-strand braid on the qubit space
Eigen::Matrix2cd qubit_braid_unitary(const BraidWord& w, const NumericParams& params);

}  // namespace knotqm
