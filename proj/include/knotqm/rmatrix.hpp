#pragma once

// Exact 2^n-dimensional braid representations built from the 4x4 R matrix:
// Markov traces, flattened cap states, matrix elements, pseudo-unitarity.
// This is the oracle path that is independent of the skein recursion.

#include <vector>

#include "knotqm/diagram.hpp"
#include "knotqm/poly.hpp"

namespace knotqm {

class LaurentMatrix {
  public:
    LaurentMatrix() : rows_(0), cols_(0) {}
    LaurentMatrix(int rows, int cols);

    static LaurentMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    LaurentPoly& at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    const LaurentPoly& at(int i, int j) const {
        return entries_[static_cast<size_t>(i) * cols_ + j];
    }

    LaurentMatrix operator+(const LaurentMatrix& o) const;
    LaurentMatrix operator-(const LaurentMatrix& o) const;
    LaurentMatrix operator*(const LaurentMatrix& o) const;
    LaurentMatrix scaled(const LaurentPoly& c) const;
    bool operator==(const LaurentMatrix& o) const;
    bool operator!=(const LaurentMatrix& o) const { return !(*this == o); }

    LaurentMatrix tensor(const LaurentMatrix& o) const;
    LaurentMatrix transpose() const;
    // transpose combined with the involution A -> A^-1
    LaurentMatrix dagger() const;

    LaurentPoly trace() const;

    // row-major numeric evaluation
    std::vector<std::complex<double>> eval(const NumericParams& p) const;

    nlohmann::json to_json() const;

  private:
    int rows_, cols_;
    std::vector<LaurentPoly> entries_;
};

// 4x4 R (sign +1) or its exact inverse (sign -1); R = A I + A^-1 U
LaurentMatrix r_matrix(int sign);
// the Temperley-Lieb generator matrix U (middle block [[-A^2,1],[1,-A^-2]])
LaurentMatrix u_matrix();
// single-strand metric Sigma = [[0,1],[1,0]]
LaurentMatrix sigma_matrix();

// I_2^(i-1) (x) m4 (x) I_2^(n-i-1); m4 acts on strands i, i+1 (1-based),
// strand 1 = leftmost tensor factor
LaurentMatrix embed_factor(const LaurentMatrix& m4, int strands, int i);

// ordered product of embedded R^{+-1} factors, leftmost letter applied first
LaurentMatrix braid_representation(const BraidWord& w, int strand_budget = 10);

// Tr(rho^(x)n m) with rho = diag(-A^2, -A^-2)
LaurentPoly markov_trace(const LaurentMatrix& m, int strands);

struct FlatState {
    int strands = 0;
    std::vector<LaurentPoly> coords;  // length 2^strands
};

// row-major flattening of a 2^(n/2) x 2^(n/2) operator into a 2^n vector
FlatState flatten(const LaurentMatrix& m);

// nested/adjacent cap state: n = 2 -> flatten(I_2); n = 0 mod 4 ->
// flatten of the adjacent cup-cap operator u_1 u_3 ... on n/2 strands
// (n = 4 reproduces the 16-vector flatten(U))
FlatState cap_state(int n_strands);

FlatState apply(const LaurentMatrix& m, const FlatState& v);

// transpose(bra) . op . ket; the Sigma-metric conjugation of flattened cap
// states is a plain transposition
LaurentPoly matrix_element(const FlatState& bra, const LaurentMatrix& op, const FlatState& ket);
LaurentPoly state_overlap(const FlatState& bra, const FlatState& ket);

// true iff Sigma^(x)n dagger(m) Sigma^(x)n m == identity; singular inputs
// (projectors such as U) simply return false
bool check_pseudounitary(const LaurentMatrix& m);

}  // namespace knotqm
