#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "knotqm/bracket.hpp"
#include "knotqm/rmatrix.hpp"
#include "testutil.hpp"

using namespace knotqm;
using testutil::random_braid;

namespace {

LaurentPoly mono(long e, long c = 1) { return LaurentPoly::monomial(e, Int(c)); }

}  // namespace

TEST_CASE("R matrix entries and inverse") {
    LaurentMatrix r = r_matrix(1);
    REQUIRE(r.rows() == 4);
    CHECK(r.at(0, 0) == mono(1));
    CHECK(r.at(3, 3) == mono(1));
    CHECK(r.at(1, 1) == LaurentPoly(0));
    CHECK(r.at(1, 2) == mono(-1));
    CHECK(r.at(2, 1) == mono(-1));
    CHECK(r.at(2, 2) == mono(1) - mono(-3));
    CHECK(r.at(0, 1) == LaurentPoly(0));
    CHECK(r == u_matrix().scaled(mono(-1)) + LaurentMatrix::identity(4).scaled(mono(1)));
    CHECK(r * r_matrix(-1) == LaurentMatrix::identity(4));
    // mirror symmetry: the inverse is the A -> A^-1 image up to transposition
    CHECK(r_matrix(-1).at(1, 1) == mono(-1) - mono(3));
}

TEST_CASE("at A = 1 the R matrix degenerates to the swap") {
    NumericParams p = NumericParams::from_theta(0.0);
    auto v = r_matrix(1).eval(p);
    double swap[16] = {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1};
    for (int i = 0; i < 16; ++i) CHECK(std::abs(v[i] - swap[i]) < 1e-12);
}

TEST_CASE("Temperley-Lieb matrices: projector and jump relations") {
    LaurentMatrix u = u_matrix();
    CHECK(u * u == u.scaled(LaurentPoly::loop_value()));
    LaurentMatrix u1 = embed_factor(u, 3, 1), u2 = embed_factor(u, 3, 2);
    CHECK(u1 * u2 * u1 == u1);
    CHECK(u2 * u1 * u2 == u2);
    // Yang-Baxter, exact
    LaurentMatrix r1 = embed_factor(r_matrix(1), 3, 1), r2 = embed_factor(r_matrix(1), 3, 2);
    CHECK(r1 * r2 * r1 == r2 * r1 * r2);
    // far-apart factors commute
    LaurentMatrix a = embed_factor(r_matrix(1), 4, 1), b = embed_factor(u, 4, 3);
    CHECK(a * b == b * a);
}

TEST_CASE("braid representation is a pseudo-unitary homomorphism") {
    std::mt19937 rng(3);
    for (int it = 0; it < 40; ++it) {
        BraidWord w = random_braid(rng, 4, 6);
        LaurentMatrix m = braid_representation(w);
        CHECK(m * braid_representation(w.inverse()) ==
              LaurentMatrix::identity(m.rows()));
        CHECK(check_pseudounitary(m));
    }
    CHECK_FALSE(check_pseudounitary(u_matrix()));  // singular projector
    CHECK_THROWS_AS(braid_representation(BraidWord{12, {1}}), std::invalid_argument);
}

TEST_CASE("Markov trace: identity value, cyclicity, stabilization") {
    LaurentPoly d = LaurentPoly::loop_value();
    for (int n = 1; n <= 6; ++n)
        CHECK(markov_trace(LaurentMatrix::identity(1 << n), n) == d.pow(n));

    std::mt19937 rng(5);
    for (int it = 0; it < 60; ++it) {
        BraidWord w = random_braid(rng, 4, 6);
        LaurentPoly base = markov_trace(braid_representation(w), w.strands);
        BraidWord rot = w;
        std::rotate(rot.letters.begin(), rot.letters.begin() + 1, rot.letters.end());
        CHECK(markov_trace(braid_representation(rot), w.strands) == base);
        for (int s : {1, -1}) {
            BraidWord stab{w.strands + 1, w.letters};
            stab.letters.push_back(s * w.strands);
            CHECK(markov_trace(braid_representation(stab), stab.strands) ==
                  LaurentPoly::monomial(3 * s, Int(-1)) * base);
        }
    }
}

TEST_CASE("matrix trace agrees with the skein bracket and the diagram algebra") {
    std::mt19937 rng(7);
    for (int it = 0; it < 60; ++it) {
        BraidWord w = random_braid(rng, 4, 8);
        LaurentPoly tr = markov_trace(braid_representation(w), w.strands);
        CHECK(tr == markov_closure(braid_to_tl(w)));
        CHECK(tr == kauffman_bracket_raw(braid_to_pd(w)));
    }
}

TEST_CASE("trace evaluation commutes with numeric evaluation") {
    NumericParams p = NumericParams::from_k(20);
    std::mt19937 rng(9);
    for (int it = 0; it < 20; ++it) {
        BraidWord w = random_braid(rng, 3, 6);
        LaurentMatrix m = braid_representation(w);
        const int n = w.strands, dim = 1 << n;
        auto v = m.eval(p);
        std::complex<double> rho0 = -p.A_value * p.A_value;
        std::complex<double> rho1 = -1.0 / (p.A_value * p.A_value);
        std::complex<double> tr = 0.0;
        for (int i = 0; i < dim; ++i) {
            std::complex<double> weight = 1.0;
            for (int b = 0; b < n; ++b) weight *= ((i >> b) & 1) ? rho1 : rho0;
            tr += weight * v[static_cast<size_t>(i) * dim + i];
        }
        CHECK(std::abs(markov_trace(m, n).eval(p) - tr) < 1e-9);
    }
}

TEST_CASE("cap states and their overlaps") {
    FlatState two = cap_state(2);
    REQUIRE(two.coords.size() == 4);
    CHECK(two.coords[0] == LaurentPoly(1));
    CHECK(two.coords[3] == LaurentPoly(1));
    CHECK(two.coords[1].is_zero());

    FlatState psi = cap_state(4);
    REQUIRE(psi.coords.size() == 16);
    LaurentPoly want[16] = {0, 0, 0, 0, 0, mono(2, -1), 1, 0,
                            0, 1, mono(-2, -1), 0, 0, 0, 0, 0};
    for (int i = 0; i < 16; ++i) CHECK(psi.coords[i] == want[i]);

    LaurentPoly d = LaurentPoly::loop_value();
    CHECK(state_overlap(psi, psi) == d * d);
    FlatState phi = apply(embed_factor(u_matrix(), 4, 2), psi);
    LaurentPoly phi_want[16] = {0, 0, 0, mono(2, -1), 0, 1, 0, 0,
                                0, 0, 1, 0, mono(-2, -1), 0, 0, 0};
    for (int i = 0; i < 16; ++i) CHECK(phi.coords[i] == phi_want[i]);
    CHECK(state_overlap(psi, phi) == d);
    CHECK(state_overlap(phi, psi) == d);
    CHECK(matrix_element(psi, LaurentMatrix::identity(16), psi) == d * d);
}

TEST_CASE("Whitehead link as a four-strand matrix element") {
    FlatState psi = cap_state(4);
    LaurentMatrix u2 = embed_factor(u_matrix(), 4, 2);
    FlatState phi = apply(u2, psi);
    LaurentMatrix b = braid_representation(BraidWord{4, {-1, -3, 2, -3, -1}});
    LaurentPoly p = mono(14) - mono(10, 2) + mono(6) - mono(2, 2) + mono(-2) - mono(-6);
    CHECK(matrix_element(psi, u2 * b, phi) == mono(-3, -1) * LaurentPoly::loop_value() * p);
}

TEST_CASE("flatten round structure") {
    std::mt19937 rng(11);
    NumericParams p = NumericParams::from_k(14);
    for (int it = 0; it < 20; ++it) {
        BraidWord w = random_braid(rng, 3, 5);
        LaurentMatrix m = braid_representation(w);
        FlatState f = flatten(m);
        CHECK(f.strands == 2 * w.strands);
        // matrix_element through apply
        FlatState psi = cap_state(4);
        if (w.strands == 4) {
            LaurentPoly lhs = matrix_element(psi, m, psi);
            CHECK(lhs == state_overlap(psi, apply(m, psi)));
        }
    }
}
