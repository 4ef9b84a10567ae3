#include "knotqm/hilbert.hpp"

#include <cmath>

namespace knotqm {

// --- extension ring -----------------------------------------------------------

RationalFunc ExtScalar::d2m1() {
    const LaurentPoly d = LaurentPoly::loop_value();
    return RationalFunc(d * d - LaurentPoly(1));
}

ExtScalar ExtScalar::root() { return ExtScalar(RationalFunc(0), RationalFunc(1)); }

ExtScalar ExtScalar::operator+(const ExtScalar& o) const { return {a + o.a, b + o.b}; }
ExtScalar ExtScalar::operator-(const ExtScalar& o) const { return {a - o.a, b - o.b}; }
ExtScalar ExtScalar::operator-() const { return {-a, -b}; }

ExtScalar ExtScalar::operator*(const ExtScalar& o) const {
    return {a * o.a + b * o.b * d2m1(), a * o.b + b * o.a};
}

ExtScalar ExtScalar::operator/(const ExtScalar& o) const {
    // (a + b s)^-1 = (a - b s) / (a^2 - b^2 (d^2-1))
    RationalFunc n = o.a * o.a - o.b * o.b * d2m1();
    if (n.is_zero()) throw std::domain_error("division by zero extension scalar");
    return *this * ExtScalar(o.a / n, -o.b / n);
}

RationalFunc rational_mirror(const RationalFunc& r) {
    return RationalFunc(r.num().mirror(), r.den().mirror());
}

ExtScalar ExtScalar::conj_A() const { return {rational_mirror(a), rational_mirror(b)}; }

std::complex<double> ExtScalar::eval(const NumericParams& p) const {
    std::complex<double> s = std::sqrt(std::complex<double>(p.d_value * p.d_value - 1.0, 0.0));
    return a.eval(p) + b.eval(p) * s;
}

std::string ExtScalar::str() const {
    if (b.is_zero()) return a.str();
    std::string out = "(" + a.str() + ") + (" + b.str() + ")*s";
    return out;
}

// --- diagram states and overlaps ------------------------------------------------

DiagramState DiagramState::from_tl(const TLElement& x) {
    if (x.n_bottom() != 0) throw std::invalid_argument("state must have an empty bottom boundary");
    DiagramState s;
    s.n_points = x.n_top();
    for (const auto& [m, c] : x.terms()) s.terms.emplace(m, c);
    return s;
}

DiagramState DiagramState::single(const PlanarMatching& m) {
    DiagramState s;
    s.n_points = m.size();
    s.terms.emplace(m, RationalFunc(1));
    return s;
}

nlohmann::json DiagramState::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [m, c] : terms) {
        nlohmann::json t;
        t["pairing"] = m.pairing();
        t["num"] = c.num().to_json();
        t["den"] = c.den().to_json();
        arr.push_back(t);
    }
    return {{"n_points", n_points}, {"terms", arr}};
}

DiagramState DiagramState::from_json(const nlohmann::json& j) {
    DiagramState s;
    s.n_points = j.at("n_points").get<int>();
    for (const auto& t : j.at("terms")) {
        PlanarMatching m(t.at("pairing").get<std::vector<int>>());
        if (m.size() != s.n_points) throw std::invalid_argument("matching size mismatch");
        RationalFunc c(1);
        if (t.contains("coef"))
            c = RationalFunc(t.at("coef").get<long>());
        else if (t.contains("num"))
            c = RationalFunc(LaurentPoly::from_json(t.at("num")),
                             t.contains("den") ? LaurentPoly::from_json(t.at("den"))
                                               : LaurentPoly(Int(1)));
        s.terms.emplace(m, c);
    }
    return s;
}

int glue_loops(const PlanarMatching& bra, const PlanarMatching& ket) {
    if (bra.size() != ket.size()) throw std::invalid_argument("point-count mismatch");
    const int n = bra.size();
    std::vector<char> visited(n, 0);
    int loops = 0;
    for (int p = 0; p < n; ++p) {
        if (visited[p]) continue;
        int q = p;
        do {
            visited[q] = 1;
            q = ket.partner(q);
            visited[q] = 1;
            q = bra.partner(q);
        } while (q != p);
        ++loops;
    }
    return loops;
}

RationalFunc overlap(const DiagramState& bra, const DiagramState& ket) {
    if (bra.n_points != ket.n_points) throw std::invalid_argument("point-count mismatch");
    const RationalFunc d(LaurentPoly::loop_value());
    RationalFunc total;
    for (const auto& [mb, cb] : bra.terms)
        for (const auto& [mk, ck] : ket.terms) {
            RationalFunc term = rational_mirror(cb) * ck;
            int loops = glue_loops(mb, mk);
            for (int l = 0; l < loops; ++l) term *= d;
            total += term;
        }
    return total;
}

RationalFunc overlap(const TLElement& bra, const TLElement& ket) {
    return overlap(DiagramState::from_tl(bra), DiagramState::from_tl(ket));
}

std::complex<double> overlap_numeric(const DiagramState& bra, const DiagramState& ket,
                                     const NumericParams& p) {
    if (bra.n_points != ket.n_points) throw std::invalid_argument("point-count mismatch");
    std::complex<double> total = 0.0;
    for (const auto& [mb, cb] : bra.terms)
        for (const auto& [mk, ck] : ket.terms)
            total += std::conj(cb.eval(p)) * ck.eval(p) *
                     std::pow(std::complex<double>(p.d_value, 0.0), glue_loops(mb, mk));
    return total;
}

// --- Gram data -----------------------------------------------------------------

GramData gram_matrix(int n_points, const NumericParams& params, double tolerance) {
    if (n_points <= 0 || n_points % 2 != 0)
        throw std::invalid_argument("point count must be even and positive");
    GramData g;
    g.n_points = n_points;
    g.tolerance = tolerance;
    g.basis = enumerate_matchings(n_points / 2);
    const int D = static_cast<int>(g.basis.size());
    g.gram = LaurentMatrix(D, D);
    g.gram_numeric.resize(D, D);
    const LaurentPoly d = LaurentPoly::loop_value();
    for (int i = 0; i < D; ++i)
        for (int j = 0; j < D; ++j) {
            g.gram.at(i, j) = d.pow(glue_loops(g.basis[i], g.basis[j]));
            g.gram_numeric(i, j) = g.gram.at(i, j).eval(params);
        }
    // modified Gram-Schmidt in canonical order, metric = numeric Gram
    Eigen::MatrixXcd Q(D, 0);
    for (int i = 0; i < D; ++i) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(D);
        v(i) = 1.0;
        for (int c = 0; c < Q.cols(); ++c) {
            std::complex<double> proj = (Q.col(c).adjoint() * g.gram_numeric * v)(0, 0);
            v -= proj * Q.col(c);
        }
        double norm2 = std::real((v.adjoint() * g.gram_numeric * v)(0, 0));
        if (norm2 < tolerance) continue;  // null direction at these parameters
        v /= std::sqrt(norm2);
        Q.conservativeResize(Eigen::NoChange, Q.cols() + 1);
        Q.col(Q.cols() - 1) = v;
    }
    g.transform = Q;
    g.numeric_rank = static_cast<int>(Q.cols());
    return g;
}

// --- exact qubit machinery -------------------------------------------------------

void ExtState::add(const PlanarMatching& m, const ExtScalar& c) {
    if (m.size() != n_points) throw std::invalid_argument("matching size mismatch");
    if (c.is_zero()) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

ExtState ExtState::scaled(const ExtScalar& c) const {
    ExtState r;
    r.n_points = n_points;
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms) r.terms.emplace(m, k * c);
    return r;
}

ExtScalar overlap_ext(const ExtState& bra, const ExtState& ket) {
    if (bra.n_points != ket.n_points) throw std::invalid_argument("point-count mismatch");
    const ExtScalar d{RationalFunc(LaurentPoly::loop_value())};
    ExtScalar total;
    for (const auto& [mb, cb] : bra.terms)
        for (const auto& [mk, ck] : ket.terms) {
            ExtScalar term = cb.conj_A() * ck;
            int loops = glue_loops(mb, mk);
            for (int l = 0; l < loops; ++l) term *= d;
            total += term;
        }
    return total;
}

namespace {

PlanarMatching qubit_cap(int which) {
    // e0 = (01)(23), e1 = (03)(12)
    if (which == 0) return PlanarMatching({1, 0, 3, 2});
    return PlanarMatching({3, 2, 1, 0});
}

}  // namespace

std::array<ExtState, 2> orthonormal_qubit_basis() {
    const RationalFunc d(LaurentPoly::loop_value());
    const ExtScalar inv_s = ExtScalar(1) / ExtScalar::root();
    ExtState zero, one;
    zero.n_points = one.n_points = 4;
    zero.add(qubit_cap(0), ExtScalar(RationalFunc(1) / d));
    one.add(qubit_cap(1), inv_s);
    one.add(qubit_cap(0), -ExtScalar(RationalFunc(1) / d) * inv_s);
    return {zero, one};
}

std::vector<ExtScalar> expand_qubit_parties(const DiagramState& state, int parties) {
    if (parties < 1) throw std::invalid_argument("need at least one party");
    if (state.n_points != 4 * parties)
        throw std::invalid_argument("state size does not match the party count");
    const int N = 1 << parties;
    const RationalFunc d(LaurentPoly::loop_value());

    // cross-overlap tensor M_a = <e_{a_1} x ... x e_{a_p} | state>
    std::vector<ExtScalar> coef(N);
    for (int idx = 0; idx < N; ++idx) {
        std::vector<int> partner(4 * parties);
        for (int q = 0; q < parties; ++q) {
            int bit = (idx >> (parties - 1 - q)) & 1;
            PlanarMatching cap = qubit_cap(bit);
            for (int p = 0; p < 4; ++p) partner[4 * q + p] = 4 * q + cap.partner(p);
        }
        PlanarMatching bra(std::move(partner));
        RationalFunc m;
        for (const auto& [mk, ck] : state.terms) {
            RationalFunc term = ck;
            int loops = glue_loops(bra, mk);
            for (int l = 0; l < loops; ++l) term *= d;
            m += term;
        }
        coef[idx] = ExtScalar(m);
    }

    // invert the Gram on every index: G^-1 = [[1, -1/d], [-1/d, 1]] / (d^2-1)
    const RationalFunc d2m1 = ExtScalar::d2m1();
    const RationalFunc g00 = RationalFunc(1) / d2m1;
    const RationalFunc g01 = -(RationalFunc(1) / (d * d2m1));
    // then move to the computational basis: B^-1 = [[d, 1], [0, s]]
    const ExtScalar s = ExtScalar::root();
    for (int q = 0; q < parties; ++q) {
        const int stride = 1 << (parties - 1 - q);
        std::vector<ExtScalar> next(N);
        for (int idx = 0; idx < N; ++idx) {
            int lo = idx & ~stride;  // bit q cleared
            const ExtScalar& m0 = coef[lo];
            const ExtScalar& m1 = coef[lo | stride];
            next[idx] = ((idx & stride) == 0) ? m0 * ExtScalar(g00) + m1 * ExtScalar(g01)
                                              : m0 * ExtScalar(g01) + m1 * ExtScalar(g00);
        }
        coef = std::move(next);
        for (int idx = 0; idx < N; ++idx) {
            if ((idx & stride) != 0) continue;
            ExtScalar t0 = coef[idx], t1 = coef[idx | stride];
            coef[idx] = t0 * ExtScalar(d) + t1;
            coef[idx | stride] = t1 * s;
        }
    }
    return coef;
}

std::vector<ExtScalar> expand_qubit_parties(const TLElement& state, int parties) {
    return expand_qubit_parties(DiagramState::from_tl(state), parties);
}

// --- qudit bases -----------------------------------------------------------------

PlanarMatching qudit_matching(int twoj, int s) {
    const int m = twoj;
    if (m < 1) throw std::invalid_argument("2j must be positive");
    if (s < 0 || s > m) throw std::invalid_argument("intermediate spin out of range");
    std::vector<int> partner(4 * m, -1);
    auto pair = [&](int x, int y) {
        partner[x] = y;
        partner[y] = x;
    };
    for (int t = 0; t < s; ++t) {
        pair(t, 4 * m - 1 - t);          // outer rainbow
        pair(2 * m - 1 - t, 2 * m + t);  // nested across the half boundary
    }
    for (int u = 0; u < m - s; ++u) {
        pair(s + u, 2 * m - s - 1 - u);          // caps inside the left half
        pair(2 * m + s + u, 4 * m - 1 - s - u);  // caps inside the right half
    }
    return PlanarMatching(std::move(partner));
}

QuditBasis qudit_basis(int twoj, const NumericParams& params, double tolerance) {
    const int m = twoj;
    if (m < 1) throw std::invalid_argument("2j must be positive");
    QuditBasis basis;
    basis.twoj = m;
    basis.n_points = 4 * m;
    // four spin-j groups: P_m on each block of m lines
    TLElement p = jones_wenzl(m);
    TLElement proj = tl_tensor(tl_tensor(p, p), tl_tensor(p, p));
    for (int s = 0; s <= m; ++s) {
        TLElement raw(0, 4 * m);
        raw.add_term(qudit_matching(m, s), RationalFunc(1));
        basis.raw_states.push_back(tl_multiply(raw, proj));
    }
    basis.cap_basis = enumerate_matchings(2 * m);
    const int D = static_cast<int>(basis.cap_basis.size());
    std::map<PlanarMatching, int> index;
    for (int i = 0; i < D; ++i) index.emplace(basis.cap_basis[i], i);

    Eigen::MatrixXcd G(D, D);
    const LaurentPoly d = LaurentPoly::loop_value();
    for (int i = 0; i < D; ++i)
        for (int j = 0; j < D; ++j)
            G(i, j) = d.pow(glue_loops(basis.cap_basis[i], basis.cap_basis[j])).eval(params);

    basis.ortho.resize(D, m + 1);
    Eigen::MatrixXcd Q(D, 0);
    for (int s = 0; s <= m; ++s) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(D);
        for (const auto& [mt, c] : basis.raw_states[s].terms()) v(index.at(mt)) = c.eval(params);
        for (int c = 0; c < Q.cols(); ++c) {
            std::complex<double> proj_c = (Q.col(c).adjoint() * G * v)(0, 0);
            v -= proj_c * Q.col(c);
        }
        double norm2 = std::real((v.adjoint() * G * v)(0, 0));
        if (norm2 < tolerance)
            throw std::domain_error("degenerate parameters: qudit basis rank deficient");
        v /= std::sqrt(norm2);
        Q.conservativeResize(Eigen::NoChange, Q.cols() + 1);
        Q.col(Q.cols() - 1) = v;
    }
    basis.ortho = Q;
    return basis;
}

// --- operators in the orthonormal basis -------------------------------------------

Eigen::MatrixXcd operator_in_orthonormal_basis(const TLElement& op, const GramData& g,
                                               const NumericParams& params) {
    if (op.n_bottom() != g.n_points || op.n_top() != g.n_points)
        throw std::invalid_argument("operator size does not match the space");
    const int D = static_cast<int>(g.basis.size());
    std::map<PlanarMatching, int> index;
    for (int i = 0; i < D; ++i) index.emplace(g.basis[i], i);
    // action column by column in cap-basis coordinates
    Eigen::MatrixXcd W = Eigen::MatrixXcd::Zero(D, D);
    for (int a = 0; a < D; ++a) {
        TLElement ea(0, g.n_points);
        ea.add_term(g.basis[a], RationalFunc(1));
        TLElement out = tl_multiply(ea, op);
        for (const auto& [m, c] : out.terms()) W(index.at(m), a) += c.eval(params);
    }
    // <q_i| Op |q_j> = (Q^+ G W Q)_{ij}
    return g.transform.adjoint() * g.gram_numeric * W * g.transform;
}

Eigen::Matrix2cd qubit_braid_unitary(const BraidWord& w, const NumericParams& params) {
    if (w.strands != 4) throw std::invalid_argument("qubit braids act on 4 strands");
    GramData g = gram_matrix(4, params);
    if (g.numeric_rank != 2) throw std::domain_error("degenerate parameters for the qubit space");
    return operator_in_orthonormal_basis(braid_to_tl(w), g, params);
}

}  // namespace knotqm
