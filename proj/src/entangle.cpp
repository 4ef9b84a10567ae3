#include "knotqm/entangle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace knotqm {

namespace {

struct DSU {
    std::vector<int> parent;
    explicit DSU(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

// components of a degree-2 graph given as a list of edges
int count_cycles(int n_nodes, const std::vector<std::pair<int, int>>& edges) {
    DSU dsu(n_nodes);
    int components = n_nodes;
    for (const auto& [a, b] : edges)
        if (dsu.unite(a, b)) --components;
    return components;
}

// combined matching of independent pieces on consecutive index blocks
PlanarMatching side_by_side(const PlanarMatching& left, const PlanarMatching& right) {
    const int nl = left.size();
    std::vector<int> partner(nl + right.size());
    for (int i = 0; i < nl; ++i) partner[i] = left.partner(i);
    for (int i = 0; i < right.size(); ++i) partner[nl + i] = nl + right.partner(i);
    return PlanarMatching(std::move(partner));
}

// cross-overlap grid M(a, b) = <e_a x e_b | state> at the numeric parameters
Eigen::MatrixXcd cross_overlaps(const DiagramState& state, const GramData& ga,
                                const GramData& gb, const NumericParams& params) {
    const LaurentPoly d = LaurentPoly::loop_value();
    Eigen::MatrixXcd M(ga.basis.size(), gb.basis.size());
    for (size_t a = 0; a < ga.basis.size(); ++a)
        for (size_t b = 0; b < gb.basis.size(); ++b) {
            PlanarMatching bra = side_by_side(ga.basis[a], gb.basis[b]);
            std::complex<double> v = 0.0;
            for (const auto& [m, c] : state.terms)
                v += c.eval(params) * d.pow(glue_loops(bra, m)).eval(params);
            M(a, b) = v;
        }
    return M;
}

Eigen::MatrixXcd schmidt_coefficients(const DiagramState& state, int n_points_a,
                                      const NumericParams& params, double tolerance,
                                      GramData* ga_out = nullptr, GramData* gb_out = nullptr) {
    const int n_b = state.n_points - n_points_a;
    if (n_points_a < 2 || n_b < 2 || n_points_a % 2 != 0 || n_b % 2 != 0)
        throw std::invalid_argument("bipartition must leave an even number of points per side");
    GramData ga = gram_matrix(n_points_a, params, tolerance);
    GramData gb = gram_matrix(n_b, params, tolerance);
    Eigen::MatrixXcd M = cross_overlaps(state, ga, gb, params);
    Eigen::MatrixXcd c = ga.transform.adjoint() * M * gb.transform.conjugate();
    if (ga_out) *ga_out = std::move(ga);
    if (gb_out) *gb_out = std::move(gb);
    return c;
}

}  // namespace

int Connectome::party_of(int point) const {
    for (size_t p = 0; p < parties.size(); ++p)
        for (int q : parties[p])
            if (q == point) return static_cast<int>(p);
    throw std::invalid_argument("point not in any party");
}

int Connectome::cross_count(int a, int b) const {
    int n = 0;
    for (int p : parties.at(a)) {
        int q = matching.partner(p);
        for (int r : parties.at(b))
            if (r == q) ++n;
    }
    return n;
}

int Connectome::cross_total(int a) const {
    int n = 0;
    for (int p : parties.at(a)) {
        int q = matching.partner(p);
        bool inside = false;
        for (int r : parties.at(a))
            if (r == q) inside = true;
        if (!inside) ++n;
    }
    return n;
}

int Connectome::cut_lines(const std::vector<int>& party_set) const {
    std::vector<bool> in_set(n_points(), false);
    for (int p : party_set)
        for (int q : parties.at(p)) in_set[q] = true;
    int n = 0;
    for (int i = 0; i < n_points(); ++i)
        if (in_set[i] && !in_set[matching.partner(i)]) ++n;
    return n;
}

void Connectome::validate() const {
    const int n = n_points();
    std::vector<int> seen(n, 0);
    for (const auto& party : parties)
        for (int p : party) {
            if (p < 0 || p >= n) throw std::invalid_argument("party point out of range");
            if (seen[p]++) throw std::invalid_argument("point listed in two parties");
        }
    for (int i = 0; i < n; ++i) {
        if (!seen[i]) throw std::invalid_argument("point not assigned to a party");
        int j = matching.partner(i);
        if (j == i || j < 0 || j >= n || matching.partner(j) != i)
            throw std::invalid_argument("pairing is not a fixed-point-free involution");
    }
}

nlohmann::json Connectome::to_json() const {
    return {{"parties", parties}, {"pairing", matching.pairing()}, {"d_power", d_power}};
}

Connectome Connectome::from_json(const nlohmann::json& j) {
    Connectome c;
    c.parties = j.at("parties").get<std::vector<std::vector<int>>>();
    c.matching = PlanarMatching(j.at("pairing").get<std::vector<int>>());
    c.d_power = j.value("d_power", 0);
    c.validate();
    return c;
}

Connectome lm_connectome(int l, int m) {
    if (l < 0 || m < 0 || (l == 0 && m == 0)) throw std::invalid_argument("need l + m > 0");
    if (m % 2 != 0) throw std::invalid_argument("cross-line count must be even");
    const int side = 2 * l + m;
    const int total = 2 * side;
    std::vector<int> partner(total, -1);
    auto pair = [&](int x, int y) {
        partner[x] = y;
        partner[y] = x;
    };
    for (int i = 0; i < l; ++i) {
        pair(2 * i, 2 * i + 1);              // caps inside the left party
        pair(side + 2 * i, side + 2 * i + 1);  // caps inside the right party
    }
    for (int i = 0; i < m; ++i) pair(2 * l + i, total - 1 - i);  // cross rainbow
    Connectome c;
    c.matching = PlanarMatching(std::move(partner));
    std::vector<int> a(side), b(side);
    std::iota(a.begin(), a.end(), 0);
    std::iota(b.begin(), b.end(), side);
    c.parties = {a, b};
    c.validate();
    return c;
}

Connectome tripartite_connectome(int which) {
    std::vector<int> partner(12, -1);
    auto pair = [&](int x, int y) {
        partner[x] = y;
        partner[y] = x;
    };
    switch (which) {
        case 1:
            for (int i = 0; i < 6; ++i) pair(2 * i, 2 * i + 1);
            break;
        case 2:
            pair(0, 4); pair(1, 5); pair(2, 3); pair(6, 7); pair(8, 9); pair(10, 11);
            break;
        case 3:
            pair(8, 3); pair(9, 2); pair(10, 6); pair(11, 7); pair(0, 1); pair(4, 5);
            break;
        case 4:
            pair(0, 4); pair(1, 2); pair(5, 6); pair(8, 3); pair(9, 10); pair(11, 7);
            break;
        case 5:
            pair(0, 4); pair(1, 5); pair(2, 6); pair(3, 7); pair(8, 9); pair(10, 11);
            break;
        case 6:
            pair(0, 4); pair(1, 5); pair(2, 6); pair(8, 3); pair(9, 10); pair(11, 7);
            break;
        case 7:
            pair(0, 4); pair(1, 5); pair(2, 9); pair(3, 8); pair(6, 10); pair(7, 11);
            break;
        default:
            throw std::invalid_argument("tripartite diagram index must be 1..7");
    }
    Connectome c;
    c.matching = PlanarMatching(std::move(partner));
    c.parties = {{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}};
    c.validate();
    return c;
}

SchmidtResult schmidt_decompose(const DiagramState& state, int n_points_a,
                                const NumericParams& params, double tolerance) {
    Eigen::MatrixXcd c = schmidt_coefficients(state, n_points_a, params, tolerance);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(c);
    const auto& sv = svd.singularValues();
    double total = 0.0;
    for (int i = 0; i < sv.size(); ++i) total += sv(i) * sv(i);
    if (total < tolerance) throw std::invalid_argument("state has vanishing norm");
    SchmidtResult r;
    r.coefficients = c;
    for (int i = 0; i < sv.size(); ++i) {
        double lambda = sv(i) * sv(i) / total;
        r.lambdas.push_back(lambda);
        if (lambda > tolerance) ++r.rank;
    }
    return r;
}

DensityOperator reduced_density(const DiagramState& state, int keep_party, int n_points_a,
                                const NumericParams& params, double tolerance) {
    if (keep_party != 0 && keep_party != 1) throw std::invalid_argument("party not found");
    GramData ga, gb;
    Eigen::MatrixXcd c = schmidt_coefficients(state, n_points_a, params, tolerance, &ga, &gb);

    Eigen::MatrixXcd numeric = (keep_party == 0)
                                   ? Eigen::MatrixXcd(c * c.adjoint())
                                   : Eigen::MatrixXcd(c.transpose() * c.conjugate());
    double trace = numeric.trace().real();
    if (trace < tolerance) throw std::invalid_argument("state has vanishing norm");
    numeric /= trace;

    // Diagrammatic path: glue bra and ket copies of the state along the traced
    // boundary and read off cap-basis matrix elements by loop counting.
    const int n = state.n_points;
    const GramData& gk = (keep_party == 0) ? ga : gb;
    const int offset = (keep_party == 0) ? 0 : n_points_a;
    const int n_keep = (keep_party == 0) ? n_points_a : n - n_points_a;
    const LaurentPoly d = LaurentPoly::loop_value();
    Eigen::MatrixXcd E(gk.basis.size(), gk.basis.size());
    for (size_t a = 0; a < gk.basis.size(); ++a)
        for (size_t b = 0; b < gk.basis.size(); ++b) {
            std::complex<double> v = 0.0;
            for (const auto& [mk, ck] : state.terms)
                for (const auto& [mb, cb] : state.terms) {
                    std::vector<std::pair<int, int>> edges;
                    for (int i = 0; i < n; ++i) {
                        edges.emplace_back(i, mk.partner(i));        // ket copy
                        edges.emplace_back(n + i, n + mb.partner(i));  // bra copy
                        bool kept = (i >= offset && i < offset + n_keep);
                        if (!kept) edges.emplace_back(i, n + i);  // traced boundary
                    }
                    for (int i = 0; i < n_keep; ++i) {
                        edges.emplace_back(offset + i, offset + gk.basis[a].partner(i));
                        edges.emplace_back(n + offset + i, n + offset + gk.basis[b].partner(i));
                    }
                    int cycles = count_cycles(2 * n, edges);
                    v += ck.eval(params) * std::conj(cb.eval(params)) * d.pow(cycles).eval(params);
                }
            E(a, b) = v;
        }
    Eigen::MatrixXcd glued = gk.transform.adjoint() * E * gk.transform;
    glued /= glued.trace().real();

    if ((glued - numeric).norm() > 1e-7 * std::max(1.0, numeric.norm()))
        throw std::logic_error("partial-trace paths disagree");

    DensityOperator rho;
    rho.party = keep_party;
    rho.rho = numeric;
    rho.normalized = true;
    return rho;
}

double von_neumann_entropy(const DensityOperator& rho) {
    if (!rho.normalized || std::abs(rho.rho.trace().real() - 1.0) > 1e-6)
        throw std::invalid_argument("density operator must be trace-normalized");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.rho, Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
        double ev = es.eigenvalues()(i);
        if (ev < -1e-9) throw std::invalid_argument("density operator has a negative eigenvalue");
        if (ev <= 1e-12) continue;
        s -= ev * std::log(ev);
    }
    return s;
}

Connectome surgery_reduce(const Connectome& c) {
    Connectome r = c;
    r.validate();
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t p = 0; p < r.parties.size() && !changed; ++p) {
            if (r.cross_total(static_cast<int>(p)) != 2) continue;
            // find the two endpoints whose partner lies outside the party
            std::vector<int> ext;
            for (int q : r.parties[p]) {
                int partner = r.matching.partner(q);
                if (std::find(r.parties[p].begin(), r.parties[p].end(), partner) ==
                    r.parties[p].end())
                    ext.push_back(q);
            }
            std::vector<int> partner = r.matching.pairing();
            int p0 = ext[0], p1 = ext[1];
            int o0 = partner[p0], o1 = partner[p1];
            partner[p0] = p1;  // cap inside the cut party
            partner[p1] = p0;
            partner[o0] = o1;  // rejoin the severed outside ends
            partner[o1] = o0;
            r.matching = PlanarMatching(std::move(partner));
            r.d_power -= 1;
            changed = true;
        }
    }
    return r;
}

std::string connectome_class(const Connectome& c) {
    Connectome r = surgery_reduce(c);
    const int np = static_cast<int>(r.parties.size());
    DSU dsu(np);
    int total_cross = 0;
    for (int a = 0; a < np; ++a)
        for (int b = a + 1; b < np; ++b)
            if (r.cross_count(a, b) > 0) {
                dsu.unite(a, b);
                ++total_cross;
            }
    if (total_cross == 0) return "separable";
    int root = dsu.find(0);
    bool all_connected = true;
    for (int a = 1; a < np; ++a)
        if (dsu.find(a) != root) all_connected = false;
    if (!all_connected) return "biseparable";
    return np >= 3 ? "GHZ" : "entangled";
}

std::string classify_state(const DiagramState& state,
                           const std::vector<std::vector<int>>& parties) {
    if (state.terms.size() != 1) return "non-connectome superposition";
    Connectome c;
    c.parties = parties;
    c.matching = state.terms.begin()->first;
    c.validate();
    return connectome_class(c);
}

int slocc_class(const DiagramState& state, int n_points_a, const NumericParams& params,
                double tolerance) {
    return schmidt_decompose(state, n_points_a, params, tolerance).rank;
}

ConnectomeEntropy connectome_entropy(const Connectome& c, int party) {
    ConnectomeEntropy e;
    e.lines = c.cross_total(party);
    if (e.lines % 2 != 0)
        throw std::invalid_argument("odd cross-line count has no state interpretation");
    e.exact = std::log(catalan_number(e.lines / 2).get_d());
    e.asymptotic = e.lines * std::log(2.0);
    return e;
}

nlohmann::json InequalityReport::to_json() const {
    return {{"n_a", n_a},
            {"n_b", n_b},
            {"n_c", n_c},
            {"n_ab", n_ab},
            {"n_bc", n_bc},
            {"n_ac", n_ac},
            {"n_abc", n_abc},
            {"ell_ab", ell_ab},
            {"ell_ac", ell_ac},
            {"subadditivity_slack", subadditivity_slack},
            {"ssa_slack", ssa_slack},
            {"monogamy_gap", monogamy_gap},
            {"subadditivity_ok", subadditivity_ok},
            {"ssa_ok", ssa_ok},
            {"monogamy_saturated", monogamy_saturated}};
}

InequalityReport check_inequalities(const Connectome& c) {
    if (c.parties.size() < 3)
        throw std::invalid_argument("inequality checks need at least three parties");
    InequalityReport r;
    r.n_a = c.cut_lines({0});
    r.n_b = c.cut_lines({1});
    r.n_c = c.cut_lines({2});
    r.n_ab = c.cut_lines({0, 1});
    r.n_bc = c.cut_lines({1, 2});
    r.n_ac = c.cut_lines({0, 2});
    r.n_abc = c.cut_lines({0, 1, 2});
    r.ell_ab = c.cross_count(0, 1);
    r.ell_ac = c.cross_count(0, 2);
    r.subadditivity_slack = r.n_a + r.n_b - r.n_ab;
    r.ssa_slack = r.n_ab + r.n_bc - r.n_b - r.n_abc;
    r.monogamy_gap = r.n_ab + r.n_bc + r.n_ac - r.n_a - r.n_b - r.n_c - r.n_abc;
    r.subadditivity_ok = r.subadditivity_slack == 2 * r.ell_ab && r.subadditivity_slack >= 0;
    r.ssa_ok = r.ssa_slack == 2 * r.ell_ac && r.ssa_slack >= 0;
    r.monogamy_saturated = r.monogamy_gap == 0;
    return r;
}

std::vector<ExtScalar> tripartite_ghz_expand() {
    Connectome ghz = tripartite_connectome(7);
    return expand_qubit_parties(DiagramState::single(ghz.matching), 3);
}

}  // namespace knotqm
