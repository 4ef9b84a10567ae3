#include "knotqm/protocols.hpp"

#include <cmath>
#include <stdexcept>

namespace knotqm {

namespace {

// handedness of the drawn protocol crossings (up-strand over for the encoding
// braids, down-strand over for the permutation gates)
constexpr int kBobSign = 1;
constexpr int kGateSign = -1;

Eigen::Vector4cd apply_right(const Eigen::Matrix2cd& op, const Eigen::Vector4cd& v) {
    Eigen::Vector4cd r;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            std::complex<double> s = 0.0;
            for (int c = 0; c < 2; ++c) s += op(b, c) * v(2 * a + c);
            r(2 * a + b) = s;
        }
    return r;
}

// Bob's conditioned state after Alice projects her two qubits of
// psi x resource onto |mu>
Eigen::Vector2cd project_alice(const Eigen::Vector2cd& psi, const Eigen::Vector4cd& mu,
                               const Eigen::Vector4cd& resource) {
    Eigen::Vector2cd bob = Eigen::Vector2cd::Zero();
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int k = 0; k < 2; ++k)
                bob(k) += std::conj(mu(2 * x + y)) * psi(x) * resource(2 * y + k);
    return bob;
}

TeleportResult finish_teleport(const Eigen::Vector2cd& psi, const Eigen::Vector2cd& bob,
                               const Eigen::Matrix2cd& correction, int label) {
    TeleportResult r;
    r.bell_label = label;
    r.probability = bob.squaredNorm();
    if (r.probability < 1e-12) throw std::invalid_argument("zero-probability outcome");
    r.bob_state = bob.normalized();
    r.correction = correction;
    r.corrected = (correction * r.bob_state).normalized();
    r.fidelity = std::abs(psi.normalized().dot(r.corrected));
    return r;
}

// the four measurement matchings of the braided protocol: pattern t on the
// top qubit (points 4..7) and pattern b on the bottom qubit (points 0..3)
PlanarMatching outcome_matching(int top, int bottom) {
    auto pattern = [](int bit, int off, std::vector<int>& partner) {
        if (bit == 0) {
            partner[off] = off + 1, partner[off + 1] = off;
            partner[off + 2] = off + 3, partner[off + 3] = off + 2;
        } else {
            partner[off] = off + 3, partner[off + 3] = off;
            partner[off + 1] = off + 2, partner[off + 2] = off + 1;
        }
    };
    std::vector<int> partner(8, -1);
    pattern(bottom, 0, partner);
    pattern(top, 4, partner);
    return PlanarMatching(std::move(partner));
}

}  // namespace

GateSet GateSet::standard() {
    GateSet g;
    g.I = Eigen::Matrix2cd::Identity();
    g.X << 0, 1, 1, 0;
    g.Z << 1, 0, 0, -1;
    g.H << 1, 1, 1, -1;
    g.H /= std::sqrt(2.0);
    return g;
}

std::pair<int, int> BellBasis::correction_bits(int label) {
    switch (label) {
        case 0: return {0, 0};  // Phi+
        case 1: return {1, 0};  // Phi-
        case 2: return {0, 1};  // Psi+
        case 3: return {1, 1};  // Psi-
        default: throw std::invalid_argument("Bell label must be 0..3");
    }
}

BellBasis bell_basis(const NumericParams& params) {
    const double d = params.d_value;
    if (std::abs(d * d - 1.0) < 1e-9)
        throw std::invalid_argument("degenerate parameters: d^2 = 1");
    BellBasis b;
    const double s = 1.0 / std::sqrt(2.0);
    b.states[0] << s, 0, 0, s;
    b.states[1] << s, 0, 0, -s;
    b.states[2] << 0, s, s, 0;
    b.states[3] << 0, s, -s, 0;

    // the normalized ladder diagram must expand to Phi+
    std::vector<int> rainbow{7, 6, 5, 4, 3, 2, 1, 0};
    auto coef = expand_qubit_parties(DiagramState::single(PlanarMatching(rainbow)), 2);
    Eigen::Vector4cd ladder;
    for (int i = 0; i < 4; ++i) ladder(i) = coef[i].eval(params);
    ladder.normalize();
    if ((ladder - b.states[0]).norm() > 1e-9)
        throw std::logic_error("ladder diagram does not reproduce Phi+");
    return b;
}

nlohmann::json TeleportResult::to_json() const {
    auto vec = [](const Eigen::Vector2cd& v) {
        return nlohmann::json{{v(0).real(), v(0).imag()}, {v(1).real(), v(1).imag()}};
    };
    return {{"bell_label", bell_label},
            {"probability", probability},
            {"bob_state", vec(bob_state)},
            {"corrected", vec(corrected)},
            {"fidelity", fidelity}};
}

TeleportResult teleport(const Eigen::Vector2cd& psi, int bell_label,
                        const NumericParams& params) {
    BellBasis bell = bell_basis(params);
    Eigen::Vector2cd bob = project_alice(psi.normalized(), bell.states[bell_label],
                                         bell.states[0]);
    auto [a, b] = BellBasis::correction_bits(bell_label);
    GateSet g = GateSet::standard();
    Eigen::Matrix2cd corr = Eigen::Matrix2cd::Identity();
    if (b) corr = g.X * corr;
    if (a) corr = g.Z * corr;
    return finish_teleport(psi, bob, corr, bell_label);
}

TeleportResult teleport(const Eigen::Vector2cd& psi, const BraidWord& alice_braid,
                        const NumericParams& params) {
    BellBasis bell = bell_basis(params);
    Eigen::Matrix2cd u = qubit_braid_unitary(alice_braid, params);
    Eigen::Vector4cd mu;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            mu(2 * x + y) = u(x, y) / std::sqrt(2.0);  // (U x I) Phi+
    Eigen::Vector2cd bob = project_alice(psi.normalized(), mu, bell.states[0]);
    return finish_teleport(psi, bob, u, -1);
}

TeleportResult teleport_with_resource(const Eigen::Vector2cd& psi, int bell_label,
                                      const Eigen::Vector4cd& resource,
                                      const NumericParams& params) {
    BellBasis bell = bell_basis(params);
    Eigen::Vector2cd bob = project_alice(psi.normalized(), bell.states[bell_label],
                                         resource.normalized());
    auto [a, b] = BellBasis::correction_bits(bell_label);
    GateSet g = GateSet::standard();
    Eigen::Matrix2cd corr = Eigen::Matrix2cd::Identity();
    if (b) corr = g.X * corr;
    if (a) corr = g.Z * corr;
    return finish_teleport(psi, bob, corr, bell_label);
}

nlohmann::json DenseCodeResult::to_json() const {
    return {{"a", a},
            {"b", b},
            {"outcome_label", outcome_label},
            {"probabilities", probabilities}};
}

DenseCodeResult densecode_simple(int a, int b, const NumericParams& params) {
    BellBasis bell = bell_basis(params);
    GateSet g = GateSet::standard();
    Eigen::Matrix2cd enc = Eigen::Matrix2cd::Identity();
    if (b) enc = g.X * enc;
    if (a) enc = g.Z * enc;
    Eigen::Vector4cd state = apply_right(enc, bell.states[0]);
    DenseCodeResult r;
    int winner = -1;
    for (int i = 0; i < 4; ++i) {
        double p = std::norm(bell.states[i].dot(state));
        r.probabilities[i] = p;
        if (p > 0.5) winner = i;
    }
    if (winner < 0) throw std::logic_error("no deterministic dense-coding outcome");
    r.outcome_label = winner;
    auto [da, db] = BellBasis::correction_bits(winner);
    r.a = da;
    r.b = db;
    return r;
}

TLElement densecode_braided_state(int a, int b) {
    if ((a | b) > 1 || a < 0 || b < 0) throw std::invalid_argument("bits must be 0 or 1");
    TLElement state(0, 8);
    state.add_term(PlanarMatching({7, 6, 5, 4, 3, 2, 1, 0}), RationalFunc(1));

    BraidWord w;
    w.strands = 8;
    // Bob's encoding on the top qubit: a crosses its upper pair, b its lower
    if (a) w.letters.push_back(kBobSign * 7);
    if (b) w.letters.push_back(kBobSign * 5);
    // permutation analogue of H on the bottom (Alice's) qubit
    for (int g : {2, 1, 3, 2}) w.letters.push_back(kGateSign * g);
    // nonlocal permutation analogue of CNOT
    for (int g : {4, 1, 3, 5, 7, 2, 4, 6}) w.letters.push_back(kGateSign * g);
    return tl_multiply(state, braid_to_tl(w));
}

std::pair<int, int> densecode_braided(int a, int b) {
    TLElement fin = densecode_braided_state(a, b);
    std::pair<int, int> found{-1, -1};
    int hits = 0;
    for (int top = 0; top < 2; ++top)
        for (int bottom = 0; bottom < 2; ++bottom) {
            PlanarMatching m = outcome_matching(top, bottom);
            if (fin.terms().size() == 1 && fin.terms().begin()->first == m) {
                found = {top, bottom};
                ++hits;
            }
        }
    if (hits != 1)
        throw std::logic_error("braided dense-coding outcome is not a single cap diagram");
    return found;
}

}  // namespace knotqm
