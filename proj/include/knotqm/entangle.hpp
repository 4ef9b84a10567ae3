#pragma once

// Entanglement analysis: Schmidt decomposition, reduced density operators
// (numeric and diagram-glued partial traces), von Neumann entropy, connectome
// surgery/classification, and line-count entropy inequalities.

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "knotqm/hilbert.hpp"

namespace knotqm {

// Boundary matching with the endpoints partitioned into labeled parties.
// d_power tracks the scalar d^power accrued by surgery cuts.
struct Connectome {
    std::vector<std::vector<int>> parties;
    PlanarMatching matching;
    int d_power = 0;

    int n_points() const { return matching.size(); }
    int party_of(int point) const;
    // lines running between parties a and b
    int cross_count(int a, int b) const;
    // lines leaving party a (party-vs-rest count)
    int cross_total(int a) const;
    // lines from the union of the given parties to everything else
    int cut_lines(const std::vector<int>& party_set) const;

    void validate() const;  // throws std::invalid_argument
    nlohmann::json to_json() const;
    static Connectome from_json(const nlohmann::json& j);
};

// the two-party (l, m) family: l caps inside each party, m cross lines
Connectome lm_connectome(int l, int m);

// the seven tripartite 4-point-party diagrams, numbered 1..7; parties are
// {0..3}, {4..7}, {8..11}
Connectome tripartite_connectome(int which);

struct SchmidtResult {
    std::vector<double> lambdas;  // descending, sum 1
    int rank = 0;
    Eigen::MatrixXcd coefficients;  // c_ij in the orthonormal party bases
};

// Schmidt decomposition across the cut (points 0..n_points_a-1 | rest)
SchmidtResult schmidt_decompose(const DiagramState& state, int n_points_a,
                                const NumericParams& params, double tolerance = 1e-9);

struct DensityOperator {
    int party = 0;  // 0 = left block, 1 = right block
    Eigen::MatrixXcd rho;
    bool normalized = false;
};

// Reduced density operator of one side of a bipartite state, computed both as
// the numeric partial trace of c c^dag and by gluing two copies of the state
// along the traced boundary; throws if the two paths disagree beyond 1e-7.
DensityOperator reduced_density(const DiagramState& state, int keep_party, int n_points_a,
                                const NumericParams& params, double tolerance = 1e-9);

// -sum lambda log lambda (natural log); requires a normalized operator
double von_neumann_entropy(const DensityOperator& rho);

// Repeatedly cut every party connected to the rest by exactly two lines
// (cap the pair inside, rejoin the two outside ends, factor 1/d); returns
// the fixed point.
Connectome surgery_reduce(const Connectome& c);

// "separable", "biseparable", or "GHZ" (all parties still connected after
// surgery; "entangled" for two parties)
std::string connectome_class(const Connectome& c);

// classify a diagram state over equal 4-point qubit parties: the connectome
// class when the state is a single matching, else "non-connectome superposition"
std::string classify_state(const DiagramState& state, const std::vector<std::vector<int>>& parties);

// Schmidt rank across the given cut
int slocc_class(const DiagramState& state, int n_points_a, const NumericParams& params,
                double tolerance = 1e-9);

struct ConnectomeEntropy {
    int lines = 0;       // m, cross lines of the party
    double exact = 0.0;  // log Catalan(m/2)
    double asymptotic = 0.0;  // m log 2
};

// entropy of one party of a surgery-reduced connectome; throws on odd m
ConnectomeEntropy connectome_entropy(const Connectome& c, int party);

// Entropy inequalities in integer line-count units over parties A = 0,
// B = 1, C = 2 (anything beyond acts as an environment).
struct InequalityReport {
    int n_a = 0, n_b = 0, n_c = 0;
    int n_ab = 0, n_bc = 0, n_ac = 0, n_abc = 0;
    int ell_ab = 0, ell_ac = 0;
    int subadditivity_slack = 0;  // n_a + n_b - n_ab, equals 2 ell_ab
    int ssa_slack = 0;            // n_ab + n_bc - n_b - n_abc, equals 2 ell_ac
    int monogamy_gap = 0;         // n_ab + n_bc + n_ac - n_a - n_b - n_c - n_abc
    bool subadditivity_ok = false;
    bool ssa_ok = false;
    bool monogamy_saturated = false;
    nlohmann::json to_json() const;
};

InequalityReport check_inequalities(const Connectome& c);

// exact computational-basis coefficients of the tripartite GHZ-class diagram
// (number 7): |000> + (1/sqrt(d^2-1)) |111>
std::vector<ExtScalar> tripartite_ghz_expand();

}  // namespace knotqm
