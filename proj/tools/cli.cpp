// knotqm command-line front end: bracket/jones evaluation, Markov traces,
// Hilbert-space tools (gram/expand/entropy/slocc), connectome inequalities,
// the teleportation and dense-coding protocols, and a bench harness comparing
// the skein recursion against the matrix-trace path.

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "knotqm/bracket.hpp"
#include "knotqm/entangle.hpp"
#include "knotqm/protocols.hpp"

using namespace knotqm;
using nlohmann::json;

namespace {

// thrown for malformed inputs (flag values, files, JSON) -> exit 2
struct ParseFail : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& arg) {
    std::ifstream in(arg);
    if (!in.good()) return arg;  // not a file: treat as inline text
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

BraidWord load_braid(const std::string& arg) {
    try {
        BraidWord w = BraidWord::parse(slurp(arg));
        w.validate();
        return w;
    } catch (const std::exception& e) {
        throw ParseFail(std::string("bad braid word: ") + e.what());
    }
}

TangleDiagram load_pd(const std::string& arg) {
    try {
        TangleDiagram t = TangleDiagram::parse_pd(slurp(arg));
        t.validate();
        return t;
    } catch (const std::exception& e) {
        throw ParseFail(std::string("bad PD code: ") + e.what());
    }
}

DiagramState load_state(const std::string& arg) {
    try {
        return DiagramState::from_json(json::parse(slurp(arg)));
    } catch (const std::exception& e) {
        throw ParseFail(std::string("bad state file: ") + e.what());
    }
}

Connectome load_connectome(const std::string& arg) {
    try {
        Connectome c = Connectome::from_json(json::parse(slurp(arg)));
        c.validate();
        return c;
    } catch (const std::exception& e) {
        throw ParseFail(std::string("bad connectome file: ") + e.what());
    }
}

struct ParamFlags {
    double k = 1000.0;
    double theta = 0.0;
    bool theta_set = false;
};

void add_param_flags(CLI::App* cmd, ParamFlags& p) {
    cmd->add_option("--k", p.k, "Chern-Simons level (non-integer allowed)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--theta", p.theta, "deformation angle (overrides --k)")
        ->each([&p](const std::string&) { p.theta_set = true; });
}

NumericParams resolve(const ParamFlags& p) {
    return p.theta_set ? NumericParams::from_theta(p.theta) : NumericParams::from_k(p.k);
}

// integer k truncates the theory: n-point spaces with n > k lose rank
void warn_truncation(const ParamFlags& p, int n_points) {
    if (p.theta_set) return;
    if (std::abs(p.k - std::round(p.k)) > 1e-12) return;
    if (n_points > p.k)
        std::cerr << "warning: " << n_points << "-point space exceeds the integer level k = "
                  << static_cast<long>(std::round(p.k))
                  << "; the theory is truncated and ranks collapse\n";
}

BracketResult run_bracket(const std::string& braid, const std::string& pd,
                          const std::string& closure) {
    if (braid.empty() == pd.empty()) throw ParseFail("need exactly one of --braid / --pd");
    if (!braid.empty()) return bracket_of_braid_closure(load_braid(braid), closure == "plat");
    return kauffman_bracket(load_pd(pd));
}

std::string fmt(double x) {
    std::ostringstream ss;
    ss.precision(12);
    ss << x;
    return ss.str();
}

json state_trace(const TeleportResult& r, const Eigen::Vector2cd& psi) {
    json j = r.to_json();
    j["input"] = {psi(0).real(), psi(0).imag(), psi(1).real(), psi(1).imag()};
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"exact Kauffman-bracket / topological-qubit toolkit"};
    app.require_subcommand(1);

    std::string braid, pd, state_arg, connectome_arg;
    std::string closure = "trace", party = "left", family = "torus", psi_arg;
    ParamFlags params;
    bool as_json = false, braided = false;
    int n_points = 4, parties = 0, bell = -1, bit_a = 0, bit_b = 0;
    int budget = 10, max_crossings = 10, samples = 50;
    unsigned seed = 0;

    auto* c_bracket = app.add_subcommand("bracket", "raw bracket / Jones data of a diagram");
    c_bracket->add_option("--braid", braid);
    c_bracket->add_option("--pd", pd);
    c_bracket->add_option("--closure", closure)->check(CLI::IsMember({"trace", "plat"}));

    auto* c_jones = app.add_subcommand("jones", "Jones polynomial in the variable q");
    c_jones->add_option("--braid", braid);
    c_jones->add_option("--pd", pd);
    c_jones->add_option("--closure", closure)->check(CLI::IsMember({"trace", "plat"}));
    c_jones->add_flag("--json", as_json);

    auto* c_trace = app.add_subcommand("trace", "Markov trace of the R-matrix representation");
    c_trace->add_option("--braid", braid);
    c_trace->add_option("--budget", budget, "max strands for the 2^n representation");
    c_trace->add_flag("--json", as_json);

    auto* c_gram = app.add_subcommand("gram", "cap-basis Gram matrix of the n-point space");
    c_gram->add_option("--n", n_points)->check(CLI::PositiveNumber);
    add_param_flags(c_gram, params);
    c_gram->add_flag("--json", as_json);

    auto* c_expand = app.add_subcommand("expand", "computational-basis expansion over qubit parties");
    c_expand->add_option("--state", state_arg)->required();
    c_expand->add_option("--parties", parties);
    add_param_flags(c_expand, params);
    c_expand->add_flag("--json", as_json);

    auto* c_entropy = app.add_subcommand("entropy", "entanglement entropy of one party");
    c_entropy->add_option("--state", state_arg)->required();
    c_entropy->add_option("--party", party)->check(CLI::IsMember({"left", "right"}));
    add_param_flags(c_entropy, params);
    c_entropy->add_flag("--json", as_json);

    auto* c_slocc = app.add_subcommand("slocc", "Schmidt rank (SLOCC class) across the middle cut");
    c_slocc->add_option("--state", state_arg)->required();
    add_param_flags(c_slocc, params);
    c_slocc->add_flag("--json", as_json);

    auto* c_ineq = app.add_subcommand("ineq", "entropy inequalities of a connectome");
    c_ineq->add_option("--connectome", connectome_arg)->required();
    c_ineq->add_flag("--json", as_json);

    auto* c_tel = app.add_subcommand("teleport", "one-qubit teleportation run");
    c_tel->add_option("--bell", bell, "Bell measurement label 0..3");
    c_tel->add_option("--alice-braid", braid, "4-strand braid generating the measurement state");
    c_tel->add_option("--psi", psi_arg, "input qubit as re0,im0,re1,im1");
    c_tel->add_option("--seed", seed, "draw a random input qubit instead");
    add_param_flags(c_tel, params);

    auto* c_dense = app.add_subcommand("densecode", "two-bit dense coding run");
    c_dense->add_option("--a", bit_a)->check(CLI::Range(0, 1));
    c_dense->add_option("--b", bit_b)->check(CLI::Range(0, 1));
    c_dense->add_flag("--braided", braided, "use the 8-point braided protocol");
    add_param_flags(c_dense, params);

    auto* c_bench = app.add_subcommand("bench", "skein vs matrix-trace timing CSV");
    c_bench->add_option("--family", family)->check(CLI::IsMember({"torus", "random", "none"}));
    c_bench->add_option("--max-crossings", max_crossings)->check(CLI::Range(0, 20));
    c_bench->add_option("--samples", samples)->check(CLI::Range(0, 10000));
    c_bench->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints usage / error text
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    if (c_bracket->parsed()) {
        std::cout << run_bracket(braid, pd, closure).to_json().dump(2) << "\n";
    } else if (c_jones->parsed()) {
        BracketResult r = run_bracket(braid, pd, closure);
        if (as_json)
            std::cout << json{{"jones_q", jones_q_string(r.jones)},
                              {"jones_A", r.jones.to_json()},
                              {"writhe", r.writhe}}
                             .dump(2)
                      << "\n";
        else
            std::cout << jones_q_string(r.jones) << "\n";
    } else if (c_trace->parsed()) {
        if (braid.empty()) throw ParseFail("trace needs --braid");
        BraidWord w = load_braid(braid);
        LaurentPoly tr = markov_trace(braid_representation(w, budget), w.strands);
        if (as_json)
            std::cout << json{{"trace", tr.to_json()}}.dump(2) << "\n";
        else
            std::cout << tr.str() << "\n";
    } else if (c_gram->parsed()) {
        if (n_points % 2) throw ParseFail("--n must be even");
        warn_truncation(params, n_points);
        GramData g = gram_matrix(n_points, resolve(params));
        if (as_json)
            std::cout << json{{"n_points", g.n_points},
                              {"dimension", g.basis.size()},
                              {"rank", g.numeric_rank},
                              {"gram", g.gram.to_json()}}
                             .dump(2)
                      << "\n";
        else
            std::cout << "dimension " << g.basis.size() << ", numeric rank " << g.numeric_rank
                      << "\n";
    } else if (c_expand->parsed()) {
        DiagramState s = load_state(state_arg);
        int p = parties > 0 ? parties : s.n_points / 4;
        if (s.n_points != 4 * p) throw ParseFail("state size is not 4 points per party");
        warn_truncation(params, s.n_points);
        auto coef = expand_qubit_parties(s, p);
        NumericParams np = resolve(params);
        json arr = json::array();
        for (size_t i = 0; i < coef.size(); ++i) {
            if (coef[i].is_zero() && !as_json) continue;
            std::complex<double> v = coef[i].eval(np);
            if (as_json)
                arr.push_back({{"index", i}, {"coefficient", coef[i].str()},
                               {"numeric", {v.real(), v.imag()}}});
            else {
                std::string bits;
                for (int q = p - 1; q >= 0; --q) bits += ((i >> q) & 1) ? '1' : '0';
                std::cout << "|" << bits << ">  " << coef[i].str() << "\n";
            }
        }
        if (as_json) std::cout << arr.dump(2) << "\n";
    } else if (c_entropy->parsed()) {
        DiagramState s = load_state(state_arg);
        if (s.n_points % 2) throw ParseFail("state has an odd number of points");
        warn_truncation(params, s.n_points / 2);
        DensityOperator rho =
            reduced_density(s, party == "left" ? 0 : 1, s.n_points / 2, resolve(params));
        double ent = von_neumann_entropy(rho);
        if (as_json)
            std::cout << json{{"entropy", ent}, {"party", party}}.dump(2) << "\n";
        else
            std::cout << fmt(ent) << "\n";
    } else if (c_slocc->parsed()) {
        DiagramState s = load_state(state_arg);
        if (s.n_points % 2) throw ParseFail("state has an odd number of points");
        warn_truncation(params, s.n_points / 2);
        int rank = slocc_class(s, s.n_points / 2, resolve(params));
        if (as_json)
            std::cout << json{{"schmidt_rank", rank}}.dump(2) << "\n";
        else
            std::cout << rank << "\n";
    } else if (c_ineq->parsed()) {
        InequalityReport r = check_inequalities(load_connectome(connectome_arg));
        std::cout << r.to_json().dump(2) << "\n";
    } else if (c_tel->parsed()) {
        Eigen::Vector2cd psi;
        if (!psi_arg.empty()) {
            std::replace(psi_arg.begin(), psi_arg.end(), ',', ' ');
            std::istringstream ss(psi_arg);
            double a, b, c, d;
            if (!(ss >> a >> b >> c >> d)) throw ParseFail("--psi wants re0,im0,re1,im1");
            psi << std::complex<double>(a, b), std::complex<double>(c, d);
            if (psi.norm() < 1e-12) throw ParseFail("--psi must be nonzero");
            psi /= psi.norm();
        } else {
            std::mt19937 rng(seed);
            std::normal_distribution<double> g;
            psi << std::complex<double>(g(rng), g(rng)), std::complex<double>(g(rng), g(rng));
            psi /= psi.norm();
        }
        NumericParams np = resolve(params);
        TeleportResult r = braid.empty() ? teleport(psi, bell < 0 ? 0 : bell, np)
                                         : teleport(psi, load_braid(braid), np);
        std::cout << state_trace(r, psi).dump(2) << "\n";
    } else if (c_dense->parsed()) {
        if (braided) {
            auto [top, bottom] = densecode_braided(bit_a, bit_b);
            std::cout << json{{"a", bit_a}, {"b", bit_b}, {"top", top}, {"bottom", bottom}}.dump(2)
                      << "\n";
        } else {
            std::cout << densecode_simple(bit_a, bit_b, resolve(params)).to_json().dump(2) << "\n";
        }
    } else if (c_bench->parsed()) {
        std::cout << "family,instance,crossings,skein_memo_ms,skein_plain_ms,trace_ms,agree\n";
        std::vector<std::pair<std::string, BraidWord>> cases;
        if (family == "torus") {
            for (int m = 1; m <= max_crossings; ++m) {
                BraidWord w{2, std::vector<int>(static_cast<size_t>(m), 1)};
                cases.emplace_back("torus_b1^" + std::to_string(m), w);
            }
        } else if (family == "random") {
            std::mt19937 rng(seed);
            std::uniform_int_distribution<int> gen(1, 2), sgn(0, 1);
            for (int i = 0; i < samples; ++i) {
                BraidWord w{3, {}};
                for (int j = 0; j < 8; ++j) w.letters.push_back(gen(rng) * (sgn(rng) ? 1 : -1));
                cases.emplace_back("random_" + std::to_string(i), w);
            }
        }
        bool all_agree = true;
        for (const auto& [name, w] : cases) {
            using clock = std::chrono::steady_clock;
            TangleDiagram t = braid_to_pd(w);
            auto t0 = clock::now();
            LaurentPoly memo = kauffman_bracket_raw(t, true);
            auto t1 = clock::now();
            LaurentPoly plain = kauffman_bracket_raw(t, false);
            auto t2 = clock::now();
            LaurentPoly tr = markov_trace(braid_representation(w), w.strands);
            auto t3 = clock::now();
            bool agree = memo == plain && memo == tr;
            all_agree = all_agree && agree;
            auto ms = [](clock::duration d) {
                return std::chrono::duration<double, std::milli>(d).count();
            };
            std::cout << family << "," << name << "," << w.letters.size() << "," << ms(t1 - t0)
                      << "," << ms(t2 - t1) << "," << ms(t3 - t2) << "," << (agree ? 1 : 0)
                      << "\n";
        }
        if (!all_agree) throw std::logic_error("bench method disagreement");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseFail& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
