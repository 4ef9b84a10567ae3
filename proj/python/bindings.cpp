// Python bindings: a thin JSON-string-oriented wrapper around the exact
// engine.  Structured results travel as JSON text and are decoded to dicts on
// the Python side (see knotqm/__init__.py).

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "knotqm/bracket.hpp"
#include "knotqm/entangle.hpp"
#include "knotqm/protocols.hpp"

namespace py = pybind11;
using namespace knotqm;
using nlohmann::json;

namespace {

DiagramState state_from_json(const std::string& text) {
    return DiagramState::from_json(json::parse(text));
}

BracketResult bracket_of(const std::string& braid, const std::string& pd, bool plat) {
    if (braid.empty() == pd.empty())
        throw std::invalid_argument("need exactly one of braid / pd");
    if (!braid.empty()) return bracket_of_braid_closure(BraidWord::parse(braid), plat);
    return kauffman_bracket(TangleDiagram::parse_pd(pd));
}

}  // namespace

PYBIND11_MODULE(_knotqm, m) {
    m.doc() = "exact Kauffman bracket / topological qubit engine";

    m.def("jones_q", [](const std::string& braid, const std::string& pd, bool plat) {
            return jones_q_string(bracket_of(braid, pd, plat).jones);
          },
          py::arg("braid") = "", py::arg("pd") = "", py::arg("plat") = false,
          "Jones polynomial in q, as a string");

    m.def("bracket_json", [](const std::string& braid, const std::string& pd, bool plat) {
            return bracket_of(braid, pd, plat).to_json().dump();
          },
          py::arg("braid") = "", py::arg("pd") = "", py::arg("plat") = false);

    m.def("markov_trace_str", [](const std::string& braid) {
            BraidWord w = BraidWord::parse(braid);
            return markov_trace(braid_representation(w), w.strands).str();
          },
          py::arg("braid"));

    m.def("braid_writhe",
          [](const std::string& braid) { return BraidWord::parse(braid).writhe(); });

    m.def("catalan", [](int n) { return catalan_number(n).get_str(); });

    m.def("entropy", [](const std::string& state_json, const std::string& party, double k) {
            DiagramState s = state_from_json(state_json);
            if (s.n_points % 2) throw std::invalid_argument("odd point count");
            NumericParams p = NumericParams::from_k(k);
            return von_neumann_entropy(
                reduced_density(s, party == "left" ? 0 : 1, s.n_points / 2, p));
          },
          py::arg("state_json"), py::arg("party") = "left", py::arg("k") = 1000.0);

    m.def("schmidt_rank", [](const std::string& state_json, double k) {
            DiagramState s = state_from_json(state_json);
            if (s.n_points % 2) throw std::invalid_argument("odd point count");
            return slocc_class(s, s.n_points / 2, NumericParams::from_k(k));
          },
          py::arg("state_json"), py::arg("k") = 1000.0);

    m.def("expand_qubits", [](const std::string& state_json) {
            DiagramState s = state_from_json(state_json);
            if (s.n_points % 4) throw std::invalid_argument("need 4 points per party");
            auto coef = expand_qubit_parties(s, s.n_points / 4);
            std::vector<std::string> out;
            out.reserve(coef.size());
            for (const auto& c : coef) out.push_back(c.str());
            return out;
          },
          py::arg("state_json"), "exact computational-basis coefficients, as strings");

    m.def("inequalities_json", [](const std::string& connectome_json) {
            Connectome c = Connectome::from_json(json::parse(connectome_json));
            c.validate();
            return check_inequalities(c).to_json().dump();
          },
          py::arg("connectome_json"));

    m.def("connectome_class_of", [](const std::string& connectome_json) {
            Connectome c = Connectome::from_json(json::parse(connectome_json));
            c.validate();
            return connectome_class(c);
          },
          py::arg("connectome_json"));

    m.def("teleport_json",
          [](std::complex<double> a, std::complex<double> b, int bell_label,
             const std::string& alice_braid, double k) {
              Eigen::Vector2cd psi;
              psi << a, b;
              if (psi.norm() < 1e-12) throw std::invalid_argument("zero input state");
              psi /= psi.norm();
              NumericParams p = NumericParams::from_k(k);
              TeleportResult r = alice_braid.empty()
                                     ? teleport(psi, bell_label, p)
                                     : teleport(psi, BraidWord::parse(alice_braid), p);
              return r.to_json().dump();
          },
          py::arg("a"), py::arg("b"), py::arg("bell_label") = 0, py::arg("alice_braid") = "",
          py::arg("k") = 1000.0);

    m.def("densecode_simple_json", [](int a, int b, double k) {
            return densecode_simple(a, b, NumericParams::from_k(k)).to_json().dump();
          },
          py::arg("a"), py::arg("b"), py::arg("k") = 1000.0);

    m.def("densecode_braided", [](int a, int b) { return densecode_braided(a, b); },
          py::arg("a"), py::arg("b"), "decoded (top, bottom) cap labels");
}
