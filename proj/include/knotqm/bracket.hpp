#pragma once

// Kauffman bracket / Jones polynomial by recursive skein resolution of PD
// tangles, plus the TL-transfer-matrix route for braid closures and the
// combinatorial linking number.

#include "knotqm/diagram.hpp"
#include "knotqm/poly.hpp"

namespace knotqm {

struct BracketResult {
    LaurentPoly raw;                // every loop contributes d, including the last
    int writhe = 0;
    LaurentPoly normalized_unknot;  // raw / d
    LaurentPoly jones;              // normalized * (-A^3)^(-writhe); equals
                                    // normalized_unknot when oriented == false
    bool oriented = true;

    nlohmann::json to_json() const;
};

// Raw bracket of a closed diagram.  Crossings are resolved in ascending id
// order; with memoize the branch tree is pruned on the canonical connectivity
// of the not-yet-resolved part.
LaurentPoly kauffman_bracket_raw(const TangleDiagram& t, bool memoize = true);

// Full result for a closed diagram.  If the PD edge labels do not determine
// an orientation the writhe/jones fields degrade as documented above.
BracketResult kauffman_bracket(const TangleDiagram& t, bool memoize = true);

// Skein resolution of a tangle with free ends: a state on the boundary
// points (in declared free-end order), loops evaluated to d.
TLElement kauffman_bracket_tangle(const TangleDiagram& t);

// Bracket of the trace (or plat) closure via the Temperley-Lieb image.
// Plat closures carry no orientation: oriented == false, writhe 0.
BracketResult bracket_of_braid_closure(const BraidWord& w, bool plat = false);

// A-form -> q-form by e |-> -e/4; throws std::domain_error unless every
// exponent is divisible by 4 (see jones_q_string for the general printer).
LaurentPoly jones_in_q(const LaurentPoly& jones_in_A);

// Swap every crossing's over/under strand.
TangleDiagram mirror(const TangleDiagram& t);

// Half the signed sum over crossings between two distinct components
// (component ids as returned by TangleDiagram::components).
int linking_number(const TangleDiagram& t, int comp_a, int comp_b);

}  // namespace knotqm
