#pragma once

// Combinatorial core: braid words, planar matchings, the Temperley-Lieb
// diagram algebra (with loop evaluation), Jones-Wenzl projectors, and
// PD-code tangle diagrams.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "knotqm/poly.hpp"

namespace knotqm {

struct BraidWord {
    int strands = 1;
    std::vector<int> letters;  // nonzero, |g| <= strands-1; sign = handedness

    int writhe() const;
    BraidWord inverse() const;  // reversed word with flipped signs
    // text format: "n=<strands>: g1 g2 ..."
    static BraidWord parse(const std::string& text);
    std::string str() const;
    void validate() const;  // throws std::invalid_argument
};

// A fixed-point-free involution on 0..n-1.  Non-crossing only where the
// context demands it (TL terms, cap bases); connectomes of braids may cross.
class PlanarMatching {
  public:
    PlanarMatching() = default;
    explicit PlanarMatching(std::vector<int> partner);

    int size() const { return static_cast<int>(partner_.size()); }
    int partner(int i) const { return partner_.at(i); }
    const std::vector<int>& pairing() const { return partner_; }

    // non-crossing with points 0..n-1 in circular (equivalently line) order
    bool is_noncrossing() const;

    bool operator==(const PlanarMatching& o) const { return partner_ == o.partner_; }
    bool operator<(const PlanarMatching& o) const { return partner_ < o.partner_; }

  private:
    std::vector<int> partner_;
};

// All non-crossing perfect matchings on 2*n_pairs points, ordered
// lexicographically by partner sequence; count = Catalan(n_pairs).
std::vector<PlanarMatching> enumerate_matchings(int n_pairs);

Int catalan_number(int n);

// Formal linear combination of rectangle diagrams with n_bottom points
// (indices 0..nb-1, left to right) and n_top points (indices nb..nb+nt-1,
// left to right).  The circular boundary order runs bottom left->right then
// top right->left, which makes stacking index-preserving.
class TLElement {
  public:
    TLElement() : nb_(0), nt_(0) {}
    TLElement(int n_bottom, int n_top);

    static TLElement identity(int n);

    int n_bottom() const { return nb_; }
    int n_top() const { return nt_; }
    // square elements only
    int strands() const;
    const std::map<PlanarMatching, RationalFunc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const PlanarMatching& m, const RationalFunc& c);

    TLElement operator+(const TLElement& o) const;
    TLElement operator-(const TLElement& o) const;
    TLElement scaled(const RationalFunc& c) const;
    bool operator==(const TLElement& o) const;
    bool operator!=(const TLElement& o) const { return !(*this == o); }

    // rectangle non-crossing test for a candidate term
    bool noncrossing_in_rect(const PlanarMatching& m) const;

    // add one straight strand on the right of both boundaries
    TLElement embed_right() const;

    nlohmann::json to_json() const;
    static TLElement from_json(const nlohmann::json& j);

  private:
    int nb_, nt_;
    std::map<PlanarMatching, RationalFunc> terms_;
};

// u_i on n strands, 1 <= i <= n-1
TLElement tl_generator(int n, int i);

// stack x below y (glue x's top to y's bottom); closed loops -> factor d
TLElement tl_multiply(const TLElement& x, const TLElement& y);

// product over letters of A id + A^-1 u_i (positive) / A^-1 id + A u_i (negative)
TLElement braid_to_tl(const BraidWord& w);

// horizontal juxtaposition: y placed to the right of x on both boundaries
TLElement tl_tensor(const TLElement& x, const TLElement& y);

// connect top i to bottom i; every loop -> d.  Requires polynomial coefficients.
LaurentPoly markov_closure(const TLElement& x);
RationalFunc markov_closure_rational(const TLElement& x);

// cap neighboring pairs (0,1),(2,3),... on both boundaries
LaurentPoly plat_closure(const TLElement& x);

// Jones-Wenzl projector P_m (P_1 = id), exact RationalFunc coefficients
TLElement jones_wenzl(int m);

enum class Side { Top, Bottom };

// glue a cap onto (position, position+1) of the chosen side
TLElement cap_adjacent(const TLElement& x, Side side, int position);

// endpoint connectivity of a braid word: matching on 2n points (bottom i,
// top n + pi(i)), over/under data forgotten
PlanarMatching connectome_of(const BraidWord& w);

// --- PD-code tangles ------------------------------------------------------

struct Crossing {
    // incident edge labels, counterclockwise from the incoming under-strand
    std::array<int, 4> e;
};

struct TangleDiagram {
    std::vector<Crossing> crossings;
    std::vector<int> free_ends;            // boundary edges in order; empty = closed
    std::vector<int> flipped_components;   // edges whose component orientation is reversed
    int extra_circles = 0;                 // crossing-free circles alongside the PD data

    // PD text: lines "X(a,b,c,d)"; optional "O(edge,-)" flips that edge's
    // component orientation; optional "F(e1,e2,...)" declares free ends.
    static TangleDiagram parse_pd(const std::string& text);
    std::string str() const;

    bool closed() const { return free_ends.empty(); }
    void validate() const;

    // component id per edge label (edges joined through crossings)
    std::map<int, int> components() const;
    // signed crossing list using inferred orientations; throws if
    // orientation cannot be inferred
    std::vector<int> crossing_signs() const;
    int writhe() const;

    // endpoint connectivity, over/under forgotten (free ends in declared order)
    PlanarMatching connectome() const;
};

// trace (or plat) closure of a braid word as an explicit PD diagram
TangleDiagram braid_to_pd(const BraidWord& w, bool plat = false);

// connectome of a TL term set: only valid when all terms share one matching
PlanarMatching connectome_of(const TLElement& x);

}  // namespace knotqm
