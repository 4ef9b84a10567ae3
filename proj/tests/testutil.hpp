#pragma once

// Shared helpers for the test binaries: random braid words and an
// independent PD construction of an open braid tangle (free ends kept).

#include <map>
#include <random>
#include <vector>

#include "knotqm/diagram.hpp"

namespace knotqm::testutil {

inline BraidWord random_braid(std::mt19937& rng, int max_strands = 5, int max_len = 8,
                              int min_strands = 2) {
    std::uniform_int_distribution<int> nd(min_strands, max_strands);
    BraidWord w;
    w.strands = nd(rng);
    std::uniform_int_distribution<int> len(1, max_len), gen(1, w.strands - 1), sgn(0, 1);
    int l = len(rng);
    for (int i = 0; i < l; ++i) w.letters.push_back(gen(rng) * (sgn(rng) ? 1 : -1));
    return w;
}

// PD diagram of the braid itself (no closure): free ends are the bottom
// points left to right followed by the top points right to left, i.e. the
// circular boundary order of a rectangle diagram.
inline TangleDiagram open_braid_pd(const BraidWord& w) {
    w.validate();
    const int n = w.strands;
    TangleDiagram t;
    int next_edge = 1;
    std::vector<int> start(n), pos(n);
    for (int i = 0; i < n; ++i) start[i] = pos[i] = next_edge++;
    for (int g : w.letters) {
        int i = std::abs(g);
        int in_l = pos[i - 1], in_r = pos[i];
        int out_l = next_edge++, out_r = next_edge++;
        if (g > 0)
            t.crossings.push_back({{in_r, out_r, out_l, in_l}});
        else
            t.crossings.push_back({{in_l, in_r, out_r, out_l}});
        pos[i - 1] = out_l;
        pos[i] = out_r;
    }
    for (int i = 0; i < n; ++i) t.free_ends.push_back(start[i]);
    for (int i = n - 1; i >= 0; --i) t.free_ends.push_back(pos[i]);
    t.validate();
    return t;
}

// Rewrite a rectangle element (n bottom, n top, top indexed left to right)
// as a state on 2n circular boundary points matching open_braid_pd's order.
inline TLElement rect_to_state(const TLElement& x) {
    const int n = x.n_bottom();
    auto relabel = [n](int i) { return i < n ? i : n + (2 * n - 1 - i); };
    TLElement out(0, 2 * n);
    for (const auto& [m, c] : x.terms()) {
        std::vector<int> p(2 * n);
        for (int i = 0; i < 2 * n; ++i) p[relabel(i)] = relabel(m.partner(i));
        out.add_term(PlanarMatching(std::move(p)), c);
    }
    return out;
}

}  // namespace knotqm::testutil
