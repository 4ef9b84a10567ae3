#include "knotqm/bracket.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

namespace knotqm {

namespace {

// Depth-first skein resolution over crossings in id order.  Connectivity of
// the partially resolved diagram lives in a copy-on-branch union-find over
// edge indices; a union of two already-connected edges closes a loop.
class SkeinSolver {
  public:
    SkeinSolver(const TangleDiagram& t, bool memoize) : memoize_(memoize) {
        for (const auto& x : t.crossings)
            for (int e : x.e)
                if (!eidx_.count(e)) eidx_.emplace(e, static_cast<int>(eidx_.size()));
        crossings_.reserve(t.crossings.size());
        for (const auto& x : t.crossings) {
            std::array<int, 4> c;
            for (int j = 0; j < 4; ++j) c[j] = eidx_.at(x.e[j]);
            crossings_.push_back(c);
        }
        // edges still relevant at step i: those appearing in crossings i..end
        const int n = static_cast<int>(crossings_.size());
        future_.assign(n + 1, {});
        std::vector<char> seen(eidx_.size(), 0);
        for (int i = n - 1; i >= 0; --i) {
            seen.assign(eidx_.size(), 0);
            for (int j = i; j < n; ++j)
                for (int e : crossings_[j])
                    if (!seen[e]) {
                        seen[e] = 1;
                        future_[i].push_back(e);
                    }
        }
    }

    LaurentPoly run() {
        std::vector<int> parent(eidx_.size());
        std::iota(parent.begin(), parent.end(), 0);
        return solve(0, parent);
    }

  private:
    static int find(std::vector<int>& p, int x) {
        while (p[x] != x) {
            p[x] = p[p[x]];
            x = p[x];
        }
        return x;
    }

    // returns true when a loop closes
    static bool unite(std::vector<int>& p, int a, int b) {
        a = find(p, a);
        b = find(p, b);
        if (a == b) return true;
        p[a] = b;
        return false;
    }

    LaurentPoly solve(int i, const std::vector<int>& parent) {
        if (i == static_cast<int>(crossings_.size())) return LaurentPoly(1);
        std::vector<int> key;
        if (memoize_) {
            // canonical connectivity of the still-relevant edges
            std::map<int, int> relabel;
            std::vector<int> p = parent;
            for (int e : future_[i]) {
                int r = find(p, e);
                auto it = relabel.emplace(r, static_cast<int>(relabel.size())).first;
                key.push_back(it->second);
            }
            auto hit = memo_.find({i, key});
            if (hit != memo_.end()) return hit->second;
        }
        const auto& c = crossings_[i];
        LaurentPoly total;
        const LaurentPoly d = LaurentPoly::loop_value();
        for (int smoothing = 0; smoothing < 2; ++smoothing) {
            std::vector<int> p = parent;
            int loops = 0;
            if (smoothing == 0) {
                // A: join (e0,e1) and (e2,e3)
                loops += unite(p, c[0], c[1]) ? 1 : 0;
                loops += unite(p, c[2], c[3]) ? 1 : 0;
            } else {
                // A^-1: join (e0,e3) and (e1,e2)
                loops += unite(p, c[0], c[3]) ? 1 : 0;
                loops += unite(p, c[1], c[2]) ? 1 : 0;
            }
            LaurentPoly w = LaurentPoly::monomial(smoothing == 0 ? 1 : -1);
            for (int l = 0; l < loops; ++l) w *= d;
            total += w * solve(i + 1, p);
        }
        if (memoize_) memo_.emplace(std::make_pair(i, std::move(key)), total);
        return total;
    }

    bool memoize_;
    std::map<int, int> eidx_;
    std::vector<std::array<int, 4>> crossings_;
    std::vector<std::vector<int>> future_;
    std::map<std::pair<int, std::vector<int>>, LaurentPoly> memo_;
};

}  // namespace

LaurentPoly kauffman_bracket_raw(const TangleDiagram& t, bool memoize) {
    if (!t.closed()) throw std::invalid_argument("raw bracket needs a closed diagram");
    t.validate();
    LaurentPoly raw = SkeinSolver(t, memoize).run();
    const LaurentPoly d = LaurentPoly::loop_value();
    for (int i = 0; i < t.extra_circles; ++i) raw *= d;
    return raw;
}

namespace {

BracketResult assemble(LaurentPoly raw, int writhe, bool oriented) {
    BracketResult r;
    r.raw = std::move(raw);
    r.writhe = writhe;
    r.oriented = oriented;
    r.normalized_unknot =
        r.raw.is_zero() ? LaurentPoly() : r.raw.divide_exact(LaurentPoly::loop_value());
    if (oriented) {
        // (-A^3)^(-w) = (-1)^w A^(-3w)
        r.jones = r.normalized_unknot.shifted(-3L * writhe);
        if (writhe % 2 != 0) r.jones = -r.jones;
    } else {
        r.jones = r.normalized_unknot;
    }
    return r;
}

}  // namespace

BracketResult kauffman_bracket(const TangleDiagram& t, bool memoize) {
    LaurentPoly raw = kauffman_bracket_raw(t, memoize);
    int writhe = 0;
    bool oriented = true;
    try {
        writhe = t.writhe();
    } catch (const std::invalid_argument&) {
        oriented = false;
    }
    return assemble(std::move(raw), writhe, oriented);
}

TLElement kauffman_bracket_tangle(const TangleDiagram& t) {
    if (t.closed()) throw std::invalid_argument("tangle bracket needs free ends");
    t.validate();
    const int nf = static_cast<int>(t.free_ends.size());

    std::map<int, int> eidx;
    auto intern = [&](int e) {
        return eidx.emplace(e, static_cast<int>(eidx.size())).first->second;
    };
    for (const auto& x : t.crossings)
        for (int e : x.e) intern(e);
    for (int e : t.free_ends) intern(e);

    TLElement result(0, nf);
    const LaurentPoly d = LaurentPoly::loop_value();
    const int nc = static_cast<int>(t.crossings.size());

    std::vector<int> parent(eidx.size());
    std::iota(parent.begin(), parent.end(), 0);

    std::function<int(std::vector<int>&, int)> find = [&](std::vector<int>& p, int x) {
        while (p[x] != x) {
            p[x] = p[p[x]];
            x = p[x];
        }
        return x;
    };

    std::function<void(int, std::vector<int>, LaurentPoly)> rec =
        [&](int i, std::vector<int> p, LaurentPoly weight) {
            if (i == nc) {
                // free ends sharing a class are the two ends of one strand
                std::map<int, std::vector<int>> by_class;
                for (int q = 0; q < nf; ++q)
                    by_class[find(p, eidx.at(t.free_ends[q]))].push_back(q);
                std::vector<int> partner(nf, -1);
                for (const auto& [root, qs] : by_class) {
                    if (qs.size() != 2)
                        throw std::logic_error("open strand without exactly two free ends");
                    partner[qs[0]] = qs[1];
                    partner[qs[1]] = qs[0];
                }
                for (int l = 0; l < t.extra_circles; ++l) weight *= d;
                result.add_term(PlanarMatching(std::move(partner)), RationalFunc(weight));
                return;
            }
            const auto& x = t.crossings[i];
            for (int smoothing = 0; smoothing < 2; ++smoothing) {
                std::vector<int> q = p;
                int loops = 0;
                auto unite = [&](int a, int b) {
                    a = find(q, eidx.at(a));
                    b = find(q, eidx.at(b));
                    if (a == b) { ++loops; return; }
                    q[a] = b;
                };
                if (smoothing == 0) {
                    unite(x.e[0], x.e[1]);
                    unite(x.e[2], x.e[3]);
                } else {
                    unite(x.e[0], x.e[3]);
                    unite(x.e[1], x.e[2]);
                }
                LaurentPoly w = weight * LaurentPoly::monomial(smoothing == 0 ? 1 : -1);
                for (int l = 0; l < loops; ++l) w *= d;
                rec(i + 1, std::move(q), std::move(w));
            }
        };
    rec(0, parent, LaurentPoly(1));
    return result;
}

BracketResult bracket_of_braid_closure(const BraidWord& w, bool plat) {
    TLElement x = braid_to_tl(w);
    if (plat) return assemble(plat_closure(x), 0, false);
    return assemble(markov_closure(x), w.writhe(), true);
}

LaurentPoly jones_in_q(const LaurentPoly& jones_in_A) {
    LaurentPoly q;
    for (const auto& [e, c] : jones_in_A.terms()) {
        if (e % 4 != 0) throw std::domain_error("Jones exponent not divisible by 4");
        q += LaurentPoly::monomial(-e / 4, c);
    }
    return q;
}

TangleDiagram mirror(const TangleDiagram& t) {
    TangleDiagram m = t;
    // swapping over/under = rotating the counterclockwise edge list by one
    for (auto& x : m.crossings) x.e = {x.e[1], x.e[2], x.e[3], x.e[0]};
    return m;
}

int linking_number(const TangleDiagram& t, int comp_a, int comp_b) {
    if (!t.closed()) throw std::invalid_argument("linking number needs a closed diagram");
    if (comp_a == comp_b) throw std::invalid_argument("components must differ");
    auto comp = t.components();
    bool seen_a = false, seen_b = false;
    for (const auto& [e, c] : comp) {
        seen_a |= (c == comp_a);
        seen_b |= (c == comp_b);
    }
    if (!seen_a || !seen_b) throw std::invalid_argument("unknown component id");
    auto signs = t.crossing_signs();
    int sum = 0;
    for (size_t i = 0; i < t.crossings.size(); ++i) {
        int cu = comp.at(t.crossings[i].e[0]);  // under strand
        int co = comp.at(t.crossings[i].e[1]);  // over strand
        if ((cu == comp_a && co == comp_b) || (cu == comp_b && co == comp_a)) sum += signs[i];
    }
    if (sum % 2 != 0) throw std::logic_error("odd inter-component crossing sum");
    return sum / 2;
}

nlohmann::json BracketResult::to_json() const {
    nlohmann::json j;
    j["raw"] = raw.to_json();
    j["writhe"] = writhe;
    j["oriented"] = oriented;
    j["normalized_unknot"] = normalized_unknot.to_json();
    j["jones_A"] = jones.to_json();
    bool div4 = true;
    for (const auto& [e, c] : jones.terms())
        if (e % 4 != 0) { div4 = false; break; }
    if (oriented && div4) {
        nlohmann::json terms = nlohmann::json::array();
        LaurentPoly q = jones_in_q(jones);
        for (const auto& [e, c] : q.terms())
            terms.push_back(nlohmann::json::array({e, c.get_str()}));
        j["jones_q"] = {{"variable", "q"}, {"terms", terms}};
    }
    return j;
}

}  // namespace knotqm
