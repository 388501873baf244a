#include "comptype/decider.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace comptype {

namespace {

std::vector<Simplex> outside_facets(const Complex& l, const NMarker& n) {
    std::vector<Simplex> out;
    const Complex& sub = n.simplices();
    for (const Simplex& f : l.facets())
        if (!sub.contains(f)) out.push_back(f);
    return out;
}

void bump_modulus(Verdict& v, const std::optional<Int>& m) {
    if (m && (!v.witness_modulus || *m > *v.witness_modulus)) v.witness_modulus = *m;
}

}  // namespace

std::string FragmentClass::to_string() const {
    switch (kind) {
        case FragmentKind::Dim0:
            return "dim0";
        case FragmentKind::RelPure:
            return "rel_pure(" + std::to_string(pure_dim) + ")";
        case FragmentKind::LowDim:
            return "low_dim";
        case FragmentKind::AEOnly:
            return "almost_euclidean_only";
        case FragmentKind::NotAE:
            return "not_almost_euclidean";
    }
    return "?";
}

std::string truth_to_string(Truth t) {
    switch (t) {
        case Truth::True_:
            return "TRUE";
        case Truth::False_:
            return "FALSE";
        case Truth::Unknown:
            return "UNKNOWN";
    }
    return "?";
}

FragmentClass classify_fragment(const Complex& l, const NMarker& n) {
    const int d = l.dim();
    if (d <= 0) return {FragmentKind::Dim0, -1};
    bool all_exact = true;
    bool all_positive = true;
    for (const Simplex& f : outside_facets(l, n)) {
        const int fd = static_cast<int>(f.size()) - 1;
        if (fd < 1) all_positive = false;
        if (fd != d) all_exact = false;
    }
    if (all_exact) return {FragmentKind::RelPure, d};
    if (all_positive && d <= 3) return {FragmentKind::LowDim, -1};
    if (all_positive) return {FragmentKind::AEOnly, -1};
    return {FragmentKind::NotAE, -1};
}

Verdict cone_pair_surjection(const Complex& l, const NMarker& n_in) {
    NMarker n = n_in;
    Verdict v;
    v.fragment = classify_fragment(l, n);

    // (i) Empty link: the cone is a point and the pair is ({pt}, {pt}).
    if (l.empty()) {
        v.value = Truth::True_;
        return v;
    }

    // (ii) Tip marker: C({pt}, tip) is the interval with both endpoints;
    // over a larger link the tip point relaxes to the empty subcomplex.
    if (n.kind == NKind::Tip) {
        if (l.vertices().size() == 1) {
            v.value = Truth::True_;
            return v;
        }
        n = NMarker::empty();
    }

    // (iii) Discrete link: decide on the explicit cone graph, where the
    // question is covered by the low-dimension equivalence.
    if (l.dim() == 0) {
        const VertexId apex = fresh_vertex(l, "c");
        const Complex cl = cone(l, apex);
        std::vector<Simplex> afacets = l.facets();
        if (n.kind == NKind::Sub) {
            for (const Simplex& s : cone(n.sub, apex).facets()) afacets.push_back(s);
        }
        const Pair cp{cl, Complex::from_facets(afacets)};
        for (const VertexId w : l.vertices()) {
            if (n.kind == NKind::Sub && n.sub.contains_vertex(w)) continue;
            const TCycleResult r = cycle_membership_T(cp, make_simplex({apex, w}));
            ++v.facets_tested;
            if (!r.member)
                v.witnesses.push_back(
                    {make_simplex({w}),
                     "the cone edge over this vertex lies on no relative cycle of the cone graph"});
            else
                bump_modulus(v, r.witness_modulus);
        }
        v.value = v.witnesses.empty() ? Truth::True_ : Truth::False_;
        return v;
    }

    // (vi) Outside the almost-Euclidean hypothesis nothing is proved either way.
    if (v.fragment.kind == FragmentKind::NotAE) {
        for (const Simplex& f : outside_facets(l, n))
            if (f.size() < 2)
                v.witnesses.push_back(
                    {f, "isolated maximal vertex outside N: the link is not almost Euclidean"});
        v.value = Truth::Unknown;
        return v;
    }

    // (iv)/(v) Test every facet outside N on the link pair itself.
    const Pair lp{l, n.simplices()};
    std::vector<FacetWitness> failing;
    for (const Simplex& f : outside_facets(l, n)) {
        const TCycleResult r = cycle_membership_T(lp, f);
        ++v.facets_tested;
        if (!r.member)
            failing.push_back(
                {f, "no relative cycle over the circle group gives this facet a nonzero "
                    "coefficient"});
        else
            bump_modulus(v, r.witness_modulus);
    }
    if (failing.empty()) {
        v.value = Truth::True_;
        return v;
    }
    if (v.fragment.kind == FragmentKind::AEOnly) {
        // The cycle test is sufficient but not necessary here, so a failure
        // does not refute the surjection property.
        for (FacetWitness& w : failing)
            w.reason =
                "cycle test failed, but outside the equivalence fragments it is only a "
                "sufficient condition";
        v.witnesses = std::move(failing);
        v.value = Truth::Unknown;
        return v;
    }
    v.witnesses = std::move(failing);
    v.value = Truth::False_;
    return v;
}

TypeDecision computable_type(const Pair& p, bool parallel) {
    validate_pair(p);
    if (p.x.empty()) throw std::invalid_argument("computable_type: X must be nonempty");
    const std::vector<VertexId> verts = p.x.vertices();
    const size_t nv = verts.size();

    std::vector<std::optional<Verdict>> res(nv);
    auto analyze = [&](size_t i) {
        const LinkPair lp = link_pair(p, verts[i]);
        return cone_pair_surjection(lp.link, lp.n);
    };

    if (!parallel || nv < 2) {
        for (size_t i = 0; i < nv; ++i) res[i] = analyze(i);
    } else {
        const unsigned hw = std::thread::hardware_concurrency();
        const size_t nthreads = std::min<size_t>(hw ? hw : 2, nv);
        std::atomic<size_t> next{0};
        std::vector<std::exception_ptr> errors(nv);
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (size_t t = 0; t < nthreads; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    const size_t i = next.fetch_add(1);
                    if (i >= nv) return;
                    try {
                        res[i] = analyze(i);
                    } catch (...) {
                        errors[i] = std::current_exception();
                    }
                }
            });
        for (std::thread& th : pool) th.join();
        for (const std::exception_ptr& e : errors)
            if (e) std::rethrow_exception(e);
    }

    TypeDecision out;
    bool any_false = false;
    bool all_true = true;
    out.links.reserve(nv);
    for (size_t i = 0; i < nv; ++i) {
        const Verdict& v = *res[i];
        if (v.value == Truth::False_) any_false = true;
        if (v.value != Truth::True_) all_true = false;
        out.links.push_back({verts[i], v});
    }
    out.value = any_false ? Truth::False_ : (all_true ? Truth::True_ : Truth::Unknown);
    return out;
}

namespace {

struct TrailGraph {
    std::vector<Simplex> edges;
    std::map<VertexId, std::vector<std::pair<VertexId, int>>> adj;
};

TrailGraph trail_graph(const Complex& g) {
    TrailGraph t;
    t.edges = g.k_simplices(1);
    for (size_t i = 0; i < t.edges.size(); ++i) {
        t.adj[t.edges[i][0]].push_back({t.edges[i][1], static_cast<int>(i)});
        t.adj[t.edges[i][1]].push_back({t.edges[i][0], static_cast<int>(i)});
    }
    return t;
}

bool reaches_avoiding(const TrailGraph& t, VertexId from, VertexId to, int banned_edge) {
    std::set<VertexId> seen{from};
    std::vector<VertexId> stack{from};
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        if (v == to) return true;
        auto it = t.adj.find(v);
        if (it == t.adj.end()) continue;
        for (const auto& [w, j] : it->second)
            if (j != banned_edge && seen.insert(w).second) stack.push_back(w);
    }
    return false;
}

}  // namespace

std::map<Simplex, bool, SimplexLess> graph_edge_criterion_oracle(
    const Complex& g, const std::vector<VertexId>& a) {
    if (g.dim() > 1)
        throw std::invalid_argument("graph_edge_criterion_oracle: complex has dimension > 1");
    for (const VertexId v : a)
        if (!g.contains_vertex(v))
            throw std::invalid_argument("graph_edge_criterion_oracle: " + v.token() +
                                        " is not a vertex of the graph");
    const TrailGraph t = trail_graph(g);
    const size_t ne = t.edges.size();
    if (!a.empty() && ne > 16)
        throw std::invalid_argument("graph_edge_criterion_oracle: too many edges for "
                                    "exhaustive trail search");

    std::vector<bool> qualifies(ne, false);
    for (size_t i = 0; i < ne; ++i)
        if (reaches_avoiding(t, t.edges[i][0], t.edges[i][1], static_cast<int>(i)))
            qualifies[i] = true;

    // Enumerate every edge-simple trail from each a-vertex; a trail ending in
    // a marks all its edges as lying on an admissible path.
    const std::set<VertexId> aset(a.begin(), a.end());
    for (const VertexId start : aset) {
        std::set<std::pair<VertexId, unsigned>> seen;
        std::vector<std::pair<VertexId, unsigned>> stack{{start, 0u}};
        seen.insert(stack[0]);
        while (!stack.empty()) {
            const auto [v, used] = stack.back();
            stack.pop_back();
            if (aset.count(v))
                for (size_t i = 0; i < ne; ++i)
                    if (used & (1u << i)) qualifies[i] = true;
            auto it = t.adj.find(v);
            if (it == t.adj.end()) continue;
            for (const auto& [w, j] : it->second) {
                if (used & (1u << j)) continue;
                const std::pair<VertexId, unsigned> s{w, used | (1u << j)};
                if (seen.insert(s).second) stack.push_back(s);
            }
        }
    }

    std::map<Simplex, bool, SimplexLess> out;
    for (size_t i = 0; i < ne; ++i) out[t.edges[i]] = qualifies[i];
    return out;
}

namespace {

// The homological route on a graph pair (g, a) deletes a-edges as columns and
// a-vertices as rows, so it matches the combinatorial criterion on the graph
// without the a-edges, with the a-vertices as admissible endpoints.
void check_graph_pair(const Pair& gp, const std::string& where,
                      std::vector<std::string>& out) {
    std::vector<Simplex> kept = gp.x.k_simplices(0);
    for (const Simplex& e : gp.x.k_simplices(1))
        if (!gp.a.contains(e)) kept.push_back(e);
    const Complex stripped = Complex::from_facets(kept);
    const std::map<Simplex, bool, SimplexLess> oracle =
        graph_edge_criterion_oracle(stripped, gp.a.vertices());
    for (const Simplex& e : gp.x.k_simplices(1)) {
        if (gp.a.contains(e)) continue;
        const bool hom = cycle_membership_T(gp, e).member;
        const auto mod2 = cycle_membership_mod(gp, e, 2);
        const bool comb = oracle.at(e);
        if (hom != comb || mod2.has_value() != comb) {
            std::ostringstream msg;
            msg << where << ": edge " << simplex_to_string(e) << " circle-test="
                << (hom ? "true" : "false") << " mod2=" << (mod2 ? "true" : "false")
                << " combinatorial=" << (comb ? "true" : "false");
            out.push_back(msg.str());
        }
    }
}

void check_coefficients(const Pair& lp, const Simplex& f, const std::string& where,
                        std::vector<std::string>& out) {
    const bool z = cycle_membership_Z(lp, f);
    const TCycleResult t = cycle_membership_T(lp, f);
    if (z != (t.member && !t.witness_modulus)) {
        out.push_back(where + ": facet " + simplex_to_string(f) +
                      ": integral membership must coincide with the rational-kernel route");
        return;
    }
    if (t.member && t.witness_modulus &&
        !cycle_membership_mod(lp, f, *t.witness_modulus)) {
        out.push_back(where + ": facet " + simplex_to_string(f) + ": witness modulus " +
                      t.witness_modulus->get_str() + " does not verify");
    }
    if (!t.member) {
        for (int k = 2; k <= 30; ++k)
            if (cycle_membership_mod(lp, f, k)) {
                out.push_back(where + ": facet " + simplex_to_string(f) +
                              ": circle test is false but a mod-" + std::to_string(k) +
                              " cycle exists");
                return;
            }
    }
}

}  // namespace

std::vector<std::string> oracle_disagreements(const Pair& p) {
    validate_pair(p);
    std::vector<std::string> out;
    for (const VertexId v : p.x.vertices()) {
        const LinkPair lp = link_pair(p, v);
        const std::string where = "link of " + v.token();
        NMarker n = lp.n;
        if (lp.link.empty()) continue;
        if (n.kind == NKind::Tip) {
            if (lp.link.vertices().size() == 1) continue;
            n = NMarker::empty();
        }
        if (lp.link.dim() == 0) {
            const VertexId apex = fresh_vertex(lp.link, "c");
            std::vector<Simplex> afacets = lp.link.facets();
            if (n.kind == NKind::Sub)
                for (const Simplex& s : cone(n.sub, apex).facets()) afacets.push_back(s);
            const Pair cp{cone(lp.link, apex), Complex::from_facets(afacets)};
            check_graph_pair(cp, where + " (cone graph)", out);
            for (const VertexId w : lp.link.vertices())
                if (!(n.kind == NKind::Sub && n.sub.contains_vertex(w)))
                    check_coefficients(cp, make_simplex({apex, w}), where, out);
            continue;
        }
        const Pair pair_l{lp.link, n.simplices()};
        if (lp.link.dim() == 1) check_graph_pair(pair_l, where, out);
        for (const Simplex& f : lp.link.facets())
            if (!n.simplices().contains(f) && f.size() >= 2)
                check_coefficients(pair_l, f, where, out);
    }
    return out;
}

}  // namespace comptype
