#include "clusterkit/invariant.hpp"

#include <algorithm>

#include "clusterkit/polytope.hpp"

namespace clusterkit {

namespace {

Point scale_by_d(const std::vector<Int>& d, const std::vector<int>& g) {
    Point r(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) r[i] = d[i] * g[i];
    return r;
}

struct RootedData {
    YPolynomial F;
    std::vector<int> g;
};

// (g, F) of a monomial with respect to the pattern re-rooted at graph.seeds[at].
// The walk follows the reversed path root->at and then the path root->home,
// which is a valid path at->home in the n-regular tree.
RootedData rerooted_data(const ExchangeGraph& graph, const ClusterMonomial& u, int at) {
    std::size_t n = graph.rank();
    const Seed& t = graph.seeds[static_cast<std::size_t>(at)];
    ClusterPattern local(ExchangeMatrix::make(t.B, graph.pattern.root().D));
    Seed s = local.initial();
    for (auto it = t.path.rbegin(); it != t.path.rend(); ++it) s = local.mutate(s, *it);
    for (int k : graph.seeds[static_cast<std::size_t>(u.seed)].path) s = local.mutate(s, k);
    RootedData out;
    out.F = YPolynomial::constant(n, 1);
    out.g.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (u.h[i] == 0) continue;
        ClusterVariableId id = local.variable_id(s, static_cast<int>(i) + 1);
        for (std::size_t r = 0; r < n; ++r) out.g[r] += u.h[i] * id.g[r];
        out.F = mul(out.F, pow(id.F, u.h[i]));
    }
    return out;
}

}  // namespace

Int partial_f_invariant(const ExchangeGraph& graph, const ClusterMonomial& u,
                        const ClusterMonomial& v, int at) {
    if (at < 0 || static_cast<std::size_t>(at) >= graph.seeds.size())
        throw input_error("partial_f_invariant: bad vertex");
    if (u.g.size() != graph.rank() || v.g.size() != graph.rank())
        throw input_error("partial_f_invariant: rank mismatch");
    const std::vector<Int>& d = graph.pattern.root().D;
    if (at == 0) return tropical_eval(u.F, scale_by_d(d, v.g));
    RootedData ru = rerooted_data(graph, u, at);
    RootedData rv = rerooted_data(graph, v, at);
    return tropical_eval(ru.F, scale_by_d(d, rv.g));
}

FInvariantReport f_invariant(const ExchangeGraph& graph, const ClusterMonomial& u,
                             const ClusterMonomial& v) {
    const std::vector<Int>& d = graph.pattern.root().D;
    FInvariantReport rep;
    rep.left_part = partial_f_invariant(graph, u, v, 0);
    rep.right_part = partial_f_invariant(graph, v, u, 0);
    rep.value = rep.left_part + rep.right_part;
    rep.vertex_path = {};
    rep.D = d;
    // Vertex independence is a theorem, not an assumption: recheck the sum at
    // the home vertices of u and v (and they differ from the root in general).
    std::vector<int> check_at;
    if (u.seed != 0) check_at.push_back(u.seed);
    if (v.seed != 0 && v.seed != u.seed) check_at.push_back(v.seed);
    if (check_at.empty() && graph.seeds.size() > 1) check_at.push_back(1);
    for (int t : check_at) {
        Int other = partial_f_invariant(graph, u, v, t) + partial_f_invariant(graph, v, u, t);
        if (other != rep.value)
            throw invariant_error("F-invariant changed across vertices");
    }
    return rep;
}

bool is_compatible(const ExchangeGraph& graph, const ClusterMonomial& u, const ClusterMonomial& v,
                   int* witness) {
    FInvariantReport rep = f_invariant(graph, u, v);
    if (rep.value != 0) return false;
    std::vector<int> needed;
    for (const auto& [var, mult] : u.support) {
        (void)mult;
        needed.push_back(var);
    }
    for (const auto& [var, mult] : v.support) {
        (void)mult;
        if (std::find(needed.begin(), needed.end(), var) == needed.end()) needed.push_back(var);
    }
    std::vector<int> hits = graph.seeds_containing(needed);
    if (hits.empty()) {
        if (graph.is_finite())
            throw invariant_error("compatible monomials admit no common cluster");
        return true;  // cannot certify a witness on a capped graph
    }
    if (witness) *witness = hits.front();
    return true;
}

std::set<int> dominant_set(const ExchangeGraph& graph, const ClusterMonomial& u) {
    if (!graph.is_finite()) throw input_error("dominant_set: graph is not finite");
    const std::vector<Int>& d = graph.pattern.root().D;
    Point r = scale_by_d(d, u.g);
    std::set<int> dom;
    for (std::size_t z = 0; z < graph.variables.size(); ++z)
        if (tropical_eval(graph.variables[z].F, r) == 0) dom.insert(static_cast<int>(z));
    return dom;
}

std::set<int> dominant_set_of_seed(const ExchangeGraph& graph, int seed) {
    if (seed < 0 || static_cast<std::size_t>(seed) >= graph.seeds.size())
        throw input_error("dominant_set_of_seed: bad seed");
    return dominant_set(graph, make_monomial(graph, seed, std::vector<int>(graph.rank(), 1)));
}

}  // namespace clusterkit
