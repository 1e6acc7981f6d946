#include "clusterkit/harness.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "clusterkit/bongartz.hpp"
#include "clusterkit/invariant.hpp"

namespace clusterkit {

namespace {

void compositions(const std::vector<std::size_t>& positions, std::size_t idx, int remaining,
                  std::vector<int>& h, std::size_t rank,
                  const std::function<void(const std::vector<int>&)>& emit) {
    if (idx == positions.size()) {
        emit(h);
        return;
    }
    for (int e = 0; e <= remaining; ++e) {
        h[positions[idx]] = e;
        compositions(positions, idx + 1, remaining - e, h, rank, emit);
    }
    h[positions[idx]] = 0;
}

// Independent confirmation route for a claimed polytope equality: support
// values sampled on all pairwise vertex-difference directions must agree.
bool equal_by_support_sampling(const LatticePolytope& p, const LatticePolytope& q) {
    std::vector<Point> verts = p.vertices();
    for (const auto& v : q.vertices()) verts.push_back(v);
    for (const auto& a : verts) {
        for (const auto& b : verts) {
            Point r(a.size());
            bool zero = true;
            for (std::size_t i = 0; i < a.size(); ++i) {
                r[i] = a[i] - b[i];
                if (r[i] != 0) zero = false;
            }
            if (zero) continue;
            if (support_function(p, r) != support_function(q, r)) return false;
        }
    }
    return true;
}

bool column_nonpositive(const IntMatrix& m, std::size_t j) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (m.at(i, j) > 0) return false;
    return true;
}

}  // namespace

std::vector<ClusterMonomial> enumerate_noninitial_monomials(const ExchangeGraph& graph,
                                                            int degree_cap) {
    if (!graph.is_finite()) throw input_error("enumerate_noninitial_monomials: graph not finite");
    if (degree_cap < 0) throw input_error("degree cap must be nonnegative");
    std::map<std::map<int, int>, ClusterMonomial> dedup;
    std::size_t n = graph.rank();
    for (std::size_t s = 0; s < graph.seeds.size(); ++s) {
        std::vector<std::size_t> positions;
        for (std::size_t i = 0; i < n; ++i)
            if (!graph.is_initial_variable(graph.var_of[s][i])) positions.push_back(i);
        if (positions.empty()) continue;
        std::vector<int> h(n, 0);
        compositions(positions, 0, degree_cap, h, n, [&](const std::vector<int>& exps) {
            int deg = 0;
            for (int e : exps) deg += e;
            if (deg == 0) return;
            ClusterMonomial m = make_monomial(graph, static_cast<int>(s), exps);
            dedup.emplace(m.support, std::move(m));
        });
    }
    std::vector<ClusterMonomial> out;
    out.reserve(dedup.size());
    for (auto& [key, m] : dedup) out.push_back(std::move(m));
    return out;
}

TheoremAReport verify_theorem_A(const ExchangeGraph& graph, int degree_cap) {
    TheoremAReport rep;
    rep.degree_cap = degree_cap;
    std::vector<ClusterMonomial> monomials = enumerate_noninitial_monomials(graph, degree_cap);
    rep.monomial_count = monomials.size();
    std::map<std::string, std::vector<ClusterMonomial>> classes;
    for (auto& m : monomials) {
        std::string key = newton_polytope(m.F).canonical_key();
        classes[key].push_back(std::move(m));
    }
    rep.class_count = classes.size();
    for (auto& [key, members] : classes) {
        if (members.size() == 1) continue;
        // Guard against an LP artifact before reporting: the collision must
        // survive both the mutual-containment test and support sampling.
        bool genuine = true;
        LatticePolytope first = newton_polytope(members.front().F);
        for (std::size_t i = 1; i < members.size(); ++i) {
            LatticePolytope other = newton_polytope(members[i].F);
            bool eq = equals(first, other);
            bool eq2 = equal_by_support_sampling(first, other);
            if (eq != eq2)
                throw invariant_error("polytope equality routes disagree");
            if (!eq) genuine = false;
        }
        if (!genuine)
            throw invariant_error("canonical polytope key collided on unequal polytopes");
        rep.suspects.push_back(PolytopeCollision{key, members});
    }
    rep.injective = rep.suspects.empty();
    return rep;
}

ReductionTrace reduce_pair(const ExchangeGraph& graph, const ClusterMonomial& u,
                           const ClusterMonomial& v) {
    if (!graph.is_finite()) throw input_error("reduce_pair: graph not finite");
    for (const auto& m : {u, v})
        for (const auto& [var, mult] : m.support) {
            (void)mult;
            if (graph.is_initial_variable(var))
                throw input_error("reduce_pair: monomial involves an initial variable");
        }
    if (!equals(newton_polytope(u.F), newton_polytope(v.F)))
        throw input_error("reduce_pair: Newton polytopes differ");

    const std::vector<Int>& d = graph.pattern.root().D;
    std::size_t n = graph.rank();
    ReductionTrace trace;
    ClusterMonomial cu = u, cv = v;

    auto fail = [&](std::string why) {
        trace.verdict = ReductionVerdict::counterexample_suspect;
        trace.detail = std::move(why);
        return trace;
    };

    while (!(cu.support.empty() && cv.support.empty())) {
        // (1) the product must stay a cluster monomial
        int witness = -1;
        if (!is_compatible(graph, cu, cv, &witness))
            return fail("product of equal-polytope monomials is not a cluster monomial");
        std::set<int> supp;
        for (const auto& [var, mult] : cu.support) {
            (void)mult;
            supp.insert(var);
        }
        for (const auto& [var, mult] : cv.support) {
            (void)mult;
            supp.insert(var);
        }
        std::size_t before = supp.size();

        // (2) left Bongartz completion of supp(uv)
        PartialCluster U = make_partial_cluster(graph, {supp.begin(), supp.end()});
        int s = left_bongartz_completion(graph, U).seed;
        auto hu = express_at(graph, cu, s);
        auto hv = express_at(graph, cv, s);
        if (!hu || !hv) return fail("completion cluster does not contain the support");

        // (3) a support position whose C-column is nonpositive; smallest wins
        int k = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (supp.count(graph.var_of[static_cast<std::size_t>(s)][i]) == 0) continue;
            if (column_nonpositive(graph.seeds[static_cast<std::size_t>(s)].C, i)) {
                k = static_cast<int>(i) + 1;
                break;
            }
        }
        if (k == 0) return fail("no support position with nonpositive C-column");

        // (4) exponents through the tropical evaluation at the mutated vertex
        Seed mutated = graph.pattern.mutate(graph.seeds[static_cast<std::size_t>(s)], k);
        ClusterVariableId entering = graph.pattern.variable_id(mutated, k);
        Point r(n);
        for (std::size_t i = 0; i < n; ++i) r[i] = d[i] * entering.g[i];
        Int val_u = tropical_eval(cu.F, r);
        Int val_v = tropical_eval(cv.F, r);
        const Int& dk = d[static_cast<std::size_t>(k - 1)];
        if (val_u % dk != 0 || val_v % dk != 0)
            return fail("tropical values are not multiples of the symmetrizer entry");
        Int ak = val_u / dk, bk = val_v / dk;
        if (ak != bk) return fail("cancelled exponents differ");
        if (ak != (*hu)[static_cast<std::size_t>(k - 1)] ||
            bk != (*hv)[static_cast<std::size_t>(k - 1)])
            return fail("tropical exponent disagrees with the direct exponent");
        if (ak <= 0) return fail("chosen position carries no positive exponent");

        // (5) cancel and recurse
        (*hu)[static_cast<std::size_t>(k - 1)] = 0;
        (*hv)[static_cast<std::size_t>(k - 1)] = 0;
        ClusterMonomial nu = make_monomial(graph, s, *hu);
        ClusterMonomial nv = make_monomial(graph, s, *hv);
        if (!equals(newton_polytope(nu.F), newton_polytope(nv.F)))
            return fail("polytope equality lost after cancellation");
        std::set<int> after_supp;
        for (const auto& [var, mult] : nu.support) {
            (void)mult;
            after_supp.insert(var);
        }
        for (const auto& [var, mult] : nv.support) {
            (void)mult;
            after_supp.insert(var);
        }
        if (after_supp.size() >= before) return fail("support did not shrink");

        ReductionStep step;
        step.completion_path = graph.seeds[static_cast<std::size_t>(s)].path;
        step.k = k;
        step.exponent = ak;
        step.support_before = before;
        step.support_after = after_supp.size();
        trace.steps.push_back(std::move(step));
        cu = std::move(nu);
        cv = std::move(nv);
    }
    trace.verdict = ReductionVerdict::equal;
    return trace;
}

IdentityReport verify_identities(const ExchangeGraph& graph, unsigned rng_seed,
                                 int random_rounds) {
    if (!graph.is_finite()) throw input_error("verify_identities: graph not finite");
    IdentityReport rep;
    const std::vector<Int>& d = graph.pattern.root().D;
    std::size_t n = graph.rank();
    rep.seeds = graph.seeds.size();

    for (const auto& s : graph.seeds) {
        // duality
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Int sum = 0;
                for (std::size_t l = 0; l < n; ++l) sum += s.G.at(l, i) * d[l] * s.C.at(l, j);
                if (sum != (i == j ? d[i] : Int(0))) {
                    ok = false;
                    break;
                }
            }
        ++rep.duality.checked;
        if (!ok) ++rep.duality.failed;
        // sign coherence
        bool coherent = true;
        for (std::size_t j = 0; j < n; ++j) {
            bool pos = false, neg = false;
            for (std::size_t i = 0; i < n; ++i) {
                if (s.C.at(i, j) > 0) pos = true;
                if (s.C.at(i, j) < 0) neg = true;
            }
            if (pos && neg) coherent = false;
        }
        for (std::size_t i = 0; i < n; ++i) {
            bool pos = false, neg = false;
            for (std::size_t j = 0; j < n; ++j) {
                if (s.G.at(i, j) > 0) pos = true;
                if (s.G.at(i, j) < 0) neg = true;
            }
            if (pos && neg) coherent = false;
        }
        ++rep.sign_coherence.checked;
        if (!coherent) ++rep.sign_coherence.failed;
    }

    // exchange pairs on every seed-direction pair
    for (std::size_t s = 0; s < graph.seeds.size(); ++s) {
        for (int k = 1; static_cast<std::size_t>(k) <= n; ++k) {
            Seed mutated = graph.pattern.mutate(graph.seeds[s], k);
            ClusterVariableId leaving = graph.pattern.variable_id(graph.seeds[s], k);
            ClusterVariableId entering = graph.pattern.variable_id(mutated, k);
            Point r_leaving(n), r_entering(n);
            for (std::size_t i = 0; i < n; ++i) {
                r_leaving[i] = d[i] * leaving.g[i];
                r_entering[i] = d[i] * entering.g[i];
            }
            Int value = tropical_eval(leaving.F, r_entering) + tropical_eval(entering.F, r_leaving);
            ++rep.exchange_pairs.checked;
            ++rep.edges;
            if (value != d[static_cast<std::size_t>(k - 1)]) ++rep.exchange_pairs.failed;
        }
    }

    // random product identities
    std::mt19937 rng(rng_seed);
    std::uniform_int_distribution<int> expo(0, 3);
    std::uniform_int_distribution<int> coef(1, 3);
    std::uniform_int_distribution<int> nterms(1, 5);
    std::uniform_int_distribution<int> dir(-4, 4);
    auto random_poly = [&] {
        YPolynomial p(n);
        int t = nterms(rng);
        for (int i = 0; i < t; ++i) {
            ExpVec e(n);
            for (auto& x : e) x = expo(rng);
            p = p + YPolynomial::monomial(e, coef(rng));
        }
        return p;
    };
    for (int round = 0; round < random_rounds; ++round) {
        YPolynomial f = random_poly();
        YPolynomial g = random_poly();
        if (f.is_zero() || g.is_zero()) continue;
        ++rep.product_polytopes.checked;
        if (!equals(newton_polytope(f * g),
                    minkowski_sum(newton_polytope(f), newton_polytope(g))))
            ++rep.product_polytopes.failed;
        Point r(n);
        for (auto& x : r) x = dir(rng);
        ++rep.product_tropical.checked;
        if (tropical_eval(f * g, r) != tropical_eval(f, r) + tropical_eval(g, r))
            ++rep.product_tropical.failed;
    }
    return rep;
}

}  // namespace clusterkit
