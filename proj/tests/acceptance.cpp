// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every tolerance is exact; runtime budgets are part of the checks.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "clusterkit/bongartz.hpp"
#include "clusterkit/harness.hpp"
#include "clusterkit/invariant.hpp"
#include "clusterkit/tau.hpp"

using namespace clusterkit;

namespace {

ExchangeMatrix make_B(const std::vector<std::vector<int>>& rows) {
    std::vector<std::vector<Int>> big;
    for (const auto& r : rows) big.emplace_back(r.begin(), r.end());
    return ExchangeMatrix::make(IntMatrix::from_rows(big));
}

ExchangeMatrix A2() { return make_B({{0, 1}, {-1, 0}}); }
ExchangeMatrix A3() { return make_B({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}); }
ExchangeMatrix B2() { return make_B({{0, 1}, {-2, 0}}); }
ExchangeMatrix G2() { return make_B({{0, 1}, {-3, 0}}); }

YPolynomial ypoly(std::size_t n, const std::vector<std::pair<ExpVec, int>>& terms) {
    YPolynomial p(n);
    for (const auto& [e, c] : terms) p.set_term(e, c);
    return p;
}

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            pass = false;
            detail << (detail.str().empty() ? "" : "; ") << what;
        }
    }
    void note(const std::string& what) {
        detail << (detail.str().empty() ? "" : "; ") << what;
    }
};

ClusterMonomial variable_monomial(const ExchangeGraph& g, const std::vector<int>& gvec) {
    for (std::size_t s = 0; s < g.seeds.size(); ++s)
        for (std::size_t i = 0; i < g.rank(); ++i)
            if (g.variables[static_cast<std::size_t>(g.var_of[s][i])].g == gvec) {
                std::vector<int> h(g.rank(), 0);
                h[i] = 1;
                return make_monomial(g, static_cast<int>(s), h);
            }
    throw std::runtime_error("variable not found");
}

// ---------------------------------------------------------------------------

Outcome criterion1_a2_reproduction() {
    Outcome o;
    ExchangeGraph g = explore(A2());
    o.require(g.is_finite(), "A2 exploration must be finite");
    o.require(g.seeds.size() == 5, "expected exactly 5 unlabeled clusters");
    std::set<std::pair<std::vector<int>, YPolynomial>> noninitial;
    for (std::size_t z = 0; z < g.variables.size(); ++z)
        if (!g.is_initial_variable(static_cast<int>(z)))
            noninitial.insert({g.variables[z].g, g.variables[z].F});
    std::set<std::pair<std::vector<int>, YPolynomial>> expected = {
        {{-1, 1}, ypoly(2, {{{0, 0}, 1}, {{1, 0}, 1}})},
        {{-1, 0}, ypoly(2, {{{0, 0}, 1}, {{1, 0}, 1}, {{1, 1}, 1}})},
        {{0, -1}, ypoly(2, {{{0, 0}, 1}, {{0, 1}, 1}})}};
    o.require(noninitial == expected, "non-initial (g, F) data must match the worked example");
    o.note("5 clusters, 3 non-initial variables exact");
    return o;
}

Outcome criterion2_f_invariants() {
    Outcome o;
    ExchangeGraph g = explore(A2());
    o.require(g.pattern.root().D == std::vector<Int>{1, 1}, "D must be the identity");
    ClusterMonomial x3 = variable_monomial(g, {-1, 1});
    ClusterMonomial x4 = variable_monomial(g, {-1, 0});
    ClusterMonomial x5 = variable_monomial(g, {0, -1});
    o.require(f_invariant(g, x3, x4).value == 0, "(x3||x4)_F must be 0");
    o.require(f_invariant(g, x3, x5).value == 1, "(x3||x5)_F must be 1");
    // vertex independence at >= 3 vertices, all pairs of the three variables
    std::vector<ClusterMonomial> vars = {x3, x4, x5};
    int vertices = static_cast<int>(g.seeds.size());
    for (const auto& u : vars)
        for (const auto& v : vars) {
            Int base = partial_f_invariant(g, u, v, 0) + partial_f_invariant(g, v, u, 0);
            for (int t = 1; t < std::min(4, vertices); ++t) {
                Int other = partial_f_invariant(g, u, v, t) + partial_f_invariant(g, v, u, t);
                o.require(other == base, "partial sums must not depend on the vertex");
            }
        }
    o.note("values 0 and 1, checked at 4 vertices");
    return o;
}

Outcome criterion3_identity_sweeps() {
    Outcome o;
    struct Case {
        const char* name;
        ExchangeMatrix root;
        std::vector<Int> expect_d;
    };
    std::vector<Case> cases;
    cases.push_back({"A2", A2(), {1, 1}});
    cases.push_back({"A3", A3(), {1, 1, 1}});
    cases.push_back({"B2", B2(), {2, 1}});
    cases.push_back({"G2", G2(), {3, 1}});
    std::size_t total_seeds = 0;
    for (auto& c : cases) {
        ExchangeGraph g = explore(c.root);
        o.require(g.pattern.root().D == c.expect_d, std::string(c.name) + ": wrong symmetrizer");
        if (std::string(c.name) == "A3")
            o.require(g.seeds.size() == 14, "A3 must have 14 clusters");
        IdentityReport rep = verify_identities(g);
        o.require(rep.duality.failed == 0, std::string(c.name) + ": duality identity failed");
        o.require(rep.sign_coherence.failed == 0, std::string(c.name) + ": sign coherence failed");
        o.require(rep.exchange_pairs.failed == 0, std::string(c.name) + ": exchange pair failed");
        o.require(rep.product_polytopes.failed == 0, std::string(c.name) + ": GKZ failed");
        o.require(rep.product_tropical.failed == 0, std::string(c.name) + ": F-prod failed");
        total_seeds += rep.seeds;
    }
    o.note("swept " + std::to_string(total_seeds) + " seeds across A2, A3, B2, G2");
    return o;
}

Outcome criterion4_theorem_A() {
    Outcome o;
    std::size_t monomials = 0;
    for (auto& [name, root] : std::vector<std::pair<const char*, ExchangeMatrix>>{
             {"A2", A2()}, {"A3", A3()}, {"B2", B2()}, {"G2", G2()}}) {
        ExchangeGraph g = explore(root);
        TheoremAReport rep = verify_theorem_A(g, 3);
        o.require(rep.injective, std::string(name) + ": polytope collision found");
        o.require(rep.suspects.empty(), std::string(name) + ": counterexample suspects reported");
        monomials += rep.monomial_count;
        for (const auto& u : enumerate_noninitial_monomials(g, 3)) {
            ReductionTrace trace = reduce_pair(g, u, u);
            o.require(trace.verdict == ReductionVerdict::equal,
                      std::string(name) + ": self-reduction did not end Equal");
            std::size_t prev = g.rank() + 1;
            for (const auto& st : trace.steps) {
                o.require(st.support_after < st.support_before,
                          std::string(name) + ": support did not strictly decrease");
                o.require(st.support_before < prev + 1, "support must be monotone over steps");
                prev = st.support_after;
            }
            if (!trace.steps.empty())
                o.require(trace.steps.back().support_after == 0, "reduction must empty the support");
        }
    }
    o.note(std::to_string(monomials) + " monomials of degree <= 3, zero collisions");
    return o;
}

Outcome criterion5_bongartz() {
    Outcome o;
    std::size_t checked = 0;
    for (auto& [name, root] : std::vector<std::pair<const char*, ExchangeMatrix>>{
             {"A2", A2()}, {"A3", A3()}, {"B2", B2()}}) {
        ExchangeGraph g = explore(root);
        for (const auto& u : all_partial_clusters(g)) {
            CompletionResult r = left_bongartz_completion(g, u);  // unique or throws
            ++checked;
            if (u.vars.empty())
                o.require(r.seed == 0, std::string(name) + ": empty set must complete to the root");
        }
    }
    o.note(std::to_string(checked) + " partial clusters completed uniquely");
    return o;
}

Outcome criterion6_polytope_properties() {
    Outcome o;
    std::mt19937 rng(987654321);
    auto random_poly = [&](std::size_t dim, int max_terms) {
        YPolynomial f(dim);
        std::uniform_int_distribution<int> expo(0, 4);
        std::uniform_int_distribution<int> coef(1, 3);
        int t = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_terms));
        for (int i = 0; i < t; ++i) {
            ExpVec e(dim);
            for (auto& x : e) x = expo(rng);
            f = f + YPolynomial::monomial(e, coef(rng));
        }
        return f;
    };
    auto random_points = [&](std::size_t dim, int max_pts) {
        std::uniform_int_distribution<int> coord(-4, 4);
        std::vector<Point> pts;
        int m = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_pts));
        for (int i = 0; i < m; ++i) {
            Point p(dim);
            for (auto& c : p) c = coord(rng);
            pts.push_back(p);
        }
        return LatticePolytope(pts);
    };
    auto random_dir = [&](std::size_t dim) {
        std::uniform_int_distribution<int> coord(-5, 5);
        Point r(dim);
        for (auto& c : r) c = coord(rng);
        return r;
    };
    std::size_t cases = 0;
    for (int i = 0; i < 4000; ++i) {  // tropical = support function
        std::size_t dim = 1 + rng() % 3;
        YPolynomial f = random_poly(dim, 6);
        Point r = random_dir(dim);
        o.require(tropical_eval(f, r) == support_function(newton_polytope(f), r),
                  "tropical/support mismatch");
        ++cases;
    }
    for (int i = 0; i < 3000; ++i) {  // support additivity under Minkowski sums
        std::size_t dim = 1 + rng() % 3;
        LatticePolytope p = random_points(dim, 6);
        LatticePolytope q = random_points(dim, 6);
        Point r = random_dir(dim);
        o.require(support_function(minkowski_sum(p, q), r) ==
                      support_function(p, r) + support_function(q, r),
                  "support additivity failed");
        ++cases;
    }
    for (int i = 0; i < 2000; ++i) {  // GKZ product polytopes
        std::size_t dim = 1 + rng() % 2;
        YPolynomial f = random_poly(dim, 5);
        YPolynomial g = random_poly(dim, 5);
        o.require(equals(newton_polytope(f * g),
                         minkowski_sum(newton_polytope(f), newton_polytope(g))),
                  "GKZ product polytope failed");
        ++cases;
    }
    for (int i = 0; i < 1000; ++i) {  // cancellation
        std::size_t dim = 1 + rng() % 2;
        LatticePolytope p = random_points(dim, 4);
        LatticePolytope r = random_points(dim, 4);
        LatticePolytope q = (rng() % 2) ? [&] {
            std::vector<Point> regen = p.points();
            for (const auto& v : p.vertices()) regen.push_back(v);
            return LatticePolytope(regen);
        }()
                                        : random_points(dim, 4);
        bool sums_equal = equals(minkowski_sum(p, r), minkowski_sum(q, r));
        bool bases_equal = equals(p, q);
        o.require(sums_equal == bases_equal, "cancellation law failed");
        ++cases;
    }
    o.note(std::to_string(cases) + " random cases, all exact");
    return o;
}

Outcome criterion7_tau_reproduction() {
    Outcome o;
    tau::Algebra alg(2);
    auto catalog = tau::enumerate_tau_tilting_pairs(alg);
    o.require(catalog.size() == 5, "rank 2 must have exactly 5 basic tau-tilting pairs");
    auto find_pair = [&](const std::vector<tau::Interval>& mods,
                         const std::vector<int>& projs) -> const tau::TauTiltingPair* {
        for (const auto& p : catalog)
            if (p.modules == mods && p.projectives == projs) return &p;
        return nullptr;
    };
    const auto* zero = find_pair({}, {1, 2});
    const auto* s1p2 = find_pair({{1, 1}}, {2});
    const auto* p2p1 = find_pair({{2, 2}}, {1});
    const auto* s1p1 = find_pair({{1, 1}, {1, 2}}, {});
    const auto* proj = find_pair({{1, 2}, {2, 2}}, {});
    o.require(zero && s1p2 && p2p1 && s1p1 && proj, "expected the five documented pairs");
    if (o.pass) {
        o.require(tau::mutate_pair(alg, catalog, *zero, 1).pair == *s1p2, "edge mu_(0,P1)");
        o.require(tau::mutate_pair(alg, catalog, *zero, 2).pair == *p2p1, "edge mu_(0,P2)");
        o.require(tau::mutate_pair(alg, catalog, *s1p2, 2).pair == *s1p1, "edge from (S1,P2)");
        o.require(tau::mutate_pair(alg, catalog, *p2p1, 2).pair == *proj, "edge from (P2,P1)");
        o.require(tau::mutate_pair(alg, catalog, *s1p1, 1).pair == *proj, "edge mu_(S1,0)");
    }
    o.require(tau::g_vector(alg, tau::ModuleSum{{{{1, 1}, 1}}}) == std::vector<int>{-1, 1},
              "g of S1");
    o.require(tau::g_vector(alg, tau::ModuleSum{{{{1, 2}, 1}}}) == std::vector<int>{-1, 0},
              "g of P1");
    o.require(tau::g_vector(alg, tau::ModuleSum{{{{2, 2}, 1}}}) == std::vector<int>{0, -1},
              "g of P2");
    o.require(tau::f_polynomial(alg, tau::Interval{1, 1}) ==
                  ypoly(2, {{{0, 0}, 1}, {{1, 0}, 1}}),
              "F of S1");
    o.require(tau::f_polynomial(alg, tau::Interval{1, 2}) ==
                  ypoly(2, {{{0, 0}, 1}, {{1, 0}, 1}, {{1, 1}, 1}}),
              "F of P1");
    o.require(tau::f_polynomial(alg, tau::Interval{2, 2}) ==
                  ypoly(2, {{{0, 0}, 1}, {{0, 1}, 1}}),
              "F of P2");
    o.note("5 pairs, 5 diagram edges, g/F exact");
    return o;
}

Outcome criterion8_tau_sweeps() {
    Outcome o;
    for (int n = 1; n <= 5; ++n) {
        tau::Algebra alg(n);
        std::string at = "rank " + std::to_string(n) + ": ";
        o.require(tau::sweep_hom_oracle(alg).failed == 0, at + "hom formula vs oracle");
        o.require(tau::sweep_fe_hom(alg).failed == 0, at + "FE-hom equality");
        o.require(tau::sweep_f_equals_e(alg).failed == 0, at + "F = E equivalence");
        o.require(tau::sweep_g_mx(alg).failed == 0, at + "g-MX identity");
        o.require(tau::sweep_check_f(alg).failed == 0, at + "check-F identities");
        o.require(tau::sweep_dom_hom(alg).failed == 0, at + "dom-hom equivalence");
        tau::SweepReport ex = tau::sweep_exchange_lemma(alg);
        o.require(ex.failed == 0, at + "exchange sign pattern");
        tau::InjectivityReport b = tau::verify_theorem_B(alg, 3);
        o.require(b.injective && b.suspects.empty(), at + "theorem B injectivity");
        o.require(b.sum_rigid.failed == 0, at + "sum-rigid lemma");
        tau::InjectivityReport c = tau::verify_theorem_C(alg, 3);
        o.require(c.injective && c.suspects.empty(), at + "theorem C injectivity");
        if (n == 5)
            o.note("rank 5: " + std::to_string(b.candidate_count) + " tau-rigid and " +
                   std::to_string(c.candidate_count) + " multi-semibrick candidates");
    }
    return o;
}

struct Criterion {
    int number;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> fn;
};

}  // namespace

int main(int argc, char** argv) {
    std::vector<Criterion> criteria = {
        {1, "A2 reproduction", 1.0, criterion1_a2_reproduction},
        {2, "F-invariant worked values", 1.0, criterion2_f_invariants},
        {3, "identity sweeps A2/A3/B2/G2", 30.0, criterion3_identity_sweeps},
        {4, "theorem A at degree <= 3", 120.0, criterion4_theorem_A},
        {5, "left Bongartz completions", 60.0, criterion5_bongartz},
        {6, "polytope layer properties", 60.0, criterion6_polytope_properties},
        {7, "tau-tilting rank-2 reproduction", 1.0, criterion7_tau_reproduction},
        {8, "tau-side sweeps up to rank 5", 300.0, criterion8_tau_sweeps},
    };
    int only = argc > 1 ? std::atoi(argv[1]) : 0;
    int failures = 0;
    for (const auto& c : criteria) {
        if (only != 0 && c.number != only) continue;
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.fn();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "exception: " << e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.budget_seconds) {
            o.pass = false;
            o.detail << "; exceeded runtime budget of " << c.budget_seconds << " s";
        }
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << "criterion " << c.number << " [" << c.name << "] "
             << (o.pass ? "PASS" : "FAIL") << " (" << secs << " s)";
        if (!o.detail.str().empty()) line << " - " << o.detail.str();
        std::cout << line.str() << "\n";
        if (!o.pass) ++failures;
    }
    if (only == 0)
        std::cout << "acceptance: " << (criteria.size() - static_cast<std::size_t>(failures))
                  << "/" << criteria.size() << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
