#include <doctest.h>

#include <set>

#include "clusterkit/harness.hpp"

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

ClusterMonomial monomial_for(const ExchangeGraph& g, const std::map<std::vector<int>, int>& gexp) {
    // build a monomial from {g-vector -> multiplicity} over a common cluster
    std::vector<int> vars;
    for (const auto& [gv, mult] : gexp) {
        (void)mult;
        for (std::size_t z = 0; z < g.variables.size(); ++z)
            if (g.variables[z].g == gv) vars.push_back(static_cast<int>(z));
    }
    int seed = g.seeds_containing(vars).front();
    std::vector<int> h(g.rank(), 0);
    for (std::size_t i = 0; i < g.rank(); ++i) {
        const auto& id = g.variables[static_cast<std::size_t>(g.var_of[static_cast<std::size_t>(seed)][i])];
        auto it = gexp.find(id.g);
        if (it != gexp.end()) h[i] = it->second;
    }
    return make_monomial(g, seed, h);
}

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("enumeration over A2 up to degree 2") {
    ExchangeGraph g = explore(A2());
    auto degree1 = enumerate_noninitial_monomials(g, 1);
    CHECK(degree1.size() == 3);  // x3, x4, x5
    auto degree2 = enumerate_noninitial_monomials(g, 2);
    CHECK(degree2.size() == 8);  // adds squares and the two compatible products
    auto degree0 = enumerate_noninitial_monomials(g, 0);
    CHECK(degree0.empty());
}

TEST_CASE("theorem A report on A2 at degree 2") {
    ExchangeGraph g = explore(A2());
    TheoremAReport rep = verify_theorem_A(g, 2);
    CHECK(rep.monomial_count == 8);
    CHECK(rep.class_count == 8);
    CHECK(rep.injective);
    CHECK(rep.suspects.empty());
}

TEST_CASE("theorem A holds at degree 3 on the rank-2 types and A3") {
    for (const auto& root : {A2(), B2(), G2(), A3()}) {
        ExchangeGraph g = explore(root);
        TheoremAReport rep = verify_theorem_A(g, 3);
        CHECK(rep.injective);
        CHECK(rep.monomial_count == rep.class_count);
        CHECK(rep.monomial_count > 0);
    }
}

TEST_CASE("degree-1 case: distinct non-initial variables, distinct polytopes") {
    for (const auto& root : {A2(), A3(), B2(), G2()}) {
        ExchangeGraph g = explore(root);
        TheoremAReport rep = verify_theorem_A(g, 1);
        CHECK(rep.injective);
        CHECK(rep.monomial_count == g.variables.size() - g.rank());
    }
}

TEST_CASE("reduce_pair on x3*x4 against itself takes two steps") {
    ExchangeGraph g = explore(A2());
    ClusterMonomial u = monomial_for(g, {{{-1, 1}, 1}, {{-1, 0}, 1}});
    ReductionTrace trace = reduce_pair(g, u, u);
    CHECK(trace.verdict == ReductionVerdict::equal);
    CHECK(trace.steps.size() == 2);
    CHECK(trace.steps[0].support_before == 2);
    CHECK(trace.steps[0].support_after == 1);
    CHECK(trace.steps[0].exponent == 1);
    CHECK(trace.steps[1].support_before == 1);
    CHECK(trace.steps[1].support_after == 0);
}

TEST_CASE("reduce_pair on a single variable terminates in one step") {
    ExchangeGraph g = explore(A2());
    ClusterMonomial u = monomial_for(g, {{{-1, 1}, 1}});
    ReductionTrace trace = reduce_pair(g, u, u);
    CHECK(trace.verdict == ReductionVerdict::equal);
    CHECK(trace.steps.size() == 1);
}

TEST_CASE("reduce_pair refuses monomials with different polytopes") {
    ExchangeGraph g = explore(A2());
    ClusterMonomial x3 = monomial_for(g, {{{-1, 1}, 1}});
    ClusterMonomial x5 = monomial_for(g, {{{0, -1}, 1}});
    CHECK_THROWS_AS(reduce_pair(g, x3, x5), input_error);
}

TEST_CASE("reduce_pair refuses initial variables") {
    ExchangeGraph g = explore(A2());
    ClusterMonomial x1 = make_monomial(g, 0, {1, 0});
    CHECK_THROWS_AS(reduce_pair(g, x1, x1), input_error);
}

TEST_CASE("reduce_pair self-reduction over every enumerated monomial") {
    for (const auto& root : {A2(), B2()}) {
        ExchangeGraph g = explore(root);
        for (const auto& u : enumerate_noninitial_monomials(g, 2)) {
            ReductionTrace trace = reduce_pair(g, u, u);
            CHECK(trace.verdict == ReductionVerdict::equal);
            std::size_t prev = 1000;
            for (const auto& step : trace.steps) {
                CHECK(step.support_after < step.support_before);
                CHECK(step.support_before <= prev);
                prev = step.support_after;
            }
            CHECK((trace.steps.empty() || trace.steps.back().support_after == 0));
        }
    }
}

TEST_CASE("identity sweep over A2") {
    ExchangeGraph g = explore(A2());
    IdentityReport rep = verify_identities(g);
    CHECK(rep.all_passed());
    CHECK(rep.seeds == 5);
    CHECK(rep.edges == 10);  // 5 seeds x 2 directions
    CHECK(rep.duality.failed == 0);
    CHECK(rep.exchange_pairs.checked == 10);
    CHECK(rep.product_polytopes.checked > 0);
}

TEST_CASE("identity sweep over B2 sees both symmetrizer values") {
    ExchangeGraph g = explore(B2());
    IdentityReport rep = verify_identities(g);
    CHECK(rep.all_passed());
    // directions alternate d_k in {2, 1}
    CHECK(g.pattern.root().D == std::vector<Int>{2, 1});
    // spot-check one edge by hand: the initial seed, direction 1
    Seed mutated = g.pattern.mutate(g.seeds[0], 1);
    ClusterVariableId leaving = g.pattern.variable_id(g.seeds[0], 1);
    ClusterVariableId entering = g.pattern.variable_id(mutated, 1);
    Point r_l(2), r_e(2);
    for (std::size_t i = 0; i < 2; ++i) {
        r_l[i] = g.pattern.root().D[i] * leaving.g[i];
        r_e[i] = g.pattern.root().D[i] * entering.g[i];
    }
    CHECK(tropical_eval(leaving.F, r_e) + tropical_eval(entering.F, r_l) == 2);
}

TEST_CASE("identity sweep on the rank-1 algebra") {
    ExchangeGraph g = explore(make_B({{0}}));
    CHECK(g.is_finite());
    IdentityReport rep = verify_identities(g);
    CHECK(rep.all_passed());
}

}  // TEST_SUITE
