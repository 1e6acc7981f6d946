#include <doctest.h>

#include <algorithm>
#include <random>

#include "clusterkit/invariant.hpp"

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

// Monomial h = e_i at the first seed whose position i holds the variable with
// the given g-vector.
ClusterMonomial variable_monomial(const ExchangeGraph& g, const std::vector<int>& gvec) {
    for (std::size_t s = 0; s < g.seeds.size(); ++s) {
        for (std::size_t i = 0; i < g.rank(); ++i) {
            if (g.variables[static_cast<std::size_t>(g.var_of[s][i])].g == gvec) {
                std::vector<int> h(g.rank(), 0);
                h[i] = 1;
                return make_monomial(g, static_cast<int>(s), h);
            }
        }
    }
    throw std::runtime_error("variable not found");
}

ClusterMonomial random_monomial(const ExchangeGraph& g, std::mt19937& rng, int max_exp = 2) {
    std::uniform_int_distribution<int> seed_pick(0, static_cast<int>(g.seeds.size()) - 1);
    std::uniform_int_distribution<int> exp_pick(0, max_exp);
    int s = seed_pick(rng);
    std::vector<int> h(g.rank());
    for (auto& e : h) e = exp_pick(rng);
    return make_monomial(g, s, h);
}

}  // namespace

TEST_SUITE("invariant") {

TEST_CASE("A2 worked partials") {
    ExchangeGraph g = explore(A2());
    ClusterMonomial x3 = variable_monomial(g, {-1, 1});
    ClusterMonomial x4 = variable_monomial(g, {-1, 0});
    ClusterMonomial x5 = variable_monomial(g, {0, -1});
    CHECK(partial_f_invariant(g, x3, x4, 0) == 0);
    CHECK(partial_f_invariant(g, x5, x3, 0) == 1);
}

TEST_CASE("self partial vanishes for cluster monomials") {
    std::mt19937 rng(100);
    for (const auto& root : {A2(), A3(), B2()}) {
        ExchangeGraph g = explore(root);
        for (int i = 0; i < 15; ++i) {
            ClusterMonomial u = random_monomial(g, rng);
            CHECK(partial_f_invariant(g, u, u, 0) == 0);
        }
    }
}

TEST_CASE("A2 worked F-invariants") {
    ExchangeGraph g = explore(A2());
    ClusterMonomial x3 = variable_monomial(g, {-1, 1});
    ClusterMonomial x4 = variable_monomial(g, {-1, 0});
    ClusterMonomial x5 = variable_monomial(g, {0, -1});
    CHECK(f_invariant(g, x3, x4).value == 0);
    CHECK(f_invariant(g, x3, x5).value == 1);
    CHECK(f_invariant(g, x5, x5).value == 0);
    FInvariantReport rep = f_invariant(g, x3, x5);
    CHECK(rep.value == rep.left_part + rep.right_part);
    CHECK(rep.left_part >= 0);
    CHECK(rep.right_part >= 0);
}

TEST_CASE("vertex independence across at least three vertices") {
    std::mt19937 rng(2023);
    for (const auto& root : {A2(), A3(), B2()}) {
        ExchangeGraph g = explore(root);
        for (int trial = 0; trial < 8; ++trial) {
            ClusterMonomial u = random_monomial(g, rng, 1);
            ClusterMonomial v = random_monomial(g, rng, 1);
            Int base = partial_f_invariant(g, u, v, 0) + partial_f_invariant(g, v, u, 0);
            for (int t : {1, 2, static_cast<int>(g.seeds.size()) - 1}) {
                Int other = partial_f_invariant(g, u, v, t) + partial_f_invariant(g, v, u, t);
                CHECK(other == base);
            }
        }
    }
}

TEST_CASE("additivity of the F-invariant in the first argument") {
    std::mt19937 rng(31);
    ExchangeGraph g = explore(A3());
    for (int trial = 0; trial < 10; ++trial) {
        ClusterMonomial u = random_monomial(g, rng, 2);
        ClusterMonomial v = random_monomial(g, rng, 1);
        Int total = f_invariant(g, u, v).value;
        Int sum = 0;
        for (std::size_t i = 0; i < g.rank(); ++i) {
            if (u.h[i] == 0) continue;
            std::vector<int> hi(g.rank(), 0);
            hi[i] = 1;
            ClusterMonomial xi = make_monomial(g, u.seed, hi);
            sum += Int(u.h[i]) * f_invariant(g, xi, v).value;
        }
        CHECK(total == sum);
    }
}

TEST_CASE("variables in one cluster have vanishing mutual partials") {
    for (const auto& root : {A2(), A3(), B2()}) {
        ExchangeGraph g = explore(root);
        for (std::size_t s = 0; s < g.seeds.size(); ++s) {
            for (std::size_t i = 0; i < g.rank(); ++i) {
                for (std::size_t j = 0; j < g.rank(); ++j) {
                    std::vector<int> hi(g.rank(), 0), hj(g.rank(), 0);
                    hi[i] = 1;
                    hj[j] = 1;
                    ClusterMonomial x = make_monomial(g, static_cast<int>(s), hi);
                    ClusterMonomial z = make_monomial(g, static_cast<int>(s), hj);
                    CHECK(partial_f_invariant(g, z, x, 0) == 0);
                }
            }
        }
    }
}

TEST_CASE("exchange pairs carry the symmetrizer entry") {
    for (const auto& root : {A2(), A3(), B2()}) {
        ExchangeGraph g = explore(root);
        const auto& d = g.pattern.root().D;
        for (std::size_t s = 0; s < g.seeds.size(); ++s) {
            for (int k = 1; static_cast<std::size_t>(k) <= g.rank(); ++k) {
                Seed mutated = g.pattern.mutate(g.seeds[s], k);
                ClusterVariableId leaving = g.pattern.variable_id(g.seeds[s], k);
                ClusterVariableId entering = g.pattern.variable_id(mutated, k);
                // locate both as monomials
                ClusterMonomial u = variable_monomial(g, leaving.g);
                ClusterMonomial v = variable_monomial(g, entering.g);
                CHECK(f_invariant(g, u, v).value == d[static_cast<std::size_t>(k - 1)]);
                // Conditional refinement when the k-th C-column is non-positive.
                bool nonpos = true;
                for (std::size_t r = 0; r < g.rank(); ++r)
                    if (g.seeds[s].C.at(r, static_cast<std::size_t>(k - 1)) > 0) nonpos = false;
                if (nonpos) {
                    CHECK(partial_f_invariant(g, v, u, 0) == 0);
                    CHECK(partial_f_invariant(g, u, v, 0) == d[static_cast<std::size_t>(k - 1)]);
                }
            }
        }
    }
}

TEST_CASE("compatibility agrees with common-cluster membership for variables") {
    for (const auto& root : {A2(), A3(), B2()}) {
        ExchangeGraph g = explore(root);
        for (std::size_t a = 0; a < g.variables.size(); ++a) {
            ClusterMonomial u = variable_monomial(g, g.variables[a].g);
            for (std::size_t b = 0; b < g.variables.size(); ++b) {
                ClusterMonomial v = variable_monomial(g, g.variables[b].g);
                bool share = !g.seeds_containing({static_cast<int>(a), static_cast<int>(b)}).empty();
                int witness = -1;
                bool compat = is_compatible(g, u, v, &witness);
                CHECK(compat == share);
                if (compat) CHECK(witness >= 0);
            }
        }
    }
}

TEST_CASE("A2 worked compatibility pairs") {
    ExchangeGraph g = explore(A2());
    ClusterMonomial x3 = variable_monomial(g, {-1, 1});
    ClusterMonomial x4 = variable_monomial(g, {-1, 0});
    ClusterMonomial x5 = variable_monomial(g, {0, -1});
    int witness = -1;
    CHECK(is_compatible(g, x3, x4, &witness));
    CHECK_FALSE(is_compatible(g, x3, x5));
    CHECK(is_compatible(g, x3, x3));
}

TEST_CASE("dominant sets on A2 match the worked values") {
    ExchangeGraph g = explore(A2());
    auto var_index = [&](const std::vector<int>& gv) {
        for (std::size_t z = 0; z < g.variables.size(); ++z)
            if (g.variables[z].g == gv) return static_cast<int>(z);
        return -1;
    };
    int x1 = var_index({1, 0}), x2 = var_index({0, 1}), x3 = var_index({-1, 1}),
        x4 = var_index({-1, 0}), x5 = var_index({0, -1});

    // empty monomial dominates everything
    ClusterMonomial one = make_monomial(g, 0, {0, 0});
    CHECK(dominant_set(g, one).size() == g.variables.size());

    // u = x3 x4 at the seed containing both
    int s34 = g.seeds_containing({x3, x4}).front();
    std::vector<int> h(2, 0);
    for (std::size_t i = 0; i < 2; ++i) {
        int v = g.var_of[static_cast<std::size_t>(s34)][i];
        if (v == x3 || v == x4) h[i] = 1;
    }
    ClusterMonomial u = make_monomial(g, s34, h);
    CHECK(u.g == std::vector<int>{-2, 1});
    CHECK(dominant_set(g, u) == std::set<int>{x1, x2, x3, x4});
    CHECK(dominant_set(g, u).count(x5) == 0);

    // dominant set of the initial seed
    CHECK(dominant_set_of_seed(g, 0) == std::set<int>{x1, x2});

    // initial variables always belong to dominant sets
    std::mt19937 rng(8);
    for (int i = 0; i < 10; ++i) {
        auto dom = dominant_set(g, random_monomial(g, rng));
        CHECK(dom.count(x1) == 1);
        CHECK(dom.count(x2) == 1);
    }
}

TEST_CASE("dominant sets of the two clusters containing x3 are nested") {
    ExchangeGraph g = explore(A2());
    int x3 = -1;
    for (std::size_t z = 0; z < g.variables.size(); ++z)
        if (g.variables[z].g == std::vector<int>{-1, 1}) x3 = static_cast<int>(z);
    auto clusters = g.seeds_containing({x3});
    REQUIRE(clusters.size() == 2);
    auto a = dominant_set_of_seed(g, clusters[0]);
    auto b = dominant_set_of_seed(g, clusters[1]);
    bool a_in_b = std::includes(b.begin(), b.end(), a.begin(), a.end());
    bool b_in_a = std::includes(a.begin(), a.end(), b.begin(), b.end());
    CHECK((a_in_b || b_in_a));
}

TEST_CASE("dominant sets require a finite graph") {
    ExchangeGraph g = explore(A3(), ExploreLimits{2});
    CHECK_FALSE(g.is_finite());
    ClusterMonomial u = make_monomial(g, 0, {0, 0, 0});
    CHECK_THROWS_AS(dominant_set(g, u), input_error);
}

}  // TEST_SUITE
