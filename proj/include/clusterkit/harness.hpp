#pragma once

#include <string>
#include <vector>

#include "clusterkit/pattern.hpp"
#include "clusterkit/polytope.hpp"

namespace clusterkit {

/// All cluster monomials in non-initial variables with 1 <= degree <= cap,
/// enumerated over every cluster and deduplicated by id multiset.
std::vector<ClusterMonomial> enumerate_noninitial_monomials(const ExchangeGraph& graph,
                                                            int degree_cap);

struct PolytopeCollision {
    std::string polytope_key;
    std::vector<ClusterMonomial> members;
};

struct TheoremAReport {
    int degree_cap = 0;
    std::size_t monomial_count = 0;
    std::size_t class_count = 0;
    bool injective = false;
    std::vector<PolytopeCollision> suspects;
};

/// Groups the enumerated monomials by exact Newton-polytope equality of their
/// F-polynomials and reports injectivity. Any non-singleton class is
/// re-verified through an independent equality route before it is reported
/// as a counterexample suspect.
TheoremAReport verify_theorem_A(const ExchangeGraph& graph, int degree_cap);

struct ReductionStep {
    std::vector<int> completion_path;
    int k = 0;            // 1-based position chosen at the completion seed
    Int exponent;         // cancelled exponent a_k (= b_k)
    std::size_t support_before = 0;
    std::size_t support_after = 0;
};

enum class ReductionVerdict { equal, counterexample_suspect };

struct ReductionTrace {
    std::vector<ReductionStep> steps;
    ReductionVerdict verdict = ReductionVerdict::counterexample_suspect;
    std::string detail;  // names the failed hypothesis when suspect
};

/// Executable form of the reduction argument behind the injectivity theorem:
/// (1) vanishing F-invariant makes uv a cluster monomial, (2) left Bongartz
/// completion of supp(uv), (3) a support position with nonpositive C-column,
/// (4) equal exponents via the tropical test at the mutated vertex, (5) cancel
/// and recurse. Preconditions: equal Newton polytopes, non-initial support.
ReductionTrace reduce_pair(const ExchangeGraph& graph, const ClusterMonomial& u,
                           const ClusterMonomial& v);

struct IdentityCounts {
    std::size_t checked = 0;
    std::size_t failed = 0;
};

struct IdentityReport {
    IdentityCounts duality;            // G^T D C = D at every seed
    IdentityCounts sign_coherence;     // C columns and G rows at every seed
    IdentityCounts exchange_pairs;     // (x_{k;t} || x_{k;t'})_F = d_k per edge
    IdentityCounts product_polytopes;  // P(FG) = P(F) + P(G), random pairs
    IdentityCounts product_tropical;   // (FG)[r] = F[r] + G[r], random data
    std::size_t seeds = 0;
    std::size_t edges = 0;  // seed-direction pairs swept

    bool all_passed() const {
        return duality.failed + sign_coherence.failed + exchange_pairs.failed +
                   product_polytopes.failed + product_tropical.failed ==
               0;
    }
};

/// Batch re-checks tying the modules together; failures are counted, never
/// thrown, so a report always comes back.
IdentityReport verify_identities(const ExchangeGraph& graph, unsigned rng_seed = 20240229,
                                 int random_rounds = 200);

}  // namespace clusterkit
