#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clusterkit/intmat.hpp"
#include "clusterkit/poly.hpp"

namespace clusterkit {

/// (g-vector, F-polynomial) with respect to the root vertex. Equality of ids
/// is equality of cluster variables; g alone already separates them, F is
/// carried for tropical work.
struct ClusterVariableId {
    std::vector<int> g;
    YPolynomial F;
    auto operator<=>(const ClusterVariableId&) const = default;
};

/// Labeled seed of the principal-coefficient pattern: current exchange matrix,
/// C- and G-matrices w.r.t. the root, the n cluster variables as exact Laurent
/// polynomials in (x, y), and the mutation path from the root vertex.
struct Seed {
    IntMatrix B;
    IntMatrix C;
    IntMatrix G;
    std::vector<LaurentPoly> vars;
    std::vector<int> path;  // 1-based mutation directions from the root

    std::size_t rank() const { return vars.size(); }
};

/// Cluster pattern with principal coefficients rooted at a fixed exchange
/// matrix. Cluster variables are computed by exact Laurent arithmetic (not by
/// g/F recursions); the GHKK identities are asserted after every mutation as
/// independent cross-checks.
class ClusterPattern {
public:
    explicit ClusterPattern(ExchangeMatrix root);

    const ExchangeMatrix& root() const { return root_; }
    std::size_t rank() const { return root_.rank(); }

    /// vars = (x_1..x_n), C = G = I, empty path.
    Seed initial() const;

    /// Exchange relation over the 2n variables with the stacked (B; C) column,
    /// divided exactly by the leaving variable. Direction k is 1-based.
    Seed mutate(const Seed& s, int k) const;

    /// g = exponent of the unique y-degree-zero term, F = specialization at
    /// x = 1. Asserts homogeneity under the principal grading. i is 1-based.
    ClusterVariableId variable_id(const Seed& s, int i) const;

    /// Runs every Seed invariant (sign coherence, det C = +-1, G^T D C = D,
    /// homogeneity, constant term 1); throws invariant_error on failure.
    void check_seed(const Seed& s) const;

private:
    std::vector<int> extract_g(const LaurentPoly& var) const;

    ExchangeMatrix root_;
};

/// Canonical unlabeled-seed key: the n (g, F) pairs sorted lexicographically
/// and B permuted accordingly, rendered as text.
std::string canonical_seed_key(const ClusterPattern& pattern, const Seed& s);

enum class GraphVerdict { finite, cap_exceeded };

struct ExploreLimits {
    std::size_t max_seeds = 10000;
};

/// BFS materialization of the exchange graph modulo unlabeled-seed equality.
struct ExchangeGraph {
    explicit ExchangeGraph(ClusterPattern p) : pattern(std::move(p)) {}

    ClusterPattern pattern;
    std::vector<Seed> seeds;                  // seeds[0] = initial
    std::vector<std::vector<int>> neighbor;   // [seed][k-1] = seed index, -1 when capped
    std::vector<ClusterVariableId> variables; // discovery order; first n are initial
    std::vector<std::vector<int>> var_of;     // [seed][i-1] = index into variables
    GraphVerdict verdict = GraphVerdict::cap_exceeded;

    std::size_t rank() const { return pattern.rank(); }
    bool is_finite() const { return verdict == GraphVerdict::finite; }
    bool is_initial_variable(int v) const { return v >= 0 && static_cast<std::size_t>(v) < rank(); }

    /// Seeds whose cluster contains every listed variable index.
    std::vector<int> seeds_containing(const std::vector<int>& vars) const;
};

ExchangeGraph explore(const ExchangeMatrix& root, ExploreLimits limits = {});

/// Monomial in the variables of one cluster, with aggregated data at the root:
/// g additive, F multiplicative, support as a variable-index multiset.
struct ClusterMonomial {
    int seed = -1;
    std::vector<int> h;          // exponents by position, h[i-1] >= 0
    std::vector<int> g;
    YPolynomial F;
    std::map<int, int> support;  // variable index -> multiplicity

    int degree() const;
    bool operator==(const ClusterMonomial& o) const { return support == o.support; }
};

ClusterMonomial make_monomial(const ExchangeGraph& graph, int seed, const std::vector<int>& h);

/// Exponents of the same monomial at another seed (positions matched by id),
/// or nullopt when that cluster does not contain the monomial's support.
std::optional<std::vector<int>> express_at(const ExchangeGraph& graph, const ClusterMonomial& u,
                                           int seed);

}  // namespace clusterkit
