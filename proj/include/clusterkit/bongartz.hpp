#pragma once

#include <optional>
#include <vector>

#include "clusterkit/pattern.hpp"

namespace clusterkit {

enum class MutationColor { green, red };

/// Green iff the k-th column of the seed's C-matrix is componentwise
/// nonnegative; red otherwise. Well defined by column sign coherence.
MutationColor classify_mutation(const Seed& s, int k);

/// True iff the seed's C-matrix is nonnegative. When true, the unlabeled
/// cluster must be the initial one; a mismatch would falsify the underlying
/// positivity statement and is reported as invariant_error, never patched.
bool is_initial_by_c(const ExchangeGraph& graph, int seed);

/// Subset of some cluster, stored as variable indices (validated).
struct PartialCluster {
    std::vector<int> vars;
};

PartialCluster make_partial_cluster(const ExchangeGraph& graph, std::vector<int> vars);

struct CompletionResult {
    int seed;
    std::size_t checked;  // number of clusters scanned
};

/// The unique seed s with U inside its cluster and nonnegative C-columns at
/// every position outside U, found by exhaustive scan. Zero or multiple
/// candidates throw invariant_error (that would falsify the completion
/// theorem at desk scale). Finite graphs only.
CompletionResult left_bongartz_completion(const ExchangeGraph& graph, const PartialCluster& U);

/// Dual condition (nonpositive columns outside U). Existence is not
/// guaranteed; absence is a value. Uniqueness asserted when present.
std::optional<CompletionResult> right_bongartz_completion(const ExchangeGraph& graph,
                                                          const PartialCluster& U);

/// Experimental accelerator: repeatedly mutate at a violating non-U position.
/// Termination is a conjecture under measurement, so the walk is capped;
/// callers must verify the answer against the exhaustive scan.
std::optional<int> greedy_left_completion(const ExchangeGraph& graph, const PartialCluster& U);

/// All partial clusters of a finite graph (deduplicated variable-index sets).
std::vector<PartialCluster> all_partial_clusters(const ExchangeGraph& graph);

}  // namespace clusterkit
