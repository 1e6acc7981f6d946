#pragma once

#include <optional>
#include <set>
#include <vector>

#include "clusterkit/pattern.hpp"

namespace clusterkit {

struct FInvariantReport {
    Int value;       // left_part + right_part, vertex independent
    Int left_part;   // F_u^t[D g_v^t]
    Int right_part;  // F_v^t[D g_u^t]
    std::vector<int> vertex_path;  // vertex t the parts were reported from
    std::vector<Int> D;
};

/// Partial F-invariant F_u^t[D g_v^t] at the vertex of graph.seeds[at].
/// Vertices other than the root are handled by re-rooting: the pattern is
/// recomputed with (x_t, B_t) as initial data and u, v re-expressed there.
Int partial_f_invariant(const ExchangeGraph& graph, const ClusterMonomial& u,
                        const ClusterMonomial& v, int at);

/// (u||v)_F with the fixed skew-symmetrizer D. The value is computed at the
/// root and re-verified at the home vertices of u and v plus one more vertex;
/// any disagreement throws invariant_error.
FInvariantReport f_invariant(const ExchangeGraph& graph, const ClusterMonomial& u,
                             const ClusterMonomial& v);

/// True iff (u||v)_F = 0. On a finite graph a vanishing value must come with a
/// common-cluster witness (stored through `witness` when given); a missing
/// witness throws invariant_error.
bool is_compatible(const ExchangeGraph& graph, const ClusterMonomial& u, const ClusterMonomial& v,
                   int* witness = nullptr);

/// Variable indices z with F_z[D g_u] = 0. Finite graphs only.
std::set<int> dominant_set(const ExchangeGraph& graph, const ClusterMonomial& u);

/// Dominant set of the multiplicity-free full-support monomial at a seed.
std::set<int> dominant_set_of_seed(const ExchangeGraph& graph, int seed);

}  // namespace clusterkit
