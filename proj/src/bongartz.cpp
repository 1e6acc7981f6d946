#include "clusterkit/bongartz.hpp"

#include <algorithm>
#include <set>

namespace clusterkit {

namespace {

bool column_nonnegative(const IntMatrix& m, std::size_t j) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (m.at(i, j) < 0) return false;
    return true;
}

bool column_nonpositive(const IntMatrix& m, std::size_t j) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (m.at(i, j) > 0) return false;
    return true;
}

bool in_set(const std::vector<int>& vars, int v) {
    return std::find(vars.begin(), vars.end(), v) != vars.end();
}

template <typename ColumnPredicate>
std::vector<int> completion_candidates(const ExchangeGraph& graph, const PartialCluster& U,
                                       ColumnPredicate ok_outside) {
    std::vector<int> found;
    for (std::size_t s = 0; s < graph.seeds.size(); ++s) {
        bool contains_all = true;
        for (int v : U.vars)
            if (!in_set(graph.var_of[s], v)) {
                contains_all = false;
                break;
            }
        if (!contains_all) continue;
        bool cols_ok = true;
        for (std::size_t i = 0; i < graph.rank(); ++i) {
            if (in_set(U.vars, graph.var_of[s][i])) continue;
            if (!ok_outside(graph.seeds[s].C, i)) {
                cols_ok = false;
                break;
            }
        }
        if (cols_ok) found.push_back(static_cast<int>(s));
    }
    return found;
}

}  // namespace

MutationColor classify_mutation(const Seed& s, int k) {
    if (k < 1 || static_cast<std::size_t>(k) > s.rank())
        throw input_error("classify_mutation: direction out of range");
    return column_nonnegative(s.C, static_cast<std::size_t>(k - 1)) ? MutationColor::green
                                                                    : MutationColor::red;
}

bool is_initial_by_c(const ExchangeGraph& graph, int seed) {
    if (seed < 0 || static_cast<std::size_t>(seed) >= graph.seeds.size())
        throw input_error("is_initial_by_c: bad seed");
    const IntMatrix& c = graph.seeds[static_cast<std::size_t>(seed)].C;
    for (std::size_t j = 0; j < c.cols(); ++j)
        if (!column_nonnegative(c, j)) return false;
    std::set<int> here(graph.var_of[static_cast<std::size_t>(seed)].begin(),
                       graph.var_of[static_cast<std::size_t>(seed)].end());
    std::set<int> initial(graph.var_of[0].begin(), graph.var_of[0].end());
    if (here != initial)
        throw invariant_error("nonnegative C-matrix on a non-initial cluster");
    return true;
}

PartialCluster make_partial_cluster(const ExchangeGraph& graph, std::vector<int> vars) {
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    for (int v : vars)
        if (v < 0 || static_cast<std::size_t>(v) >= graph.variables.size())
            throw input_error("make_partial_cluster: unknown variable index");
    if (graph.seeds_containing(vars).empty())
        throw input_error("make_partial_cluster: variables do not lie in one cluster");
    return PartialCluster{std::move(vars)};
}

CompletionResult left_bongartz_completion(const ExchangeGraph& graph, const PartialCluster& U) {
    if (!graph.is_finite()) throw input_error("left_bongartz_completion: graph is not finite");
    std::vector<int> found = completion_candidates(
        graph, U, [](const IntMatrix& c, std::size_t i) { return column_nonnegative(c, i); });
    if (found.size() != 1)
        throw invariant_error("left Bongartz completion candidates: expected exactly one, got " +
                              std::to_string(found.size()));
    return CompletionResult{found.front(), graph.seeds.size()};
}

std::optional<CompletionResult> right_bongartz_completion(const ExchangeGraph& graph,
                                                          const PartialCluster& U) {
    if (!graph.is_finite()) throw input_error("right_bongartz_completion: graph is not finite");
    std::vector<int> found = completion_candidates(
        graph, U, [](const IntMatrix& c, std::size_t i) { return column_nonpositive(c, i); });
    if (found.empty()) return std::nullopt;
    if (found.size() > 1)
        throw invariant_error("right Bongartz completion is not unique");
    return CompletionResult{found.front(), graph.seeds.size()};
}

std::optional<int> greedy_left_completion(const ExchangeGraph& graph, const PartialCluster& U) {
    if (!graph.is_finite()) throw input_error("greedy_left_completion: graph is not finite");
    std::vector<int> start = graph.seeds_containing(U.vars);
    if (start.empty()) throw input_error("greedy_left_completion: not a partial cluster");
    int cur = start.front();
    std::size_t budget = 4 * graph.seeds.size() + 8;
    while (budget-- > 0) {
        int violating = 0;
        for (std::size_t i = 0; i < graph.rank(); ++i) {
            if (in_set(U.vars, graph.var_of[static_cast<std::size_t>(cur)][i])) continue;
            if (!column_nonnegative(graph.seeds[static_cast<std::size_t>(cur)].C, i)) {
                violating = static_cast<int>(i) + 1;
                break;
            }
        }
        if (violating == 0) return cur;
        cur = graph.neighbor[static_cast<std::size_t>(cur)][static_cast<std::size_t>(violating - 1)];
    }
    return std::nullopt;
}

std::vector<PartialCluster> all_partial_clusters(const ExchangeGraph& graph) {
    if (!graph.is_finite()) throw input_error("all_partial_clusters: graph is not finite");
    std::set<std::vector<int>> subsets;
    std::size_t n = graph.rank();
    for (std::size_t s = 0; s < graph.seeds.size(); ++s) {
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            std::vector<int> vars;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::size_t{1} << i)) vars.push_back(graph.var_of[s][i]);
            std::sort(vars.begin(), vars.end());
            subsets.insert(std::move(vars));
        }
    }
    std::vector<PartialCluster> out;
    out.reserve(subsets.size());
    for (const auto& vars : subsets) out.push_back(PartialCluster{vars});
    return out;
}

}  // namespace clusterkit
