#include "clusterkit/pattern.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace clusterkit {

namespace {

bool column_sign_coherent(const IntMatrix& m, std::size_t j) {
    bool has_pos = false, has_neg = false;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (m.at(i, j) > 0) has_pos = true;
        if (m.at(i, j) < 0) has_neg = true;
    }
    return !(has_pos && has_neg);
}

bool row_sign_coherent(const IntMatrix& m, std::size_t i) {
    bool has_pos = false, has_neg = false;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (m.at(i, j) > 0) has_pos = true;
        if (m.at(i, j) < 0) has_neg = true;
    }
    return !(has_pos && has_neg);
}

}  // namespace

ClusterPattern::ClusterPattern(ExchangeMatrix root) : root_(std::move(root)) {
    if (!is_skew_symmetrized_by(root_.B, root_.D))
        throw input_error("ClusterPattern: invalid exchange matrix");
}

Seed ClusterPattern::initial() const {
    std::size_t n = rank();
    Seed s;
    s.B = root_.B;
    s.C = IntMatrix::identity(n);
    s.G = IntMatrix::identity(n);
    s.vars.reserve(n);
    for (std::size_t i = 0; i < n; ++i) s.vars.push_back(LaurentPoly::x_var(n, i));
    return s;
}

std::vector<int> ClusterPattern::extract_g(const LaurentPoly& var) const {
    std::size_t n = rank();
    if (var.is_zero()) throw invariant_error("cluster variable is zero");
    // Terms sort lex on (yexp, xexp), so the first term carries the minimal
    // y-exponent; for a principal-coefficient cluster variable that exponent
    // is 0 with coefficient 1 (constant term 1 of the F-polynomial).
    const auto& lead = *var.terms().begin();
    if (lead.first.y != ExpVec(n, 0))
        throw invariant_error("cluster variable has no y-degree-zero term");
    if (lead.second != 1)
        throw invariant_error("F-polynomial constant term is not 1");
    const ExpVec& g = lead.first.x;
    // Homogeneity under deg x_i = e_i, deg y_j = -(column j of the root B):
    // every term must satisfy xexp - B0 * yexp = g.
    for (const auto& [key, c] : var.terms()) {
        (void)c;
        for (std::size_t i = 0; i < n; ++i) {
            Int lhs = key.x[i];
            for (std::size_t j = 0; j < n; ++j) lhs -= root_.B.at(i, j) * key.y[j];
            if (lhs != g[i]) throw invariant_error("cluster variable is not homogeneous");
        }
    }
    return g;
}

ClusterVariableId ClusterPattern::variable_id(const Seed& s, int i) const {
    if (i < 1 || static_cast<std::size_t>(i) > s.rank())
        throw input_error("variable_id: index out of range");
    const LaurentPoly& var = s.vars[static_cast<std::size_t>(i - 1)];
    ClusterVariableId id;
    id.g = extract_g(var);
    id.F = var.specialize_x_to_one();
    return id;
}

void ClusterPattern::check_seed(const Seed& s) const {
    std::size_t n = rank();
    if (s.rank() != n || s.B.rows() != n || s.C.rows() != n || s.G.rows() != n)
        throw invariant_error("seed shape mismatch");
    if (!is_skew_symmetrized_by(s.B, root_.D))
        throw invariant_error("mutated B lost its skew-symmetrizer");
    Int det = s.C.det();
    if (det != 1 && det != -1) throw invariant_error("C-matrix is not unimodular");
    for (std::size_t j = 0; j < n; ++j)
        if (!column_sign_coherent(s.C, j)) throw invariant_error("C-column sign coherence failed");
    for (std::size_t i = 0; i < n; ++i)
        if (!row_sign_coherent(s.G, i)) throw invariant_error("G-row sign coherence failed");
    // (G^T) D C = D, the integral form of the GHKK duality identity.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Int sum = 0;
            for (std::size_t l = 0; l < n; ++l) sum += s.G.at(l, i) * root_.D[l] * s.C.at(l, j);
            if (sum != (i == j ? root_.D[i] : Int(0)))
                throw invariant_error("G^T D C = D identity failed");
        }
    }
    // Homogeneity and g-extraction consistency for every variable.
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<int> g = extract_g(s.vars[i]);
        for (std::size_t r = 0; r < n; ++r)
            if (s.G.at(r, i) != g[r]) throw invariant_error("G column disagrees with grading");
    }
}

Seed ClusterPattern::mutate(const Seed& s, int k) const {
    std::size_t n = rank();
    if (k < 1 || static_cast<std::size_t>(k) > n) throw input_error("mutate: direction out of range");
    std::size_t kk = static_cast<std::size_t>(k - 1);

    // Exchange numerator over the 2n variables (x's through vars, y's direct),
    // exponents read off the k-th column of the stacked matrix (B; C).
    LaurentPoly pos = LaurentPoly::constant(n, 1);
    LaurentPoly neg = LaurentPoly::constant(n, 1);
    for (std::size_t j = 0; j < n; ++j) {
        const Int& b = s.B.at(j, kk);
        if (b > 0)
            pos = mul(pos, pow(s.vars[j], b));
        else if (b < 0)
            neg = mul(neg, pow(s.vars[j], -b));
    }
    ExpVec ypos(n, 0), yneg(n, 0), zero(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const Int& c = s.C.at(i, kk);
        if (c > 0)
            ypos[i] = to_int(c, "c-matrix entry");
        else if (c < 0)
            yneg[i] = to_int(-c, "c-matrix entry");
    }
    pos = mul(pos, LaurentPoly::monomial(zero, ypos));
    neg = mul(neg, LaurentPoly::monomial(zero, yneg));

    Seed t;
    t.vars = s.vars;
    t.vars[kk] = exact_div(add(pos, neg), s.vars[kk]);
    t.B = mutate_matrix(s.B, k);
    IntMatrix stacked = mutate_extended(stack(s.B, s.C), k);
    t.C = bottom_block(stacked);
    t.G = IntMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<int> g = extract_g(t.vars[i]);
        for (std::size_t r = 0; r < n; ++r) t.G.at(r, i) = g[r];
    }
    t.path = s.path;
    t.path.push_back(k);
    check_seed(t);
    return t;
}

std::string canonical_seed_key(const ClusterPattern& pattern, const Seed& s) {
    std::size_t n = s.rank();
    std::vector<std::pair<ClusterVariableId, std::size_t>> ids;
    ids.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        ids.emplace_back(pattern.variable_id(s, static_cast<int>(i) + 1), i);
    std::sort(ids.begin(), ids.end());
    std::ostringstream os;
    for (const auto& [id, pos] : ids) {
        (void)pos;
        for (int gi : id.g) os << gi << ',';
        os << '/';
        for (const auto& [e, c] : id.F.terms()) {
            for (int v : e) os << v << ',';
            os << ':' << c << ' ';
        }
        os << '|';
    }
    os << "B:";
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) os << s.B.at(ids[i].second, ids[j].second) << ',';
    return os.str();
}

std::vector<int> ExchangeGraph::seeds_containing(const std::vector<int>& vars) const {
    std::vector<int> found;
    for (std::size_t s = 0; s < seeds.size(); ++s) {
        bool all = true;
        for (int v : vars) {
            if (std::find(var_of[s].begin(), var_of[s].end(), v) == var_of[s].end()) {
                all = false;
                break;
            }
        }
        if (all) found.push_back(static_cast<int>(s));
    }
    return found;
}

ExchangeGraph explore(const ExchangeMatrix& root, ExploreLimits limits) {
    if (limits.max_seeds < 1) throw input_error("explore: max_seeds must be at least 1");
    ExchangeGraph g{ClusterPattern(root)};
    std::size_t n = g.rank();
    std::map<std::string, int> index;
    std::map<ClusterVariableId, int> var_index;

    auto register_seed = [&](Seed&& s) {
        int id = static_cast<int>(g.seeds.size());
        std::vector<int> vars(n);
        for (std::size_t i = 0; i < n; ++i) {
            ClusterVariableId vid = g.pattern.variable_id(s, static_cast<int>(i) + 1);
            auto it = var_index.find(vid);
            if (it == var_index.end()) {
                it = var_index.emplace(std::move(vid), static_cast<int>(g.variables.size())).first;
                g.variables.push_back(it->first);
            }
            vars[i] = it->second;
        }
        g.seeds.push_back(std::move(s));
        g.var_of.push_back(std::move(vars));
        g.neighbor.emplace_back(n, -1);
        return id;
    };

    bool capped = false;
    try {
        Seed init = g.pattern.initial();
        std::string init_key = canonical_seed_key(g.pattern, init);
        index.emplace(std::move(init_key), register_seed(std::move(init)));
        std::deque<int> queue{0};
        while (!queue.empty()) {
            int cur = queue.front();
            queue.pop_front();
            for (int k = 1; static_cast<std::size_t>(k) <= n; ++k) {
                if (g.neighbor[cur][k - 1] != -1) continue;
                Seed next = g.pattern.mutate(g.seeds[cur], k);
                std::string key = canonical_seed_key(g.pattern, next);
                auto it = index.find(key);
                int target;
                if (it != index.end()) {
                    target = it->second;
                } else if (g.seeds.size() < limits.max_seeds) {
                    target = register_seed(std::move(next));
                    index.emplace(std::move(key), target);
                    queue.push_back(target);
                } else {
                    capped = true;
                    continue;
                }
                g.neighbor[cur][k - 1] = target;
            }
        }
    } catch (const resource_error&) {
        capped = true;  // term-cap blowup counts as capped exploration
    }
    g.verdict = capped ? GraphVerdict::cap_exceeded : GraphVerdict::finite;
    return g;
}

int ClusterMonomial::degree() const {
    int d = 0;
    for (int e : h) d += e;
    return d;
}

ClusterMonomial make_monomial(const ExchangeGraph& graph, int seed, const std::vector<int>& h) {
    std::size_t n = graph.rank();
    if (seed < 0 || static_cast<std::size_t>(seed) >= graph.seeds.size())
        throw input_error("make_monomial: bad seed index");
    if (h.size() != n) throw input_error("make_monomial: exponent vector has wrong rank");
    for (int e : h)
        if (e < 0) throw input_error("make_monomial: negative exponent");
    ClusterMonomial u;
    u.seed = seed;
    u.h = h;
    u.g.assign(n, 0);
    u.F = YPolynomial::constant(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (h[i] == 0) continue;
        int v = graph.var_of[static_cast<std::size_t>(seed)][i];
        const ClusterVariableId& id = graph.variables[static_cast<std::size_t>(v)];
        for (std::size_t r = 0; r < n; ++r) u.g[r] += h[i] * id.g[r];
        u.F = mul(u.F, pow(id.F, h[i]));
        u.support[v] += h[i];
    }
    return u;
}

std::optional<std::vector<int>> express_at(const ExchangeGraph& graph, const ClusterMonomial& u,
                                           int seed) {
    std::size_t n = graph.rank();
    std::vector<int> h(n, 0);
    const auto& vars = graph.var_of[static_cast<std::size_t>(seed)];
    for (const auto& [v, mult] : u.support) {
        auto it = std::find(vars.begin(), vars.end(), v);
        if (it == vars.end()) return std::nullopt;
        h[static_cast<std::size_t>(it - vars.begin())] = mult;
    }
    return h;
}

}  // namespace clusterkit
