#include "clusterkit/tau.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace clusterkit::tau {

namespace {

constexpr int kMaxRank = 8;

void require_same_algebra(const Algebra& alg, Interval m) {
    if (m.a < 1 || m.a > m.b || m.b > alg.n()) throw input_error("interval out of range");
}

// max over a point list of <p, r>, in machine integers (desk-scale data).
long long fast_trop(const std::vector<std::vector<int>>& support, const std::vector<int>& r) {
    long long best = 0;
    bool first = true;
    for (const auto& p : support) {
        long long v = 0;
        for (std::size_t i = 0; i < r.size(); ++i) v += static_cast<long long>(p[i]) * r[i];
        if (first || v > best) {
            best = v;
            first = false;
        }
    }
    return best;
}

std::vector<std::vector<int>> support_points(const YPolynomial& f) {
    std::vector<std::vector<int>> pts;
    pts.reserve(f.term_count());
    for (const auto& [e, c] : f.terms()) {
        (void)c;
        pts.push_back(e);
    }
    return pts;
}

}  // namespace

bool ModuleSum::is_basic() const {
    for (const auto& [m, k] : mult) {
        (void)m;
        if (k != 1) return false;
    }
    return true;
}

void ModuleSum::add(Interval m, int count) {
    if (count <= 0) throw input_error("ModuleSum::add: nonpositive multiplicity");
    mult[m] += count;
}

DecoratedModule TauTiltingPair::decorated() const {
    DecoratedModule d;
    for (Interval m : modules) d.plus.add(m);
    for (int v : projectives) d.minus[v] += 1;
    return d;
}

Algebra::Algebra(int n) : n_(n) {
    if (n < 1 || n > kMaxRank) throw input_error("Algebra: rank must be between 1 and 8");
    for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b) intervals_.push_back(Interval{a, b});
}

int Algebra::index_of(Interval m) const {
    require_same_algebra(*this, m);
    auto it = std::lower_bound(intervals_.begin(), intervals_.end(), m);
    return static_cast<int>(it - intervals_.begin());
}

Interval Algebra::projective(int vertex) const {
    if (vertex < 1 || vertex > n_) throw input_error("projective: bad vertex");
    return Interval{vertex, n_};
}

int Algebra::hom(Interval m, Interval x) const {
    require_same_algebra(*this, m);
    require_same_algebra(*this, x);
    return (x.a <= m.a && m.a <= x.b && x.b <= m.b) ? 1 : 0;
}

int Algebra::hom_oracle(Interval m, Interval x) const {
    require_same_algebra(*this, m);
    require_same_algebra(*this, x);
    // Unknowns: one scalar per vertex in the overlap. Constraints come from
    // commuting squares psi_i f_i = f_{i+1} phi_i over V_i -> W_{i+1}.
    int lo = std::max(m.a, x.a), hi = std::min(m.b, x.b);
    if (lo > hi) return 0;
    int unknowns = hi - lo + 1;
    std::vector<std::vector<int>> rows;
    for (int i = 1; i < n_; ++i) {
        bool v_i = m.a <= i && i <= m.b;
        bool w_i1 = x.a <= i + 1 && i + 1 <= x.b;
        if (!v_i || !w_i1) continue;
        std::vector<int> row(static_cast<std::size_t>(unknowns), 0);
        bool psi = x.a <= i && i + 1 <= x.b;       // psi_i nonzero
        bool phi = m.a <= i && i + 1 <= m.b;       // phi_i nonzero
        if (psi && lo <= i && i <= hi) row[static_cast<std::size_t>(i - lo)] += 1;
        if (phi && lo <= i + 1 && i + 1 <= hi) row[static_cast<std::size_t>(i + 1 - lo)] -= 1;
        rows.push_back(std::move(row));
    }
    // rank by integer Gaussian elimination (entries stay in {-1, 0, 1})
    int rank = 0;
    for (int col = 0; col < unknowns && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (std::size_t r = static_cast<std::size_t>(rank); r < rows.size(); ++r)
            if (rows[r][static_cast<std::size_t>(col)] != 0) {
                pivot = static_cast<int>(r);
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(pivot)]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(r) == rank) continue;
            if (rows[r][static_cast<std::size_t>(col)] == 0) continue;
            int f = rows[r][static_cast<std::size_t>(col)] /
                    rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
            for (int cc = 0; cc < unknowns; ++cc)
                rows[r][static_cast<std::size_t>(cc)] -=
                    f * rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(cc)];
        }
        ++rank;
    }
    return unknowns - rank;
}

std::optional<Interval> Algebra::tau(Interval m) const {
    require_same_algebra(*this, m);
    if (m.b == n_) return std::nullopt;
    return Interval{m.a + 1, m.b + 1};
}

std::vector<int> Algebra::dim_vector(Interval m) const {
    require_same_algebra(*this, m);
    std::vector<int> d(static_cast<std::size_t>(n_), 0);
    for (int i = m.a; i <= m.b; ++i) d[static_cast<std::size_t>(i - 1)] = 1;
    return d;
}

std::vector<int> Algebra::dim_vector(const ModuleSum& m) const {
    std::vector<int> d(static_cast<std::size_t>(n_), 0);
    for (const auto& [iv, k] : m.mult) {
        for (int i = iv.a; i <= iv.b; ++i) d[static_cast<std::size_t>(i - 1)] += k;
    }
    return d;
}

int hom(const Algebra& alg, const ModuleSum& m, const ModuleSum& x) {
    int total = 0;
    for (const auto& [mi, mk] : m.mult)
        for (const auto& [xi, xk] : x.mult) total += mk * xk * alg.hom(mi, xi);
    return total;
}

bool is_tau_rigid(const Algebra& alg, const ModuleSum& m) {
    for (const auto& [mi, mk] : m.mult) {
        (void)mk;
        for (const auto& [xi, xk] : m.mult) {
            (void)xk;
            auto t = alg.tau(xi);
            if (t && alg.hom(mi, *t) != 0) return false;
        }
    }
    return true;
}

bool is_tau_rigid_pair(const Algebra& alg, const DecoratedModule& m) {
    if (!is_tau_rigid(alg, m.plus)) return false;
    for (const auto& [v, k] : m.minus) {
        (void)k;
        for (const auto& [mi, mk] : m.plus.mult) {
            (void)mk;
            if (alg.hom(alg.projective(v), mi) != 0) return false;
        }
    }
    return true;
}

std::vector<int> delta_vector(const Algebra& alg, const DecoratedModule& m) {
    std::vector<int> d(static_cast<std::size_t>(alg.n()), 0);
    for (const auto& [iv, k] : m.plus.mult) {
        d[static_cast<std::size_t>(iv.a - 1)] += k;
        if (iv.b < alg.n()) d[static_cast<std::size_t>(iv.b)] -= k;  // P_{b+1} in degree one
    }
    for (const auto& [v, k] : m.minus) d[static_cast<std::size_t>(v - 1)] -= k;
    return d;
}

std::vector<int> g_vector(const Algebra& alg, const DecoratedModule& m) {
    std::vector<int> g = delta_vector(alg, m);
    for (auto& x : g) x = -x;
    return g;
}

std::vector<int> g_vector(const Algebra& alg, const ModuleSum& m) {
    return g_vector(alg, DecoratedModule{m, {}});
}

YPolynomial f_polynomial(const Algebra& alg, Interval m) {
    require_same_algebra(alg, m);
    // Quotients are the right truncations [a, c], c in [a-1, b]; each quotient
    // Grassmannian is a point, so every realizable dimension vector counts once.
    YPolynomial f(static_cast<std::size_t>(alg.n()));
    for (int c = m.a - 1; c <= m.b; ++c) {
        ExpVec e(static_cast<std::size_t>(alg.n()), 0);
        for (int i = m.a; i <= c; ++i) e[static_cast<std::size_t>(i - 1)] = 1;
        f = f + YPolynomial::monomial(e, 1);
    }
    return f;
}

YPolynomial f_polynomial(const Algebra& alg, const ModuleSum& m) {
    YPolynomial f = YPolynomial::constant(static_cast<std::size_t>(alg.n()), 1);
    for (const auto& [iv, k] : m.mult) f = mul(f, pow(f_polynomial(alg, iv), k));
    return f;
}

YPolynomial dual_f_polynomial(const Algebra& alg, Interval m) {
    require_same_algebra(alg, m);
    YPolynomial f(static_cast<std::size_t>(alg.n()));
    for (int c = m.a; c <= m.b + 1; ++c) {  // submodules are the left truncations [c, b]
        ExpVec e(static_cast<std::size_t>(alg.n()), 0);
        for (int i = c; i <= m.b; ++i) e[static_cast<std::size_t>(i - 1)] = 1;
        f = f + YPolynomial::monomial(e, 1);
    }
    return f;
}

YPolynomial dual_f_polynomial(const Algebra& alg, const ModuleSum& m) {
    YPolynomial f = YPolynomial::constant(static_cast<std::size_t>(alg.n()), 1);
    for (const auto& [iv, k] : m.mult) f = mul(f, pow(dual_f_polynomial(alg, iv), k));
    return f;
}

LatticePolytope newton_polytope_module(const Algebra& alg, const ModuleSum& m) {
    return newton_polytope(f_polynomial(alg, m));
}

LatticePolytope newton_polytope_module_direct(const Algebra& alg, const ModuleSum& m) {
    std::size_t n = static_cast<std::size_t>(alg.n());
    LatticePolytope acc(std::vector<Point>{Point(n, 0)});
    for (const auto& [iv, k] : m.mult) {
        std::vector<Point> pts;
        for (int c = iv.a - 1; c <= iv.b; ++c) {
            Point p(n, 0);
            for (int i = iv.a; i <= c; ++i) p[static_cast<std::size_t>(i - 1)] = 1;
            pts.push_back(std::move(p));
        }
        LatticePolytope single{pts};
        for (int copy = 0; copy < k; ++copy) acc = minkowski_sum(acc, single);
    }
    return acc;
}

Int e_proj(const Algebra& alg, const DecoratedModule& m, const DecoratedModule& x) {
    // hom(N, tau M) + hom(P, N) for M = (M, P), N = (N, Q)
    Int total = 0;
    for (const auto& [ni, nk] : x.plus.mult)
        for (const auto& [mi, mk] : m.plus.mult) {
            auto t = alg.tau(mi);
            if (t) total += Int(nk) * mk * alg.hom(ni, *t);
        }
    for (const auto& [v, pk] : m.minus)
        for (const auto& [ni, nk] : x.plus.mult) total += Int(pk) * nk * alg.hom(alg.projective(v), ni);
    return total;
}

Int e_sym(const Algebra& alg, const DecoratedModule& m, const DecoratedModule& x) {
    return e_proj(alg, m, x) + e_proj(alg, x, m);
}

Int partial_f_decorated(const Algebra& alg, const DecoratedModule& m, const DecoratedModule& x) {
    YPolynomial f = f_polynomial(alg, m.plus);
    std::vector<int> g = g_vector(alg, x);
    Point r(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) r[i] = g[i];
    return tropical_eval(f, r);
}

Int f_invariant_decorated(const Algebra& alg, const DecoratedModule& m, const DecoratedModule& x) {
    Int value = partial_f_decorated(alg, m, x) + partial_f_decorated(alg, x, m);
    if (is_tau_rigid_pair(alg, m) && is_tau_rigid_pair(alg, x)) {
        if (value != e_sym(alg, m, x))
            throw invariant_error("F-invariant disagrees with the symmetric E-invariant");
    }
    return value;
}

IntervalSet fac(const Algebra& alg, const ModuleSum& m) {
    IntervalSet t = 0;
    for (const auto& [iv, k] : m.mult) {
        (void)k;
        for (int y = iv.a; y <= iv.b; ++y)
            t |= IntervalSet{1} << alg.index_of(Interval{iv.a, y});
    }
    if (!is_torsion_class(alg, t))
        throw invariant_error("Fac computed from single summands is not a torsion class");
    return t;
}

bool is_torsion_class(const Algebra& alg, IntervalSet t) {
    const auto& ivs = alg.intervals();
    for (std::size_t i = 0; i < ivs.size(); ++i) {
        if (!(t & (IntervalSet{1} << i))) continue;
        // quotient closure: [a, c] for c in [a, b]
        for (int c = ivs[i].a; c <= ivs[i].b; ++c)
            if (!(t & (IntervalSet{1} << alg.index_of(Interval{ivs[i].a, c})))) return false;
        // extension closure against members starting right after i ends
        for (std::size_t j = 0; j < ivs.size(); ++j) {
            if (!(t & (IntervalSet{1} << j))) continue;
            if (ivs[j].a == ivs[i].b + 1) {
                if (!(t & (IntervalSet{1} << alg.index_of(Interval{ivs[i].a, ivs[j].b}))))
                    return false;
            }
        }
    }
    return true;
}

IntervalSet torsion_closure(const Algebra& alg, IntervalSet seed) {
    const auto& ivs = alg.intervals();
    IntervalSet t = seed;
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t i = 0; i < ivs.size(); ++i) {
            if (!(t & (IntervalSet{1} << i))) continue;
            for (int c = ivs[i].a; c <= ivs[i].b; ++c) {
                IntervalSet bit = IntervalSet{1} << alg.index_of(Interval{ivs[i].a, c});
                if (!(t & bit)) {
                    t |= bit;
                    grew = true;
                }
            }
            for (std::size_t j = 0; j < ivs.size(); ++j) {
                if (!(t & (IntervalSet{1} << j))) continue;
                if (ivs[j].a == ivs[i].b + 1) {
                    IntervalSet bit = IntervalSet{1} << alg.index_of(Interval{ivs[i].a, ivs[j].b});
                    if (!(t & bit)) {
                        t |= bit;
                        grew = true;
                    }
                }
            }
        }
    }
    return t;
}

IntervalSet perp_torsion_class(const Algebra& alg, const DecoratedModule& u) {
    IntervalSet t = 0;
    for (std::size_t i = 0; i < alg.intervals().size(); ++i) {
        Interval x = alg.intervals()[i];
        bool inside = true;
        for (const auto& [mi, mk] : u.plus.mult) {
            (void)mk;
            auto tv = alg.tau(mi);
            if (tv && alg.hom(x, *tv) != 0) inside = false;
        }
        for (const auto& [v, k] : u.minus) {
            (void)k;
            if (alg.hom(alg.projective(v), x) != 0) inside = false;
        }
        if (inside) t |= IntervalSet{1} << i;
    }
    return t;
}

namespace {

// Items of a decorated pair in canonical order: intervals, then decorations.
struct Item {
    bool negative;
    Interval m;  // for decorations, m = P_vertex
    int vertex;
};

std::vector<Item> pair_items(const Algebra& alg) {
    std::vector<Item> items;
    for (Interval m : alg.intervals()) items.push_back(Item{false, m, 0});
    for (int v = 1; v <= alg.n(); ++v) items.push_back(Item{true, alg.projective(v), v});
    return items;
}

bool items_compatible(const Algebra& alg, const Item& x, const Item& y) {
    if (x.negative && y.negative) return true;
    if (!x.negative && !y.negative) {
        auto tx = alg.tau(x.m);
        auto ty = alg.tau(y.m);
        if (ty && alg.hom(x.m, *ty) != 0) return false;
        if (tx && alg.hom(y.m, *tx) != 0) return false;
        return true;
    }
    const Item& mod = x.negative ? y : x;
    const Item& dec = x.negative ? x : y;
    return alg.hom(alg.projective(dec.vertex), mod.m) == 0;
}

void enumerate_compatible_subsets(const Algebra& alg, const std::vector<Item>& items,
                                  std::size_t max_size,
                                  const std::function<void(const std::vector<std::size_t>&)>& emit) {
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        emit(chosen);
        if (chosen.size() == max_size) return;
        for (std::size_t i = start; i < items.size(); ++i) {
            bool ok = true;
            for (std::size_t c : chosen)
                if (!items_compatible(alg, items[c], items[i])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(i);
            rec(i + 1);
            chosen.pop_back();
        }
    };
    rec(0);
}

DecoratedModule items_to_decorated(const std::vector<Item>& items,
                                   const std::vector<std::size_t>& chosen) {
    DecoratedModule d;
    for (std::size_t i : chosen) {
        if (items[i].negative)
            d.minus[items[i].vertex] += 1;
        else
            d.plus.add(items[i].m);
    }
    return d;
}

}  // namespace

std::vector<DecoratedModule> enumerate_tau_rigid_pairs(const Algebra& alg) {
    std::vector<Item> items = pair_items(alg);
    std::vector<DecoratedModule> out;
    enumerate_compatible_subsets(alg, items, static_cast<std::size_t>(alg.n()),
                                 [&](const std::vector<std::size_t>& chosen) {
                                     out.push_back(items_to_decorated(items, chosen));
                                 });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ModuleSum> enumerate_tau_rigid_modules(const Algebra& alg) {
    std::vector<Item> items;
    for (Interval m : alg.intervals()) items.push_back(Item{false, m, 0});
    std::vector<ModuleSum> out;
    enumerate_compatible_subsets(alg, items, static_cast<std::size_t>(alg.n()),
                                 [&](const std::vector<std::size_t>& chosen) {
                                     DecoratedModule d = items_to_decorated(items, chosen);
                                     out.push_back(std::move(d.plus));
                                 });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<TauTiltingPair> enumerate_tau_tilting_pairs(const Algebra& alg) {
    std::vector<TauTiltingPair> out;
    for (const DecoratedModule& d : enumerate_tau_rigid_pairs(alg)) {
        int size = 0;
        for (const auto& [m, k] : d.plus.mult) {
            (void)m;
            size += k;
        }
        for (const auto& [v, k] : d.minus) {
            (void)v;
            size += k;
        }
        if (size != alg.n()) continue;
        TauTiltingPair pair;
        for (const auto& [m, k] : d.plus.mult) {
            (void)k;
            pair.modules.push_back(m);
        }
        for (const auto& [v, k] : d.minus) {
            (void)k;
            pair.projectives.push_back(v);
        }
        pair.fac = fac(alg, d.plus);
        out.push_back(std::move(pair));
    }
    std::sort(out.begin(), out.end());
    return out;
}

MutationResult mutate_pair(const Algebra& alg, const std::vector<TauTiltingPair>& catalog,
                           const TauTiltingPair& pair, int k) {
    if (k < 1 || static_cast<std::size_t>(k) > pair.size())
        throw input_error("mutate_pair: direction out of range");
    if (pair.size() != static_cast<std::size_t>(alg.n()))
        throw input_error("mutate_pair: not a tau-tilting pair");
    TauTiltingPair rest = pair;
    std::size_t kk = static_cast<std::size_t>(k - 1);
    if (kk < pair.modules.size())
        rest.modules.erase(rest.modules.begin() + static_cast<std::ptrdiff_t>(kk));
    else
        rest.projectives.erase(rest.projectives.begin() +
                               static_cast<std::ptrdiff_t>(kk - pair.modules.size()));
    std::vector<const TauTiltingPair*> hits;
    for (const auto& cand : catalog) {
        bool mods = std::includes(cand.modules.begin(), cand.modules.end(), rest.modules.begin(),
                                  rest.modules.end());
        bool projs = std::includes(cand.projectives.begin(), cand.projectives.end(),
                                   rest.projectives.begin(), rest.projectives.end());
        if (mods && projs) hits.push_back(&cand);
    }
    if (hits.size() != 2)
        throw invariant_error("almost tau-tilting pair does not have exactly two completions");
    const TauTiltingPair* other = (*hits[0] == pair) ? hits[1] : hits[0];
    bool left = (other->fac & pair.fac) == other->fac && other->fac != pair.fac;
    return MutationResult{*other, left};
}

TauTiltingPair bongartz_pair(const Algebra& alg, const std::vector<TauTiltingPair>& catalog,
                             const DecoratedModule& u, Side side) {
    if (!is_tau_rigid_pair(alg, u)) throw input_error("bongartz_pair: input is not tau-rigid");
    IntervalSet target = side == Side::left ? (u.plus.is_zero() ? IntervalSet{0} : fac(alg, u.plus))
                                            : perp_torsion_class(alg, u);
    const TauTiltingPair* found = nullptr;
    for (const auto& cand : catalog) {
        if (cand.fac != target) continue;
        if (found) throw invariant_error("bongartz_pair: torsion class realized twice");
        found = &cand;
    }
    if (!found) throw invariant_error("bongartz_pair: no tau-tilting pair realizes the target class");
    // Sandwich: every completion of u has Fac between Fac U and perp(tau U).
    IntervalSet lo = u.plus.is_zero() ? IntervalSet{0} : fac(alg, u.plus);
    IntervalSet hi = perp_torsion_class(alg, u);
    DecoratedModule basic = u;  // completions only see the basic support
    for (auto& [m, k] : basic.plus.mult) {
        (void)m;
        k = 1;
    }
    for (auto& [v, k] : basic.minus) {
        (void)v;
        k = 1;
    }
    for (const auto& cand : catalog) {
        bool contains = true;
        for (const auto& [m, k] : basic.plus.mult) {
            (void)k;
            if (!std::binary_search(cand.modules.begin(), cand.modules.end(), m)) contains = false;
        }
        for (const auto& [v, k] : basic.minus) {
            (void)k;
            if (!std::binary_search(cand.projectives.begin(), cand.projectives.end(), v))
                contains = false;
        }
        if (!contains) continue;
        if ((cand.fac & lo) != lo || (hi & cand.fac) != cand.fac)
            throw invariant_error("completion violates the Fac sandwich");
    }
    bool found_contains = true;
    for (const auto& [m, k] : basic.plus.mult) {
        (void)k;
        if (!std::binary_search(found->modules.begin(), found->modules.end(), m))
            found_contains = false;
    }
    for (const auto& [v, k] : basic.minus) {
        (void)k;
        if (!std::binary_search(found->projectives.begin(), found->projectives.end(), v))
            found_contains = false;
    }
    if (!found_contains)
        throw invariant_error("bongartz completion does not contain the input pair");
    return *found;
}

std::map<int, Interval> labeling_semibrick(const Algebra& alg,
                                           const std::vector<TauTiltingPair>& catalog,
                                           const TauTiltingPair& pair) {
    std::map<int, Interval> bricks;
    std::map<int, DecoratedModule> new_summands;
    for (int k = 1; static_cast<std::size_t>(k) <= pair.size(); ++k) {
        MutationResult mut = mutate_pair(alg, catalog, pair, k);
        if (!mut.left) continue;
        std::size_t kk = static_cast<std::size_t>(k - 1);
        if (kk >= pair.modules.size())
            throw invariant_error("left mutation direction with zero positive part");
        Interval mk = pair.modules[kk];
        // unique brick in (sum of other modules)^perp cap Fac M_k
        std::vector<Interval> candidates;
        for (Interval c : alg.intervals()) {
            if (!(c.a == mk.a && c.b <= mk.b)) continue;  // Fac of a single interval
            bool orthogonal = true;
            for (std::size_t j = 0; j < pair.modules.size(); ++j) {
                if (j == kk) continue;
                if (alg.hom(pair.modules[j], c) != 0) orthogonal = false;
            }
            if (orthogonal) candidates.push_back(c);
        }
        if (candidates.size() != 1)
            throw invariant_error("labeling brick is not unique");
        bricks[k] = candidates.front();
        // identify the replacement summand of the mutation
        DecoratedModule ns;
        for (Interval m : mut.pair.modules)
            if (!std::binary_search(pair.modules.begin(), pair.modules.end(), m)) ns.plus.add(m);
        for (int v : mut.pair.projectives)
            if (!std::binary_search(pair.projectives.begin(), pair.projectives.end(), v))
                ns.minus[v] += 1;
        new_summands[k] = std::move(ns);
    }
    // tropical vanishing pattern of the labeling bricks
    for (const auto& [k, ck] : bricks) {
        const DecoratedModule& ns = new_summands[k];
        for (const auto& [j, cj] : bricks) {
            DecoratedModule brick{ModuleSum{{{cj, 1}}}, {}};
            Int value = partial_f_decorated(alg, brick, ns);
            if (j == k && value == 0)
                throw invariant_error("labeling brick fails to detect its own mutation");
            if (j != k && value != 0)
                throw invariant_error("labeling brick detects a foreign mutation");
        }
    }
    // the labeling semibrick generates Fac M
    IntervalSet omega = 0;
    for (const auto& [k, c] : bricks) {
        (void)k;
        omega |= IntervalSet{1} << alg.index_of(c);
    }
    if (torsion_closure(alg, omega) != pair.fac)
        throw invariant_error("labeling semibrick does not generate Fac M");
    return bricks;
}

std::vector<IntervalSet> enumerate_torsion_classes(const Algebra& alg) {
    std::size_t count = alg.intervals().size();
    if (count > 21) throw resource_error("torsion-class enumeration beyond desk scale");
    std::vector<IntervalSet> out;
    for (IntervalSet t = 0; t < (IntervalSet{1} << count); ++t)
        if (is_torsion_class(alg, t)) out.push_back(t);
    return out;
}

std::vector<std::vector<Interval>> enumerate_semibricks(const Algebra& alg) {
    const auto& ivs = alg.intervals();
    std::vector<std::vector<Interval>> out;
    std::vector<Interval> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        out.push_back(chosen);
        for (std::size_t i = start; i < ivs.size(); ++i) {
            bool orthogonal = true;
            for (Interval c : chosen)
                if (alg.hom(c, ivs[i]) != 0 || alg.hom(ivs[i], c) != 0) {
                    orthogonal = false;
                    break;
                }
            if (!orthogonal) continue;
            chosen.push_back(ivs[i]);
            rec(i + 1);
            chosen.pop_back();
        }
    };
    rec(0);
    return out;
}

SweepReport sweep_hom_oracle(const Algebra& alg) {
    SweepReport rep;
    for (Interval m : alg.intervals())
        for (Interval x : alg.intervals()) {
            ++rep.checked;
            if (alg.hom(m, x) != alg.hom_oracle(m, x)) ++rep.failed;
        }
    return rep;
}

SweepReport sweep_tau_rigidity(const Algebra& alg) {
    SweepReport rep;
    for (Interval m : alg.intervals()) {
        ++rep.checked;
        auto t = alg.tau(m);
        if (t && alg.hom(m, *t) != 0) ++rep.failed;
    }
    return rep;
}

SweepReport sweep_fe_hom(const Algebra& alg) {
    SweepReport rep;
    std::vector<DecoratedModule> rigid = enumerate_tau_rigid_pairs(alg);
    std::vector<DecoratedModule> indec;
    for (Interval m : alg.intervals()) indec.push_back(DecoratedModule{ModuleSum{{{m, 1}}}, {}});
    for (int v = 1; v <= alg.n(); ++v) indec.push_back(DecoratedModule{{}, {{v, 1}}});
    for (const auto& m : rigid) {
        for (const auto& x : indec) {
            ++rep.checked;
            if (partial_f_decorated(alg, x, m) != e_proj(alg, m, x)) ++rep.failed;
        }
    }
    // additivity in both slots, on consecutive indecomposable pairs
    for (const auto& m : rigid) {
        if (m.plus.summand_types() + static_cast<int>(m.minus.size()) < 2) continue;
        // split off the first indecomposable summand
        DecoratedModule head, tail = m;
        if (!m.plus.mult.empty()) {
            auto it = tail.plus.mult.begin();
            head.plus.add(it->first, it->second);
            tail.plus.mult.erase(tail.plus.mult.begin());
        } else {
            auto it = tail.minus.begin();
            head.minus[it->first] = it->second;
            tail.minus.erase(tail.minus.begin());
        }
        for (const auto& x : indec) {
            ++rep.checked;
            if (partial_f_decorated(alg, x, m) !=
                partial_f_decorated(alg, x, head) + partial_f_decorated(alg, x, tail))
                ++rep.failed;
            ++rep.checked;
            if (partial_f_decorated(alg, m, x) !=
                partial_f_decorated(alg, head, x) + partial_f_decorated(alg, tail, x))
                ++rep.failed;
        }
    }
    return rep;
}

SweepReport sweep_check_f(const Algebra& alg) {
    SweepReport rep;
    auto check_pair = [&](const ModuleSum& m, Interval n_iv) {
        DecoratedModule md{m, {}};
        DecoratedModule nd{ModuleSum{{{n_iv, 1}}}, {}};
        std::vector<int> g = g_vector(alg, md);
        Point r(g.size()), neg(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) {
            r[i] = g[i];
            neg[i] = -g[i];
        }
        Int lhs1 = tropical_eval(f_polynomial(alg, ModuleSum{{{n_iv, 1}}}), r);
        Int rhs1 = 0;
        for (const auto& [mi, mk] : m.mult) {
            auto t = alg.tau(mi);
            if (t) rhs1 += Int(mk) * alg.hom(n_iv, *t);
        }
        ++rep.checked;
        if (lhs1 != rhs1) ++rep.failed;
        Int lhs2 = tropical_eval(dual_f_polynomial(alg, ModuleSum{{{n_iv, 1}}}), neg);
        Int rhs2 = 0;
        for (const auto& [mi, mk] : m.mult) rhs2 += Int(mk) * alg.hom(mi, n_iv);
        ++rep.checked;
        if (lhs2 != rhs2) ++rep.failed;
        (void)nd;
    };
    for (Interval m : alg.intervals())
        for (Interval x : alg.intervals()) check_pair(ModuleSum{{{m, 1}}}, x);
    for (const ModuleSum& m : enumerate_tau_rigid_modules(alg))
        for (Interval x : alg.intervals()) check_pair(m, x);
    return rep;
}

SweepReport sweep_g_mx(const Algebra& alg) {
    SweepReport rep;
    for (Interval m : alg.intervals()) {
        std::vector<int> g = g_vector(alg, ModuleSum{{{m, 1}}});
        for (Interval x : alg.intervals()) {
            std::vector<int> dim = alg.dim_vector(x);
            long long lhs = 0;
            for (std::size_t i = 0; i < g.size(); ++i)
                lhs += static_cast<long long>(g[i]) * dim[i];
            auto t = alg.tau(m);
            long long rhs = (t ? alg.hom(x, *t) : 0) - alg.hom(m, x);
            ++rep.checked;
            if (lhs != rhs) ++rep.failed;
        }
    }
    return rep;
}

SweepReport sweep_f_equals_e(const Algebra& alg) {
    SweepReport rep;
    std::vector<DecoratedModule> rigid = enumerate_tau_rigid_pairs(alg);
    struct Cached {
        std::vector<std::vector<int>> support;
        std::vector<int> g;
    };
    std::vector<Cached> cache;
    cache.reserve(rigid.size());
    for (const auto& m : rigid)
        cache.push_back(Cached{support_points(f_polynomial(alg, m.plus)), g_vector(alg, m)});
    for (std::size_t i = 0; i < rigid.size(); ++i) {
        for (std::size_t j = i; j < rigid.size(); ++j) {
            long long trop =
                fast_trop(cache[i].support, cache[j].g) + fast_trop(cache[j].support, cache[i].g);
            Int esym = e_sym(alg, rigid[i], rigid[j]);
            ++rep.checked;
            if (esym != trop) {
                ++rep.failed;
                continue;
            }
            DecoratedModule sum = rigid[i];
            for (const auto& [m, k] : rigid[j].plus.mult) sum.plus.add(m, k);
            for (const auto& [v, k] : rigid[j].minus) sum.minus[v] += k;
            ++rep.checked;
            if ((trop == 0) != is_tau_rigid_pair(alg, sum)) ++rep.failed;
        }
    }
    return rep;
}

SweepReport sweep_dom_hom(const Algebra& alg) {
    SweepReport rep;
    for (const DecoratedModule& m : enumerate_tau_rigid_pairs(alg)) {
        IntervalSet perp = perp_torsion_class(alg, m);
        for (std::size_t i = 0; i < alg.intervals().size(); ++i) {
            Interval x = alg.intervals()[i];
            bool member = (perp >> i) & 1;
            Int value = partial_f_decorated(alg, DecoratedModule{ModuleSum{{{x, 1}}}, {}}, m);
            ++rep.checked;
            if (member != (value == 0)) ++rep.failed;
        }
    }
    return rep;
}

SweepReport sweep_exchange_lemma(const Algebra& alg) {
    SweepReport rep;
    std::vector<TauTiltingPair> catalog = enumerate_tau_tilting_pairs(alg);
    for (const auto& pair : catalog) {
        for (int k = 1; static_cast<std::size_t>(k) <= pair.size(); ++k) {
            MutationResult mut = mutate_pair(alg, catalog, pair, k);
            if (!mut.left) continue;
            std::size_t kk = static_cast<std::size_t>(k - 1);
            if (kk >= pair.modules.size()) {
                ++rep.checked;
                ++rep.failed;  // a left mutation must leave a module summand
                continue;
            }
            DecoratedModule mk{ModuleSum{{{pair.modules[kk], 1}}}, {}};
            DecoratedModule nk;
            for (Interval m : mut.pair.modules)
                if (!std::binary_search(pair.modules.begin(), pair.modules.end(), m))
                    nk.plus.add(m);
            for (int v : mut.pair.projectives)
                if (!std::binary_search(pair.projectives.begin(), pair.projectives.end(), v))
                    nk.minus[v] += 1;
            ++rep.checked;
            if (!(partial_f_decorated(alg, nk, mk) == 0 && partial_f_decorated(alg, mk, nk) > 0))
                ++rep.failed;
        }
    }
    return rep;
}

BijectionReport verify_bijection_counts(const Algebra& alg) {
    BijectionReport rep;
    std::vector<TauTiltingPair> pairs = enumerate_tau_tilting_pairs(alg);
    std::vector<IntervalSet> torsion = enumerate_torsion_classes(alg);
    std::vector<std::vector<Interval>> bricks = enumerate_semibricks(alg);
    rep.tilting_pairs = pairs.size();
    rep.torsion_classes = torsion.size();
    rep.semibricks = bricks.size();
    // the Fac map must hit every torsion class exactly once
    std::set<IntervalSet> images;
    for (const auto& p : pairs) images.insert(p.fac);
    std::set<IntervalSet> all(torsion.begin(), torsion.end());
    rep.consistent = rep.tilting_pairs == rep.torsion_classes &&
                     rep.torsion_classes == rep.semibricks && images == all;
    return rep;
}

namespace {

// Key of a candidate's Newton polytope: tropical values over all directions in
// {-1,0,1}^n, computed additively from per-summand support tables.
std::vector<std::vector<int>> key_directions(int n) {
    std::vector<std::vector<int>> dirs;
    std::vector<int> d(static_cast<std::size_t>(n), -1);
    while (true) {
        if (std::any_of(d.begin(), d.end(), [](int x) { return x != 0; })) dirs.push_back(d);
        int i = 0;
        while (i < n && d[static_cast<std::size_t>(i)] == 1) d[static_cast<std::size_t>(i++)] = -1;
        if (i == n) break;
        ++d[static_cast<std::size_t>(i)];
    }
    return dirs;
}

struct CandidateGroup {
    std::vector<ModuleSum> members;
};

InjectivityReport injectivity_over(const Algebra& alg, const std::vector<ModuleSum>& basics,
                                   int mult_cap, bool check_sum_rigid) {
    InjectivityReport rep;
    std::vector<std::vector<int>> dirs = key_directions(alg.n());
    // tropical table per interval
    std::map<Interval, std::vector<long long>> table;
    for (Interval m : alg.intervals()) {
        auto pts = support_points(f_polynomial(alg, m));
        std::vector<long long> row;
        row.reserve(dirs.size());
        for (const auto& r : dirs) row.push_back(fast_trop(pts, r));
        table.emplace(m, std::move(row));
    }
    std::map<std::vector<long long>, CandidateGroup> groups;
    for (const ModuleSum& basic : basics) {
        std::vector<Interval> elems;
        for (const auto& [m, k] : basic.mult) {
            (void)k;
            elems.push_back(m);
        }
        std::vector<int> mults(elems.size(), 1);
        while (true) {
            ModuleSum candidate;
            for (std::size_t i = 0; i < elems.size(); ++i) candidate.add(elems[i], mults[i]);
            if (elems.empty()) candidate = ModuleSum{};
            std::vector<long long> key(dirs.size(), 0);
            for (std::size_t i = 0; i < elems.size(); ++i) {
                const auto& row = table[elems[i]];
                for (std::size_t r = 0; r < dirs.size(); ++r) key[r] += mults[i] * row[r];
            }
            ++rep.candidate_count;
            groups[key].members.push_back(std::move(candidate));
            // odometer
            std::size_t i = 0;
            while (i < mults.size() && mults[i] == mult_cap) mults[i++] = 1;
            if (i == mults.size()) break;
            ++mults[i];
        }
    }
    rep.class_count = groups.size();
    for (auto& [key, group] : groups) {
        (void)key;
        if (group.members.size() == 1) {
            if (check_sum_rigid) {
                // the only equal-polytope pair here is (U, U)
                ModuleSum dbl = group.members.front();
                for (auto& [m, k] : dbl.mult) {
                    (void)m;
                    k *= 2;
                }
                ++rep.sum_rigid.checked;
                if (!is_tau_rigid(alg, dbl)) ++rep.sum_rigid.failed;
            }
            continue;
        }
        // Exact pairwise confirmation through the expanded polynomials; only
        // genuinely equal polytopes count as collisions.
        std::vector<ModuleSum> confirmed;
        for (std::size_t i = 0; i < group.members.size(); ++i) {
            for (std::size_t j = i + 1; j < group.members.size(); ++j) {
                LatticePolytope pi = newton_polytope_module(alg, group.members[i]);
                LatticePolytope pj = newton_polytope_module(alg, group.members[j]);
                if (equals(pi, pj)) {
                    if (check_sum_rigid) {
                        ModuleSum sum = group.members[i];
                        for (const auto& [m, k] : group.members[j].mult) sum.add(m, k);
                        ++rep.sum_rigid.checked;
                        if (!is_tau_rigid(alg, sum)) ++rep.sum_rigid.failed;
                    }
                    if (confirmed.empty()) confirmed.push_back(group.members[i]);
                    confirmed.push_back(group.members[j]);
                }
            }
        }
        if (!confirmed.empty()) {
            std::string desc;
            for (const auto& m : confirmed) desc += describe(m) + "  vs  ";
            rep.suspects.push_back(std::move(desc));
        }
    }
    rep.injective = rep.suspects.empty();
    rep.exchange = sweep_exchange_lemma(alg);
    return rep;
}

}  // namespace

InjectivityReport verify_theorem_B(const Algebra& alg, int mult_cap) {
    if (mult_cap < 1) throw input_error("verify_theorem_B: cap must be positive");
    InjectivityReport rep =
        injectivity_over(alg, enumerate_tau_rigid_modules(alg), mult_cap, true);
    rep.note = "tau-rigid modules, multiplicities up to " + std::to_string(mult_cap);
    return rep;
}

InjectivityReport verify_theorem_C(const Algebra& alg, int mult_cap) {
    if (mult_cap < 1) throw input_error("verify_theorem_C: cap must be positive");
    std::vector<ModuleSum> basics;
    for (const auto& bricks : enumerate_semibricks(alg)) {
        ModuleSum m;
        for (Interval c : bricks) m.add(c);
        basics.push_back(std::move(m));
    }
    std::sort(basics.begin(), basics.end());
    InjectivityReport rep = injectivity_over(alg, basics, mult_cap, false);
    rep.note =
        "multi-semibricks, multiplicities up to " + std::to_string(mult_cap) +
        "; left-finiteness is automatic on a representation-finite algebra (assumption recorded)";
    return rep;
}

std::string describe(const ModuleSum& m) {
    if (m.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [iv, k] : m.mult) {
        if (!first) os << "+";
        first = false;
        os << "M[" << iv.a << "," << iv.b << "]";
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

std::string describe(const DecoratedModule& m) {
    std::ostringstream os;
    os << "(" << describe(m.plus) << ", ";
    if (m.minus.empty()) {
        os << "0";
    } else {
        bool first = true;
        for (const auto& [v, k] : m.minus) {
            if (!first) os << "+";
            first = false;
            os << "P" << v;
            if (k > 1) os << "^" << k;
        }
    }
    os << ")";
    return os.str();
}

}  // namespace clusterkit::tau
