#include "clusterkit/polytope.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace clusterkit {

namespace {

// Phase-1 simplex over exact rationals with Bland's rule: decides feasibility
// of A*lambda = b, lambda >= 0 where A is (n+1) x m (point coordinates plus
// the convex-combination row of ones). Degeneracy is common for lattice data,
// hence Bland's anti-cycling pivot choice.
bool convex_system_feasible(const std::vector<Point>& pts, const RatPoint& q) {
    std::size_t m = pts.size();
    std::size_t rows = q.size() + 1;
    // tableau[r] = coefficients of lambda_0..lambda_{m-1}, artificial vars, rhs
    std::size_t cols = m + rows + 1;
    std::vector<std::vector<Rat>> t(rows, std::vector<Rat>(cols, Rat(0)));
    for (std::size_t r = 0; r + 1 < rows; ++r) {
        for (std::size_t j = 0; j < m; ++j) t[r][j] = Rat(pts[j][r]);
        t[r][cols - 1] = q[r];
    }
    for (std::size_t j = 0; j < m; ++j) t[rows - 1][j] = 1;
    t[rows - 1][cols - 1] = 1;
    for (std::size_t r = 0; r < rows; ++r) {
        if (t[r][cols - 1] < 0)
            for (std::size_t j = 0; j < cols; ++j) t[r][j] = -t[r][j];
        t[r][m + r] = 1;
    }
    std::vector<std::size_t> basis(rows);
    for (std::size_t r = 0; r < rows; ++r) basis[r] = m + r;

    // Reduced objective: minimize the sum of artificials. Row z holds the
    // negated sum of all constraint rows (so artificial columns read 0).
    std::vector<Rat> z(cols, Rat(0));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t j = 0; j < cols; ++j) z[j] -= t[r][j];
    for (std::size_t r = 0; r < rows; ++r) z[m + r] = 0;

    while (true) {
        // Bland: entering = smallest-index column with negative reduced cost.
        std::size_t enter = cols;
        for (std::size_t j = 0; j + 1 < cols; ++j) {
            if (z[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == cols) break;
        // Leaving: min ratio, ties broken by smallest basis index.
        std::size_t leave = rows;
        Rat best;
        for (std::size_t r = 0; r < rows; ++r) {
            if (t[r][enter] > 0) {
                Rat ratio = t[r][cols - 1] / t[r][enter];
                if (leave == rows || ratio < best ||
                    (ratio == best && basis[r] < basis[leave])) {
                    best = ratio;
                    leave = r;
                }
            }
        }
        if (leave == rows) break;  // unbounded cannot happen here, but be safe
        Rat piv = t[leave][enter];
        for (std::size_t j = 0; j < cols; ++j) t[leave][j] /= piv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == leave || t[r][enter] == 0) continue;
            Rat f = t[r][enter];
            for (std::size_t j = 0; j < cols; ++j) t[r][j] -= f * t[leave][j];
        }
        if (z[enter] != 0) {
            Rat f = z[enter];
            for (std::size_t j = 0; j < cols; ++j) z[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    Rat objective(0);
    for (std::size_t r = 0; r < rows; ++r)
        if (basis[r] >= m) objective += t[r][cols - 1];
    return objective == 0;
}

std::vector<Point> dedup_sorted(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

}  // namespace

bool in_hull(const std::vector<Point>& points, const RatPoint& q) {
    if (points.empty()) return false;
    if (q.size() != points.front().size()) throw input_error("in_hull: dimension mismatch");
    // Generator points short-circuit; also reject anything outside the box.
    for (const auto& p : points) {
        bool same = true;
        for (std::size_t i = 0; i < q.size(); ++i)
            if (Rat(p[i]) != q[i]) {
                same = false;
                break;
            }
        if (same) return true;
    }
    for (std::size_t i = 0; i < q.size(); ++i) {
        Int lo = points[0][i], hi = points[0][i];
        for (const auto& p : points) {
            lo = std::min(lo, p[i]);
            hi = std::max(hi, p[i]);
        }
        if (q[i] < lo || q[i] > hi) return false;
    }
    return convex_system_feasible(points, q);
}

LatticePolytope::LatticePolytope(std::vector<Point> points) {
    if (points.empty()) throw input_error("LatticePolytope: empty point set");
    dim_ = points.front().size();
    for (const auto& p : points)
        if (p.size() != dim_) throw input_error("LatticePolytope: mixed dimensions");
    points_ = dedup_sorted(std::move(points));
}

const std::vector<Point>& LatticePolytope::vertices() const {
    auto cached = std::atomic_load(&vertex_cache_);
    if (cached) return *cached;
    // A point is a vertex iff it lies outside the hull of the others. Interior
    // points can be dropped as they are found without changing the hull, which
    // keeps later queries small; iteration order is canonical so the result is
    // deterministic and concurrent duplicate computation is idempotent.
    std::vector<Point> active = points_;
    std::size_t i = 0;
    while (i < active.size() && active.size() > 1) {
        std::vector<Point> others;
        others.reserve(active.size() - 1);
        for (std::size_t j = 0; j < active.size(); ++j)
            if (j != i) others.push_back(active[j]);
        RatPoint q(dim_);
        for (std::size_t c = 0; c < dim_; ++c) q[c] = Rat(active[i][c]);
        if (in_hull(others, q))
            active.erase(active.begin() + static_cast<std::ptrdiff_t>(i));
        else
            ++i;
    }
    auto fresh = std::make_shared<const std::vector<Point>>(std::move(active));
    std::shared_ptr<const std::vector<Point>> expected;
    std::atomic_compare_exchange_strong(&vertex_cache_, &expected, fresh);
    return *std::atomic_load(&vertex_cache_);
}

std::string LatticePolytope::canonical_key() const {
    const auto& v = vertices();
    std::ostringstream os;
    for (const auto& p : v) {
        for (const auto& c : p) os << c << ',';
        os << ';';
    }
    return os.str();
}

bool contains(const LatticePolytope& p, const RatPoint& q) {
    if (q.size() != p.dim()) throw input_error("contains: dimension mismatch");
    return in_hull(p.points(), q);
}

bool contains(const LatticePolytope& p, const Point& q) {
    RatPoint r(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) r[i] = Rat(q[i]);
    return contains(p, r);
}

namespace {

// Exact necessary screen for hull equality: support values must agree on the
// coordinate directions and the all-ones diagonals.
bool support_screen(const LatticePolytope& p, const LatticePolytope& q) {
    std::size_t n = p.dim();
    std::vector<Point> dirs;
    for (std::size_t i = 0; i < n; ++i) {
        Point r(n, 0);
        r[i] = 1;
        dirs.push_back(r);
        r[i] = -1;
        dirs.push_back(r);
    }
    dirs.push_back(Point(n, 1));
    dirs.push_back(Point(n, -1));
    for (const auto& r : dirs)
        if (support_function(p, r) != support_function(q, r)) return false;
    return true;
}

}  // namespace

bool equals(const LatticePolytope& p, const LatticePolytope& q) {
    if (p.dim() != q.dim()) throw input_error("equals: dimension mismatch");
    if (p.points() == q.points()) return true;
    if (!support_screen(p, q)) return false;
    for (const auto& a : p.points()) {
        if (!contains(q, a)) return false;
    }
    for (const auto& b : q.points()) {
        if (!contains(p, b)) return false;
    }
    return true;
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
    if (p.dim() != q.dim()) throw input_error("minkowski_sum: dimension mismatch");
    std::set<Point> sums;
    for (const auto& a : p.points()) {
        for (const auto& b : q.points()) {
            Point s(p.dim());
            for (std::size_t i = 0; i < p.dim(); ++i) s[i] = a[i] + b[i];
            sums.insert(std::move(s));
        }
    }
    return LatticePolytope(std::vector<Point>(sums.begin(), sums.end()));
}

Int support_function(const LatticePolytope& p, const Point& r) {
    if (r.size() != p.dim()) throw input_error("support_function: dimension mismatch");
    bool first = true;
    Int best = 0;
    for (const auto& a : p.points()) {
        Int v = 0;
        for (std::size_t i = 0; i < r.size(); ++i) v += a[i] * r[i];
        if (first || v > best) {
            best = v;
            first = false;
        }
    }
    return best;
}

LatticePolytope newton_polytope(const YPolynomial& f) {
    if (f.is_zero()) throw input_error("newton_polytope: zero polynomial");
    std::vector<Point> pts;
    pts.reserve(f.term_count());
    for (const auto& [k, c] : f.terms()) {
        Point p(k.size());
        for (std::size_t i = 0; i < k.size(); ++i) p[i] = k[i];
        pts.push_back(std::move(p));
    }
    return LatticePolytope(std::move(pts));
}

Int tropical_eval(const YPolynomial& f, const Point& r) {
    if (f.is_zero()) throw input_error("tropical_eval: zero polynomial");
    if (r.size() != f.rank()) throw input_error("tropical_eval: dimension mismatch");
    bool first = true;
    Int best = 0;
    for (const auto& [k, c] : f.terms()) {
        Int v = 0;
        for (std::size_t i = 0; i < r.size(); ++i) v += k[i] * r[i];
        if (first || v > best) {
            best = v;
            first = false;
        }
    }
    return best;
}

}  // namespace clusterkit
