#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "clusterkit/numeric.hpp"
#include "clusterkit/poly.hpp"

namespace clusterkit {

using Point = std::vector<Int>;
using RatPoint = std::vector<Rat>;

/// Lattice polytope given by a finite generator point set. Vertices (the
/// minimal generating subset) are computed lazily by exact membership queries
/// and cached; the cache is idempotent under concurrent recomputation.
class LatticePolytope {
public:
    LatticePolytope() : dim_(0) {}
    /// Points must be nonempty and of equal dimension; duplicates are merged.
    explicit LatticePolytope(std::vector<Point> points);

    std::size_t dim() const { return dim_; }
    const std::vector<Point>& points() const { return points_; }

    /// Hull vertices in lexicographic order.
    const std::vector<Point>& vertices() const;

    /// Canonical identifier: the sorted vertex list rendered as text. Two
    /// polytopes are equal iff their keys coincide.
    std::string canonical_key() const;

private:
    std::size_t dim_;
    std::vector<Point> points_;
    // Idempotent cache: duplicate concurrent computation yields the same
    // vector; whichever shared_ptr lands first wins.
    mutable std::shared_ptr<const std::vector<Point>> vertex_cache_;
};

/// Exact membership q in hull(points), decided by rational simplex
/// (feasibility of the convex-combination system, Bland's rule).
bool in_hull(const std::vector<Point>& points, const RatPoint& q);

bool contains(const LatticePolytope& p, const RatPoint& q);
bool contains(const LatticePolytope& p, const Point& q);

/// Hull equality via mutual containment of generator points. A support-value
/// screen on a fixed direction set rejects cheap mismatches first; the LP
/// decides the rest, so the result is exact.
bool equals(const LatticePolytope& p, const LatticePolytope& q);

/// Generator set = all pairwise sums; the hull is the Minkowski sum.
LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);

/// h_P(r) = max over generator points of <a, r>.
Int support_function(const LatticePolytope& p, const Point& r);

/// Newton polytope of a nonzero polynomial: hull of the exponent support.
LatticePolytope newton_polytope(const YPolynomial& f);

/// F[r] = max over support exponents of <v, r>. Agrees with the support
/// function of the Newton polytope.
Int tropical_eval(const YPolynomial& f, const Point& r);

}  // namespace clusterkit
