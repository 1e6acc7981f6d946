#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "clusterkit/poly.hpp"
#include "clusterkit/polytope.hpp"

namespace clusterkit::tau {

/// Indecomposable module of the linearly oriented A_n quiver 1 -> 2 -> ... -> n,
/// supported on vertices a..b. P_i = [i, n], S_i = [i, i]; quotients truncate
/// on the right endpoint ([a, c] for c in [a-1, b]), submodules on the left.
struct Interval {
    int a = 1;
    int b = 1;
    auto operator<=>(const Interval&) const = default;
};

/// Subsets of intervals as bitsets over the algebra's canonical interval order.
using IntervalSet = std::uint64_t;

/// Direct sum of intervals with multiplicities; the zero module is empty.
struct ModuleSum {
    std::map<Interval, int> mult;

    bool is_zero() const { return mult.empty(); }
    int summand_types() const { return static_cast<int>(mult.size()); }  // |M|
    bool is_basic() const;
    void add(Interval m, int count = 1);
    auto operator<=>(const ModuleSum&) const = default;
};

/// (positive part, projective decoration). The negative part stores projective
/// vertices with multiplicities.
struct DecoratedModule {
    ModuleSum plus;
    std::map<int, int> minus;  // vertex i -> multiplicity of P_i

    auto operator<=>(const DecoratedModule&) const = default;
};

/// Basic tau-tilting pair in canonical form: module summands sorted, then
/// decoration vertices sorted; `fac` is Fac M over the interval order.
struct TauTiltingPair {
    std::vector<Interval> modules;
    std::vector<int> projectives;
    IntervalSet fac = 0;

    std::size_t size() const { return modules.size() + projectives.size(); }
    DecoratedModule decorated() const;
    auto operator<=>(const TauTiltingPair&) const = default;
};

/// The path algebra of the linear A_n quiver together with its interval
/// combinatorics: hom dimensions, AR translation, fac/sub structure, and the
/// complete catalog of basic tau-tilting pairs (built lazily).
class Algebra {
public:
    explicit Algebra(int n);

    int n() const { return n_; }
    const std::vector<Interval>& intervals() const { return intervals_; }
    int index_of(Interval m) const;
    bool is_projective(Interval m) const { return m.b == n_; }
    Interval projective(int vertex) const;  // P_vertex = [vertex, n]

    /// dim Hom(M[a,b], M[c,d]): 1 iff c <= a <= d <= b.
    int hom(Interval m, Interval x) const;
    /// Same dimension from the intertwining linear system, solved by exact
    /// elimination; independent of the closed form.
    int hom_oracle(Interval m, Interval x) const;

    std::optional<Interval> tau(Interval m) const;  // [a+1, b+1], absent on projectives

    std::vector<int> dim_vector(Interval m) const;
    std::vector<int> dim_vector(const ModuleSum& m) const;

private:
    int n_;
    std::vector<Interval> intervals_;
};

int hom(const Algebra& alg, const ModuleSum& m, const ModuleSum& x);
bool is_tau_rigid(const Algebra& alg, const ModuleSum& m);
bool is_tau_rigid_pair(const Algebra& alg, const DecoratedModule& m);

/// delta = (projective presentation counts), g = -delta; decoration subtracts.
std::vector<int> delta_vector(const Algebra& alg, const DecoratedModule& m);
std::vector<int> g_vector(const Algebra& alg, const DecoratedModule& m);
std::vector<int> g_vector(const Algebra& alg, const ModuleSum& m);

/// F-polynomial: sum of y^(dim of quotient) over the interval's quotients;
/// direct sums multiply. Dual version runs over submodules.
YPolynomial f_polynomial(const Algebra& alg, Interval m);
YPolynomial f_polynomial(const Algebra& alg, const ModuleSum& m);
YPolynomial dual_f_polynomial(const Algebra& alg, Interval m);
YPolynomial dual_f_polynomial(const Algebra& alg, const ModuleSum& m);

/// Newton polytope of a module through its F-polynomial.
LatticePolytope newton_polytope_module(const Algebra& alg, const ModuleSum& m);
/// Same polytope from quotient dimension vectors (per-summand truncation dim
/// sets combined by Minkowski sums); used as a cross-check of the F route.
LatticePolytope newton_polytope_module_direct(const Algebra& alg, const ModuleSum& m);

/// E-invariants of decorated modules.
Int e_proj(const Algebra& alg, const DecoratedModule& m, const DecoratedModule& x);
Int e_sym(const Algebra& alg, const DecoratedModule& m, const DecoratedModule& x);
/// Partial F-invariant F_M[g_N] and the symmetric F-invariant. The symmetric
/// form asserts agreement with e_sym when both arguments are tau-rigid pairs.
Int partial_f_decorated(const Algebra& alg, const DecoratedModule& m, const DecoratedModule& x);
Int f_invariant_decorated(const Algebra& alg, const DecoratedModule& m, const DecoratedModule& x);

/// Fac M over intervals: X lies in Fac M iff a single summand surjects onto X.
/// The result is validated against the torsion-class axioms.
IntervalSet fac(const Algebra& alg, const ModuleSum& m);
bool is_torsion_class(const Algebra& alg, IntervalSet t);
/// Smallest torsion class containing the given intervals.
IntervalSet torsion_closure(const Algebra& alg, IntervalSet seed);
/// perp(tau U) cap Q-perp for a tau-rigid pair (U, Q).
IntervalSet perp_torsion_class(const Algebra& alg, const DecoratedModule& u);

std::vector<TauTiltingPair> enumerate_tau_tilting_pairs(const Algebra& alg);
/// All basic tau-rigid pairs (any size), canonical order.
std::vector<DecoratedModule> enumerate_tau_rigid_pairs(const Algebra& alg);
/// All basic tau-rigid modules (no decorations), canonical order.
std::vector<ModuleSum> enumerate_tau_rigid_modules(const Algebra& alg);

struct MutationResult {
    TauTiltingPair pair;
    bool left;  // Fac shrank
};

/// Replaces the k-th summand (1-based over modules-then-projectives) by the
/// unique alternative completion.
MutationResult mutate_pair(const Algebra& alg, const std::vector<TauTiltingPair>& catalog,
                           const TauTiltingPair& pair, int k);

enum class Side { left, right };

/// Completion of a tau-rigid pair: left realizes Fac U, right realizes
/// perp(tau U) cap Q-perp. Found by scan; the sandwich property is asserted
/// over every completion of U.
TauTiltingPair bongartz_pair(const Algebra& alg, const std::vector<TauTiltingPair>& catalog,
                             const DecoratedModule& u, Side side);

/// Labeling bricks of the left mutations: direction k (1-based) -> brick.
/// Uniqueness of each brick and the tropical vanishing pattern are asserted.
std::map<int, Interval> labeling_semibrick(const Algebra& alg,
                                           const std::vector<TauTiltingPair>& catalog,
                                           const TauTiltingPair& pair);

/// Torsion classes enumerated from the axioms alone (independent route).
std::vector<IntervalSet> enumerate_torsion_classes(const Algebra& alg);
/// Semibricks: interval sets with pairwise vanishing homs in both directions.
std::vector<std::vector<Interval>> enumerate_semibricks(const Algebra& alg);

struct SweepReport {
    std::size_t checked = 0;
    std::size_t failed = 0;
    bool clean() const { return failed == 0; }
};

SweepReport sweep_hom_oracle(const Algebra& alg);
SweepReport sweep_tau_rigidity(const Algebra& alg);   // Hom(M, tau M) = 0 per interval
SweepReport sweep_fe_hom(const Algebra& alg);         // F_N[g_M] = E^proj(M, N)
SweepReport sweep_check_f(const Algebra& alg);        // both halves of the hom formula
SweepReport sweep_g_mx(const Algebra& alg);           // <g_M, dim X> identity
SweepReport sweep_f_equals_e(const Algebra& alg);     // rigidity <=> vanishing invariant
SweepReport sweep_dom_hom(const Algebra& alg);        // membership <=> tropical vanishing
SweepReport sweep_exchange_lemma(const Algebra& alg); // sign pattern on left mutations

struct BijectionReport {
    std::size_t tilting_pairs = 0;
    std::size_t torsion_classes = 0;
    std::size_t semibricks = 0;
    bool consistent = false;
};

BijectionReport verify_bijection_counts(const Algebra& alg);

struct InjectivityReport {
    std::size_t candidate_count = 0;
    std::size_t class_count = 0;
    bool injective = false;
    std::vector<std::string> suspects;
    SweepReport sum_rigid;
    SweepReport exchange;
    std::string note;
};

InjectivityReport verify_theorem_B(const Algebra& alg, int mult_cap);
InjectivityReport verify_theorem_C(const Algebra& alg, int mult_cap);

std::string describe(const ModuleSum& m);
std::string describe(const DecoratedModule& m);

}  // namespace clusterkit::tau
