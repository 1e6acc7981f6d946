#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <vector>

#include "clusterkit/numeric.hpp"

namespace clusterkit {

using ExpVec = std::vector<int>;

/// Configurable term-count cap shared by all polynomial operations.
/// Runaway growth (infinite-type exploration) raises resource_error.
std::size_t& poly_term_cap();

/// Exponent key of a Laurent term. Canonical order is lexicographic on
/// (yexp, xexp), which fixes iteration order, serialization, and the monomial
/// order used by exact division.
struct LTermKey {
    ExpVec y;  // componentwise >= 0
    ExpVec x;  // arbitrary sign
    auto operator<=>(const LTermKey&) const = default;
};

class YPolynomial;

/// Sparse exact polynomial in n Laurent x-variables and n ordinary
/// y-variables. Invariant: stored coefficients are nonzero; zero is the empty
/// map; y-exponents are componentwise nonnegative.
class LaurentPoly {
public:
    LaurentPoly() : n_(0) {}
    explicit LaurentPoly(std::size_t rank) : n_(rank) {}

    static LaurentPoly zero(std::size_t rank) { return LaurentPoly(rank); }
    static LaurentPoly constant(std::size_t rank, Int c);
    /// c * x^xexp * y^yexp
    static LaurentPoly monomial(ExpVec xexp, ExpVec yexp, Int c = 1);
    static LaurentPoly x_var(std::size_t rank, std::size_t i, int power = 1);
    static LaurentPoly y_var(std::size_t rank, std::size_t i, int power = 1);

    std::size_t rank() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<LTermKey, Int>& terms() const { return terms_; }

    bool operator==(const LaurentPoly&) const = default;

    LaurentPoly operator-() const;
    friend LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
    friend LaurentPoly sub(const LaurentPoly& p, const LaurentPoly& q);
    friend LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);
    friend LaurentPoly pow(const LaurentPoly& p, const Int& e);

    /// Sums coefficients over equal y-exponents after dropping x-exponents.
    YPolynomial specialize_x_to_one() const;

    /// Sets a single nonzero coefficient (internal/builder use).
    void set_term(LTermKey key, Int c);

private:
    std::size_t n_;
    std::map<LTermKey, Int> terms_;
};

LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);

/// Exact division in Z[x^{+-1}, y]. The quotient must exist; a failure throws
/// invariant_error since the Laurent phenomenon guarantees exactness for every
/// division performed by seed mutation. Divisor must be nonzero.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& divisor);

/// Sparse exact polynomial in n ordinary y-variables.
class YPolynomial {
public:
    YPolynomial() : n_(0) {}
    explicit YPolynomial(std::size_t rank) : n_(rank) {}

    static YPolynomial zero(std::size_t rank) { return YPolynomial(rank); }
    static YPolynomial constant(std::size_t rank, Int c);
    static YPolynomial monomial(ExpVec yexp, Int c = 1);

    std::size_t rank() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<ExpVec, Int>& terms() const { return terms_; }
    Int constant_term() const;

    /// Exponent vectors carrying nonzero coefficients. Errors on zero.
    std::vector<ExpVec> support() const;

    bool operator==(const YPolynomial&) const = default;
    auto operator<=>(const YPolynomial&) const = default;

    friend YPolynomial add(const YPolynomial& p, const YPolynomial& q);
    friend YPolynomial mul(const YPolynomial& p, const YPolynomial& q);
    friend YPolynomial pow(const YPolynomial& p, const Int& e);

    void set_term(ExpVec key, Int c);

private:
    std::size_t n_;
    std::map<ExpVec, Int> terms_;
};

YPolynomial operator+(const YPolynomial& p, const YPolynomial& q);
YPolynomial operator*(const YPolynomial& p, const YPolynomial& q);

}  // namespace clusterkit
