#include "clusterkit/poly.hpp"

#include <algorithm>

namespace clusterkit {

std::size_t& poly_term_cap() {
    static std::size_t cap = 1000000;
    return cap;
}

namespace {

void check_cap(std::size_t count) {
    if (count > poly_term_cap()) throw resource_error("polynomial term cap exceeded");
}

void check_rank(std::size_t a, std::size_t b) {
    if (a != b) throw input_error("polynomial rank mismatch");
}

void check_yexp(const ExpVec& y) {
    for (int e : y)
        if (e < 0) throw input_error("y-exponent must be nonnegative");
}

}  // namespace

LaurentPoly LaurentPoly::constant(std::size_t rank, Int c) {
    LaurentPoly p(rank);
    if (c != 0) p.terms_[LTermKey{ExpVec(rank, 0), ExpVec(rank, 0)}] = std::move(c);
    return p;
}

LaurentPoly LaurentPoly::monomial(ExpVec xexp, ExpVec yexp, Int c) {
    if (xexp.size() != yexp.size()) throw input_error("monomial: exponent ranks differ");
    check_yexp(yexp);
    LaurentPoly p(xexp.size());
    if (c != 0) p.terms_[LTermKey{std::move(yexp), std::move(xexp)}] = std::move(c);
    return p;
}

LaurentPoly LaurentPoly::x_var(std::size_t rank, std::size_t i, int power) {
    ExpVec x(rank, 0), y(rank, 0);
    x.at(i) = power;
    return monomial(std::move(x), std::move(y));
}

LaurentPoly LaurentPoly::y_var(std::size_t rank, std::size_t i, int power) {
    ExpVec x(rank, 0), y(rank, 0);
    y.at(i) = power;
    return monomial(std::move(x), std::move(y));
}

void LaurentPoly::set_term(LTermKey key, Int c) {
    check_yexp(key.y);
    if (c == 0)
        terms_.erase(key);
    else
        terms_[std::move(key)] = std::move(c);
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(n_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) {
    check_rank(p.n_, q.n_);
    LaurentPoly r = p;
    for (const auto& [k, c] : q.terms_) {
        auto it = r.terms_.find(k);
        if (it == r.terms_.end()) {
            r.terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    check_cap(r.terms_.size());
    return r;
}

LaurentPoly sub(const LaurentPoly& p, const LaurentPoly& q) { return add(p, -q); }

LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) {
    check_rank(p.n_, q.n_);
    LaurentPoly r(p.n_);
    for (const auto& [ka, ca] : p.terms_) {
        for (const auto& [kb, cb] : q.terms_) {
            LTermKey k;
            k.y.resize(p.n_);
            k.x.resize(p.n_);
            for (std::size_t i = 0; i < p.n_; ++i) {
                k.y[i] = ka.y[i] + kb.y[i];
                k.x[i] = ka.x[i] + kb.x[i];
            }
            Int& slot = r.terms_[k];
            slot += ca * cb;
            if (slot == 0) r.terms_.erase(k);
        }
        check_cap(r.terms_.size());
    }
    return r;
}

LaurentPoly pow(const LaurentPoly& p, const Int& e) {
    if (e < 0) throw input_error("pow: negative exponent");
    LaurentPoly acc = LaurentPoly::constant(p.rank(), 1);
    LaurentPoly base = p;
    Int k = e;
    while (k > 0) {
        if ((k & 1) != 0) acc = mul(acc, base);
        k >>= 1;
        if (k > 0) base = mul(base, base);
    }
    return acc;
}

LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) { return add(p, q); }
LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) { return sub(p, q); }
LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) { return mul(p, q); }

YPolynomial LaurentPoly::specialize_x_to_one() const {
    YPolynomial r(n_);
    for (const auto& [k, c] : terms_) {
        // Distinct Laurent terms can collapse onto one y-monomial.
        auto cur = r.terms().find(k.y);
        Int next = (cur == r.terms().end() ? Int(0) : cur->second) + c;
        r.set_term(k.y, next);
    }
    return r;
}

namespace {

// Componentwise minimum of x-exponents over the support; used to shift a
// Laurent polynomial into the ordinary polynomial ring before division.
ExpVec min_xexp(const LaurentPoly& p) {
    ExpVec m(p.rank(), 0);
    bool first = true;
    for (const auto& [k, c] : p.terms()) {
        if (first) {
            m = k.x;
            first = false;
        } else {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], k.x[i]);
        }
    }
    return m;
}

}  // namespace

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& divisor) {
    check_rank(p.rank(), divisor.rank());
    if (divisor.is_zero()) throw input_error("exact_div: division by zero");
    if (p.is_zero()) return LaurentPoly::zero(p.rank());
    std::size_t n = p.rank();

    // Shift so both operands have nonnegative x-exponents. Extreme terms of a
    // product multiply, so when the quotient exists its shifted form is again
    // x-nonnegative and lex on (yexp, xexp) is a well-order: the loop below
    // strictly decreases the leading key and must terminate.
    ExpVec sp = min_xexp(p), sd = min_xexp(divisor);

    auto shifted = [n](const LaurentPoly& f, const ExpVec& s) {
        std::map<LTermKey, Rat> m;
        for (const auto& [k, c] : f.terms()) {
            LTermKey key = k;
            for (std::size_t i = 0; i < n; ++i) key.x[i] -= s[i];
            m.emplace(std::move(key), Rat(c));
        }
        return m;
    };
    std::map<LTermKey, Rat> rem = shifted(p, sp);
    std::map<LTermKey, Rat> div = shifted(divisor, sd);

    const auto& dlead = *div.rbegin();
    std::map<LTermKey, Rat> quo;
    while (!rem.empty()) {
        const auto& rlead = *rem.rbegin();
        LTermKey qk;
        qk.y.resize(n);
        qk.x.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            qk.y[i] = rlead.first.y[i] - dlead.first.y[i];
            qk.x[i] = rlead.first.x[i] - dlead.first.x[i];
            if (qk.y[i] < 0 || qk.x[i] < 0)
                throw invariant_error("exact_div: inexact division (Laurent phenomenon violated)");
        }
        Rat qc = rlead.second / dlead.second;
        quo.emplace(qk, qc);
        check_cap(quo.size());
        for (const auto& [dk, dc] : div) {
            LTermKey k;
            k.y.resize(n);
            k.x.resize(n);
            for (std::size_t i = 0; i < n; ++i) {
                k.y[i] = qk.y[i] + dk.y[i];
                k.x[i] = qk.x[i] + dk.x[i];
            }
            auto it = rem.find(k);
            Rat delta = qc * dc;
            if (it == rem.end()) {
                rem.emplace(std::move(k), -delta);
            } else {
                it->second -= delta;
                if (it->second == 0) rem.erase(it);
            }
        }
        check_cap(rem.size());
    }

    LaurentPoly q(n);
    for (const auto& [k, c] : quo) {
        if (boost::multiprecision::denominator(c) != 1)
            throw invariant_error("exact_div: quotient has non-integer coefficient");
        LTermKey key = k;
        for (std::size_t i = 0; i < n; ++i) key.x[i] += sp[i] - sd[i];
        q.set_term(std::move(key), boost::multiprecision::numerator(c));
    }
    return q;
}

YPolynomial YPolynomial::constant(std::size_t rank, Int c) {
    YPolynomial p(rank);
    if (c != 0) p.terms_[ExpVec(rank, 0)] = std::move(c);
    return p;
}

YPolynomial YPolynomial::monomial(ExpVec yexp, Int c) {
    check_yexp(yexp);
    YPolynomial p(yexp.size());
    if (c != 0) p.terms_[std::move(yexp)] = std::move(c);
    return p;
}

void YPolynomial::set_term(ExpVec key, Int c) {
    check_yexp(key);
    if (c == 0)
        terms_.erase(key);
    else
        terms_[std::move(key)] = std::move(c);
}

Int YPolynomial::constant_term() const {
    auto it = terms_.find(ExpVec(n_, 0));
    return it == terms_.end() ? Int(0) : it->second;
}

std::vector<ExpVec> YPolynomial::support() const {
    if (terms_.empty()) throw input_error("support: zero polynomial");
    std::vector<ExpVec> s;
    s.reserve(terms_.size());
    for (const auto& [k, c] : terms_) s.push_back(k);
    return s;
}

YPolynomial add(const YPolynomial& p, const YPolynomial& q) {
    check_rank(p.n_, q.n_);
    YPolynomial r = p;
    for (const auto& [k, c] : q.terms_) {
        auto it = r.terms_.find(k);
        if (it == r.terms_.end()) {
            r.terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    check_cap(r.terms_.size());
    return r;
}

YPolynomial mul(const YPolynomial& p, const YPolynomial& q) {
    check_rank(p.n_, q.n_);
    YPolynomial r(p.n_);
    for (const auto& [ka, ca] : p.terms_) {
        for (const auto& [kb, cb] : q.terms_) {
            ExpVec k(p.n_);
            for (std::size_t i = 0; i < p.n_; ++i) k[i] = ka[i] + kb[i];
            Int& slot = r.terms_[k];
            slot += ca * cb;
            if (slot == 0) r.terms_.erase(k);
        }
        check_cap(r.terms_.size());
    }
    return r;
}

YPolynomial pow(const YPolynomial& p, const Int& e) {
    if (e < 0) throw input_error("pow: negative exponent");
    YPolynomial acc = YPolynomial::constant(p.rank(), 1);
    YPolynomial base = p;
    Int k = e;
    while (k > 0) {
        if ((k & 1) != 0) acc = mul(acc, base);
        k >>= 1;
        if (k > 0) base = mul(base, base);
    }
    return acc;
}

YPolynomial operator+(const YPolynomial& p, const YPolynomial& q) { return add(p, q); }
YPolynomial operator*(const YPolynomial& p, const YPolynomial& q) { return mul(p, q); }

}  // namespace clusterkit
