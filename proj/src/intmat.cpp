#include "clusterkit/intmat.hpp"

#include <boost/multiprecision/integer.hpp>
#include <numeric>

namespace clusterkit {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_) throw input_error("IntMatrix: entry count does not match shape");
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw input_error("IntMatrix: ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Int IntMatrix::det() const {
    if (!is_square()) throw input_error("det: matrix not square");
    std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix m = *this;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

IntMatrix mutate_matrix(const IntMatrix& a, int k) {
    if (k < 1 || static_cast<std::size_t>(k) > a.rows() || static_cast<std::size_t>(k) > a.cols())
        throw input_error("mutate_matrix: direction out of range");
    std::size_t kk = static_cast<std::size_t>(k - 1);
    IntMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (i == kk || j == kk) {
                r.at(i, j) = -a.at(i, j);
            } else {
                r.at(i, j) = a.at(i, j) + positive_part(a.at(i, kk)) * positive_part(a.at(kk, j)) -
                             positive_part(-a.at(i, kk)) * positive_part(-a.at(kk, j));
            }
        }
    }
    return r;
}

IntMatrix mutate_extended(const IntMatrix& stacked, int k) {
    if (stacked.rows() != 2 * stacked.cols())
        throw input_error("mutate_extended: expected a 2n x n stacked matrix");
    if (k < 1 || static_cast<std::size_t>(k) > stacked.cols())
        throw input_error("mutate_extended: direction out of range");
    // Same entrywise formula; only the pivot column index must stay within [1, n].
    std::size_t kk = static_cast<std::size_t>(k - 1);
    IntMatrix r(stacked.rows(), stacked.cols());
    for (std::size_t i = 0; i < stacked.rows(); ++i) {
        for (std::size_t j = 0; j < stacked.cols(); ++j) {
            if (i == kk || j == kk) {
                r.at(i, j) = -stacked.at(i, j);
            } else {
                r.at(i, j) = stacked.at(i, j) +
                             positive_part(stacked.at(i, kk)) * positive_part(stacked.at(kk, j)) -
                             positive_part(-stacked.at(i, kk)) * positive_part(-stacked.at(kk, j));
            }
        }
    }
    return r;
}

IntMatrix stack(const IntMatrix& top, const IntMatrix& bottom) {
    if (top.cols() != bottom.cols()) throw input_error("stack: column counts differ");
    IntMatrix s(top.rows() + bottom.rows(), top.cols());
    for (std::size_t i = 0; i < top.rows(); ++i)
        for (std::size_t j = 0; j < top.cols(); ++j) s.at(i, j) = top.at(i, j);
    for (std::size_t i = 0; i < bottom.rows(); ++i)
        for (std::size_t j = 0; j < bottom.cols(); ++j) s.at(top.rows() + i, j) = bottom.at(i, j);
    return s;
}

IntMatrix top_block(const IntMatrix& stacked) {
    std::size_t n = stacked.cols();
    IntMatrix t(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t.at(i, j) = stacked.at(i, j);
    return t;
}

IntMatrix bottom_block(const IntMatrix& stacked) {
    std::size_t n = stacked.cols();
    IntMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b.at(i, j) = stacked.at(stacked.rows() - n + i, j);
    return b;
}

bool is_skew_symmetrized_by(const IntMatrix& b, const std::vector<Int>& d) {
    if (!b.is_square() || d.size() != b.rows()) return false;
    std::size_t n = b.rows();
    for (std::size_t i = 0; i < n; ++i) {
        if (d[i] <= 0) return false;
        for (std::size_t j = 0; j < n; ++j)
            if (d[i] * b.at(i, j) != -d[j] * b.at(j, i)) return false;
    }
    return true;
}

std::optional<std::vector<Int>> find_skew_symmetrizer(const IntMatrix& b) {
    if (!b.is_square()) return std::nullopt;
    std::size_t n = b.rows();
    // Propagate the proportionality d_i * b_ij = -d_j * b_ji over each connected
    // component of the nonzero pattern, as a rational multiple of the component root.
    std::vector<Rat> ratio(n, Rat(0));
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (std::size_t root = 0; root < n; ++root) {
        if (comp[root] != -1) continue;
        int c = ncomp++;
        std::vector<std::size_t> queue{root};
        comp[root] = c;
        ratio[root] = 1;
        while (!queue.empty()) {
            std::size_t i = queue.back();
            queue.pop_back();
            for (std::size_t j = 0; j < n; ++j) {
                if (b.at(i, j) == 0 && b.at(j, i) == 0) continue;
                if (b.at(i, j) == 0 || b.at(j, i) == 0) return std::nullopt;
                // d_j = -d_i * b_ij / b_ji, and it must come out positive.
                Rat rj = -ratio[i] * Rat(b.at(i, j)) / Rat(b.at(j, i));
                if (rj <= 0) return std::nullopt;
                if (comp[j] == -1) {
                    comp[j] = c;
                    ratio[j] = rj;
                    queue.push_back(j);
                } else if (ratio[j] != rj) {
                    return std::nullopt;
                }
            }
        }
    }
    // Scale each component to the minimal positive integer vector.
    std::vector<Int> d(n, 1);
    for (int c = 0; c < ncomp; ++c) {
        Int lcm_den = 1;
        for (std::size_t i = 0; i < n; ++i)
            if (comp[i] == c) lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(ratio[i]));
        Int gcd_num = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (comp[i] == c) gcd_num = boost::multiprecision::gcd(gcd_num, Int(boost::multiprecision::numerator(ratio[i]) * (lcm_den / boost::multiprecision::denominator(ratio[i]))));
        for (std::size_t i = 0; i < n; ++i)
            if (comp[i] == c)
                d[i] = boost::multiprecision::numerator(ratio[i]) * (lcm_den / boost::multiprecision::denominator(ratio[i])) / gcd_num;
    }
    if (!is_skew_symmetrized_by(b, d)) return std::nullopt;
    return d;
}

ExchangeMatrix ExchangeMatrix::make(IntMatrix b) {
    auto d = find_skew_symmetrizer(b);
    if (!d) throw input_error("ExchangeMatrix: matrix is not skew-symmetrizable");
    return ExchangeMatrix{std::move(b), std::move(*d)};
}

ExchangeMatrix ExchangeMatrix::make(IntMatrix b, std::vector<Int> d) {
    if (!is_skew_symmetrized_by(b, d))
        throw input_error("ExchangeMatrix: supplied diagonal is not a skew-symmetrizer");
    return ExchangeMatrix{std::move(b), std::move(d)};
}

}  // namespace clusterkit
