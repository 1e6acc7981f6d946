#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "clusterkit/numeric.hpp"

namespace clusterkit {

/// Dense rectangular matrix with arbitrary-precision integer entries.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

    /// Build from nested initializer-style data; rows must be equal length.
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const IntMatrix&) const = default;

    IntMatrix transpose() const;
    bool is_square() const { return rows_ == cols_; }

    /// Exact determinant via fraction-free (Bareiss) elimination.
    Int det() const;

private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

/// Fomin-Zelevinsky matrix mutation in direction k (1-based, k <= min(m,n)).
/// a'_ij = -a_ij on row/column k, else a_ij + [a_ik]+[a_kj]+ - [-a_ik]+[-a_kj]+.
IntMatrix mutate_matrix(const IntMatrix& a, int k);

/// Mutation of a stacked (2n x n) matrix (B over C); the top block transforms
/// exactly as mutate_matrix of the top block.
IntMatrix mutate_extended(const IntMatrix& stacked, int k);

/// Vertical stack (top; bottom), equal column counts.
IntMatrix stack(const IntMatrix& top, const IntMatrix& bottom);
IntMatrix top_block(const IntMatrix& stacked);
IntMatrix bottom_block(const IntMatrix& stacked);

/// The gcd-normalized positive diagonal D with D*B skew-symmetric, or absent
/// when none exists. Each connected component of the nonzero pattern gets its
/// minimal positive integer solution; unconstrained indices get 1.
std::optional<std::vector<Int>> find_skew_symmetrizer(const IntMatrix& b);

bool is_skew_symmetrized_by(const IntMatrix& b, const std::vector<Int>& d);

/// Skew-symmetrizable square matrix bundled with its canonical symmetrizer.
struct ExchangeMatrix {
    IntMatrix B;
    std::vector<Int> D;

    std::size_t rank() const { return B.rows(); }

    /// Validates squareness and existence of a symmetrizer; fixes D canonically.
    static ExchangeMatrix make(IntMatrix b);
    /// As above but with a caller-supplied symmetrizer (must be valid).
    static ExchangeMatrix make(IntMatrix b, std::vector<Int> d);
};

}  // namespace clusterkit
