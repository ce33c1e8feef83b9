#pragma once

#include <cstddef>
#include <vector>

#include "distset/quadext.hpp"

namespace distset {

/// Dense matrix over one quadratic field (entries rational or sharing a
/// single radicand; plain rationals mix freely).
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ExactMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    QuadExt& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const QuadExt& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;

    ExactMatrix transposed() const;

    bool operator==(const ExactMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<QuadExt> data_;
};

/// Signature of a symmetric matrix: eigenvalue sign counts.
struct Inertia {
    std::size_t n_pos = 0;
    std::size_t n_neg = 0;
    std::size_t n_zero = 0;

    bool operator==(const Inertia& o) const {
        return n_pos == o.n_pos && n_neg == o.n_neg && n_zero == o.n_zero;
    }
    bool is_psd() const { return n_neg == 0; }
};

/// Exact rank by Gaussian elimination; any nonzero pivot is valid, first
/// nonzero in column order is taken for determinism.
std::size_t rank(const ExactMatrix& m);

/// Inertia via symmetric elimination (congruence steps only, so the result
/// is Sylvester-exact). Throws NotSymmetric.
Inertia ldlt_inertia(const ExactMatrix& m);

/// Exact determinant. Throws NotSquare.
QuadExt determinant(const ExactMatrix& m);

/// Basis of the right null space {v : Mv = 0}.
std::vector<std::vector<QuadExt>> kernel(const ExactMatrix& m);

}  // namespace distset
