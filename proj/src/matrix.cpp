#include "distset/matrix.hpp"

#include <utility>

namespace distset {

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = QuadExt(1);
    return m;
}

bool ExactMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

ExactMatrix ExactMatrix::transposed() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

namespace {

// Row echelon reduction in place; returns pivot columns.
std::vector<std::size_t> echelon(ExactMatrix& a) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t p = row;
        while (p < a.rows() && a.at(p, col).is_zero()) ++p;
        if (p == a.rows()) continue;
        if (p != row) {
            for (std::size_t c = col; c < a.cols(); ++c) std::swap(a.at(p, c), a.at(row, c));
        }
        const QuadExt pivot = a.at(row, col);
        for (std::size_t r = row + 1; r < a.rows(); ++r) {
            if (a.at(r, col).is_zero()) continue;
            QuadExt factor = a.at(r, col) / pivot;
            a.at(r, col) = QuadExt(0);
            for (std::size_t c = col + 1; c < a.cols(); ++c) {
                a.at(r, c) -= factor * a.at(row, c);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const ExactMatrix& m) {
    ExactMatrix a = m;
    return echelon(a).size();
}

Inertia ldlt_inertia(const ExactMatrix& m) {
    if (!m.is_square()) throw Error(ErrorCode::NotSymmetric, "matrix is not square");
    if (!m.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "matrix is not symmetric");
    ExactMatrix a = m;
    const std::size_t n = a.rows();
    Inertia inertia;
    std::size_t k = 0;
    while (k < n) {
        // prefer a nonzero diagonal pivot
        std::size_t p = k;
        while (p < n && a.at(p, p).is_zero()) ++p;
        if (p == n) {
            // all remaining diagonal entries are zero; look for a nonzero
            // off-diagonal and fold it onto the diagonal by the congruence
            // (row,col)_i += (row,col)_j, giving diagonal entry 2*a[i][j].
            std::size_t fi = n, fj = n;
            for (std::size_t i = k; i < n && fi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (!a.at(i, j).is_zero()) {
                        fi = i;
                        fj = j;
                        break;
                    }
            if (fi == n) {
                inertia.n_zero += n - k;
                break;
            }
            for (std::size_t c = 0; c < n; ++c) a.at(fi, c) += a.at(fj, c);
            for (std::size_t r = 0; r < n; ++r) a.at(r, fi) += a.at(r, fj);
            continue;
        }
        if (p != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a.at(p, c), a.at(k, c));
            for (std::size_t r = 0; r < n; ++r) std::swap(a.at(r, p), a.at(r, k));
        }
        const QuadExt pivot = a.at(k, k);
        if (pivot.sign() > 0) {
            ++inertia.n_pos;
        } else {
            ++inertia.n_neg;
        }
        for (std::size_t r = k + 1; r < n; ++r) {
            if (a.at(r, k).is_zero()) continue;
            QuadExt factor = a.at(r, k) / pivot;
            for (std::size_t c = k; c < n; ++c) a.at(r, c) -= factor * a.at(k, c);
        }
        // the trailing block is the congruent block; row/col k is spent
        for (std::size_t c = k + 1; c < n; ++c) a.at(k, c) = QuadExt(0);
        for (std::size_t r = k + 1; r < n; ++r) a.at(r, k) = QuadExt(0);
        ++k;
    }
    return inertia;
}

QuadExt determinant(const ExactMatrix& m) {
    if (!m.is_square()) throw Error(ErrorCode::NotSquare, "determinant of non-square matrix");
    ExactMatrix a = m;
    const std::size_t n = a.rows();
    QuadExt det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && a.at(p, col).is_zero()) ++p;
        if (p == n) return QuadExt(0);
        if (p != col) {
            for (std::size_t c = col; c < n; ++c) std::swap(a.at(p, c), a.at(col, c));
            det = -det;
        }
        const QuadExt pivot = a.at(col, col);
        det *= pivot;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a.at(r, col).is_zero()) continue;
            QuadExt factor = a.at(r, col) / pivot;
            for (std::size_t c = col; c < n; ++c) a.at(r, c) -= factor * a.at(col, c);
        }
    }
    return det;
}

std::vector<std::vector<QuadExt>> kernel(const ExactMatrix& m) {
    ExactMatrix a = m;
    std::vector<std::size_t> pivots = echelon(a);

    // back-substitute to reduced form
    for (std::size_t i = pivots.size(); i-- > 0;) {
        const std::size_t col = pivots[i];
        QuadExt pivot = a.at(i, col);
        for (std::size_t c = col; c < a.cols(); ++c) a.at(i, c) /= pivot;
        for (std::size_t r = 0; r < i; ++r) {
            if (a.at(r, col).is_zero()) continue;
            QuadExt factor = a.at(r, col);
            for (std::size_t c = col; c < a.cols(); ++c) a.at(r, c) -= factor * a.at(i, c);
        }
    }

    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<QuadExt>> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<QuadExt> v(a.cols(), QuadExt(0));
        v[free] = QuadExt(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            v[pivots[i]] = -a.at(i, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace distset
