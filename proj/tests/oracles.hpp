// Test-only numeric oracles, independent of the exact-arithmetic code paths
// they cross-check.
#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "distset/matrix.hpp"

namespace oracles {

using Dense = std::vector<std::vector<long double>>;

inline Dense to_dense(const distset::ExactMatrix& m) {
    Dense a(m.rows(), std::vector<long double>(m.cols(), 0.0L));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            a[i][j] = static_cast<long double>(m.at(i, j).to_double());
    return a;
}

// Cyclic Jacobi eigenvalue iteration for a symmetric matrix.
inline std::vector<long double> jacobi_eigenvalues(Dense a) {
    const std::size_t n = a.size();
    for (int sweep = 0; sweep < 100; ++sweep) {
        long double off = 0.0L;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
        if (off < 1e-30L) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::fabs(static_cast<double>(a[p][q])) < 1e-300) continue;
                const long double theta = (a[q][q] - a[p][p]) / (2.0L * a[p][q]);
                const long double t = (theta >= 0 ? 1.0L : -1.0L) /
                                      (std::fabs(static_cast<double>(theta)) +
                                       std::sqrt(static_cast<double>(theta * theta + 1.0L)));
                const long double c = 1.0L / std::sqrt(static_cast<double>(t * t + 1.0L));
                const long double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const long double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const long double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<long double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a[i][i];
    return eig;
}

// Numeric rank from singular values (eigenvalues of A^T A), relative cutoff.
inline std::size_t numeric_rank(const distset::ExactMatrix& m, double rel_tol = 1e-9) {
    const std::size_t r = m.rows(), c = m.cols();
    if (r == 0 || c == 0) return 0;
    const Dense a = to_dense(m);
    Dense ata(c, std::vector<long double>(c, 0.0L));
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            long double sum = 0.0L;
            for (std::size_t k = 0; k < r; ++k) sum += a[k][i] * a[k][j];
            ata[i][j] = sum;
        }
    std::vector<long double> eig = jacobi_eigenvalues(std::move(ata));
    long double max_sv = 0.0L;
    for (long double e : eig) max_sv = std::max(max_sv, e > 0 ? std::sqrt(static_cast<double>(e)) : 0.0L);
    if (max_sv == 0.0L) return 0;
    std::size_t rank = 0;
    for (long double e : eig) {
        const long double sv = e > 0 ? std::sqrt(static_cast<double>(e)) : 0.0L;
        if (sv > rel_tol * max_sv) ++rank;
    }
    return rank;
}

}  // namespace oracles
