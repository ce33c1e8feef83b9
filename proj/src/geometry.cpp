#include "distset/geometry.hpp"

#include <algorithm>

namespace distset {

void PointSet::validate() const {
    for (const auto& p : points) {
        if (p.size() != dim)
            throw Error(ErrorCode::DimensionMismatch, "point arity differs from dim");
    }
    if (!labels.empty() && labels.size() != points.size())
        throw Error(ErrorCode::SizeMismatch, "labels count differs from point count");
}

SquaredDistanceMatrix::SquaredDistanceMatrix(ExactMatrix entries) : mat_(std::move(entries)) {
    if (!mat_.is_square())
        throw Error(ErrorCode::InvalidConfiguration, "squared-distance matrix must be square");
    if (!mat_.is_symmetric())
        throw Error(ErrorCode::InvalidConfiguration, "squared-distance matrix must be symmetric");
    for (std::size_t i = 0; i < mat_.rows(); ++i) {
        if (!mat_.at(i, i).is_zero())
            throw Error(ErrorCode::InvalidConfiguration, "nonzero diagonal entry");
        for (std::size_t j = i + 1; j < mat_.cols(); ++j) {
            if (mat_.at(i, j).sign() <= 0)
                throw Error(ErrorCode::InvalidConfiguration,
                            "off-diagonal squared distances must be positive");
        }
    }
}

QuadExt squared_distance(const std::vector<QuadExt>& p, const std::vector<QuadExt>& q) {
    if (p.size() != q.size())
        throw Error(ErrorCode::DimensionMismatch, "points of different arity");
    QuadExt sum(0);
    for (std::size_t k = 0; k < p.size(); ++k) {
        QuadExt diff = p[k] - q[k];
        sum += diff * diff;
    }
    return sum;
}

SquaredDistanceMatrix sdm_from_points(const PointSet& x) {
    x.validate();
    const std::size_t n = x.size();
    ExactMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            QuadExt v = squared_distance(x.points[i], x.points[j]);
            if (v.is_zero())
                throw Error(ErrorCode::DuplicatePoints,
                            "points " + std::to_string(i) + " and " + std::to_string(j) +
                                " coincide");
            d.at(i, j) = v;
            d.at(j, i) = v;
        }
    }
    return SquaredDistanceMatrix(std::move(d));
}

ExactMatrix gram_from_sdm(const SquaredDistanceMatrix& d) {
    const std::size_t n = d.size();
    if (n == 0) return ExactMatrix(0, 0);
    ExactMatrix g(n - 1, n - 1);
    const QuadExt half = QuadExt::from_fraction(1, 2);
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = 1; j < n; ++j) {
            g.at(i - 1, j - 1) = (d.at(0, i) + d.at(0, j) - d.at(i, j)) * half;
        }
    }
    return g;
}

std::size_t embedding_dimension(const SquaredDistanceMatrix& d) {
    return rank(gram_from_sdm(d));
}

RealizabilityResult is_realizable(const SquaredDistanceMatrix& d) {
    ExactMatrix g = gram_from_sdm(d);
    RealizabilityResult res;
    res.inertia = ldlt_inertia(g);
    res.realizable = res.inertia.n_neg == 0;
    res.dim = res.inertia.n_pos;  // rank of a PSD matrix
    return res;
}

DistanceSpectrum distance_spectrum(const SquaredDistanceMatrix& d) {
    std::vector<QuadExt> values;
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) values.push_back(d.at(i, j));
    std::sort(values.begin(), values.end(),
              [](const QuadExt& x, const QuadExt& y) { return (x - y).sign() < 0; });
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return DistanceSpectrum{std::move(values)};
}

}  // namespace distset
