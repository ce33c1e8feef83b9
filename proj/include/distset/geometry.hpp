#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "distset/matrix.hpp"
#include "distset/quadext.hpp"

namespace distset {

/// Finite point configuration in R^d with exact coordinates.
struct PointSet {
    std::size_t dim = 0;
    std::vector<std::vector<QuadExt>> points;
    std::vector<std::string> labels;  // optional, empty or one per point

    std::size_t size() const { return points.size(); }
    void validate() const;  // uniform arity, labels count
};

/// Symmetric matrix of exact squared distances: zero diagonal, positive
/// off-diagonal. The coordinate-free representation of a configuration.
class SquaredDistanceMatrix {
public:
    explicit SquaredDistanceMatrix(ExactMatrix entries);

    std::size_t size() const { return mat_.rows(); }
    const QuadExt& at(std::size_t i, std::size_t j) const { return mat_.at(i, j); }
    const ExactMatrix& matrix() const { return mat_; }

private:
    ExactMatrix mat_;
};

/// The sorted set of squared distances alpha_1^2 < ... < alpha_s^2.
struct DistanceSpectrum {
    std::vector<QuadExt> sq_distances;  // strictly ascending

    std::size_t s() const { return sq_distances.size(); }
    bool operator==(const DistanceSpectrum& o) const {
        return sq_distances == o.sq_distances;
    }
};

struct RealizabilityResult {
    bool realizable = false;
    std::size_t dim = 0;  // embedding dimension when realizable
    Inertia inertia;      // witness either way
};

SquaredDistanceMatrix sdm_from_points(const PointSet& x);

/// Double centering with base point 0: G[i][j] = (D[0][i] + D[0][j] - D[i][j]) / 2
/// for i, j in 1..n-1. Gram matrix of the configuration translated so that
/// point 0 sits at the origin.
ExactMatrix gram_from_sdm(const SquaredDistanceMatrix& d);

std::size_t embedding_dimension(const SquaredDistanceMatrix& d);

RealizabilityResult is_realizable(const SquaredDistanceMatrix& d);

DistanceSpectrum distance_spectrum(const SquaredDistanceMatrix& d);

/// Exact squared Euclidean distance between two coordinate vectors.
QuadExt squared_distance(const std::vector<QuadExt>& p, const std::vector<QuadExt>& q);

}  // namespace distset
