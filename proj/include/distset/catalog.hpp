#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>

#include "distset/geometry.hpp"

namespace distset {

/// Canonical configuration with the invariants it is expected to produce;
/// the expectations make the catalog self-testing.
struct CatalogEntry {
    std::string name;
    std::map<std::string, long> parameters;
    std::variant<PointSet, SquaredDistanceMatrix> payload;

    struct Expected {
        std::size_t s = 0;
        std::size_t d = 0;
        std::size_t n = 0;
        std::vector<bool> k_integral;
    };
    std::optional<Expected> expected;

    bool has_points() const { return std::holds_alternative<PointSet>(payload); }
    const PointSet& points() const { return std::get<PointSet>(payload); }
    const SquaredDistanceMatrix& sdm() const {
        return std::get<SquaredDistanceMatrix>(payload);
    }
};

/// e_1..e_n in R^n: the 1-distance regular simplex. n >= 2.
CatalogEntry simplex(std::size_t n);

/// {+-e_i} in R^d: 2d points, squared distances {2, 4}, k = (2, -1). d >= 2.
CatalogEntry cross_polytope(std::size_t d);

/// {e_i + e_j : i < j} in R^n: the Johnson scheme J(n,2) point set. n >= 4.
/// C(n,2) points, embedding dimension n-1, squared distances {2, 4}.
CatalogEntry johnson2(std::size_t n);

/// Regular n-gon with circumradius 1 as a squared-distance matrix; chord
/// values lie in a single quadratic field for n in {3,4,5,6,8,10,12}.
CatalogEntry regular_polygon(std::size_t n);

/// Exact vertex coordinates for the polygons whose coordinates stay in one
/// quadratic field: n = 3, 6 over Q(sqrt(3)); n = 4 rational.
CatalogEntry polygon_points(std::size_t n);

/// Spherical embedding of the Paley conference graph on q vertices
/// (q prime, q = 1 mod 4, q <= 97): q points in dimension (q-1)/2 forming a
/// two-distance set of size 2d+1 whose k values are (1 +- sqrt(q))/2.
CatalogEntry paley_conference_embedding(std::size_t q);

/// Every generator above, instantiated over the desk-scale parameter grid
/// used by the verification suites.
std::vector<CatalogEntry> standard_catalog();

}  // namespace distset
