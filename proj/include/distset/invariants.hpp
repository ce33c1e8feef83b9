#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "distset/geometry.hpp"
#include "distset/quadext.hpp"

namespace distset {

/// Exact binomial coefficient; zero for k < 0 or k > n.
unsigned long long binomial(long long n, long long k);

struct Thresholds {
    unsigned long long n_new = 0;     // C(d+s-1, s-1)
    unsigned long long n_legacy = 0;  // C(d+s-1, s-1) + C(d+s-2, s-2)
};

/// Cardinality thresholds: the integer condition holds for |X| >= 2*n_new
/// (improved bound) and |X| >= 2*n_legacy (earlier bound).
Thresholds threshold_N(std::size_t d, std::size_t s);

/// k_i = prod_{j != i} alpha_j^2 / (alpha_j^2 - alpha_i^2), exactly.
/// Empty for s = 1 (no constraint from a single distance).
std::vector<QuadExt> k_invariants(const DistanceSpectrum& spec);

/// Two-distance form: k with alpha^2/beta^2 = (k-1)/k, i.e. beta^2/(beta^2-alpha^2).
QuadExt lrs_k(const DistanceSpectrum& spec);

/// Largest integer K with K(K-1)(2N-2) <= N^2; equals
/// floor(1/2 + sqrt(N^2/(2N-2) + 1/4)) but computed in integer arithmetic.
long k_cap(unsigned long long n);

/// Size beyond which only finitely many s-distance sets exist: 2*C(d+s-1, s-1).
unsigned long long finiteness_threshold(std::size_t d, std::size_t s);

/// Everything the integer-condition theorems say about one configuration.
struct InvariantReport {
    std::size_t s = 0;
    std::size_t d = 0;  // embedding dimension
    std::size_t n_points = 0;
    DistanceSpectrum spectrum;
    std::vector<QuadExt> k_values;
    std::vector<bool> k_integral;
    std::optional<QuadExt> lrs;  // populated iff s == 2
    unsigned long long n_new = 0;
    unsigned long long n_legacy = 0;
    bool threshold_met_new = false;
    bool threshold_met_legacy = false;
    unsigned long long finiteness = 0;
    std::optional<long> cap;  // k_cap(n_new); absent when n_new < 2
    std::vector<bool> cap_respected;

    bool all_integral() const {
        for (bool b : k_integral)
            if (!b) return false;
        return true;
    }
};

InvariantReport analyze(const SquaredDistanceMatrix& d);
InvariantReport analyze(const PointSet& x);

struct RecoverResult {
    std::vector<double> gamma;  // ascending, gamma.back() == 1
    int iterations = 0;
    double residual = 0.0;
};

/// Inverts the k map numerically: finds 0 < g_1 < ... < g_{s-1} < g_s = 1 with
/// prod_{j != i} g_j/(g_j - g_i) = k_i within tol. Damped Newton from the
/// equispaced start g_i = i/s; throws NoConvergence rather than returning a
/// poor solution, and InconsistentK when sum(k) != 1.
RecoverResult recover_distances(const std::vector<double>& k, double tol);

}  // namespace distset
