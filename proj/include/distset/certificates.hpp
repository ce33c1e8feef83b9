#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "distset/geometry.hpp"
#include "distset/matrix.hpp"
#include "distset/polynomial.hpp"

namespace distset {

/// Outcome of one exact linear-independence check.
struct RankCertificate {
    std::string claim;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t expected_rank = 0;
    std::size_t achieved_rank = 0;
    bool pass = false;
};

/// F_y(x) = prod_{j != i} (alpha_j^2 - |x-y|^2) / (alpha_j^2 - alpha_i^2),
/// fully expanded. i is 1-based. F_y(y) = k_i; F_y(x) = 1 on the alpha_i
/// sphere around y and 0 on the other spheres.
Polynomial expand_F(const std::vector<QuadExt>& y, const DistanceSpectrum& spec, std::size_t i);

/// G_y(x) = prod_j (alpha_j^2 - |x-y|^2) / alpha_j^2, fully expanded.
/// G_y(y) = 1 and G_y vanishes at every other point of the configuration.
Polynomial expand_G(const std::vector<QuadExt>& y, const DistanceSpectrum& spec);

struct DimWResult {
    std::size_t achieved = 0;
    unsigned long long bound = 0;  // C(d+l, l) + C(d+l-1, l-1)
};

/// Dimension of W_l(R^d) = span{x_0^{l0} x_1^{l1} ... : l0+...+ld <= l} with
/// x_0 = sum x_i^2 expanded, versus its combinatorial bound.
DimWResult dim_W(std::size_t d, std::size_t l);

/// Checks that the order-(2s'-l+2) partial derivatives of (x_1^2+...+x_d^2)^s'
/// span exactly the degree-(l-2) monomials. Valid for 2 <= l <= s'+2.
bool lemma5_check(std::size_t d, std::size_t s_prime, std::size_t l);

struct Lemma6Result {
    bool hypothesis_holds = false;  // sum m_i |x-y_i|^{2(s-1)} has degree <= 2s-l-1
    bool conclusion_holds = false;  // all moments sum m_i y_i^lambda vanish, |lambda| <= l-2
};

Lemma6Result lemma6_check(const std::vector<QuadExt>& m, const PointSet& y, std::size_t s,
                          std::size_t l);

/// Coefficient matrix of the given polynomials over all monomials of degree
/// <= max_degree (grlex column order). One row per polynomial.
ExactMatrix coefficient_matrix(const std::vector<Polynomial>& polys, std::size_t dim,
                               long max_degree);

/// The literal independence certificate for the F family: rank of
/// {F_y : y in X} together with the monomials of degree <= s-2, checked
/// against |X| + C(d+s-2, s-2). i is 1-based.
RankCertificate independence_theorem3(const PointSet& x, std::size_t i);

/// Bannai--Bannai--Stanton certificate: {G_y} with the monomials of degree
/// <= s-1 has rank |X| + C(d+s-1, s-1), and |X| <= C(d+s, s).
RankCertificate bbs_check(const PointSet& x);

/// (F_y(x))_{x,y in X} = k_i I + A_i with A_i the alpha_i-distance indicator;
/// built from distances alone. i is 1-based. Requires s >= 2 and
/// spec = distance_spectrum(d).
ExactMatrix evaluation_matrix(const SquaredDistanceMatrix& d, const DistanceSpectrum& spec,
                              std::size_t i);

/// What the dimension count behind the improved integer-condition bound
/// actually needs from the F family:
///   - span{F_y} intersects span{monomials deg <= s-2} trivially
///     (union rank = F rank + C(d+s-2, s-2)), and
///   - dim span{F_y} <= C(d+s-1, s-1).
struct FSpanCertificate {
    std::size_t f_rank = 0;
    std::size_t union_rank = 0;
    unsigned long long monomial_count = 0;  // C(d+s-2, s-2)
    unsigned long long span_bound = 0;      // C(d+s-1, s-1)
    bool intersection_trivial = false;
    bool span_within_bound = false;
    bool pass = false;
};

FSpanCertificate f_span_certificate(const PointSet& x, std::size_t i);

/// Verifies, on an exact null-space basis, that every linear relation among
/// {F_y} and the low monomials has vanishing point moments
/// sum_y C_y y^lambda = 0 for all |lambda| <= s-2.
bool relation_moments_vanish(const PointSet& x, std::size_t i);

}  // namespace distset
