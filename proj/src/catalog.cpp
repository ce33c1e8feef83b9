#include "distset/catalog.hpp"

#include <set>

#include "distset/invariants.hpp"

namespace distset {

namespace {

std::vector<QuadExt> unit_vector(std::size_t dim, std::size_t index, long sign = 1) {
    std::vector<QuadExt> v(dim, QuadExt(0));
    v[index] = QuadExt(sign);
    return v;
}

CatalogEntry::Expected expect(std::size_t s, std::size_t d, std::size_t n,
                              std::vector<bool> k_integral) {
    return CatalogEntry::Expected{s, d, n, std::move(k_integral)};
}

// squared chord lengths of the regular n-gon with circumradius 1,
// 2 - 2cos(2 pi k / n) for k = 1..floor(n/2), exact in one quadratic field
std::vector<QuadExt> polygon_chords(std::size_t n) {
    const QuadExt half = QuadExt::from_fraction(1, 2);
    const QuadExt r5 = QuadExt::sqrt_of(5);
    const QuadExt r2 = QuadExt::sqrt_of(2);
    const QuadExt r3 = QuadExt::sqrt_of(3);
    switch (n) {
        case 3:
            return {QuadExt(3)};
        case 4:
            return {QuadExt(2), QuadExt(4)};
        case 5:
            return {(QuadExt(5) - r5) * half, (QuadExt(5) + r5) * half};
        case 6:
            return {QuadExt(1), QuadExt(3), QuadExt(4)};
        case 8:
            return {QuadExt(2) - r2, QuadExt(2), QuadExt(2) + r2, QuadExt(4)};
        case 10:
            return {(QuadExt(3) - r5) * half, (QuadExt(5) - r5) * half,
                    (QuadExt(3) + r5) * half, (QuadExt(5) + r5) * half, QuadExt(4)};
        case 12:
            return {QuadExt(2) - r3, QuadExt(1), QuadExt(2), QuadExt(3), QuadExt(2) + r3,
                    QuadExt(4)};
        default:
            throw Error(ErrorCode::UnsupportedN,
                        "polygon chords leave a single quadratic field for n = " +
                            std::to_string(n) + "; supported n: 3,4,5,6,8,10,12");
    }
}

}  // namespace

CatalogEntry simplex(std::size_t n) {
    if (n < 2) throw Error(ErrorCode::RangeError, "simplex needs n >= 2");
    PointSet x;
    x.dim = n;
    for (std::size_t i = 0; i < n; ++i) x.points.push_back(unit_vector(n, i));
    CatalogEntry e;
    e.name = "simplex";
    e.parameters["n"] = static_cast<long>(n);
    e.payload = std::move(x);
    e.expected = expect(1, n - 1, n, {});
    return e;
}

CatalogEntry cross_polytope(std::size_t d) {
    if (d < 2) throw Error(ErrorCode::RangeError, "cross-polytope needs d >= 2");
    PointSet x;
    x.dim = d;
    for (std::size_t i = 0; i < d; ++i) {
        x.points.push_back(unit_vector(d, i, 1));
        x.points.push_back(unit_vector(d, i, -1));
    }
    CatalogEntry e;
    e.name = "cross_polytope";
    e.parameters["d"] = static_cast<long>(d);
    e.payload = std::move(x);
    e.expected = expect(2, d, 2 * d, {true, true});
    return e;
}

CatalogEntry johnson2(std::size_t n) {
    if (n < 4) throw Error(ErrorCode::RangeError, "johnson2 needs n >= 4");
    PointSet x;
    x.dim = n;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<QuadExt> p(n, QuadExt(0));
            p[i] = QuadExt(1);
            p[j] = QuadExt(1);
            x.points.push_back(std::move(p));
        }
    }
    CatalogEntry e;
    e.name = "johnson2";
    e.parameters["n"] = static_cast<long>(n);
    e.payload = std::move(x);
    e.expected = expect(2, n - 1, n * (n - 1) / 2, {true, true});
    return e;
}

CatalogEntry regular_polygon(std::size_t n) {
    const std::vector<QuadExt> chords = polygon_chords(n);
    ExactMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            std::size_t k = std::min((j - i), n - (j - i));
            d.at(i, j) = chords[k - 1];
            d.at(j, i) = chords[k - 1];
        }
    }
    CatalogEntry e;
    e.name = "polygon";
    e.parameters["n"] = static_cast<long>(n);
    e.payload = SquaredDistanceMatrix(std::move(d));
    // the pentagon is the only supported polygon with non-integral k
    std::vector<bool> integral(n / 2, n != 5);
    if (n == 3) integral.clear();  // s = 1, no invariants
    e.expected = expect(n / 2, 2, n, std::move(integral));
    return e;
}

CatalogEntry polygon_points(std::size_t n) {
    const QuadExt half = QuadExt::from_fraction(1, 2);
    const QuadExt half_r3 = QuadExt(Rational(0), Rational(1, 2), 3);
    PointSet x;
    x.dim = 2;
    switch (n) {
        case 3:
            x.points = {{QuadExt(1), QuadExt(0)},
                        {-half, half_r3},
                        {-half, -half_r3}};
            break;
        case 4:
            x.points = {{QuadExt(1), QuadExt(0)},
                        {QuadExt(0), QuadExt(1)},
                        {QuadExt(-1), QuadExt(0)},
                        {QuadExt(0), QuadExt(-1)}};
            break;
        case 6:
            x.points = {{QuadExt(1), QuadExt(0)},  {half, half_r3},
                        {-half, half_r3},          {QuadExt(-1), QuadExt(0)},
                        {-half, -half_r3},         {half, -half_r3}};
            break;
        default:
            throw Error(ErrorCode::UnsupportedN,
                        "exact polygon coordinates in one quadratic field: n in {3, 4, 6}");
    }
    CatalogEntry e;
    e.name = "polygon_points";
    e.parameters["n"] = static_cast<long>(n);
    e.payload = std::move(x);
    std::vector<bool> integral(n / 2, true);
    if (n == 3) integral.clear();
    e.expected = expect(n / 2, 2, n, std::move(integral));
    return e;
}

CatalogEntry paley_conference_embedding(std::size_t q) {
    auto is_prime = [](std::size_t v) {
        if (v < 2) return false;
        for (std::size_t f = 2; f * f <= v; ++f)
            if (v % f == 0) return false;
        return true;
    };
    if (q > 97 || q % 4 != 1 || !is_prime(q))
        throw Error(ErrorCode::InvalidQ,
                    "need a prime q = 1 mod 4 with q <= 97, got " + std::to_string(q));

    std::set<std::size_t> residues;
    for (std::size_t v = 1; v < q; ++v) residues.insert((v * v) % q);

    // projection onto the rho-eigenspace of the Paley adjacency matrix:
    //   G = (A - sigma I - ((kappa - sigma)/q) J) / (rho - sigma)
    // with kappa = (q-1)/2, rho = (-1+sqrt(q))/2, sigma = (-1-sqrt(q))/2.
    const QuadExt sqrt_q = QuadExt::sqrt_of(static_cast<long>(q));
    const QuadExt kappa = QuadExt::from_fraction(static_cast<long>(q) - 1, 2);
    const QuadExt half = QuadExt::from_fraction(1, 2);
    const QuadExt sigma = (QuadExt(-1) - sqrt_q) * half;
    const QuadExt rho_minus_sigma = sqrt_q;
    const QuadExt j_term = (kappa - sigma) / QuadExt(static_cast<long>(q));

    const QuadExt g_diag = (-sigma - j_term) / rho_minus_sigma;
    const QuadExt g_adj = (QuadExt(1) - j_term) / rho_minus_sigma;
    const QuadExt g_non = (-j_term) / rho_minus_sigma;

    ExactMatrix d(q, q);
    const QuadExt two(2);
    for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t j = i + 1; j < q; ++j) {
            const bool adjacent = residues.count((q + i - j) % q) > 0;
            const QuadExt normalized = (adjacent ? g_adj : g_non) / g_diag;
            QuadExt dist = two - two * normalized;
            d.at(i, j) = dist;
            d.at(j, i) = dist;
        }
    }
    CatalogEntry e;
    e.name = "paley";
    e.parameters["q"] = static_cast<long>(q);
    e.payload = SquaredDistanceMatrix(std::move(d));
    e.expected = expect(2, (q - 1) / 2, q, {false, false});
    return e;
}

std::vector<CatalogEntry> standard_catalog() {
    std::vector<CatalogEntry> out;
    for (std::size_t n = 2; n <= 6; ++n) out.push_back(simplex(n));
    for (std::size_t d = 2; d <= 5; ++d) out.push_back(cross_polytope(d));
    for (std::size_t n = 4; n <= 8; ++n) out.push_back(johnson2(n));
    for (std::size_t n : {3, 4, 5, 6, 8, 10, 12}) out.push_back(regular_polygon(n));
    for (std::size_t n : {3, 4, 6}) out.push_back(polygon_points(n));
    for (std::size_t q : {5, 13, 17, 29}) out.push_back(paley_conference_embedding(q));
    return out;
}

}  // namespace distset
