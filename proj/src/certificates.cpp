#include "distset/certificates.hpp"

#include <algorithm>

#include "distset/invariants.hpp"

namespace distset {

namespace {

// |x - y|^2 as a polynomial in x, expanded.
Polynomial squared_distance_poly(const std::vector<QuadExt>& y) {
    const std::size_t d = y.size();
    Polynomial p = Polynomial::sum_of_squares(d);
    QuadExt y0(0);
    for (std::size_t k = 0; k < d; ++k) {
        p += Polynomial::variable(d, k) * (QuadExt(-2) * y[k]);
        y0 += y[k] * y[k];
    }
    p += Polynomial::constant(d, y0);
    return p;
}

std::vector<Polynomial> monomial_polys(std::size_t dim, long max_degree) {
    std::vector<Polynomial> out;
    for (const Monomial& m : monomials_up_to(dim, max_degree)) {
        Polynomial p(dim);
        p.add_term(m, QuadExt(1));
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

Polynomial expand_F(const std::vector<QuadExt>& y, const DistanceSpectrum& spec, std::size_t i) {
    const std::size_t s = spec.s();
    if (i < 1 || i > s) throw Error(ErrorCode::IndexOutOfRange, "distance index out of range");
    const std::size_t d = y.size();
    Polynomial w = squared_distance_poly(y);
    Polynomial f = Polynomial::constant(d, QuadExt(1));
    const QuadExt& ai2 = spec.sq_distances[i - 1];
    for (std::size_t j = 0; j < s; ++j) {
        if (j == i - 1) continue;
        const QuadExt& aj2 = spec.sq_distances[j];
        Polynomial factor = Polynomial::constant(d, aj2) - w;
        f = f * factor * (QuadExt(1) / (aj2 - ai2));
    }
    return f;
}

Polynomial expand_G(const std::vector<QuadExt>& y, const DistanceSpectrum& spec) {
    const std::size_t d = y.size();
    Polynomial w = squared_distance_poly(y);
    Polynomial g = Polynomial::constant(d, QuadExt(1));
    for (const QuadExt& aj2 : spec.sq_distances) {
        Polynomial factor = Polynomial::constant(d, aj2) - w;
        g = g * factor * (QuadExt(1) / aj2);
    }
    return g;
}

ExactMatrix coefficient_matrix(const std::vector<Polynomial>& polys, std::size_t dim,
                               long max_degree) {
    const std::vector<Monomial> basis = monomials_up_to(dim, max_degree);
    ExactMatrix m(polys.size(), basis.size());
    for (std::size_t r = 0; r < polys.size(); ++r) {
        if (polys[r].dim() != dim)
            throw Error(ErrorCode::DimensionMismatch, "polynomial dim differs from basis dim");
        if (polys[r].degree() > max_degree)
            throw Error(ErrorCode::RangeError, "polynomial degree exceeds basis degree");
        for (std::size_t c = 0; c < basis.size(); ++c)
            m.at(r, c) = polys[r].coefficient(basis[c]);
    }
    return m;
}

DimWResult dim_W(std::size_t d, std::size_t l) {
    if (d < 1) throw Error(ErrorCode::RangeError, "need d >= 1");
    const Polynomial x0 = Polynomial::sum_of_squares(d);
    std::vector<Polynomial> spanning;
    for (std::size_t l0 = 0; l0 <= l; ++l0) {
        const Polynomial x0_pow = x0.pow(l0);
        for (const Monomial& m : monomials_up_to(d, static_cast<long>(l - l0))) {
            Polynomial p(d);
            p.add_term(m, QuadExt(1));
            spanning.push_back(x0_pow * p);
        }
    }
    DimWResult res;
    res.achieved = rank(coefficient_matrix(spanning, d, static_cast<long>(2 * l)));
    res.bound = binomial(static_cast<long long>(d + l), static_cast<long long>(l)) +
                binomial(static_cast<long long>(d + l) - 1, static_cast<long long>(l) - 1);
    return res;
}

bool lemma5_check(std::size_t d, std::size_t s_prime, std::size_t l) {
    if (l < 2 || l > s_prime + 2)
        throw Error(ErrorCode::RangeError, "need 2 <= l <= s'+2");
    const std::size_t order = 2 * s_prime - l + 2;
    const Polynomial base = Polynomial::sum_of_squares(d).pow(s_prime);

    std::vector<Polynomial> derivatives;
    for (const Monomial& b : monomials_up_to(d, static_cast<long>(order))) {
        if (b.degree() != order) continue;
        Polynomial g = base;
        for (std::size_t k = 0; k < d && !g.is_zero(); ++k)
            for (unsigned e = 0; e < b.exponents[k]; ++e) g = g.partial_derivative(k);
        // every such derivative is homogeneous of degree l-2
        if (!g.is_zero() && g.degree() != static_cast<long>(l) - 2) return false;
        for (const auto& [m, c] : g.terms()) {
            (void)c;
            if (m.degree() != l - 2) return false;
        }
        derivatives.push_back(std::move(g));
    }
    const std::size_t achieved =
        rank(coefficient_matrix(derivatives, d, static_cast<long>(l) - 2));
    const unsigned long long target = binomial(
        static_cast<long long>(d + l) - 3, static_cast<long long>(l) - 2);
    return achieved == target;
}

Lemma6Result lemma6_check(const std::vector<QuadExt>& m, const PointSet& y, std::size_t s,
                          std::size_t l) {
    if (l < 2 || l > s + 1) throw Error(ErrorCode::RangeError, "need 2 <= l <= s+1");
    if (m.size() != y.size())
        throw Error(ErrorCode::SizeMismatch, "one coefficient per point required");
    y.validate();
    const std::size_t d = y.dim;

    Polynomial total(d);
    for (std::size_t i = 0; i < y.size(); ++i) {
        total += squared_distance_poly(y.points[i]).pow(s - 1) * m[i];
    }

    Lemma6Result res;
    res.hypothesis_holds = total.degree() <= 2 * static_cast<long>(s) - static_cast<long>(l) - 1;

    res.conclusion_holds = true;
    for (const Monomial& lambda : monomials_up_to(d, static_cast<long>(l) - 2)) {
        QuadExt moment(0);
        for (std::size_t i = 0; i < y.size(); ++i) {
            QuadExt v = m[i];
            for (std::size_t k = 0; k < d; ++k)
                for (unsigned e = 0; e < lambda.exponents[k]; ++e) v *= y.points[i][k];
            moment += v;
        }
        if (!moment.is_zero()) {
            res.conclusion_holds = false;
            break;
        }
    }
    return res;
}

namespace {

struct FFamily {
    std::vector<Polynomial> f_polys;
    DistanceSpectrum spec;
    std::size_t s = 0;
    std::size_t n = 0;
    std::size_t d = 0;
};

FFamily build_f_family(const PointSet& x, std::size_t i) {
    x.validate();
    if (x.size() < 2)
        throw Error(ErrorCode::NotDistanceSet, "need at least two points");
    FFamily fam;
    fam.spec = distance_spectrum(sdm_from_points(x));
    fam.s = fam.spec.s();
    if (fam.s < 2)
        throw Error(ErrorCode::NotDistanceSet,
                    "the F family needs s >= 2 distinct distances, got s = " +
                        std::to_string(fam.s));
    if (i < 1 || i > fam.s)
        throw Error(ErrorCode::IndexOutOfRange, "distance index out of range");
    fam.n = x.size();
    fam.d = x.dim;
    for (const auto& y : x.points) fam.f_polys.push_back(expand_F(y, fam.spec, i));
    return fam;
}

}  // namespace

RankCertificate independence_theorem3(const PointSet& x, std::size_t i) {
    FFamily fam = build_f_family(x, i);
    std::vector<Polynomial> rows = fam.f_polys;
    for (Polynomial& p : monomial_polys(fam.d, static_cast<long>(fam.s) - 2))
        rows.push_back(std::move(p));
    const long basis_degree = 2 * (static_cast<long>(fam.s) - 1);
    ExactMatrix m = coefficient_matrix(rows, fam.d, basis_degree);

    RankCertificate cert;
    cert.claim = "independence of {F_y} with monomials of degree <= s-2 (i=" +
                 std::to_string(i) + ")";
    cert.rows = m.rows();
    cert.cols = m.cols();
    cert.expected_rank =
        fam.n + binomial(static_cast<long long>(fam.d + fam.s) - 2,
                         static_cast<long long>(fam.s) - 2);
    cert.achieved_rank = rank(m);
    cert.pass = cert.achieved_rank == cert.expected_rank;
    return cert;
}

RankCertificate bbs_check(const PointSet& x) {
    x.validate();
    if (x.size() < 2) throw Error(ErrorCode::NotDistanceSet, "need at least two points");
    const DistanceSpectrum spec = distance_spectrum(sdm_from_points(x));
    const std::size_t s = spec.s();
    const std::size_t n = x.size();
    const std::size_t d = x.dim;

    std::vector<Polynomial> rows;
    for (const auto& y : x.points) rows.push_back(expand_G(y, spec));
    for (Polynomial& p : monomial_polys(d, static_cast<long>(s) - 1))
        rows.push_back(std::move(p));
    ExactMatrix m = coefficient_matrix(rows, d, 2 * static_cast<long>(s));

    RankCertificate cert;
    cert.claim = "independence of {G_y} with monomials of degree <= s-1";
    cert.rows = m.rows();
    cert.cols = m.cols();
    cert.expected_rank = n + binomial(static_cast<long long>(d + s) - 1,
                                      static_cast<long long>(s) - 1);
    cert.achieved_rank = rank(m);
    const bool size_bound =
        n <= binomial(static_cast<long long>(d + s), static_cast<long long>(s));
    cert.pass = (cert.achieved_rank == cert.expected_rank) && size_bound;
    return cert;
}

ExactMatrix evaluation_matrix(const SquaredDistanceMatrix& d, const DistanceSpectrum& spec,
                              std::size_t i) {
    if (spec.s() < 2)
        throw Error(ErrorCode::SpectrumMismatch, "evaluation matrix needs s >= 2");
    if (!(spec == distance_spectrum(d)))
        throw Error(ErrorCode::SpectrumMismatch,
                    "spectrum does not match the distance matrix");
    if (i < 1 || i > spec.s())
        throw Error(ErrorCode::IndexOutOfRange, "distance index out of range");

    const std::vector<QuadExt> ks = k_invariants(spec);
    const QuadExt& ai2 = spec.sq_distances[i - 1];
    const std::size_t n = d.size();
    ExactMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            if (r == c) {
                m.at(r, c) = ks[i - 1];
            } else {
                m.at(r, c) = (d.at(r, c) == ai2) ? QuadExt(1) : QuadExt(0);
            }
        }
    }
    return m;
}

FSpanCertificate f_span_certificate(const PointSet& x, std::size_t i) {
    FFamily fam = build_f_family(x, i);
    const long basis_degree = 2 * (static_cast<long>(fam.s) - 1);

    FSpanCertificate cert;
    cert.f_rank = rank(coefficient_matrix(fam.f_polys, fam.d, basis_degree));

    std::vector<Polynomial> rows = fam.f_polys;
    for (Polynomial& p : monomial_polys(fam.d, static_cast<long>(fam.s) - 2))
        rows.push_back(std::move(p));
    cert.union_rank = rank(coefficient_matrix(rows, fam.d, basis_degree));

    cert.monomial_count = binomial(static_cast<long long>(fam.d + fam.s) - 2,
                                   static_cast<long long>(fam.s) - 2);
    cert.span_bound = binomial(static_cast<long long>(fam.d + fam.s) - 1,
                               static_cast<long long>(fam.s) - 1);
    cert.intersection_trivial = cert.union_rank == cert.f_rank + cert.monomial_count;
    cert.span_within_bound = cert.f_rank <= cert.span_bound;
    cert.pass = cert.intersection_trivial && cert.span_within_bound;
    return cert;
}

bool relation_moments_vanish(const PointSet& x, std::size_t i) {
    FFamily fam = build_f_family(x, i);
    const long basis_degree = 2 * (static_cast<long>(fam.s) - 1);
    std::vector<Polynomial> rows = fam.f_polys;
    for (Polynomial& p : monomial_polys(fam.d, static_cast<long>(fam.s) - 2))
        rows.push_back(std::move(p));
    // relations among the rows = kernel of the transposed coefficient matrix
    ExactMatrix mt = coefficient_matrix(rows, fam.d, basis_degree).transposed();
    const auto relations = kernel(mt);

    const auto lambdas = monomials_up_to(fam.d, static_cast<long>(fam.s) - 2);
    for (const auto& rel : relations) {
        for (const Monomial& lambda : lambdas) {
            QuadExt moment(0);
            for (std::size_t p = 0; p < fam.n; ++p) {
                QuadExt v = rel[p];  // the C_y part of the relation
                for (std::size_t k = 0; k < fam.d; ++k)
                    for (unsigned e = 0; e < lambda.exponents[k]; ++e) v *= x.points[p][k];
                moment += v;
            }
            if (!moment.is_zero()) return false;
        }
    }
    return true;
}

}  // namespace distset
