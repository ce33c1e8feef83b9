#include <doctest.h>

#include <algorithm>
#include <random>

#include "distset/catalog.hpp"
#include "distset/geometry.hpp"

using distset::Error;
using distset::ErrorCode;
using distset::ExactMatrix;
using distset::PointSet;
using distset::QuadExt;
using distset::Rational;
using distset::SquaredDistanceMatrix;

namespace {

PointSet unit_square() {
    PointSet x;
    x.dim = 2;
    x.points = {{QuadExt(0), QuadExt(0)},
                {QuadExt(1), QuadExt(0)},
                {QuadExt(1), QuadExt(1)},
                {QuadExt(0), QuadExt(1)}};
    return x;
}

}  // namespace

TEST_CASE("squared distance matrices from points") {
    const auto square = distset::sdm_from_points(unit_square());
    CHECK(square.at(0, 1) == QuadExt(1));
    CHECK(square.at(0, 2) == QuadExt(2));
    CHECK(square.at(0, 3) == QuadExt(1));
    CHECK(square.at(1, 3) == QuadExt(2));

    const auto simplex = distset::sdm_from_points(distset::simplex(4).points());
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) CHECK(simplex.at(i, j) == QuadExt(2));

    const auto johnson = distset::sdm_from_points(distset::johnson2(5).points());
    for (std::size_t i = 0; i < johnson.size(); ++i)
        for (std::size_t j = i + 1; j < johnson.size(); ++j)
            CHECK((johnson.at(i, j) == QuadExt(2) || johnson.at(i, j) == QuadExt(4)));

    PointSet dup = unit_square();
    dup.points.push_back(dup.points.front());
    CHECK_THROWS_AS(distset::sdm_from_points(dup), Error);
}

TEST_CASE("sdm invariants are enforced") {
    ExactMatrix bad(2, 2);
    bad.at(0, 1) = QuadExt(-1);
    bad.at(1, 0) = QuadExt(-1);
    CHECK_THROWS_AS(SquaredDistanceMatrix{bad}, Error);

    ExactMatrix diag(2, 2);
    diag.at(0, 0) = QuadExt(1);
    diag.at(0, 1) = QuadExt(1);
    diag.at(1, 0) = QuadExt(1);
    CHECK_THROWS_AS(SquaredDistanceMatrix{diag}, Error);
}

TEST_CASE("double centering") {
    // segment of length 1
    ExactMatrix seg(2, 2);
    seg.at(0, 1) = QuadExt(1);
    seg.at(1, 0) = QuadExt(1);
    const ExactMatrix g1 = distset::gram_from_sdm(SquaredDistanceMatrix(seg));
    CHECK(g1.rows() == 1);
    CHECK(g1.at(0, 0) == QuadExt(1));

    const ExactMatrix g2 = distset::gram_from_sdm(distset::sdm_from_points(unit_square()));
    CHECK(g2.at(0, 0) == QuadExt(1));
    CHECK(g2.at(1, 1) == QuadExt(2));
    CHECK(g2.at(2, 2) == QuadExt(1));
    CHECK(distset::rank(g2) == 2);

    const auto pentagon = distset::regular_polygon(5).sdm();
    const ExactMatrix g3 = distset::gram_from_sdm(pentagon);
    CHECK(distset::rank(g3) == 2);
    CHECK(distset::ldlt_inertia(g3).is_psd());
    bool saw_irrational = false;
    for (std::size_t i = 0; i < g3.rows(); ++i)
        for (std::size_t j = 0; j < g3.cols(); ++j) {
            CHECK((g3.at(i, j).m() == 5 || g3.at(i, j).is_rational()));
            saw_irrational = saw_irrational || !g3.at(i, j).is_rational();
        }
    CHECK(saw_irrational);
}

TEST_CASE("embedding dimension") {
    for (std::size_t n = 2; n <= 5; ++n)
        CHECK(distset::embedding_dimension(distset::sdm_from_points(distset::simplex(n).points())) ==
              n - 1);
    CHECK(distset::embedding_dimension(distset::regular_polygon(5).sdm()) == 2);
    for (std::size_t d = 2; d <= 4; ++d) {
        const auto cross = distset::sdm_from_points(distset::cross_polytope(d).points());
        CHECK(distset::embedding_dimension(cross) == d);
    }
}

TEST_CASE("realizability") {
    const auto square = distset::sdm_from_points(unit_square());
    const auto ok = distset::is_realizable(square);
    CHECK(ok.realizable);
    CHECK(ok.dim == 2);

    // d(0,1) = d(0,2) = 1 but d(1,2) = 9 violates the triangle inequality
    ExactMatrix bad(3, 3);
    bad.at(0, 1) = bad.at(1, 0) = QuadExt(1);
    bad.at(0, 2) = bad.at(2, 0) = QuadExt(1);
    bad.at(1, 2) = bad.at(2, 1) = QuadExt(9);
    const auto witness = distset::is_realizable(SquaredDistanceMatrix(bad));
    CHECK_FALSE(witness.realizable);
    CHECK(witness.inertia.n_neg == 1);

    const auto paley13 = distset::is_realizable(distset::paley_conference_embedding(13).sdm());
    CHECK(paley13.realizable);
    CHECK(paley13.dim == 6);
}

TEST_CASE("distance spectrum extraction") {
    const auto simplex = distset::sdm_from_points(distset::simplex(4).points());
    CHECK(distset::distance_spectrum(simplex).sq_distances == std::vector<QuadExt>{QuadExt(2)});

    const auto square = distset::sdm_from_points(unit_square());
    CHECK(distset::distance_spectrum(square).sq_distances ==
          std::vector<QuadExt>{QuadExt(1), QuadExt(2)});

    const auto pentagon = distset::distance_spectrum(distset::regular_polygon(5).sdm());
    const QuadExt lo(Rational(5, 2), Rational(-1, 2), 5);
    const QuadExt hi(Rational(5, 2), Rational(1, 2), 5);
    CHECK(pentagon.sq_distances == std::vector<QuadExt>{lo, hi});
}

TEST_CASE("spectrum is invariant under relabeling and zero-padding") {
    std::mt19937_64 rng(17);
    const PointSet base = distset::johnson2(4).points();
    const auto spec = distset::distance_spectrum(distset::sdm_from_points(base));

    PointSet shuffled = base;
    std::shuffle(shuffled.points.begin(), shuffled.points.end(), rng);
    CHECK(distset::distance_spectrum(distset::sdm_from_points(shuffled)).sq_distances ==
          spec.sq_distances);

    PointSet padded = base;
    padded.dim += 2;
    for (auto& p : padded.points) {
        p.push_back(QuadExt(0));
        p.push_back(QuadExt(0));
    }
    CHECK(distset::sdm_from_points(padded).matrix() ==
          distset::sdm_from_points(base).matrix());
}

TEST_CASE("rational scaling preserves rank and signature") {
    const auto pentagon = distset::regular_polygon(5).sdm();
    const QuadExt scale = QuadExt::from_fraction(7, 3);
    ExactMatrix scaled(pentagon.size(), pentagon.size());
    for (std::size_t i = 0; i < pentagon.size(); ++i)
        for (std::size_t j = 0; j < pentagon.size(); ++j)
            scaled.at(i, j) = pentagon.at(i, j) * scale;
    const SquaredDistanceMatrix sd(scaled);

    const ExactMatrix g0 = distset::gram_from_sdm(pentagon);
    const ExactMatrix g1 = distset::gram_from_sdm(sd);
    CHECK(distset::rank(g0) == distset::rank(g1));
    const auto i0 = distset::ldlt_inertia(g0);
    const auto i1 = distset::ldlt_inertia(g1);
    CHECK(i0.n_pos == i1.n_pos);
    CHECK(i0.n_neg == i1.n_neg);
    for (std::size_t i = 0; i < g0.rows(); ++i)
        for (std::size_t j = 0; j < g0.cols(); ++j)
            CHECK(g1.at(i, j) == g0.at(i, j) * scale);
}

TEST_CASE("embedding dimension never exceeds the ambient dimension") {
    for (const auto& entry : distset::standard_catalog()) {
        if (!entry.has_points()) continue;
        const auto d = distset::sdm_from_points(entry.points());
        CHECK(distset::embedding_dimension(d) <= entry.points().dim);
    }
    // full-dimensional examples attain it
    CHECK(distset::embedding_dimension(
              distset::sdm_from_points(distset::cross_polytope(3).points())) == 3);
    CHECK(distset::embedding_dimension(
              distset::sdm_from_points(distset::polygon_points(6).points())) == 2);
}
