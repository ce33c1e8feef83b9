#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "distset/catalog.hpp"
#include "distset/invariants.hpp"

using distset::DistanceSpectrum;
using distset::Error;
using distset::ErrorCode;
using distset::QuadExt;
using distset::Rational;

namespace {

DistanceSpectrum spec_of(std::initializer_list<long> values) {
    DistanceSpectrum s;
    for (long v : values) s.sq_distances.push_back(QuadExt(v));
    return s;
}

DistanceSpectrum pentagon_spectrum() {
    DistanceSpectrum s;
    s.sq_distances.push_back(QuadExt(Rational(5, 2), Rational(-1, 2), 5));
    s.sq_distances.push_back(QuadExt(Rational(5, 2), Rational(1, 2), 5));
    return s;
}

// random strictly ascending rational spectrum
DistanceSpectrum random_spectrum(std::mt19937_64& rng, std::size_t s) {
    std::uniform_int_distribution<long> pick(1, 60);
    std::set<long> nums;
    while (nums.size() < s) nums.insert(pick(rng));
    DistanceSpectrum out;
    for (long v : nums) out.sq_distances.push_back(QuadExt(Rational(v, 7)));
    return out;
}

}  // namespace

TEST_CASE("cardinality thresholds") {
    for (std::size_t d = 2; d <= 10; ++d) {
        const auto t = distset::threshold_N(d, 2);
        CHECK(t.n_new == d + 1);        // 2N = 2d + 2, i.e. |X| > 2d + 1
        CHECK(t.n_legacy == d + 2);     // 2N = 2d + 4, i.e. |X| > 2d + 3
    }
    CHECK(distset::threshold_N(3, 3).n_new == 10);
    CHECK(distset::threshold_N(3, 3).n_legacy == 10 + 4);
    CHECK_THROWS_AS(distset::threshold_N(0, 2), Error);
}

TEST_CASE("k invariants on frozen spectra") {
    CHECK(distset::k_invariants(spec_of({2, 4})) ==
          std::vector<QuadExt>{QuadExt(2), QuadExt(-1)});
    CHECK(distset::k_invariants(spec_of({1, 2, 3})) ==
          std::vector<QuadExt>{QuadExt(3), QuadExt(-3), QuadExt(1)});

    const auto pentagon = distset::k_invariants(pentagon_spectrum());
    const QuadExt golden(Rational(1, 2), Rational(1, 2), 5);
    CHECK(pentagon[0] == golden);
    CHECK(pentagon[1] == QuadExt(1) - golden);
    CHECK_FALSE(pentagon[0].is_integer());
    CHECK_FALSE(pentagon[1].is_integer());

    DistanceSpectrum single;
    single.sq_distances.push_back(QuadExt(2));
    CHECK(distset::k_invariants(single).empty());
}

TEST_CASE("two-distance invariant") {
    CHECK(distset::lrs_k(spec_of({2, 4})) == QuadExt(2));
    CHECK(distset::lrs_k(spec_of({1, 2})) == QuadExt(2));
    const QuadExt k = distset::lrs_k(pentagon_spectrum());
    CHECK(k == QuadExt(Rational(1, 2), Rational(1, 2), 5));
    CHECK_FALSE(k.is_integer());
    CHECK_THROWS_AS(distset::lrs_k(spec_of({1, 2, 3})), Error);

    // alpha^2 / beta^2 = (k - 1) / k holds identically
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const auto spec = random_spectrum(rng, 2);
        const QuadExt kk = distset::lrs_k(spec);
        CHECK(spec.sq_distances[0] / spec.sq_distances[1] == (kk - QuadExt(1)) / kk);
        CHECK(kk == distset::k_invariants(spec)[0]);
    }
}

TEST_CASE("integer cap") {
    CHECK(distset::k_cap(2) == 2);
    CHECK(distset::k_cap(3) == 2);
    CHECK(distset::k_cap(5) == 2);
    CHECK_THROWS_AS(distset::k_cap(1), Error);

    // brute force oracle and the paper's floating floor expression
    for (unsigned long long n = 2; n <= 2000; ++n) {
        long brute = 1;
        while (static_cast<unsigned long long>(brute + 1) * brute * (2 * n - 2) <= n * n)
            ++brute;
        CHECK(distset::k_cap(n) == brute);
        const double floor_formula =
            std::floor(0.5 + std::sqrt(static_cast<double>(n) * n / (2.0 * n - 2.0) + 0.25));
        CHECK(static_cast<double>(distset::k_cap(n)) == floor_formula);
    }
}

TEST_CASE("finiteness threshold") {
    CHECK(distset::finiteness_threshold(2, 2) == 6);
    CHECK(distset::finiteness_threshold(4, 2) == 10);
    CHECK(distset::finiteness_threshold(2, 3) == 12);
}

TEST_CASE("analyze: full pipeline on canonical configurations") {
    const auto johnson = distset::analyze(distset::johnson2(5).points());
    CHECK(johnson.s == 2);
    CHECK(johnson.d == 4);
    CHECK(johnson.n_points == 10);
    CHECK(johnson.n_new == 5);
    CHECK(johnson.threshold_met_new);
    CHECK_FALSE(johnson.threshold_met_legacy);
    CHECK(johnson.k_values == std::vector<QuadExt>{QuadExt(2), QuadExt(-1)});
    CHECK(johnson.all_integral());
    CHECK(johnson.cap.value() == 2);
    CHECK(johnson.cap_respected == std::vector<bool>{true, true});

    const auto pentagon = distset::analyze(distset::regular_polygon(5).sdm());
    CHECK(pentagon.s == 2);
    CHECK(pentagon.d == 2);
    CHECK(pentagon.n_points == 5);          // = 2d + 1
    CHECK(pentagon.n_points == 2 * pentagon.d + 1);
    CHECK_FALSE(pentagon.threshold_met_new);  // 5 < 6: the theorem does not apply
    CHECK_FALSE(pentagon.all_integral());

    const auto cross = distset::analyze(distset::cross_polytope(3).points());
    CHECK(cross.s == 2);
    CHECK(cross.n_points == 6);
    CHECK(cross.n_new == 4);
    CHECK_FALSE(cross.threshold_met_new);  // 6 < 8, yet k is integral: sufficient, not necessary
    CHECK(cross.all_integral());

    const auto simplex = distset::analyze(distset::simplex(4).points());
    CHECK(simplex.s == 1);
    CHECK(simplex.k_values.empty());
    CHECK(simplex.all_integral());  // trivially
    CHECK_FALSE(simplex.cap.has_value());
    CHECK(simplex.lrs == std::nullopt);
}

TEST_CASE("analyze rejects unrealizable input") {
    distset::ExactMatrix bad(3, 3);
    bad.at(0, 1) = bad.at(1, 0) = QuadExt(1);
    bad.at(0, 2) = bad.at(2, 0) = QuadExt(1);
    bad.at(1, 2) = bad.at(2, 1) = QuadExt(9);
    CHECK_THROWS_AS(distset::analyze(distset::SquaredDistanceMatrix(bad)), Error);
}

TEST_CASE("partition of unity: k values always sum to 1") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t s = 2 + trial % 3;
        const auto spec = random_spectrum(rng, s);
        QuadExt sum(0);
        for (const auto& k : distset::k_invariants(spec)) sum += k;
        CHECK(sum == QuadExt(1));
    }
    // also over an irrational spectrum
    QuadExt sum(0);
    for (const auto& k : distset::k_invariants(pentagon_spectrum())) sum += k;
    CHECK(sum == QuadExt(1));
}

TEST_CASE("k is invariant under rational scaling of the spectrum") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> num(1, 9);
    for (int trial = 0; trial < 100; ++trial) {
        const auto spec = random_spectrum(rng, 2 + trial % 3);
        const QuadExt c = QuadExt::from_fraction(num(rng), num(rng));
        DistanceSpectrum scaled;
        for (const auto& v : spec.sq_distances) scaled.sq_distances.push_back(v * c);
        CHECK(distset::k_invariants(scaled) == distset::k_invariants(spec));
    }
}

TEST_CASE("sign pattern: k alternates starting positive") {
    // ascending positive spectrum gives sign(k_i) = (-1)^(i-1): the i-th
    // product has exactly i-1 negative denominators
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t s = 2 + trial % 3;
        const auto ks = distset::k_invariants(random_spectrum(rng, s));
        for (std::size_t i = 0; i < ks.size(); ++i)
            CHECK(ks[i].sign() == ((i % 2 == 0) ? 1 : -1));
    }
}

TEST_CASE("recover distances: frozen examples") {
    const auto two = distset::recover_distances({2.0, -1.0}, 1e-11);
    REQUIRE(two.gamma.size() == 2);
    CHECK(std::fabs(two.gamma[0] - 0.5) < 1e-9);
    CHECK(two.gamma[1] == 1.0);

    const auto three = distset::recover_distances({3.0, -3.0, 1.0}, 1e-11);
    REQUIRE(three.gamma.size() == 3);
    CHECK(std::fabs(three.gamma[0] - 1.0 / 3.0) < 1e-9);
    CHECK(std::fabs(three.gamma[1] - 2.0 / 3.0) < 1e-9);

    CHECK_THROWS_AS(distset::recover_distances({1.0}, 1e-9), Error);        // s = 1
    CHECK_THROWS_AS(distset::recover_distances({2.0, -2.0}, 1e-9), Error);  // sum != 1
    try {
        distset::recover_distances({2.0, -2.0}, 1e-9);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InconsistentK);
    }
}

TEST_CASE("recover inverts the forward map on random normalized spectra") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<long> pick(2, 50);
    int successes = 0;
    const int trials = 100;
    for (int trial = 0; trial < trials; ++trial) {
        const std::size_t s = 2 + trial % 3;
        std::set<long> nums;
        while (nums.size() < s) {
            const long c = pick(rng);
            bool separated = true;
            for (long v : nums) separated = separated && std::labs(v - c) >= 3;
            if (separated) nums.insert(c);
        }
        const long last = *nums.rbegin();
        DistanceSpectrum spec;  // normalized: gamma_s = 1
        for (long v : nums) spec.sq_distances.push_back(QuadExt(Rational(v, last)));

        std::vector<double> k;
        for (const auto& kv : distset::k_invariants(spec)) k.push_back(kv.to_double());
        try {
            const auto rec = distset::recover_distances(k, 1e-11);
            bool close = true;
            for (std::size_t i = 0; i < s; ++i)
                close = close &&
                        std::fabs(rec.gamma[i] - spec.sq_distances[i].to_double()) <= 1e-9;
            if (close) ++successes;
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NoConvergence);  // failures must be loud
        }
    }
    CHECK(successes >= 99);
}
