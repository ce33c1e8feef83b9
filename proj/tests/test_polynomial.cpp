#include <doctest.h>

#include <random>

#include "distset/polynomial.hpp"

using distset::Error;
using distset::Monomial;
using distset::Polynomial;
using distset::QuadExt;
using distset::Rational;

namespace {

Monomial mono(std::vector<unsigned> e) { return Monomial{std::move(e)}; }

Polynomial random_poly(std::mt19937_64& rng, std::size_t dim, long deg) {
    std::uniform_int_distribution<long> coef(-5, 5);
    std::uniform_int_distribution<int> keep(0, 2);
    Polynomial p(dim);
    for (const auto& m : distset::monomials_up_to(dim, deg)) {
        if (keep(rng) == 0) p.add_term(m, QuadExt(coef(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("partial derivatives") {
    const Polynomial x0 = Polynomial::sum_of_squares(2);
    const Polynomial dx = x0.partial_derivative(0);
    CHECK(dx == Polynomial::variable(2, 0) * QuadExt(2));

    // d1 d2 (x^2 + y^2)^2 = 8 x y
    const Polynomial mixed = x0.pow(2).partial_derivative(0).partial_derivative(1);
    Polynomial expected(2);
    expected.add_term(mono({1, 1}), QuadExt(8));
    CHECK(mixed == expected);
}

TEST_CASE("binomial expansion") {
    const Polynomial x = Polynomial::variable(2, 0);
    const Polynomial y = Polynomial::variable(2, 1);
    const Polynomial sq = (x + y).pow(2);
    Polynomial expected(2);
    expected.add_term(mono({2, 0}), QuadExt(1));
    expected.add_term(mono({1, 1}), QuadExt(2));
    expected.add_term(mono({0, 2}), QuadExt(1));
    CHECK(sq == expected);
    CHECK(sq.degree() == 2);
}

TEST_CASE("zero handling and degree") {
    Polynomial z(3);
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    z.add_term(mono({1, 0, 0}), QuadExt(2));
    z.add_term(mono({1, 0, 0}), QuadExt(-2));  // cancels, stays canonical
    CHECK(z.is_zero());
    CHECK(z.terms().empty());
}

TEST_CASE("evaluation with exact field values") {
    // p = x^2 - 5 y^2 vanishes at (sqrt(5), 1)
    Polynomial p(2);
    p.add_term(mono({2, 0}), QuadExt(1));
    p.add_term(mono({0, 2}), QuadExt(-5));
    CHECK(p.evaluate({QuadExt::sqrt_of(5), QuadExt(1)}).is_zero());
    CHECK(p.evaluate({QuadExt(1), QuadExt(1)}) == QuadExt(-4));
}

TEST_CASE("grlex monomial enumeration is deterministic") {
    const auto basis = distset::monomials_up_to(2, 2);
    REQUIRE(basis.size() == 6);
    CHECK(basis[0] == mono({0, 0}));
    CHECK(basis[1] == mono({0, 1}));
    CHECK(basis[2] == mono({1, 0}));
    CHECK(basis[3] == mono({0, 2}));
    CHECK(basis[4] == mono({1, 1}));
    CHECK(basis[5] == mono({2, 0}));
    CHECK(distset::monomials_up_to(3, -1).empty());
}

TEST_CASE("ring identities on random polynomials") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        const Polynomial p = random_poly(rng, 2, 3);
        const Polynomial q = random_poly(rng, 2, 3);
        const Polynomial r = random_poly(rng, 2, 2);
        CHECK((p + q) * r == p * r + q * r);
        CHECK(p * q == q * p);
        CHECK((p - p).is_zero());
        // derivative is linear and satisfies the product rule
        CHECK((p * q).partial_derivative(0) ==
              p.partial_derivative(0) * q + p * q.partial_derivative(0));
    }
}

TEST_CASE("dimension mismatches are rejected") {
    CHECK_THROWS_AS(Polynomial::variable(2, 0) + Polynomial::variable(3, 0), Error);
    CHECK_THROWS_AS(Polynomial::variable(2, 2), Error);
    Polynomial p(2);
    CHECK_THROWS_AS(p.add_term(mono({1, 0, 0}), QuadExt(1)), Error);
    CHECK_THROWS_AS(p.evaluate({QuadExt(1)}), Error);
}
