#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "distset/quadext.hpp"

namespace distset {

/// Exponent vector of one monomial x_1^{e_1} ... x_d^{e_d}.
struct Monomial {
    std::vector<unsigned> exponents;

    std::size_t degree() const {
        std::size_t d = 0;
        for (unsigned e : exponents) d += e;
        return d;
    }
    bool operator==(const Monomial& o) const { return exponents == o.exponents; }
};

/// Graded lexicographic order: total degree first, then lex on exponents.
/// Fixed once so coefficient matrices are byte-stable across runs.
struct GrlexLess {
    bool operator()(const Monomial& x, const Monomial& y) const {
        std::size_t dx = x.degree(), dy = y.degree();
        if (dx != dy) return dx < dy;
        return x.exponents < y.exponents;
    }
};

/// Sparse multivariate polynomial with exact coefficients. Zero coefficients
/// are never stored.
class Polynomial {
public:
    explicit Polynomial(std::size_t dim) : dim_(dim) {}

    static Polynomial constant(std::size_t dim, const QuadExt& c);
    static Polynomial variable(std::size_t dim, std::size_t index);  // x_{index}, 0-based
    /// x_1^2 + ... + x_d^2 (the paper's auxiliary variable x_0, expanded)
    static Polynomial sum_of_squares(std::size_t dim);

    std::size_t dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    /// Total degree; -1 for the zero polynomial.
    long degree() const;

    const std::map<Monomial, QuadExt, GrlexLess>& terms() const { return terms_; }
    QuadExt coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, const QuadExt& c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const QuadExt& c) const;  // scale
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    bool operator==(const Polynomial& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }

    Polynomial pow(std::size_t e) const;
    Polynomial partial_derivative(std::size_t index) const;

    QuadExt evaluate(const std::vector<QuadExt>& point) const;

    std::string text() const;  // for diagnostics

private:
    void check_dim(const Polynomial& o) const {
        if (dim_ != o.dim_)
            throw Error(ErrorCode::DimensionMismatch, "polynomials in different variable counts");
    }

    std::size_t dim_;
    std::map<Monomial, QuadExt, GrlexLess> terms_;
};

/// All monomials of total degree <= max_degree in d variables, grlex order.
std::vector<Monomial> monomials_up_to(std::size_t dim, long max_degree);

}  // namespace distset
