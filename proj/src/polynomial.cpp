#include "distset/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace distset {

Polynomial Polynomial::constant(std::size_t dim, const QuadExt& c) {
    Polynomial p(dim);
    p.add_term(Monomial{std::vector<unsigned>(dim, 0)}, c);
    return p;
}

Polynomial Polynomial::variable(std::size_t dim, std::size_t index) {
    if (index >= dim) throw Error(ErrorCode::IndexOutOfRange, "variable index out of range");
    Polynomial p(dim);
    Monomial m{std::vector<unsigned>(dim, 0)};
    m.exponents[index] = 1;
    p.add_term(m, QuadExt(1));
    return p;
}

Polynomial Polynomial::sum_of_squares(std::size_t dim) {
    Polynomial p(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        Monomial m{std::vector<unsigned>(dim, 0)};
        m.exponents[i] = 2;
        p.add_term(m, QuadExt(1));
    }
    return p;
}

long Polynomial::degree() const {
    if (terms_.empty()) return -1;
    // grlex order puts the highest total degree last
    return static_cast<long>(terms_.rbegin()->first.degree());
}

QuadExt Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? QuadExt(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const QuadExt& c) {
    if (m.exponents.size() != dim_)
        throw Error(ErrorCode::DimensionMismatch, "monomial arity differs from dim");
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_dim(o);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_dim(o);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_dim(o);
    Polynomial r(dim_);
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            Monomial m{std::vector<unsigned>(dim_)};
            for (std::size_t i = 0; i < dim_; ++i)
                m.exponents[i] = m1.exponents[i] + m2.exponents[i];
            r.add_term(m, c1 * c2);
        }
    }
    return r;
}

Polynomial Polynomial::operator*(const QuadExt& c) const {
    Polynomial r(dim_);
    if (c.is_zero()) return r;
    for (const auto& [m, coef] : terms_) r.add_term(m, coef * c);
    return r;
}

Polynomial Polynomial::pow(std::size_t e) const {
    Polynomial r = constant(dim_, QuadExt(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Polynomial Polynomial::partial_derivative(std::size_t index) const {
    if (index >= dim_) throw Error(ErrorCode::IndexOutOfRange, "variable index out of range");
    Polynomial r(dim_);
    for (const auto& [m, c] : terms_) {
        unsigned e = m.exponents[index];
        if (e == 0) continue;
        Monomial dm = m;
        dm.exponents[index] = e - 1;
        r.add_term(dm, c * QuadExt(static_cast<long>(e)));
    }
    return r;
}

QuadExt Polynomial::evaluate(const std::vector<QuadExt>& point) const {
    if (point.size() != dim_)
        throw Error(ErrorCode::DimensionMismatch, "evaluation point arity differs from dim");
    QuadExt sum(0);
    for (const auto& [m, c] : terms_) {
        QuadExt v = c;
        for (std::size_t i = 0; i < dim_; ++i) {
            for (unsigned e = 0; e < m.exponents[i]; ++e) v *= point[i];
        }
        sum += v;
    }
    return sum;
}

std::string Polynomial::text() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.text() << ")";
        for (std::size_t i = 0; i < dim_; ++i) {
            if (m.exponents[i] == 0) continue;
            out << "*x" << (i + 1);
            if (m.exponents[i] > 1) out << "^" << m.exponents[i];
        }
    }
    return out.str();
}

namespace {

void enumerate_fixed_degree(std::size_t dim, std::size_t index, long remaining,
                            std::vector<unsigned>& current, std::vector<Monomial>& out) {
    if (index + 1 == dim) {
        current[index] = static_cast<unsigned>(remaining);
        out.push_back(Monomial{current});
        return;
    }
    for (long e = remaining; e >= 0; --e) {
        current[index] = static_cast<unsigned>(e);
        enumerate_fixed_degree(dim, index + 1, remaining - e, current, out);
    }
}

}  // namespace

std::vector<Monomial> monomials_up_to(std::size_t dim, long max_degree) {
    std::vector<Monomial> out;
    if (max_degree < 0) return out;
    if (dim == 0) {
        out.push_back(Monomial{{}});
        return out;
    }
    std::vector<unsigned> current(dim, 0);
    for (long total = 0; total <= max_degree; ++total) {
        // within one degree, descending first exponent = ascending grlex? keep
        // consistent with GrlexLess: lex ascending on the exponent vector.
        std::vector<Monomial> level;
        enumerate_fixed_degree(dim, 0, total, current, level);
        std::sort(level.begin(), level.end(),
                  [](const Monomial& a, const Monomial& b) { return a.exponents < b.exponents; });
        for (auto& m : level) out.push_back(std::move(m));
    }
    return out;
}

}  // namespace distset
