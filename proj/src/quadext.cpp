#include "distset/quadext.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace distset {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::MixedRadicands: return "MixedRadicands";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::InvalidRadicand: return "InvalidRadicand";
        case ErrorCode::NotSymmetric: return "NotSymmetric";
        case ErrorCode::NotSquare: return "NotSquare";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::DuplicatePoints: return "DuplicatePoints";
        case ErrorCode::InvalidConfiguration: return "InvalidConfiguration";
        case ErrorCode::NotRealizable: return "NotRealizable";
        case ErrorCode::WrongS: return "WrongS";
        case ErrorCode::InvalidN: return "InvalidN";
        case ErrorCode::InconsistentK: return "InconsistentK";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::RangeError: return "RangeError";
        case ErrorCode::SizeMismatch: return "SizeMismatch";
        case ErrorCode::NotDistanceSet: return "NotDistanceSet";
        case ErrorCode::SpectrumMismatch: return "SpectrumMismatch";
        case ErrorCode::UnsupportedN: return "UnsupportedN";
        case ErrorCode::InvalidQ: return "InvalidQ";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "UnknownError";
}

Rational parse_rational(const std::string& text) {
    std::string t;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    }
    if (t.empty()) throw Error(ErrorCode::ParseError, "empty rational literal");
    // strict shape: -?digits(/digits)?
    auto all_digits = [](const std::string& s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string body = t;
    if (body[0] == '-' || body[0] == '+') body = body.substr(1);
    auto slash = body.find('/');
    bool ok;
    if (slash == std::string::npos) {
        ok = all_digits(body);
    } else {
        ok = all_digits(body.substr(0, slash)) && all_digits(body.substr(slash + 1));
    }
    if (!ok) throw Error(ErrorCode::ParseError, "bad rational literal '" + text + "'");
    Rational q;
    if (q.set_str(t, 10) != 0)
        throw Error(ErrorCode::ParseError, "bad rational literal '" + text + "'");
    if (sgn(q.get_den()) == 0)
        throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string render_rational(const Rational& q) { return q.get_str(); }

bool rational_is_integer(const Rational& q) { return q.get_den() == 1; }

int sign_of(const Rational& q) { return sgn(q); }

QuadExt::QuadExt(Rational a, Rational b, long m) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
    if (m < 0) throw Error(ErrorCode::InvalidRadicand, "negative radicand " + std::to_string(m));
    // pull square divisors of m into b: sqrt(f^2 * m') = f*sqrt(m')
    for (long f = 2; f * f <= m; ++f) {
        while (m % (f * f) == 0) {
            m /= f * f;
            b_ *= f;
        }
    }
    if (m == 1) {
        a_ += b_;
        b_ = 0;
        m = 0;
    }
    if (m == 0) b_ = 0;
    if (sgn(b_) == 0) m = 0;
    m_ = m;
}

QuadExt QuadExt::from_fraction(long num, long den) {
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "fraction with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return QuadExt(q);
}

long QuadExt::common_radicand(const QuadExt& x, const QuadExt& y) {
    if (x.m_ == 0) return y.m_;
    if (y.m_ == 0 || x.m_ == y.m_) return x.m_;
    throw Error(ErrorCode::MixedRadicands,
                "sqrt(" + std::to_string(x.m_) + ") vs sqrt(" + std::to_string(y.m_) + ")");
}

int QuadExt::sign() const {
    int sa = sgn(a_), sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // a and b disagree: compare |a| against |b|*sqrt(m) via squares.
    Rational lhs = a_ * a_;
    Rational rhs = b_ * b_ * m_;
    int cmp = sgn(Rational(lhs - rhs));
    if (cmp == 0) return 0;  // only possible for m=0 handled above, kept for safety
    return cmp > 0 ? sa : sb;
}

QuadExt QuadExt::operator+(const QuadExt& o) const {
    long m = common_radicand(*this, o);
    return QuadExt(a_ + o.a_, b_ + o.b_, m);
}

QuadExt QuadExt::operator-(const QuadExt& o) const {
    long m = common_radicand(*this, o);
    return QuadExt(a_ - o.a_, b_ - o.b_, m);
}

QuadExt QuadExt::operator*(const QuadExt& o) const {
    long m = common_radicand(*this, o);
    return QuadExt(a_ * o.a_ + b_ * o.b_ * m, a_ * o.b_ + b_ * o.a_, m);
}

QuadExt QuadExt::operator/(const QuadExt& o) const {
    if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
    long m = common_radicand(*this, o);
    // multiply by the conjugate; the norm a^2 - m*b^2 is nonzero for o != 0
    // because m is square-free (sqrt(m) irrational for m > 1).
    Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * m;
    return QuadExt((a_ * o.a_ - b_ * o.b_ * m) / norm, (b_ * o.a_ - a_ * o.b_) / norm, m);
}

double QuadExt::to_double() const {
    double v = a_.get_d();
    if (sgn(b_) != 0) v += b_.get_d() * std::sqrt(static_cast<double>(m_));
    return v;
}

std::string QuadExt::text() const {
    if (is_rational()) return render_rational(a_);
    std::ostringstream out;
    bool have_a = sgn(a_) != 0;
    if (have_a) out << render_rational(a_);
    if (sgn(b_) < 0) {
        out << (have_a ? " - " : "-");
    } else if (have_a) {
        out << " + ";
    }
    Rational babs = ::abs(b_);
    if (babs != 1) out << render_rational(babs) << "*";
    out << "sqrt(" << m_ << ")";
    return out.str();
}

}  // namespace distset
