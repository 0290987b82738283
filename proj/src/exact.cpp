#include "dirac/exact.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace dirac {

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw ParseFailure("rational_from_double: non-finite input");
    if (x == 0.0) return Rational(0);
    int exp = 0;
    double m = std::frexp(x, &exp);  // x = m * 2^exp, |m| in [0.5, 1)
    // 53 doublings always reach an integer mantissa
    auto mant = static_cast<std::int64_t>(std::ldexp(m, 53));
    exp -= 53;
    Rational r(mant);
    if (exp >= 0) {
        r *= Rational(BigInt(1) << exp);
    } else {
        r /= Rational(BigInt(1) << -exp);
    }
    return r;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

bool is_short_dyadic(double x) {
    if (!std::isfinite(x) || std::abs(x) > (1 << 30)) return false;
    double scaled = std::ldexp(x, 24);
    return scaled == std::nearbyint(scaled);
}

QuadScalar::QuadScalar(Rational a_, Rational b_, std::int64_t d_)
    : a(std::move(a_)), b(std::move(b_)), d(d_) {
    if (d <= 0) throw ParseFailure("QuadScalar: d must be positive");
    if (d == 1) {
        a += b;
        b = 0;
    } else if (b == 0) {
        d = 1;
    }
}

int QuadScalar::sign() const {
    const int sa = a.sign();
    const int sb = b.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 with b^2 d
    const Rational lhs = a * a;
    const Rational rhs = b * b * d;
    if (lhs == rhs) return 0;
    return (lhs > rhs) ? sa : sb;
}

double QuadScalar::to_double() const {
    return dirac::to_double(a) + dirac::to_double(b) * std::sqrt(static_cast<double>(d));
}

QuadScalar QuadScalar::inverse() const {
    if (is_zero()) throw ParseFailure("QuadScalar: division by zero");
    const Rational den = a * a - b * b * d;
    if (den == 0) throw ParseFailure("QuadScalar: d is a perfect square, field degenerate");
    return {a / den, -b / den, d};
}

namespace {

std::int64_t merge_field(const QuadScalar& x, const QuadScalar& y) {
    if (x.d == y.d) return x.d;
    if (x.d == 1) return y.d;
    if (y.d == 1) return x.d;
    throw ParseFailure("QuadScalar: incompatible quadratic fields sqrt(" + std::to_string(x.d) +
                       ") and sqrt(" + std::to_string(y.d) + ")");
}

}  // namespace

QuadScalar operator+(const QuadScalar& x, const QuadScalar& y) {
    return {x.a + y.a, x.b + y.b, merge_field(x, y)};
}

QuadScalar operator-(const QuadScalar& x, const QuadScalar& y) {
    return {x.a - y.a, x.b - y.b, merge_field(x, y)};
}

QuadScalar operator*(const QuadScalar& x, const QuadScalar& y) {
    const std::int64_t d = merge_field(x, y);
    return {x.a * y.a + x.b * y.b * d, x.a * y.b + x.b * y.a, d};
}

QuadScalar operator/(const QuadScalar& x, const QuadScalar& y) { return x * y.inverse(); }

bool operator==(const QuadScalar& x, const QuadScalar& y) {
    if (x.b == 0 && y.b == 0) return x.a == y.a;
    return x.a == y.a && x.b == y.b && merge_field(x, y) > 0;
}

bool operator<(const QuadScalar& x, const QuadScalar& y) { return (x - y).sign() < 0; }

std::string rational_str(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseFailure("empty rational literal");
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        const BigInt num(text.substr(0, slash));
        const BigInt den(text.substr(slash + 1));
        if (den == 0) throw ParseFailure("zero denominator in '" + text + "'");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw ParseFailure("bad rational literal '" + text + "'");
    }
}

std::string QuadScalar::str() const {
    if (b == 0) return rational_str(a);
    std::string root = "sqrt(" + std::to_string(d) + ")";
    std::string surd;
    if (b == 1) {
        surd = root;
    } else if (b == -1) {
        surd = "-" + root;
    } else {
        surd = rational_str(b) + "*" + root;
    }
    if (a == 0) return surd;
    if (b > 0) return rational_str(a) + "+" + surd;
    return rational_str(a) + surd;  // surd already carries the minus sign
}

namespace {

// One term of the grammar: rational, sqrt(d), or rational*sqrt(d).
QuadScalar parse_term(const std::string& term) {
    const auto sq = term.find("sqrt(");
    if (sq == std::string::npos) return QuadScalar(parse_rational(term));
    const auto close = term.find(')', sq);
    if (close == std::string::npos) throw ParseFailure("missing ')' in '" + term + "'");
    const std::string dstr = term.substr(sq + 5, close - sq - 5);
    std::int64_t d = 0;
    try {
        d = std::stoll(dstr);
    } catch (const std::exception&) {
        throw ParseFailure("bad sqrt argument '" + dstr + "'");
    }
    if (d <= 0) throw ParseFailure("sqrt argument must be positive in '" + term + "'");
    Rational coeff(1);
    std::string head = term.substr(0, sq);
    if (!head.empty() && head.back() == '*') head.pop_back();
    if (head == "-") {
        coeff = -1;
    } else if (!head.empty() && head != "+") {
        coeff = parse_rational(head);
    }
    if (close + 1 != term.size()) throw ParseFailure("trailing characters in '" + term + "'");
    auto [k, s] = squarefree_split(d);
    return QuadScalar(Rational(0), coeff * k, s);
}

}  // namespace

QuadScalar parse_quad_scalar(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseFailure("empty scalar literal");

    QuadScalar total(Rational(0));
    std::size_t start = 0;
    std::size_t i = 1;  // a leading sign belongs to the first term
    int depth = 0;
    auto flush = [&](std::size_t end) {
        if (end > start) total = total + parse_term(s.substr(start, end - start));
        start = end;
    };
    for (; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        if (depth == 0 && (s[i] == '+' || s[i] == '-')) {
            flush(i);
            if (s[i] == '+') ++start;  // the '-' stays attached to the next term
        }
    }
    if (start >= s.size()) throw ParseFailure("trailing operator in '" + text + "'");
    flush(s.size());
    return total;
}

std::pair<std::int64_t, std::int64_t> squarefree_split(std::int64_t n) {
    if (n <= 0) throw ParseFailure("squarefree_split: positive input required");
    std::int64_t k = 1, s = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        std::int64_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (std::int64_t j = 0; j + 1 < e; j += 2) k *= p;
        if (e % 2 == 1) s *= p;
    }
    s *= n;
    return {k, s};
}

ExactComplex scale(std::int64_t m, const ExactComplex& v) {
    QuadScalar f{Rational(m)};
    return {f * v.x, f * v.y};
}

QuadScalar pairing(const ExactComplex& u, const ExactComplex& v) { return u.x * v.x + u.y * v.y; }

QuadScalar norm_sq(const ExactComplex& u) { return pairing(u, u); }

std::string ExactComplex::str() const {
    if (y.is_zero()) return x.str();
    std::string im = y.str() + "*i";
    if (y == QuadScalar(Rational(1)) && y.is_rational()) im = "i";
    if (x.is_zero()) return im;
    const bool neg = y.sign() < 0;
    return x.str() + (neg ? "" : "+") + im;
}

}  // namespace dirac
