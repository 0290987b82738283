#ifndef DIRAC_EXACT_HPP
#define DIRAC_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "dirac/errors.hpp"

namespace dirac {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Exact conversion: every finite double is a dyadic rational.
Rational rational_from_double(double x);

double to_double(const Rational& r);

// True when x equals k/2^24 for an integer k of moderate size.  Used to decide
// whether floating-point lattice data can be trusted for exact arithmetic.
bool is_short_dyadic(double x);

// Element of the real quadratic field Q(sqrt(d)): value a + b*sqrt(d).
// d is a squarefree positive integer; d == 1 encodes plain rationals and
// forces b == 0 (the constructor folds b into a in that case).  Binary
// operations accept mixed operands as long as at most one nontrivial d
// is involved.
struct QuadScalar {
    Rational a;
    Rational b;
    std::int64_t d = 1;

    QuadScalar() = default;
    QuadScalar(Rational a_) : a(std::move(a_)), b(0), d(1) {}
    QuadScalar(std::int64_t n) : a(n), b(0), d(1) {}
    QuadScalar(Rational a_, Rational b_, std::int64_t d_);

    bool is_rational() const { return b == 0; }
    bool is_zero() const { return a == 0 && b == 0; }

    // -1, 0, +1 of the real value a + b*sqrt(d), decided exactly.
    int sign() const;

    double to_double() const;

    QuadScalar operator-() const { return {-a, -b, d}; }
    QuadScalar conjugate() const { return {a, -b, d}; }
    QuadScalar inverse() const;

    std::string str() const;
};

QuadScalar operator+(const QuadScalar& x, const QuadScalar& y);
QuadScalar operator-(const QuadScalar& x, const QuadScalar& y);
QuadScalar operator*(const QuadScalar& x, const QuadScalar& y);
QuadScalar operator/(const QuadScalar& x, const QuadScalar& y);
bool operator==(const QuadScalar& x, const QuadScalar& y);
inline bool operator!=(const QuadScalar& x, const QuadScalar& y) { return !(x == y); }
bool operator<(const QuadScalar& x, const QuadScalar& y);

// Parses "a/b", "sqrt(d)", "c/e*sqrt(d)" and sums/differences of such terms,
// e.g. "1/2+3/4*sqrt(5)", "1+sqrt(2)", "-4/9".  All sqrt terms must agree on d.
QuadScalar parse_quad_scalar(const std::string& text);

// Writes pq = k^2 * s with s squarefree; returns (k, s).
std::pair<std::int64_t, std::int64_t> squarefree_split(std::int64_t n);

// Complex number with QuadScalar components; used for exact lattice work.
struct ExactComplex {
    QuadScalar x;
    QuadScalar y;

    ExactComplex() = default;
    ExactComplex(QuadScalar x_, QuadScalar y_) : x(std::move(x_)), y(std::move(y_)) {}

    ExactComplex operator+(const ExactComplex& o) const { return {x + o.x, y + o.y}; }
    ExactComplex operator-(const ExactComplex& o) const { return {x - o.x, y - o.y}; }
    ExactComplex operator-() const { return {-x, -y}; }

    bool is_zero() const { return x.is_zero() && y.is_zero(); }
    std::string str() const;
};

inline bool operator==(const ExactComplex& u, const ExactComplex& v) {
    return u.x == v.x && u.y == v.y;
}

ExactComplex scale(std::int64_t m, const ExactComplex& v);

// <u, v> = u_x v_x + u_y v_y, matching the lattice module's pairing.
QuadScalar pairing(const ExactComplex& u, const ExactComplex& v);
QuadScalar norm_sq(const ExactComplex& u);

std::string rational_str(const Rational& r);
Rational parse_rational(const std::string& text);

}  // namespace dirac

#endif
