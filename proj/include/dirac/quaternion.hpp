#ifndef DIRAC_QUATERNION_HPP
#define DIRAC_QUATERNION_HPP

#include <cmath>
#include <complex>

#include "dirac/errors.hpp"

namespace dirac {

using Cx = std::complex<double>;

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
};

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

// Quaternion in the complex-pair representation H = C + jC.
// The stored value is p + j*q with the rule j*c = conj(c)*j for complex c.
// Basis: 1 = (1,0), i = (i,0), j = (0,1), k = i*j = (0,-i).
struct Quat {
    Cx p{0.0, 0.0};  // 1-part
    Cx q{0.0, 0.0};  // j-part

    Quat() = default;
    Quat(Cx p_, Cx q_) : p(p_), q(q_) {}
    explicit Quat(double re) : p(re, 0.0) {}

    static Quat one() { return Quat(Cx(1, 0), Cx(0, 0)); }
    static Quat i() { return Quat(Cx(0, 1), Cx(0, 0)); }
    static Quat j() { return Quat(Cx(0, 0), Cx(1, 0)); }
    static Quat k() { return Quat(Cx(0, 0), Cx(0, -1)); }

    Quat operator+(const Quat& o) const { return {p + o.p, q + o.q}; }
    Quat operator-(const Quat& o) const { return {p - o.p, q - o.q}; }
    Quat operator-() const { return {-p, -q}; }

    // (a1 + j a2)(b1 + j b2) = (a1 b1 - conj(a2) b2) + j (a2 b1 + conj(a1) b2)
    Quat operator*(const Quat& o) const {
        return {p * o.p - std::conj(q) * o.q, q * o.p + std::conj(p) * o.q};
    }

    Quat operator*(double s) const { return {p * s, q * s}; }

    // right multiplication by a complex scalar: (p + jq) c = pc + j(qc)
    Quat right_mul(Cx c) const { return {p * c, q * c}; }

    // left multiplication by a complex scalar: c (p + jq) = cp + j(conj(c) q)
    Quat left_mul(Cx c) const { return {c * p, std::conj(c) * q}; }

    double norm_sq() const { return std::norm(p) + std::norm(q); }
    double norm() const { return std::sqrt(norm_sq()); }
};

inline Quat conj(const Quat& a) { return {std::conj(a.p), -a.q}; }

inline Quat operator*(double s, const Quat& a) { return a * s; }

// Euclidean inner product on H = R^4.
inline double dot(const Quat& a, const Quat& b) {
    return a.p.real() * b.p.real() + a.p.imag() * b.p.imag() + a.q.real() * b.q.real() +
           a.q.imag() * b.q.imag();
}

inline bool is_imaginary(const Quat& a, double tol = 1e-10) { return std::abs(a.p.real()) <= tol; }

// Coordinates of an imaginary quaternion along (i, j, k).
// With p = i*x1 and q = x2 + i*x3 the value is x1*i + x2*j - x3*k, since
// j(x2 + i x3) = x2 j - x3 k.  Hence the map is (Im p, Re q, -Im q).
inline Vec3 to_r3(const Quat& v, double tol = 1e-10) {
    if (!is_imaginary(v, tol))
        throw NonImaginary("to_r3: quaternion has real part " + std::to_string(v.p.real()));
    return {v.p.imag(), v.q.real(), -v.q.imag()};
}

inline Quat from_r3(const Vec3& w) { return {Cx(0.0, w.x), Cx(w.y, -w.z)}; }

// Projection variant used on values that are imaginary up to roundoff.
inline Vec3 im3(const Quat& v) { return {v.p.imag(), v.q.real(), -v.q.imag()}; }

}  // namespace dirac

#endif
