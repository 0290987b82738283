#include "dirac/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace dirac {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

LatticeBasis LatticeBasis::make(Cx g1, Cx g2) {
    const double det = std::imag(std::conj(g1) * g2);
    const double scale = std::abs(g1) * std::abs(g2);
    if (scale == 0.0 || std::abs(det) < 1e-14 * scale)
        throw DegenerateLattice("lattice generators are collinear or zero");
    if (det < 0.0) std::swap(g1, g2);
    return LatticeBasis{g1, g2};
}

double LatticeBasis::volume() const { return std::imag(std::conj(gamma1) * gamma2); }

DualBasis DualBasis::make(Cx w1, Cx w2) {
    const double det = std::imag(std::conj(w1) * w2);
    const double scale = std::abs(w1) * std::abs(w2);
    if (scale == 0.0 || std::abs(det) < 1e-14 * scale)
        throw DegenerateLattice("dual generators are collinear or zero");
    DualBasis dual{w1, w2, std::nullopt};
    if (is_short_dyadic(w1.real()) && is_short_dyadic(w1.imag()) && is_short_dyadic(w2.real()) &&
        is_short_dyadic(w2.imag())) {
        const Rational x1 = rational_from_double(w1.real());
        const Rational y1 = rational_from_double(w1.imag());
        const Rational x2 = rational_from_double(w2.real());
        const Rational y2 = rational_from_double(w2.imag());
        dual.exact_gram = DualGramExact{x1 * x1 + y1 * y1, x1 * x2 + y1 * y2, x2 * x2 + y2 * y2};
    }
    return dual;
}

std::optional<Rational> DualBasis::exact_norm_sq(int m, int n, int s1_half, int s2_half) const {
    if (!exact_gram) return std::nullopt;
    // coordinates doubled so that half-integer shifts stay integral
    const Rational u = 2 * m + s1_half;
    const Rational v = 2 * n + s2_half;
    return (exact_gram->a * u * u + 2 * exact_gram->b * u * v + exact_gram->c * v * v) / 4;
}

DualBasis dual_basis(const LatticeBasis& basis) {
    // W = 2 pi G^{-T} for the 2x2 real generator matrix G = [gamma1 gamma2].
    const double a = basis.gamma1.real(), b = basis.gamma2.real();
    const double c = basis.gamma1.imag(), d = basis.gamma2.imag();
    const double det = a * d - b * c;  // = volume > 0 after normalization
    const Cx w1(kTwoPi * d / det, -kTwoPi * b / det);
    const Cx w2(-kTwoPi * c / det, kTwoPi * a / det);
    return DualBasis::make(w1, w2);
}

LatticeBasis primal_basis(const DualBasis& dual) {
    const double a = dual.omega1.real(), b = dual.omega2.real();
    const double c = dual.omega1.imag(), d = dual.omega2.imag();
    const double det = a * d - b * c;
    if (det == 0.0) throw DegenerateLattice("dual basis is singular");
    return LatticeBasis::make(Cx(kTwoPi * d / det, -kTwoPi * b / det),
                              Cx(-kTwoPi * c / det, kTwoPi * a / det));
}

SpinStructure SpinStructure::make(int s1_half, int s2_half) {
    if ((s1_half != 0 && s1_half != 1) || (s2_half != 0 && s2_half != 1))
        throw PreconditionViolated("spin structure components must be 0 or 1/2");
    return SpinStructure{s1_half, s2_half};
}

std::vector<LatticePoint> enumerate_disk(const DualBasis& dual, Cx center, double radius) {
    if (radius < 0.0) throw PreconditionViolated("enumerate_disk: negative radius");
    const double r = radius * (1.0 + 1e-12) + 1e-12;

    // Raw 2 pi W^{-T} columns, kept in basis order (no orientation swap), so
    // that <g_i, w_j> = 2 pi delta_ij holds index by index.
    const double a = dual.omega1.real(), b = dual.omega2.real();
    const double c = dual.omega1.imag(), d = dual.omega2.imag();
    const double det = a * d - b * c;
    const Cx g1(kTwoPi * d / det, -kTwoPi * b / det);
    const Cx g2(-kTwoPi * c / det, kTwoPi * a / det);

    // For w = m w1 + n w2: 2 pi m = <g1, w>, so |2 pi m - <g1, c>| <= |g1| r.
    auto bounds = [&](Cx gamma) {
        const double mid = pairing(gamma, center) / kTwoPi;
        const double half = std::abs(gamma) * r / kTwoPi;
        return std::pair<int, int>{static_cast<int>(std::floor(mid - half)) - 1,
                                   static_cast<int>(std::ceil(mid + half)) + 1};
    };
    const auto [m_lo, m_hi] = bounds(g1);
    const auto [n_lo, n_hi] = bounds(g2);

    std::vector<LatticePoint> points;
    for (int m = m_lo; m <= m_hi; ++m) {
        for (int n = n_lo; n <= n_hi; ++n) {
            const Cx w = dual.value(m, n);
            if (std::abs(w - center) <= r) points.push_back({m, n, w});
        }
    }
    std::sort(points.begin(), points.end(), [](const LatticePoint& p, const LatticePoint& q) {
        return std::pair(p.m, p.n) < std::pair(q.m, q.n);
    });
    return points;
}

std::vector<Cx> fundamental_grid(const LatticeBasis& basis, int n) {
    if (n < 1) throw PreconditionViolated("fundamental_grid: n must be >= 1");
    std::vector<Cx> pts;
    pts.reserve(static_cast<std::size_t>(n) * n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            pts.push_back((double(p) / n) * basis.gamma1 + (double(q) / n) * basis.gamma2);
    return pts;
}

}  // namespace dirac
