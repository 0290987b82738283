#ifndef DIRAC_LATTICE_HPP
#define DIRAC_LATTICE_HPP

#include <complex>
#include <optional>
#include <vector>

#include "dirac/exact.hpp"
#include "dirac/quaternion.hpp"

namespace dirac {

// Inner product fixed for the whole project: <w, z> = Re(conj(w) z) = w_x x + w_y y.
inline double pairing(Cx w, Cx z) { return w.real() * z.real() + w.imag() * z.imag(); }

// Period lattice Gamma = Z*gamma1 + Z*gamma2 with Im(conj(gamma1) gamma2) > 0.
struct LatticeBasis {
    Cx gamma1;
    Cx gamma2;

    // Validates non-degeneracy and swaps the generators if needed so that
    // Im(conj(gamma1) gamma2) > 0.
    static LatticeBasis make(Cx g1, Cx g2);

    double volume() const;  // Im(conj(gamma1) gamma2), area of the fundamental domain
};

// Exact Gram data of the dual basis: a = |w1|^2, b = <w1,w2>, c = |w2|^2.
struct DualGramExact {
    Rational a, b, c;
};

// Dual lattice basis: <omega_i, gamma_j> = 2 pi delta_ij.
struct DualBasis {
    Cx omega1;
    Cx omega2;
    // Present when the components are short dyadics, enabling exact norm
    // comparisons on symmetric lattices.
    std::optional<DualGramExact> exact_gram;

    static DualBasis make(Cx w1, Cx w2);

    Cx value(int m, int n) const { return double(m) * omega1 + double(n) * omega2; }

    // |m*w1 + n*w2 + (s1/2)w1 + (s2/2)w2|^2 as an exact rational, when available.
    std::optional<Rational> exact_norm_sq(int m, int n, int s1_half, int s2_half) const;
};

DualBasis dual_basis(const LatticeBasis& basis);

// Primal basis recovered from a dual basis (duality is an involution).
LatticeBasis primal_basis(const DualBasis& dual);

// Spin structure omega0 = (s1/2) w1 + (s2/2) w2 with s1, s2 in {0, 1} halves,
// i.e. the four classes of half dual-lattice vectors modulo the dual lattice.
struct SpinStructure {
    int s1 = 0;  // numerator of the half: 0 or 1
    int s2 = 0;

    static SpinStructure make(int s1_half, int s2_half);

    Cx omega0(const DualBasis& dual) const {
        return 0.5 * (double(s1) * dual.omega1 + double(s2) * dual.omega2);
    }
};

struct LatticePoint {
    int m = 0;
    int n = 0;
    Cx value{0.0, 0.0};
};

// All dual-lattice points w with |w - center| <= radius (plus a tiny margin).
// Complete by construction: integer coordinate ranges are bounded through the
// primal basis via Cauchy-Schwarz, never by heuristic search.
std::vector<LatticePoint> enumerate_disk(const DualBasis& dual, Cx center, double radius);

// The n x n points {(p/n) gamma1 + (q/n) gamma2 : 0 <= p, q < n}.
std::vector<Cx> fundamental_grid(const LatticeBasis& basis, int n);

}  // namespace dirac

#endif
