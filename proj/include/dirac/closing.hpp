#ifndef DIRAC_CLOSING_HPP
#define DIRAC_CLOSING_HPP

#include <array>
#include <map>

#include "dirac/spectral.hpp"

namespace dirac {

using Coord = std::pair<int, int>;

// Fourier coefficients a_omega of the eigen-spinor, keyed by dual-lattice
// coordinates.  Keys must lie in the spectral set they are used with.
struct CoefficientVector {
    std::map<Coord, Cx> a;

    Cx get(Coord c) const {
        auto it = a.find(c);
        return it == a.end() ? Cx(0.0, 0.0) : it->second;
    }
    bool nontrivial(double tol = 0.0) const;
};

// Left-hand sides of the three closing conditions; the surface closes to a
// torus iff all three vanish.
struct ClosingResiduals {
    Cx r1{0.0, 0.0};  // sum |a_w|^2 (w + w0)
    Cx r2{0.0, 0.0};  // sum a_w a_{-w-2w0}
    Cx r3{0.0, 0.0};  // sum a_w a_{-w-2w0} (w + w0)^2

    double max_abs() const;
};

ClosingResiduals closing_residuals(const SpectralSet& set, const CoefficientVector& coeffs);

// Builds a closing coefficient vector from three picks by the cross-product
// recipe: a_i^2 = seed_scale * (v1 x v2)_i with v1 = (1,1,1) and
// v2 = ((w_1+w0)^2, (w_2+w0)^2, (w_3+w0)^2), partners a_{-w-2w0} = i a_w.
// The picks and their involution partners must be six distinct elements; by
// default picks are restricted to the half plane Re(w + w0) >= 0.
CoefficientVector construct_coefficients(const SpectralSet& set, const std::array<Coord, 3>& picks,
                                         Cx seed_scale = Cx(1.0, 0.0),
                                         bool enforce_halfplane = true);

// Dimension of the v0-solution space for the canonical three-pick family:
// 0 for #Gamma' <= 4 (the closing conditions force the zero spinor there),
// and 3 - rank{v1, v2} >= 1 for #Gamma' >= 6.
int nontrivial_solution_space_dim(const SpectralSet& set);

// Certificate that for #Gamma' in {2, 4} only the zero coefficient vector
// closes: the pair-product system and the magnitude system are both
// nonsingular.  Used by tests as the linear-algebra oracle.
struct TrivialityCertificate {
    bool applicable = false;  // cardinality was 2 or 4
    bool trivial = false;
    double product_system_det = 0.0;   // |det [[1,1],[w1,w2]]| (card 4), else 1
    double magnitude_system_det = 0.0;  // |Im(conj(v1) v2)| (card 4), else |v1|
};

TrivialityCertificate triviality_certificate(const SpectralSet& set);

// Deterministic representatives, one per involution pair, preferring the
// half plane Re(w + w0) > 0 (ties broken toward Im > 0), sorted by coords.
std::vector<SpectralPoint> halfplane_representatives(const SpectralSet& set);

}  // namespace dirac

#endif
