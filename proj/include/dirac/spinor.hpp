#ifndef DIRAC_SPINOR_HPP
#define DIRAC_SPINOR_HPP

#include <map>
#include <utility>

#include "dirac/closing.hpp"
#include "dirac/quaternion.hpp"

namespace dirac {

// Eigen-spinor of the plane Dirac operator, lambda = lambda1 + j lambda2:
//   lambda1 = sum a_w e^{i<w + w0, z>}
//   lambda2 = -(1/mu) sum a_w (w + w0) e^{i<w + w0, z>}
// which solves 2i dbar(lambda1) = mu lambda2 and 2i d(lambda2) = mu lambda1
// whenever all frequencies lie on the circle |w + w0| = mu.
struct SpinorField {
    SpectralSet set;
    CoefficientVector coeffs;

    double mu() const { return set.mu; }
    // Mode of lambda2 at frequency w + w0 is determined by the eigenvalue equation.
    Cx lambda2_coefficient(Coord c) const;
};

std::pair<Cx, Cx> eval_spinor(const SpinorField& s, Cx z);

// |2i dbar(lambda1) - mu lambda2| + |2i d(lambda2) - mu lambda1| at z, computed
// analytically from the Fourier modes (d e^{i<v,z>} = (i conj(v)/2) e^{i<v,z>},
// dbar e^{i<v,z>} = (i v/2) e^{i<v,z>}).
double pde_residual(const SpinorField& s, Cx z);

// One frequency of the quaternionic 1-form
// df = [(P + jR) dz + (Q + jS) dz~] e^{i<v,z>}.
struct QuatMode {
    Cx P{0.0, 0.0};
    Cx Q{0.0, 0.0};
    Cx R{0.0, 0.0};
    Cx S{0.0, 0.0};
};

struct FourierForm {
    DualBasis dual;
    double mu = 0.0;                  // carried through to the integrated surface
    std::map<Coord, QuatMode> modes;  // keyed by dual-lattice coordinates

    Cx freq(Coord c) const { return dual.value(c.first, c.second); }
};

// Expands df = (j lambda1^2 + lambda1 conj(lambda2)) dz
//            + (j lambda2^2 - conj(lambda1) lambda2) dz~
// as finite Fourier convolutions over pairs of spectral frequencies.
FourierForm differential_modes(const SpinorField& s);

// max over frequencies of |P v - Q conj(v)| + |R v - S conj(v)|; zero exactly
// when the form is closed mode by mode.
double check_closedness(const FourierForm& form);

// Doubly periodic immersion synthesized from a closed form.  Value at z:
//   f(z) = constant + linear_x * x + linear_y * y + sum C_v e^{i<v,z>}.
struct SurfaceImmersion {
    LatticeBasis lattice;
    DualBasis dual;
    double mu = 0.0;
    Quat constant;
    Quat linear_x;  // must vanish for a torus
    Quat linear_y;
    std::map<Coord, Quat> modes;  // nonzero frequencies only

    bool has_linear_part(double tol = 1e-10) const {
        return linear_x.norm() > tol || linear_y.norm() > tol;
    }
};

// Mode-by-mode analytic primitive: C_v = (P + jR) * 2/(i conj(v)) on the dz
// side (the dz~ side agrees by closedness).  The zero frequency contributes the
// linear part; unless allow_linear is set, a nonzero one raises NonPeriodic.
// The constant is fixed by f(0) = 0, which puts the values in Im H.
SurfaceImmersion integrate(const FourierForm& form, bool allow_linear = false);

// Analytic exterior derivative of an immersion; inverse of integrate.
FourierForm differentiate(const SurfaceImmersion& f);

Quat eval_immersion(const SurfaceImmersion& f, Cx z);

// (dz, dz~) coefficients of the form at z, via the Fourier modes.
std::pair<Quat, Quat> eval_form(const FourierForm& form, Cx z);

// Same coefficients evaluated pointwise from the spinor products; the
// independent second route for cross-checking differential_modes.
std::pair<Quat, Quat> eval_spinor_df(const SpinorField& s, Cx z);

}  // namespace dirac

#endif
