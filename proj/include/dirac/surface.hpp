#ifndef DIRAC_SURFACE_HPP
#define DIRAC_SURFACE_HPP

#include <string>
#include <vector>

#include "dirac/spinor.hpp"

namespace dirac {

// Pointwise differential geometry of the immersion, all derivatives analytic
// from the Fourier modes.
struct GeometrySample {
    Cx z{0.0, 0.0};
    Vec3 position;
    Vec3 fx, fy;                   // first derivatives
    double E = 0.0, F = 0.0, G = 0.0;  // first fundamental form
    double H = 0.0;                // mean curvature (sign depends on orientation)
    double half_density = 0.0;     // |H| sqrt(E)
    double conformal_defect = 0.0;  // (|E - G| + 2|F|) / (E + G)
    double lambda_norm_sq = 0.0;   // |lambda1|^2 + |lambda2|^2 when a spinor is given
};

// Throws DegeneratePoint when E G - F^2 < eps^2 (the immersion fails at a zero
// of lambda).  A spinor, when supplied, fills lambda_norm_sq.
GeometrySample sample_geometry(const SurfaceImmersion& f, Cx z,
                               const SpinorField* spinor = nullptr, double degeneracy_eps = 0.0);

// First and second derivatives of f at z, for finite-difference cross-checks.
struct SurfaceJet {
    Quat f, fx, fy, fxx, fxy, fyy;
};
SurfaceJet eval_jet(const SurfaceImmersion& f, Cx z);

// Riemann sum of H^2 dA over the fundamental domain on an n x n grid;
// spectrally accurate for trigonometric integrands.  Throws DegenerateSurface
// if any grid point is degenerate.
double willmore_energy(const SurfaceImmersion& f, int n);

// max over grid points and both generators of |f(z + gamma) - f(z)|.
double periodicity_defect(const SurfaceImmersion& f, int n);

struct SurfaceMesh {
    int resolution = 0;
    std::vector<Vec3> vertices;                 // n*n, row major
    std::vector<std::array<int, 4>> faces;      // quads, 0-based, wraparound
    std::vector<GeometrySample> samples;
};

// Writes a Wavefront OBJ of the n x n torus-periodic grid (quad faces with
// wraparound, 9 significant digits, byte-deterministic).  Unless force is set,
// degenerate geometry is rejected.
SurfaceMesh export_mesh(const SurfaceImmersion& f, int n, const std::string& path,
                        bool force = false);

struct Tolerances {
    double pde = 1e-10;
    double closedness = 1e-10;
    double period = 1e-9;
    double conformal = 1e-8;
    double half_density = 1e-6;  // relative
};

struct VerificationReport {
    int grid_n = 0;
    Tolerances tol;
    double max_pde_residual = 0.0;
    double max_closedness_residual = 0.0;
    double max_period_defect = 0.0;
    double max_conformal_defect = 0.0;
    double max_half_density_error = 0.0;  // relative to mu
    double half_density_mean = 0.0;
    double half_density_spread = 0.0;  // (max - min) / mu
    double willmore_numeric = 0.0;
    double willmore_mu2_vol = 0.0;  // mu^2 vol(C/Gamma), forced by H |df| = mu
    double willmore_mu_vol = 0.0;   // mu vol(C/Gamma), the value printed in the literature
    std::string willmore_note;
    std::vector<Cx> degenerate_points;
    bool passed = false;
};

// Fills every report field on an n x n grid; failures are recorded, not thrown.
VerificationReport verify(const SurfaceImmersion& f, const SpinorField& spinor, int n,
                          const Tolerances& tol = {});

}  // namespace dirac

#endif
