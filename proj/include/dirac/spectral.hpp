#ifndef DIRAC_SPECTRAL_HPP
#define DIRAC_SPECTRAL_HPP

#include <optional>
#include <vector>

#include "dirac/lattice.hpp"

namespace dirac {

// Eigenvalue of the plane Dirac operator.  When the squared value is known as
// an exact rational (e.g. entered as "sqrt5"), circle membership is decided in
// exact arithmetic and never by floating-point tolerance.
struct Eigenvalue {
    double value = 0.0;
    std::optional<Rational> sq;

    Eigenvalue() = default;
    Eigenvalue(double v) : value(v) {}

    static Eigenvalue sqrt_of(const Rational& mu_sq);
};

struct SpectralPoint {
    int m = 0;
    int n = 0;
    Cx value{0.0, 0.0};  // the dual lattice vector omega
};

// The set Gamma' = {omega in Gamma* : |omega + omega0|^2 = mu^2}, closed under
// the involution omega -> -omega - 2 omega0.
struct SpectralSet {
    DualBasis dual;
    SpinStructure spin;
    double mu = 0.0;
    std::optional<Rational> mu_sq_exact;
    Cx omega0{0.0, 0.0};
    std::vector<SpectralPoint> elements;  // sorted by (m, n)

    std::size_t size() const { return elements.size(); }
    const SpectralPoint* find(int m, int n) const;
    bool contains(int m, int n) const { return find(m, n) != nullptr; }

    // Coordinates of -omega - 2 omega0 (always integral: 2 omega0 is in Gamma*).
    std::pair<int, int> involution_coords(int m, int n) const {
        return {-m - spin.s1, -n - spin.s2};
    }

    Cx shifted(const SpectralPoint& p) const { return p.value + omega0; }
};

SpectralSet spectral_set(const DualBasis& dual, const SpinStructure& spin, const Eigenvalue& mu,
                         double rel_tol = 1e-9);

// Returns -omega - 2 omega0, which lies in Gamma' whenever omega does.
SpectralPoint involution(const SpectralSet& set, const SpectralPoint& p);

struct SpectrumRow {
    double mu = 0.0;
    std::optional<Rational> mu_sq;
    int cardinality = 0;
};

// All distinct eigenvalues mu <= mu_max whose spectral set has at least
// min_card elements, ascending.
std::vector<SpectrumRow> spectrum_search(const DualBasis& dual, const SpinStructure& spin,
                                         double mu_max, int min_card = 6);

}  // namespace dirac

#endif
