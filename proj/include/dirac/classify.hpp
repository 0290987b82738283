#ifndef DIRAC_CLASSIFY_HPP
#define DIRAC_CLASSIFY_HPP

#include <optional>
#include <vector>

#include "dirac/exact.hpp"
#include "dirac/spectral.hpp"

namespace dirac {

// Dual-lattice basis with components in Q(sqrt(d)); all classification
// arithmetic is exact.
struct ExactLatticeBasis {
    ExactComplex w1;
    ExactComplex w2;

    static ExactLatticeBasis make(ExactComplex w1, ExactComplex w2);
};

enum class VerdictKind {
    ExistsWitness,      // rectangular sublattice with rational norm ratio found
    NotFoundUpToBound,  // bounded search inconclusive
    NoRectangularCase,  // rectangular input with irrational ratio: provably none
};

struct Witness {
    ExactComplex omega1;
    ExactComplex omega2;
    Rational b;  // |omega1|^2 = b |omega2|^2
};

struct Verdict {
    VerdictKind kind = VerdictKind::NotFoundUpToBound;
    std::optional<Witness> witness;
    std::vector<ExactComplex> six_vectors;  // equal-length certificate, when known
    int search_bound = 0;
};

// Searches integer combinations m w1 + n w2 with |m|, |n| <= coeff_bound for an
// orthogonal pair with rational squared-norm ratio.  Deterministic: candidates
// are canonicalized to a half plane and ordered by (norm, slope); the first
// qualifying pair wins.  A rectangular input basis upgrades the negative
// answer to a proof (NoRectangularCase).
Verdict classify(const ExactLatticeBasis& basis, int coeff_bound);

// Total decision for rectangular lattices (1, i tau) given tau^2 exactly:
// a Dirac torus exists iff tau^2 is rational.  On yes, the explicit
// six-vector certificate is attached.
Verdict classify_rectangular(const QuadScalar& tau_sq);

// The proof's explicit vectors {+-(p-q) +- i 2q tau, +-(p+q)} for q tau^2 = p,
// all of squared length (p+q)^2.  For p == q those degenerate to four vectors,
// and the six-vector certificate comes from the square lattice's norm-5
// circle instead.
std::vector<ExactComplex> rectangular_witness(std::int64_t p, std::int64_t q,
                                              const Rational& tau_sq);

// Smallest mu <= mu_max with #Gamma' >= 6, if any.
std::optional<double> min_torus_eigenvalue(const DualBasis& dual, const SpinStructure& spin,
                                           double mu_max);

}  // namespace dirac

#endif
