#include "dirac/closing.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace dirac {

bool CoefficientVector::nontrivial(double tol) const {
    for (const auto& [key, value] : a)
        if (std::abs(value) > tol) return true;
    return false;
}

double ClosingResiduals::max_abs() const {
    return std::max({std::abs(r1), std::abs(r2), std::abs(r3)});
}

ClosingResiduals closing_residuals(const SpectralSet& set, const CoefficientVector& coeffs) {
    for (const auto& [key, value] : coeffs.a) {
        if (!set.contains(key.first, key.second))
            throw KeyOutsideSpectralSet("coefficient at (" + std::to_string(key.first) + "," +
                                        std::to_string(key.second) +
                                        ") lies outside the spectral set");
    }
    ClosingResiduals res;
    for (const auto& p : set.elements) {
        const Cx a = coeffs.get({p.m, p.n});
        if (a == Cx(0.0, 0.0)) continue;
        const Cx v = set.shifted(p);
        const Cx partner = coeffs.get(set.involution_coords(p.m, p.n));
        res.r1 += std::norm(a) * v;
        res.r2 += a * partner;
        res.r3 += a * partner * v * v;
    }
    return res;
}

CoefficientVector construct_coefficients(const SpectralSet& set, const std::array<Coord, 3>& picks,
                                         Cx seed_scale, bool enforce_halfplane) {
    if (set.size() < 6)
        throw PreconditionViolated("construct_coefficients: need #Gamma' >= 6, have " +
                                   std::to_string(set.size()));

    std::array<const SpectralPoint*, 3> points{};
    std::set<Coord> six;
    for (int i = 0; i < 3; ++i) {
        points[i] = set.find(picks[i].first, picks[i].second);
        if (!points[i])
            throw KeyOutsideSpectralSet("pick (" + std::to_string(picks[i].first) + "," +
                                        std::to_string(picks[i].second) +
                                        ") is not in the spectral set");
        six.insert(picks[i]);
        six.insert(set.involution_coords(picks[i].first, picks[i].second));
    }
    if (six.size() != 6)
        throw DegeneratePicks("picks and their involution partners are not six distinct elements");
    if (enforce_halfplane) {
        for (const auto* p : points)
            if (pairing(Cx(1.0, 0.0), set.shifted(*p)) < -1e-12)
                throw DegeneratePicks("pick lies in the open half plane Re(w + w0) < 0");
    }

    std::array<Cx, 3> w;  // components of v2
    for (int i = 0; i < 3; ++i) {
        const Cx v = set.shifted(*points[i]);
        w[i] = v * v;
    }
    const double scale = std::max({std::abs(w[0]), std::abs(w[1]), std::abs(w[2]), 1.0});
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (std::abs(w[i] - w[j]) < 1e-10 * scale)
                throw DegeneratePicks("v2 has two equal components; the recipe collapses");

    // v0 = v1 x v2 is perpendicular to both v1 = (1,1,1) and v2.
    const std::array<Cx, 3> v0{w[2] - w[1], w[0] - w[2], w[1] - w[0]};

    CoefficientVector coeffs;
    for (int i = 0; i < 3; ++i) {
        const Cx ai = std::sqrt(seed_scale * v0[i]);  // principal branch
        coeffs.a[picks[i]] = ai;
        coeffs.a[set.involution_coords(picks[i].first, picks[i].second)] = Cx(0.0, 1.0) * ai;
    }
    return coeffs;
}

std::vector<SpectralPoint> halfplane_representatives(const SpectralSet& set) {
    std::vector<SpectralPoint> reps;
    std::set<Coord> seen;
    for (const auto& p : set.elements) {
        const Coord self{p.m, p.n};
        const Coord partner = set.involution_coords(p.m, p.n);
        if (seen.count(self) || seen.count(partner)) continue;
        seen.insert(self);
        const Cx v = set.shifted(p);
        const SpectralPoint* other = set.find(partner.first, partner.second);
        bool take_self = true;
        if (other) {
            const Cx vo = set.shifted(*other);
            if (v.real() < vo.real() - 1e-14 ||
                (std::abs(v.real() - vo.real()) <= 1e-14 && v.imag() < vo.imag()))
                take_self = false;
        }
        reps.push_back(take_self ? p : *other);
    }
    std::sort(reps.begin(), reps.end(), [](const SpectralPoint& a, const SpectralPoint& b) {
        return std::pair(a.m, a.n) < std::pair(b.m, b.n);
    });
    return reps;
}

TrivialityCertificate triviality_certificate(const SpectralSet& set) {
    TrivialityCertificate cert;
    const std::size_t card = set.size();
    if (card != 2 && card != 4) return cert;
    cert.applicable = true;

    const auto reps = halfplane_representatives(set);
    if (card == 2) {
        // r2 = 2 a a' = 0 kills one coefficient; r1 = (|a|^2 - |a'|^2)(w + w0) = 0
        // with |w + w0| = mu > 0 then kills the other.
        cert.magnitude_system_det = std::abs(set.shifted(reps[0]));
        cert.product_system_det = 1.0;
        cert.trivial = cert.magnitude_system_det > 0.0;
        return cert;
    }
    const Cx v1 = set.shifted(reps[0]);
    const Cx v2 = set.shifted(reps[1]);
    // products (a_1 a_1', a_2 a_2') solve [[1,1],[w1,w2]] x = 0
    cert.product_system_det = std::abs(v2 * v2 - v1 * v1);
    // magnitudes solve (t1 - t1') v1 + (t2 - t2') v2 = 0 over R
    cert.magnitude_system_det = std::abs(std::imag(std::conj(v1) * v2));
    cert.trivial = cert.product_system_det > 1e-12 * std::norm(v1) &&
                   cert.magnitude_system_det > 1e-12 * std::abs(v1) * std::abs(v2);
    return cert;
}

int nontrivial_solution_space_dim(const SpectralSet& set) {
    if (set.size() <= 4) return 0;

    const auto reps = halfplane_representatives(set);
    std::array<Cx, 3> w;
    for (int i = 0; i < 3; ++i) {
        const Cx v = set.shifted(reps[i]);
        w[i] = v * v;
    }
    // dim of {v0 : v0 . (1,1,1) = 0, v0 . v2 = 0} = 3 - rank{v1, v2}
    const Cx cross_norm_sq = (w[2] - w[1]) * std::conj(w[2] - w[1]) +
                             (w[0] - w[2]) * std::conj(w[0] - w[2]) +
                             (w[1] - w[0]) * std::conj(w[1] - w[0]);
    const double scale = std::max({std::abs(w[0]), std::abs(w[1]), std::abs(w[2]), 1.0});
    const int rank = std::abs(cross_norm_sq) > 1e-20 * scale * scale ? 2 : 1;
    return 3 - rank;
}

}  // namespace dirac
