#include "dirac/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace dirac {

Eigenvalue Eigenvalue::sqrt_of(const Rational& mu_sq) {
    if (mu_sq < 0) throw PreconditionViolated("eigenvalue squared must be nonnegative");
    Eigenvalue e;
    e.value = std::sqrt(to_double(mu_sq));
    e.sq = mu_sq;
    return e;
}

const SpectralPoint* SpectralSet::find(int m, int n) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), std::pair(m, n),
                               [](const SpectralPoint& p, const std::pair<int, int>& key) {
                                   return std::pair(p.m, p.n) < key;
                               });
    if (it != elements.end() && it->m == m && it->n == n) return &*it;
    return nullptr;
}

SpectralSet spectral_set(const DualBasis& dual, const SpinStructure& spin, const Eigenvalue& mu,
                         double rel_tol) {
    if (mu.value <= 0.0) throw PreconditionViolated("spectral_set: mu must be positive");
    if (rel_tol < 0.0) throw PreconditionViolated("spectral_set: negative tolerance");

    SpectralSet set{dual, spin, mu.value, std::nullopt, spin.omega0(dual), {}};
    const bool exact = mu.sq.has_value() && dual.exact_gram.has_value();
    if (exact) set.mu_sq_exact = mu.sq;

    const double mu_sq = exact ? to_double(*mu.sq) : mu.value * mu.value;
    const auto candidates = enumerate_disk(dual, -set.omega0, mu.value * (1.0 + 2.0 * rel_tol));

    std::set<std::pair<int, int>> keep;
    for (const auto& p : candidates) {
        bool on_circle = false;
        if (exact) {
            on_circle = (*dual.exact_norm_sq(p.m, p.n, spin.s1, spin.s2) == *mu.sq);
        } else {
            const double nsq = std::norm(p.value + set.omega0);
            on_circle = std::abs(nsq - mu_sq) <= rel_tol * mu_sq;
        }
        if (on_circle) keep.insert({p.m, p.n});
    }
    // Enforce involution closure; float rounding must not leave a partner out.
    for (auto [m, n] : std::set<std::pair<int, int>>(keep))
        keep.insert(set.involution_coords(m, n));

    for (auto [m, n] : keep) set.elements.push_back({m, n, dual.value(m, n)});
    return set;
}

SpectralPoint involution(const SpectralSet& set, const SpectralPoint& p) {
    if (!set.contains(p.m, p.n))
        throw NotInSet("involution: (" + std::to_string(p.m) + "," + std::to_string(p.n) +
                       ") is not in the spectral set");
    const auto [m, n] = set.involution_coords(p.m, p.n);
    const SpectralPoint* partner = set.find(m, n);
    if (!partner) throw NotInSet("involution: partner missing, spectral set not closed");
    return *partner;
}

std::vector<SpectrumRow> spectrum_search(const DualBasis& dual, const SpinStructure& spin,
                                         double mu_max, int min_card) {
    if (mu_max <= 0.0) throw PreconditionViolated("spectrum_search: mu_max must be positive");
    if (min_card < 2) throw PreconditionViolated("spectrum_search: min_card must be >= 2");

    const Cx omega0 = spin.omega0(dual);
    const auto candidates = enumerate_disk(dual, -omega0, mu_max);

    std::vector<SpectrumRow> rows;
    if (dual.exact_gram) {
        std::map<Rational, int> groups;
        for (const auto& p : candidates) {
            const Rational nsq = *dual.exact_norm_sq(p.m, p.n, spin.s1, spin.s2);
            if (nsq > 0) ++groups[nsq];
        }
        for (const auto& [nsq, count] : groups) {
            const double mu = std::sqrt(to_double(nsq));
            if (count >= min_card && mu <= mu_max * (1.0 + 1e-12))
                rows.push_back({mu, nsq, count});
        }
    } else {
        std::vector<double> norms;
        for (const auto& p : candidates) {
            const double nsq = std::norm(p.value + omega0);
            if (nsq > 0.0) norms.push_back(nsq);
        }
        std::sort(norms.begin(), norms.end());
        std::size_t i = 0;
        while (i < norms.size()) {
            std::size_t j = i + 1;
            while (j < norms.size() && norms[j] - norms[i] <= 1e-9 * norms[i]) ++j;
            const double nsq = norms[i];
            const double mu = std::sqrt(nsq);
            if (static_cast<int>(j - i) >= min_card && mu <= mu_max * (1.0 + 1e-12))
                rows.push_back({mu, std::nullopt, static_cast<int>(j - i)});
            i = j;
        }
    }
    return rows;
}

}  // namespace dirac
