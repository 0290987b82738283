#include "dirac/spinor.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace dirac {

namespace {

const Cx kI(0.0, 1.0);

Cx phase(Cx v, Cx z) { return std::polar(1.0, pairing(v, z)); }

struct ActiveMode {
    Coord coord;
    Cx a;
    Cx v;  // omega + omega0
};

std::vector<ActiveMode> active_modes(const SpinorField& s) {
    std::vector<ActiveMode> out;
    for (const auto& [coord, a] : s.coeffs.a) {
        if (a == Cx(0.0, 0.0)) continue;
        const SpectralPoint* p = s.set.find(coord.first, coord.second);
        if (!p)
            throw KeyOutsideSpectralSet("spinor coefficient at (" + std::to_string(coord.first) +
                                        "," + std::to_string(coord.second) +
                                        ") lies outside the spectral set");
        out.push_back({coord, a, s.set.shifted(*p)});
    }
    return out;
}

}  // namespace

Cx SpinorField::lambda2_coefficient(Coord c) const {
    const SpectralPoint* p = set.find(c.first, c.second);
    if (!p) throw KeyOutsideSpectralSet("lambda2_coefficient: coordinate not in spectral set");
    return -coeffs.get(c) * set.shifted(*p) / set.mu;
}

std::pair<Cx, Cx> eval_spinor(const SpinorField& s, Cx z) {
    Cx l1(0.0, 0.0), l2(0.0, 0.0);
    for (const auto& m : active_modes(s)) {
        const Cx e = phase(m.v, z);
        l1 += m.a * e;
        l2 += -(m.a * m.v / s.mu()) * e;
    }
    return {l1, l2};
}

double pde_residual(const SpinorField& s, Cx z) {
    const double mu = s.mu();
    Cx first(0.0, 0.0), second(0.0, 0.0);
    for (const auto& m : active_modes(s)) {
        const Cx e = phase(m.v, z);
        const Cx l1_mode = m.a * e;
        const Cx l2_mode = -(m.a * m.v / mu) * e;
        // dbar multiplies a mode by i v / 2, d by i conj(v) / 2
        first += 2.0 * kI * (kI * m.v / 2.0) * l1_mode - mu * l2_mode;
        second += 2.0 * kI * (kI * std::conj(m.v) / 2.0) * l2_mode - mu * l1_mode;
    }
    return std::abs(first) + std::abs(second);
}

FourierForm differential_modes(const SpinorField& s) {
    FourierForm form{s.set.dual, s.mu(), {}};
    const auto modes = active_modes(s);
    const double mu = s.mu();
    const int s1 = s.set.spin.s1, s2 = s.set.spin.s2;

    for (const auto& alpha : modes) {
        for (const auto& beta : modes) {
            // lambda1^2 and lambda2^2 contribute at w_a + w_b + 2 w0
            const Coord sum{alpha.coord.first + beta.coord.first + s1,
                            alpha.coord.second + beta.coord.second + s2};
            QuatMode& ms = form.modes[sum];
            ms.R += alpha.a * beta.a;
            ms.S += alpha.a * beta.a * alpha.v * beta.v / (mu * mu);

            // lambda1 conj(lambda2) contributes at w_a - w_b (conjugated factors
            // carry negated frequencies and conjugated coefficients)
            const Coord diff{alpha.coord.first - beta.coord.first,
                             alpha.coord.second - beta.coord.second};
            form.modes[diff].P += -(alpha.a * std::conj(beta.a * beta.v)) / mu;

            // -conj(lambda1) lambda2 contributes at w_b - w_a
            const Coord anti{beta.coord.first - alpha.coord.first,
                             beta.coord.second - alpha.coord.second};
            form.modes[anti].Q += std::conj(alpha.a) * beta.a * beta.v / mu;
        }
    }
    return form;
}

double check_closedness(const FourierForm& form) {
    double worst = 0.0;
    for (const auto& [coord, m] : form.modes) {
        const Cx v = form.freq(coord);
        const double defect =
            std::abs(m.P * v - m.Q * std::conj(v)) + std::abs(m.R * v - m.S * std::conj(v));
        worst = std::max(worst, defect);
    }
    return worst;
}

SurfaceImmersion integrate(const FourierForm& form, bool allow_linear) {
    const double defect = check_closedness(form);
    if (defect > 1e-9)
        throw NotClosedForm("integrate: form is not closed (defect " + std::to_string(defect) +
                            "); the primitive would be path dependent");

    SurfaceImmersion f{primal_basis(form.dual), form.dual, form.mu, {}, {}, {}, {}};
    Quat mode_sum;
    for (const auto& [coord, m] : form.modes) {
        if (coord == Coord{0, 0}) {
            const Quat a0(m.P, m.R);  // dz coefficient
            const Quat b0(m.Q, m.S);  // dz~ coefficient
            if (a0.norm() > 1e-10 || b0.norm() > 1e-10) {
                if (!allow_linear)
                    throw NonPeriodic("integrate: nonzero zero-frequency mode, surface does not "
                                      "close to a torus");
                f.linear_x = a0 + b0;
                f.linear_y = (a0 - b0).right_mul(kI);
            }
            continue;
        }
        const Cx v = form.freq(coord);
        const Quat c = Quat(m.P, m.R).right_mul(2.0 / (kI * std::conj(v)));
        f.modes[coord] = c;
        mode_sum = mode_sum + c;
    }
    f.constant = -mode_sum;  // f(0) = 0, so Re of the 1-part stays 0 everywhere
    return f;
}

FourierForm differentiate(const SurfaceImmersion& f) {
    FourierForm form{f.dual, f.mu, {}};
    for (const auto& [coord, c] : f.modes) {
        const Cx v = form.freq(coord);
        QuatMode m;
        const Quat dz = c.right_mul(kI * std::conj(v) / 2.0);
        const Quat dzbar = c.right_mul(kI * v / 2.0);
        m.P = dz.p;
        m.R = dz.q;
        m.Q = dzbar.p;
        m.S = dzbar.q;
        form.modes[coord] = m;
    }
    if (f.has_linear_part(0.0)) {
        const Quat a0 = (f.linear_x + f.linear_y.right_mul(-kI)) * 0.5;
        const Quat b0 = (f.linear_x - f.linear_y.right_mul(-kI)) * 0.5;
        QuatMode m;
        m.P = a0.p;
        m.R = a0.q;
        m.Q = b0.p;
        m.S = b0.q;
        form.modes[{0, 0}] = m;
    }
    return form;
}

Quat eval_immersion(const SurfaceImmersion& f, Cx z) {
    Quat value = f.constant + f.linear_x * z.real() + f.linear_y * z.imag();
    for (const auto& [coord, c] : f.modes)
        value = value + c.right_mul(phase(f.dual.value(coord.first, coord.second), z));
    return value;
}

std::pair<Quat, Quat> eval_form(const FourierForm& form, Cx z) {
    Quat dz, dzbar;
    for (const auto& [coord, m] : form.modes) {
        const Cx e = phase(form.freq(coord), z);
        dz = dz + Quat(m.P, m.R).right_mul(e);
        dzbar = dzbar + Quat(m.Q, m.S).right_mul(e);
    }
    return {dz, dzbar};
}

std::pair<Quat, Quat> eval_spinor_df(const SpinorField& s, Cx z) {
    const auto [l1, l2] = eval_spinor(s, z);
    // df = (j l1^2 + l1 conj(l2)) dz + (j l2^2 - conj(l1) l2) dz~
    const Quat dz(l1 * std::conj(l2), l1 * l1);
    const Quat dzbar(-std::conj(l1) * l2, l2 * l2);
    return {dz, dzbar};
}

}  // namespace dirac
