#include "dirac/serialization.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <numbers>

namespace dirac {

namespace {

Json cx_to_json(Cx z) { return Json::array({z.real(), z.imag()}); }

Cx cx_from_json(const Json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseFailure(what + ": expected [re, im]");
    return Cx(j[0].get<double>(), j[1].get<double>());
}

Json quat_to_json(const Quat& q) {
    return Json::array({q.p.real(), q.p.imag(), q.q.real(), q.q.imag()});
}

Quat quat_from_json(const Json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 4)
        throw ParseFailure(what + ": expected [p_re, p_im, q_re, q_im]");
    return Quat(Cx(j[0].get<double>(), j[1].get<double>()),
                Cx(j[2].get<double>(), j[3].get<double>()));
}

Coord coord_from_json(const Json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw ParseFailure(what + ": expected integer [m, n]");
    return {j[0].get<int>(), j[1].get<int>()};
}

void reject_unknown_keys(const Json& j, std::initializer_list<const char*> allowed,
                         const std::string& what) {
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const char* k : allowed)
            if (key == k) ok = true;
        if (!ok) throw ParseFailure(what + ": unknown key '" + key + "'");
    }
}

std::string exact_complex_str(const ExactComplex& v) { return v.str(); }

}  // namespace

LatticeBasis lattice_from_json(const Json& j) {
    if (!j.is_object()) throw ParseFailure("lattice: expected an object");
    reject_unknown_keys(j, {"gamma1", "gamma2", "tau"}, "lattice");
    constexpr double two_pi = 2.0 * std::numbers::pi;
    if (j.contains("tau")) {
        if (j.contains("gamma1") || j.contains("gamma2"))
            throw ParseFailure("lattice: give either tau or gamma1/gamma2, not both");
        const Cx tau = cx_from_json(j.at("tau"), "lattice.tau");
        return LatticeBasis::make(Cx(two_pi, 0.0), two_pi * tau);
    }
    if (!j.contains("gamma1") || !j.contains("gamma2"))
        throw ParseFailure("lattice: gamma1 and gamma2 are required");
    return LatticeBasis::make(cx_from_json(j.at("gamma1"), "lattice.gamma1"),
                              cx_from_json(j.at("gamma2"), "lattice.gamma2"));
}

Json lattice_to_json(const LatticeBasis& basis) {
    return Json{{"gamma1", cx_to_json(basis.gamma1)}, {"gamma2", cx_to_json(basis.gamma2)}};
}

Json spectral_set_to_json(const SpectralSet& set) {
    Json elements = Json::array();
    for (const auto& p : set.elements)
        elements.push_back(Json{{"coords", Json::array({p.m, p.n})}, {"value", cx_to_json(p.value)}});
    Json j{{"mu", set.mu}, {"omega0", cx_to_json(set.omega0)}, {"elements", std::move(elements)}};
    if (set.mu_sq_exact)
        j["mu_sq"] = Json::array({rational_str(numerator(*set.mu_sq_exact)),
                                  rational_str(denominator(*set.mu_sq_exact))});
    return j;
}

Json coefficients_to_json(const CoefficientVector& coeffs) {
    Json list = Json::array();
    for (const auto& [coord, a] : coeffs.a)
        list.push_back(
            Json{{"coords", Json::array({coord.first, coord.second})}, {"a", cx_to_json(a)}});
    return list;
}

CoefficientVector coefficients_from_json(const Json& j) {
    if (!j.is_array()) throw ParseFailure("coefficients: expected a list");
    CoefficientVector coeffs;
    for (const auto& item : j) {
        reject_unknown_keys(item, {"coords", "a"}, "coefficients");
        coeffs.a[coord_from_json(item.at("coords"), "coefficients.coords")] =
            cx_from_json(item.at("a"), "coefficients.a");
    }
    return coeffs;
}

Json spectrum_rows_to_json(const std::vector<SpectrumRow>& rows) {
    Json list = Json::array();
    for (const auto& row : rows) {
        Json item{{"mu", row.mu}, {"cardinality", row.cardinality}};
        if (row.mu_sq)
            item["mu_sq"] = Json::array(
                {rational_str(numerator(*row.mu_sq)), rational_str(denominator(*row.mu_sq))});
        list.push_back(std::move(item));
    }
    return list;
}

Json immersion_to_json(const SurfaceImmersion& f, const SpinorField& spinor) {
    Json modes = Json::array();
    for (const auto& [coord, c] : f.modes)
        modes.push_back(Json{{"nu_coords", Json::array({coord.first, coord.second})},
                             {"nu", cx_to_json(f.dual.value(coord.first, coord.second))},
                             {"C", quat_to_json(c)}});
    Json elements = Json::array();
    for (const auto& p : spinor.set.elements)
        elements.push_back(Json{{"coords", Json::array({p.m, p.n})}, {"value", cx_to_json(p.value)}});
    return Json{{"format", "dirac-tori/immersion/1"},
                {"lattice", lattice_to_json(f.lattice)},
                {"spin", Json::array({spinor.set.spin.s1, spinor.set.spin.s2})},
                {"mu", f.mu},
                {"constant", quat_to_json(f.constant)},
                {"linear_x", quat_to_json(f.linear_x)},
                {"linear_y", quat_to_json(f.linear_y)},
                {"modes", std::move(modes)},
                {"spinor", Json{{"elements", std::move(elements)},
                                {"coeffs", coefficients_to_json(spinor.coeffs)}}}};
}

namespace {

ImmersionBundle immersion_from_json_impl(const Json& j) {
    if (!j.is_object()) throw ParseFailure("immersion: expected an object");
    reject_unknown_keys(j,
                        {"format", "lattice", "spin", "mu", "constant", "linear_x", "linear_y",
                         "modes", "spinor"},
                        "immersion");
    ImmersionBundle bundle;
    const LatticeBasis lattice = lattice_from_json(j.at("lattice"));
    const DualBasis dual = dual_basis(lattice);
    const double mu = j.at("mu").get<double>();
    if (!(mu > 0.0)) throw ParseFailure("immersion: mu must be positive");

    const auto& spin_json = j.at("spin");
    const SpinStructure spin =
        SpinStructure::make(spin_json.at(0).get<int>(), spin_json.at(1).get<int>());

    bundle.immersion.lattice = lattice;
    bundle.immersion.dual = dual;
    bundle.immersion.mu = mu;
    bundle.immersion.constant = quat_from_json(j.at("constant"), "immersion.constant");
    bundle.immersion.linear_x = quat_from_json(j.at("linear_x"), "immersion.linear_x");
    bundle.immersion.linear_y = quat_from_json(j.at("linear_y"), "immersion.linear_y");
    for (const auto& item : j.at("modes")) {
        reject_unknown_keys(item, {"nu_coords", "nu", "C"}, "immersion.modes");
        const Coord coord = coord_from_json(item.at("nu_coords"), "immersion.modes.nu_coords");
        bundle.immersion.modes[coord] = quat_from_json(item.at("C"), "immersion.modes.C");
    }

    const auto& spinor_json = j.at("spinor");
    reject_unknown_keys(spinor_json, {"elements", "coeffs"}, "immersion.spinor");
    SpectralSet set{dual, spin, mu, std::nullopt, spin.omega0(dual), {}};
    for (const auto& item : spinor_json.at("elements")) {
        reject_unknown_keys(item, {"coords", "value"}, "immersion.spinor.elements");
        const Coord coord = coord_from_json(item.at("coords"), "spinor.elements.coords");
        set.elements.push_back({coord.first, coord.second, dual.value(coord.first, coord.second)});
    }
    std::sort(set.elements.begin(), set.elements.end(),
              [](const SpectralPoint& a, const SpectralPoint& b) {
                  return std::pair(a.m, a.n) < std::pair(b.m, b.n);
              });
    bundle.spinor.set = std::move(set);
    bundle.spinor.coeffs = coefficients_from_json(spinor_json.at("coeffs"));
    return bundle;
}

}  // namespace

ImmersionBundle immersion_from_json(const Json& j) {
    try {
        return immersion_from_json_impl(j);
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseFailure(std::string("immersion: ") + e.what());
    }
}

Json report_to_json(const VerificationReport& report) {
    Json degenerate = Json::array();
    for (Cx z : report.degenerate_points) degenerate.push_back(cx_to_json(z));
    return Json{{"grid_n", report.grid_n},
                {"tolerances",
                 Json{{"pde", report.tol.pde},
                      {"closedness", report.tol.closedness},
                      {"period", report.tol.period},
                      {"conformal", report.tol.conformal},
                      {"half_density", report.tol.half_density}}},
                {"max_pde_residual", report.max_pde_residual},
                {"max_closedness_residual", report.max_closedness_residual},
                {"max_period_defect", report.max_period_defect},
                {"max_conformal_defect", report.max_conformal_defect},
                {"max_half_density_error", report.max_half_density_error},
                {"half_density_mean", report.half_density_mean},
                {"half_density_spread", report.half_density_spread},
                {"willmore_numeric", report.willmore_numeric},
                {"willmore_mu2_vol", report.willmore_mu2_vol},
                {"willmore_mu_vol", report.willmore_mu_vol},
                {"willmore_note", report.willmore_note},
                {"degenerate_points", std::move(degenerate)},
                {"passed", report.passed}};
}

Json verdict_to_json(const Verdict& verdict) {
    const char* kind = nullptr;
    switch (verdict.kind) {
        case VerdictKind::ExistsWitness: kind = "exists_witness"; break;
        case VerdictKind::NotFoundUpToBound: kind = "not_found_up_to_bound"; break;
        case VerdictKind::NoRectangularCase: kind = "no_rectangular_case"; break;
    }
    Json j{{"kind", kind}, {"search_bound", verdict.search_bound}};
    if (verdict.witness) {
        j["witness"] = Json{{"omega1", exact_complex_str(verdict.witness->omega1)},
                            {"omega2", exact_complex_str(verdict.witness->omega2)},
                            {"b", rational_str(verdict.witness->b)}};
    }
    if (!verdict.six_vectors.empty()) {
        Json list = Json::array();
        for (const auto& v : verdict.six_vectors) list.push_back(exact_complex_str(v));
        j["six_vectors"] = std::move(list);
    }
    return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IOFailure("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseFailure("bad JSON in '" + path + "': " + e.what());
    }
    return j;
}

void write_json_file(const Json& j, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IOFailure("cannot open '" + path + "' for writing");
    out << dump_json(j);
    if (!out.good()) throw IOFailure("write to '" + path + "' failed");
}

}  // namespace dirac
