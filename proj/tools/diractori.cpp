// Command-line front end: spectrum, synth, verify, classify, export.
//
// Exit codes: 0 success, 1 negative classification, 2 invalid input,
// 3 spectral set too small for a torus, 4 verification failure.

#include <CLI11.hpp>
#include <cstdlib>
#include <array>
#include <filesystem>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "dirac/classify.hpp"
#include "dirac/serialization.hpp"
#include "dirac/surface.hpp"

namespace fs = std::filesystem;
using namespace dirac;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitNoTorus = 3;
constexpr int kExitVerifyFailed = 4;

// "sqrt5", "sqrt(5)" and plain decimals; sqrt tokens stay exact.
Eigenvalue parse_mu(const std::string& text) {
    std::string s = text;
    if (s.rfind("sqrt", 0) == 0) {
        std::string arg = s.substr(4);
        if (!arg.empty() && arg.front() == '(') {
            if (arg.back() != ')') throw ParseFailure("bad mu token '" + text + "'");
            arg = arg.substr(1, arg.size() - 2);
        }
        return Eigenvalue::sqrt_of(parse_rational(arg));
    }
    try {
        std::size_t used = 0;
        const double value = std::stod(s, &used);
        if (used != s.size()) throw ParseFailure("");
        return Eigenvalue(value);
    } catch (const std::exception&) {
        throw ParseFailure("bad mu token '" + text + "' (use a decimal or sqrtN)");
    }
}

// complex literals: "1", "i", "-i", "0-0.5i", "1+2i", "-0.5i"
Cx parse_complex(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseFailure("empty complex literal");
    double re = 0.0, im = 0.0;
    std::size_t pos = 0;
    bool saw_term = false;
    while (pos < s.size()) {
        double sign = 1.0;
        if (s[pos] == '+' || s[pos] == '-') {
            if (s[pos] == '-') sign = -1.0;
            ++pos;
        }
        std::size_t used = 0;
        double value = 1.0;
        bool has_digits = pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) ||
                                             s[pos] == '.');
        if (has_digits) {
            try {
                value = std::stod(s.substr(pos), &used);
            } catch (const std::exception&) {
                throw ParseFailure("bad complex literal '" + text + "'");
            }
            pos += used;
        }
        if (pos < s.size() && s[pos] == 'i') {
            im += sign * value;
            ++pos;
        } else if (has_digits) {
            re += sign * value;
        } else {
            throw ParseFailure("bad complex literal '" + text + "'");
        }
        saw_term = true;
    }
    if (!saw_term) throw ParseFailure("bad complex literal '" + text + "'");
    return Cx(re, im);
}

std::pair<int, int> parse_spin_token(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw ParseFailure("spin must be 's1,s2'");
    auto half = [](std::string t) {
        if (t == "0") return 0;
        if (t == "1/2" || t == "0.5") return 1;
        throw ParseFailure("spin components must be 0 or 1/2, got '" + t + "'");
    };
    return {half(text.substr(0, comma)), half(text.substr(comma + 1))};
}

std::array<Coord, 3> parse_picks(const std::string& text) {
    std::array<Coord, 3> picks{};
    std::size_t start = 0;
    for (int i = 0; i < 3; ++i) {
        const std::size_t end = text.find(';', start);
        const std::string part =
            text.substr(start, end == std::string::npos ? std::string::npos : end - start);
        const auto comma = part.find(',');
        if (comma == std::string::npos)
            throw ParseFailure("picks must be 'm,n;m,n;m,n', got '" + text + "'");
        try {
            picks[i] = {std::stoi(part.substr(0, comma)), std::stoi(part.substr(comma + 1))};
        } catch (const std::exception&) {
            throw ParseFailure("bad pick coordinates in '" + text + "'");
        }
        if (end == std::string::npos) {
            if (i != 2) throw ParseFailure("picks needs three coordinate pairs");
            break;
        }
        start = end + 1;
    }
    return picks;
}

ExactComplex parse_exact_complex(const std::string& text) {
    if (text == "i") return {QuadScalar(0), QuadScalar(1)};
    if (text == "-i") return {QuadScalar(0), QuadScalar(-1)};
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        return {parse_quad_scalar(text), QuadScalar(0)};
    return {parse_quad_scalar(text.substr(0, comma)), parse_quad_scalar(text.substr(comma + 1))};
}

// Job description shared by spectrum and synth; a config file fills whatever
// the flags leave unset, never the other way around.
struct JobConfig {
    std::optional<Json> lattice_json;
    std::pair<int, int> spin{0, 0};
    bool spin_set = false;
    std::optional<std::string> mu_token;
    std::optional<std::string> picks_token;
    std::optional<std::string> seed_scale_token;
    int grid = 128;
    bool grid_set = false;
    Tolerances tol;
    std::array<bool, 5> tol_set{};
    std::string out_dir = ".";
    bool out_dir_set = false;
};

void merge_config_file(JobConfig& cfg, const std::string& path) {
    const Json j = load_json_file(path);
    if (!j.is_object()) throw ParseFailure("config: expected a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (key == "lattice") {
            if (!cfg.lattice_json) cfg.lattice_json = value;
        } else if (key == "spin") {
            if (!cfg.spin_set) {
                if (!value.is_array() || value.size() != 2)
                    throw ParseFailure("config.spin: expected [s1, s2]");
                auto half = [](const Json& v) {
                    if (v.is_number_integer() && v.get<int>() == 0) return 0;
                    if (v.is_number() && v.get<double>() == 0.5) return 1;
                    if (v.is_string()) {
                        const auto s = v.get<std::string>();
                        if (s == "0") return 0;
                        if (s == "1/2" || s == "0.5") return 1;
                    }
                    throw ParseFailure("config.spin: components must be 0 or 1/2");
                };
                cfg.spin = {half(value[0]), half(value[1])};
                cfg.spin_set = true;
            }
        } else if (key == "mu") {
            if (!cfg.mu_token)
                cfg.mu_token = value.is_string() ? value.get<std::string>()
                                                 : Json(value).dump();
        } else if (key == "picks") {
            if (!cfg.picks_token) {
                if (value.is_string()) {
                    cfg.picks_token = value.get<std::string>();
                } else if (value.is_array() && value.size() == 3) {
                    std::string token;
                    for (const auto& pair : value) {
                        if (!pair.is_array() || pair.size() != 2)
                            throw ParseFailure("config.picks: expected [[m,n],[m,n],[m,n]]");
                        if (!token.empty()) token += ";";
                        token += std::to_string(pair[0].get<int>()) + "," +
                                 std::to_string(pair[1].get<int>());
                    }
                    cfg.picks_token = token;
                } else {
                    throw ParseFailure("config.picks: expected \"auto\" or three pairs");
                }
            }
        } else if (key == "seed_scale") {
            if (!cfg.seed_scale_token) {
                if (value.is_string()) {
                    cfg.seed_scale_token = value.get<std::string>();
                } else if (value.is_array() && value.size() == 2) {
                    const double re = value[0].get<double>(), im = value[1].get<double>();
                    cfg.seed_scale_token =
                        std::to_string(re) + (im < 0 ? "" : "+") + std::to_string(im) + "i";
                } else {
                    throw ParseFailure("config.seed_scale: expected string or [re, im]");
                }
            }
        } else if (key == "grid") {
            if (!cfg.grid_set) {
                if (!value.is_number_integer()) throw ParseFailure("config.grid: integer expected");
                cfg.grid = value.get<int>();
                cfg.grid_set = true;
            }
        } else if (key == "tolerances") {
            const std::array<std::pair<const char*, double*>, 5> slots{
                {{"pde", &cfg.tol.pde},
                 {"closedness", &cfg.tol.closedness},
                 {"period", &cfg.tol.period},
                 {"conformal", &cfg.tol.conformal},
                 {"half_density", &cfg.tol.half_density}}};
            for (const auto& [tkey, tvalue] : value.items()) {
                bool known = false;
                for (std::size_t i = 0; i < slots.size(); ++i)
                    if (tkey == slots[i].first) {
                        known = true;
                        if (!cfg.tol_set[i]) *slots[i].second = tvalue.get<double>();
                    }
                if (!known) throw ParseFailure("config.tolerances: unknown key '" + tkey + "'");
            }
        } else if (key == "out_dir") {
            if (!cfg.out_dir_set) cfg.out_dir = value.get<std::string>();
        } else {
            throw ParseFailure("config: unknown key '" + key + "'");
        }
    }
}

LatticeBasis lattice_from_config(const JobConfig& cfg) {
    if (!cfg.lattice_json) throw ParseFailure("no lattice given (use --tau or --gamma1/--gamma2)");
    return lattice_from_json(*cfg.lattice_json);
}

// The published example: square conformal class 2 pi, 2 pi i, mu = sqrt(5),
// coefficient values embedded at this toolkit's (conjugate-mirrored) labels.
struct ExampleData {
    LatticeBasis lattice;
    SpinorField spinor;
};

ExampleData example_paper() {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    ExampleData data{LatticeBasis::make(Cx(two_pi, 0), Cx(0, two_pi)), {}};
    const DualBasis dual = dual_basis(data.lattice);
    data.spinor.set =
        spectral_set(dual, SpinStructure::make(0, 0), Eigenvalue::sqrt_of(Rational(5)));
    const Cx i(0.0, 1.0);
    const Cx a1 = std::sqrt(1.5) * Cx(1.0, 1.0);
    const Cx a2 = Cx(1.0, -3.0) / std::sqrt(2.0);
    const Cx a3 = Cx(2.0, 0.0);
    data.spinor.coeffs.a[{2, -1}] = a1;
    data.spinor.coeffs.a[{-2, 1}] = i * a1;
    data.spinor.coeffs.a[{2, 1}] = a2;
    data.spinor.coeffs.a[{-2, -1}] = i * a2;
    data.spinor.coeffs.a[{1, 2}] = a3;
    data.spinor.coeffs.a[{-1, -2}] = i * a3;
    data.spinor.coeffs.a[{1, -2}] = Cx(0.0, 0.0);
    data.spinor.coeffs.a[{-1, 2}] = Cx(0.0, 0.0);
    return data;
}

std::array<Coord, 3> auto_picks(const SpectralSet& set, Cx seed_scale) {
    const auto reps = halfplane_representatives(set);
    const std::size_t k = reps.size();
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            for (std::size_t l = j + 1; l < k; ++l) {
                const std::array<Coord, 3> picks{{{reps[i].m, reps[i].n},
                                                  {reps[j].m, reps[j].n},
                                                  {reps[l].m, reps[l].n}}};
                try {
                    construct_coefficients(set, picks, seed_scale);
                    return picks;
                } catch (const DegeneratePicks&) {
                    continue;
                }
            }
        }
    }
    throw DegeneratePicks("auto pick selection found no valid triple");
}

int cmd_spectrum(const JobConfig& cfg, std::optional<double> mu_max, int min_card) {
    const LatticeBasis lattice = lattice_from_config(cfg);
    const DualBasis dual = dual_basis(lattice);
    const SpinStructure spin = SpinStructure::make(cfg.spin.first, cfg.spin.second);

    Json out{{"dual",
              Json{{"omega1", Json::array({dual.omega1.real(), dual.omega1.imag()})},
                   {"omega2", Json::array({dual.omega2.real(), dual.omega2.imag()})}}}};
    if (mu_max) {
        out["spectrum"] = spectrum_rows_to_json(spectrum_search(dual, spin, *mu_max, min_card));
    } else {
        if (!cfg.mu_token) throw ParseFailure("spectrum needs --mu or --mu-max");
        const auto set = spectral_set(dual, spin, parse_mu(*cfg.mu_token));
        out.update(spectral_set_to_json(set));
    }
    std::cout << dump_json(out);
    return kExitOk;
}

int run_pipeline(const LatticeBasis& lattice, const SpinorField& spinor, const JobConfig& cfg) {
    const auto form = differential_modes(spinor);
    const auto immersion = integrate(form, false);
    const auto report = verify(immersion, spinor, cfg.grid, cfg.tol);

    fs::create_directories(cfg.out_dir);
    const fs::path dir(cfg.out_dir);
    write_json_file(immersion_to_json(immersion, spinor), (dir / "immersion.json").string());
    write_json_file(report_to_json(report), (dir / "report.json").string());
    export_mesh(immersion, cfg.grid, (dir / "torus.obj").string(), !report.passed);
    std::cout << dump_json(report_to_json(report));
    (void)lattice;
    return report.passed ? kExitOk : kExitVerifyFailed;
}

int cmd_synth(const JobConfig& cfg, bool use_example) {
    if (use_example) {
        const auto data = example_paper();
        return run_pipeline(data.lattice, data.spinor, cfg);
    }
    const LatticeBasis lattice = lattice_from_config(cfg);
    const DualBasis dual = dual_basis(lattice);
    const SpinStructure spin = SpinStructure::make(cfg.spin.first, cfg.spin.second);
    if (!cfg.mu_token) throw ParseFailure("synth needs --mu (value, sqrtN or auto-min)");

    Eigenvalue mu;
    if (*cfg.mu_token == "auto-min") {
        const double unit = std::max(std::abs(dual.omega1), std::abs(dual.omega2));
        std::optional<double> found;
        for (double cap = 2.0 * unit; cap <= 64.0 * unit && !found; cap *= 2.0)
            found = min_torus_eigenvalue(dual, spin, cap);
        if (!found) {
            std::cerr << "no eigenvalue with #Gamma' >= 6 found in the scanned range\n";
            return kExitNoTorus;
        }
        mu = Eigenvalue(*found);
        // recover exactness when the lattice supports it
        if (dual.exact_gram) {
            const auto rows = spectrum_search(dual, spin, *found * 1.000001, 6);
            if (!rows.empty() && rows.front().mu_sq) mu = Eigenvalue::sqrt_of(*rows.front().mu_sq);
        }
    } else {
        mu = parse_mu(*cfg.mu_token);
    }

    const auto set = spectral_set(dual, spin, mu);
    if (set.size() < 6) {
        std::cerr << "no closed Dirac torus at mu = " << mu.value << ": #Gamma' = " << set.size()
                  << " but the closing conditions require at least 6\n";
        return kExitNoTorus;
    }

    const Cx seed = cfg.seed_scale_token ? parse_complex(*cfg.seed_scale_token) : Cx(1.0, 0.0);
    std::array<Coord, 3> picks{};
    if (!cfg.picks_token || *cfg.picks_token == "auto")
        picks = auto_picks(set, seed);
    else
        picks = parse_picks(*cfg.picks_token);

    SpinorField spinor;
    spinor.set = set;
    spinor.coeffs = construct_coefficients(set, picks, seed);
    return run_pipeline(lattice, spinor, cfg);
}

int cmd_verify(const std::string& path, const JobConfig& cfg) {
    const auto bundle = immersion_from_json(load_json_file(path));
    const auto report = verify(bundle.immersion, bundle.spinor, cfg.grid, cfg.tol);
    std::cout << dump_json(report_to_json(report));
    return report.passed ? kExitOk : kExitVerifyFailed;
}

int cmd_export(const std::string& path, int n, const std::string& out, bool force) {
    const auto bundle = immersion_from_json(load_json_file(path));
    export_mesh(bundle.immersion, n, out, force);
    return kExitOk;
}

int cmd_classify(const std::optional<std::string>& rect_tau_sq, std::optional<std::int64_t> d,
                 const std::optional<std::string>& tau,
                 const std::optional<std::string>& omega1,
                 const std::optional<std::string>& omega2, int bound) {
    Verdict verdict;
    if (rect_tau_sq) {
        QuadScalar tau_sq = parse_quad_scalar(*rect_tau_sq);
        if (d && tau_sq.d != 1 && tau_sq.d != *d)
            throw ParseFailure("-d disagrees with the sqrt argument in --rect-tau-sq");
        verdict = classify_rectangular(tau_sq);
    } else if (tau) {
        const ExactComplex t = parse_exact_complex(*tau);
        if (t.y.sign() <= 0) throw ParseFailure("--tau must have positive imaginary part");
        // dual of 2 pi (1, tau): w1 = 1 - i tau_re / tau_im, w2 = i / tau_im
        const QuadScalar inv_im = t.y.inverse();
        const ExactLatticeBasis dual = ExactLatticeBasis::make(
            {QuadScalar(1), -(t.x * inv_im)}, {QuadScalar(0), inv_im});
        verdict = classify(dual, bound);
    } else if (omega1 && omega2) {
        const ExactLatticeBasis basis =
            ExactLatticeBasis::make(parse_exact_complex(*omega1), parse_exact_complex(*omega2));
        verdict = classify(basis, bound);
    } else {
        throw ParseFailure("classify needs --rect-tau-sq, --tau, or --omega1/--omega2");
    }
    std::cout << dump_json(verdict_to_json(verdict));
    return verdict.kind == VerdictKind::ExistsWitness ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dirac torus toolkit: spectra, closing conditions, synthesis, verification and "
                 "conformal-class classification"};
    app.require_subcommand(1);

    // shared job flags
    JobConfig cfg;
    std::string config_path;
    std::string tau_token, gamma1_token, gamma2_token, spin_token;
    std::string mu_token, picks_token, seed_token;

    auto add_lattice_flags = [&](CLI::App* cmd) {
        cmd->add_option("--tau", tau_token, "lattice 2 pi (1, tau), tau as complex literal");
        cmd->add_option("--gamma1", gamma1_token, "first generator as complex literal");
        cmd->add_option("--gamma2", gamma2_token, "second generator as complex literal");
        cmd->add_option("--spin", spin_token, "spin structure 's1,s2' with values 0 or 1/2");
        cmd->add_option("--config", config_path, "JSON config merged under explicit flags");
    };
    auto add_tolerance_flags = [&](CLI::App* cmd) {
        cmd->add_option("--tol-pde", cfg.tol.pde)->each([&](const std::string&) {
            cfg.tol_set[0] = true;
        });
        cmd->add_option("--tol-closedness", cfg.tol.closedness)->each([&](const std::string&) {
            cfg.tol_set[1] = true;
        });
        cmd->add_option("--tol-period", cfg.tol.period)->each([&](const std::string&) {
            cfg.tol_set[2] = true;
        });
        cmd->add_option("--tol-conformal", cfg.tol.conformal)->each([&](const std::string&) {
            cfg.tol_set[3] = true;
        });
        cmd->add_option("--tol-half-density", cfg.tol.half_density)->each([&](const std::string&) {
            cfg.tol_set[4] = true;
        });
    };

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "print the spectral set or a spectrum table");
    add_lattice_flags(spectrum);
    spectrum->add_option("--mu", mu_token, "eigenvalue (decimal or sqrtN)");
    std::optional<double> mu_max;
    int min_card = 6;
    spectrum->add_option("--mu-max", mu_max, "scan eigenvalues up to this bound");
    spectrum->add_option("--min-card", min_card, "minimum cardinality for the table");

    // synth
    auto* synth = app.add_subcommand("synth", "synthesize, verify and export a Dirac torus");
    add_lattice_flags(synth);
    bool use_example = false;
    synth->add_flag("--example-paper", use_example, "reproduce the published square-lattice torus");
    synth->add_option("--mu", mu_token, "eigenvalue (decimal, sqrtN, or auto-min)");
    synth->add_option("--picks", picks_token, "'m,n;m,n;m,n' spectral coordinates or 'auto'");
    synth->add_option("--seed-scale", seed_token, "complex scale for the coefficient recipe");
    int grid_flag = 0;
    synth->add_option("--grid", grid_flag, "verification and mesh resolution (default 128)");
    std::string out_dir_flag;
    synth->add_option("--out-dir", out_dir_flag, "output directory (default .)");
    add_tolerance_flags(synth);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "verify an immersion JSON file");
    std::string immersion_path;
    verify_cmd->add_option("immersion", immersion_path, "immersion JSON path")->required();
    verify_cmd->add_option("--grid", grid_flag, "grid resolution (default 128)");
    verify_cmd->add_option("--config", config_path, "JSON config merged under explicit flags");
    add_tolerance_flags(verify_cmd);

    // export
    auto* export_cmd = app.add_subcommand("export", "export an immersion JSON to OBJ");
    std::string export_out = "torus.obj";
    int export_n = 128;
    bool export_force = false;
    export_cmd->add_option("immersion", immersion_path, "immersion JSON path")->required();
    export_cmd->add_option("--n", export_n, "mesh resolution");
    export_cmd->add_option("--out", export_out, "output OBJ path");
    export_cmd->add_flag("--force", export_force, "write even if the surface is degenerate");

    // classify
    auto* classify_cmd =
        app.add_subcommand("classify", "decide Dirac torus existence for a conformal class");
    std::optional<std::string> rect_tau_sq, tau_exact, omega1_text, omega2_text;
    std::optional<std::int64_t> field_d;
    int bound = 8;
    classify_cmd->add_option("--rect-tau-sq", rect_tau_sq,
                             "tau^2 of a rectangular lattice, e.g. '2' or 'sqrt(2)'");
    classify_cmd->add_option("-d,--field", field_d, "quadratic field discriminant");
    classify_cmd->add_option("--tau", tau_exact, "exact tau: 'i' or 're,im' quad scalars");
    classify_cmd->add_option("--omega1", omega1_text, "exact dual generator 're,im'");
    classify_cmd->add_option("--omega2", omega2_text, "exact dual generator 're,im'");
    classify_cmd->add_option("--bound", bound, "coefficient search bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return kExitInvalid;
    }

    try {
        // assemble the job config: flags first, then the config file underneath
        if (!tau_token.empty()) cfg.lattice_json = Json{{"tau", {parse_complex(tau_token).real(),
                                                                 parse_complex(tau_token).imag()}}};
        if (!gamma1_token.empty() || !gamma2_token.empty()) {
            if (cfg.lattice_json) throw ParseFailure("give either --tau or --gamma1/--gamma2");
            if (gamma1_token.empty() || gamma2_token.empty())
                throw ParseFailure("--gamma1 and --gamma2 must be given together");
            const Cx g1 = parse_complex(gamma1_token), g2 = parse_complex(gamma2_token);
            cfg.lattice_json = Json{{"gamma1", {g1.real(), g1.imag()}},
                                    {"gamma2", {g2.real(), g2.imag()}}};
        }
        if (!spin_token.empty()) {
            cfg.spin = parse_spin_token(spin_token);
            cfg.spin_set = true;
        }
        if (!mu_token.empty()) cfg.mu_token = mu_token;
        if (!picks_token.empty()) cfg.picks_token = picks_token;
        if (!seed_token.empty()) cfg.seed_scale_token = seed_token;
        if (grid_flag > 0) {
            cfg.grid = grid_flag;
            cfg.grid_set = true;
        }
        if (!out_dir_flag.empty()) {
            cfg.out_dir = out_dir_flag;
            cfg.out_dir_set = true;
        }
        if (!config_path.empty()) merge_config_file(cfg, config_path);
        // the only environment knob: output directory, under flag and config
        if (!cfg.out_dir_set) {
            if (const char* env_dir = std::getenv("DIRACTORI_OUT_DIR"); env_dir && *env_dir)
                cfg.out_dir = env_dir;
        }
        if (cfg.grid < 3) throw ParseFailure("grid resolution must be at least 3");

        if (spectrum->parsed()) return cmd_spectrum(cfg, mu_max, min_card);
        if (synth->parsed()) return cmd_synth(cfg, use_example);
        if (verify_cmd->parsed()) return cmd_verify(immersion_path, cfg);
        if (export_cmd->parsed()) return cmd_export(immersion_path, export_n, export_out,
                                                    export_force);
        if (classify_cmd->parsed())
            return cmd_classify(rect_tau_sq, field_d, tau_exact, omega1_text, omega2_text, bound);
    } catch (const NotClosedForm& e) {
        std::cerr << e.what() << "\n";
        return kExitVerifyFailed;
    } catch (const NonPeriodic& e) {
        std::cerr << e.what() << "\n";
        return kExitVerifyFailed;
    } catch (const DegenerateSurface& e) {
        std::cerr << e.what() << "\n";
        return kExitVerifyFailed;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
