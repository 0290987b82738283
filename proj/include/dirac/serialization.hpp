#ifndef DIRAC_SERIALIZATION_HPP
#define DIRAC_SERIALIZATION_HPP

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "dirac/classify.hpp"
#include "dirac/surface.hpp"

namespace dirac {

using Json = nlohmann::json;

// Lattice input format shared with the CLI:
//   {"gamma1": [re, im], "gamma2": [re, im]}  or  {"tau": [re, im]}
// where the shorthand means Gamma = 2 pi (1, tau).  Unknown keys are rejected.
LatticeBasis lattice_from_json(const Json& j);
Json lattice_to_json(const LatticeBasis& basis);

Json spectral_set_to_json(const SpectralSet& set);

Json coefficients_to_json(const CoefficientVector& coeffs);
CoefficientVector coefficients_from_json(const Json& j);

Json spectrum_rows_to_json(const std::vector<SpectrumRow>& rows);

Json immersion_to_json(const SurfaceImmersion& f, const SpinorField& spinor);

struct ImmersionBundle {
    SurfaceImmersion immersion;
    SpinorField spinor;
};
ImmersionBundle immersion_from_json(const Json& j);

Json report_to_json(const VerificationReport& report);

Json verdict_to_json(const Verdict& verdict);

std::string dump_json(const Json& j);
Json load_json_file(const std::string& path);
void write_json_file(const Json& j, const std::string& path);

}  // namespace dirac

#endif
