#ifndef STRATA_JSON_IO_HPP
#define STRATA_JSON_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "strata/morse.hpp"
#include "strata/spectral.hpp"

namespace strata {

using nlohmann::json;

json to_json(const GradedPoly& p);
GradedPoly poly_from_json(const json& j);

json to_json(const Subspace& w);
Subspace subspace_from_json(const json& j);

json to_json(const SpaceExpr& s);
inline json to_json(const SpacePtr& s) { return to_json(*s); }
SpacePtr space_from_json(const json& j);

json to_json(const MorseProblem& p);
MorseProblem morse_from_json(const json& j);

json to_json(const SpectralModel& m);
SpectralModel spectral_from_json(const json& j);

enum class OutputFormat { Text, Json, Csv };
OutputFormat format_from_string(const std::string& s);
std::string to_string(OutputFormat f);

/// One problem per file: exactly one of a cohomology query (a space), a Morse
/// problem, or a spectral model, plus output options. Unknown fields anywhere
/// in the file are rejected.
struct ProblemFile {
    int version = 1;
    SpacePtr cohomology;
    std::optional<MorseProblem> morse;
    std::optional<SpectralModel> spectral;
    OutputFormat format = OutputFormat::Text;
    int verbosity = 1;
};

json to_json(const ProblemFile& f);
ProblemFile problem_from_json(const json& j);
ProblemFile load_problem_file(const std::string& path);

}  // namespace strata

#endif
