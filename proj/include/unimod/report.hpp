#ifndef UNIMOD_REPORT_HPP
#define UNIMOD_REPORT_HPP

#include <string>

#include "json.hpp"
#include "unimod/arlab.hpp"
#include "unimod/circlemaps.hpp"
#include "unimod/curvelab.hpp"
#include "unimod/error.hpp"
#include "unimod/levelsolver.hpp"

namespace unimod {

/// Version of the report layout described by reports.schema.json.
inline constexpr int kReportSchemaVersion = 1;

/// {re, im, radius} with double centers whose radius still encloses the
/// ball, plus `precise` decimal centers with their own enclosing radius.
nlohmann::json ball_json(const ComplexBall& b);

nlohmann::json to_json(const SolutionReport& r);
nlohmann::json to_json(const CurveReport& r);
nlohmann::json to_json(const ARReport& r);
nlohmann::json to_json(const DependenceCertificate& c);
nlohmann::json to_json(const BlaschkeForm& f);
nlohmann::json to_json(const DegeneracyWitness& w);
nlohmann::json to_json(const RealityResult& r);
nlohmann::json error_json(ErrorKind kind, const std::string& message);

const char* to_string(SolveStatus s);
const char* to_string(CurveVerdict v);
const char* to_string(DependenceKind k);

}  // namespace unimod

#endif  // UNIMOD_REPORT_HPP
