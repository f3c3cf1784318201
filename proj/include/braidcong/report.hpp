#pragma once

#include <braidcong/catalog.hpp>
#include <braidcong/congruence.hpp>

#include <json.hpp>

#include <string>

namespace braidcong {

// Report schema: {spec, theta, po, spectrum, glevel, verdict: {type, level?,
// witness?, evaluated_matrix?, reason?}, conditional, image_order?, timings_ms?}.
// Matrices render entrywise in the cyclotomic text form; eigenvalues as "k/n".
// Timings are emitted only on request so verification output stays
// byte-stable across runs.
nlohmann::json report_json(const PipelineReport& r, bool include_timings);

std::string report_text(const PipelineReport& r);

nlohmann::json descriptor_json(const CaseDescriptor& c);

nlohmann::json matrix_json(const CycMatrix& m);

}  // namespace braidcong
