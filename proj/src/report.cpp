#include <braidcong/report.hpp>

#include <sstream>

namespace braidcong {

namespace {

nlohmann::json spec_json(const RepSpec& spec) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& e : spec.eigs) a.push_back(e.str());
    return a;
}

}  // namespace

nlohmann::json matrix_json(const CycMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.dim(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

nlohmann::json report_json(const PipelineReport& r, bool include_timings) {
    nlohmann::json j;
    j["spec"] = spec_json(r.input_spec);
    j["theta"] = r.theta ? nlohmann::json(r.theta->str()) : nlohmann::json(nullptr);
    j["po"] = r.classification.po;
    j["spectrum"] = r.scaled_spec ? spec_json(*r.scaled_spec) : nlohmann::json(nullptr);
    j["glevel"] = r.glevel;

    nlohmann::json v;
    v["type"] = to_string(r.verdict.type);
    v["conditional"] = r.conditional;
    switch (r.verdict.type) {
        case VerdictType::Congruence:
            v["level"] = r.verdict.level;
            break;
        case VerdictType::NonCongruence:
            v["witness"] = {{"index", r.verdict.witness_index},
                            {"name", r.verdict.witness_name},
                            {"word", r.verdict.witness_word}};
            if (r.verdict.witness_value) v["evaluated_matrix"] = matrix_json(*r.verdict.witness_value);
            break;
        case VerdictType::NotApplicable:
            v["reason"] = r.verdict.reason;
            break;
    }
    j["verdict"] = v;

    if (r.image_order) j["image_order"] = *r.image_order;
    if (include_timings) {
        nlohmann::json t = nlohmann::json::object();
        for (const auto& [stage, ms] : r.timings_ms) t[stage] = ms;
        j["timings_ms"] = t;
    }
    return j;
}

std::string report_text(const PipelineReport& r) {
    std::ostringstream os;
    os << "spec: " << r.input_spec.str() << "\n";
    os << "irreducible: " << (r.irreducible ? "yes" : "no") << "\n";
    os << "image: " << to_string(r.classification.cls);
    if (r.classification.po > 0) os << " (projective order " << r.classification.po << ")";
    if (!r.classification.reason.empty()) os << ": " << r.classification.reason;
    os << "\n";
    if (r.theta) os << "theta: " << r.theta->str() << "\n";
    if (r.scaled_spec) os << "spectrum: " << r.scaled_spec->str() << "\n";
    if (r.glevel > 0) os << "geometric level: " << r.glevel << "\n";
    if (r.words_checked > 0) os << "words checked: " << r.words_checked << "\n";

    os << "verdict: " << to_string(r.verdict.type);
    switch (r.verdict.type) {
        case VerdictType::Congruence:
            os << ", level " << r.verdict.level;
            break;
        case VerdictType::NonCongruence:
            os << " at level " << r.glevel << "\n";
            os << "witness: " << r.verdict.witness_name << " = " << r.verdict.witness_word
               << " (word " << (r.verdict.witness_index + 1) << " of " << r.words_checked << ")";
            if (r.verdict.witness_value) os << "\nevaluated matrix:\n" << r.verdict.witness_value->str();
            break;
        case VerdictType::NotApplicable:
            os << ": " << r.verdict.reason;
            break;
    }
    if (r.conditional) os << "\nnote: image finiteness not certified; verdict is conditional";
    if (r.image_order) os << "\nimage order: " << *r.image_order;
    os << "\n";
    return os.str();
}

nlohmann::json descriptor_json(const CaseDescriptor& c) {
    nlohmann::json j;
    j["name"] = c.name;
    j["family"] = c.family_tag;
    j["dim"] = c.dim;
    j["r"] = c.r;
    j["j"] = c.j;
    if (c.dim == 3) j["k"] = c.k;
    j["lambda"] = c.lambda.str();
    j["spec"] = spec_json(c.spec);
    j["expected_level"] = c.expected_level;
    return j;
}

}  // namespace braidcong
