// Python face of the library. Structured results cross as JSON strings so the
// python side stays schema-identical with the CLI; the wrapper package parses
// them into dicts.

#include <braidcong/closure.hpp>
#include <braidcong/report.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;
using namespace braidcong;
using nlohmann::json;

namespace {

RepSpec make_spec(const std::vector<std::string>& eigs) {
    RepSpec spec;
    spec.dim = (int)eigs.size();
    for (const auto& e : eigs) spec.eigs.push_back(RootFraction::parse(e));
    return spec;
}

}  // namespace

PYBIND11_MODULE(_braidcong, m) {
    m.doc() = "Exact congruence tests for modular-group representations descended from braid "
              "data. Every eigenvalue and scaling is written 'k/n', meaning e^{2 pi i k/n}.";

    m.def(
        "classify_json",
        [](const std::vector<std::string>& eigs, const std::string& theta, bool all_scalings,
           long long order_cap, long long closure_cap) {
            PipelineOptions opts;
            if (!theta.empty()) opts.theta = RootFraction::parse(theta);
            opts.all_scalings = all_scalings;
            opts.order_cap = order_cap;
            if (closure_cap > 0) opts.closure_cap = closure_cap;
            json arr = json::array();
            for (const auto& r : full_pipeline(make_spec(eigs), opts))
                arr.push_back(report_json(r, false));
            return arr.dump();
        },
        py::arg("eigs"), py::arg("theta") = "", py::arg("all_scalings") = false,
        py::arg("order_cap") = 1000, py::arg("closure_cap") = 0,
        "One JSON report per scaling for the spectrum given as ['k/n', ...].");

    m.def(
        "catalog_json",
        [] {
            json arr = json::array();
            for (const auto& c : theorem_a_cases()) arr.push_back(descriptor_json(c));
            return arr.dump();
        },
        "All fixed-level catalog cases as JSON.");

    m.def(
        "hsu_words",
        [](long long N) {
            std::vector<std::pair<std::string, std::string>> out;
            for (const auto& w : hsu_generators(N).words) out.emplace_back(w.name, w.word.str());
            return out;
        },
        py::arg("N"), "Normal generating words for the level-N principal congruence subgroup.");

    m.def(
        "hsu_oracle",
        [](long long lo, long long hi) {
            for (long long N = lo; N <= hi; ++N)
                for (const auto& w : hsu_generators(N).words)
                    if (!word_is_identity_mod(w.word, N)) return false;
            return true;
        },
        py::arg("lo") = 2, py::arg("hi") = 60,
        "True when every generating word reduces to +-I mod N across the range.");

    m.def(
        "image_order",
        [](const std::vector<std::string>& eigs, const std::string& theta, long long cap) {
            BraidRep rep = tw_construct(make_spec(eigs));
            std::optional<RootFraction> th;
            if (!theta.empty()) th = RootFraction::parse(theta);
            ModularRep mod = to_modular_rep(scale_to_modular(rep, th).rep);
            ClosureResult res = enumerate_group({mod.X, mod.Y}, cap);
            return res.finite ? res.order : -1;
        },
        py::arg("eigs"), py::arg("theta") = "", py::arg("cap") = 200000,
        "Order of the rescaled image group, or -1 when the cap is hit.");
}
