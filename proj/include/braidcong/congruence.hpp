#pragma once

#include <braidcong/braid.hpp>
#include <braidcong/words.hpp>

#include <map>
#include <optional>
#include <string>

namespace braidcong {

// A representation of PSL(2, Z): X, Y are the images of T, U and satisfy
// (X Y^-1 X)^2 = (Y^-1 X)^3 = I.
struct ModularRep {
    int dim = 2;
    CycMatrix X{2}, Y{2};
};

// Descend a braid representation that kills the center: X = A, Y = B^-1.
// Throws std::domain_error when the center acts nontrivially.
ModularRep to_modular_rep(const BraidRep& rep);

// Order of the image of T, i.e. the level the kernel would have if it is
// congruence. nullopt when the order exceeds the cap.
std::optional<long long> geometric_level(const ModularRep& rep, long long cap = 1000);

enum class VerdictType { Congruence, NonCongruence, NotApplicable };
std::string to_string(VerdictType v);

struct CongruenceVerdict {
    VerdictType type = VerdictType::NotApplicable;
    long long level = 0;                       // Congruence: the level of the kernel
    int witness_index = -1;                    // NonCongruence: position in the word list
    std::string witness_name;                  //   symbolic form
    std::string witness_word;                  //   expanded T/U form
    std::optional<CycMatrix> witness_value;    //   its non-identity image
    std::string reason;                        // NotApplicable: what blocked the test
};

struct CongruenceResult {
    long long glevel = 0;
    int words_checked = 0;
    CongruenceVerdict verdict;
};

// Fricke-Wohlfahrt reduction: the kernel is congruence iff it contains the
// level-glevel principal congruence subgroup, tested on its normal generating
// words. Words are checked in listing order; the first failure is the witness.
CongruenceResult congruence_test(const ModularRep& rep, long long order_cap = 1000);

// One fully-processed case: spectrum in, verdict out.
struct PipelineReport {
    RepSpec input_spec;
    bool irreducible = true;
    ClassifyResult classification;
    std::optional<RootFraction> theta;     // the scaling actually used
    std::optional<RepSpec> scaled_spec;    // spectrum after scaling
    long long glevel = 0;
    int words_checked = 0;
    CongruenceVerdict verdict;
    std::optional<long long> image_order;  // from closure, when requested
    bool conditional = false;              // verdict not backed by a finiteness certificate
    std::map<std::string, double> timings_ms;
};

struct PipelineOptions {
    std::optional<RootFraction> theta;     // explicit scaling instead of the default policy
    bool all_scalings = false;             // run every admissible theta
    long long order_cap = 1000;
    std::optional<long long> closure_cap;  // enumerate the image to certify finiteness
};

// Construct, classify, scale, descend, test. One report per scaling
// (exactly one unless all_scalings). NotApplicable verdicts carry the reason
// (reducible spectrum, infinite image, order cap).
std::vector<PipelineReport> full_pipeline(const RepSpec& spec, const PipelineOptions& opts = {});

// Same pipeline on an explicitly given representation (classification uses its
// spectrum); the construction step is skipped.
std::vector<PipelineReport> full_pipeline(const BraidRep& rep, const PipelineOptions& opts = {});

}  // namespace braidcong
