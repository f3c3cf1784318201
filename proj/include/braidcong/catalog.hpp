#pragma once

#include <braidcong/braid.hpp>
#include <braidcong/congruence.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace braidcong {

// One entry of the two- and three-dimensional case tables: a projective order
// r, unit residues j (and k in dimension three), and one of the six lambdas
// solving the family's sixth-power equation. The spectrum already kills the
// center, so these descend to the modular group unscaled.
struct CaseDescriptor {
    std::string name;        // "A2:r4j1:λ=7/24", "A3:r5j1k2:λ=2/15"
    std::string family_tag;  // "A2:r4j1", "A3:r5j1k2"
    int dim = 2;
    long long r = 2;
    long long j = 1;
    long long k = 0;         // 0 in dimension two
    RootFraction lambda;
    RepSpec spec;
    long long expected_level = 0;  // order of the image of T, from the case tables
};

// All 54 two-dimensional descriptors (r=2: 6, r=3: 12, r=4: 12, r=5: 24)
// followed by all 48 three-dimensional ones (one {j,k} pair for r=3 and r=4,
// six unordered pairs for r=5), in a fixed deterministic order.
std::vector<CaseDescriptor> theorem_a_cases();
std::vector<CaseDescriptor> theorem_a_dim2_cases();
std::vector<CaseDescriptor> theorem_a_dim3_cases();

// The two-parameter family with noncongruence kernels: spectrum
// (q, -q, +-q^{-2}) with q = e^{2 pi i/(3 ell)}, for odd ell >= 3.
struct NCFamily {
    std::string name;  // "B:ell3+"
    long long ell = 3;
    int sign = +1;
    RepSpec spec;
    BraidRep rep;
};

NCFamily noncongruence_family(long long ell, int sign);

// The source table's printed matrix pair (X, Y) for the family, where X, Y
// are the images of T and U of the descended representation. The plus pair
// agrees with the construction from eigenvalue data; the printed minus pair
// is inconsistent (it violates the braid relation) and is kept only so tests
// can flag the discrepancy.
std::pair<CycMatrix, CycMatrix> noncongruence_printed(long long ell, int sign);

// Quantum-representation examples: three diagonal two-dimensional specs and
// one explicit three-dimensional matrix pair.
struct MtcExample {
    std::string name;  // "MTC:C", "MTC:D", "MTC:sigma", "MTC:G"
    std::optional<RepSpec> spec;        // C, D, sigma: eigenvalues of the first generator
    std::optional<BraidRep> rep;        // G: both generator images, explicitly
    std::optional<RootFraction> theta;  // G: the scaling used in the source analysis
    long long po = 0;
    VerdictType expected_verdict = VerdictType::Congruence;
    std::optional<long long> expected_level;  // derived for C, D, sigma
};

std::vector<MtcExample> mtc_examples();

}  // namespace braidcong
