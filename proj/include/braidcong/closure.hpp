#pragma once

#include <braidcong/matrix.hpp>

#include <vector>

namespace braidcong {

struct ClosureResult {
    bool finite = false;
    long long order = 0;        // group order when finite
    long long explored = 0;     // elements discovered before stopping
    bool cap_hit = false;
    std::vector<CycMatrix> elements;  // filled only on request
};

// Breadth-first closure of the group generated by the given matrices under
// multiplication by generators and their inverses, with exact dedup on the
// power-basis coefficients. Stops once `cap` distinct elements are seen.
ClosureResult enumerate_group(const std::vector<CycMatrix>& gens, long long cap = 200000,
                              bool keep_elements = false);

}  // namespace braidcong
