#include <braidcong/closure.hpp>

#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace braidcong {

namespace {

// Entries all share one conductor, so coefficient text is a canonical key.
std::string matrix_key(const CycMatrix& m) {
    std::ostringstream os;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            for (const Rational& c : m.at(i, j).coeffs()) os << c.get_str() << ",";
    return os.str();
}

}  // namespace

ClosureResult enumerate_group(const std::vector<CycMatrix>& gens, long long cap,
                              bool keep_elements) {
    if (gens.empty()) throw std::invalid_argument("enumerate_group: no generators");
    int dim = gens[0].dim();
    long long conductor = 1;
    for (const CycMatrix& g : gens) {
        if (g.dim() != dim) throw std::invalid_argument("enumerate_group: mixed dimensions");
        conductor = lcm_ll(conductor, g.common_conductor());
    }
    std::vector<CycMatrix> steps;
    for (const CycMatrix& g : gens) {
        CycMatrix p = g.promote(static_cast<int>(conductor));
        steps.push_back(p);
        steps.push_back(p.inverse());
    }

    ClosureResult res;
    std::unordered_set<std::string> seen;
    std::deque<CycMatrix> frontier;
    CycMatrix id = CycMatrix::identity(dim).promote(static_cast<int>(conductor));
    seen.insert(matrix_key(id));
    frontier.push_back(id);
    if (keep_elements) res.elements.push_back(id);
    res.explored = 1;

    while (!frontier.empty()) {
        CycMatrix cur = std::move(frontier.front());
        frontier.pop_front();
        for (const CycMatrix& s : steps) {
            CycMatrix next = cur * s;
            if (!seen.insert(matrix_key(next)).second) continue;
            ++res.explored;
            if (keep_elements) res.elements.push_back(next);
            if (res.explored >= cap) {
                res.cap_hit = true;
                res.finite = false;
                return res;
            }
            frontier.push_back(std::move(next));
        }
    }
    res.finite = true;
    res.order = res.explored;
    return res;
}

}  // namespace braidcong
