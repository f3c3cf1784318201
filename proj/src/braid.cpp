#include <braidcong/braid.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace braidcong {

RepSpec RepSpec::of(std::vector<RootFraction> eigs) {
    RepSpec s;
    s.dim = static_cast<int>(eigs.size());
    if (s.dim != 2 && s.dim != 3)
        throw std::invalid_argument("spec must have 2 or 3 eigenvalues");
    s.eigs = std::move(eigs);
    return s;
}

std::string RepSpec::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < eigs.size(); ++i) os << (i ? ", " : "") << eigs[i].str();
    os << ")";
    return os.str();
}

bool BraidRep::braid_relation_holds() const { return A * B * A == B * A * B; }

bool is_irreducible(const std::vector<CycNum>& eigs) {
    if (eigs.size() == 2) {
        const CycNum &l1 = eigs[0], &l2 = eigs[1];
        return !(l1 * l1 - l1 * l2 + l2 * l2).is_zero();
    }
    if (eigs.size() == 3) {
        for (int j = 0; j < 3; ++j) {
            const CycNum& lj = eigs[j];
            const CycNum& lk = eigs[(j + 1) % 3];
            const CycNum& ll = eigs[(j + 2) % 3];
            if ((lj * lj + lk * ll).is_zero()) return false;
        }
        return true;
    }
    throw std::invalid_argument("spectrum must have 2 or 3 eigenvalues");
}

namespace {

std::vector<CycNum> to_cyc_eigs(const RepSpec& spec) {
    std::vector<CycNum> out;
    out.reserve(spec.eigs.size());
    for (const RootFraction& r : spec.eigs) out.push_back(to_cyc(r));
    return out;
}

}  // namespace

bool is_irreducible(const RepSpec& spec) { return is_irreducible(to_cyc_eigs(spec)); }

BraidRep tw_construct(const std::vector<CycNum>& eigs) {
    if (!is_irreducible(eigs))
        throw std::domain_error("spectrum lies on the reducibility locus");
    BraidRep rep;
    rep.dim = static_cast<int>(eigs.size());
    rep.eigs = eigs;
    const CycNum zero(0);
    if (rep.dim == 2) {
        const CycNum &l1 = eigs[0], &l2 = eigs[1];
        rep.A = CycMatrix::from_rows({{l1, l1}, {zero, l2}});
        rep.B = CycMatrix::from_rows({{l2, zero}, {-l2, l1}});
    } else {
        const CycNum &l1 = eigs[0], &l2 = eigs[1], &l3 = eigs[2];
        CycNum m = l1 * l3 * l2.inverse() + l2;
        rep.A = CycMatrix::from_rows({{l1, m, l2}, {zero, l2, l2}, {zero, zero, l3}});
        rep.B = CycMatrix::from_rows({{l3, zero, zero}, {-l2, l2, zero}, {l2, -m, l1}});
    }
    if (!rep.braid_relation_holds())
        throw std::logic_error("constructed pair violates the braid relation");
    return rep;
}

BraidRep tw_construct(const RepSpec& spec) { return tw_construct(to_cyc_eigs(spec)); }

CycNum central_scalar(const BraidRep& rep) {
    CycMatrix full_twist = (rep.A * rep.B).pow(3);
    auto c = full_twist.as_scalar();
    if (!c) throw std::logic_error("full twist is not scalar");
    return *c;
}

bool factors_through_modular(const BraidRep& rep) {
    return central_scalar(rep) == CycNum(1);
}

std::optional<long long> projective_order(const std::vector<CycNum>& eigs) {
    long long po = 1;
    for (size_t i = 1; i < eigs.size(); ++i) {
        CycNum ratio = eigs[i] * eigs[0].inverse();
        auto r = ratio.as_root_of_unity();
        if (!r) return std::nullopt;
        po = lcm_ll(po, r->order());
    }
    return po;
}

long long projective_order(const RepSpec& spec) {
    long long po = 1;
    for (size_t i = 1; i < spec.eigs.size(); ++i)
        po = lcm_ll(po, (spec.eigs[i] / spec.eigs[0]).order());
    return po;
}

std::string to_string(ImageClass c) {
    switch (c) {
        case ImageClass::Finite: return "Finite";
        case ImageClass::Infinite: return "Infinite";
        default: return "Indeterminate";
    }
}

ClassifyResult classify_image(const RepSpec& spec) {
    ClassifyResult res;
    res.po = projective_order(spec);
    for (size_t i = 0; i < spec.eigs.size(); ++i)
        for (size_t j = i + 1; j < spec.eigs.size(); ++j)
            if (spec.eigs[i] == spec.eigs[j]) {
                res.cls = ImageClass::Infinite;
                res.reason = "repeated eigenvalues";
                return res;
            }
    if (res.po >= 2 && res.po <= 5) {
        res.cls = ImageClass::Finite;
        res.reason = "projective order between 2 and 5";
        return res;
    }
    if (spec.dim == 2) {
        res.cls = ImageClass::Infinite;
        res.reason = "two-dimensional with projective order outside [2, 5]";
        return res;
    }
    for (size_t i = 0; i < spec.eigs.size(); ++i)
        for (size_t j = 0; j < spec.eigs.size(); ++j)
            if (i != j && spec.eigs[i] / spec.eigs[j] == RootFraction::minus_one()) {
                res.cls = ImageClass::Finite;
                res.reason = "spectrum of shape {lambda, -lambda, mu}";
                return res;
            }
    res.cls = ImageClass::Indeterminate;
    res.reason = "no eigenvalue criterion applies";
    return res;
}

std::vector<RootFraction> admissible_thetas(const BraidRep& rep) {
    CycNum c = central_scalar(rep);
    auto cr = c.as_root_of_unity();
    if (!cr) throw std::domain_error("central scalar is not a root of unity");
    // theta^6 = conj(c): angles (1 - p/q + k)/6 for k = 0..5.
    RootFraction target = cr->inverse();
    std::vector<RootFraction> thetas;
    for (long long k = 0; k < 6; ++k)
        thetas.push_back(RootFraction::of(target.num + k * target.den, 6 * target.den));
    std::sort(thetas.begin(), thetas.end(),
              [](const RootFraction& a, const RootFraction& b) { return a.angle_less(b); });
    return thetas;
}

Scaling scale_to_modular(const BraidRep& rep, std::optional<RootFraction> theta) {
    std::vector<RootFraction> thetas = admissible_thetas(rep);
    RootFraction chosen;
    if (theta) {
        if (std::find(thetas.begin(), thetas.end(), *theta) == thetas.end())
            throw std::domain_error("theta = e(" + theta->str() +
                                    ") does not rescale the center to one");
        chosen = *theta;
    } else {
        chosen = thetas.front();  // list is sorted by angle
    }
    Scaling s;
    s.theta = chosen;
    CycNum th = to_cyc(chosen);
    s.rep.dim = rep.dim;
    s.rep.A = rep.A * th;
    s.rep.B = rep.B * th;
    std::vector<RootFraction> scaled;
    for (const CycNum& ev : rep.eigs) {
        CycNum sc = th * ev;
        s.rep.eigs.push_back(sc);
        auto r = sc.as_root_of_unity();
        if (!r) throw std::domain_error("scaled eigenvalue is not a root of unity");
        scaled.push_back(*r);
    }
    s.scaled_spec = RepSpec::of(std::move(scaled));
    return s;
}

}  // namespace braidcong
