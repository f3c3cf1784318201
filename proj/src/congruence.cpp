#include <braidcong/congruence.hpp>

#include <braidcong/closure.hpp>

#include <chrono>
#include <stdexcept>

namespace braidcong {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Powers of a finite-order matrix, indexed by exponent mod the order.
struct PowerCache {
    long long ord = 0;
    std::vector<CycMatrix> pows;

    PowerCache(const CycMatrix& m, long long ord_) : ord(ord_) {
        pows.reserve(ord);
        pows.push_back(CycMatrix::identity(m.dim()).promote(m.common_conductor()));
        for (long long k = 1; k < ord; ++k) pows.push_back(pows.back() * m);
    }

    const CycMatrix& power(long long e) const {
        long long k = ((e % ord) + ord) % ord;
        return pows[static_cast<size_t>(k)];
    }
};

CycMatrix evaluate_cached(const GroupWord& w, const PowerCache& X, const PowerCache& Y) {
    CycMatrix out = X.power(0);
    for (const Letter& l : w.letters())
        out = out * (l.gen == Gen::T ? X.power(l.exp) : Y.power(l.exp));
    return out;
}

}  // namespace

std::string to_string(VerdictType v) {
    switch (v) {
        case VerdictType::Congruence: return "Congruence";
        case VerdictType::NonCongruence: return "NonCongruence";
        default: return "NotApplicable";
    }
}

ModularRep to_modular_rep(const BraidRep& rep) {
    if (!factors_through_modular(rep))
        throw std::domain_error("representation does not kill the center");
    ModularRep m;
    m.dim = rep.dim;
    m.X = rep.A;
    m.Y = rep.B.inverse();
    int conductor = static_cast<int>(
        lcm_ll(m.X.common_conductor(), m.Y.common_conductor()));
    m.X = m.X.promote(conductor);
    m.Y = m.Y.promote(conductor);
    CycMatrix s = m.X * m.Y.inverse() * m.X;
    if (!(s * s).is_identity() || !(m.Y.inverse() * m.X).pow(3).is_identity())
        throw std::logic_error("modular relations fail after descent");
    return m;
}

std::optional<long long> geometric_level(const ModularRep& rep, long long cap) {
    return rep.X.order(cap);
}

CongruenceResult congruence_test(const ModularRep& rep, long long order_cap) {
    CongruenceResult res;
    auto lvl = geometric_level(rep, order_cap);
    if (!lvl) {
        res.verdict.type = VerdictType::NotApplicable;
        res.verdict.reason = "order of the image of T exceeds cap " + std::to_string(order_cap);
        return res;
    }
    res.glevel = *lvl;
    if (res.glevel == 1) {
        // X = I forces Y = I under the modular relations; the kernel is everything.
        if (!rep.Y.is_identity()) throw std::logic_error("X trivial but Y nontrivial");
        res.verdict.type = VerdictType::Congruence;
        res.verdict.level = 1;
        return res;
    }
    HsuData hsu = hsu_generators(res.glevel);
    auto yord = rep.Y.order(order_cap);
    if (!yord) {
        // Finite-order X with infinite-order Y cannot happen for a finite image;
        // surface the cap rather than guessing.
        res.verdict.type = VerdictType::NotApplicable;
        res.verdict.reason = "order of the image of U exceeds cap " + std::to_string(order_cap);
        return res;
    }
    PowerCache xc(rep.X, res.glevel);
    PowerCache yc(rep.Y, *yord);
    for (size_t i = 0; i < hsu.words.size(); ++i) {
        CycMatrix value = evaluate_cached(hsu.words[i].word, xc, yc);
        ++res.words_checked;
        if (!value.is_identity()) {
            res.verdict.type = VerdictType::NonCongruence;
            res.verdict.witness_index = static_cast<int>(i);
            res.verdict.witness_name = hsu.words[i].name;
            res.verdict.witness_word = hsu.words[i].word.str();
            res.verdict.witness_value = value;
            return res;
        }
    }
    res.verdict.type = VerdictType::Congruence;
    res.verdict.level = res.glevel;
    return res;
}

namespace {

// Shared tail of the pipeline, once a representation exists.
std::vector<PipelineReport> pipeline_on_rep(const BraidRep& rep, PipelineReport base,
                                            const PipelineOptions& opts) {
    std::vector<RootFraction> thetas;
    if (opts.all_scalings) thetas = admissible_thetas(rep);
    else if (opts.theta) thetas = {*opts.theta};
    else thetas = {admissible_thetas(rep).front()};

    std::vector<PipelineReport> out;
    for (const RootFraction& th : thetas) {
        PipelineReport r = base;
        auto t1 = Clock::now();
        Scaling sc = scale_to_modular(rep, th);
        r.theta = sc.theta;
        r.scaled_spec = sc.scaled_spec;
        r.timings_ms["scale"] = ms_since(t1);

        t1 = Clock::now();
        ModularRep mod = to_modular_rep(sc.rep);
        CongruenceResult cres = congruence_test(mod, opts.order_cap);
        r.glevel = cres.glevel;
        r.words_checked = cres.words_checked;
        r.verdict = cres.verdict;
        r.timings_ms["congruence"] = ms_since(t1);

        r.conditional = (r.classification.cls == ImageClass::Indeterminate);
        if (opts.closure_cap) {
            t1 = Clock::now();
            ClosureResult cl = enumerate_group({mod.X, mod.Y}, *opts.closure_cap);
            if (cl.finite) {
                r.image_order = cl.order;
                r.conditional = false;
            }
            r.timings_ms["closure"] = ms_since(t1);
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

std::vector<PipelineReport> full_pipeline(const RepSpec& spec, const PipelineOptions& opts) {
    PipelineReport base;
    base.input_spec = spec;

    auto t0 = Clock::now();
    base.irreducible = is_irreducible(spec);
    if (!base.irreducible) {
        base.verdict.type = VerdictType::NotApplicable;
        base.verdict.reason = "spectrum lies on the reducibility locus";
        base.timings_ms["classify"] = ms_since(t0);
        return {base};
    }
    base.classification = classify_image(spec);
    base.timings_ms["classify"] = ms_since(t0);
    if (base.classification.cls == ImageClass::Infinite) {
        base.verdict.type = VerdictType::NotApplicable;
        base.verdict.reason = "image is infinite: " + base.classification.reason;
        return {base};
    }

    t0 = Clock::now();
    BraidRep rep = tw_construct(spec);
    base.timings_ms["construct"] = ms_since(t0);
    return pipeline_on_rep(rep, std::move(base), opts);
}

std::vector<PipelineReport> full_pipeline(const BraidRep& rep, const PipelineOptions& opts) {
    PipelineReport base;

    auto t0 = Clock::now();
    std::vector<RootFraction> eigs;
    for (const CycNum& ev : rep.eigs) {
        auto r = ev.as_root_of_unity();
        if (!r) {
            base.verdict.type = VerdictType::NotApplicable;
            base.verdict.reason = "image is infinite: eigenvalue is not a root of unity";
            base.timings_ms["classify"] = ms_since(t0);
            return {base};
        }
        eigs.push_back(*r);
    }
    base.input_spec = RepSpec::of(std::move(eigs));
    base.irreducible = is_irreducible(base.input_spec);
    if (!base.irreducible) {
        base.verdict.type = VerdictType::NotApplicable;
        base.verdict.reason = "spectrum lies on the reducibility locus";
        base.timings_ms["classify"] = ms_since(t0);
        return {base};
    }
    base.classification = classify_image(base.input_spec);
    base.timings_ms["classify"] = ms_since(t0);
    if (base.classification.cls == ImageClass::Infinite) {
        base.verdict.type = VerdictType::NotApplicable;
        base.verdict.reason = "image is infinite: " + base.classification.reason;
        return {base};
    }
    if (!rep.braid_relation_holds())
        throw std::invalid_argument("matrices violate the braid relation");
    return pipeline_on_rep(rep, std::move(base), opts);
}

}  // namespace braidcong
