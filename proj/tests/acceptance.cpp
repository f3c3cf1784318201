// Acceptance gate: one line per criterion, nonzero exit when any fails.
// Criterion 7 needs the CLI binary path as argv[1].

#include <braidcong/catalog.hpp>
#include <braidcong/closure.hpp>
#include <braidcong/congruence.hpp>
#include <braidcong/intpoly.hpp>

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

using namespace braidcong;

namespace {

struct Criterion {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

int moebius(int n) {
    int count = 0;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            ++count;
        }
    }
    if (n > 1) ++count;
    return count % 2 == 0 ? 1 : -1;
}

CycNum random_cyc(std::mt19937_64& rng, int conductor) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    CycNum v(0);
    for (int i = 0; i < totient(conductor); ++i)
        v = v + CycNum(make_rational(num(rng), den(rng))) * CycNum::root_of_unity(i, conductor);
    return v;
}

PipelineReport run_spec(const RepSpec& s) { return full_pipeline(s).front(); }

// criterion 1: the dimension-two table, levels matched case by case.
Criterion criterion1() {
    Criterion c;
    std::map<long long, std::map<long long, std::map<long long, int>>> level_counts;
    for (const auto& d : theorem_a_dim2_cases()) {
        PipelineReport r = run_spec(d.spec);
        c.expect(r.verdict.type == VerdictType::Congruence, d.name + ": not Congruence");
        c.expect(r.verdict.level == d.expected_level,
                 d.name + ": level " + std::to_string(r.verdict.level));
        level_counts[d.r][d.j][r.verdict.level]++;

        if (d.r == 2) {
            bool pm1 = d.lambda == RootFraction::one() || d.lambda == RootFraction::minus_one();
            c.expect(r.verdict.level == (pm1 ? 2 : 6), d.name + ": r=2 table");
        }
        if (d.r == 3) c.expect(r.verdict.level == 12, d.name + ": r=3 table");
        if (d.r == 4 && d.j == 1) {
            bool eight = d.lambda == RootFraction::of(1, 8) || d.lambda == RootFraction::of(5, 8);
            c.expect(r.verdict.level == (eight ? 8 : 24), d.name + ": r=4 table");
        }
        if (d.r == 5 && d.j == 1) {
            bool twenty = d.lambda == RootFraction::of(3, 20) || d.lambda == RootFraction::of(13, 20);
            c.expect(r.verdict.level == (twenty ? 20 : 60), d.name + ": r=5 table");
        }
    }
    // Per xi-branch shape: r=4 has two 8s and four 24s, r=5 two 20s and four 60s.
    for (long long j : {1, 3})
        c.expect(level_counts[4][j][8] == 2 && level_counts[4][j][24] == 4, "r=4 branch shape");
    for (long long j : {1, 2, 3, 4})
        c.expect(level_counts[5][j][20] == 2 && level_counts[5][j][60] == 4, "r=5 branch shape");
    return c;
}

// criterion 2: the dimension-three table.
Criterion criterion2() {
    Criterion c;
    std::vector<long long> r5_12;
    for (const auto& d : theorem_a_dim3_cases()) {
        PipelineReport r = run_spec(d.spec);
        c.expect(r.verdict.type == VerdictType::Congruence, d.name + ": not Congruence");
        c.expect(r.verdict.level == d.expected_level,
                 d.name + ": level " + std::to_string(r.verdict.level));

        if (d.r == 3) {
            bool cube = d.lambda.den == 1 || d.lambda.den == 3;
            c.expect(r.verdict.level == (cube ? 3 : 6), d.name + ": r=3 table");
        }
        if (d.r == 4)
            c.expect(r.verdict.level == (d.lambda.den <= 2 ? 4 : 12), d.name + ": r=4 table");
        if (d.r == 5 && d.j == 1 && d.k == 2) r5_12.push_back(r.verdict.level);
    }
    c.expect(r5_12 == std::vector<long long>{15, 10, 15, 30, 5, 30}, "r=5 {1,2} level sequence");
    return c;
}

// criterion 3: the noncongruence family, both signs, ell in {3,5,7,9}.
Criterion criterion3() {
    Criterion c;
    for (long long ell : {3, 5, 7, 9}) {
        for (int sign : {+1, -1}) {
            NCFamily fam = noncongruence_family(ell, sign);
            std::string tag = fam.name + ": ";
            c.expect(projective_order(fam.spec) == 2 * ell, tag + "po");
            c.expect(fam.rep.A.order(1000) == 6 * ell, tag + "order of the T image");

            PipelineReport r = full_pipeline(fam.rep).front();
            c.expect(r.glevel == 6 * ell, tag + "glevel");
            c.expect(r.verdict.type == VerdictType::NonCongruence, tag + "verdict");
            if (r.verdict.type != VerdictType::NonCongruence) continue;

            GroupWord expected =
                GroupWord::commutator(GroupWord::T(3 * ell + 1), GroupWord::U(3 * ell));
            bool listed = false;
            for (const auto& w : hsu_generators(6 * ell).words)
                if (w.word == expected) listed = true;
            c.expect(listed, tag + "witness listed");
            c.expect(GroupWord::parse(r.verdict.witness_word) == expected, tag + "witness word");

            // (0,0,1) spans an eigenline of the witness image under the row
            // action, with exact eigenvalue e^{-2 pi i / ell}.
            c.expect(r.verdict.witness_value.has_value(), tag + "witness matrix recorded");
            if (!r.verdict.witness_value) continue;
            const CycMatrix& M = *r.verdict.witness_value;
            CycNum mu = CycNum::root_of_unity(ell - 1, ell);
            CycVector v{CycNum(0), CycNum(0), CycNum(1)};
            c.expect(vectors_equal(M.apply_row(v), scale(mu, v)), tag + "witness eigenvalue");
            c.expect(!M.is_identity(), tag + "witness nontrivial");
        }
    }
    return c;
}

// criterion 4: the worked example representations and their verdicts.
Criterion criterion4() {
    Criterion c;
    std::map<std::string, const MtcExample*> by_name;
    auto all = mtc_examples();
    for (const auto& ex : all) by_name[ex.name] = &ex;

    for (const auto& [name, po] :
         std::map<std::string, long long>{{"MTC:C", 2}, {"MTC:D", 3}, {"MTC:sigma", 4}}) {
        const MtcExample& ex = *by_name.at(name);
        c.expect(projective_order(*ex.spec) == po, name + ": po");
        PipelineReport r = run_spec(*ex.spec);
        c.expect(r.verdict.type == VerdictType::Congruence, name + ": verdict");
        c.expect(r.verdict.level == *ex.expected_level, name + ": level");
    }

    const MtcExample& g = *by_name.at("MTC:G");
    PipelineOptions opts;
    opts.theta = *g.theta;
    PipelineReport r = full_pipeline(*g.rep, opts).front();
    auto by_angle = [](const RootFraction& a, const RootFraction& b) { return a.angle_less(b); };
    std::vector<RootFraction> got = r.scaled_spec->eigs;
    std::vector<RootFraction> want{RootFraction::of(1, 9), RootFraction::of(11, 18),
                                   RootFraction::of(5, 18)};
    std::sort(got.begin(), got.end(), by_angle);
    std::sort(want.begin(), want.end(), by_angle);
    c.expect(got == want, "MTC:G: rescaled spectrum");
    c.expect(r.verdict.type == VerdictType::NonCongruence, "MTC:G: verdict");
    return c;
}

// criterion 5: the integer-matrix oracle for the generating words.
Criterion criterion5() {
    Criterion c;
    for (long long N = 2; N <= 60; ++N)
        for (const auto& w : hsu_generators(N).words)
            c.expect(word_is_identity_mod(w.word, N),
                     "N=" + std::to_string(N) + " word " + w.name);
    return c;
}

// criterion 6: the property suites.
Criterion criterion6() {
    Criterion c;

    // Ring axioms on 1000 random triples per conductor.
    std::mt19937_64 rng(20240818);
    for (int conductor : {5, 8, 12, 24}) {
        for (int trial = 0; trial < 1000 && c.ok; ++trial) {
            CycNum a = random_cyc(rng, conductor), b = random_cyc(rng, conductor),
                   x = random_cyc(rng, conductor);
            c.expect((a + b) + x == a + (b + x), "associativity of +");
            c.expect((a * b) * x == a * (b * x), "associativity of *");
            c.expect(a * (b + x) == a * b + a * x, "distributivity");
            c.expect(a * b == b * a, "commutativity");
        }
    }

    // Cyclotomic polynomials against the Moebius product formula.
    for (int n = 1; n <= 60 && c.ok; ++n) {
        IntPolynomial num(std::vector<Int>{1}), den(std::vector<Int>{1});
        for (int d : divisors(n)) {
            if (moebius(d) == 1) num = num * x_pow_minus_one(n / d);
            if (moebius(d) == -1) den = den * x_pow_minus_one(n / d);
        }
        c.expect(cyclotomic_polynomial(n) == num.divexact(den),
                 "Phi_" + std::to_string(n));
    }

    // Braid relation on every representation the suites construct.
    std::vector<BraidRep> reps;
    for (const auto& d : theorem_a_cases()) reps.push_back(tw_construct(d.spec));
    for (long long ell : {3, 5, 7, 9})
        for (int sign : {+1, -1}) reps.push_back(noncongruence_family(ell, sign).rep);
    for (const auto& ex : mtc_examples()) {
        if (ex.rep) reps.push_back(*ex.rep);
        if (ex.spec) reps.push_back(tw_construct(*ex.spec));
    }
    for (const auto& rep : reps) c.expect(rep.braid_relation_holds(), "braid relation");

    // Projective order is scaling-invariant; the central scalar gains theta^6.
    for (size_t i = 0; i < reps.size(); i += 7) {
        const BraidRep& rep = reps[i];
        std::vector<RootFraction> roots;
        for (const auto& x : rep.eigs) roots.push_back(*x.as_root_of_unity());
        RepSpec spec = RepSpec::of(roots);
        for (const RootFraction& t : {RootFraction::of(1, 8), RootFraction::of(5, 12)}) {
            std::vector<RootFraction> scaled;
            for (const auto& x : roots) scaled.push_back(x * t);
            c.expect(projective_order(spec) == projective_order(RepSpec::of(scaled)),
                     "po scaling invariance");
            CycNum th = CycNum::from_root(t);
            BraidRep srep{rep.dim, rep.A * th, rep.B * th, rep.eigs};
            c.expect(central_scalar(srep) == CycNum::from_root(t.pow(6)) * central_scalar(rep),
                     "central scalar under scaling");
        }
    }

    // Closure finiteness with Lagrange checks across the whole catalog.
    for (const auto& d : theorem_a_cases()) {
        Scaling sc = scale_to_modular(tw_construct(d.spec));
        ModularRep m = to_modular_rep(sc.rep);
        ClosureResult res = enumerate_group({m.X, m.Y});
        c.expect(res.finite, d.name + ": image not certified finite");
        if (!res.finite) continue;
        auto ox = m.X.order(), oy = m.Y.order();
        c.expect(ox && res.order % *ox == 0, d.name + ": |G| vs ord(X)");
        c.expect(oy && res.order % *oy == 0, d.name + ": |G| vs ord(Y)");
        c.expect(*ox == d.expected_level, d.name + ": ord(X) vs level");
    }
    return c;
}

// criterion 7: byte-identical repeated verification output.
Criterion criterion7(const char* cli_path) {
    Criterion c;
    if (!cli_path) {
        c.expect(false, "CLI path not supplied");
        return c;
    }
    auto capture = [&](std::string& out) {
        std::string cmd = std::string(cli_path) + " verify-theorem-a --json 2>/dev/null";
        FILE* pipe = popen(cmd.c_str(), "r");
        if (!pipe) return -1;
        char buf[4096];
        size_t n;
        while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
        return pclose(pipe);
    };
    std::string first, second;
    c.expect(capture(first) == 0, "first run failed");
    c.expect(capture(second) == 0, "second run failed");
    c.expect(!first.empty(), "no output");
    c.expect(first == second, "outputs differ between runs");
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    const char* cli_path = argc > 1 ? argv[1] : nullptr;
    const char* labels[] = {
        "dimension-two catalog levels",   "dimension-three catalog levels",
        "noncongruence family",           "worked examples",
        "integer word oracle",            "property suites",
        "deterministic verification output",
    };
    Criterion results[7];
    results[0] = criterion1();
    results[1] = criterion2();
    results[2] = criterion3();
    results[3] = criterion4();
    results[4] = criterion5();
    results[5] = criterion6();
    results[6] = criterion7(cli_path);

    int failed = 0;
    for (int i = 0; i < 7; ++i) {
        std::cout << "criterion " << (i + 1) << ": " << (results[i].ok ? "PASS" : "FAIL") << " - "
                  << labels[i];
        if (!results[i].ok) {
            std::cout << " (" << results[i].detail << ")";
            ++failed;
        }
        std::cout << "\n";
    }
    return failed == 0 ? 0 : 1;
}
