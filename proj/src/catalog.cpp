#include <braidcong/catalog.hpp>

#include <numeric>
#include <stdexcept>

namespace braidcong {

namespace {

std::vector<long long> unit_residues(long long r) {
    std::vector<long long> out;
    for (long long j = 1; j < r; ++j)
        if (std::gcd(j, r) == 1) out.push_back(j);
    return out;
}

// The six sixth roots of e(target), smallest angle first.
std::vector<RootFraction> sixth_roots(const RootFraction& target) {
    std::vector<RootFraction> out;
    for (long long k = 0; k < 6; ++k)
        out.push_back(RootFraction::of(target.num + k * target.den, 6 * target.den));
    return out;
}

std::string frac_name(const RootFraction& f) { return f.str(); }

}  // namespace

std::vector<CaseDescriptor> theorem_a_dim2_cases() {
    std::vector<CaseDescriptor> out;
    for (long long r = 2; r <= 5; ++r) {
        for (long long j : unit_residues(r)) {
            // lambda^6 = -e(-3j/r), i.e. e(1/2 - 3j/r).
            RootFraction target = RootFraction::of(r - 6 * j, 2 * r);
            for (const RootFraction& lam : sixth_roots(target)) {
                CaseDescriptor c;
                c.dim = 2;
                c.r = r;
                c.j = j;
                c.lambda = lam;
                c.family_tag = "A2:r" + std::to_string(r) + "j" + std::to_string(j);
                c.name = c.family_tag + ":λ=" + frac_name(lam);
                c.spec = RepSpec::of({lam, lam * RootFraction::of(j, r)});
                c.expected_level = lcm_order(c.spec.eigs);
                out.push_back(std::move(c));
            }
        }
    }
    return out;
}

std::vector<CaseDescriptor> theorem_a_dim3_cases() {
    std::vector<CaseDescriptor> out;
    for (long long r = 3; r <= 5; ++r) {
        std::vector<long long> units = unit_residues(r);
        for (size_t a = 0; a < units.size(); ++a) {
            for (size_t b = a + 1; b < units.size(); ++b) {
                long long j = units[a], k = units[b];
                // lambda^6 = e(-2(j+k)/r).
                RootFraction target = RootFraction::of(-2 * (j + k), r);
                for (const RootFraction& lam : sixth_roots(target)) {
                    CaseDescriptor c;
                    c.dim = 3;
                    c.r = r;
                    c.j = j;
                    c.k = k;
                    c.lambda = lam;
                    c.family_tag = "A3:r" + std::to_string(r) + "j" + std::to_string(j) + "k" +
                                   std::to_string(k);
                    c.name = c.family_tag + ":λ=" + frac_name(lam);
                    c.spec = RepSpec::of({lam, lam * RootFraction::of(j, r),
                                          lam * RootFraction::of(k, r)});
                    c.expected_level = lcm_order(c.spec.eigs);
                    out.push_back(std::move(c));
                }
            }
        }
    }
    return out;
}

std::vector<CaseDescriptor> theorem_a_cases() {
    std::vector<CaseDescriptor> out = theorem_a_dim2_cases();
    std::vector<CaseDescriptor> d3 = theorem_a_dim3_cases();
    out.insert(out.end(), d3.begin(), d3.end());
    return out;
}

NCFamily noncongruence_family(long long ell, int sign) {
    if (ell < 3 || ell % 2 == 0)
        throw std::invalid_argument("family requires odd ell >= 3");
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
    NCFamily f;
    f.ell = ell;
    f.sign = sign;
    f.name = "B:ell" + std::to_string(ell) + (sign > 0 ? "+" : "-");
    RootFraction q = RootFraction::of(1, 3 * ell);
    RootFraction l2 = q * RootFraction::minus_one();
    RootFraction l3 = q.pow(-2);
    if (sign < 0) l3 = l3 * RootFraction::minus_one();
    f.spec = RepSpec::of({q, l2, l3});
    f.rep = tw_construct(f.spec);
    return f;
}

std::pair<CycMatrix, CycMatrix> noncongruence_printed(long long ell, int sign) {
    if (ell < 3 || ell % 2 == 0)
        throw std::invalid_argument("family requires odd ell >= 3");
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
    auto q = [ell](long long m) {  // e(m / (3*ell))
        return to_cyc(RootFraction::of(m, 3 * ell));
    };
    CycNum zero(0);
    CycNum s = sign > 0 ? CycNum(1) : CycNum(-1);
    // X = [[q, -+q - q^-2, -q], [0, -q, -q], [0, 0, q^-2]]
    CycMatrix X = CycMatrix::from_rows({
        {q(1), -(s * q(1)) - q(-2), -q(1)},
        {zero, -q(1), -q(1)},
        {zero, zero, q(-2)},
    });
    // Y = [[+-q^2, 0, 0], [+-q^2, -q^-1, 0], [-q^-1, +-q^-4 + q^-1, q^-1]]
    CycMatrix Y = CycMatrix::from_rows({
        {s * q(2), zero, zero},
        {s * q(2), -q(-1), zero},
        {-q(-1), s * q(-4) + q(-1), q(-1)},
    });
    return {X, Y};
}

std::vector<MtcExample> mtc_examples() {
    std::vector<MtcExample> out;

    MtcExample c;
    c.name = "MTC:C";
    c.spec = RepSpec::of({RootFraction::of(1, 4), RootFraction::of(3, 4)});  // diag(i, -i)
    c.po = 2;
    c.expected_verdict = VerdictType::Congruence;
    c.expected_level = 6;
    out.push_back(std::move(c));

    MtcExample d;
    d.name = "MTC:D";
    d.spec = RepSpec::of({RootFraction::of(1, 3), RootFraction::of(2, 3)});  // diag(w, w^2)
    d.po = 3;
    d.expected_verdict = VerdictType::Congruence;
    d.expected_level = 12;
    out.push_back(std::move(d));

    MtcExample sig;
    sig.name = "MTC:sigma";
    // diag(e^{-pi i/8}, e^{3 pi i/8})
    sig.spec = RepSpec::of({RootFraction::of(15, 16), RootFraction::of(3, 16)});
    sig.po = 4;
    sig.expected_verdict = VerdictType::Congruence;
    sig.expected_level = 24;
    out.push_back(std::move(sig));

    MtcExample g;
    g.name = "MTC:G";
    g.po = 6;
    g.expected_verdict = VerdictType::NonCongruence;
    g.theta = RootFraction::of(17, 18);  // e^{-pi i/9}
    {
        CycNum w = to_cyc(RootFraction::of(1, 3));
        CycNum w2 = w * w;
        CycNum zero(0);
        CycNum half(make_rational(1, 2));
        // 1/sqrt(2) = (z8 + z8^7)/2, real and positive.
        CycNum inv_sqrt2 =
            (CycNum::root_of_unity(1, 8) + CycNum::root_of_unity(7, 8)) * half;
        BraidRep rep;
        rep.dim = 3;
        rep.A = CycMatrix::from_rows({
            {w2, zero, zero},
            {zero, -w2, zero},
            {zero, zero, w2 * w2},
        });
        rep.B = CycMatrix::from_rows({
            {w * half, -(w * half), w * inv_sqrt2 * w},
            {-(w * half), w * half, w * inv_sqrt2 * w},
            {w * inv_sqrt2 * w, w * inv_sqrt2 * w, zero},
        });
        rep.eigs = {w2, -w2, w2 * w2};
        g.rep = std::move(rep);
    }
    out.push_back(std::move(g));
    return out;
}

}  // namespace braidcong
