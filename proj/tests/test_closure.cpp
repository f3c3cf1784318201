#include <braidcong/closure.hpp>
#include <braidcong/congruence.hpp>

#include <doctest.h>

using namespace braidcong;

namespace {

CycNum e(long long k, long long n) { return CycNum::root_of_unity(k, n); }

}  // namespace

TEST_CASE("closure of small generator sets") {
    CHECK(enumerate_group({CycMatrix::identity(2)}).order == 1);

    CycMatrix i4 = CycMatrix::from_rows({{e(1, 4), CycNum(0)}, {CycNum(0), e(3, 4)}});
    ClosureResult c4 = enumerate_group({i4});
    CHECK(c4.finite);
    CHECK(c4.order == 4);

    // Two reflections generate a dihedral group of order 8.
    CycMatrix swap = CycMatrix::from_rows({{CycNum(0), CycNum(1)}, {CycNum(1), CycNum(0)}});
    CycMatrix sign = CycMatrix::from_rows({{CycNum(1), CycNum(0)}, {CycNum(0), CycNum(-1)}});
    ClosureResult d8 = enumerate_group({swap, sign});
    CHECK(d8.finite);
    CHECK(d8.order == 8);
}

TEST_CASE("infinite groups stop at the cap") {
    CycMatrix shear = CycMatrix::from_rows({{CycNum(1), CycNum(1)}, {CycNum(0), CycNum(1)}});
    ClosureResult res = enumerate_group({shear}, 50);
    CHECK_FALSE(res.finite);
    CHECK(res.cap_hit);
    CHECK(res.explored >= 50);
}

TEST_CASE("generators of mixed conductor are unified before hashing") {
    CycMatrix a = CycMatrix::from_rows({{e(1, 4), CycNum(0)}, {CycNum(0), e(3, 4)}});
    CycMatrix b = CycMatrix::from_rows({{e(1, 6), CycNum(0)}, {CycNum(0), e(5, 6)}});
    ClosureResult res = enumerate_group({a, b});
    CHECK(res.finite);
    CHECK(res.order == 12);  // diagonal pairs (e(a/4+b/6), conj) form a cyclic group of order 12
}

TEST_CASE("a descended image is closed and Lagrange-compatible") {
    Scaling sc = scale_to_modular(tw_construct(RepSpec::of({RootFraction::of(1, 4), RootFraction::of(3, 4)})));
    ModularRep m = to_modular_rep(sc.rep);
    ClosureResult res = enumerate_group({m.X, m.Y}, 200000, true);
    REQUIRE(res.finite);
    CHECK(res.order == (long long)res.elements.size());

    // Generator orders divide the group order.
    auto ox = m.X.order(), oy = m.Y.order();
    REQUIRE(ox.has_value());
    REQUIRE(oy.has_value());
    CHECK(res.order % *ox == 0);
    CHECK(res.order % *oy == 0);

    // Element orders divide the group order; products stay inside the set.
    auto contains = [&](const CycMatrix& m0) {
        for (const auto& g : res.elements)
            if (g == m0) return true;
        return false;
    };
    size_t step = res.elements.size() / 7 + 1;
    for (size_t i = 0; i < res.elements.size(); i += step) {
        auto og = res.elements[i].order(res.order + 1);
        REQUIRE(og.has_value());
        CHECK(res.order % *og == 0);
        CHECK(contains(res.elements[i] * m.X));
        CHECK(contains(res.elements[i].inverse()));
    }
}
