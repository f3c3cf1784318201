#include <braidcong/matrix.hpp>

#include <doctest.h>

using namespace braidcong;

namespace {

CycNum e(long long k, long long n) { return CycNum::root_of_unity(k, n); }

// An invertible 3x3 with genuinely cyclotomic entries.
CycMatrix sample3() {
    return CycMatrix::from_rows({{e(1, 5), e(1, 5), CycNum(1)},
                                 {CycNum(0), e(2, 5), CycNum(1)},
                                 {CycNum(0), CycNum(0), e(3, 5)}});
}

}  // namespace

TEST_CASE("determinant, inverse, and powers are mutually consistent") {
    CycMatrix m2 = CycMatrix::from_rows({{e(1, 8), CycNum(1)}, {CycNum(-1), e(1, 4)}});
    CHECK(m2.det() == e(3, 8) + CycNum(1));  // e(1/8)e(1/4) + 1
    CHECK(m2 * m2.inverse() == CycMatrix::identity(2));
    CHECK(m2.inverse() * m2 == CycMatrix::identity(2));

    CycMatrix m3 = sample3();
    CHECK(m3.det() == e(1, 5) * e(2, 5) * e(3, 5));
    CHECK(m3 * m3.inverse() == CycMatrix::identity(3));
    CHECK(m3.pow(5) == m3 * m3 * m3 * m3 * m3);
    CHECK(m3.pow(-2) == (m3 * m3).inverse());
    CHECK(m3.pow(0) == CycMatrix::identity(3));

    CycMatrix singular = CycMatrix::from_rows({{CycNum(1), CycNum(1)}, {CycNum(1), CycNum(1)}});
    CHECK(singular.det().is_zero());
    CHECK_THROWS_AS(singular.inverse(), std::domain_error);
}

TEST_CASE("row and column actions pick out rows and columns") {
    CycMatrix m = sample3();
    CycVector e0{CycNum(1), CycNum(0), CycNum(0)};
    CycVector e2{CycNum(0), CycNum(0), CycNum(1)};
    CycVector row0 = m.apply_row(e0);
    CycVector col2 = m.apply_col(e2);
    for (int j = 0; j < 3; ++j) {
        CHECK(row0[j] == m.at(0, j));
        CHECK(col2[j] == m.at(j, 2));
    }
    CHECK(vectors_equal(scale(e(1, 3), e2), CycVector{CycNum(0), CycNum(0), e(1, 3)}));
}

TEST_CASE("order finds exact multiplicative orders and respects the cap") {
    CycMatrix i4 = CycMatrix::from_rows({{e(1, 4), CycNum(0)}, {CycNum(0), e(3, 4)}});
    CHECK(i4.order() == 4);

    // Non-triangular: an order-8 rotation by the 8th root of unity pair.
    CycMatrix rot = CycMatrix::from_rows({{CycNum(0), CycNum(-1)}, {CycNum(1), CycNum(0)}});
    CHECK(rot.order() == 4);
    CHECK((rot * e(1, 8)).order() == 8);

    CycMatrix shear = CycMatrix::from_rows({{CycNum(1), CycNum(1)}, {CycNum(0), CycNum(1)}});
    CHECK_FALSE(shear.order(100).has_value());

    CHECK(CycMatrix::identity(3).order() == 1);
    CHECK(sample3().order() == 5);
}

TEST_CASE("scalar predicates and triangular spectra") {
    CycMatrix s = CycMatrix::identity(2) * e(1, 6);
    auto c = s.as_scalar();
    REQUIRE(c.has_value());
    CHECK(*c == e(1, 6));
    CHECK_FALSE(sample3().as_scalar().has_value());
    CHECK(CycMatrix::identity(3).is_identity());

    CHECK(sample3().is_upper_triangular());
    CHECK_FALSE(sample3().is_lower_triangular());
    auto d = sample3().diag_spectrum();
    REQUIRE(d.has_value());
    CHECK((*d)[1] == e(2, 5));
}

TEST_CASE("commutators and transposes") {
    CycMatrix m = sample3();
    CHECK(commutator(m, m).is_identity());
    CHECK(commutator(m, CycMatrix::identity(3)).is_identity());
    CHECK(m.transpose().transpose() == m);
    CHECK(m.transpose().at(0, 2) == m.at(2, 0));
}

TEST_CASE("entries of different conductors align automatically") {
    CycMatrix a = CycMatrix::from_rows({{e(1, 4), CycNum(0)}, {CycNum(0), CycNum(1)}});
    CycMatrix b = CycMatrix::from_rows({{e(1, 6), CycNum(0)}, {CycNum(0), CycNum(1)}});
    CycMatrix p = a * b;
    CHECK(p.at(0, 0) == e(1, 4) * e(1, 6));
    CHECK(p.at(0, 0).as_root_of_unity() == RootFraction::of(5, 12));
    CHECK(a.promote(12) == a);
    CHECK(b.common_conductor() == 6);
}
