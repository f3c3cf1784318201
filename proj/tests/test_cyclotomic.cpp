#include <braidcong/cyclotomic.hpp>
#include <braidcong/intpoly.hpp>

#include <doctest.h>

#include <random>

using namespace braidcong;

namespace {

// Squarefree Moebius function, enough for n <= 60.
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

// Independent oracle: Phi_n = prod_{d | n} (x^{n/d} - 1)^{moebius(d)}.
IntPolynomial cyclotomic_by_moebius(int n) {
    IntPolynomial num(std::vector<Int>{1}), den(std::vector<Int>{1});
    for (int d : divisors(n)) {
        int mu = moebius(d);
        if (mu == 1) num = num * x_pow_minus_one(n / d);
        if (mu == -1) den = den * x_pow_minus_one(n / d);
    }
    return num.divexact(den);
}

CycNum random_cyc(std::mt19937_64& rng, int conductor) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    CycNum v(0);
    for (int i = 0; i < totient(conductor); ++i) {
        Rational c = make_rational(num(rng), den(rng));
        v = v + CycNum(c) * CycNum::root_of_unity(i, conductor);
    }
    return v;
}

struct CapGuard {
    int saved = conductor_cap();
    ~CapGuard() { set_conductor_cap(saved); }
};

}  // namespace

TEST_CASE("cyclotomic polynomials match the Moebius-formula oracle up to n = 60") {
    for (int n = 1; n <= 60; ++n) {
        CAPTURE(n);
        const IntPolynomial& got = cyclotomic_polynomial(n);
        CHECK(got.degree() == totient(n));
        CHECK(got == cyclotomic_by_moebius(n));
    }
}

TEST_CASE("field arithmetic satisfies the ring axioms on random triples") {
    std::mt19937_64 rng(20240811);
    const CycNum zero(0), one(1);
    for (int conductor : {5, 8, 12, 24}) {
        for (int trial = 0; trial < 1000; ++trial) {
            CycNum a = random_cyc(rng, conductor);
            CycNum b = random_cyc(rng, conductor);
            CycNum c = random_cyc(rng, conductor);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a - a == zero);
            CHECK(a * one == a);
        }
    }
}

TEST_CASE("inverses multiply back to one") {
    std::mt19937_64 rng(7);
    for (int conductor : {5, 8, 12, 24}) {
        int done = 0;
        while (done < 50) {
            CycNum a = random_cyc(rng, conductor);
            if (a.is_zero()) continue;
            ++done;
            CHECK(a * a.inverse() == CycNum(1));
        }
    }
    CHECK_THROWS_AS(CycNum(0).inverse(), std::domain_error);
}

TEST_CASE("conjugation inverts roots of unity and is an involution") {
    for (int n : {3, 5, 8, 12, 24}) {
        CycNum z = CycNum::root_of_unity(1, n);
        CHECK(z.conj() == CycNum::root_of_unity(n - 1, n));
        CHECK(z * z.conj() == CycNum(1));
    }
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        CycNum a = random_cyc(rng, 24);
        CHECK(a.conj().conj() == a);
    }
}

TEST_CASE("root-of-unity recognition recovers the angle, sign included") {
    for (int n : {1, 2, 3, 4, 5, 6, 8, 9, 12, 16, 18, 20, 24}) {
        for (int k = 0; k < n; ++k) {
            auto got = CycNum::root_of_unity(k, n).as_root_of_unity();
            REQUIRE(got.has_value());
            CHECK(*got == RootFraction::of(k, n));
        }
    }
    // -zeta_5 lives at conductor 10 but is recognized inside Q(zeta_5).
    CycNum m = CycNum(-1) * CycNum::root_of_unity(1, 5);
    auto got = m.as_root_of_unity();
    REQUIRE(got.has_value());
    CHECK(*got == RootFraction::of(7, 10));

    CHECK_FALSE(CycNum(2).as_root_of_unity().has_value());
    CHECK_FALSE((CycNum(1) + CycNum::root_of_unity(1, 5)).as_root_of_unity().has_value());
    CHECK_FALSE(CycNum(0).as_root_of_unity().has_value());
}

TEST_CASE("conductor promotion preserves values and the cap is enforced") {
    CycNum z = CycNum::root_of_unity(1, 6);
    CHECK(z.promote(12) == z);
    CHECK(z.promote(12).conductor() == 12);
    // zeta_6 = -zeta_3^2 and zeta_3 = zeta_6^2 relate the two power bases.
    CHECK(CycNum::root_of_unity(1, 6) == CycNum(-1) * CycNum::root_of_unity(2, 3));

    CapGuard guard;
    set_conductor_cap(20);
    CHECK_THROWS_AS(CycNum::root_of_unity(1, 5) * CycNum::root_of_unity(1, 7),
                    ConductorCapExceeded);
}

TEST_CASE("rational detection and printing stay in the prime field") {
    CHECK(CycNum::root_of_unity(1, 2) == CycNum(-1));
    CycNum i = CycNum::root_of_unity(1, 4);
    CHECK(i * i == CycNum(-1));
    CHECK(CycNum(make_rational(3, 4)).is_rational());
    CHECK(CycNum::root_of_unity(1, 5).is_rational() == false);
    CHECK(CycNum(make_rational(3, 4)).str() == "3/4");
    CHECK(CycNum::root_of_unity(1, 8).str() == "e(1/8)");
}

TEST_CASE("root fractions reduce, multiply as angles, and order by angle") {
    CHECK(RootFraction::of(-1, 3) == RootFraction::of(2, 3));
    CHECK(RootFraction::of(6, 4) == RootFraction::of(1, 2));
    CHECK(RootFraction::of(1, 2) * RootFraction::of(1, 2) == RootFraction::one());
    CHECK(RootFraction::of(1, 3).inverse() == RootFraction::of(2, 3));
    CHECK(RootFraction::of(1, 12).pow(-2) == RootFraction::of(5, 6));
    CHECK(RootFraction::of(5, 60).order() == 12);
    CHECK(RootFraction::of(1, 12).angle_less(RootFraction::of(1, 11)));
    CHECK(RootFraction::parse("7/24").str() == "7/24");
    CHECK(RootFraction::parse("0/1").is_one());
    CHECK_THROWS(RootFraction::parse("7/0"));
    CHECK_THROWS(RootFraction::parse("x/3"));
    CHECK(lcm_order({RootFraction::of(1, 4), RootFraction::of(1, 6)}) == 12);
}

TEST_CASE("integer helpers: modular inverse and CRT pairs") {
    CHECK(mod_inverse(2, 5) == 3);
    CHECK(mod_inverse(5, 8) == 5);
    CHECK_THROWS_AS(mod_inverse(2, 4), std::domain_error);
    // x = 0 mod 4, x = 1 mod 3 -> 4; x = 1 mod 4, x = 0 mod 3 -> 9.
    CHECK(crt_pair(0, 4, 1, 3) == 4);
    CHECK(crt_pair(1, 4, 0, 3) == 9);
}
