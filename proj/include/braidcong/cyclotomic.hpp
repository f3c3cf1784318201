#pragma once

#include <braidcong/intpoly.hpp>
#include <braidcong/rational.hpp>
#include <braidcong/rootfrac.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidcong {

// Raised when an operation would need a cyclotomic field whose conductor
// exceeds the configured cap.
struct ConductorCapExceeded : std::runtime_error {
    explicit ConductorCapExceeded(int wanted, int cap);
    int wanted;
    int cap;
};

int conductor_cap();
void set_conductor_cap(int cap);

// An element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^{phi(n)-1}
// of Q[x]/Phi_n(x). The conductor is fixed at construction; mixed-conductor
// arithmetic promotes both operands into Q(zeta_lcm) first (subject to the cap)
// and no automatic conductor reduction is ever performed.
class CycNum {
public:
    CycNum() : conductor_(1), coeffs_(1, Rational(0)) {}
    CycNum(const Rational& q) : conductor_(1), coeffs_(1, q) {}
    CycNum(long v) : CycNum(Rational(v)) {}
    CycNum(int v) : CycNum(Rational(v)) {}

    // zeta_n^k as an element of Q(zeta_n); k may be any integer.
    static CycNum root_of_unity(long long k, long long n);
    static CycNum from_root(const RootFraction& r) { return root_of_unity(r.num, r.den); }

    int conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const;  // throws unless is_rational()

    CycNum operator+(const CycNum& rhs) const;
    CycNum operator-(const CycNum& rhs) const;
    CycNum operator*(const CycNum& rhs) const;
    CycNum operator-() const;
    CycNum inverse() const;  // throws std::domain_error on zero
    CycNum conj() const;     // the automorphism zeta -> zeta^{-1}

    // The same element viewed in Q(zeta_m); requires conductor | m.
    CycNum promote(int m) const;

    bool operator==(const CycNum& rhs) const;
    bool operator!=(const CycNum& rhs) const { return !(*this == rhs); }

    // If the element is a root of unity, its angle fraction. Every root of
    // unity in Q(zeta_n) has the form +-zeta_n^k, so the scan is complete.
    std::optional<RootFraction> as_root_of_unity() const;

    std::string str() const;  // "e(k/n)" for roots of unity, else power-basis text

private:
    CycNum(int conductor, std::vector<Rational> coeffs);
    static void align(CycNum& a, CycNum& b);
    int conductor_;
    std::vector<Rational> coeffs_;  // length phi(conductor_)
};

inline CycNum to_cyc(const RootFraction& r) { return CycNum::from_root(r); }

}  // namespace braidcong
