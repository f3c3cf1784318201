#pragma once

#include <braidcong/rational.hpp>

#include <string>
#include <vector>

namespace braidcong {

// Dense polynomial over Z, coefficient of x^i at coeffs()[i].
// Invariant: no trailing zero coefficients; the zero polynomial has empty storage.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs);
    static IntPolynomial monomial(int degree, const Int& c = 1);

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    const Int& coeff(int i) const;
    const Int& leading() const;

    IntPolynomial operator+(const IntPolynomial& rhs) const;
    IntPolynomial operator-(const IntPolynomial& rhs) const;
    IntPolynomial operator*(const IntPolynomial& rhs) const;
    bool operator==(const IntPolynomial& rhs) const = default;

    // Exact division; throws if rhs does not divide *this over Z.
    IntPolynomial divexact(const IntPolynomial& rhs) const;

    std::string str() const;

private:
    void trim();
    std::vector<Int> coeffs_;
};

// x^n - 1.
IntPolynomial x_pow_minus_one(int n);

// The n-th cyclotomic polynomial, computed by peeling divisors off x^n - 1.
// Results are cached; n >= 1.
const IntPolynomial& cyclotomic_polynomial(int n);

// Euler totient, the degree of the n-th cyclotomic polynomial.
int totient(int n);

// Sorted list of the positive divisors of n.
std::vector<int> divisors(int n);

}  // namespace braidcong
