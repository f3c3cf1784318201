#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace braidcong {

using Int = mpz_class;
using Rational = mpq_class;

// Canonical rational: lowest terms, positive denominator.
inline Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

inline long long lcm_ll(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    return a / std::gcd(a, b) * b;
}

// a^-1 mod n for gcd(a, n) = 1, result in [0, n).
inline long long mod_inverse(long long a, long long n) {
    if (n <= 0) throw std::invalid_argument("mod_inverse: modulus must be positive");
    long long r0 = n, r1 = ((a % n) + n) % n;
    long long s0 = 0, s1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1;
        long long s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw std::domain_error("mod_inverse: arguments not coprime");
    return ((s0 % n) + n) % n;
}

// Smallest x >= 0 with x = a mod m, x = b mod n, for coprime m, n.
inline long long crt_pair(long long a, long long m, long long b, long long n) {
    if (m <= 0 || n <= 0) throw std::invalid_argument("crt_pair: moduli must be positive");
    if (std::gcd(m, n) != 1) throw std::domain_error("crt_pair: moduli not coprime");
    long long mn = m * n;
    // x = a + m * t, t = (b - a) * m^-1 mod n
    long long t = (((b - a) % n + n) % n) * mod_inverse(m % n, n) % n;
    return ((a % mn + m % mn * t) % mn + mn) % mn;
}

}  // namespace braidcong
