#pragma once

#include <braidcong/rational.hpp>

#include <optional>
#include <string>
#include <vector>

namespace braidcong {

// A root of unity e^{2 pi i k/n} recorded as the reduced fraction k/n in [0, 1).
// Pure angle arithmetic; conversion to a field element lives in cyclotomic.hpp.
struct RootFraction {
    long long num = 0;
    long long den = 1;

    static RootFraction of(long long num, long long den);
    static RootFraction one() { return {}; }
    static RootFraction minus_one() { return {1, 2}; }

    RootFraction operator*(const RootFraction& rhs) const;  // add angles mod 1
    RootFraction operator/(const RootFraction& rhs) const;
    RootFraction inverse() const;
    RootFraction pow(long long e) const;

    // Multiplicative order of the root; the reduced denominator.
    long long order() const { return den; }
    bool is_one() const { return num == 0; }

    // Angle comparison in [0, 1): num/den < rhs.num/rhs.den.
    bool angle_less(const RootFraction& rhs) const;

    bool operator==(const RootFraction&) const = default;

    std::string str() const;  // "k/n"
    static RootFraction parse(const std::string& text);
};

// Least common multiple of the orders, i.e. order of the subgroup the roots generate.
long long lcm_order(const std::vector<RootFraction>& roots);

}  // namespace braidcong
