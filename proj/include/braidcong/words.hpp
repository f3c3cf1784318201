#pragma once

#include <braidcong/matrix.hpp>

#include <string>
#include <vector>

namespace braidcong {

// Words in the generators T = [[1,1],[0,1]] and U = [[1,0],[1,1]] of PSL(2,Z).
// Stored in the normal form of a free group: nonzero exponents, no adjacent
// letters on the same generator.
enum class Gen { T, U };

struct Letter {
    Gen gen;
    long long exp;
    bool operator==(const Letter&) const = default;
};

class GroupWord {
public:
    GroupWord() = default;

    static GroupWord identity() { return {}; }
    static GroupWord T(long long e = 1);
    static GroupWord U(long long e = 1);
    // S = T U^-1 T, the standard order-two element.
    static GroupWord S();

    GroupWord operator*(const GroupWord& rhs) const;
    GroupWord inverse() const;
    GroupWord pow(long long e) const;
    static GroupWord commutator(const GroupWord& a, const GroupWord& b);  // a b a^-1 b^-1
    static GroupWord conjugate(const GroupWord& g, const GroupWord& h);   // h^-1 g h

    bool is_empty() const { return letters_.empty(); }
    // Total letter count, sum of |exponent|.
    long long length() const;
    const std::vector<Letter>& letters() const { return letters_; }
    bool operator==(const GroupWord&) const = default;

    std::string str() const;  // "T^6 U^-1 T"; the empty word prints "1"

    // Grammar: sequence of factors; factor = T | U | S | (expr) | [expr, expr],
    // each optionally followed by ^<integer>. S expands to T U^-1 T.
    static GroupWord parse(const std::string& text);

private:
    void push(Gen g, long long e);
    std::vector<Letter> letters_;
};

// The word evaluated in a 2x2 or 3x3 representation with T -> X, U -> Y.
CycMatrix evaluate_word(const GroupWord& w, const CycMatrix& X, const CycMatrix& Y);

// The word evaluated literally in SL(2, Z/N) with closed-form generator powers
// T^k = [[1,k],[0,1]], U^k = [[1,0],[k,1]]. Entries reduced mod N throughout.
struct IntMat2 {
    long long a = 1, b = 0, c = 0, d = 1;
    bool operator==(const IntMat2&) const = default;
};
IntMat2 evaluate_word_integer(const GroupWord& w, long long N);

// True when the word is +-identity mod N, i.e. trivial in PSL(2, Z/N).
bool word_is_identity_mod(const GroupWord& w, long long N);

// Normal generating set for the principal congruence subgroup of level N,
// split by the parity structure of N. N = 1 yields no words (level one is
// the whole group).
struct HsuWord {
    std::string name;  // display form, e.g. "[x,w]" with x,w spelled in T,U
    GroupWord word;
};

struct HsuData {
    long long N = 1;
    long long e = 1, k = 1;       // N = e*k, e a power of two, k odd
    long long c = 0, d = 0;       // branch (iii) CRT constants, else 0
    long long tN = 0, fN = 0;     // inverses of 2 and 5 where defined, else 0
    int branch = 0;               // 0: N=1, 1: odd, 2: power of two, 3: mixed
    std::vector<HsuWord> words;   // listing order is the reporting order
};

HsuData hsu_generators(long long N);

}  // namespace braidcong
