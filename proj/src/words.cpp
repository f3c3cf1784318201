#include <braidcong/words.hpp>

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace braidcong {

// ---------------------------------------------------------------- GroupWord

void GroupWord::push(Gen g, long long e) {
    if (e == 0) return;
    if (!letters_.empty() && letters_.back().gen == g) {
        letters_.back().exp += e;
        if (letters_.back().exp == 0) letters_.pop_back();
        return;
    }
    letters_.push_back({g, e});
}

GroupWord GroupWord::T(long long e) {
    GroupWord w;
    w.push(Gen::T, e);
    return w;
}

GroupWord GroupWord::U(long long e) {
    GroupWord w;
    w.push(Gen::U, e);
    return w;
}

GroupWord GroupWord::S() { return T() * U(-1) * T(); }

GroupWord GroupWord::operator*(const GroupWord& rhs) const {
    GroupWord out = *this;
    for (const Letter& l : rhs.letters_) out.push(l.gen, l.exp);
    return out;
}

GroupWord GroupWord::inverse() const {
    GroupWord out;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push(it->gen, -it->exp);
    return out;
}

GroupWord GroupWord::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    GroupWord out;
    for (long long i = 0; i < e; ++i) out = out * (*this);
    return out;
}

GroupWord GroupWord::commutator(const GroupWord& a, const GroupWord& b) {
    return a * b * a.inverse() * b.inverse();
}

GroupWord GroupWord::conjugate(const GroupWord& g, const GroupWord& h) {
    return h.inverse() * g * h;
}

long long GroupWord::length() const {
    long long n = 0;
    for (const Letter& l : letters_) n += l.exp < 0 ? -l.exp : l.exp;
    return n;
}

std::string GroupWord::str() const {
    if (letters_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const Letter& l : letters_) {
        if (!first) os << " ";
        os << (l.gen == Gen::T ? "T" : "U");
        if (l.exp != 1) os << "^" << l.exp;
        first = false;
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }

    void expect(char c) {
        skip_ws();
        if (pos >= s.size() || s[pos] != c)
            throw std::invalid_argument("word parse error: expected '" + std::string(1, c) +
                                        "' at position " + std::to_string(pos));
        ++pos;
    }

    long long integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits)
            throw std::invalid_argument("word parse error: expected integer at position " +
                                        std::to_string(start));
        return std::stoll(s.substr(start, pos - start));
    }

    GroupWord factor() {
        skip_ws();
        if (pos >= s.size()) throw std::invalid_argument("word parse error: unexpected end");
        char c = s[pos];
        GroupWord base;
        if (c == 'T') { ++pos; base = GroupWord::T(); }
        else if (c == 'U') { ++pos; base = GroupWord::U(); }
        else if (c == 'S') { ++pos; base = GroupWord::S(); }
        else if (c == '1') { ++pos; }  // the empty word prints "1"
        else if (c == '(') {
            ++pos;
            base = expr();
            expect(')');
        } else if (c == '[') {
            ++pos;
            GroupWord a = expr();
            expect(',');
            GroupWord b = expr();
            expect(']');
            base = GroupWord::commutator(a, b);
        } else {
            throw std::invalid_argument("word parse error: unexpected character '" +
                                        std::string(1, c) + "' at position " + std::to_string(pos));
        }
        skip_ws();
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            base = base.pow(integer());
        }
        return base;
    }

    GroupWord expr() {
        GroupWord out;
        while (true) {
            skip_ws();
            if (pos >= s.size() || s[pos] == ')' || s[pos] == ']' || s[pos] == ',') return out;
            out = out * factor();
        }
    }
};

}  // namespace

GroupWord GroupWord::parse(const std::string& text) {
    Parser p(text);
    GroupWord w = p.expr();
    p.skip_ws();
    if (p.pos != text.size())
        throw std::invalid_argument("word parse error: trailing input at position " +
                                    std::to_string(p.pos));
    return w;
}

// ---------------------------------------------------------------- evaluation

CycMatrix evaluate_word(const GroupWord& w, const CycMatrix& X, const CycMatrix& Y) {
    CycMatrix out = CycMatrix::identity(X.dim());
    for (const Letter& l : w.letters()) {
        const CycMatrix& g = (l.gen == Gen::T) ? X : Y;
        out = out * g.pow(l.exp);
    }
    return out;
}

namespace {

long long modp(long long v, long long N) { return ((v % N) + N) % N; }

IntMat2 mat_mul_mod(const IntMat2& m, const IntMat2& n, long long N) {
    return IntMat2{modp(m.a * n.a + m.b * n.c, N), modp(m.a * n.b + m.b * n.d, N),
                   modp(m.c * n.a + m.d * n.c, N), modp(m.c * n.b + m.d * n.d, N)};
}

}  // namespace

IntMat2 evaluate_word_integer(const GroupWord& w, long long N) {
    if (N < 1) throw std::invalid_argument("modulus must be >= 1");
    IntMat2 out;  // identity
    for (const Letter& l : w.letters()) {
        long long k = modp(l.exp, N);
        IntMat2 g = (l.gen == Gen::T) ? IntMat2{1, k, 0, 1} : IntMat2{1, 0, k, 1};
        out = mat_mul_mod(out, g, N);
    }
    return out;
}

bool word_is_identity_mod(const GroupWord& w, long long N) {
    IntMat2 m = evaluate_word_integer(w, N);
    IntMat2 id{1, 0, 0, 1};
    IntMat2 neg{modp(-1, N), 0, 0, modp(-1, N)};
    return m == id || m == neg;
}

// ---------------------------------------------------------------- Hsu words

HsuData hsu_generators(long long N) {
    if (N < 1) throw std::invalid_argument("hsu_generators: N must be >= 1");
    HsuData data;
    data.N = N;
    long long e = 1, k = N;
    while (k % 2 == 0) { e *= 2; k /= 2; }
    data.e = e;
    data.k = k;
    if (N == 1) {
        data.branch = 0;
        return data;
    }

    using W = GroupWord;
    const W T = W::T(), U = W::U();

    if (e == 1) {
        // N odd.
        data.branch = 1;
        data.tN = mod_inverse(2, N);
        data.words.push_back({"T^" + std::to_string(N), T.pow(N)});
        W body = U.pow(2) * T.pow(-data.tN);
        data.words.push_back({"(U^2 T^-" + std::to_string(data.tN) + ")^3", body.pow(3)});
        return data;
    }

    if (k == 1) {
        // N a power of two.
        data.branch = 2;
        data.fN = mod_inverse(5, N);
        W P = T.pow(20) * U.pow(data.fN) * T.pow(-4) * U.inverse();
        W s = T * U.inverse() * T;
        data.words.push_back({"T^" + std::to_string(N), T.pow(N)});
        data.words.push_back({"(P U^5 T U^-1 T)^3", (P * U.pow(5) * T * U.inverse() * T).pow(3)});
        data.words.push_back({"(T U^-1 T)^-1 P (T U^-1 T) P", s.inverse() * P * s * P});
        return data;
    }

    // N even with an odd part: CRT constants pick out the two prime-power legs.
    data.branch = 3;
    data.c = crt_pair(0, e, 1, k);
    data.d = crt_pair(1, e, 0, k);
    data.tN = mod_inverse(2, k);
    data.fN = mod_inverse(5, e);
    W x = T.pow(data.c), y = U.pow(data.c), z = T.pow(data.d), w = U.pow(data.d);
    W p = z.pow(20) * w.pow(data.fN) * z.pow(-4) * w.inverse();
    W xyx = x * y.inverse() * x;
    W zwz = z * w.inverse() * z;
    data.words.push_back({"T^" + std::to_string(N), T.pow(N)});
    data.words.push_back({"[x,w]", W::commutator(x, w)});
    data.words.push_back({"(x y^-1 x)^4", xyx.pow(4)});
    data.words.push_back({"(x y^-1 x)^2 (x^-1 y)^3", xyx.pow(2) * (x.inverse() * y).pow(3)});
    data.words.push_back({"(x y^-1 x)^2 (x^t y^-2)^3",
                          xyx.pow(2) * (x.pow(data.tN) * y.pow(-2)).pow(3)});
    data.words.push_back({"(z w^-1 z)^2 (p w^5 z w^-1 z)^-3",
                          zwz.pow(2) * (p * w.pow(5) * z * w.inverse() * z).pow(-3)});
    data.words.push_back({"(z w^-1 z)^-1 p (z w^-1 z) p", zwz.inverse() * p * zwz * p});
    data.words.push_back({"w^25 p w^-1 p^-1", w.pow(25) * p * w.inverse() * p.inverse()});
    return data;
}

}  // namespace braidcong
