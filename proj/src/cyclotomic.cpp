#include <braidcong/cyclotomic.hpp>

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace braidcong {

// ---------------------------------------------------------------- RootFraction

RootFraction RootFraction::of(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("RootFraction: zero denominator");
    if (den < 0) { den = -den; num = -num; }
    num %= den;
    if (num < 0) num += den;
    long long g = std::gcd(num, den);
    return RootFraction{num / g, den / g};
}

RootFraction RootFraction::operator*(const RootFraction& rhs) const {
    return of(num * rhs.den + rhs.num * den, den * rhs.den);
}

RootFraction RootFraction::operator/(const RootFraction& rhs) const {
    return of(num * rhs.den - rhs.num * den, den * rhs.den);
}

RootFraction RootFraction::inverse() const { return of(-num, den); }

RootFraction RootFraction::pow(long long e) const { return of(num * e, den); }

bool RootFraction::angle_less(const RootFraction& rhs) const {
    return num * rhs.den < rhs.num * den;
}

std::string RootFraction::str() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

RootFraction RootFraction::parse(const std::string& text) {
    size_t slash = text.find('/');
    try {
        size_t used = 0;
        if (slash == std::string::npos) {
            long long k = std::stoll(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return of(k, 1);
        }
        long long k = std::stoll(text.substr(0, slash), &used);
        if (used != slash) throw std::invalid_argument(text);
        long long n = std::stoll(text.substr(slash + 1), &used);
        if (used != text.size() - slash - 1) throw std::invalid_argument(text);
        return of(k, n);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse root fraction '" + text + "' (expected k/n)");
    }
}

long long lcm_order(const std::vector<RootFraction>& roots) {
    long long l = 1;
    for (const auto& r : roots) l = lcm_ll(l, r.order());
    return l;
}

// ---------------------------------------------------------------- field tables

namespace {

struct FieldTable {
    int n = 1;
    int deg = 1;
    // power[k] = coefficients of x^k mod Phi_n, k = 0 .. max(2*deg, n).
    std::vector<std::vector<Int>> power;
};

const FieldTable& field_table(int n) {
    static std::map<int, FieldTable> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    FieldTable t;
    t.n = n;
    const IntPolynomial& phi = cyclotomic_polynomial(n);
    t.deg = phi.degree();
    int rows = std::max(2 * t.deg, n) + 1;
    t.power.reserve(rows);
    for (int k = 0; k < rows; ++k) {
        std::vector<Int> row(t.deg, Int(0));
        if (k < t.deg) {
            row[k] = 1;
        } else {
            // x * power[k-1], reduced by the monic Phi_n.
            const std::vector<Int>& prev = t.power[k - 1];
            Int carry = prev[t.deg - 1];
            for (int i = t.deg - 1; i >= 1; --i) row[i] = prev[i - 1];
            row[0] = 0;
            if (carry != 0)
                for (int i = 0; i < t.deg; ++i) row[i] -= carry * phi.coeff(i);
        }
        t.power.push_back(std::move(row));
    }
    return cache.emplace(n, std::move(t)).first->second;
}

std::atomic<int> g_conductor_cap{360};

void check_cap(int wanted) {
    int cap = g_conductor_cap.load();
    if (wanted > cap) throw ConductorCapExceeded(wanted, cap);
}

// Minimal rational-coefficient polynomial helpers for the inverse computation.
using RatPoly = std::vector<Rational>;  // coefficient of x^i at [i]

void rp_trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly rp_mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly out(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    rp_trim(out);
    return out;
}

RatPoly rp_sub(const RatPoly& a, const RatPoly& b) {
    RatPoly out(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    rp_trim(out);
    return out;
}

// a = q*b + r with deg r < deg b. The leading term cancels exactly each pass,
// so r strictly shrinks and the loop terminates.
void rp_divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    r = a;
    rp_trim(r);
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational(0));
    while (r.size() >= b.size()) {
        Rational c = r.back() / b.back();
        size_t shift = r.size() - b.size();
        q[shift] += c;
        for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
        rp_trim(r);
    }
    rp_trim(q);
}

}  // namespace

ConductorCapExceeded::ConductorCapExceeded(int wanted_, int cap_)
    : std::runtime_error("conductor " + std::to_string(wanted_) +
                         " exceeds cap " + std::to_string(cap_)),
      wanted(wanted_),
      cap(cap_) {}

int conductor_cap() { return g_conductor_cap.load(); }

void set_conductor_cap(int cap) {
    if (cap < 1) throw std::invalid_argument("conductor cap must be >= 1");
    g_conductor_cap.store(cap);
}

// ---------------------------------------------------------------- CycNum

CycNum::CycNum(int conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {}

CycNum CycNum::root_of_unity(long long k, long long n) {
    if (n < 1) throw std::invalid_argument("root_of_unity: n must be >= 1");
    check_cap(static_cast<int>(n));
    const FieldTable& t = field_table(static_cast<int>(n));
    long long e = ((k % n) + n) % n;
    std::vector<Rational> coeffs(t.deg, Rational(0));
    const std::vector<Int>& row = t.power[static_cast<size_t>(e)];
    for (int i = 0; i < t.deg; ++i) coeffs[i] = Rational(row[i]);
    return CycNum(static_cast<int>(n), std::move(coeffs));
}

bool CycNum::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool CycNum::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational CycNum::rational_value() const {
    if (!is_rational()) throw std::domain_error("element is not rational");
    return coeffs_[0];
}

CycNum CycNum::promote(int m) const {
    if (m == conductor_) return *this;
    if (m < 1 || m % conductor_ != 0)
        throw std::invalid_argument("promote: target conductor must be a multiple of the current one");
    check_cap(m);
    const FieldTable& t = field_table(m);
    int r = m / conductor_;
    std::vector<Rational> out(t.deg, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        const std::vector<Int>& row = t.power[i * r];
        for (int j = 0; j < t.deg; ++j)
            if (row[j] != 0) out[j] += coeffs_[i] * Rational(row[j]);
    }
    return CycNum(m, std::move(out));
}

void CycNum::align(CycNum& a, CycNum& b) {
    if (a.conductor_ == b.conductor_) return;
    long long l = lcm_ll(a.conductor_, b.conductor_);
    a = a.promote(static_cast<int>(l));
    b = b.promote(static_cast<int>(l));
}

CycNum CycNum::operator+(const CycNum& rhs) const {
    CycNum a = *this, b = rhs;
    align(a, b);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    return a;
}

CycNum CycNum::operator-(const CycNum& rhs) const {
    CycNum a = *this, b = rhs;
    align(a, b);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] -= b.coeffs_[i];
    return a;
}

CycNum CycNum::operator-() const {
    CycNum a = *this;
    for (auto& c : a.coeffs_) c = -c;
    return a;
}

CycNum CycNum::operator*(const CycNum& rhs) const {
    CycNum a = *this, b = rhs;
    align(a, b);
    const FieldTable& t = field_table(a.conductor_);
    int deg = t.deg;
    std::vector<Rational> conv(2 * deg - 1, Rational(0));
    for (int i = 0; i < deg; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (int j = 0; j < deg; ++j)
            if (b.coeffs_[j] != 0) conv[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    std::vector<Rational> out(deg, Rational(0));
    for (int k = 0; k < 2 * deg - 1; ++k) {
        if (conv[k] == 0) continue;
        if (k < deg) {
            out[k] += conv[k];
        } else {
            const std::vector<Int>& row = t.power[k];
            for (int i = 0; i < deg; ++i)
                if (row[i] != 0) out[i] += conv[k] * Rational(row[i]);
        }
    }
    return CycNum(a.conductor_, std::move(out));
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (is_rational()) {
        std::vector<Rational> out(coeffs_.size(), Rational(0));
        out[0] = 1 / coeffs_[0];
        return CycNum(conductor_, std::move(out));
    }
    // Extended Euclid in Q[x] between the coefficient polynomial and Phi_n:
    // s * a + t * Phi = gcd = nonzero constant, so a^{-1} = s / gcd.
    const IntPolynomial& phi = cyclotomic_polynomial(conductor_);
    RatPoly r0(phi.degree() + 1);
    for (int i = 0; i <= phi.degree(); ++i) r0[i] = Rational(phi.coeff(i));
    RatPoly r1 = coeffs_;
    rp_trim(r1);
    RatPoly s0{}, s1{Rational(1)};  // coefficients of the input polynomial
    while (!r1.empty()) {
        RatPoly q, r2;
        rp_divmod(r0, r1, q, r2);
        RatPoly s2 = rp_sub(s0, rp_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // Phi_n is irreducible over Q, so the gcd with any nonzero residue is constant.
    if (r0.size() != 1) throw std::logic_error("cyclotomic inverse: nonconstant gcd");
    std::vector<Rational> out(coeffs_.size(), Rational(0));
    for (size_t i = 0; i < s0.size() && i < out.size(); ++i) out[i] = s0[i] / r0[0];
    if (s0.size() > out.size()) throw std::logic_error("cyclotomic inverse: degree overflow");
    return CycNum(conductor_, std::move(out));
}

CycNum CycNum::conj() const {
    const FieldTable& t = field_table(conductor_);
    std::vector<Rational> out(t.deg, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        size_t e = (i == 0) ? 0 : static_cast<size_t>(conductor_) - i;
        const std::vector<Int>& row = t.power[e];
        for (int j = 0; j < t.deg; ++j)
            if (row[j] != 0) out[j] += coeffs_[i] * Rational(row[j]);
    }
    return CycNum(conductor_, std::move(out));
}

bool CycNum::operator==(const CycNum& rhs) const {
    if (conductor_ == rhs.conductor_) return coeffs_ == rhs.coeffs_;
    CycNum a = *this, b = rhs;
    align(a, b);
    return a.coeffs_ == b.coeffs_;
}

std::optional<RootFraction> CycNum::as_root_of_unity() const {
    const FieldTable& t = field_table(conductor_);
    // Roots of unity in Q(zeta_n) are exactly +-zeta_n^k.
    for (int sign = 0; sign < 2; ++sign) {
        for (int k = 0; k < conductor_; ++k) {
            const std::vector<Int>& row = t.power[k];
            bool match = true;
            for (int i = 0; i < t.deg && match; ++i) {
                if (sign == 0) match = (coeffs_[i] == Rational(row[i]));
                else match = (coeffs_[i] == -Rational(row[i]));
            }
            if (match) {
                if (sign == 0) return RootFraction::of(k, conductor_);
                return RootFraction::of(2LL * k + conductor_, 2LL * conductor_);
            }
        }
    }
    return std::nullopt;
}

std::string CycNum::str() const {
    if (auto r = as_root_of_unity()) {
        if (r->is_one()) return "1";
        if (*r == RootFraction::minus_one()) return "-1";
        return "e(" + r->str() + ")";
    }
    if (is_rational()) return coeffs_[0].get_str();
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "z" << conductor_;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace braidcong
