#include <braidcong/intpoly.hpp>

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace braidcong {

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::monomial(int degree, const Int& c) {
    if (c == 0) return {};
    std::vector<Int> v(degree + 1, Int(0));
    v[degree] = c;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Int& IntPolynomial::coeff(int i) const {
    static const Int zero(0);
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[i];
}

const Int& IntPolynomial::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const {
    std::vector<Int> out(std::max(coeffs_.size(), rhs.coeffs_.size()), Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
    std::vector<Int> out(std::max(coeffs_.size(), rhs.coeffs_.size()), Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] -= rhs.coeffs_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return {};
    std::vector<Int> out(coeffs_.size() + rhs.coeffs_.size() - 1, Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::divexact(const IntPolynomial& rhs) const {
    if (rhs.is_zero()) throw std::domain_error("division by zero polynomial");
    std::vector<Int> rem = coeffs_;
    int dq = degree() - rhs.degree();
    if (dq < 0) {
        if (is_zero()) return {};
        throw std::domain_error("inexact polynomial division");
    }
    std::vector<Int> quot(dq + 1, Int(0));
    const Int& lead = rhs.leading();
    for (int k = dq; k >= 0; --k) {
        Int& top = rem[k + rhs.degree()];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            throw std::domain_error("inexact polynomial division");
        Int q = top / lead;
        quot[k] = q;
        for (int i = 0; i <= rhs.degree(); ++i) rem[k + i] -= q * rhs.coeffs_[i];
    }
    for (const Int& c : rem)
        if (c != 0) throw std::domain_error("inexact polynomial division");
    return IntPolynomial(std::move(quot));
}

std::string IntPolynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& c = coeffs_[i];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Int a = abs(c);
        if (i == 0 || a != 1) os << a.get_str();
        if (i > 0) os << "x";
        if (i > 1) os << "^" << i;
        first = false;
    }
    return os.str();
}

IntPolynomial x_pow_minus_one(int n) {
    std::vector<Int> v(n + 1, Int(0));
    v[0] = -1;
    v[n] = 1;
    return IntPolynomial(std::move(v));
}

std::vector<int> divisors(int n) {
    std::vector<int> small, large;
    for (int d = 1; static_cast<long long>(d) * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

int totient(int n) {
    int result = n, m = n;
    for (int p = 2; static_cast<long long>(p) * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

const IntPolynomial& cyclotomic_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be >= 1");
    static std::map<int, IntPolynomial> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // x^n - 1 = prod over d | n of Phi_d; divide out the proper divisors.
    IntPolynomial phi = x_pow_minus_one(n);
    for (int d : divisors(n)) {
        if (d == n) continue;
        // Recurse without re-locking: proper divisors resolve from the cache or inline.
        auto jt = cache.find(d);
        if (jt == cache.end()) {
            IntPolynomial sub = x_pow_minus_one(d);
            for (int e : divisors(d)) {
                if (e == d) continue;
                sub = sub.divexact(cache.at(e));  // e < d already computed in divisor order
            }
            jt = cache.emplace(d, std::move(sub)).first;
        }
        phi = phi.divexact(jt->second);
    }
    return cache.emplace(n, std::move(phi)).first->second;
}

}  // namespace braidcong
