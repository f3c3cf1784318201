#include <braidcong/matrix.hpp>

#include <sstream>
#include <stdexcept>

namespace braidcong {

CycMatrix::CycMatrix(int dim) : dim_(dim), a_(dim * dim, CycNum(0)) {
    if (dim != 2 && dim != 3) throw std::invalid_argument("matrix dimension must be 2 or 3");
}

CycMatrix CycMatrix::identity(int dim) {
    CycMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = CycNum(1);
    return m;
}

CycMatrix CycMatrix::from_rows(const std::vector<std::vector<CycNum>>& rows) {
    int d = static_cast<int>(rows.size());
    CycMatrix m(d);
    for (int i = 0; i < d; ++i) {
        if (static_cast<int>(rows[i].size()) != d)
            throw std::invalid_argument("matrix rows must be square");
        for (int j = 0; j < d; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

CycMatrix CycMatrix::operator*(const CycMatrix& rhs) const {
    if (dim_ != rhs.dim_) throw std::invalid_argument("dimension mismatch");
    CycMatrix out(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            CycNum s(0);
            for (int k = 0; k < dim_; ++k) s = s + at(i, k) * rhs.at(k, j);
            out.at(i, j) = s;
        }
    return out;
}

CycMatrix CycMatrix::operator*(const CycNum& scalar) const {
    CycMatrix out(dim_);
    for (int i = 0; i < dim_ * dim_; ++i) out.a_[i] = a_[i] * scalar;
    return out;
}

bool CycMatrix::operator==(const CycMatrix& rhs) const {
    if (dim_ != rhs.dim_) return false;
    for (int i = 0; i < dim_ * dim_; ++i)
        if (a_[i] != rhs.a_[i]) return false;
    return true;
}

CycNum CycMatrix::det() const {
    if (dim_ == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
           at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
           at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

CycMatrix CycMatrix::inverse() const {
    CycNum d = det();
    if (d.is_zero()) throw std::domain_error("matrix is singular");
    CycNum dinv = d.inverse();
    CycMatrix out(dim_);
    if (dim_ == 2) {
        out.at(0, 0) = at(1, 1) * dinv;
        out.at(0, 1) = -at(0, 1) * dinv;
        out.at(1, 0) = -at(1, 0) * dinv;
        out.at(1, 1) = at(0, 0) * dinv;
        return out;
    }
    // Adjugate: cofactor transpose.
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
            int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
            // Cyclic complements keep the cofactor sign positive.
            out.at(j, i) = (at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0)) * dinv;
        }
    return out;
}

CycMatrix CycMatrix::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    CycMatrix result = identity(dim_);
    CycMatrix base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = (e >>= 1) > 0 ? base * base : base;
    }
    return result;
}

CycMatrix CycMatrix::transpose() const {
    CycMatrix out(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool CycMatrix::is_identity() const { return *this == identity(dim_); }

std::optional<CycNum> CycMatrix::as_scalar() const {
    const CycNum& c = at(0, 0);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            if (i == j && at(i, j) != c) return std::nullopt;
            if (i != j && !at(i, j).is_zero()) return std::nullopt;
        }
    return c;
}

bool CycMatrix::is_upper_triangular() const {
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < i; ++j)
            if (!at(i, j).is_zero()) return false;
    return true;
}

bool CycMatrix::is_lower_triangular() const {
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j)
            if (!at(i, j).is_zero()) return false;
    return true;
}

std::optional<CycVector> CycMatrix::diag_spectrum() const {
    if (!is_upper_triangular() && !is_lower_triangular()) return std::nullopt;
    CycVector v;
    for (int i = 0; i < dim_; ++i) v.push_back(at(i, i));
    return v;
}

CycVector CycMatrix::apply_col(const CycVector& v) const {
    if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("dimension mismatch");
    CycVector out(dim_, CycNum(0));
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) out[i] = out[i] + at(i, j) * v[j];
    return out;
}

CycVector CycMatrix::apply_row(const CycVector& v) const {
    if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("dimension mismatch");
    CycVector out(dim_, CycNum(0));
    for (int j = 0; j < dim_; ++j)
        for (int i = 0; i < dim_; ++i) out[j] = out[j] + v[i] * at(i, j);
    return out;
}

std::optional<long long> CycMatrix::order(long long cap) const {
    if (auto spec = diag_spectrum()) {
        bool roots = true;
        long long candidate = 1;
        for (const CycNum& ev : *spec) {
            auto r = ev.as_root_of_unity();
            if (!r) { roots = false; break; }
            candidate = lcm_ll(candidate, r->order());
        }
        if (roots && pow(candidate).is_identity()) {
            // candidate is the exact order: any order divides it only if it is
            // a multiple of each eigenvalue order, and candidate is the least.
            return candidate;
        }
    }
    CycMatrix p = *this;
    for (long long k = 1; k <= cap; ++k) {
        if (p.is_identity()) return k;
        p = p * (*this);
    }
    return std::nullopt;
}

CycMatrix CycMatrix::promote(int m) const {
    CycMatrix out(dim_);
    for (int i = 0; i < dim_ * dim_; ++i) out.a_[i] = a_[i].promote(m);
    return out;
}

int CycMatrix::common_conductor() const {
    long long l = 1;
    for (const CycNum& c : a_) l = lcm_ll(l, c.conductor());
    return static_cast<int>(l);
}

std::string CycMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < dim_; ++i) {
        os << (i == 0 ? "[" : " ") << "[";
        for (int j = 0; j < dim_; ++j) os << (j ? ", " : "") << at(i, j).str();
        os << "]" << (i + 1 == dim_ ? "]" : "\n");
    }
    return os.str();
}

CycMatrix commutator(const CycMatrix& A, const CycMatrix& B) {
    return A * B * A.inverse() * B.inverse();
}

bool vectors_equal(const CycVector& v, const CycVector& w) {
    if (v.size() != w.size()) return false;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != w[i]) return false;
    return true;
}

CycVector scale(const CycNum& c, const CycVector& v) {
    CycVector out;
    out.reserve(v.size());
    for (const CycNum& x : v) out.push_back(c * x);
    return out;
}

}  // namespace braidcong
