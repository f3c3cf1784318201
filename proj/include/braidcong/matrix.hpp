#pragma once

#include <braidcong/cyclotomic.hpp>

#include <optional>
#include <string>
#include <vector>

namespace braidcong {

using CycVector = std::vector<CycNum>;

// Square matrix over a cyclotomic field, dimension 2 or 3.
class CycMatrix {
public:
    explicit CycMatrix(int dim);
    static CycMatrix identity(int dim);
    static CycMatrix from_rows(const std::vector<std::vector<CycNum>>& rows);

    int dim() const { return dim_; }
    const CycNum& at(int i, int j) const { return a_[i * dim_ + j]; }
    CycNum& at(int i, int j) { return a_[i * dim_ + j]; }

    CycMatrix operator*(const CycMatrix& rhs) const;
    CycMatrix operator*(const CycNum& scalar) const;
    bool operator==(const CycMatrix& rhs) const;
    bool operator!=(const CycMatrix& rhs) const { return !(*this == rhs); }

    CycNum det() const;
    CycMatrix inverse() const;        // adjugate over determinant; throws if singular
    CycMatrix pow(long long e) const; // repeated squaring; negative powers via inverse
    CycMatrix transpose() const;

    bool is_identity() const;
    // The scalar c with M = c*I, if M is scalar.
    std::optional<CycNum> as_scalar() const;

    bool is_upper_triangular() const;
    bool is_lower_triangular() const;
    // Diagonal entries, for triangular matrices only (they are the spectrum there).
    std::optional<CycVector> diag_spectrum() const;

    // M * v (column action) and v * M (row action).
    CycVector apply_col(const CycVector& v) const;
    CycVector apply_row(const CycVector& v) const;

    // Multiplicative order, at most `cap` (nullopt if it exceeds the cap).
    // Triangular matrices with root-of-unity diagonal use the eigenvalue-order
    // lcm as a candidate, verified by one exact powering.
    std::optional<long long> order(long long cap = 1000) const;

    // All entries promoted into Q(zeta_m); requires every conductor to divide m.
    CycMatrix promote(int m) const;
    // Smallest common conductor of the entries.
    int common_conductor() const;

    std::string str() const;

private:
    int dim_;
    std::vector<CycNum> a_;
};

CycMatrix commutator(const CycMatrix& A, const CycMatrix& B);  // A B A^-1 B^-1

bool vectors_equal(const CycVector& v, const CycVector& w);
CycVector scale(const CycNum& c, const CycVector& v);

}  // namespace braidcong
