#pragma once

#include <braidcong/matrix.hpp>
#include <braidcong/rootfrac.hpp>

#include <optional>
#include <string>
#include <vector>

namespace braidcong {

// Eigenvalue data for the image of the first braid generator: each entry k/n
// stands for e^{2 pi i k/n}. Dimension 2 or 3.
struct RepSpec {
    int dim = 2;
    std::vector<RootFraction> eigs;

    static RepSpec of(std::vector<RootFraction> eigs);
    bool operator==(const RepSpec&) const = default;
    std::string str() const;  // "(1/4, 3/4)"
};

// A representation of the three-strand braid group by exact matrices:
// A, B are the images of the two generators, satisfying A B A = B A B.
struct BraidRep {
    int dim = 2;
    CycMatrix A{2}, B{2};
    std::vector<CycNum> eigs;  // spectrum of A, in template order

    bool braid_relation_holds() const;
};

// True unless the eigenvalues lie on the reducibility locus:
// dim 2: lambda_1^2 - lambda_1 lambda_2 + lambda_2^2 = 0
// dim 3: lambda_j^2 + lambda_k lambda_l = 0 for some {j,k,l} = {1,2,3}.
bool is_irreducible(const std::vector<CycNum>& eigs);
bool is_irreducible(const RepSpec& spec);

// The triangular-pair model of the irreducible representation with the given
// spectrum. Throws std::domain_error on the reducibility locus; asserts the
// braid relation on the result.
BraidRep tw_construct(const std::vector<CycNum>& eigs);
BraidRep tw_construct(const RepSpec& spec);

// The scalar by which the center's generator (the full twist) acts: (AB)^3 = c*I.
// Throws std::logic_error if (AB)^3 is not scalar (it always is for irreducibles).
CycNum central_scalar(const BraidRep& rep);

// The representation kills the center, i.e. descends to the modular group.
bool factors_through_modular(const BraidRep& rep);

// Least t >= 1 with lambda_1^t = ... = lambda_d^t; nullopt when some ratio of
// eigenvalues is not a root of unity.
std::optional<long long> projective_order(const std::vector<CycNum>& eigs);
long long projective_order(const RepSpec& spec);

enum class ImageClass { Finite, Infinite, Indeterminate };
std::string to_string(ImageClass c);

struct ClassifyResult {
    ImageClass cls = ImageClass::Indeterminate;
    long long po = 0;        // projective order of the spectrum
    std::string reason;      // which eigenvalue criterion fired
};

// Finite/infinite image test by eigenvalue data alone, for irreducible
// representations. Indeterminate when no criterion applies (callers may fall
// back to explicit group closure).
ClassifyResult classify_image(const RepSpec& spec);

// Rescaling by a scalar theta so the center dies: theta^6 = conj(c) where c is
// the central scalar. All six choices work; the default policy picks the theta
// e^{2 pi i s/m} with the smallest angle s/m in [0, 1).
struct Scaling {
    RootFraction theta;
    BraidRep rep;                 // theta * A, theta * B
    RepSpec scaled_spec;          // spectrum of the scaled A
};

// The six admissible thetas in angle order (smallest first). Throws
// std::domain_error when the central scalar is not a root of unity.
std::vector<RootFraction> admissible_thetas(const BraidRep& rep);

// Scale by the given theta if provided (validated to kill the center),
// otherwise by the smallest-angle policy.
Scaling scale_to_modular(const BraidRep& rep,
                         std::optional<RootFraction> theta = std::nullopt);

}  // namespace braidcong
