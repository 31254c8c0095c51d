#ifndef GALFORM_ETALE_HPP
#define GALFORM_ETALE_HPP

#include "galform/groups.hpp"
#include "galform/linalg.hpp"
#include "galform/mpoly.hpp"
#include "galform/poly.hpp"

namespace galform {

/// Point of the polynomial family attached to a finite group: a monic f of
/// degree m = |gamma|, root maps h_i, and the exact-division certificates
/// d_i, e_{i,j} for the separability, root-preservation and group-law
/// conditions.
struct FamilyPoint {
    Field base;
    FiniteGroup gamma;
    Poly f;
    std::vector<Poly> h;
    std::vector<Poly> d;
    std::vector<std::vector<Poly>> e;
};

struct VerifyReport {
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};

/// Cyclic point over F_{p^q_degree} with f the canonical irreducible of
/// degree m and h_i the Frobenius powers.
FamilyPoint construct_point_finite_field(unsigned long p, int q_degree, int m);

/// Point over the rationals from caller-supplied conjugate polynomials,
/// one per group element (identity must reduce to x mod f).
FamilyPoint construct_point_rational(const Poly& f, const std::vector<Poly>& conjugates,
                                     const FiniteGroup& gamma);

/// Shortcut for the ell-th cyclotomic field, ell an odd prime: the conjugates
/// of a primitive root of unity are its powers.
FamilyPoint construct_point_cyclotomic(unsigned long ell);

/// Checks: (a) Res(f, f') invertible; (b) f d_i = f compose h_i; (c)
/// f e_{i,j} = h_i compose h_j - h_{mu(i,j)}; degree bounds; (d) the fixed
/// subalgebra of F[z]/(f) is one dimensional.
VerifyReport verify_family_point(const FamilyPoint& pt);

/// F[z]/(f) with the group acting by z -> h_i(z).
struct EtaleAlgebra {
    Field base;
    Poly f;
    FiniteGroup gamma;
    std::vector<Poly> action;  // reduced mod f

    long dimension() const { return f.degree(); }
};

EtaleAlgebra fiber_algebra(const FamilyPoint& pt);

/// F-basis of the fixed subalgebra, as coefficient vectors in 1, z, ..,
/// z^{m-1}.
std::vector<std::vector<FieldElement>> invariant_subalgebra(const EtaleAlgebra& alg);

/// Matrix of x -> h(x) mod f on the monomial basis, columns = images.
FieldMatrix action_matrix(const EtaleAlgebra& alg, const Poly& h);

struct TensorSplit {
    long components = 0;
    std::vector<std::vector<int>> perm;  // per group element
    bool transitive = false;
};

/// Decomposition of alg tensored up to ext into copies of ext, with the
/// induced permutation of components. ext is a finite field containing a
/// splitting field of f, or the abstract extension by f itself (p = 0).
TensorSplit tensor_split(const EtaleAlgebra& alg, const Field& ext);

/// Presentations of the family ring (coefficients + inversion variable u)
/// and of its universal etale algebra (extra variable z with f(z) = 0).
std::pair<Presentation, Presentation> emit_presentation(const FiniteGroup& gamma);

/// The coefficient tuple of a point in emit_presentation's variable order;
/// u is set to the inverse of Res(f, f').
std::vector<FieldElement> point_to_tuple(const FamilyPoint& pt);

}  // namespace galform

#endif
