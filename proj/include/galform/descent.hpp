#ifndef GALFORM_DESCENT_HPP
#define GALFORM_DESCENT_HPP

#include "galform/etale.hpp"
#include "galform/intmatrix.hpp"
#include "galform/linalg.hpp"
#include "galform/rootdata.hpp"

namespace galform {

/// Supported matrix realizations: SL(n), PGL(n), split tori, and finite
/// products of those.
struct GroupSpec {
    enum class Kind { SL, PGL, Torus, Product };
    Kind kind = Kind::SL;
    long n = 0;     // SL/PGL
    long rank = 0;  // Torus
    std::vector<GroupSpec> factors;

    static GroupSpec sl(long n);
    static GroupSpec pgl(long n);
    static GroupSpec torus(long r);
    static GroupSpec product(std::vector<GroupSpec> fs);

    long matrix_size() const;
    /// Flattened atomic factor list (self if atomic).
    std::vector<GroupSpec> atoms() const;
    std::string str() const;
};

/// G(E) for E = F[z]/(f) a field over a prime base; elements are stored
/// explicitly as canonically scaled block-diagonal matrices over E, the
/// identity first and the rest in a fixed encoding order.
struct PointGroup {
    GroupSpec spec;
    EtaleAlgebra algebra;
    Field E;
    long msize = 0;
    std::vector<FieldMatrix> elements;
    std::vector<FieldElement> frob;  // per gamma element, the image h_i(z) in E

    FieldMatrix identity_element() const;
    /// PGL blocks are rescaled so the first nonzero entry is 1.
    FieldMatrix canonicalize(FieldMatrix x) const;
    FieldMatrix mul(const FieldMatrix& a, const FieldMatrix& b) const;
    FieldMatrix inv(const FieldMatrix& x) const;
    long index_of(const FieldMatrix& x) const;  // -1 when absent

    FieldElement semilinear(long g, const FieldElement& e) const;
    FieldMatrix semilinear_matrix(long g, const FieldMatrix& x) const;
};

/// Enumerates G(E) at the fiber of a family point; |G(E)| must stay within
/// the 10^6 cutoff (checked up front via the order formulas).
PointGroup point_group(const GroupSpec& spec, const FamilyPoint& pt);

/// Structure-level automorphism: a permutation of isomorphic factors, a
/// diagram flip per SL/PGL factor, a lattice map per torus factor.
struct StructuralAut {
    std::vector<long> perm;
    std::vector<char> flip;
    std::vector<IntMatrix> tmap;

    bool operator==(const StructuralAut&) const = default;
};

StructuralAut structural_identity(const GroupSpec& spec);
/// a after b, matching compose_aut's orientation on the outer part.
StructuralAut structural_compose(const StructuralAut& a, const StructuralAut& b);
StructuralAut structural_invert(const StructuralAut& a);

/// Automorphism of G(E) over F: x -> inner * outer(semilinear_g(x)) * inner^-1.
struct AutElement {
    FieldMatrix inner;
    StructuralAut outer;
    long semilinear = 0;
};

AutElement identity_aut(const PointGroup& G);
AutElement inner_aut(const PointGroup& G, const FieldMatrix& g);
AutElement semilinear_aut(const PointGroup& G, long g);
FieldMatrix apply_aut(const PointGroup& G, const AutElement& a, const FieldMatrix& x);
/// a then b is compose(a, b): x -> a(b(x)). The semilinear parts multiply by
/// the group table; exact for abelian gamma, which covers every constructor.
AutElement compose_aut(const PointGroup& G, const AutElement& a, const AutElement& b);
AutElement invert_aut(const PointGroup& G, const AutElement& a);
bool aut_acts_equally(const PointGroup& G, const AutElement& a, const AutElement& b);

/// The pinned automorphism realizing a diagram automorphism: for SL/PGL the
/// flip theta(x) = J x^-T J^-1 with J[i][n-1-i] = (-1)^i, for tori the
/// lattice map itself. Atomic specs only.
AutElement pinned_outer(const PointGroup& G, const BasedAut& a);
AutElement flip_aut(const PointGroup& G);
AutElement torus_aut(const PointGroup& G, const IntMatrix& m);

/// Twisting data: per gamma element a pinned automorphism alpha and a
/// cocycle value; the twisted action is c(g) o alpha(g) o semilinear_g.
struct TwistSpec {
    FiniteGroup gamma;
    std::vector<AutElement> alpha;
    std::vector<AutElement> cocycle;
};

TwistSpec trivial_twist(const PointGroup& G);

/// Empty report means alpha is a homomorphism and the twisted maps compose
/// by the gamma table (checked pointwise).
std::vector<std::string> validate_twist(const PointGroup& G, const TwistSpec& t);

/// {x : *_c(g)(x) = x for all g}; closure under products is re-verified.
std::vector<FieldMatrix> twisted_fixed_points(const PointGroup& G, const TwistSpec& t);

struct QuasiSplitResult {
    bool quasi_split = false;
    std::vector<FieldMatrix> borel;  // fixed points inside the standard Borel
};

/// True when every twisted map preserves the standard pinning: the block
/// upper-triangular Borel is stable and simple root vectors land on simple
/// root vectors. Tori are always quasi-split.
QuasiSplitResult is_quasi_split_twist(const PointGroup& G, const TwistSpec& t);

/// c(g) = a^-1 o g o a o g^-1 for an automorphism a of G(E).
std::vector<AutElement> induced_cocycle(const PointGroup& G, const AutElement& a);

/// G(F) inside G(E) via the constant embedding F -> E.
std::vector<FieldMatrix> embedded_rational_points(const PointGroup& G);

/// Element list with a multiplication table (identity at index 0).
struct TableGroup {
    FiniteGroup table;
    std::vector<FieldMatrix> elements;
};

TableGroup to_table_group(const PointGroup& G);
/// Permutation action of gamma on the point table by the semilinear maps.
GroupAction semilinear_permutation_action(const PointGroup& G, const TableGroup& tg);

long center_order(const PointGroup& G, const std::vector<FieldMatrix>& elems);
long abelianization_order(const PointGroup& G, const std::vector<FieldMatrix>& elems);

/// Regular-representation matrix of x over the prime subfield; block (i,j)
/// is the multiplication matrix of x[i][j]. det over F equals the norm of
/// det over E.
FieldMatrix restriction_matrix(const FieldMatrix& x);

}  // namespace galform

#endif
