#ifndef GALFORM_ROOTDATA_HPP
#define GALFORM_ROOTDATA_HPP

#include "galform/groups.hpp"
#include "galform/intmatrix.hpp"

namespace galform {

/// Root datum (X, Phi, Xv, Phiv) in coordinates of a chosen basis of X;
/// roots[i] pairs with coroots[i], and the pairing of coordinate vectors is
/// the standard dot product.
struct RootDatum {
    long rank = 0;
    std::vector<std::vector<Int>> roots;
    std::vector<std::vector<Int>> coroots;
};

struct BasedRootDatum {
    RootDatum datum;
    std::vector<long> base;  // indices of the simple roots
    std::string name;
};

/// Automorphism of a based root datum: a unimodular matrix on X preserving
/// Phi, Delta and (via inverse transpose) Phiv.
struct BasedAut {
    IntMatrix matrix;
    std::vector<long> base_permutation;
    bool operator==(const BasedAut& o) const { return matrix == o.matrix; }
};

/// The full group Aut(X, Delta) with a composition table; element 0 is the
/// identity.
struct BasedAutGroup {
    std::vector<BasedAut> elements;
    FiniteGroup table;  // same indexing as elements
};

/// Empty report means the axioms hold.
std::vector<std::string> validate_root_datum(const RootDatum& d);

RootDatum dual_root_datum(const RootDatum& d);

/// One based datum per isomorphism class of rank exactly n; n <= 2.
std::vector<BasedRootDatum> enumerate_root_data(long n);

/// Throws when the automorphism group is infinite (torus rank 2).
BasedAutGroup based_automorphism_group(const BasedRootDatum& b);

/// Full isomorphism search between root data (ignoring bases); complete at
/// rank <= 2, where non-existence is certified by invariants.
bool root_data_isomorphic(const RootDatum& a, const RootDatum& b);

/// Conjugacy classes of homomorphisms Gamma -> GL_r(Z) for a rank-r torus
/// datum, r <= 2; each class is the list of generator images following
/// generating_set(gamma). Only cyclic gamma is supported at r = 2.
std::vector<std::vector<IntMatrix>> torus_hom_classes(const FiniteGroup& gamma, long r);

/// Action of every automorphism in aut on the roots, as index permutations.
std::vector<std::vector<long>> root_permutations(const BasedRootDatum& b,
                                                 const BasedAutGroup& aut);

}  // namespace galform

#endif
