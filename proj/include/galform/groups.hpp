#ifndef GALFORM_GROUPS_HPP
#define GALFORM_GROUPS_HPP

#include <optional>
#include <string>
#include <vector>

#include "galform/field.hpp"

namespace galform {

/// Finite group as a multiplication table. Element 0 is the identity;
/// table[i][j] is the index of g_i g_j.
struct FiniteGroup {
    int order = 1;
    std::vector<std::vector<int>> table = {{0}};
    std::vector<std::string> labels = {"e"};
    std::string name = "1";

    int mul(int i, int j) const { return table[(size_t)i][(size_t)j]; }
    int inv(int i) const;
    int element_order(int i) const;
    int power(int i, long k) const;

    /// Group axioms; empty report means valid.
    std::vector<std::string> validate() const;
};

FiniteGroup trivial_group();
FiniteGroup cyclic_group(int n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
FiniteGroup dihedral_group(int n);  // order 2n, n >= 1
FiniteGroup dicyclic_group(int n);  // order 4n, n >= 1; n = 2 gives Q8
/// C_n x| C_m where the C_m generator acts by t -> t^k; requires k^m = 1 mod n.
FiniteGroup semidirect_cyclic(int n, int m, long k);
/// Group generated by permutations of {0..deg-1}; identity must be generated.
FiniteGroup permutation_group(int deg, const std::vector<std::vector<int>>& gens,
                              const std::string& name);

/// One group per isomorphism class of order <= max_order (max_order <= 16).
std::vector<FiniteGroup> group_catalog(int max_order);

/// Isomorphism search by generator images; complete for the supported sizes.
bool groups_isomorphic(const FiniteGroup& a, const FiniteGroup& b);

/// Action of a group on another by automorphisms: perm[g] is the index
/// permutation of the target induced by g.
struct GroupAction {
    FiniteGroup actor;
    FiniteGroup target;
    std::vector<std::vector<int>> perm;

    int act(int g, int x) const { return perm[(size_t)g][(size_t)x]; }
    std::vector<std::string> validate() const;
};

GroupAction trivial_action(const FiniteGroup& actor, const FiniteGroup& target);

/// Homomorphism source -> target as the image list of every source element.
using Hom = std::vector<int>;

std::vector<Hom> all_homomorphisms(const FiniteGroup& src, const FiniteGroup& tgt);
/// Representatives of Hom(src, tgt) modulo conjugation in the target.
std::vector<Hom> hom_classes(const FiniteGroup& src, const FiniteGroup& tgt);

/// 1-cocycle c: Gamma -> coefficients, c(s t) = c(s) (s . c(t)).
struct Cocycle {
    std::vector<int> values;  // per actor element
    bool operator==(const Cocycle&) const = default;
    bool operator<(const Cocycle& o) const { return values < o.values; }
};

bool is_cocycle(const GroupAction& a, const Cocycle& c);

/// All 1-cocycles, by generator assignment with word propagation; the search
/// space |coefficients|^#generators must stay within the enumerability cutoff.
std::vector<Cocycle> z1_cocycles(const GroupAction& a);

/// Partition of cocycles into cohomology classes, with coboundary witnesses.
struct H1Classes {
    std::vector<std::vector<size_t>> classes;  // indices into the input list
    /// witness[i] = phi with c_i(g) = phi^-1 c_rep(g) (g . phi), rep = first of
    /// the class containing i.
    std::vector<int> witness;
};

H1Classes h1_classes(const GroupAction& a, const std::vector<Cocycle>& cocycles);

/// phi making c1(g) = phi^-1 c2(g) (g . phi) for all g, if one exists.
std::optional<int> coboundary_witness(const GroupAction& a, const Cocycle& c1,
                                      const Cocycle& c2);

/// Greedy small generating set (never includes the identity for order > 1).
std::vector<int> generating_set(const FiniteGroup& g);

}  // namespace galform

#endif
