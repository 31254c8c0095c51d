#ifndef GALFORM_CATALOG_HPP
#define GALFORM_CATALOG_HPP

#include "galform/descent.hpp"
#include "galform/serial.hpp"

namespace galform {

/// One point of the index set: a based root datum, a finite group and a
/// conjugacy-class representative homomorphism into Aut(X, Delta), stored as
/// the image of every group element.
struct IndexEntry {
    BasedRootDatum datum;
    FiniteGroup gamma;
    std::vector<BasedAut> alpha;
};

/// All (group up to isomorphism of order <= order_bound, homomorphism class)
/// pairs for the datum, in a deterministic order. For the rank-2 torus the
/// infinite automorphism group is handled through the lattice-class search,
/// which supports cyclic groups only.
std::vector<IndexEntry> build_index_set(const BasedRootDatum& datum, int order_bound);

/// Deduplication key of a twisted fixed-point group. Not a proof of
/// isomorphism; equal groups do give equal keys.
struct Fingerprint {
    long order = 1;
    long center = 1;
    long abelianization = 1;
    bool quasi_split = true;

    auto operator<=>(const Fingerprint&) const = default;
    std::string str() const;
};

Fingerprint fingerprint(const PointGroup& g, const std::vector<FieldMatrix>& elems,
                        bool quasi_split);

/// Matrix realization of a based root datum, when one of the supported kinds
/// (SL, PGL, split tori and their products) matches up to isomorphism.
std::optional<GroupSpec> recognize_spec(const BasedRootDatum& datum);

/// Reference datum of a supported spec, in block coordinates.
BasedRootDatum spec_root_datum(const GroupSpec& spec);

/// The finite group of pinned structure-level automorphisms: diagram flips,
/// signs on rank-1 torus factors, permutations of identical factors. Throws
/// for torus factors of rank >= 2, where the group is infinite.
struct StructuralGroup {
    std::vector<StructuralAut> elements;
    FiniteGroup table;
};

StructuralGroup structural_aut_group(const GroupSpec& spec);

enum class CocycleMode { Trivial, Exhaustive };

struct Catalog {
    Json document;
    std::vector<Fingerprint> fingerprints;  // distinct, sorted
    long entries = 0;
    long skipped = 0;
};

/// Fixed-point constructions for every root datum of the given rank over
/// F_{p^k}: each index entry with cyclic gamma gets the canonical family
/// point of degree |gamma| and one catalog entry per cocycle class (trivial
/// mode uses only the trivial class). Unsupported data and size cutoffs are
/// recorded as skipped entries, never dropped silently.
Catalog build_catalog(long rank, unsigned long p, int k, int order_bound, CocycleMode mode);

}  // namespace galform

#endif
