#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "galform/groups.hpp"

using namespace galform;

namespace {

// exhaustive oracle: all maps with c(e) = e, filtered by the cocycle identity
std::vector<Cocycle> z1_oracle(const GroupAction& a) {
    std::vector<Cocycle> out;
    int m = a.actor.order, n = a.target.order;
    std::vector<int> v((size_t)m, 0);
    while (true) {
        Cocycle c{v};
        if (is_cocycle(a, c)) out.push_back(c);
        int i = 1;
        for (; i < m; ++i) {
            if (++v[(size_t)i] < n) break;
            v[(size_t)i] = 0;
        }
        if (i == m) break;
    }
    return out;
}

GroupAction inversion_action(int n) {
    GroupAction a;
    a.actor = cyclic_group(2);
    a.target = cyclic_group(n);
    std::vector<int> id, inv;
    for (int i = 0; i < n; ++i) {
        id.push_back(i);
        inv.push_back((n - i) % n);
    }
    a.perm = {id, inv};
    return a;
}

}  // namespace

TEST_CASE("group catalog counts and validity") {
    std::vector<FiniteGroup> cat = group_catalog(16);
    std::map<int, int> counts;
    for (const auto& g : cat) {
        CHECK(g.validate().empty());
        ++counts[g.order];
    }
    int expected[17] = {0, 1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14};
    for (int n = 1; n <= 16; ++n) CHECK(counts[n] == expected[n]);
    CHECK(group_catalog(1).size() == 1);
    CHECK_THROWS(group_catalog(17));
}

TEST_CASE("catalog groups pairwise non-isomorphic") {
    std::vector<FiniteGroup> cat = group_catalog(16);
    for (size_t i = 0; i < cat.size(); ++i)
        for (size_t j = i + 1; j < cat.size(); ++j) {
            INFO(cat[i].name, " vs ", cat[j].name);
            CHECK_FALSE(groups_isomorphic(cat[i], cat[j]));
        }
    // sanity: isomorphism search does find isomorphisms
    CHECK(groups_isomorphic(dihedral_group(3), permutation_group(3, {{1, 0, 2}, {1, 2, 0}}, "S3")));
    CHECK(groups_isomorphic(cyclic_group(6), direct_product(cyclic_group(2), cyclic_group(3))));
}

TEST_CASE("structure spot checks") {
    FiniteGroup q8 = dicyclic_group(2);
    int order2 = 0;
    for (int i = 0; i < q8.order; ++i)
        if (q8.element_order(i) == 2) ++order2;
    CHECK(order2 == 1);  // Q8 has a unique involution
    FiniteGroup d4 = dihedral_group(4);
    order2 = 0;
    for (int i = 0; i < d4.order; ++i)
        if (d4.element_order(i) == 2) ++order2;
    CHECK(order2 == 5);
    FiniteGroup a4 = permutation_group(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}, "A4");
    CHECK(a4.order == 12);
    // A4 has no subgroup of order 6 <=> no element of order 6; orders are 1,2,3
    for (int i = 0; i < a4.order; ++i) CHECK(a4.element_order(i) <= 3);
}

TEST_CASE("hom classes") {
    FiniteGroup c2 = cyclic_group(2), c3 = cyclic_group(3);
    FiniteGroup s3 = dihedral_group(3);
    CHECK(hom_classes(c2, s3).size() == 2);
    CHECK(hom_classes(c3, c2).size() == 1);
    CHECK(hom_classes(s3, trivial_group()).size() == 1);
    CHECK(all_homomorphisms(c2, s3).size() == 4);  // trivial + 3 transpositions
    // every hom is conjugate to exactly one representative
    auto all = all_homomorphisms(c2, s3);
    auto reps = hom_classes(c2, s3);
    for (const auto& phi : all) {
        int matches = 0;
        for (const auto& rep : reps) {
            bool conj = false;
            for (int t = 0; t < s3.order && !conj; ++t) {
                bool eq = true;
                for (int x = 0; x < c2.order; ++x)
                    eq = eq && rep[(size_t)x] ==
                                   s3.mul(s3.mul(s3.inv(t), phi[(size_t)x]), t);
                conj = eq;
            }
            if (conj) ++matches;
        }
        CHECK(matches == 1);
    }
}

TEST_CASE("cocycles against the exhaustive oracle") {
    // trivial action: Z1 = Hom
    GroupAction triv = trivial_action(cyclic_group(2), cyclic_group(2));
    auto z = z1_cocycles(triv);
    CHECK(z.size() == 2);
    CHECK(z1_oracle(triv).size() == 2);

    GroupAction inv3 = inversion_action(3);
    CHECK(inv3.validate().empty());
    auto z3 = z1_cocycles(inv3);
    CHECK(z3.size() == 3);

    // oracle equality on a batch of small instances
    std::vector<GroupAction> instances = {triv, inv3, inversion_action(5),
                                          trivial_action(cyclic_group(4), dihedral_group(3)),
                                          trivial_action(dihedral_group(3), cyclic_group(6))};
    for (auto& a : instances) {
        auto fast = z1_cocycles(a);
        auto slow = z1_oracle(a);
        std::sort(fast.begin(), fast.end());
        std::sort(slow.begin(), slow.end());
        CHECK(fast == slow);
    }

    // trivial action: cocycles are exactly homomorphisms
    GroupAction t2 = trivial_action(dihedral_group(3), cyclic_group(6));
    auto zc = z1_cocycles(t2);
    auto homs = all_homomorphisms(t2.actor, t2.target);
    CHECK(zc.size() == homs.size());
    for (const auto& c : zc)
        CHECK(std::find(homs.begin(), homs.end(), c.values) != homs.end());
}

TEST_CASE("cohomology classes and witnesses") {
    GroupAction triv = trivial_action(cyclic_group(2), cyclic_group(2));
    auto z = z1_cocycles(triv);
    auto h = h1_classes(triv, z);
    CHECK(h.classes.size() == 2);

    GroupAction inv3 = inversion_action(3);
    auto z3 = z1_cocycles(inv3);
    auto h3 = h1_classes(inv3, z3);
    CHECK(h3.classes.size() == 1);  // twisted H1(Z/2, Z/3) is trivial

    // witnesses are valid; cross-class pairs admit no witness
    for (size_t ci = 0; ci < h3.classes.size(); ++ci)
        for (size_t k = 0; k < h3.classes[ci].size(); ++k) {
            size_t i = h3.classes[ci][k];
            auto w = coboundary_witness(inv3, z3[i], z3[h3.classes[ci][0]]);
            REQUIRE(w.has_value());
            CHECK(*w == h3.witness[i]);
        }
    auto hs = h1_classes(triv, z);
    REQUIRE(hs.classes.size() == 2);
    CHECK_FALSE(coboundary_witness(triv, z[hs.classes[0][0]], z[hs.classes[1][0]]).has_value());

    // the relation is symmetric and transitive on a sample with nontrivial classes
    GroupAction t6 = trivial_action(cyclic_group(2), cyclic_group(6));
    auto z6 = z1_cocycles(t6);
    auto h6 = h1_classes(t6, z6);
    for (const auto& cls : h6.classes)
        for (size_t x : cls)
            for (size_t y : cls) {
                CHECK(coboundary_witness(t6, z6[x], z6[y]).has_value());
                CHECK(coboundary_witness(t6, z6[y], z6[x]).has_value());
            }
}

TEST_CASE("generating sets generate") {
    for (const auto& g : group_catalog(16)) {
        auto gens = generating_set(g);
        std::vector<bool> in((size_t)g.order, false);
        std::vector<int> stack = {0};
        in[0] = true;
        int count = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int gen : gens) {
                int y = g.mul(x, gen);
                if (!in[(size_t)y]) {
                    in[(size_t)y] = true;
                    ++count;
                    stack.push_back(y);
                }
            }
        }
        CHECK(count == g.order);
        CHECK(gens.size() <= 4);
    }
}
