#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "galform/rootdata.hpp"

using namespace galform;

namespace {

std::vector<Int> iv(std::vector<long> v) { return std::vector<Int>(v.begin(), v.end()); }

RootDatum make_datum(long rank, std::vector<std::vector<long>> roots,
                     std::vector<std::vector<long>> coroots) {
    RootDatum d;
    d.rank = rank;
    for (auto& r : roots) d.roots.push_back(iv(r));
    for (auto& c : coroots) d.coroots.push_back(iv(c));
    return d;
}

RootDatum sl2() { return make_datum(1, {{-2}, {2}}, {{-1}, {1}}); }
RootDatum pgl2() { return make_datum(1, {{-1}, {1}}, {{-2}, {2}}); }

// hand-written representatives of the thirteen rank-2 classes
std::vector<RootDatum> rank2_oracle() {
    std::vector<RootDatum> out;
    out.push_back(make_datum(2, {}, {}));  // torus
    out.push_back(make_datum(2, {{2, 0}, {-2, 0}}, {{1, 0}, {-1, 0}}));  // SL2 x Gm
    out.push_back(make_datum(2, {{1, 0}, {-1, 0}}, {{2, 0}, {-2, 0}}));  // PGL2 x Gm
    out.push_back(make_datum(2, {{1, -1}, {-1, 1}}, {{1, -1}, {-1, 1}}));  // GL2
    out.push_back(make_datum(2, {{2, 0}, {-2, 0}, {0, 2}, {0, -2}},
                             {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));  // SL2 x SL2
    out.push_back(make_datum(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}},
                             {{2, 0}, {-2, 0}, {0, 2}, {0, -2}}));  // PGL2 x PGL2
    out.push_back(make_datum(2, {{2, 0}, {-2, 0}, {0, 1}, {0, -1}},
                             {{1, 0}, {-1, 0}, {0, 2}, {0, -2}}));  // SL2 x PGL2
    out.push_back(make_datum(2, {{1, 1}, {-1, -1}, {1, -1}, {-1, 1}},
                             {{1, 1}, {-1, -1}, {1, -1}, {-1, 1}}));  // SO4
    out.push_back(make_datum(2,
                             {{2, -1}, {-2, 1}, {-1, 2}, {1, -2}, {1, 1}, {-1, -1}},
                             {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}}));  // SL3
    out.push_back(make_datum(2,
                             {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}},
                             {{2, -1}, {-2, 1}, {-1, 2}, {1, -2}, {1, 1}, {-1, -1}}));  // PGL3
    out.push_back(make_datum(
        2,
        {{2, 0}, {-2, 0}, {0, 2}, {0, -2}, {1, 1}, {-1, -1}, {1, -1}, {-1, 1}},
        {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}, {1, -1}, {-1, 1}}));  // Sp4
    out.push_back(make_datum(
        2,
        {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}, {1, -1}, {-1, 1}},
        {{2, 0}, {-2, 0}, {0, 2}, {0, -2}, {1, 1}, {-1, -1}, {1, -1}, {-1, 1}}));  // SO5
    out.push_back(make_datum(2,
                             {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1},
                              {2, 1}, {-2, -1}, {3, 1}, {-3, -1}, {3, 2}, {-3, -2}},
                             {{2, -3}, {-2, 3}, {-1, 2}, {1, -2}, {-1, 3}, {1, -3},
                              {1, 0}, {-1, 0}, {1, -1}, {-1, 1}, {0, 1}, {0, -1}}));  // G2
    return out;
}

const BasedRootDatum& find_by_iso(const std::vector<BasedRootDatum>& list, const RootDatum& d) {
    for (const auto& b : list)
        if (root_data_isomorphic(b.datum, d)) return b;
    throw error("datum not found in enumeration");
}

}  // namespace

TEST_CASE("root datum validation") {
    CHECK(validate_root_datum(sl2()).empty());
    CHECK(validate_root_datum(make_datum(1, {}, {})).empty());
    CHECK_FALSE(validate_root_datum(make_datum(1, {{1}, {-1}}, {{1}, {-1}})).empty());
    // reflection closure violation
    CHECK_FALSE(
        validate_root_datum(make_datum(2, {{2, 0}, {-2, 0}, {1, 1}}, {{1, 0}, {-1, 0}, {1, 1}}))
            .empty());
    for (const auto& d : rank2_oracle()) CHECK(validate_root_datum(d).empty());
}

TEST_CASE("duality") {
    RootDatum d = dual_root_datum(sl2());
    CHECK(d.roots == pgl2().roots);
    CHECK(d.coroots == pgl2().coroots);
    CHECK(dual_root_datum(d).roots == sl2().roots);
    RootDatum t = make_datum(1, {}, {});
    CHECK(dual_root_datum(t).rank == 1);
    for (const auto& o : rank2_oracle()) {
        RootDatum dd = dual_root_datum(dual_root_datum(o));
        CHECK(dd.roots == o.roots);
        CHECK(dd.coroots == o.coroots);
    }
}

TEST_CASE("isomorphism search sanity") {
    CHECK(root_data_isomorphic(sl2(), sl2()));
    CHECK_FALSE(root_data_isomorphic(sl2(), pgl2()));
    // change of basis keeps the class
    RootDatum sl2gm = make_datum(2, {{2, 0}, {-2, 0}}, {{1, 0}, {-1, 0}});
    RootDatum sl2gm2 = make_datum(2, {{2, 2}, {-2, -2}}, {{1, 0}, {-1, 0}});
    CHECK(root_data_isomorphic(sl2gm, sl2gm2));
    CHECK_FALSE(root_data_isomorphic(sl2gm, make_datum(2, {{1, 0}, {-1, 0}}, {{2, 0}, {-2, 0}})));
}

TEST_CASE("enumeration at ranks 0 and 1") {
    CHECK(enumerate_root_data(0).size() == 1);
    auto r1 = enumerate_root_data(1);
    REQUIRE(r1.size() == 3);
    for (const auto& b : r1) CHECK(validate_root_datum(b.datum).empty());
    // canonical SL2 convention present verbatim
    bool has_sl2 = false, has_pgl2 = false, has_torus = false;
    for (const auto& b : r1) {
        if (b.datum.roots == sl2().roots && b.datum.coroots == sl2().coroots) has_sl2 = true;
        if (b.datum.roots == pgl2().roots && b.datum.coroots == pgl2().coroots) has_pgl2 = true;
        if (b.datum.roots.empty()) has_torus = true;
    }
    CHECK(has_sl2);
    CHECK(has_pgl2);
    CHECK(has_torus);
    CHECK_THROWS(enumerate_root_data(3));
}

TEST_CASE("rank-2 enumeration against the hand-written oracle") {
    auto r2 = enumerate_root_data(2);
    auto oracle = rank2_oracle();
    REQUIRE(r2.size() == 13);
    REQUIRE(oracle.size() == 13);
    for (const auto& b : r2) CHECK(validate_root_datum(b.datum).empty());
    // pairwise non-isomorphic
    for (size_t i = 0; i < r2.size(); ++i)
        for (size_t j = i + 1; j < r2.size(); ++j) {
            INFO(r2[i].name, " vs ", r2[j].name);
            CHECK_FALSE(root_data_isomorphic(r2[i].datum, r2[j].datum));
        }
    // each oracle class hit exactly once
    for (const auto& o : oracle) {
        int hits = 0;
        for (const auto& b : r2)
            if (root_data_isomorphic(b.datum, o)) ++hits;
        CHECK(hits == 1);
    }
}

TEST_CASE("weyl group orbit closure is finite") {
    for (long n = 0; n <= 2; ++n)
        for (const auto& b : enumerate_root_data(n)) {
            const RootDatum& d = b.datum;
            size_t m = d.roots.size();
            // simple reflections as permutations of the root list
            std::vector<std::vector<long>> gens;
            for (long bi : b.base) {
                std::vector<long> p(m);
                for (size_t j = 0; j < m; ++j) {
                    Int pr = 0;
                    for (long k = 0; k < d.rank; ++k)
                        pr += d.roots[j][(size_t)k] * d.coroots[(size_t)bi][(size_t)k];
                    std::vector<Int> refl = d.roots[j];
                    for (long k = 0; k < d.rank; ++k)
                        refl[(size_t)k] -= pr * d.roots[(size_t)bi][(size_t)k];
                    long idx = -1;
                    for (size_t t = 0; t < m; ++t)
                        if (d.roots[t] == refl) idx = (long)t;
                    REQUIRE(idx >= 0);
                    p[j] = idx;
                }
                gens.push_back(p);
            }
            std::set<std::vector<long>> group;
            std::vector<long> id(m);
            for (size_t i = 0; i < m; ++i) id[i] = (long)i;
            group.insert(id);
            bool grew = true;
            while (grew) {
                grew = false;
                std::vector<std::vector<long>> cur(group.begin(), group.end());
                for (const auto& a : cur)
                    for (const auto& g : gens) {
                        std::vector<long> c(m);
                        for (size_t i = 0; i < m; ++i) c[i] = g[(size_t)a[i]];
                        if (group.insert(c).second) grew = true;
                    }
                REQUIRE(group.size() <= 1u << 8);  // finiteness guard
            }
            if (b.name.substr(0, 2) == "G2") CHECK(group.size() == 12);
        }
}

TEST_CASE("based automorphism groups") {
    auto r1 = enumerate_root_data(1);
    auto r2 = enumerate_root_data(2);
    auto oracle = rank2_oracle();

    CHECK(based_automorphism_group(find_by_iso(r1, sl2())).elements.size() == 1);
    CHECK(based_automorphism_group(find_by_iso(r2, oracle[8])).elements.size() == 2);  // SL3
    CHECK(based_automorphism_group(find_by_iso(r2, oracle[4])).elements.size() == 2);  // SL2xSL2
    // rank-1 torus: {1, -1}
    for (const auto& b : r1)
        if (b.datum.roots.empty()) CHECK(based_automorphism_group(b).elements.size() == 2);
    // rank-2 torus rejected
    for (const auto& b : r2)
        if (b.datum.roots.empty()) CHECK_THROWS(based_automorphism_group(b));

    // closure, inverses, table validity, base preservation
    for (long n = 0; n <= 2; ++n)
        for (const auto& b : enumerate_root_data(n)) {
            if (b.datum.roots.empty() && n == 2) continue;
            BasedAutGroup g = based_automorphism_group(b);
            CHECK(g.table.validate().empty());
            CHECK(g.elements[0].matrix == IntMatrix::identity(n));
            for (const auto& el : g.elements) {
                CHECK(el.matrix.is_unimodular());
                IntMatrix minv_t = el.matrix.unimodular_inverse().transpose();
                for (size_t i = 0; i < b.datum.roots.size(); ++i) {
                    std::vector<Int> img((size_t)n, Int(0));
                    for (long r = 0; r < n; ++r)
                        for (long c = 0; c < n; ++c)
                            img[(size_t)r] += el.matrix.at(r, c) * b.datum.roots[i][(size_t)c];
                    long idx = -1;
                    for (size_t t = 0; t < b.datum.roots.size(); ++t)
                        if (b.datum.roots[t] == img) idx = (long)t;
                    REQUIRE(idx >= 0);
                    std::vector<Int> cimg((size_t)n, Int(0));
                    for (long r = 0; r < n; ++r)
                        for (long c = 0; c < n; ++c)
                            cimg[(size_t)r] += minv_t.at(r, c) * b.datum.coroots[i][(size_t)c];
                    CHECK(b.datum.coroots[(size_t)idx] == cimg);
                }
            }
            auto perms = root_permutations(b, g);
            CHECK(perms.size() == g.elements.size());
        }

    // mixed rank-2 data have the torus inversion, order 2
    for (const auto& b : r2)
        if (!b.datum.roots.empty() && b.base.size() == 1)
            CHECK(based_automorphism_group(b).elements.size() == 2);
}

TEST_CASE("torus hom classes") {
    CHECK(torus_hom_classes(cyclic_group(2), 1).size() == 2);
    CHECK(torus_hom_classes(cyclic_group(3), 1).size() == 1);
    CHECK(torus_hom_classes(trivial_group(), 2).size() == 1);
    CHECK(torus_hom_classes(cyclic_group(2), 2).size() == 4);
    CHECK(torus_hom_classes(cyclic_group(3), 2).size() == 2);
    CHECK(torus_hom_classes(cyclic_group(4), 2).size() == 5);
    CHECK(torus_hom_classes(cyclic_group(6), 2).size() == 6);
    CHECK(torus_hom_classes(cyclic_group(12), 2).size() == 7);
    CHECK(torus_hom_classes(cyclic_group(5), 2).size() == 1);
    CHECK_THROWS(torus_hom_classes(direct_product(cyclic_group(2), cyclic_group(2)), 2));
    // images have the right multiplicative order
    for (const auto& cls : torus_hom_classes(cyclic_group(12), 2)) {
        IntMatrix m = cls[0];
        IntMatrix acc = IntMatrix::identity(2);
        int ord = 0;
        do {
            acc = acc * m;
            ++ord;
        } while (!(acc == IntMatrix::identity(2)) && ord <= 12);
        CHECK(12 % ord == 0);
    }
}
