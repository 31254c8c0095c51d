#include "galform/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace galform {

int FiniteGroup::inv(int i) const {
    for (int j = 0; j < order; ++j)
        if (mul(i, j) == 0) return j;
    throw error("element has no inverse");
}

int FiniteGroup::element_order(int i) const {
    int k = 1, x = i;
    while (x != 0) {
        x = mul(x, i);
        ++k;
        if (k > order) throw error("element order exceeds group order");
    }
    return k;
}

int FiniteGroup::power(int i, long k) const {
    int n = element_order(i);
    long r = ((k % n) + n) % n;
    int x = 0;
    for (long t = 0; t < r; ++t) x = mul(x, i);
    return x;
}

std::vector<std::string> FiniteGroup::validate() const {
    std::vector<std::string> bad;
    if (order < 1 || (int)table.size() != order) {
        bad.push_back("table size mismatch");
        return bad;
    }
    for (const auto& row : table) {
        if ((int)row.size() != order) bad.push_back("ragged table row");
        for (int v : row)
            if (v < 0 || v >= order) bad.push_back("table entry out of range");
    }
    if (!bad.empty()) return bad;
    for (int i = 0; i < order; ++i)
        if (mul(0, i) != i || mul(i, 0) != i) bad.push_back("identity axiom fails");
    for (int i = 0; i < order; ++i) {
        bool has_inv = false;
        for (int j = 0; j < order; ++j) has_inv = has_inv || mul(i, j) == 0;
        if (!has_inv) bad.push_back("inverse axiom fails");
    }
    for (int i = 0; i < order && order <= 24; ++i)
        for (int j = 0; j < order; ++j)
            for (int k = 0; k < order; ++k)
                if (mul(mul(i, j), k) != mul(i, mul(j, k))) {
                    bad.push_back("associativity fails");
                    return bad;
                }
    return bad;
}

FiniteGroup trivial_group() { return FiniteGroup{}; }

FiniteGroup cyclic_group(int n) {
    if (n < 1) throw error("cyclic group order must be positive");
    FiniteGroup g;
    g.order = n;
    g.name = "C" + std::to_string(n);
    g.table.assign((size_t)n, std::vector<int>((size_t)n));
    g.labels.resize((size_t)n);
    for (int i = 0; i < n; ++i) {
        g.labels[(size_t)i] = "t^" + std::to_string(i);
        for (int j = 0; j < n; ++j) g.table[(size_t)i][(size_t)j] = (i + j) % n;
    }
    return g;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    FiniteGroup g;
    g.order = a.order * b.order;
    g.name = a.name + "x" + b.name;
    g.table.assign((size_t)g.order, std::vector<int>((size_t)g.order));
    g.labels.resize((size_t)g.order);
    auto idx = [&](int x, int y) { return x * b.order + y; };
    for (int x1 = 0; x1 < a.order; ++x1)
        for (int y1 = 0; y1 < b.order; ++y1) {
            g.labels[(size_t)idx(x1, y1)] =
                "(" + a.labels[(size_t)x1] + "," + b.labels[(size_t)y1] + ")";
            for (int x2 = 0; x2 < a.order; ++x2)
                for (int y2 = 0; y2 < b.order; ++y2)
                    g.table[(size_t)idx(x1, y1)][(size_t)idx(x2, y2)] =
                        idx(a.mul(x1, x2), b.mul(y1, y2));
        }
    return g;
}

FiniteGroup dihedral_group(int n) {
    if (n < 1) throw error("dihedral parameter must be positive");
    // elements: r^i (index i), r^i s (index n+i); s r s = r^-1
    FiniteGroup g;
    g.order = 2 * n;
    g.name = "D" + std::to_string(n);
    g.table.assign((size_t)g.order, std::vector<int>((size_t)g.order));
    g.labels.resize((size_t)g.order);
    auto m = [&](int i) { return ((i % n) + n) % n; };
    for (int i = 0; i < n; ++i) {
        g.labels[(size_t)i] = "r^" + std::to_string(i);
        g.labels[(size_t)(n + i)] = "r^" + std::to_string(i) + "s";
        for (int j = 0; j < n; ++j) {
            g.table[(size_t)i][(size_t)j] = m(i + j);
            g.table[(size_t)i][(size_t)(n + j)] = n + m(i + j);
            g.table[(size_t)(n + i)][(size_t)j] = n + m(i - j);
            g.table[(size_t)(n + i)][(size_t)(n + j)] = m(i - j);
        }
    }
    return g;
}

FiniteGroup dicyclic_group(int n) {
    if (n < 1) throw error("dicyclic parameter must be positive");
    // <a, b | a^{2n} = 1, b^2 = a^n, b a b^-1 = a^-1>;
    // elements a^i (index i < 2n), a^i b (index 2n + i)
    FiniteGroup g;
    int nn = 2 * n;
    g.order = 4 * n;
    g.name = "Dic" + std::to_string(n);
    g.table.assign((size_t)g.order, std::vector<int>((size_t)g.order));
    g.labels.resize((size_t)g.order);
    auto m = [&](int i) { return ((i % nn) + nn) % nn; };
    for (int i = 0; i < nn; ++i) {
        g.labels[(size_t)i] = "a^" + std::to_string(i);
        g.labels[(size_t)(nn + i)] = "a^" + std::to_string(i) + "b";
        for (int j = 0; j < nn; ++j) {
            g.table[(size_t)i][(size_t)j] = m(i + j);
            g.table[(size_t)i][(size_t)(nn + j)] = nn + m(i + j);
            g.table[(size_t)(nn + i)][(size_t)j] = nn + m(i - j);
            g.table[(size_t)(nn + i)][(size_t)(nn + j)] = m(i - j + n);
        }
    }
    return g;
}

FiniteGroup semidirect_cyclic(int n, int m, long k) {
    k = ((k % n) + n) % n;
    long kp = 1;
    for (int t = 0; t < m; ++t) kp = (kp * k) % n;
    if (kp != 1 % n) throw error("semidirect action is not well defined");
    // elements (t^i, s^j), index j*n + i; s t s^-1 = t^k
    FiniteGroup g;
    g.order = n * m;
    g.name = "C" + std::to_string(n) + ":" + std::to_string(k) + ":C" + std::to_string(m);
    g.table.assign((size_t)g.order, std::vector<int>((size_t)g.order));
    g.labels.resize((size_t)g.order);
    std::vector<long> kpow((size_t)m);
    kpow[0] = 1;
    for (int j = 1; j < m; ++j) kpow[(size_t)j] = (kpow[(size_t)(j - 1)] * k) % n;
    for (int i1 = 0; i1 < n; ++i1)
        for (int j1 = 0; j1 < m; ++j1) {
            int a = j1 * n + i1;
            g.labels[(size_t)a] = "t^" + std::to_string(i1) + "s^" + std::to_string(j1);
            for (int i2 = 0; i2 < n; ++i2)
                for (int j2 = 0; j2 < m; ++j2) {
                    int i = (int)((i1 + i2 * kpow[(size_t)j1]) % n);
                    int j = (j1 + j2) % m;
                    g.table[(size_t)a][(size_t)(j2 * n + i2)] = j * n + i;
                }
        }
    return g;
}

FiniteGroup permutation_group(int deg, const std::vector<std::vector<int>>& gens,
                              const std::string& name) {
    std::vector<int> id((size_t)deg);
    std::iota(id.begin(), id.end(), 0);
    std::vector<std::vector<int>> els = {id};
    std::map<std::vector<int>, int> index = {{id, 0}};
    for (size_t head = 0; head < els.size(); ++head)
        for (const auto& g : gens) {
            std::vector<int> p((size_t)deg);
            for (int i = 0; i < deg; ++i) p[(size_t)i] = g[(size_t)els[head][(size_t)i]];
            if (index.emplace(p, (int)els.size()).second) els.push_back(p);
        }
    FiniteGroup g;
    g.order = (int)els.size();
    g.name = name;
    g.table.assign(els.size(), std::vector<int>(els.size()));
    g.labels.resize(els.size());
    for (size_t i = 0; i < els.size(); ++i) {
        std::string lab = "(";
        for (int v : els[i]) lab += std::to_string(v);
        g.labels[i] = lab + ")";
        for (size_t j = 0; j < els.size(); ++j) {
            std::vector<int> p((size_t)deg);
            for (int t = 0; t < deg; ++t) p[(size_t)t] = els[i][(size_t)els[j][(size_t)t]];
            g.table[i][j] = index.at(p);
        }
    }
    return g;
}

namespace {

// semidirect n x| h, perm[y] = automorphism of n induced by y in h
FiniteGroup semidirect_generic(const FiniteGroup& n, const FiniteGroup& h,
                               const std::vector<std::vector<int>>& perm,
                               const std::string& name) {
    FiniteGroup g;
    g.order = n.order * h.order;
    g.name = name;
    g.table.assign((size_t)g.order, std::vector<int>((size_t)g.order));
    g.labels.assign((size_t)g.order, "");
    auto idx = [&](int x, int y) { return y * n.order + x; };
    for (int x1 = 0; x1 < n.order; ++x1)
        for (int y1 = 0; y1 < h.order; ++y1)
            for (int x2 = 0; x2 < n.order; ++x2)
                for (int y2 = 0; y2 < h.order; ++y2)
                    g.table[(size_t)idx(x1, y1)][(size_t)idx(x2, y2)] =
                        idx(n.mul(x1, perm[(size_t)y1][(size_t)x2]), h.mul(y1, y2));
    for (int i = 0; i < g.order; ++i) g.labels[(size_t)i] = "g" + std::to_string(i);
    return g;
}

FiniteGroup quotient_group(const FiniteGroup& g, const std::vector<int>& sub,
                           const std::string& name) {
    // sub must be normal; cosets by left multiplication
    std::vector<int> coset((size_t)g.order, -1);
    int ncosets = 0;
    std::vector<int> rep;
    for (int i = 0; i < g.order; ++i) {
        if (coset[(size_t)i] >= 0) continue;
        for (int s : sub) {
            int x = g.mul(i, s);
            if (coset[(size_t)x] >= 0 && coset[(size_t)x] != ncosets)
                throw error("subgroup cosets are inconsistent");
            coset[(size_t)x] = ncosets;
        }
        rep.push_back(i);
        ++ncosets;
    }
    FiniteGroup q;
    q.order = ncosets;
    q.name = name;
    q.table.assign((size_t)ncosets, std::vector<int>((size_t)ncosets));
    q.labels.assign((size_t)ncosets, "");
    for (int i = 0; i < ncosets; ++i) {
        q.labels[(size_t)i] = "c" + std::to_string(i);
        for (int j = 0; j < ncosets; ++j) {
            int prod = coset[(size_t)g.mul(rep[(size_t)i], rep[(size_t)j])];
            // well-definedness check against another representative choice
            for (int s : sub) {
                int alt = coset[(size_t)g.mul(g.mul(rep[(size_t)i], s), rep[(size_t)j])];
                if (alt != prod) throw error("subgroup is not normal");
            }
            q.table[(size_t)i][(size_t)j] = prod;
        }
    }
    return q;
}

}  // namespace

std::vector<FiniteGroup> group_catalog(int max_order) {
    if (max_order < 1 || max_order > 16) throw error("group catalog covers orders 1 to 16");
    std::vector<FiniteGroup> out;
    auto add = [&](FiniteGroup g) {
        if (g.order <= max_order) out.push_back(std::move(g));
    };
    add(trivial_group());
    add(cyclic_group(2));
    add(cyclic_group(3));
    add(cyclic_group(4));
    add(direct_product(cyclic_group(2), cyclic_group(2)));
    add(cyclic_group(5));
    add(cyclic_group(6));
    add(dihedral_group(3));  // S3
    add(cyclic_group(7));
    add(cyclic_group(8));
    add(direct_product(cyclic_group(4), cyclic_group(2)));
    add(direct_product(direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2)));
    add(dihedral_group(4));
    add(dicyclic_group(2));  // Q8
    add(cyclic_group(9));
    add(direct_product(cyclic_group(3), cyclic_group(3)));
    add(cyclic_group(10));
    add(dihedral_group(5));
    add(cyclic_group(11));
    add(cyclic_group(12));
    add(direct_product(cyclic_group(6), cyclic_group(2)));
    add(dihedral_group(6));
    add(dicyclic_group(3));
    add(permutation_group(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}, "A4"));
    add(cyclic_group(13));
    add(cyclic_group(14));
    add(dihedral_group(7));
    add(cyclic_group(15));
    if (max_order >= 16) {
        add(cyclic_group(16));
        add(direct_product(cyclic_group(4), cyclic_group(4)));
        add(direct_product(cyclic_group(8), cyclic_group(2)));
        add(direct_product(direct_product(cyclic_group(4), cyclic_group(2)), cyclic_group(2)));
        add(direct_product(
            direct_product(direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2)),
            cyclic_group(2)));
        add(dihedral_group(8));
        add(semidirect_cyclic(8, 2, 3));  // semidihedral
        add(semidirect_cyclic(8, 2, 5));  // modular
        add(dicyclic_group(4));           // Q16
        add(direct_product(dihedral_group(4), cyclic_group(2)));
        add(direct_product(dicyclic_group(2), cyclic_group(2)));
        add(semidirect_cyclic(4, 4, 3));  // C4 x| C4
        {
            // (C2 x C2) x| C4, generator of C4 swapping the coordinates
            FiniteGroup v4 = direct_product(cyclic_group(2), cyclic_group(2));
            FiniteGroup c4 = cyclic_group(4);
            std::vector<int> id = {0, 1, 2, 3};
            std::vector<int> swp = {0, 2, 1, 3};
            add(semidirect_generic(v4, c4, {id, swp, id, swp}, "(C2xC2):C4"));
        }
        {
            // central product C4 o D4 = (D4 x C4) / <(r^2, s^2)>
            FiniteGroup dc = direct_product(dihedral_group(4), cyclic_group(4));
            // D4 element r^2 has index 2, C4 element s^2 has index 2; pair index 2*4+2
            int z = 2 * 4 + 2;
            add(quotient_group(dc, {0, z}, "C4oD4"));
        }
    }
    return out;
}

std::vector<int> generating_set(const FiniteGroup& g) {
    std::vector<int> gens;
    std::vector<bool> in((size_t)g.order, false);
    in[0] = true;
    int count = 1;
    auto close = [&]() {
        bool grew = true;
        while (grew) {
            grew = false;
            for (int i = 0; i < g.order; ++i) {
                if (!in[(size_t)i]) continue;
                for (int gen : gens) {
                    int x = g.mul(i, gen);
                    if (!in[(size_t)x]) {
                        in[(size_t)x] = true;
                        ++count;
                        grew = true;
                    }
                }
            }
        }
    };
    while (count < g.order) {
        // greedy: take the element of largest order not yet generated
        int best = -1, best_ord = 0;
        for (int i = 0; i < g.order; ++i)
            if (!in[(size_t)i] && g.element_order(i) > best_ord) {
                best = i;
                best_ord = g.element_order(i);
            }
        gens.push_back(best);
        in[(size_t)best] = true;
        ++count;
        close();
    }
    return gens;
}

namespace {

// word structure: each element reached as parent * gens[genidx]
struct Words {
    std::vector<int> parent, genidx, order;  // BFS order of elements
};

Words bfs_words(const FiniteGroup& g, const std::vector<int>& gens) {
    Words w;
    w.parent.assign((size_t)g.order, -1);
    w.genidx.assign((size_t)g.order, -1);
    std::vector<bool> seen((size_t)g.order, false);
    seen[0] = true;
    w.order.push_back(0);
    for (size_t head = 0; head < w.order.size(); ++head) {
        int cur = w.order[head];
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            int nxt = g.mul(cur, gens[gi]);
            if (seen[(size_t)nxt]) continue;
            seen[(size_t)nxt] = true;
            w.parent[(size_t)nxt] = cur;
            w.genidx[(size_t)nxt] = (int)gi;
            w.order.push_back(nxt);
        }
    }
    if ((int)w.order.size() != g.order) throw error("generating set does not generate");
    return w;
}

// enumerate assignments of values[gi] < radix, calling f; returns early never
template <typename F>
void for_all_assignments(size_t ngens, int radix, F f) {
    std::vector<int> a(ngens, 0);
    while (true) {
        f(a);
        size_t i = 0;
        for (; i < ngens; ++i) {
            if (++a[i] < radix) break;
            a[i] = 0;
        }
        if (i == ngens) break;
    }
}

}  // namespace

std::vector<Hom> all_homomorphisms(const FiniteGroup& src, const FiniteGroup& tgt) {
    std::vector<int> gens = generating_set(src);
    if (gens.empty()) return {Hom((size_t)src.order, 0)};
    double space = 1;
    for (size_t i = 0; i < gens.size(); ++i) space *= tgt.order;
    if (space > 1e6) throw error("homomorphism search space exceeds the cutoff");
    Words w = bfs_words(src, gens);
    std::vector<Hom> out;
    for_all_assignments(gens.size(), tgt.order, [&](const std::vector<int>& a) {
        Hom phi((size_t)src.order, -1);
        phi[0] = 0;
        for (size_t i = 1; i < w.order.size(); ++i) {
            int x = w.order[i];
            phi[(size_t)x] = tgt.mul(phi[(size_t)w.parent[(size_t)x]], a[(size_t)w.genidx[(size_t)x]]);
        }
        for (int i = 0; i < src.order; ++i)
            for (int j = 0; j < src.order; ++j)
                if (phi[(size_t)src.mul(i, j)] != tgt.mul(phi[(size_t)i], phi[(size_t)j])) return;
        out.push_back(std::move(phi));
    });
    return out;
}

std::vector<Hom> hom_classes(const FiniteGroup& src, const FiniteGroup& tgt) {
    std::vector<Hom> all = all_homomorphisms(src, tgt);
    std::vector<Hom> reps;
    std::vector<Hom> canon_seen;
    for (const auto& phi : all) {
        Hom canon = phi;
        for (int t = 0; t < tgt.order; ++t) {
            Hom c((size_t)src.order);
            int ti = tgt.inv(t);
            for (int x = 0; x < src.order; ++x) c[(size_t)x] = tgt.mul(tgt.mul(ti, phi[(size_t)x]), t);
            if (c < canon) canon = c;
        }
        if (std::find(canon_seen.begin(), canon_seen.end(), canon) == canon_seen.end()) {
            canon_seen.push_back(canon);
            reps.push_back(phi);
        }
    }
    return reps;
}

GroupAction trivial_action(const FiniteGroup& actor, const FiniteGroup& target) {
    GroupAction a;
    a.actor = actor;
    a.target = target;
    std::vector<int> id((size_t)target.order);
    std::iota(id.begin(), id.end(), 0);
    a.perm.assign((size_t)actor.order, id);
    return a;
}

std::vector<std::string> GroupAction::validate() const {
    std::vector<std::string> bad;
    if ((int)perm.size() != actor.order) {
        bad.push_back("one permutation per actor element required");
        return bad;
    }
    for (int x = 0; x < target.order; ++x)
        if (perm[0][(size_t)x] != x) bad.push_back("identity must act trivially");
    for (int g = 0; g < actor.order; ++g) {
        std::vector<bool> hit((size_t)target.order, false);
        for (int x = 0; x < target.order; ++x) hit[(size_t)perm[(size_t)g][(size_t)x]] = true;
        for (bool h : hit)
            if (!h) bad.push_back("action value is not a permutation");
        for (int x = 0; x < target.order; ++x)
            for (int y = 0; y < target.order; ++y)
                if (act(g, target.mul(x, y)) != target.mul(act(g, x), act(g, y))) {
                    bad.push_back("action value is not an automorphism");
                    x = y = target.order;
                }
    }
    for (int g = 0; g < actor.order; ++g)
        for (int h = 0; h < actor.order; ++h)
            for (int x = 0; x < target.order; ++x)
                if (act(actor.mul(g, h), x) != act(g, act(h, x))) {
                    bad.push_back("action is not a homomorphism");
                    g = h = actor.order - 1;
                    break;
                }
    return bad;
}

bool is_cocycle(const GroupAction& a, const Cocycle& c) {
    const FiniteGroup& gm = a.actor;
    const FiniteGroup& cf = a.target;
    if ((int)c.values.size() != gm.order) return false;
    for (int s = 0; s < gm.order; ++s)
        for (int t = 0; t < gm.order; ++t)
            if (c.values[(size_t)gm.mul(s, t)] !=
                cf.mul(c.values[(size_t)s], a.act(s, c.values[(size_t)t])))
                return false;
    return true;
}

std::vector<Cocycle> z1_cocycles(const GroupAction& a) {
    const FiniteGroup& gm = a.actor;
    const FiniteGroup& cf = a.target;
    std::vector<int> gens = generating_set(gm);
    if (gens.empty()) return {Cocycle{{0}}};
    double space = 1;
    for (size_t i = 0; i < gens.size(); ++i) space *= cf.order;
    if (space > 1e6) throw error("cocycle search space exceeds the cutoff");
    Words w = bfs_words(gm, gens);
    std::vector<Cocycle> out;
    for_all_assignments(gens.size(), cf.order, [&](const std::vector<int>& vals) {
        Cocycle c;
        c.values.assign((size_t)gm.order, -1);
        c.values[0] = 0;
        for (size_t i = 1; i < w.order.size(); ++i) {
            int x = w.order[i];
            int par = w.parent[(size_t)x];
            int gv = vals[(size_t)w.genidx[(size_t)x]];
            // c(par * g) = c(par) (par . c(g))
            c.values[(size_t)x] = cf.mul(c.values[(size_t)par], a.act(par, gv));
        }
        if (is_cocycle(a, c)) out.push_back(std::move(c));
    });
    return out;
}

std::optional<int> coboundary_witness(const GroupAction& a, const Cocycle& c1,
                                      const Cocycle& c2) {
    const FiniteGroup& gm = a.actor;
    const FiniteGroup& cf = a.target;
    for (int phi = 0; phi < cf.order; ++phi) {
        int phinv = cf.inv(phi);
        bool ok = true;
        for (int g = 0; g < gm.order && ok; ++g)
            ok = c1.values[(size_t)g] ==
                 cf.mul(cf.mul(phinv, c2.values[(size_t)g]), a.act(g, phi));
        if (ok) return phi;
    }
    return std::nullopt;
}

H1Classes h1_classes(const GroupAction& a, const std::vector<Cocycle>& cocycles) {
    H1Classes res;
    res.witness.assign(cocycles.size(), -1);
    for (size_t i = 0; i < cocycles.size(); ++i) {
        bool placed = false;
        for (auto& cls : res.classes) {
            auto phi = coboundary_witness(a, cocycles[i], cocycles[cls[0]]);
            if (phi) {
                cls.push_back(i);
                res.witness[i] = *phi;
                placed = true;
                break;
            }
        }
        if (!placed) {
            res.classes.push_back({i});
            res.witness[i] = 0;  // identity relates a cocycle to itself
        }
    }
    return res;
}

bool groups_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
    if (a.order != b.order) return false;
    std::vector<int> ord_a, ord_b;
    for (int i = 0; i < a.order; ++i) ord_a.push_back(a.element_order(i));
    for (int i = 0; i < b.order; ++i) ord_b.push_back(b.element_order(i));
    {
        auto sa = ord_a, sb = ord_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<int> gens = generating_set(a);
    if (gens.empty()) return true;
    Words w = bfs_words(a, gens);
    // candidate images per generator: same element order
    std::vector<std::vector<int>> cands(gens.size());
    for (size_t gi = 0; gi < gens.size(); ++gi)
        for (int x = 0; x < b.order; ++x)
            if (ord_b[(size_t)x] == ord_a[(size_t)gens[gi]]) cands[gi].push_back(x);
    std::vector<size_t> pick(gens.size(), 0);
    while (true) {
        std::vector<int> phi((size_t)a.order, -1);
        phi[0] = 0;
        bool ok = true;
        for (size_t i = 1; i < w.order.size() && ok; ++i) {
            int x = w.order[i];
            phi[(size_t)x] = b.mul(phi[(size_t)w.parent[(size_t)x]],
                                   cands[(size_t)w.genidx[(size_t)x]]
                                        [pick[(size_t)w.genidx[(size_t)x]]]);
        }
        std::vector<bool> hit((size_t)b.order, false);
        for (int x = 0; x < a.order && ok; ++x) {
            if (hit[(size_t)phi[(size_t)x]]) ok = false;
            hit[(size_t)phi[(size_t)x]] = true;
        }
        for (int i = 0; i < a.order && ok; ++i)
            for (int j = 0; j < a.order && ok; ++j)
                ok = phi[(size_t)a.mul(i, j)] == b.mul(phi[(size_t)i], phi[(size_t)j]);
        if (ok) return true;
        size_t i = 0;
        for (; i < gens.size(); ++i) {
            if (++pick[i] < cands[i].size()) break;
            pick[i] = 0;
        }
        if (i == gens.size()) return false;
    }
}

}  // namespace galform
