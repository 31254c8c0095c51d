#include "galform/catalog.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace galform {

namespace {

std::vector<long> atom_offsets(const std::vector<GroupSpec>& atoms) {
    std::vector<long> off;
    long pos = 0;
    for (const auto& a : atoms) {
        off.push_back(pos);
        pos += a.matrix_size();
    }
    off.push_back(pos);
    return off;
}

// images of every element from images of a generating set, by word search
std::vector<IntMatrix> expand_images(const FiniteGroup& g, const std::vector<int>& gens,
                                     const std::vector<IntMatrix>& imgs, long r) {
    std::vector<IntMatrix> out((size_t)g.order);
    std::vector<char> known((size_t)g.order, 0);
    out[0] = IntMatrix::identity(r);
    known[0] = 1;
    std::vector<int> frontier = {0};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int e : frontier)
            for (size_t i = 0; i < gens.size(); ++i) {
                int f = g.mul(e, gens[(size_t)i]);
                if (!known[(size_t)f]) {
                    out[(size_t)f] = out[(size_t)e] * imgs[i];
                    known[(size_t)f] = 1;
                    next.push_back(f);
                }
            }
        frontier = std::move(next);
    }
    for (char c : known)
        if (!c) throw error("generating set does not generate the group");
    return out;
}

bool is_pure_torus(const RootDatum& d) { return d.roots.empty(); }

}  // namespace

std::vector<IndexEntry> build_index_set(const BasedRootDatum& datum, int order_bound) {
    if (order_bound < 1 || order_bound > 16)
        throw error("order bound must be between 1 and 16");
    std::vector<IndexEntry> out;
    bool torus2 = is_pure_torus(datum.datum) && datum.datum.rank >= 2;
    std::optional<BasedAutGroup> aut;
    if (!torus2) aut = based_automorphism_group(datum);
    for (const FiniteGroup& gamma : group_catalog(order_bound)) {
        if (!torus2) {
            for (const Hom& h : hom_classes(gamma, aut->table)) {
                IndexEntry e{datum, gamma, {}};
                for (int g = 0; g < gamma.order; ++g)
                    e.alpha.push_back(aut->elements[(size_t)h[(size_t)g]]);
                out.push_back(std::move(e));
            }
        } else {
            std::vector<int> gens = generating_set(gamma);
            for (const auto& cls : torus_hom_classes(gamma, datum.datum.rank)) {
                std::vector<IntMatrix> per = expand_images(gamma, gens, cls, datum.datum.rank);
                IndexEntry e{datum, gamma, {}};
                for (auto& m : per) e.alpha.push_back(BasedAut{std::move(m), {}});
                out.push_back(std::move(e));
            }
        }
    }
    return out;
}

std::string Fingerprint::str() const {
    std::ostringstream os;
    os << "(" << order << "," << center << "," << abelianization << ","
       << (quasi_split ? "qs" : "non-qs") << ")";
    return os.str();
}

Fingerprint fingerprint(const PointGroup& g, const std::vector<FieldMatrix>& elems,
                        bool quasi_split) {
    Fingerprint fp;
    fp.order = (long)elems.size();
    fp.center = center_order(g, elems);
    fp.abelianization = abelianization_order(g, elems);
    fp.quasi_split = quasi_split;
    return fp;
}

BasedRootDatum spec_root_datum(const GroupSpec& spec) {
    // atomic reference data, in the coordinates fixed below:
    //   SL2  root 2, coroot 1; PGL2 the dual
    //   SL3  roots in the fundamental weight basis; PGL3 the dual
    //   T(r) no roots
    auto atomic = [](const GroupSpec& a) -> BasedRootDatum {
        BasedRootDatum b;
        if (a.kind == GroupSpec::Kind::Torus) {
            b.datum.rank = a.rank;
            b.name = "T" + std::to_string(a.rank);
            return b;
        }
        bool sl = a.kind == GroupSpec::Kind::SL;
        if (a.n == 2) {
            b.datum.rank = 1;
            long r = sl ? 2 : 1, c = sl ? 1 : 2;
            b.datum.roots = {{Int(r)}, {Int(-r)}};
            b.datum.coroots = {{Int(c)}, {Int(-c)}};
            b.base = {0};
        } else if (a.n == 3) {
            b.datum.rank = 2;
            std::vector<std::vector<Int>> w = {{2, -1}, {-1, 2}, {1, 1},
                                               {-2, 1}, {1, -2}, {-1, -1}};
            std::vector<std::vector<Int>> c = {{1, 0}, {0, 1}, {1, 1},
                                               {-1, 0}, {0, -1}, {-1, -1}};
            b.datum.roots = sl ? w : c;
            b.datum.coroots = sl ? c : w;
            b.base = {0, 1};
        } else {
            throw error("reference data stop at n = 3");
        }
        b.name = (sl ? "SL" : "PGL") + std::to_string(a.n);
        return b;
    };
    std::vector<GroupSpec> as = spec.atoms();
    if (as.size() == 1) return atomic(as[0]);
    BasedRootDatum out;
    long total = 0;
    for (const auto& a : as) {
        total += atomic(a).datum.rank;
        out.name += (out.name.empty() ? "" : "x") + atomic(a).name;
    }
    out.datum.rank = total;
    long off = 0;
    for (const auto& a : as) {
        BasedRootDatum part = atomic(a);
        long r = part.datum.rank;
        for (size_t i = 0; i < part.datum.roots.size(); ++i) {
            std::vector<Int> root((size_t)total, Int(0));
            std::vector<Int> coroot((size_t)total, Int(0));
            for (long j = 0; j < r; ++j) {
                root[(size_t)(off + j)] = part.datum.roots[i][(size_t)j];
                coroot[(size_t)(off + j)] = part.datum.coroots[i][(size_t)j];
            }
            if (std::find(part.base.begin(), part.base.end(), (long)i) != part.base.end())
                out.base.push_back((long)out.datum.roots.size());
            out.datum.roots.push_back(std::move(root));
            out.datum.coroots.push_back(std::move(coroot));
        }
        off += r;
    }
    return out;
}

std::optional<GroupSpec> recognize_spec(const BasedRootDatum& datum) {
    long n = datum.datum.rank;
    std::vector<GroupSpec> candidates;
    if (n == 1) {
        candidates = {GroupSpec::torus(1), GroupSpec::sl(2), GroupSpec::pgl(2)};
    } else if (n == 2) {
        candidates = {GroupSpec::torus(2),
                      GroupSpec::sl(3),
                      GroupSpec::pgl(3),
                      GroupSpec::product({GroupSpec::sl(2), GroupSpec::sl(2)}),
                      GroupSpec::product({GroupSpec::sl(2), GroupSpec::pgl(2)}),
                      GroupSpec::product({GroupSpec::pgl(2), GroupSpec::pgl(2)}),
                      GroupSpec::product({GroupSpec::sl(2), GroupSpec::torus(1)}),
                      GroupSpec::product({GroupSpec::pgl(2), GroupSpec::torus(1)})};
    } else {
        return std::nullopt;
    }
    for (const auto& s : candidates)
        if (root_data_isomorphic(datum.datum, spec_root_datum(s).datum)) return s;
    return std::nullopt;
}

StructuralGroup structural_aut_group(const GroupSpec& spec) {
    std::vector<GroupSpec> as = spec.atoms();
    for (const auto& a : as)
        if (a.kind == GroupSpec::Kind::Torus && a.rank >= 2)
            throw error("infinite structural automorphism group: torus rank 2");
    StructuralAut id = structural_identity(spec);
    std::vector<StructuralAut> gens;
    for (size_t i = 0; i < as.size(); ++i) {
        if ((as[i].kind == GroupSpec::Kind::SL || as[i].kind == GroupSpec::Kind::PGL) &&
            as[i].n >= 3) {
            StructuralAut g = id;
            g.flip[i] = 1;
            gens.push_back(g);
        }
        if (as[i].kind == GroupSpec::Kind::Torus) {
            StructuralAut g = id;
            IntMatrix neg(1, 1);
            neg.at(0, 0) = -1;
            g.tmap[i] = neg;
            gens.push_back(g);
        }
        for (size_t j = i + 1; j < as.size(); ++j)
            if (as[i].kind == as[j].kind && as[i].n == as[j].n && as[i].rank == as[j].rank) {
                StructuralAut g = id;
                g.perm[i] = (long)j;
                g.perm[j] = (long)i;
                std::swap(g.flip[i], g.flip[j]);
                std::swap(g.tmap[i], g.tmap[j]);
                gens.push_back(g);
            }
    }
    StructuralGroup out;
    out.elements.push_back(id);
    std::vector<size_t> frontier = {0};
    while (!frontier.empty()) {
        std::vector<size_t> next;
        for (size_t fi : frontier)
            for (const auto& g : gens) {
                StructuralAut y = structural_compose(out.elements[fi], g);
                bool known = false;
                for (const auto& e : out.elements) known = known || e == y;
                if (!known) {
                    out.elements.push_back(y);
                    next.push_back(out.elements.size() - 1);
                    if (out.elements.size() > 4096) throw error("structural group too large");
                }
            }
        frontier = std::move(next);
    }
    int m = (int)out.elements.size();
    out.table.order = m;
    out.table.name = "Struct(" + spec.str() + ")";
    out.table.table.assign((size_t)m, std::vector<int>((size_t)m, -1));
    out.table.labels.assign((size_t)m, "");
    for (int i = 0; i < m; ++i) {
        out.table.labels[(size_t)i] = "s" + std::to_string(i);
        for (int j = 0; j < m; ++j) {
            StructuralAut prod =
                structural_compose(out.elements[(size_t)i], out.elements[(size_t)j]);
            int idx = -1;
            for (int k = 0; k < m; ++k)
                if (out.elements[(size_t)k] == prod) idx = k;
            if (idx < 0) throw error("structural set is not closed under composition");
            out.table.table[(size_t)i][(size_t)j] = idx;
        }
    }
    std::vector<std::string> rep = out.table.validate();
    if (!rep.empty()) throw error("structural table invalid: " + rep.front());
    return out;
}

namespace {

// adjoint realization used for inner-valued cocycles: the PGL block of each
// linear factor, torus factors dropped (their inner action is trivial)
struct AdjointInfo {
    GroupSpec spec;
    std::vector<size_t> atom_of;  // adjoint atom -> spec atom index
    bool empty = false;
};

AdjointInfo adjoint_info(const GroupSpec& spec) {
    AdjointInfo info;
    std::vector<GroupSpec> as = spec.atoms();
    std::vector<GroupSpec> parts;
    for (size_t i = 0; i < as.size(); ++i) {
        if (as[i].kind == GroupSpec::Kind::Torus) continue;
        parts.push_back(GroupSpec::pgl(as[i].n));
        info.atom_of.push_back(i);
    }
    if (parts.empty()) {
        info.empty = true;
        return info;
    }
    info.spec = parts.size() == 1 ? parts[0] : GroupSpec::product(parts);
    return info;
}

FieldMatrix embed_adjoint(const PointGroup& G, const AdjointInfo& info, const PointGroup& ad,
                          const FieldMatrix& x) {
    std::vector<long> goff = atom_offsets(G.spec.atoms());
    std::vector<long> aoff = atom_offsets(ad.spec.atoms());
    FieldMatrix r = G.identity_element();
    for (size_t k = 0; k < info.atom_of.size(); ++k) {
        long src = aoff[k], dst = goff[info.atom_of[k]];
        long sz = aoff[k + 1] - aoff[k];
        for (long i = 0; i < sz; ++i)
            for (long j = 0; j < sz; ++j) r.at(dst + i, dst + j) = x.at(src + i, src + j);
    }
    return r;
}

// the restriction of a structural map to the adjoint factor list
StructuralAut restrict_structural(const StructuralAut& s, const AdjointInfo& info) {
    StructuralAut r;
    std::vector<long> back(s.perm.size(), -1);
    for (size_t k = 0; k < info.atom_of.size(); ++k) back[info.atom_of[k]] = (long)k;
    for (size_t k = 0; k < info.atom_of.size(); ++k) {
        long tgt = back[(size_t)s.perm[info.atom_of[k]]];
        if (tgt < 0) throw error("structural map mixes linear and torus factors");
        r.perm.push_back(tgt);
        r.flip.push_back(s.flip[info.atom_of[k]]);
        r.tmap.push_back(IntMatrix());
    }
    return r;
}

Json fingerprint_json(const Fingerprint& fp) {
    return Json::array({fp.order, fp.center, fp.abelianization, fp.quasi_split});
}

// relabel a hom class on gamma to the canonical cyclic group of the same
// order via powers of a fixed generator
template <typename T>
std::vector<T> relabel_cyclic(const FiniteGroup& gamma, const std::vector<T>& per_element) {
    int m = gamma.order;
    int g0 = -1;
    for (int i = 0; i < m && g0 < 0; ++i)
        if (gamma.element_order(i) == m) g0 = i;
    if (g0 < 0) throw error("group is not cyclic");
    std::vector<T> out;
    int cur = 0;
    for (int i = 0; i < m; ++i) {
        out.push_back(per_element[(size_t)cur]);
        cur = gamma.mul(cur, g0);
    }
    return out;
}

bool is_cyclic(const FiniteGroup& g) {
    for (int i = 0; i < g.order; ++i)
        if (g.element_order(i) == g.order) return true;
    return false;
}

struct AlphaClass {
    std::vector<StructuralAut> per_element;  // indexed by gamma elements
};

// group-side index classes for a recognized spec; counts are cross-checked
// against the datum-side automorphism group whenever the latter is finite
std::vector<std::pair<FiniteGroup, std::vector<AlphaClass>>> group_side_index(
    const BasedRootDatum& datum, const GroupSpec& spec, int order_bound,
    std::vector<std::string>& skips) {
    std::vector<std::pair<FiniteGroup, std::vector<AlphaClass>>> out;
    if (spec.kind == GroupSpec::Kind::Torus) {
        for (const FiniteGroup& gamma : group_catalog(order_bound)) {
            if (spec.rank >= 2 && !is_cyclic(gamma)) {
                skips.push_back("gamma " + gamma.name +
                                ": lattice classes need a cyclic group at torus rank 2");
                continue;
            }
            std::vector<AlphaClass> classes;
            std::vector<int> gens = generating_set(gamma);
            for (const auto& cls : torus_hom_classes(gamma, spec.rank)) {
                std::vector<IntMatrix> per = expand_images(gamma, gens, cls, spec.rank);
                AlphaClass ac;
                for (auto& m : per) {
                    StructuralAut s = structural_identity(spec);
                    s.tmap[0] = std::move(m);
                    ac.per_element.push_back(std::move(s));
                }
                classes.push_back(std::move(ac));
            }
            out.emplace_back(gamma, std::move(classes));
        }
        return out;
    }
    StructuralGroup sg = structural_aut_group(spec);
    std::optional<BasedAutGroup> datum_aut;
    try {
        datum_aut = based_automorphism_group(datum);
    } catch (const error&) {
        datum_aut.reset();
    }
    if (datum_aut && datum_aut->elements.size() != sg.elements.size())
        throw error("structural group disagrees with the datum automorphism group");
    for (const FiniteGroup& gamma : group_catalog(order_bound)) {
        std::vector<Hom> homs = hom_classes(gamma, sg.table);
        if (datum_aut && homs.size() != hom_classes(gamma, datum_aut->table).size())
            throw error("homomorphism class counts disagree between the two sides");
        std::vector<AlphaClass> classes;
        for (const Hom& h : homs) {
            AlphaClass ac;
            for (int g = 0; g < gamma.order; ++g)
                ac.per_element.push_back(sg.elements[(size_t)h[(size_t)g]]);
            classes.push_back(std::move(ac));
        }
        out.emplace_back(gamma, std::move(classes));
    }
    return out;
}

}  // namespace

Catalog build_catalog(long rank, unsigned long p, int k, int order_bound, CocycleMode mode) {
    Catalog cat;
    Json& doc = cat.document;
    doc["version"] = 1;
    doc["rank"] = rank;
    doc["p"] = p;
    doc["k"] = k;
    doc["order_bound"] = order_bound;
    doc["cocycle_mode"] = mode == CocycleMode::Trivial ? "trivial" : "exhaustive";
    doc["entries"] = Json::array();
    doc["skipped"] = Json::array();
    doc["points"] = Json::object();

    std::vector<Fingerprint> fps;
    auto record_fp = [&](const Fingerprint& fp) {
        if (std::find(fps.begin(), fps.end(), fp) == fps.end()) fps.push_back(fp);
    };

    if (rank == 0) {
        Json e;
        e["spec"] = "1";
        e["gamma"] = "1";
        e["fingerprint"] = fingerprint_json(Fingerprint{});
        e["status"] = "ok";
        doc["entries"].push_back(e);
        record_fp(Fingerprint{});
        cat.entries = 1;
        std::sort(fps.begin(), fps.end());
        for (const auto& fp : fps) doc["fingerprints"].push_back(fingerprint_json(fp));
        cat.fingerprints = fps;
        return cat;
    }

    std::vector<BasedRootDatum> data = enumerate_root_data(rank);
    std::map<int, FamilyPoint> points;  // per gamma order

    for (const BasedRootDatum& datum : data) {
        std::optional<GroupSpec> spec = recognize_spec(datum);
        if (!spec) {
            Json s;
            s["datum"] = datum.name;
            s["reason"] = "unsupported construction: no matrix realization of this datum";
            doc["skipped"].push_back(s);
            ++cat.skipped;
            continue;
        }
        std::vector<std::string> index_skips;
        auto index = group_side_index(datum, *spec, order_bound, index_skips);
        for (const std::string& reason : index_skips) {
            Json s;
            s["datum"] = datum.name;
            s["reason"] = reason;
            doc["skipped"].push_back(s);
            ++cat.skipped;
        }
        for (size_t gi = 0; gi < index.size(); ++gi) {
            const FiniteGroup& gamma = index[gi].first;
            for (size_t ci = 0; ci < index[gi].second.size(); ++ci) {
                Json e;
                e["datum"] = datum.name;
                e["spec"] = spec->str();
                e["gamma"] = gamma.name;
                e["alpha_class"] = ci;
                if (!is_cyclic(gamma)) {
                    e["status"] = "no-point: gamma is not a Galois group of finite fields";
                    doc["entries"].push_back(e);
                    ++cat.entries;
                    continue;
                }
                int m = gamma.order;
                std::vector<StructuralAut> alpha =
                    relabel_cyclic(gamma, index[gi].second[ci].per_element);
                if (!points.count(m))
                    points.emplace(m, construct_point_finite_field(p, k, m));
                const FamilyPoint& pt = points.at(m);
                std::string pid = "m" + std::to_string(m);
                if (!doc["points"].contains(pid)) doc["points"][pid] = point_to_json(pt);
                e["point"] = pid;

                PointGroup G;
                try {
                    G = point_group(*spec, pt);
                } catch (const error& err) {
                    e["status"] = std::string("skipped: ") + err.what();
                    doc["entries"].push_back(e);
                    ++cat.skipped;
                    ++cat.entries;
                    continue;
                }
                TwistSpec base = trivial_twist(G);
                for (int g = 0; g < m; ++g) base.alpha[(size_t)g].outer = alpha[(size_t)g];

                // cocycle classes: the trivial one, plus every cohomology
                // class of inner-valued cocycles in exhaustive mode
                struct CClass {
                    std::vector<FieldMatrix> values;  // per gamma element, in G coordinates
                    size_t size = 1;
                };
                std::vector<CClass> cls;
                cls.push_back(CClass{std::vector<FieldMatrix>((size_t)m, G.identity_element()), 1});
                std::string cocycle_note;
                AdjointInfo adj = adjoint_info(*spec);
                if (mode == CocycleMode::Exhaustive && m > 1 && !adj.empty) {
                    try {
                        PointGroup ad = point_group(adj.spec, pt);
                        TableGroup tg = to_table_group(ad);
                        GroupAction act;
                        act.actor = pt.gamma;
                        act.target = tg.table;
                        std::map<std::string, int> idx;
                        for (size_t t = 0; t < tg.elements.size(); ++t) {
                            std::string key;
                            tg.elements[t].encode(key);
                            idx[key] = (int)t;
                        }
                        for (int g = 0; g < m; ++g) {
                            AutElement twisted{ad.identity_element(),
                                               restrict_structural(alpha[(size_t)g], adj), g};
                            std::vector<int> row;
                            for (const auto& x : tg.elements) {
                                std::string key;
                                apply_aut(ad, twisted, x).encode(key);
                                auto it = idx.find(key);
                                if (it == idx.end())
                                    throw error("twisted action leaves the group");
                                row.push_back(it->second);
                            }
                            act.perm.push_back(std::move(row));
                        }
                        std::vector<std::string> rep = act.validate();
                        if (!rep.empty()) throw error("twisted action invalid: " + rep.front());
                        std::vector<Cocycle> zs = z1_cocycles(act);
                        H1Classes h1 = h1_classes(act, zs);
                        cls.clear();
                        for (const auto& c : h1.classes) {
                            CClass cc;
                            cc.size = c.size();
                            for (int g = 0; g < m; ++g)
                                cc.values.push_back(embed_adjoint(
                                    G, adj, ad, tg.elements[(size_t)zs[c[0]].values[(size_t)g]]));
                            cls.push_back(std::move(cc));
                        }
                    } catch (const error& err) {
                        cocycle_note = std::string("exhaustive search skipped: ") + err.what();
                    }
                }

                for (size_t cci = 0; cci < cls.size(); ++cci) {
                    Json ee = e;
                    ee["cocycle_class"] = cci;
                    ee["cocycle_class_size"] = cls[cci].size;
                    if (!cocycle_note.empty()) ee["note"] = cocycle_note;
                    TwistSpec t = base;
                    for (int g = 0; g < m; ++g)
                        t.cocycle[(size_t)g].inner = cls[cci].values[(size_t)g];
                    try {
                        std::vector<FieldMatrix> fixed = twisted_fixed_points(G, t);
                        bool qs = is_quasi_split_twist(G, t).quasi_split;
                        Fingerprint fp = fingerprint(G, fixed, qs);
                        ee["fingerprint"] = fingerprint_json(fp);
                        ee["status"] = "ok";
                        record_fp(fp);
                    } catch (const error& err) {
                        ee["status"] = std::string("skipped: ") + err.what();
                        ++cat.skipped;
                    }
                    doc["entries"].push_back(ee);
                    ++cat.entries;
                }
            }
        }
    }

    std::sort(fps.begin(), fps.end());
    doc["fingerprints"] = Json::array();
    for (const auto& fp : fps) doc["fingerprints"].push_back(fingerprint_json(fp));
    cat.fingerprints = fps;
    return cat;
}

}  // namespace galform
