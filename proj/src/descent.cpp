#include "galform/descent.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace galform {

namespace {

constexpr long kEnumCutoff = 1000000;

std::string enc(const FieldMatrix& m) {
    std::string s;
    m.encode(s);
    return s;
}

// |G(E)| for |E| = q; SL and PGL share the cardinality |GL_n(q)| / (q - 1)
Int spec_order(const GroupSpec& s, const Int& q) {
    switch (s.kind) {
        case GroupSpec::Kind::SL:
        case GroupSpec::Kind::PGL: {
            Int acc = 1;
            for (long i = 0; i < s.n * (s.n - 1) / 2; ++i) acc *= q;
            for (long i = 2; i <= s.n; ++i) {
                Int t = 1;
                for (long j = 0; j < i; ++j) t *= q;
                acc *= t - 1;
            }
            return acc;
        }
        case GroupSpec::Kind::Torus: {
            Int acc = 1;
            for (long i = 0; i < s.rank; ++i) acc *= q - 1;
            return acc;
        }
        case GroupSpec::Kind::Product: {
            Int acc = 1;
            for (const auto& f : s.factors) acc *= spec_order(f, q);
            return acc;
        }
    }
    throw error("unreachable");
}

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

FieldMatrix block_embed(const Field& E, long msize, long off, const FieldMatrix& b) {
    FieldMatrix r = FieldMatrix::identity(E, msize);
    for (long i = 0; i < b.rows(); ++i)
        for (long j = 0; j < b.cols(); ++j) r.at(off + i, off + j) = b.at(i, j);
    return r;
}

// antidiagonal J with alternating signs; J x^-T J^-1 preserves the pinning
FieldMatrix flip_matrix_J(const Field& E, long n) {
    FieldMatrix J(E, n, n);
    for (long i = 0; i < n; ++i) J.at(i, n - 1 - i) = (i % 2 == 0) ? E.one() : -E.one();
    return J;
}

FieldMatrix theta_block(const Field& E, const FieldMatrix& b) {
    FieldMatrix J = flip_matrix_J(E, b.rows());
    return J * b.inverse().transpose() * J.inverse();
}

std::vector<FieldMatrix> closure(const Field& E, long n,
                                 const std::vector<FieldMatrix>& gens,
                                 const std::function<FieldMatrix(FieldMatrix)>& canon) {
    std::vector<FieldMatrix> out;
    std::set<std::string> seen;
    std::vector<FieldMatrix> frontier = {FieldMatrix::identity(E, n)};
    seen.insert(enc(frontier[0]));
    out.push_back(frontier[0]);
    while (!frontier.empty()) {
        std::vector<FieldMatrix> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                FieldMatrix y = canon(x * g);
                if (seen.insert(enc(y)).second) {
                    out.push_back(y);
                    next.push_back(y);
                    if ((long)out.size() > kEnumCutoff) throw error("ambient group too large");
                }
            }
        frontier = std::move(next);
    }
    return out;
}

std::vector<FieldMatrix> enumerate_spec(const GroupSpec& spec, const Field& E);

std::vector<FieldMatrix> enumerate_sl_like(const GroupSpec& spec, const Field& E) {
    long n = spec.n;
    long deg = E.degree();
    std::vector<FieldMatrix> gens;
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            if (i == j) continue;
            for (long k = 0; k < deg; ++k) {
                std::vector<unsigned long> cf((size_t)k + 1, 0);
                cf[(size_t)k] = 1;
                FieldMatrix g = FieldMatrix::identity(E, n);
                g.at(i, j) = E.kind() == FieldKind::Extension ? E.from_coeffs(cf) : E.one();
                gens.push_back(g);
            }
        }
    std::function<FieldMatrix(FieldMatrix)> canon = [](FieldMatrix x) { return x; };
    if (spec.kind == GroupSpec::Kind::PGL) {
        // a multiplicative generator fills out GL modulo scalars
        Int qm1 = E.order() - 1;
        FieldElement prim = E.one();
        for (const auto& e : E.elements()) {
            if (e.is_zero()) continue;
            bool gen = true;
            for (Int d = 1; d < qm1; ++d)
                if (e.pow(d).is_one()) { gen = false; break; }
            if (gen) { prim = e; break; }
        }
        FieldMatrix dgen = FieldMatrix::identity(E, n);
        dgen.at(0, 0) = prim;
        gens.push_back(dgen);
        canon = [](FieldMatrix x) {
            for (long i = 0; i < x.rows(); ++i)
                for (long j = 0; j < x.cols(); ++j)
                    if (!x.at(i, j).is_zero()) return x * x.at(i, j).inverse();
            throw error("zero matrix");
        };
        for (auto& g : gens) g = canon(g);
    }
    return closure(E, n, gens, canon);
}

void enumerate_torus_rec(const Field& E, const std::vector<FieldElement>& units, long r,
                         std::vector<FieldElement>& cur, std::vector<FieldMatrix>& out) {
    if ((long)cur.size() == r) {
        FieldMatrix m(E, r, r);
        for (long i = 0; i < r; ++i) m.at(i, i) = cur[(size_t)i];
        out.push_back(m);
        return;
    }
    for (const auto& u : units) {
        cur.push_back(u);
        enumerate_torus_rec(E, units, r, cur, out);
        cur.pop_back();
    }
}

std::vector<FieldMatrix> enumerate_spec(const GroupSpec& spec, const Field& E) {
    switch (spec.kind) {
        case GroupSpec::Kind::SL:
        case GroupSpec::Kind::PGL:
            return enumerate_sl_like(spec, E);
        case GroupSpec::Kind::Torus: {
            std::vector<FieldElement> units;
            for (const auto& e : E.elements())
                if (!e.is_zero()) units.push_back(e);
            std::vector<FieldMatrix> out;
            std::vector<FieldElement> cur;
            enumerate_torus_rec(E, units, spec.rank, cur, out);
            return out;
        }
        case GroupSpec::Kind::Product: {
            std::vector<FieldMatrix> out = {FieldMatrix::identity(E, 0)};
            long pos = 0;
            for (const auto& f : spec.factors) {
                std::vector<FieldMatrix> fel = enumerate_spec(f, E);
                long fs = f.matrix_size();
                std::vector<FieldMatrix> next;
                next.reserve(out.size() * fel.size());
                for (const auto& base : out)
                    for (const auto& fe : fel) {
                        FieldMatrix m(E, pos + fs, pos + fs);
                        for (long i = 0; i < pos; ++i)
                            for (long j = 0; j < pos; ++j) m.at(i, j) = base.at(i, j);
                        for (long i = 0; i < fs; ++i)
                            for (long j = 0; j < fs; ++j) m.at(pos + i, pos + j) = fe.at(i, j);
                        next.push_back(std::move(m));
                        if ((long)next.size() > kEnumCutoff) throw error("ambient group too large");
                    }
                out = std::move(next);
                pos += fs;
            }
            return out;
        }
    }
    throw error("unreachable");
}

}  // namespace

GroupSpec GroupSpec::sl(long n) {
    if (n < 2) throw error("SL needs n >= 2");
    GroupSpec s;
    s.kind = Kind::SL;
    s.n = n;
    return s;
}

GroupSpec GroupSpec::pgl(long n) {
    if (n < 2) throw error("PGL needs n >= 2");
    GroupSpec s;
    s.kind = Kind::PGL;
    s.n = n;
    return s;
}

GroupSpec GroupSpec::torus(long r) {
    if (r < 1) throw error("torus needs rank >= 1");
    GroupSpec s;
    s.kind = Kind::Torus;
    s.rank = r;
    return s;
}

GroupSpec GroupSpec::product(std::vector<GroupSpec> fs) {
    if (fs.empty()) throw error("empty product");
    GroupSpec s;
    s.kind = Kind::Product;
    for (auto& f : fs) {
        if (f.kind == Kind::Product) {
            for (auto& g : f.factors) s.factors.push_back(std::move(g));
        } else {
            s.factors.push_back(std::move(f));
        }
    }
    return s;
}

long GroupSpec::matrix_size() const {
    switch (kind) {
        case Kind::SL:
        case Kind::PGL:
            return n;
        case Kind::Torus:
            return rank;
        case Kind::Product: {
            long s = 0;
            for (const auto& f : factors) s += f.matrix_size();
            return s;
        }
    }
    throw error("unreachable");
}

std::vector<GroupSpec> GroupSpec::atoms() const {
    if (kind != Kind::Product) return {*this};
    return factors;
}

std::string GroupSpec::str() const {
    switch (kind) {
        case Kind::SL:
            return "SL" + std::to_string(n);
        case Kind::PGL:
            return "PGL" + std::to_string(n);
        case Kind::Torus:
            return "T" + std::to_string(rank);
        case Kind::Product: {
            std::string s;
            for (const auto& f : factors) s += (s.empty() ? "" : "x") + f.str();
            return s;
        }
    }
    throw error("unreachable");
}

FieldMatrix PointGroup::identity_element() const { return FieldMatrix::identity(E, msize); }

FieldMatrix PointGroup::canonicalize(FieldMatrix x) const {
    std::vector<GroupSpec> as = spec.atoms();
    std::vector<long> off = atom_offsets(as);
    for (size_t k = 0; k < as.size(); ++k) {
        if (as[k].kind != GroupSpec::Kind::PGL) continue;
        long o = off[k], s = as[k].matrix_size();
        FieldElement lead = E.zero();
        bool found = false;
        for (long i = 0; i < s && !found; ++i)
            for (long j = 0; j < s && !found; ++j)
                if (!x.at(o + i, o + j).is_zero()) {
                    lead = x.at(o + i, o + j);
                    found = true;
                }
        if (!found) throw error("zero block in a PGL factor");
        FieldElement inv = lead.inverse();
        for (long i = 0; i < s; ++i)
            for (long j = 0; j < s; ++j) x.at(o + i, o + j) = x.at(o + i, o + j) * inv;
    }
    return x;
}

FieldMatrix PointGroup::mul(const FieldMatrix& a, const FieldMatrix& b) const {
    return canonicalize(a * b);
}

FieldMatrix PointGroup::inv(const FieldMatrix& x) const { return canonicalize(x.inverse()); }

long PointGroup::index_of(const FieldMatrix& x) const {
    std::string s = enc(x);
    for (size_t i = 0; i < elements.size(); ++i)
        if (enc(elements[i]) == s) return (long)i;
    return -1;
}

FieldElement PointGroup::semilinear(long g, const FieldElement& e) const {
    FieldElement acc = E.zero();
    FieldElement pw = E.one();
    for (unsigned long c : e.coeffs()) {
        acc = acc + pw * E.from_int((long)c);
        pw = pw * frob[(size_t)g];
    }
    return acc;
}

FieldMatrix PointGroup::semilinear_matrix(long g, const FieldMatrix& x) const {
    FieldMatrix r(E, x.rows(), x.cols());
    for (long i = 0; i < x.rows(); ++i)
        for (long j = 0; j < x.cols(); ++j) r.at(i, j) = semilinear(g, x.at(i, j));
    return r;
}

PointGroup point_group(const GroupSpec& spec, const FamilyPoint& pt) {
    PointGroup G;
    G.spec = spec;
    G.algebra = fiber_algebra(pt);
    if (G.algebra.base.kind() != FieldKind::Prime)
        throw error("matrix points need a prime base field");
    std::vector<unsigned long> mod;
    for (const auto& c : G.algebra.f.coeffs()) mod.push_back(c.coeffs()[0]);
    G.E = Field::extension(G.algebra.base.char_p(), mod);
    G.msize = spec.matrix_size();

    Int order = spec_order(spec, G.E.order());
    if (order > kEnumCutoff)
        throw error("ambient group too large: " + order.get_str() + " elements");

    for (const auto& h : G.algebra.action) {
        std::vector<unsigned long> cf;
        for (const auto& c : h.coeffs()) cf.push_back(c.coeffs()[0]);
        if (cf.empty()) cf.push_back(0);
        G.frob.push_back(G.E.from_coeffs(cf));
    }

    G.elements = enumerate_spec(spec, G.E);
    if (Int((long)G.elements.size()) != order) throw error("enumeration misses the order formula");
    std::string ide = enc(G.identity_element());
    std::vector<std::pair<std::string, size_t>> keys;
    keys.reserve(G.elements.size());
    for (size_t i = 0; i < G.elements.size(); ++i) keys.emplace_back(enc(G.elements[i]), i);
    std::sort(keys.begin(), keys.end(), [&](const auto& a, const auto& b) {
        if ((a.first == ide) != (b.first == ide)) return a.first == ide;
        return a.first < b.first;
    });
    std::vector<FieldMatrix> sorted;
    sorted.reserve(keys.size());
    for (const auto& [k, i] : keys) sorted.push_back(std::move(G.elements[i]));
    G.elements = std::move(sorted);
    return G;
}

StructuralAut structural_identity(const GroupSpec& spec) {
    StructuralAut s;
    std::vector<GroupSpec> as = spec.atoms();
    for (size_t k = 0; k < as.size(); ++k) {
        s.perm.push_back((long)k);
        s.flip.push_back(0);
        s.tmap.push_back(as[k].kind == GroupSpec::Kind::Torus ? IntMatrix::identity(as[k].rank)
                                                              : IntMatrix());
    }
    return s;
}

namespace {

bool atoms_compatible(const GroupSpec& a, const GroupSpec& b) {
    return a.kind == b.kind && a.n == b.n && a.rank == b.rank;
}

FieldMatrix structural_apply(const PointGroup& G, const StructuralAut& s, const FieldMatrix& x) {
    std::vector<GroupSpec> as = G.spec.atoms();
    std::vector<long> off = atom_offsets(as);
    FieldMatrix r(G.E, G.msize, G.msize);
    for (size_t k = 0; k < as.size(); ++k) {
        long tk = s.perm[k];
        if (!atoms_compatible(as[k], as[(size_t)tk]))
            throw error("factor permutation does not respect the factor shapes");
        long o = off[k], sz = as[k].matrix_size();
        FieldMatrix blk(G.E, sz, sz);
        for (long i = 0; i < sz; ++i)
            for (long j = 0; j < sz; ++j) blk.at(i, j) = x.at(o + i, o + j);
        if (as[k].kind == GroupSpec::Kind::Torus) {
            const IntMatrix& m = s.tmap[k];
            if (m.rows != sz || !m.is_unimodular()) throw error("torus map must be unimodular");
            FieldMatrix nb(G.E, sz, sz);
            for (long c = 0; c < sz; ++c) {
                FieldElement v = G.E.one();
                for (long j = 0; j < sz; ++j) v = v * blk.at(j, j).pow(m.at(j, c));
                nb.at(c, c) = v;
            }
            blk = nb;
        } else if (s.flip[k]) {
            blk = theta_block(G.E, blk);
        }
        long to = off[(size_t)tk];
        for (long i = 0; i < sz; ++i)
            for (long j = 0; j < sz; ++j) r.at(to + i, to + j) = blk.at(i, j);
    }
    return r;
}

}  // namespace

StructuralAut structural_compose(const StructuralAut& a, const StructuralAut& b) {
    StructuralAut r;
    size_t n = a.perm.size();
    for (size_t k = 0; k < n; ++k) {
        long mid = b.perm[k];
        r.perm.push_back(a.perm[(size_t)mid]);
        r.flip.push_back((char)(b.flip[k] ^ a.flip[(size_t)mid]));
        if (b.tmap[k].rows > 0)
            r.tmap.push_back(b.tmap[k] * a.tmap[(size_t)mid]);
        else
            r.tmap.push_back(IntMatrix());
    }
    return r;
}

StructuralAut structural_invert(const StructuralAut& a) {
    StructuralAut r;
    size_t n = a.perm.size();
    r.perm.assign(n, 0);
    r.flip.assign(n, 0);
    r.tmap.assign(n, IntMatrix());
    std::vector<long> inv(n, 0);
    for (size_t k = 0; k < n; ++k) inv[(size_t)a.perm[k]] = (long)k;
    for (size_t k = 0; k < n; ++k) {
        r.perm[k] = inv[k];
        r.flip[k] = a.flip[(size_t)inv[k]];
        if (a.tmap[(size_t)inv[k]].rows > 0)
            r.tmap[k] = a.tmap[(size_t)inv[k]].unimodular_inverse();
    }
    return r;
}

AutElement identity_aut(const PointGroup& G) {
    return AutElement{G.identity_element(), structural_identity(G.spec), 0};
}

AutElement inner_aut(const PointGroup& G, const FieldMatrix& g) {
    return AutElement{G.canonicalize(g), structural_identity(G.spec), 0};
}

AutElement semilinear_aut(const PointGroup& G, long g) {
    return AutElement{G.identity_element(), structural_identity(G.spec), g};
}

FieldMatrix apply_aut(const PointGroup& G, const AutElement& a, const FieldMatrix& x) {
    FieldMatrix y = G.semilinear_matrix(a.semilinear, x);
    y = structural_apply(G, a.outer, y);
    y = a.inner * y * a.inner.inverse();
    return G.canonicalize(y);
}

AutElement compose_aut(const PointGroup& G, const AutElement& a, const AutElement& b) {
    AutElement r;
    r.inner = G.canonicalize(
        a.inner * structural_apply(G, a.outer, G.semilinear_matrix(a.semilinear, b.inner)));
    r.outer = structural_compose(a.outer, b.outer);
    // semilinear maps compose against the table order (precomposition of z);
    // the two orders agree for the abelian gamma of every constructor
    r.semilinear = G.algebra.gamma.mul((int)b.semilinear, (int)a.semilinear);
    return r;
}

AutElement invert_aut(const PointGroup& G, const AutElement& a) {
    AutElement r;
    r.semilinear = G.algebra.gamma.inv((int)a.semilinear);
    r.outer = structural_invert(a.outer);
    r.inner = G.canonicalize(
        structural_apply(G, r.outer, G.semilinear_matrix(r.semilinear, a.inner.inverse())));
    return r;
}

bool aut_acts_equally(const PointGroup& G, const AutElement& a, const AutElement& b) {
    for (const auto& x : G.elements)
        if (apply_aut(G, a, x) != apply_aut(G, b, x)) return false;
    return true;
}

AutElement flip_aut(const PointGroup& G) {
    if (G.spec.kind != GroupSpec::Kind::SL && G.spec.kind != GroupSpec::Kind::PGL)
        throw error("flip automorphism needs an SL or PGL factor");
    AutElement a = identity_aut(G);
    a.outer.flip[0] = 1;
    return a;
}

AutElement torus_aut(const PointGroup& G, const IntMatrix& m) {
    if (G.spec.kind != GroupSpec::Kind::Torus) throw error("lattice maps need a torus");
    if (m.rows != G.spec.rank || !m.is_unimodular())
        throw error("torus map must be unimodular of the torus rank");
    AutElement a = identity_aut(G);
    a.outer.tmap[0] = m;
    return a;
}

AutElement pinned_outer(const PointGroup& G, const BasedAut& a) {
    switch (G.spec.kind) {
        case GroupSpec::Kind::SL:
        case GroupSpec::Kind::PGL: {
            if (a.matrix == IntMatrix::identity(a.matrix.rows)) return identity_aut(G);
            return flip_aut(G);
        }
        case GroupSpec::Kind::Torus:
            return torus_aut(G, a.matrix);
        case GroupSpec::Kind::Product:
            throw error("assemble product automorphisms from per-factor data");
    }
    throw error("unreachable");
}

TwistSpec trivial_twist(const PointGroup& G) {
    TwistSpec t;
    t.gamma = G.algebra.gamma;
    for (int i = 0; i < t.gamma.order; ++i) {
        t.alpha.push_back(identity_aut(G));
        t.cocycle.push_back(identity_aut(G));
    }
    return t;
}

namespace {

std::vector<AutElement> twisted_maps(const PointGroup& G, const TwistSpec& t) {
    std::vector<AutElement> comp;
    for (int g = 0; g < t.gamma.order; ++g)
        comp.push_back(compose_aut(G, t.cocycle[(size_t)g],
                                   compose_aut(G, t.alpha[(size_t)g], semilinear_aut(G, g))));
    return comp;
}

// deterministic sample for pointwise checks on large ambient groups
std::vector<const FieldMatrix*> sample_elements(const PointGroup& G, size_t cap) {
    std::vector<const FieldMatrix*> out;
    size_t n = G.elements.size();
    size_t stride = n <= cap ? 1 : n / cap;
    for (size_t i = 0; i < n; i += stride) out.push_back(&G.elements[i]);
    return out;
}

}  // namespace

std::vector<std::string> validate_twist(const PointGroup& G, const TwistSpec& t) {
    std::vector<std::string> rep;
    if ((int)t.alpha.size() != t.gamma.order || (int)t.cocycle.size() != t.gamma.order) {
        rep.push_back("twist data sizes do not match the group order");
        return rep;
    }
    if (t.gamma.order != G.algebra.gamma.order)
        rep.push_back("gamma does not match the algebra action");
    auto sample = sample_elements(G, 400);
    auto equal_on_sample = [&](const AutElement& a, const AutElement& b) {
        for (const auto* x : sample)
            if (apply_aut(G, a, *x) != apply_aut(G, b, *x)) return false;
        return true;
    };
    for (int i = 0; i < t.gamma.order; ++i) {
        if (t.alpha[(size_t)i].semilinear != 0)
            rep.push_back("alpha must be semilinear-free at " + std::to_string(i));
        for (int j = 0; j < t.gamma.order; ++j) {
            AutElement lhs = compose_aut(G, t.alpha[(size_t)i], t.alpha[(size_t)j]);
            if (!equal_on_sample(lhs, t.alpha[(size_t)t.gamma.mul(i, j)])) {
                rep.push_back("alpha is not a homomorphism at (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
            }
        }
    }
    std::vector<AutElement> comp = twisted_maps(G, t);
    for (int i = 0; i < t.gamma.order; ++i)
        for (int j = 0; j < t.gamma.order; ++j) {
            AutElement lhs = compose_aut(G, comp[(size_t)i], comp[(size_t)j]);
            if (!equal_on_sample(lhs, comp[(size_t)t.gamma.mul(i, j)]))
                rep.push_back("cocycle condition fails at (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
        }
    return rep;
}

std::vector<FieldMatrix> twisted_fixed_points(const PointGroup& G, const TwistSpec& t) {
    std::vector<std::string> rep = validate_twist(G, t);
    if (!rep.empty()) throw error("invalid twist: " + rep.front());
    std::vector<AutElement> comp = twisted_maps(G, t);
    std::vector<int> gens = generating_set(t.gamma);
    std::vector<FieldMatrix> fixed;
    for (const auto& x : G.elements) {
        bool ok = true;
        for (int g : gens)
            if (apply_aut(G, comp[(size_t)g], x) != x) { ok = false; break; }
        if (ok) fixed.push_back(x);
    }
    // the generator filter must already be fixed by the whole group
    for (const auto& x : fixed)
        for (int g = 0; g < t.gamma.order; ++g)
            if (apply_aut(G, comp[(size_t)g], x) != x)
                throw error("fixed set is not gamma-stable");
    if (fixed.size() <= 2000) {
        std::set<std::string> in;
        for (const auto& x : fixed) in.insert(enc(x));
        for (const auto& x : fixed)
            for (const auto& y : fixed)
                if (!in.count(enc(G.mul(x, y)))) throw error("fixed set is not closed");
    }
    return fixed;
}

namespace {

bool block_upper_triangular(const PointGroup& G, const FieldMatrix& x) {
    for (long i = 0; i < G.msize; ++i)
        for (long j = 0; j < i; ++j)
            if (!x.at(i, j).is_zero()) return false;
    return true;
}

// within-atom simple root positions (r, r+1)
std::vector<std::pair<long, long>> simple_root_positions(const PointGroup& G) {
    std::vector<std::pair<long, long>> pos;
    std::vector<GroupSpec> as = G.spec.atoms();
    std::vector<long> off = atom_offsets(as);
    for (size_t k = 0; k < as.size(); ++k) {
        if (as[k].kind != GroupSpec::Kind::SL && as[k].kind != GroupSpec::Kind::PGL) continue;
        for (long i = 0; i + 1 < as[k].n; ++i) pos.emplace_back(off[k] + i, off[k] + i + 1);
    }
    return pos;
}

bool is_simple_root_vector(const PointGroup& G, const FieldMatrix& x,
                           const std::vector<std::pair<long, long>>& pos) {
    long hits = 0;
    for (long i = 0; i < G.msize; ++i)
        for (long j = 0; j < G.msize; ++j) {
            FieldElement expect = i == j ? G.E.one() : G.E.zero();
            if (x.at(i, j) == expect) continue;
            if (i == j) return false;
            if (std::find(pos.begin(), pos.end(), std::make_pair(i, j)) == pos.end()) return false;
            ++hits;
        }
    return hits == 1;
}

}  // namespace

QuasiSplitResult is_quasi_split_twist(const PointGroup& G, const TwistSpec& t) {
    std::vector<std::string> rep = validate_twist(G, t);
    if (!rep.empty()) throw error("invalid twist: " + rep.front());
    std::vector<AutElement> comp = twisted_maps(G, t);
    QuasiSplitResult out;
    out.quasi_split = true;

    std::vector<FieldMatrix> borel;
    for (const auto& x : G.elements)
        if (block_upper_triangular(G, x)) borel.push_back(x);
    for (const auto& c : comp) {
        for (const auto& b : borel)
            if (!block_upper_triangular(G, apply_aut(G, c, b))) {
                out.quasi_split = false;
                return out;
            }
    }
    std::vector<std::pair<long, long>> pos = simple_root_positions(G);
    for (const auto& [i, j] : pos)
        for (long k = 0; k < G.E.degree(); ++k) {
            std::vector<unsigned long> cf((size_t)k + 1, 0);
            cf[(size_t)k] = 1;
            FieldMatrix v = G.identity_element();
            v.at(i, j) = G.E.from_coeffs(cf);
            v = G.canonicalize(v);
            for (const auto& c : comp)
                if (!is_simple_root_vector(G, apply_aut(G, c, v), pos)) {
                    out.quasi_split = false;
                    return out;
                }
        }
    for (const auto& b : borel) {
        bool ok = true;
        for (int g = 0; g < t.gamma.order; ++g)
            if (apply_aut(G, comp[(size_t)g], b) != b) { ok = false; break; }
        if (ok) out.borel.push_back(b);
    }
    return out;
}

std::vector<AutElement> induced_cocycle(const PointGroup& G, const AutElement& a) {
    if (a.semilinear != 0) throw error("induced cocycles need an F-linear automorphism");
    AutElement ai = invert_aut(G, a);
    std::vector<AutElement> c;
    const FiniteGroup& gamma = G.algebra.gamma;
    for (int g = 0; g < gamma.order; ++g) {
        AutElement tail = compose_aut(G, a, semilinear_aut(G, gamma.inv(g)));
        c.push_back(compose_aut(G, ai, compose_aut(G, semilinear_aut(G, g), tail)));
    }
    return c;
}

std::vector<FieldMatrix> embedded_rational_points(const PointGroup& G) {
    std::vector<FieldMatrix> base = enumerate_spec(G.spec, G.algebra.base);
    std::vector<FieldMatrix> out;
    for (const auto& m : base) {
        FieldMatrix e(G.E, G.msize, G.msize);
        for (long i = 0; i < G.msize; ++i)
            for (long j = 0; j < G.msize; ++j)
                e.at(i, j) = G.E.from_int((long)m.at(i, j).coeffs()[0]);
        out.push_back(G.canonicalize(e));
    }
    std::sort(out.begin(), out.end(),
              [](const FieldMatrix& a, const FieldMatrix& b) { return enc(a) < enc(b); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

TableGroup to_table_group(const PointGroup& G) {
    size_t n = G.elements.size();
    if (n > 5000) throw error("point group too large for a multiplication table");
    TableGroup tg;
    tg.elements = G.elements;  // identity is already first
    std::map<std::string, int> idx;
    for (size_t i = 0; i < n; ++i) idx[enc(tg.elements[i])] = (int)i;
    tg.table.order = (int)n;
    tg.table.table.assign(n, std::vector<int>(n, 0));
    tg.table.labels.clear();
    for (size_t i = 0; i < n; ++i) tg.table.labels.push_back("g" + std::to_string(i));
    tg.table.name = G.spec.str() + "(E)";
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            auto it = idx.find(enc(G.mul(tg.elements[i], tg.elements[j])));
            if (it == idx.end()) throw error("element list not closed");
            tg.table.table[i][j] = it->second;
        }
    return tg;
}

GroupAction semilinear_permutation_action(const PointGroup& G, const TableGroup& tg) {
    GroupAction a;
    a.actor = G.algebra.gamma;
    a.target = tg.table;
    std::map<std::string, int> idx;
    for (size_t i = 0; i < tg.elements.size(); ++i) idx[enc(tg.elements[i])] = (int)i;
    for (int g = 0; g < a.actor.order; ++g) {
        std::vector<int> row;
        for (const auto& x : tg.elements) {
            auto it = idx.find(enc(G.canonicalize(G.semilinear_matrix(g, x))));
            if (it == idx.end()) throw error("semilinear image leaves the group");
            row.push_back(it->second);
        }
        a.perm.push_back(std::move(row));
    }
    std::vector<std::string> rep = a.validate();
    if (!rep.empty()) throw error("semilinear action invalid: " + rep.front());
    return a;
}

long center_order(const PointGroup& G, const std::vector<FieldMatrix>& elems) {
    long c = 0;
    for (const auto& x : elems) {
        bool central = true;
        for (const auto& y : elems)
            if (G.mul(x, y) != G.mul(y, x)) { central = false; break; }
        if (central) ++c;
    }
    return c;
}

long abelianization_order(const PointGroup& G, const std::vector<FieldMatrix>& elems) {
    std::set<std::string> derived;
    std::vector<FieldMatrix> frontier;
    for (const auto& x : elems)
        for (const auto& y : elems) {
            FieldMatrix c = G.mul(G.mul(x, y), G.inv(G.mul(y, x)));
            if (derived.insert(enc(c)).second) frontier.push_back(c);
        }
    std::vector<FieldMatrix> gens = frontier;
    while (!frontier.empty()) {
        std::vector<FieldMatrix> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                FieldMatrix y = G.mul(x, g);
                if (derived.insert(enc(y)).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    if (elems.size() % derived.size() != 0) throw error("derived subgroup does not divide");
    return (long)(elems.size() / derived.size());
}

FieldMatrix restriction_matrix(const FieldMatrix& x) {
    const Field& E = x.field();
    if (E.kind() != FieldKind::Extension || E.char_p() == 0)
        throw error("restriction needs a finite extension field");
    if (x.det().is_zero()) throw error("restriction of a singular matrix");
    long m = E.degree();
    Field F = Field::prime(E.char_p());
    FieldElement z = m == 1 ? E.from_rational(-E.desc().modulus[0])
                            : E.from_coeffs({0, 1});
    long n = x.rows();
    FieldMatrix r(F, n * m, n * m);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            FieldElement pw = x.at(i, j);
            for (long k = 0; k < m; ++k) {
                for (long l = 0; l < m; ++l)
                    r.at(i * m + l, j * m + k) = F.from_int((long)pw.coeffs()[(size_t)l]);
                pw = pw * z;
            }
        }
    return r;
}

}  // namespace galform
