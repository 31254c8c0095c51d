#include "galform/etale.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "galform/linalg.hpp"

namespace galform {

namespace {

void check_point_shape(const FamilyPoint& pt) {
    long m = pt.gamma.order;
    if (m < 1) throw error("empty group");
    if (pt.f.degree() != m || !pt.f.is_monic()) throw error("f must be monic of degree |gamma|");
    if ((long)pt.h.size() != m || (long)pt.d.size() != m || (long)pt.e.size() != m)
        throw error("point has wrong shape");
    for (const auto& row : pt.e)
        if ((long)row.size() != m) throw error("point has wrong shape");
}

}  // namespace

FamilyPoint construct_point_finite_field(unsigned long p, int q_degree, int m) {
    if (q_degree < 1 || m < 1) throw error("construct_point_finite_field: degrees must be positive");
    Field F;
    if (q_degree == 1) {
        F = Field::prime(p);
    } else {
        Poly g = find_irreducible(p, q_degree);
        std::vector<unsigned long> mod;
        for (const auto& c : g.coeffs()) mod.push_back(c.coeffs()[0]);
        F = Field::extension(p, mod);
    }
    Int q = F.order();

    FamilyPoint pt;
    pt.base = F;
    pt.gamma = cyclic_group(m);
    pt.f = find_irreducible(F, m);
    Poly x = Poly::x(F);
    Int qi = 1;
    for (int i = 0; i < m; ++i) {
        pt.h.push_back(poly_pow_mod(x, qi, pt.f));
        qi *= q;
    }
    for (int i = 0; i < m; ++i) pt.d.push_back(poly_compose(pt.f, pt.h[(size_t)i]).exact_div(pt.f));
    pt.e.resize((size_t)m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Poly num = poly_compose(pt.h[(size_t)i], pt.h[(size_t)j]) -
                       pt.h[(size_t)pt.gamma.mul(i, j)];
            pt.e[(size_t)i].push_back(num.exact_div(pt.f));
        }
    return pt;
}

FamilyPoint construct_point_rational(const Poly& f, const std::vector<Poly>& conjugates,
                                     const FiniteGroup& gamma) {
    long m = gamma.order;
    if (f.degree() != m || !f.is_monic()) throw error("f must be monic of degree |gamma|");
    if ((long)conjugates.size() != m) throw error("need one conjugate per group element");

    FamilyPoint pt;
    pt.base = f.field();
    pt.gamma = gamma;
    pt.f = f;
    for (const auto& c : conjugates) pt.h.push_back(c.mod(f));

    if (pt.h[0] != Poly::x(f.field()).mod(f))
        throw error("identity conjugate must reduce to x");
    for (size_t i = 0; i < pt.h.size(); ++i)
        for (size_t j = i + 1; j < pt.h.size(); ++j)
            if (pt.h[i] == pt.h[j]) throw error("conjugates are not pairwise distinct mod f");

    for (long i = 0; i < m; ++i) {
        Poly num = poly_compose(f, pt.h[(size_t)i]);
        try {
            pt.d.push_back(num.exact_div(f));
        } catch (const error&) {
            throw error("conjugate " + std::to_string(i) + " is not a root of f mod f");
        }
    }
    pt.e.resize((size_t)m);
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j) {
            Poly num = poly_compose(pt.h[(size_t)i], pt.h[(size_t)j]) -
                       pt.h[(size_t)gamma.mul((int)i, (int)j)];
            try {
                pt.e[(size_t)i].push_back(num.exact_div(f));
            } catch (const error&) {
                throw error("group law violated at (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
            }
        }
    return pt;
}

FamilyPoint construct_point_cyclotomic(unsigned long ell) {
    // prime ell: the ell-th cyclotomic field, Galois over QQ with cyclic
    // group generated by zeta -> zeta^g for a primitive root g mod ell
    if (!is_prime(ell) || ell < 3) throw error("cyclotomic shortcut needs an odd prime");
    long m = (long)ell - 1;
    Field Q = Field::rationals();
    std::vector<FieldElement> cf((size_t)ell, Q.one());
    Poly f(Q, cf);  // 1 + x + .. + x^(ell-1)

    unsigned long g = 2;
    for (;; ++g) {
        unsigned long acc = 1;
        bool primitive = true;
        for (long k = 1; k < m; ++k) {
            acc = (acc * g) % ell;
            if (acc == 1) { primitive = false; break; }
        }
        acc = (acc * g) % ell;
        if (primitive && acc == 1) break;
    }
    std::vector<Poly> conj;
    unsigned long e = 1;
    for (long i = 0; i < m; ++i) {
        std::vector<FieldElement> mono((size_t)e + 1, Q.zero());
        mono.back() = Q.one();
        conj.push_back(Poly(Q, mono).mod(f));
        e = (e * g) % ell;
    }
    return construct_point_rational(f, conj, cyclic_group((int)m));
}

VerifyReport verify_family_point(const FamilyPoint& pt) {
    VerifyReport rep;
    check_point_shape(pt);
    long m = pt.gamma.order;
    const Poly& f = pt.f;
    const Field& F = pt.base;

    FieldElement res = poly_resultant(f, f.derivative());
    if (res.is_zero()) rep.failures.push_back("condition a: Res(f, f') = 0");

    if ((Poly::x(F) - pt.h[0]).mod(f) != Poly::zero(F))
        rep.failures.push_back("identity map is not x mod f");

    for (long i = 0; i < m; ++i) {
        if (pt.h[(size_t)i].degree() > m - 1)
            rep.failures.push_back("degree bound: h_" + std::to_string(i));
        if (pt.d[(size_t)i].degree() > m * m - 2 * m)
            rep.failures.push_back("degree bound: d_" + std::to_string(i));
        for (long j = 0; j < m; ++j)
            if (pt.e[(size_t)i][(size_t)j].degree() > m * m - 3 * m + 1)
                rep.failures.push_back("degree bound: e_" + std::to_string(i) + "_" +
                                       std::to_string(j));
    }

    for (long i = 0; i < m; ++i) {
        Poly lhs = f * pt.d[(size_t)i];
        Poly rhs = poly_compose(f, pt.h[(size_t)i]);
        if (lhs != rhs)
            rep.failures.push_back("condition b at " + std::to_string(i) + ": witness " +
                                   (rhs - lhs).str());
    }
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j) {
            Poly lhs = f * pt.e[(size_t)i][(size_t)j];
            Poly rhs = poly_compose(pt.h[(size_t)i], pt.h[(size_t)j]) -
                       pt.h[(size_t)pt.gamma.mul((int)i, (int)j)];
            if (lhs != rhs)
                rep.failures.push_back("condition c at (" + std::to_string(i) + "," +
                                       std::to_string(j) + "): witness " + (rhs - lhs).str());
        }

    // fixed subalgebra of F[z]/(f), regardless of whether b and c hold
    EtaleAlgebra alg{F, f, pt.gamma, {}};
    for (const auto& h : pt.h) alg.action.push_back(h.mod(f));
    long dim = (long)invariant_subalgebra(alg).size();
    if (dim != 1)
        rep.failures.push_back("fixed subalgebra has dimension " + std::to_string(dim));
    return rep;
}

EtaleAlgebra fiber_algebra(const FamilyPoint& pt) {
    VerifyReport rep = verify_family_point(pt);
    if (!rep.pass()) throw error("invalid family point: " + rep.failures.front());
    EtaleAlgebra alg{pt.base, pt.f, pt.gamma, {}};
    for (const auto& h : pt.h) alg.action.push_back(h.mod(pt.f));
    return alg;
}

FieldMatrix action_matrix(const EtaleAlgebra& alg, const Poly& h) {
    long m = alg.f.degree();
    FieldMatrix mat(alg.base, m, m);
    Poly pw = Poly::constant(alg.base, alg.base.one());
    Poly hr = h.mod(alg.f);
    for (long j = 0; j < m; ++j) {
        for (long i = 0; i <= pw.degree(); ++i) mat.at(i, j) = pw.coeff((size_t)i);
        pw = (pw * hr).mod(alg.f);
    }
    return mat;
}

std::vector<std::vector<FieldElement>> invariant_subalgebra(const EtaleAlgebra& alg) {
    long m = alg.f.degree();
    long n = (long)alg.action.size();
    FieldMatrix stacked(alg.base, m * n, m);
    for (long k = 0; k < n; ++k) {
        FieldMatrix mk = action_matrix(alg, alg.action[(size_t)k]);
        for (long i = 0; i < m; ++i)
            for (long j = 0; j < m; ++j) {
                FieldElement v = mk.at(i, j);
                if (i == j) v = v - alg.base.one();
                stacked.at(k * m + i, j) = v;
            }
    }
    return kernel_basis(stacked);
}

TensorSplit tensor_split(const EtaleAlgebra& alg, const Field& ext) {
    long m = alg.f.degree();
    TensorSplit ts;

    std::vector<std::vector<int>> perm;
    if (ext.finite()) {
        if (!alg.base.finite() || ext.char_p() != alg.base.char_p())
            throw error("splitting field has the wrong characteristic");
        std::function<FieldElement(const FieldElement&)> embed;
        if (alg.base.kind() == FieldKind::Prime) {
            embed = [&ext](const FieldElement& c) { return ext.from_int((long)c.coeffs()[0]); };
        } else {
            Poly bm(ext);
            {
                std::vector<FieldElement> cf;
                for (const auto& r : alg.base.desc().modulus) cf.push_back(ext.from_rational(r));
                bm = Poly(ext, cf);
            }
            FieldElement root = ext.zero();
            bool found = false;
            for (const auto& cand : ext.elements())
                if (bm.eval(cand).is_zero()) { root = cand; found = true; break; }
            if (!found) throw error("extension does not contain the base field");
            embed = [root, &ext](const FieldElement& c) {
                FieldElement acc = ext.zero();
                FieldElement pw = ext.one();
                for (unsigned long k : c.coeffs()) {
                    acc = acc + pw * ext.from_int((long)k);
                    pw = pw * root;
                }
                return acc;
            };
        }
        auto lift = [&](const Poly& p) {
            std::vector<FieldElement> cf;
            for (const auto& c : p.coeffs()) cf.push_back(embed(c));
            return Poly(ext, cf);
        };
        Poly fx = lift(alg.f);
        std::vector<FieldElement> roots;
        for (const auto& cand : ext.elements())
            if (fx.eval(cand).is_zero()) roots.push_back(cand);
        if ((long)roots.size() != m) throw error("f does not split over the extension");
        for (const auto& h : alg.action) {
            Poly hx = lift(h);
            std::vector<int> row;
            for (const auto& r : roots) {
                FieldElement v = hx.eval(r);
                auto it = std::find(roots.begin(), roots.end(), v);
                if (it == roots.end()) throw error("action does not permute the roots");
                row.push_back((int)(it - roots.begin()));
            }
            perm.push_back(std::move(row));
        }
        ts.components = (long)roots.size();
    } else if (ext.kind() == FieldKind::Extension && ext.char_p() == 0) {
        // abstract target QQ[x]/(f) itself; the components are z -> h_j(z)
        if (alg.base.kind() != FieldKind::Rationals)
            throw error("abstract splitting targets require a rational base");
        const auto& mod = ext.desc().modulus;
        bool same = (long)mod.size() == m + 1;
        for (long k = 0; same && k <= m; ++k)
            if (alg.f.coeff((size_t)k).rational() != mod[(size_t)k]) same = false;
        if (!same) throw error("unsupported splitting target: modulus must equal f");
        for (const auto& hi : alg.action) {
            std::vector<int> row;
            for (const auto& hj : alg.action) {
                Poly comp = poly_compose(hi, hj).mod(alg.f);
                auto it = std::find(alg.action.begin(), alg.action.end(), comp);
                if (it == alg.action.end()) throw error("action does not permute the roots");
                row.push_back((int)(it - alg.action.begin()));
            }
            perm.push_back(std::move(row));
        }
        ts.components = m;
    } else {
        throw error("unsupported splitting target");
    }

    for (const auto& row : perm) {
        std::vector<int> s = row;
        std::sort(s.begin(), s.end());
        for (long k = 0; k < ts.components; ++k)
            if (s[(size_t)k] != (int)k) throw error("action does not permute the components");
    }

    std::vector<char> seen((size_t)ts.components, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        for (const auto& row : perm)
            if (!seen[(size_t)row[(size_t)c]]) {
                seen[(size_t)row[(size_t)c]] = 1;
                stack.push_back(row[(size_t)c]);
            }
    }
    ts.transitive = std::find(seen.begin(), seen.end(), 0) == seen.end();
    ts.perm = std::move(perm);

    if ((long)invariant_subalgebra(alg).size() == 1 && !ts.transitive)
        throw error("connected algebra split into a non-transitive component set");
    return ts;
}

namespace {

struct VarLayout {
    long m, hc, dc, ec, total;
    explicit VarLayout(long m_)
        : m(m_),
          hc(m_),
          dc(std::max(0L, m_ * m_ - 2 * m_ + 1)),
          ec(std::max(0L, m_ * m_ - 3 * m_ + 2)),
          total(m_ + m_ * m_ + m_ * dc + m_ * m_ * ec + 1) {}
    long a(long k) const { return k; }
    long h(long i, long k) const { return m + i * hc + k; }
    long d(long i, long k) const { return m + m * hc + i * dc + k; }
    long e(long i, long j, long k) const { return m + m * hc + m * dc + (i * m + j) * ec + k; }
    long u() const { return total - 1; }
};

MPoly widen(const MPoly& p, long nvars) {
    MPoly r(nvars);
    for (const auto& [mono, c] : p.terms()) {
        MPoly term = MPoly::constant(nvars, c);
        for (size_t i = 0; i < mono.size(); ++i)
            for (int k = 0; k < mono[i]; ++k) term = term * MPoly::var(nvars, (long)i);
        r = r + term;
    }
    return r;
}

}  // namespace

std::pair<Presentation, Presentation> emit_presentation(const FiniteGroup& gamma) {
    long m = gamma.order;
    VarLayout L(m);
    long nv = L.total;

    Presentation ring;
    for (long k = 0; k < m; ++k) ring.variables.push_back("a" + std::to_string(k));
    for (long i = 0; i < m; ++i)
        for (long k = 0; k < L.hc; ++k)
            ring.variables.push_back("h" + std::to_string(i) + "_" + std::to_string(k));
    for (long i = 0; i < m; ++i)
        for (long k = 0; k < L.dc; ++k)
            ring.variables.push_back("d" + std::to_string(i) + "_" + std::to_string(k));
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j)
            for (long k = 0; k < L.ec; ++k)
                ring.variables.push_back("e" + std::to_string(i) + "_" + std::to_string(j) + "_" +
                                         std::to_string(k));
    ring.variables.push_back("u");

    std::vector<MPoly> fc;
    for (long k = 0; k < m; ++k) fc.push_back(MPoly::var(nv, L.a(k)));
    fc.push_back(MPoly::constant(nv, 1));
    SymPoly f(nv, fc);

    auto sym_of = [&](long base, long count) {
        std::vector<MPoly> c;
        for (long k = 0; k < count; ++k) c.push_back(MPoly::var(nv, base + k));
        return SymPoly(nv, c);
    };
    std::vector<SymPoly> h, d;
    for (long i = 0; i < m; ++i) h.push_back(sym_of(L.h(i, 0), L.hc));
    for (long i = 0; i < m; ++i)
        d.push_back(L.dc > 0 ? sym_of(L.d(i, 0), L.dc) : SymPoly::zero(nv));

    ring.relations.push_back(MPoly::var(nv, L.u()) * sympoly_resultant(f, f.derivative()) -
                             MPoly::constant(nv, 1));
    for (long i = 0; i < m; ++i) {
        SymPoly lhs = f * d[(size_t)i] - sympoly_compose(f, h[(size_t)i]);
        for (long k = 0; k <= m * m - m; ++k) ring.relations.push_back(lhs.coeff((size_t)k));
    }
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j) {
            SymPoly eij = L.ec > 0 ? sym_of(L.e(i, j, 0), L.ec) : SymPoly::zero(nv);
            SymPoly lhs = f * eij - (sympoly_compose(h[(size_t)i], h[(size_t)j]) -
                                     h[(size_t)gamma.mul((int)i, (int)j)]);
            for (long k = 0; k <= m * m - 2 * m + 1; ++k)
                ring.relations.push_back(lhs.coeff((size_t)k));
        }

    Presentation alg;
    alg.variables = ring.variables;
    alg.variables.push_back("z");
    for (const auto& r : ring.relations) alg.relations.push_back(widen(r, nv + 1));
    MPoly fz = MPoly(nv + 1);
    MPoly zp = MPoly::constant(nv + 1, 1);
    for (long k = 0; k < m; ++k) {
        fz = fz + MPoly::var(nv + 1, L.a(k)) * zp;
        zp = zp * MPoly::var(nv + 1, nv);
    }
    alg.relations.push_back(fz + zp);

    return {ring, alg};
}

std::vector<FieldElement> point_to_tuple(const FamilyPoint& pt) {
    check_point_shape(pt);
    long m = pt.gamma.order;
    VarLayout L(m);
    std::vector<FieldElement> x;
    x.reserve((size_t)L.total);
    for (long k = 0; k < m; ++k) x.push_back(pt.f.coeff((size_t)k));
    for (long i = 0; i < m; ++i)
        for (long k = 0; k < L.hc; ++k) x.push_back(pt.h[(size_t)i].coeff((size_t)k));
    for (long i = 0; i < m; ++i) {
        if (pt.d[(size_t)i].degree() >= L.dc) throw error("d exceeds the presentation degree bound");
        for (long k = 0; k < L.dc; ++k) x.push_back(pt.d[(size_t)i].coeff((size_t)k));
    }
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j) {
            if (pt.e[(size_t)i][(size_t)j].degree() >= L.ec)
                throw error("e exceeds the presentation degree bound");
            for (long k = 0; k < L.ec; ++k) x.push_back(pt.e[(size_t)i][(size_t)j].coeff((size_t)k));
        }
    FieldElement res = poly_resultant(pt.f, pt.f.derivative());
    x.push_back(res.is_zero() ? pt.base.zero() : res.inverse());
    return x;
}

}  // namespace galform
