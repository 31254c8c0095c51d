// Acceptance gate: one pass/fail line per criterion, exit 0 only when all
// eleven hold. Each criterion enforces its own wall-clock budget.
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "galform/catalog.hpp"

using namespace galform;

namespace {

int failures = 0;

void criterion(int n, const std::string& label, double budget_s,
               const std::function<bool(std::ostream&)>& body) {
    std::ostringstream detail;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail << "exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > budget_s) {
        ok = false;
        detail << " [over budget: " << secs << "s > " << budget_s << "s]";
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << label << " ("
              << secs << "s)";
    std::string d = detail.str();
    if (!ok && !d.empty()) std::cout << " -- " << d;
    std::cout << "\n";
    if (!ok) ++failures;
}

bool tuple_satisfies(const Presentation& pres, const Field& F,
                     const std::vector<FieldElement>& tuple) {
    for (const auto& rel : pres.relations)
        if (!rel.eval(F, tuple).is_zero()) return false;
    return true;
}

FamilyPoint rational_sqrt2() {
    Field Q = Field::rationals();
    Poly f = Poly::from_ints(Q, {-2, 0, 1});
    return construct_point_rational(f, {Poly::x(Q), -Poly::x(Q)}, cyclic_group(2));
}

FamilyPoint rational_zeta3() {
    Field Q = Field::rationals();
    Poly f = Poly::from_ints(Q, {1, 1, 1});
    return construct_point_rational(f, {Poly::x(Q), Poly::from_ints(Q, {-1, -1})},
                                    cyclic_group(2));
}

std::set<std::string> encode_set(const std::vector<FieldMatrix>& v) {
    std::set<std::string> s;
    for (const auto& m : v) {
        std::string e;
        m.encode(e);
        s.insert(e);
    }
    return s;
}

}  // namespace

int main() {
    criterion(1, "family points over finite fields and the rationals", 8.0,
              [](std::ostream& d) {
                  struct Case { unsigned long p; int k, m; };
                  for (Case c : {Case{2, 1, 2}, Case{3, 1, 2}, Case{2, 1, 3}, Case{2, 2, 2},
                                 Case{5, 1, 2}}) {
                      auto t0 = std::chrono::steady_clock::now();
                      FamilyPoint pt = construct_point_finite_field(c.p, c.k, c.m);
                      if (!verify_family_point(pt).pass()) {
                          d << "finite field point failed at p=" << c.p;
                          return false;
                      }
                      if (std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                              .count() > 1.0) {
                          d << "single point over 1s";
                          return false;
                      }
                  }
                  for (FamilyPoint pt :
                       {rational_sqrt2(), rational_zeta3(), construct_point_cyclotomic(5)}) {
                      if (!verify_family_point(pt).pass()) {
                          d << "rational point failed verification";
                          return false;
                      }
                  }
                  if (construct_point_cyclotomic(5).gamma.order != 4) {
                      d << "cyclotomic degree-5 point should have a Z/4 group";
                      return false;
                  }
                  return true;
              });

    criterion(2, "presentation soundness for Z/2 and Z/3", 1.0, [](std::ostream& d) {
        auto [p2, p2e] = emit_presentation(cyclic_group(2));
        (void)p2e;
        if (p2.variables.size() != 9 || p2.relations.size() != 15) {
            d << "Z/2 shape is " << p2.variables.size() << "/" << p2.relations.size();
            return false;
        }
        auto [p3, p3e] = emit_presentation(cyclic_group(3));
        (void)p3e;
        std::vector<FamilyPoint> z2pts = {construct_point_finite_field(2, 1, 2),
                                          construct_point_finite_field(3, 1, 2),
                                          construct_point_finite_field(5, 1, 2), rational_sqrt2(),
                                          rational_zeta3()};
        std::vector<FamilyPoint> z3pts = {construct_point_finite_field(2, 1, 3),
                                          construct_point_finite_field(5, 1, 3)};
        for (const auto& pt : z2pts)
            if (!tuple_satisfies(p2, pt.base, point_to_tuple(pt))) {
                d << "a valid Z/2 tuple violates the relations";
                return false;
            }
        for (const auto& pt : z3pts)
            if (!tuple_satisfies(p3, pt.base, point_to_tuple(pt))) {
                d << "a valid Z/3 tuple violates the relations";
                return false;
            }
        // three independent corruptions per group must each break a relation
        auto corrupted_fail = [&](const Presentation& pres, const FamilyPoint& base) {
            int broken = 0;
            for (int which = 0; which < 3; ++which) {
                FamilyPoint c = base;
                int m = c.gamma.order;
                if (which == 0) c.h[(size_t)m - 1] = c.h[(size_t)m - 1] + Poly::x(c.base);
                if (which == 1) c.d[1] = Poly::zero(c.base);
                if (which == 2)
                    c.d[0] = c.d[0] + Poly::constant(c.base, c.base.one());
                if (!tuple_satisfies(pres, c.base, point_to_tuple(c))) ++broken;
            }
            return broken == 3;
        };
        if (!corrupted_fail(p2, construct_point_finite_field(3, 1, 2))) {
            d << "a corrupted Z/2 tuple still satisfies everything";
            return false;
        }
        if (!corrupted_fail(p3, construct_point_finite_field(2, 1, 3))) {
            d << "a corrupted Z/3 tuple still satisfies everything";
            return false;
        }
        return true;
    });

    criterion(3, "one dimensional invariants and transitive tensor splitting", 1.0,
              [](std::ostream& d) {
                  std::vector<FamilyPoint> pts = {
                      construct_point_finite_field(2, 1, 2), construct_point_finite_field(3, 1, 2),
                      construct_point_finite_field(2, 1, 3), construct_point_finite_field(2, 2, 2),
                      construct_point_finite_field(5, 1, 2), rational_sqrt2(), rational_zeta3(),
                      construct_point_cyclotomic(5)};
                  for (const auto& pt : pts) {
                      EtaleAlgebra alg = fiber_algebra(pt);
                      if (invariant_subalgebra(alg).size() != 1) {
                          d << "fixed subalgebra is not a line";
                          return false;
                      }
                      if (!pt.base.finite()) continue;
                      Field ext;
                      if (alg.base.kind() == FieldKind::Prime) {
                          std::vector<unsigned long> v;
                          for (const auto& c : pt.f.coeffs()) v.push_back(c.coeffs()[0]);
                          ext = Field::extension(pt.base.char_p(), v);
                      } else {
                          // split in a field containing both the base and the roots
                          Poly big = find_irreducible(Field::prime(pt.base.char_p()),
                                                      pt.base.degree() * pt.gamma.order);
                          std::vector<unsigned long> v;
                          for (const auto& c : big.coeffs()) v.push_back(c.coeffs()[0]);
                          ext = Field::extension(pt.base.char_p(), v);
                      }
                      TensorSplit ts = tensor_split(alg, ext);
                      if (ts.components != pt.gamma.order || !ts.transitive) {
                          d << "tensor splitting is not a transitive orbit";
                          return false;
                      }
                  }
                  return true;
              });

    criterion(4, "SU3 over F4/F2 has order 216 and is quasi-split", 60.0, [](std::ostream& d) {
        FamilyPoint pt = construct_point_finite_field(2, 1, 2);
        PointGroup G = point_group(GroupSpec::sl(3), pt);
        if ((long)G.elements.size() != 60480) {
            d << "ambient order " << G.elements.size();
            return false;
        }
        TwistSpec t = trivial_twist(G);
        t.alpha[1] = flip_aut(G);
        std::vector<FieldMatrix> fixed = twisted_fixed_points(G, t);
        long q = 2;
        long expect = (q * q * q) * (q * q - 1) * (q * q * q + 1);
        if ((long)fixed.size() != 216 || (long)fixed.size() != expect) {
            d << "fixed order " << fixed.size();
            return false;
        }
        if (!is_quasi_split_twist(G, t).quasi_split) {
            d << "not quasi-split";
            return false;
        }
        return true;
    });

    criterion(5, "norm-one torus over F9/F3 has order 4", 1.0, [](std::ostream& d) {
        FamilyPoint pt = construct_point_finite_field(3, 1, 2);
        PointGroup G = point_group(GroupSpec::torus(1), pt);
        TwistSpec t = trivial_twist(G);
        IntMatrix neg(1, 1);
        neg.at(0, 0) = -1;
        t.alpha[1] = torus_aut(G, neg);
        std::vector<FieldMatrix> fixed = twisted_fixed_points(G, t);
        if (fixed.size() != 4) {
            d << "order " << fixed.size();
            return false;
        }
        return true;
    });

    criterion(6, "Lang triviality for Z/2 into PGL2(F4) and the inner twists of SL2", 5.0,
              [](std::ostream& d) {
                  FamilyPoint pt = construct_point_finite_field(2, 1, 2);
                  PointGroup ad = point_group(GroupSpec::pgl(2), pt);
                  TableGroup tg = to_table_group(ad);
                  GroupAction act = semilinear_permutation_action(ad, tg);
                  std::vector<Cocycle> zs = z1_cocycles(act);
                  H1Classes h1 = h1_classes(act, zs);
                  if (h1.classes.size() != 1) {
                      d << zs.size() << " cocycles fall into " << h1.classes.size() << " classes";
                      return false;
                  }
                  PointGroup G = point_group(GroupSpec::sl(2), pt);
                  for (const Cocycle& c : zs) {
                      TwistSpec t = trivial_twist(G);
                      for (int g = 0; g < 2; ++g) {
                          FieldMatrix v = G.identity_element();
                          const FieldMatrix& a = tg.elements[(size_t)c.values[(size_t)g]];
                          for (long i = 0; i < 2; ++i)
                              for (long j = 0; j < 2; ++j) v.at(i, j) = a.at(i, j);
                          t.cocycle[(size_t)g].inner = v;
                      }
                      if (twisted_fixed_points(G, t).size() != 6) {
                          d << "an inner twist of SL2 misses order 6";
                          return false;
                      }
                  }
                  return true;
              });

    criterion(7, "trivial twist equals the embedded rational points", 60.0, [](std::ostream& d) {
        FamilyPoint pt = construct_point_finite_field(2, 1, 2);
        for (const GroupSpec& spec : {GroupSpec::sl(2), GroupSpec::sl(3)}) {
            PointGroup G = point_group(spec, pt);
            std::set<std::string> fixed = encode_set(twisted_fixed_points(G, trivial_twist(G)));
            std::set<std::string> embedded = encode_set(embedded_rational_points(G));
            if (fixed != embedded) {
                d << spec.str() << ": fixed set differs from G(F)";
                return false;
            }
        }
        return true;
    });

    criterion(8, "root datum enumeration and automorphism orders", 10.0, [](std::ostream& d) {
        if (enumerate_root_data(1).size() != 3 || enumerate_root_data(2).size() != 13) {
            d << "class counts are off";
            return false;
        }
        auto find = [](long rank, const std::string& name) -> BasedRootDatum {
            for (const BasedRootDatum& b : enumerate_root_data(rank)) {
                auto s = recognize_spec(b);
                if (s && s->str() == name) return b;
            }
            throw error("datum not found: " + name);
        };
        if (based_automorphism_group(find(1, "SL2")).elements.size() != 1) {
            d << "Aut(SL2) should be trivial";
            return false;
        }
        if (based_automorphism_group(find(2, "SL3")).elements.size() != 2) {
            d << "Aut(SL3) should have order 2";
            return false;
        }
        if (based_automorphism_group(find(2, "SL2xSL2")).elements.size() != 2) {
            d << "Aut(SL2xSL2) should have order 2";
            return false;
        }
        return true;
    });

    criterion(9, "hom classes and the exhaustive cocycle oracle", 5.0, [](std::ostream& d) {
        if (hom_classes(cyclic_group(2), dihedral_group(3)).size() != 2) {
            d << "Hom(Z/2, S3) class count is off";
            return false;
        }
        // oracle: filter every map gamma -> target by the cocycle identity
        auto oracle = [](const GroupAction& a) {
            std::vector<Cocycle> out;
            int n = a.target.order, m = a.actor.order;
            std::vector<int> v((size_t)m, 0);
            std::function<void(int)> rec = [&](int pos) {
                if (pos == m) {
                    Cocycle c{v};
                    if (is_cocycle(a, c)) out.push_back(c);
                    return;
                }
                for (int x = 0; x < n; ++x) {
                    v[(size_t)pos] = x;
                    rec(pos + 1);
                }
            };
            rec(0);
            std::sort(out.begin(), out.end());
            return out;
        };
        std::vector<GroupAction> cases;
        {
            // conjugation of S3 on itself restricted to a Z/2 subgroup
            FiniteGroup s3 = dihedral_group(3);
            GroupAction a;
            a.actor = cyclic_group(2);
            a.target = s3;
            int r = -1;
            for (int i = 1; i < 6; ++i)
                if (s3.element_order(i) == 2) { r = i; break; }
            a.perm.push_back([&] {
                std::vector<int> id;
                for (int i = 0; i < 6; ++i) id.push_back(i);
                return id;
            }());
            a.perm.push_back([&] {
                std::vector<int> row;
                for (int i = 0; i < 6; ++i) row.push_back(s3.mul(s3.mul(r, i), s3.inv(r)));
                return row;
            }());
            cases.push_back(a);
            cases.push_back(trivial_action(cyclic_group(3), cyclic_group(4)));
            FamilyPoint pt = construct_point_finite_field(2, 1, 2);
            PointGroup ad = point_group(GroupSpec::pgl(2), pt);
            TableGroup tg = to_table_group(ad);
            cases.push_back(semilinear_permutation_action(ad, tg));
        }
        for (const GroupAction& a : cases) {
            std::vector<Cocycle> fast = z1_cocycles(a);
            std::sort(fast.begin(), fast.end());
            if (fast != oracle(a)) {
                d << "cocycle search disagrees with the exhaustive oracle";
                return false;
            }
        }
        return true;
    });

    criterion(10, "rank-1 catalog over F3 has exactly the four known fingerprints", 120.0,
              [](std::ostream& d) {
                  Catalog triv = build_catalog(1, 3, 1, 2, CocycleMode::Trivial);
                  std::vector<Fingerprint> expect = {{2, 2, 2, true},
                                                     {4, 4, 4, true},
                                                     {24, 1, 2, true},
                                                     {24, 2, 3, true}};
                  std::sort(expect.begin(), expect.end());
                  if (triv.fingerprints != expect) {
                      d << "trivial-mode fingerprints:";
                      for (const auto& f : triv.fingerprints) d << " " << f.str();
                      return false;
                  }
                  Catalog exh = build_catalog(1, 3, 1, 2, CocycleMode::Exhaustive);
                  if (exh.fingerprints != expect) {
                      d << "exhaustive mode added fingerprints:";
                      for (const auto& f : exh.fingerprints) d << " " << f.str();
                      return false;
                  }
                  return true;
              });

    criterion(11, "catalog construction is byte-identical across runs", 120.0,
              [](std::ostream& d) {
                  std::string a = build_catalog(1, 3, 1, 2, CocycleMode::Trivial).document.dump(2);
                  std::string b = build_catalog(1, 3, 1, 2, CocycleMode::Trivial).document.dump(2);
                  std::string c =
                      build_catalog(1, 2, 1, 2, CocycleMode::Exhaustive).document.dump(2);
                  std::string e =
                      build_catalog(1, 2, 1, 2, CocycleMode::Exhaustive).document.dump(2);
                  if (a != b || c != e) {
                      d << "two identical runs differ";
                      return false;
                  }
                  return true;
              });

    return failures == 0 ? 0 : 1;
}
