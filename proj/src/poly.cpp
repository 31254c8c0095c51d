#include "galform/poly.hpp"

#include <sstream>

namespace galform {

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void Poly::check_same(const Poly& o) const {
    if (field_ != o.field_) throw error("field mismatch");
}

Poly Poly::from_ints(const Field& f, const std::vector<long>& coeffs) {
    std::vector<FieldElement> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.push_back(f.from_int(v));
    return Poly(f, std::move(c));
}

FieldElement Poly::leading() const {
    if (c_.empty()) return field_.zero();
    return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
    check_same(o);
    std::vector<FieldElement> r(std::max(c_.size(), o.c_.size()), field_.zero());
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < c_.size()) r[i] = r[i] + c_[i];
        if (i < o.c_.size()) r[i] = r[i] + o.c_[i];
    }
    return Poly(field_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    std::vector<FieldElement> r(c_.size(), field_.zero());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return Poly(field_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    check_same(o);
    if (c_.empty() || o.c_.empty()) return Poly(field_);
    std::vector<FieldElement> r(c_.size() + o.c_.size() - 1, field_.zero());
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = r[i + j] + c_[i] * o.c_[j];
    return Poly(field_, std::move(r));
}

Poly Poly::operator*(const FieldElement& s) const {
    std::vector<FieldElement> r(c_.size(), field_.zero());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
    return Poly(field_, std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    check_same(d);
    if (d.is_zero()) throw error("division by the zero polynomial");
    if (degree() < d.degree()) return {Poly(field_), *this};
    FieldElement linv = d.leading().inverse();
    std::vector<FieldElement> rem = c_;
    std::vector<FieldElement> quot((size_t)(degree() - d.degree() + 1), field_.zero());
    for (long k = degree() - d.degree(); k >= 0; --k) {
        FieldElement c = rem[(size_t)(k + d.degree())] * linv;
        quot[(size_t)k] = c;
        if (!c.is_zero())
            for (long i = 0; i <= d.degree(); ++i)
                rem[(size_t)(k + i)] = rem[(size_t)(k + i)] - c * d.c_[(size_t)i];
    }
    rem.resize((size_t)std::max(0L, d.degree()));
    return {Poly(field_, std::move(quot)), Poly(field_, std::move(rem))};
}

Poly Poly::exact_div(const Poly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw error("inexact polynomial division");
    return q;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly(field_);
    std::vector<FieldElement> r(c_.size() - 1, field_.zero());
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * field_.from_int((long)i);
    return Poly(field_, std::move(r));
}

FieldElement Poly::eval(const FieldElement& x) const {
    FieldElement acc = field_.zero();
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << c_[i].str();
        if (i == 1) os << "*x";
        if (i > 1) os << "*x^" << i;
        first = false;
    }
    return os.str();
}

void Poly::encode(std::string& out) const {
    for (const auto& c : c_) c.encode(out);
    out += '|';
}

Poly poly_compose(const Poly& outer, const Poly& inner) {
    if (outer.field() != inner.field()) throw error("field mismatch");
    Poly acc(outer.field());
    for (size_t i = outer.coeffs().size(); i-- > 0;)
        acc = acc * inner + Poly::constant(outer.field(), outer.coeffs()[i]);
    return acc;
}

FieldElement poly_resultant(const Poly& f, const Poly& g) {
    if (f.field() != g.field()) throw error("field mismatch");
    const Field& K = f.field();
    if (f.is_zero()) throw error("resultant requires a nonzero first argument");
    long n = f.degree(), m = g.degree();
    if (n == 0) return f.coeff(0).pow(Int(std::max(0L, m)));
    if (g.is_zero()) return K.zero();
    if (m == 0) return g.coeff(0).pow(Int(n));
    // Sylvester matrix, size n+m, rows of g shifted then rows of f shifted
    long N = n + m;
    std::vector<FieldElement> a((size_t)(N * N), K.zero());
    auto at = [&](long i, long j) -> FieldElement& { return a[(size_t)(i * N + j)]; };
    for (long r = 0; r < m; ++r)
        for (long j = 0; j <= n; ++j) at(r, r + j) = f.coeff((size_t)(n - j));
    for (long r = 0; r < n; ++r)
        for (long j = 0; j <= m; ++j) at(m + r, r + j) = g.coeff((size_t)(m - j));
    // Gaussian elimination, exact over the field; track sign via row swaps
    FieldElement det = K.one();
    for (long col = 0; col < N; ++col) {
        long piv = -1;
        for (long r = col; r < N; ++r)
            if (!at(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return K.zero();
        if (piv != col) {
            for (long j = 0; j < N; ++j) std::swap(at(piv, j), at(col, j));
            det = -det;
        }
        det = det * at(col, col);
        FieldElement inv = at(col, col).inverse();
        for (long r = col + 1; r < N; ++r) {
            if (at(r, col).is_zero()) continue;
            FieldElement factor = at(r, col) * inv;
            for (long j = col; j < N; ++j) at(r, j) = at(r, j) - factor * at(col, j);
        }
    }
    return det;
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.mod(b);
        a = b;
        b = r;
    }
    return a.monic();
}

Poly poly_pow_mod(const Poly& base, const Int& e, const Poly& m) {
    if (e < 0) throw error("negative exponent");
    Poly acc = Poly::constant(base.field(), base.field().one());
    Poly b = base.mod(m);
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = (acc * b).mod(m);
        b = (b * b).mod(m);
        k >>= 1;
    }
    return acc;
}

bool poly_is_irreducible(const Poly& f) {
    const Field& K = f.field();
    if (!K.finite()) throw error("irreducibility test requires a finite field");
    long m = f.degree();
    if (m <= 0) return false;
    if (m == 1) return true;
    Int q = K.order();
    Poly x = Poly::x(K);
    // x^(q^m) == x mod f
    Int qm;
    mpz_pow_ui(qm.get_mpz_t(), q.get_mpz_t(), (unsigned long)m);
    if (poly_pow_mod(x, qm, f) != x.mod(f)) return false;
    // gcd(x^(q^(m/l)) - x, f) = 1 for every prime l | m
    for (long l = 2; l <= m; ++l) {
        if (m % l != 0) continue;
        bool lp = true;
        for (long d = 2; d * d <= l; ++d)
            if (l % d == 0) lp = false;
        if (!lp) continue;
        Int qk;
        mpz_pow_ui(qk.get_mpz_t(), q.get_mpz_t(), (unsigned long)(m / l));
        Poly t = poly_pow_mod(x, qk, f) - x.mod(f);
        if (poly_gcd(t, f).degree() != 0) return false;
    }
    return true;
}

Poly find_irreducible(const Field& base, int m) {
    if (!base.finite()) throw error("find_irreducible requires a finite base field");
    if (m < 1) throw error("degree must be positive");
    std::vector<FieldElement> elems = base.elements();  // canonical tuple order
    std::vector<size_t> idx((size_t)m, 0);
    while (true) {
        std::vector<FieldElement> c;
        c.reserve((size_t)m + 1);
        for (int i = 0; i < m; ++i) c.push_back(elems[idx[(size_t)i]]);
        c.push_back(base.one());
        Poly f(base, std::move(c));
        if (m == 1 || poly_is_irreducible(f)) return f;
        // lexicographic increment, last (highest-degree) coordinate fastest?
        // lexicographic order on (a_0, ..., a_{m-1}) means a_0 is most
        // significant, so advance from the end.
        int i = m - 1;
        for (; i >= 0; --i) {
            if (++idx[(size_t)i] < elems.size()) break;
            idx[(size_t)i] = 0;
        }
        if (i < 0) throw error("no irreducible polynomial found");
    }
}

Poly find_irreducible(unsigned long p, int m) {
    return find_irreducible(Field::prime(p), m);
}

std::vector<FieldElement> poly_roots_by_scan(const Poly& f) {
    std::vector<FieldElement> roots;
    for (const auto& x : f.field().elements())
        if (f.eval(x).is_zero()) roots.push_back(x);
    return roots;
}

}  // namespace galform
