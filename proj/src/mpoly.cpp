#include "galform/mpoly.hpp"

#include <sstream>

namespace galform {

void MPoly::add_term(const Monomial& m, const Int& c) {
    if (c == 0) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

MPoly MPoly::constant(long nvars, const Int& c) {
    MPoly p(nvars);
    p.add_term(Monomial((size_t)nvars, 0), c);
    return p;
}

MPoly MPoly::var(long nvars, long i) {
    MPoly p(nvars);
    Monomial m((size_t)nvars, 0);
    m[(size_t)i] = 1;
    p.add_term(m, 1);
    return p;
}

MPoly MPoly::operator+(const MPoly& o) const {
    if (nvars_ != o.nvars_) throw error("variable count mismatch");
    MPoly r = *this;
    for (const auto& [m, c] : o.t_) r.add_term(m, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator-() const {
    MPoly r(nvars_);
    for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    if (nvars_ != o.nvars_) throw error("variable count mismatch");
    MPoly r(nvars_);
    for (const auto& [m1, c1] : t_)
        for (const auto& [m2, c2] : o.t_) {
            Monomial m = m1;
            for (size_t i = 0; i < m.size(); ++i) m[i] += m2[i];
            r.add_term(m, c1 * c2);
        }
    return r;
}

FieldElement MPoly::eval(const Field& f, const std::vector<FieldElement>& x) const {
    if ((long)x.size() != nvars_) throw error("evaluation point has wrong arity");
    FieldElement acc = f.zero();
    for (const auto& [m, c] : t_) {
        FieldElement term = f.from_int(c);
        for (size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0) term = term * x[i].pow(Int(m[i]));
        acc = acc + term;
    }
    return acc;
}

std::string MPoly::str(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : t_) {
        if (!first) os << " + ";
        os << c.get_str();
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            os << "*" << names[i];
            if (m[i] > 1) os << "^" << m[i];
        }
        first = false;
    }
    return os.str();
}

MPoly mpoly_det(const std::vector<MPoly>& a, long n) {
    if (n == 0) throw error("empty determinant");
    if (n == 1) return a[0];
    long nv = a[0].nvars();
    MPoly acc(nv);
    for (long j = 0; j < n; ++j) {
        if (a[(size_t)j].is_zero()) continue;
        std::vector<MPoly> minor;
        minor.reserve((size_t)((n - 1) * (n - 1)));
        for (long r = 1; r < n; ++r)
            for (long c = 0; c < n; ++c)
                if (c != j) minor.push_back(a[(size_t)(r * n + c)]);
        MPoly cof = a[(size_t)j] * mpoly_det(minor, n - 1);
        acc = (j % 2 == 0) ? acc + cof : acc - cof;
    }
    return acc;
}

void SymPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

SymPoly SymPoly::operator+(const SymPoly& o) const {
    std::vector<MPoly> r(std::max(c_.size(), o.c_.size()), MPoly(nvars_));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < c_.size()) r[i] = r[i] + c_[i];
        if (i < o.c_.size()) r[i] = r[i] + o.c_[i];
    }
    return SymPoly(nvars_, std::move(r));
}

SymPoly SymPoly::operator-(const SymPoly& o) const {
    std::vector<MPoly> neg;
    neg.reserve(o.c_.size());
    for (const auto& c : o.c_) neg.push_back(-c);
    return *this + SymPoly(o.nvars_, std::move(neg));
}

SymPoly SymPoly::operator*(const SymPoly& o) const {
    if (c_.empty() || o.c_.empty()) return SymPoly::zero(nvars_);
    std::vector<MPoly> r(c_.size() + o.c_.size() - 1, MPoly(nvars_));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    return SymPoly(nvars_, std::move(r));
}

SymPoly SymPoly::derivative() const {
    if (c_.size() <= 1) return SymPoly::zero(nvars_);
    std::vector<MPoly> r(c_.size() - 1, MPoly(nvars_));
    for (size_t i = 1; i < c_.size(); ++i)
        r[i - 1] = c_[i] * MPoly::constant(nvars_, Int((long)i));
    return SymPoly(nvars_, std::move(r));
}

SymPoly sympoly_compose(const SymPoly& outer, const SymPoly& inner) {
    long nv = outer.nvars();
    SymPoly acc = SymPoly::zero(nv);
    for (size_t i = outer.coeffs().size(); i-- > 0;)
        acc = acc * inner + SymPoly(nv, {outer.coeffs()[i]});
    return acc;
}

MPoly sympoly_resultant(const SymPoly& f, const SymPoly& g) {
    long n = f.degree(), m = g.degree();
    long nv = f.coeff(0).nvars();
    if (n < 1) throw error("resultant needs deg f >= 1");
    if (m < 0) return MPoly(nv);
    if (m == 0) {
        MPoly acc = MPoly::constant(nv, 1);
        for (long i = 0; i < n; ++i) acc = acc * g.coeff(0);
        return acc;
    }
    long N = n + m;
    std::vector<MPoly> a((size_t)(N * N), MPoly(nv));
    for (long r = 0; r < m; ++r)
        for (long j = 0; j <= n; ++j) a[(size_t)(r * N + r + j)] = f.coeff((size_t)(n - j));
    for (long r = 0; r < n; ++r)
        for (long j = 0; j <= m; ++j) a[(size_t)((m + r) * N + r + j)] = g.coeff((size_t)(m - j));
    return mpoly_det(a, N);
}

}  // namespace galform
