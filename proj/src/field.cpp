#include "galform/field.hpp"

#include <algorithm>
#include <sstream>

namespace galform {

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// dense F_p polynomial helpers on raw coefficient vectors, constant first
using PVec = std::vector<unsigned long>;

void trim(PVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

PVec pv_add(const PVec& a, const PVec& b, unsigned long p) {
    PVec r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        unsigned long s = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
        r[i] = s % p;
    }
    trim(r);
    return r;
}

PVec pv_sub(const PVec& a, const PVec& b, unsigned long p) {
    PVec r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        unsigned long x = i < a.size() ? a[i] : 0;
        unsigned long y = i < b.size() ? b[i] : 0;
        r[i] = (x + p - y) % p;
    }
    trim(r);
    return r;
}

PVec pv_mul(const PVec& a, const PVec& b, unsigned long p) {
    if (a.empty() || b.empty()) return {};
    PVec r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return r;
}

// reduce a modulo monic m
PVec pv_mod(PVec a, const PVec& m, unsigned long p) {
    trim(a);
    size_t dm = m.size() - 1;
    while (a.size() > dm) {
        unsigned long lead = a.back();
        size_t shift = a.size() - 1 - dm;
        if (lead != 0) {
            for (size_t i = 0; i < m.size(); ++i) {
                size_t k = shift + i;
                a[k] = (a[k] + p - (lead * m[i]) % p) % p;
            }
        }
        a.pop_back();
        trim(a);
        if (a.size() <= dm) break;
    }
    return a;
}

unsigned long inv_mod(unsigned long a, unsigned long p) {
    long t = 0, newt = 1;
    long r = (long)p, newr = (long)(a % p);
    while (newr != 0) {
        long q = r / newr;
        std::swap(t -= q * newt, newt);
        std::swap(r -= q * newr, newr);
    }
    if (r != 1) throw error("not invertible mod p");
    return (unsigned long)((t % (long)p + (long)p) % (long)p);
}

// extended gcd of a and monic modulus m over F_p: returns u with u*a = 1 mod m
PVec pv_invmod(const PVec& a, const PVec& m, unsigned long p) {
    PVec r0 = m, r1 = pv_mod(a, m, p);
    PVec s0 = {}, s1 = {1};
    while (!r1.empty()) {
        // divide r0 by r1
        PVec q;
        PVec rem = r0;
        trim(rem);
        if (rem.size() >= r1.size()) {
            q.assign(rem.size() - r1.size() + 1, 0);
            unsigned long linv = inv_mod(r1.back(), p);
            while (rem.size() >= r1.size() && !rem.empty()) {
                unsigned long c = (rem.back() * linv) % p;
                size_t shift = rem.size() - r1.size();
                q[shift] = c;
                for (size_t i = 0; i < r1.size(); ++i)
                    rem[shift + i] = (rem[shift + i] + p - (c * r1[i]) % p) % p;
                trim(rem);
                if (rem.empty()) break;
            }
        }
        PVec s2 = pv_sub(s0, pv_mul(q, s1, p), p);
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    if (r0.size() != 1) throw error("element not invertible in extension field");
    unsigned long c = inv_mod(r0[0], p);
    PVec res = s0;
    for (auto& x : res) x = (x * c) % p;
    trim(res);
    return pv_mod(res, m, p);
}

PVec desc_modulus(const FieldDescriptor& d) {
    PVec m(d.modulus.size());
    for (size_t i = 0; i < m.size(); ++i) {
        Int v = d.modulus[i].get_num();
        mpz_class r = v % (long)d.p;
        if (r < 0) r += (long)d.p;
        m[i] = r.get_ui();
    }
    return m;
}

}  // namespace

Field Field::rationals() {
    static auto d = std::make_shared<const FieldDescriptor>(FieldDescriptor{FieldKind::Rationals, 0, {}});
    return Field(d);
}

Field Field::prime(unsigned long p) {
    if (!is_prime(p)) throw error("characteristic must be prime");
    return Field(std::make_shared<const FieldDescriptor>(FieldDescriptor{FieldKind::Prime, p, {}}));
}

Field Field::extension(unsigned long p, const std::vector<unsigned long>& modulus) {
    if (!is_prime(p)) throw error("characteristic must be prime");
    if (modulus.size() < 2 || modulus.back() % p != 1)
        throw error("extension modulus must be monic of degree >= 1");
    std::vector<Rational> m(modulus.size());
    for (size_t i = 0; i < modulus.size(); ++i) m[i] = Rational((long)(modulus[i] % p));
    return Field(std::make_shared<const FieldDescriptor>(FieldDescriptor{FieldKind::Extension, p, m}));
}

Field Field::rational_extension(const std::vector<Rational>& modulus) {
    if (modulus.size() < 2 || modulus.back() != 1)
        throw error("extension modulus must be monic of degree >= 1");
    return Field(std::make_shared<const FieldDescriptor>(FieldDescriptor{FieldKind::Extension, 0, modulus}));
}

int Field::degree() const {
    if (d_->kind == FieldKind::Extension) return (int)d_->modulus.size() - 1;
    return 1;
}

Int Field::order() const {
    if (!finite()) throw error("order() requires a finite field");
    Int q;
    mpz_ui_pow_ui(q.get_mpz_t(), d_->p, (unsigned long)degree());
    return q;
}

FieldElement Field::zero() const { return from_int(0L); }
FieldElement Field::one() const { return from_int(1L); }

FieldElement Field::from_int(long v) const { return from_int(Int(v)); }

FieldElement Field::from_int(const Int& v) const {
    if (d_->kind == FieldKind::Rationals) return FieldElement(*this, Rational(v));
    if (d_->p == 0) throw error("rational extensions carry no element arithmetic");
    Int r = v % (long)d_->p;
    if (r < 0) r += (long)d_->p;
    std::vector<unsigned long> cf((size_t)degree(), 0);
    cf[0] = r.get_ui();
    return FieldElement(*this, std::move(cf));
}

FieldElement Field::from_rational(const Rational& v) const {
    if (d_->kind == FieldKind::Rationals) return FieldElement(*this, v);
    if (d_->p == 0) throw error("rational extension elements are built via poly evaluation");
    // reduce num/den mod p
    Int num = v.get_num(), den = v.get_den();
    Int pi((long)d_->p);
    Int dn = den % pi;
    if (dn < 0) dn += pi;
    if (dn == 0) throw error("denominator vanishes mod p");
    unsigned long dinv = inv_mod(dn.get_ui(), d_->p);
    Int nn = num % pi;
    if (nn < 0) nn += pi;
    return from_int(Int(nn.get_ui() * dinv));
}

FieldElement Field::from_coeffs(const std::vector<unsigned long>& coeffs) const {
    if (kind() != FieldKind::Extension || d_->p == 0)
        throw error("coefficient vectors require a finite extension field");
    std::vector<unsigned long> cf((size_t)degree(), 0);
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (i >= cf.size()) {
            if (coeffs[i] % d_->p != 0) throw error("coefficient vector longer than extension degree");
            continue;
        }
        cf[i] = coeffs[i] % d_->p;
    }
    return FieldElement(*this, std::move(cf));
}

std::vector<FieldElement> Field::elements() const {
    if (!finite()) throw error("cannot enumerate an infinite field");
    int deg = degree();
    unsigned long p = d_->p;
    std::vector<FieldElement> out;
    std::vector<unsigned long> cf((size_t)deg, 0);
    while (true) {
        if (kind() == FieldKind::Prime)
            out.push_back(from_int((long)cf[0]));
        else
            out.push_back(FieldElement(*this, cf));
        int i = 0;
        for (; i < deg; ++i) {
            if (++cf[(size_t)i] < p) break;
            cf[(size_t)i] = 0;
        }
        if (i == deg) break;
    }
    return out;
}

void FieldElement::check_same(const FieldElement& o) const {
    if (field_ != o.field_) throw error("field mismatch");
}

bool FieldElement::is_zero() const {
    if (field_.kind() == FieldKind::Rationals) return rat_ == 0;
    for (auto c : cf_)
        if (c != 0) return false;
    return true;
}

bool FieldElement::is_one() const {
    if (field_.kind() == FieldKind::Rationals) return rat_ == 1;
    if (cf_.empty() || cf_[0] != 1) return false;
    for (size_t i = 1; i < cf_.size(); ++i)
        if (cf_[i] != 0) return false;
    return true;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(o);
    if (field_.kind() == FieldKind::Rationals) return FieldElement(field_, rat_ + o.rat_);
    unsigned long p = field_.char_p();
    std::vector<unsigned long> r(cf_.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = (cf_[i] + o.cf_[i]) % p;
    return FieldElement(field_, std::move(r));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same(o);
    if (field_.kind() == FieldKind::Rationals) return FieldElement(field_, rat_ - o.rat_);
    unsigned long p = field_.char_p();
    std::vector<unsigned long> r(cf_.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = (cf_[i] + p - o.cf_[i]) % p;
    return FieldElement(field_, std::move(r));
}

FieldElement FieldElement::operator-() const {
    if (field_.kind() == FieldKind::Rationals) return FieldElement(field_, -rat_);
    unsigned long p = field_.char_p();
    std::vector<unsigned long> r(cf_.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = (p - cf_[i]) % p;
    return FieldElement(field_, std::move(r));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(o);
    if (field_.kind() == FieldKind::Rationals) return FieldElement(field_, rat_ * o.rat_);
    unsigned long p = field_.char_p();
    if (field_.kind() == FieldKind::Prime)
        return FieldElement(field_, std::vector<unsigned long>{(cf_[0] * o.cf_[0]) % p});
    PVec prod = pv_mul(cf_, o.cf_, p);
    PVec m = desc_modulus(field_.desc());
    PVec red = pv_mod(prod, m, p);
    red.resize(cf_.size(), 0);
    return FieldElement(field_, std::move(red));
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw error("division by zero");
    if (field_.kind() == FieldKind::Rationals) return FieldElement(field_, Rational(1) / rat_);
    unsigned long p = field_.char_p();
    if (field_.kind() == FieldKind::Prime)
        return FieldElement(field_, std::vector<unsigned long>{inv_mod(cf_[0], p)});
    PVec m = desc_modulus(field_.desc());
    PVec r = pv_invmod(cf_, m, p);
    r.resize(cf_.size(), 0);
    return FieldElement(field_, std::move(r));
}

FieldElement FieldElement::pow(const Int& e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement base = *this;
    FieldElement acc = field_.one();
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (field_ != o.field_) return false;
    if (field_.kind() == FieldKind::Rationals) return rat_ == o.rat_;
    return cf_ == o.cf_;
}

std::string FieldElement::str() const {
    if (field_.kind() == FieldKind::Rationals) return rat_.get_str();
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < cf_.size(); ++i) os << (i ? "," : "") << cf_[i];
    os << "]";
    return os.str();
}

void FieldElement::encode(std::string& out) const {
    if (field_.kind() == FieldKind::Rationals) {
        out += rat_.get_str();
        out += ';';
        return;
    }
    for (auto c : cf_) {
        out += std::to_string(c);
        out += ',';
    }
    out += ';';
}

FieldElement frobenius_power(const FieldElement& x, const Int& q, long k) {
    if (k < 0) throw error("negative Frobenius power; reduce mod the extension degree first");
    if (!x.field().finite()) throw error("Frobenius requires a finite field");
    if (x.is_zero() || k == 0) return x;
    Int n = x.field().order() - 1;
    Int e = 1;
    for (long i = 0; i < k; ++i) e = (e * q) % n;
    return x.pow(e);
}

}  // namespace galform
