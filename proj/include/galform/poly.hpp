#ifndef GALFORM_POLY_HPP
#define GALFORM_POLY_HPP

#include "galform/field.hpp"

namespace galform {

/// Univariate polynomial over a Field; coefficients constant-term first,
/// no trailing zeros. The zero polynomial has an empty coefficient vector
/// and degree -1 (standing in for degree minus infinity).
class Poly {
  public:
    Poly() = default;
    explicit Poly(Field f) : field_(std::move(f)) {}
    Poly(Field f, std::vector<FieldElement> coeffs) : field_(std::move(f)), c_(std::move(coeffs)) {
        normalize();
    }

    static Poly zero(const Field& f) { return Poly(f); }
    static Poly constant(const Field& f, const FieldElement& a) { return Poly(f, {a}); }
    static Poly x(const Field& f) { return Poly(f, {f.zero(), f.one()}); }
    static Poly from_ints(const Field& f, const std::vector<long>& coeffs);

    const Field& field() const { return field_; }
    const std::vector<FieldElement>& coeffs() const { return c_; }
    long degree() const { return (long)c_.size() - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    FieldElement coeff(size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
    FieldElement leading() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const FieldElement& s) const;
    bool operator==(const Poly& o) const { return field_ == o.field_ && c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Quotient and remainder by a nonzero divisor.
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    /// Exact division; throws if a nonzero remainder is left.
    Poly exact_div(const Poly& d) const;
    Poly mod(const Poly& m) const { return divmod(m).second; }

    Poly derivative() const;
    FieldElement eval(const FieldElement& x) const;
    Poly monic() const;

    std::string str() const;
    void encode(std::string& out) const;

  private:
    Field field_;
    std::vector<FieldElement> c_;
    void normalize();
    void check_same(const Poly& o) const;
};

/// outer evaluated at inner, expanded.
Poly poly_compose(const Poly& outer, const Poly& inner);

/// Sylvester-matrix resultant Res(f, g); f must be nonzero.
FieldElement poly_resultant(const Poly& f, const Poly& g);

Poly poly_gcd(Poly a, Poly b);  // monic gcd
Poly poly_pow_mod(const Poly& base, const Int& e, const Poly& m);

/// Irreducibility over a finite field (prime or extension base).
bool poly_is_irreducible(const Poly& f);

/// Lexicographically smallest monic irreducible polynomial of degree m over
/// the given finite field; coefficients ordered constant-first with field
/// elements ordered by their coefficient tuples.
Poly find_irreducible(const Field& base, int m);
Poly find_irreducible(unsigned long p, int m);

/// Roots of f in its own coefficient field, found by scanning (finite fields).
std::vector<FieldElement> poly_roots_by_scan(const Poly& f);

}  // namespace galform

#endif
