#ifndef GALFORM_MPOLY_HPP
#define GALFORM_MPOLY_HPP

#include <map>

#include "galform/field.hpp"

namespace galform {

/// Sparse multivariate polynomial with integer coefficients over a fixed
/// variable set. Monomials are exponent vectors of length nvars.
class MPoly {
  public:
    using Monomial = std::vector<int>;

    MPoly() = default;
    explicit MPoly(long nvars) : nvars_(nvars) {}

    static MPoly constant(long nvars, const Int& c);
    static MPoly var(long nvars, long i);

    long nvars() const { return nvars_; }
    const std::map<Monomial, Int>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator-() const;
    MPoly operator*(const MPoly& o) const;
    bool operator==(const MPoly& o) const { return nvars_ == o.nvars_ && t_ == o.t_; }

    /// Value at a point, coefficients mapped into the field.
    FieldElement eval(const Field& f, const std::vector<FieldElement>& x) const;

    std::string str(const std::vector<std::string>& names) const;

  private:
    long nvars_ = 0;
    std::map<Monomial, Int> t_;
    void add_term(const Monomial& m, const Int& c);
    friend MPoly mpoly_det(const std::vector<MPoly>&, long);
};

/// Determinant of an n x n matrix of polynomials (row-major), by cofactor
/// expansion; intended for the small Sylvester matrices of the presentation.
MPoly mpoly_det(const std::vector<MPoly>& a, long n);

/// Univariate polynomial whose coefficients are MPolys, constant term first.
/// Used to expand the defining identities of the family symbolically.
class SymPoly {
  public:
    SymPoly() = default;
    SymPoly(long nvars, std::vector<MPoly> coeffs) : nvars_(nvars), c_(std::move(coeffs)) {
        normalize();
    }

    static SymPoly zero(long nvars) { return SymPoly(nvars, {}); }

    long nvars() const { return nvars_; }
    long degree() const { return (long)c_.size() - 1; }
    MPoly coeff(size_t i) const { return i < c_.size() ? c_[i] : MPoly(nvars_); }
    const std::vector<MPoly>& coeffs() const { return c_; }

    SymPoly operator+(const SymPoly& o) const;
    SymPoly operator-(const SymPoly& o) const;
    SymPoly operator*(const SymPoly& o) const;
    SymPoly derivative() const;

  private:
    long nvars_ = 0;
    std::vector<MPoly> c_;
    void normalize();
};

SymPoly sympoly_compose(const SymPoly& outer, const SymPoly& inner);

/// Resultant of f and g as a polynomial in the coefficient variables
/// (Sylvester determinant); f must have an invertible integer leading
/// coefficient as written, which holds for the monic f of the family.
MPoly sympoly_resultant(const SymPoly& f, const SymPoly& g);

/// A finitely presented commutative ring over the integers.
struct Presentation {
    std::vector<std::string> variables;
    std::vector<MPoly> relations;
};

}  // namespace galform

#endif
