#ifndef GALFORM_FIELD_HPP
#define GALFORM_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace galform {

using Int = mpz_class;
using Rational = mpq_class;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class FieldKind { Rationals, Prime, Extension };

bool is_prime(unsigned long n);

/// Description of a supported coefficient field: QQ, F_p, or F_p[t]/(modulus).
/// An extension with p == 0 denotes a monogenic extension of QQ; it is used
/// only as a splitting target in tensor decompositions (irreducibility of the
/// modulus is the caller's responsibility there).
struct FieldDescriptor {
    FieldKind kind = FieldKind::Rationals;
    unsigned long p = 0;
    // Modulus over the prime field, constant term first, monic, without the
    // leading coefficient stored implicitly?  We store all coefficients
    // including the leading 1; degree = modulus.size() - 1.
    std::vector<Rational> modulus;  // rationals used uniformly; entries are integers mod p when p > 0

    bool operator==(const FieldDescriptor&) const = default;
};

class FieldElement;

/// Shared handle to a field descriptor; all arithmetic is routed through it.
class Field {
  public:
    Field() : d_(rationals().d_) {}

    static Field rationals();
    static Field prime(unsigned long p);
    /// modulus given constant-first over F_p (values reduced mod p), monic.
    static Field extension(unsigned long p, const std::vector<unsigned long>& modulus);
    /// Monogenic extension of QQ by a monic polynomial (splitting targets only).
    static Field rational_extension(const std::vector<Rational>& modulus);

    const FieldDescriptor& desc() const { return *d_; }
    FieldKind kind() const { return d_->kind; }
    unsigned long char_p() const { return d_->p; }
    bool finite() const { return d_->kind != FieldKind::Rationals && d_->p != 0; }
    int degree() const;       // extension degree over the prime field (1 for prime/QQ)
    Int order() const;        // p^degree, only for finite fields

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_int(long v) const;
    FieldElement from_int(const Int& v) const;
    FieldElement from_rational(const Rational& v) const;
    /// Element from prime-field coefficient vector (extension fields).
    FieldElement from_coeffs(const std::vector<unsigned long>& coeffs) const;
    /// All field elements in a canonical order (finite fields only).
    std::vector<FieldElement> elements() const;

    bool operator==(const Field& o) const { return d_ == o.d_ || *d_ == *o.d_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

  private:
    explicit Field(std::shared_ptr<const FieldDescriptor> d) : d_(std::move(d)) {}
    std::shared_ptr<const FieldDescriptor> d_;
};

/// Immutable field element. Rationals are stored as a canonical mpq;
/// finite-field elements as a reduced coefficient vector over F_p
/// (length = extension degree, constant coordinate first).
class FieldElement {
  public:
    FieldElement() = default;
    FieldElement(Field f, Rational v) : field_(std::move(f)), rat_(std::move(v)) { rat_.canonicalize(); }
    FieldElement(Field f, std::vector<unsigned long> coeffs)
        : field_(std::move(f)), cf_(std::move(coeffs)) {}

    const Field& field() const { return field_; }
    const Rational& rational() const { return rat_; }
    const std::vector<unsigned long>& coeffs() const { return cf_; }

    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement inverse() const;
    FieldElement operator/(const FieldElement& o) const { return *this * o.inverse(); }
    FieldElement pow(const Int& e) const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    std::string str() const;
    /// Canonical small-integer encoding, used for hashing and ordering.
    void encode(std::string& out) const;

  private:
    Field field_;
    Rational rat_;
    std::vector<unsigned long> cf_;
    void check_same(const FieldElement& o) const;
};

/// x^(q^k) for x in an extension of the subfield of size q; k >= 0.
FieldElement frobenius_power(const FieldElement& x, const Int& q, long k);

}  // namespace galform

#endif
