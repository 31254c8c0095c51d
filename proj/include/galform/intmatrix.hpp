#ifndef GALFORM_INTMATRIX_HPP
#define GALFORM_INTMATRIX_HPP

#include "galform/field.hpp"

namespace galform {

/// Dense matrix of arbitrary-precision integers.
struct IntMatrix {
    long rows = 0, cols = 0;
    std::vector<Int> a;

    IntMatrix() = default;
    IntMatrix(long r, long c) : rows(r), cols(c), a((size_t)(r * c), Int(0)) {}

    static IntMatrix identity(long n);

    Int& at(long i, long j) { return a[(size_t)(i * cols + j)]; }
    const Int& at(long i, long j) const { return a[(size_t)(i * cols + j)]; }

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix transpose() const;
    bool operator==(const IntMatrix& o) const = default;

    Int det() const;              // Bareiss, square only
    bool is_unimodular() const;   // square with det = +-1
    /// Inverse of a unimodular matrix (integer entries).
    IntMatrix unimodular_inverse() const;
};

struct SmithResult {
    IntMatrix u, d, v;  // u * a * v = d
};

/// Smith normal form: D diagonal with d1 | d2 | ..., U and V unimodular.
SmithResult smith_normal_form(const IntMatrix& a);

/// Column-style Hermite basis of the lattice spanned by the columns of a
/// (a has full row rank); returns a square nonsingular matrix whose columns
/// generate the same lattice.
IntMatrix column_lattice_basis(const IntMatrix& a);

}  // namespace galform

#endif
