#ifndef GALFORM_LINALG_HPP
#define GALFORM_LINALG_HPP

#include <optional>

#include "galform/field.hpp"

namespace galform {

/// Dense matrix over a Field.
class FieldMatrix {
  public:
    FieldMatrix() = default;
    FieldMatrix(Field f, long r, long c)
        : field_(std::move(f)), rows_(r), cols_(c), a_((size_t)(r * c), field_.zero()) {}

    static FieldMatrix identity(const Field& f, long n);

    const Field& field() const { return field_; }
    long rows() const { return rows_; }
    long cols() const { return cols_; }
    FieldElement& at(long i, long j) { return a_[(size_t)(i * cols_ + j)]; }
    const FieldElement& at(long i, long j) const { return a_[(size_t)(i * cols_ + j)]; }

    FieldMatrix operator*(const FieldMatrix& o) const;
    FieldMatrix operator+(const FieldMatrix& o) const;
    FieldMatrix operator-(const FieldMatrix& o) const;
    FieldMatrix operator*(const FieldElement& s) const;
    bool operator==(const FieldMatrix& o) const;
    bool operator!=(const FieldMatrix& o) const { return !(*this == o); }

    FieldMatrix transpose() const;
    FieldElement det() const;      // square only
    FieldMatrix inverse() const;   // throws if singular
    bool is_identity() const;

    std::string str() const;
    void encode(std::string& out) const;

  private:
    Field field_;
    long rows_ = 0, cols_ = 0;
    std::vector<FieldElement> a_;
    void check_same(const FieldMatrix& o) const;
};

long matrix_rank(FieldMatrix m);

/// Basis of the right kernel {x : m x = 0}, one column vector per entry.
std::vector<std::vector<FieldElement>> kernel_basis(const FieldMatrix& m);

/// One solution of m x = b, if any.
std::optional<std::vector<FieldElement>> solve_linear(const FieldMatrix& m,
                                                      const std::vector<FieldElement>& b);

}  // namespace galform

#endif
