#include "galform/linalg.hpp"

#include <sstream>

namespace galform {

FieldMatrix FieldMatrix::identity(const Field& f, long n) {
    FieldMatrix m(f, n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
}

void FieldMatrix::check_same(const FieldMatrix& o) const {
    if (field_ != o.field_) throw error("field mismatch");
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& o) const {
    check_same(o);
    if (cols_ != o.rows_) throw error("matrix dimension mismatch");
    FieldMatrix r(field_, rows_, o.cols_);
    for (long i = 0; i < rows_; ++i)
        for (long k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (long j = 0; j < o.cols_; ++j)
                r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
        }
    return r;
}

FieldMatrix FieldMatrix::operator+(const FieldMatrix& o) const {
    check_same(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw error("matrix dimension mismatch");
    FieldMatrix r(field_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

FieldMatrix FieldMatrix::operator-(const FieldMatrix& o) const {
    check_same(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw error("matrix dimension mismatch");
    FieldMatrix r(field_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

FieldMatrix FieldMatrix::operator*(const FieldElement& s) const {
    FieldMatrix r(field_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
    return r;
}

bool FieldMatrix::operator==(const FieldMatrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

FieldMatrix FieldMatrix::transpose() const {
    FieldMatrix r(field_, cols_, rows_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

FieldElement FieldMatrix::det() const {
    if (rows_ != cols_) throw error("determinant of a non-square matrix");
    FieldMatrix m = *this;
    FieldElement d = field_.one();
    for (long col = 0; col < cols_; ++col) {
        long piv = -1;
        for (long r = col; r < rows_; ++r)
            if (!m.at(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return field_.zero();
        if (piv != col) {
            for (long j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(col, j));
            d = -d;
        }
        d = d * m.at(col, col);
        FieldElement inv = m.at(col, col).inverse();
        for (long r = col + 1; r < rows_; ++r) {
            if (m.at(r, col).is_zero()) continue;
            FieldElement f = m.at(r, col) * inv;
            for (long j = col; j < cols_; ++j) m.at(r, j) = m.at(r, j) - f * m.at(col, j);
        }
    }
    return d;
}

FieldMatrix FieldMatrix::inverse() const {
    if (rows_ != cols_) throw error("inverse of a non-square matrix");
    long n = rows_;
    FieldMatrix m = *this;
    FieldMatrix inv = identity(field_, n);
    for (long col = 0; col < n; ++col) {
        long piv = -1;
        for (long r = col; r < n; ++r)
            if (!m.at(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw error("matrix is singular");
        if (piv != col)
            for (long j = 0; j < n; ++j) {
                std::swap(m.at(piv, j), m.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        FieldElement s = m.at(col, col).inverse();
        for (long j = 0; j < n; ++j) {
            m.at(col, j) = m.at(col, j) * s;
            inv.at(col, j) = inv.at(col, j) * s;
        }
        for (long r = 0; r < n; ++r) {
            if (r == col || m.at(r, col).is_zero()) continue;
            FieldElement f = m.at(r, col);
            for (long j = 0; j < n; ++j) {
                m.at(r, j) = m.at(r, j) - f * m.at(col, j);
                inv.at(r, j) = inv.at(r, j) - f * inv.at(col, j);
            }
        }
    }
    return inv;
}

bool FieldMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j)
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    return true;
}

std::string FieldMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (long i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (long j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).str();
    }
    os << "]";
    return os.str();
}

void FieldMatrix::encode(std::string& out) const {
    for (const auto& x : a_) x.encode(out);
    out += '#';
}

namespace {

// row echelon form in place; returns pivot columns
std::vector<long> row_echelon(FieldMatrix& m) {
    std::vector<long> pivots;
    long r = 0;
    for (long col = 0; col < m.cols() && r < m.rows(); ++col) {
        long piv = -1;
        for (long i = r; i < m.rows(); ++i)
            if (!m.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (long j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
        FieldElement s = m.at(r, col).inverse();
        for (long j = col; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * s;
        for (long i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, col).is_zero()) continue;
            FieldElement f = m.at(i, col);
            for (long j = col; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

}  // namespace

long matrix_rank(FieldMatrix m) { return (long)row_echelon(m).size(); }

std::vector<std::vector<FieldElement>> kernel_basis(const FieldMatrix& m) {
    FieldMatrix e = m;
    std::vector<long> pivots = row_echelon(e);
    const Field& K = m.field();
    std::vector<bool> is_pivot((size_t)m.cols(), false);
    for (long p : pivots) is_pivot[(size_t)p] = true;
    std::vector<std::vector<FieldElement>> basis;
    for (long free = 0; free < m.cols(); ++free) {
        if (is_pivot[(size_t)free]) continue;
        std::vector<FieldElement> v((size_t)m.cols(), K.zero());
        v[(size_t)free] = K.one();
        for (size_t r = 0; r < pivots.size(); ++r)
            v[(size_t)pivots[r]] = -e.at((long)r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<FieldElement>> solve_linear(const FieldMatrix& m,
                                                      const std::vector<FieldElement>& b) {
    if ((long)b.size() != m.rows()) throw error("dimension mismatch");
    const Field& K = m.field();
    FieldMatrix aug(K, m.rows(), m.cols() + 1);
    for (long i = 0; i < m.rows(); ++i) {
        for (long j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[(size_t)i];
    }
    std::vector<long> pivots = row_echelon(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    std::vector<FieldElement> x((size_t)m.cols(), K.zero());
    for (size_t r = 0; r < pivots.size(); ++r) x[(size_t)pivots[r]] = aug.at((long)r, m.cols());
    return x;
}

}  // namespace galform
