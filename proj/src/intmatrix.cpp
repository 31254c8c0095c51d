#include "galform/intmatrix.hpp"

namespace galform {

IntMatrix IntMatrix::identity(long n) {
    IntMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols != o.rows) throw error("matrix dimension mismatch");
    IntMatrix r(rows, o.cols);
    for (long i = 0; i < rows; ++i)
        for (long k = 0; k < cols; ++k) {
            if (at(i, k) == 0) continue;
            for (long j = 0; j < o.cols; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix r(cols, rows);
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    return r;
}

Int IntMatrix::det() const {
    if (rows != cols) throw error("determinant of a non-square matrix");
    long n = rows;
    if (n == 0) return 1;
    IntMatrix m = *this;
    Int prev = 1;
    int sign = 1;
    for (long k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            long piv = -1;
            for (long r = k + 1; r < n; ++r)
                if (m.at(r, k) != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) return 0;
            for (long j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
            sign = -sign;
        }
        for (long i = k + 1; i < n; ++i)
            for (long j = k + 1; j < n; ++j) {
                Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = t / prev;  // Bareiss: division exact
            }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

bool IntMatrix::is_unimodular() const {
    if (rows != cols) return false;
    Int d = det();
    return d == 1 || d == -1;
}

IntMatrix IntMatrix::unimodular_inverse() const {
    if (rows != cols) throw error("inverse of a non-square matrix");
    long n = rows;
    Int d = det();
    if (d != 1 && d != -1) throw error("matrix is not unimodular");
    // adjugate via cofactors (small n only)
    IntMatrix inv(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            IntMatrix minor(n - 1, n - 1);
            for (long r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (long c = 0, cc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor.at(rr, cc++) = at(r, c);
                }
                ++rr;
            }
            Int cof = minor.det();
            if ((i + j) % 2 == 1) cof = -cof;
            inv.at(j, i) = cof * d;  // d = 1/d for d = +-1
        }
    return inv;
}

SmithResult smith_normal_form(const IntMatrix& a) {
    IntMatrix d = a;
    IntMatrix u = IntMatrix::identity(a.rows);
    IntMatrix v = IntMatrix::identity(a.cols);
    long n = a.rows, m = a.cols;

    auto swap_rows = [&](long r1, long r2) {
        for (long j = 0; j < m; ++j) std::swap(d.at(r1, j), d.at(r2, j));
        for (long j = 0; j < n; ++j) std::swap(u.at(r1, j), u.at(r2, j));
    };
    auto swap_cols = [&](long c1, long c2) {
        for (long i = 0; i < n; ++i) std::swap(d.at(i, c1), d.at(i, c2));
        for (long i = 0; i < m; ++i) std::swap(v.at(i, c1), v.at(i, c2));
    };
    auto add_row = [&](long dst, long src, const Int& f) {
        for (long j = 0; j < m; ++j) d.at(dst, j) += f * d.at(src, j);
        for (long j = 0; j < n; ++j) u.at(dst, j) += f * u.at(src, j);
    };
    auto add_col = [&](long dst, long src, const Int& f) {
        for (long i = 0; i < n; ++i) d.at(i, dst) += f * d.at(i, src);
        for (long i = 0; i < m; ++i) v.at(i, dst) += f * v.at(i, src);
    };
    auto neg_row = [&](long r) {
        for (long j = 0; j < m; ++j) d.at(r, j) = -d.at(r, j);
        for (long j = 0; j < n; ++j) u.at(r, j) = -u.at(r, j);
    };

    auto diagonalize = [&]() {
        long t = 0;
        while (t < n && t < m) {
            long pi = -1, pj = -1;
            for (long i = t; i < n && pi < 0; ++i)
                for (long j = t; j < m; ++j)
                    if (d.at(i, j) != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi < 0) break;
            if (pi != t) swap_rows(pi, t);
            if (pj != t) swap_cols(pj, t);
            bool clean = false;
            while (!clean) {
                clean = true;
                for (long i = t + 1; i < n; ++i) {
                    if (d.at(i, t) == 0) continue;
                    Int q = d.at(i, t) / d.at(t, t);
                    add_row(i, t, -q);
                    if (d.at(i, t) != 0) {
                        // remainder smaller than the pivot, so this terminates
                        swap_rows(i, t);
                        clean = false;
                    }
                }
                for (long j = t + 1; j < m; ++j) {
                    if (d.at(t, j) == 0) continue;
                    Int q = d.at(t, j) / d.at(t, t);
                    add_col(j, t, -q);
                    if (d.at(t, j) != 0) {
                        swap_cols(j, t);
                        clean = false;
                    }
                }
            }
            ++t;
        }
    };

    diagonalize();
    // divisibility chain: a violation at (i, i+1) is fixed by mixing the two
    // columns and rediagonalizing, which replaces d_i by gcd(d_i, d_{i+1})
    for (bool again = true; again;) {
        again = false;
        for (long i = 0; i + 1 < std::min(n, m); ++i) {
            Int a1 = d.at(i, i), a2 = d.at(i + 1, i + 1);
            if (a1 == 0 && a2 != 0) {
                swap_rows(i, i + 1);
                swap_cols(i, i + 1);
                again = true;
            } else if (a1 != 0 && a2 % a1 != 0) {
                add_col(i, i + 1, 1);
                diagonalize();
                again = true;
            }
        }
    }
    for (long i = 0; i < std::min(n, m); ++i)
        if (d.at(i, i) < 0) neg_row(i);
    return {u, d, v};
}

IntMatrix column_lattice_basis(const IntMatrix& a) {
    SmithResult s = smith_normal_form(a);
    // a = u^-1 d v^-1; columns of a span the same lattice as columns of u^-1 d'
    // where d' is the square left part of d.
    IntMatrix uinv = s.u.unimodular_inverse();
    long n = a.rows;
    IntMatrix b(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) b.at(i, j) = uinv.at(i, j) * s.d.at(j, j);
    return b;
}

}  // namespace galform
