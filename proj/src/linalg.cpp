#include "acbm/linalg.hpp"

#include <utility>

#include "acbm/errors.hpp"

namespace acbm {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool RatMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatchError("matrix product: inner sizes differ");
    RatMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

RatVector operator*(const RatMatrix& a, const RatVector& v) {
    if (a.cols() != v.size()) throw DimensionMismatchError("matrix * vector: sizes differ");
    RatVector r(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) != 0 && v[j] != 0) r[i] += a(i, j) * v[j];
    return r;
}

namespace {

// Symmetric basis change e_i <- e_i + e_j, i.e. add row j to row i and
// column j to column i.
void add_row_col(RatMatrix& m, std::size_t i, std::size_t j) {
    const std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) m(i, c) += m(j, c);
    for (std::size_t r = 0; r < n; ++r) m(r, i) += m(r, j);
}

void swap_row_col(RatMatrix& m, std::size_t i, std::size_t j) {
    const std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) std::swap(m(i, c), m(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(m(r, i), m(r, j));
}

}  // namespace

MatrixSignature signature(RatMatrix m) {
    if (!m.is_symmetric()) throw ValidationError("signature: matrix is not symmetric");
    const std::size_t n = m.rows();
    MatrixSignature sig;
    for (std::size_t k = 0; k < n; ++k) {
        if (m(k, k) == 0) {
            // Bring a usable pivot to position k, congruently.
            std::size_t d = k + 1;
            while (d < n && m(d, d) == 0) ++d;
            if (d < n) {
                swap_row_col(m, k, d);
            } else {
                // All remaining diagonal entries vanish. A nonzero entry
                // m(i,j) sits in a hyperbolic 2x2 block; e_i <- e_i + e_j
                // turns it into a usable diagonal pivot 2*m(i,j).
                bool found = false;
                for (std::size_t i = k; i < n && !found; ++i)
                    for (std::size_t j = i + 1; j < n && !found; ++j)
                        if (m(i, j) != 0) {
                            add_row_col(m, i, j);
                            if (i != k) swap_row_col(m, k, i);
                            found = true;
                        }
                if (!found) {
                    sig.zero += n - k;  // remaining block is identically zero
                    break;
                }
            }
        }
        const Rational pivot = m(k, k);
        if (pivot > 0)
            ++sig.plus;
        else
            ++sig.minus;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k) == 0) continue;
            const Rational f = m(i, k) / pivot;
            for (std::size_t c = k; c < n; ++c) m(i, c) -= f * m(k, c);
            for (std::size_t r = k; r < n; ++r) m(r, i) -= f * m(r, k);
        }
    }
    return sig;
}

RatMatrix invert_symmetric(const RatMatrix& m) {
    if (!m.is_symmetric()) throw ValidationError("invert_symmetric: matrix is not symmetric");
    const std::size_t n = m.rows();
    // Gauss-Jordan on [m | I] with first-nonzero pivoting.
    RatMatrix w(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w(i, j) = m(i, j);
        w(i, n + i) = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && w(piv, col) == 0) ++piv;
        if (piv == n) throw SingularMetricError("invert_symmetric: matrix is singular");
        if (piv != col)
            for (std::size_t c = 0; c < 2 * n; ++c) std::swap(w(col, c), w(piv, c));
        const Rational p = w(col, col);
        for (std::size_t c = 0; c < 2 * n; ++c) w(col, c) /= p;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || w(r, col) == 0) continue;
            const Rational f = w(r, col);
            for (std::size_t c = 0; c < 2 * n; ++c) w(r, c) -= f * w(col, c);
        }
    }
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = w(i, n + j);
    return inv;
}

AffineSolutionSpace solve_affine(const RatMatrix& a, const RatVector& b) {
    if (b.size() != a.rows()) throw DimensionMismatchError("solve_affine: rhs length != row count");
    const std::size_t m = a.rows(), n = a.cols();
    RatMatrix w(m, n + 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) w(i, j) = a(i, j);
        w(i, n) = b[i];
    }

    // Forward pass: one-step fraction-free (Bareiss) elimination with
    // first-nonzero pivoting. Each update is
    //   w(i,j) <- (w(i,j)*pivot - w(i,col)*w(row,j)) / previous_pivot,
    // exact division at every step.
    std::vector<std::size_t> pivot_cols;
    Rational prev(1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t piv = row;
        while (piv < m && w(piv, col) == 0) ++piv;
        if (piv == m) continue;
        if (piv != row)
            for (std::size_t c = 0; c <= n; ++c) std::swap(w(row, c), w(piv, c));
        const Rational p = w(row, col);
        for (std::size_t i = row + 1; i < m; ++i) {
            for (std::size_t j = col + 1; j <= n; ++j)
                w(i, j) = (w(i, j) * p - w(i, col) * w(row, j)) / prev;
            w(i, col) = 0;
        }
        prev = p;
        pivot_cols.push_back(col);
        ++row;
    }
    const std::size_t rank = row;

    AffineSolutionSpace space;
    for (std::size_t i = rank; i < m; ++i)
        if (w(i, n) != 0) return space;  // 0 = nonzero: inconsistent
    space.consistent = true;

    // Back substitution to reduced echelon form.
    for (std::size_t r = rank; r-- > 0;) {
        const std::size_t c = pivot_cols[r];
        const Rational p = w(r, c);
        for (std::size_t j = c; j <= n; ++j) w(r, j) /= p;
        for (std::size_t i = 0; i < r; ++i) {
            if (w(i, c) == 0) continue;
            const Rational f = w(i, c);
            for (std::size_t j = c; j <= n; ++j) w(i, j) -= f * w(r, j);
        }
    }

    space.particular.assign(n, Rational(0));
    for (std::size_t r = 0; r < rank; ++r) space.particular[pivot_cols[r]] = w(r, n);

    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        RatVector v(n, Rational(0));
        v[f] = 1;
        for (std::size_t r = 0; r < rank; ++r) v[pivot_cols[r]] = -w(r, f);
        space.nullspace.push_back(std::move(v));
    }
    return space;
}

}  // namespace acbm
