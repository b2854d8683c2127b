#ifndef ACBM_LINALG_HPP
#define ACBM_LINALG_HPP

#include <cstddef>
#include <vector>

#include "acbm/rational.hpp"

namespace acbm {

using RatVector = std::vector<Rational>;

// Dense rational matrix, row-major. Everything the engine needs stays tiny
// (side length bounded by the manifold dimension or a handful of unknowns),
// so there is no sparsity and no pivoting beyond "first nonzero".
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const RatMatrix&) const = default;

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    RatMatrix transposed() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatVector operator*(const RatMatrix& a, const RatVector& v);

struct MatrixSignature {
    std::size_t plus = 0;
    std::size_t minus = 0;
    std::size_t zero = 0;
    bool operator==(const MatrixSignature&) const = default;
};

// Sylvester signature of a symmetric matrix by exact congruence
// diagonalization. Deterministic pivot order: the current diagonal entry,
// else the first later nonzero diagonal entry (symmetric swap), else the
// first nonzero off-diagonal pair (i,j), handled by adding row/column j to
// row/column i, which makes the (i,i) entry 2*m(i,j) != 0.
MatrixSignature signature(RatMatrix m);

// Exact inverse of a symmetric matrix. ValidationError for a non-symmetric
// argument, SingularMetricError when the matrix is degenerate.
RatMatrix invert_symmetric(const RatMatrix& m);

// Full solution set of A x = b: one particular solution plus a basis of the
// homogeneous solutions. Inconsistency is a result, not an error.
struct AffineSolutionSpace {
    bool consistent = false;
    RatVector particular;              // empty when inconsistent
    std::vector<RatVector> nullspace;  // one vector per free column
    std::size_t dimension() const { return nullspace.size(); }
};

AffineSolutionSpace solve_affine(const RatMatrix& a, const RatVector& b);

}  // namespace acbm

#endif
