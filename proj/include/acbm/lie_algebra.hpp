#ifndef ACBM_LIE_ALGEBRA_HPP
#define ACBM_LIE_ALGEBRA_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "acbm/tensor.hpp"

namespace acbm {

// Real Lie algebra of odd dimension 2n+1, given by structure constants in a
// fixed basis: [e_i, e_j] = c(k,i,j) e_k. Antisymmetry in (i,j) is enforced
// at construction; the Jacobi identity is a separate, reportable check.
class LieAlgebra {
public:
    LieAlgebra(std::size_t dim, DenseTensor structure_constants);

    static LieAlgebra abelian(std::size_t dim);

    std::size_t dim() const { return dim_; }
    std::size_t n() const { return (dim_ - 1) / 2; }

    // Coefficient of e_k in [e_i, e_j].
    const Rational& c(std::size_t k, std::size_t i, std::size_t j) const { return c_(k, i, j); }
    const DenseTensor& structure_constants() const { return c_; }

    RatVector bracket(const RatVector& x, const RatVector& y) const;

    bool operator==(const LieAlgebra&) const = default;

private:
    std::size_t dim_ = 0;
    DenseTensor c_;
};

struct JacobiReport {
    bool holds = true;
    // Triples (i,j,k), i<j<k, where the cyclic sum of double brackets is nonzero.
    std::vector<std::array<std::size_t, 3>> violations;
};

JacobiReport check_jacobi(const LieAlgebra& l);

}  // namespace acbm

#endif
