#include "acbm/lie_algebra.hpp"

#include "acbm/errors.hpp"

namespace acbm {

LieAlgebra::LieAlgebra(std::size_t dim, DenseTensor structure_constants)
    : dim_(dim), c_(std::move(structure_constants)) {
    if (dim == 0 || dim % 2 == 0) throw ValidationError("LieAlgebra: dimension must be odd and positive");
    if (c_.dim() != dim || c_.order() != 3 ||
        c_.variance() != std::vector<Variance>{Variance::Upper, Variance::Lower, Variance::Lower})
        throw DimensionMismatchError("LieAlgebra: structure constants must be a (1,2) tensor of matching dimension");
    for (std::size_t k = 0; k < dim; ++k)
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j <= i; ++j)
                if (c_(k, i, j) != -c_(k, j, i))
                    throw ValidationError("LieAlgebra: structure constants not antisymmetric in the lower slots");
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) {
    return LieAlgebra(dim, DenseTensor(dim, {Variance::Upper, Variance::Lower, Variance::Lower}));
}

RatVector LieAlgebra::bracket(const RatVector& x, const RatVector& y) const {
    if (x.size() != dim_ || y.size() != dim_)
        throw DimensionMismatchError("LieAlgebra::bracket: vector length != dimension");
    RatVector r(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j] == 0) continue;
            for (std::size_t k = 0; k < dim_; ++k) r[k] += x[i] * y[j] * c_(k, i, j);
        }
    }
    return r;
}

JacobiReport check_jacobi(const LieAlgebra& l) {
    const std::size_t d = l.dim();
    JacobiReport report;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            for (std::size_t k = j + 1; k < d; ++k) {
                // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j], component m.
                bool bad = false;
                for (std::size_t m = 0; m < d && !bad; ++m) {
                    Rational sum(0);
                    for (std::size_t a = 0; a < d; ++a)
                        sum += l.c(a, i, j) * l.c(m, a, k) + l.c(a, j, k) * l.c(m, a, i) +
                               l.c(a, k, i) * l.c(m, a, j);
                    bad = sum != 0;
                }
                if (bad) report.violations.push_back({i, j, k});
            }
    report.holds = report.violations.empty();
    return report;
}

}  // namespace acbm
