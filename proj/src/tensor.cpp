#include "acbm/tensor.hpp"

#include "acbm/errors.hpp"

namespace acbm {

DenseTensor tensor_from_matrix(const RatMatrix& m, Variance first, Variance second) {
    if (!m.is_square()) throw DimensionMismatchError("tensor_from_matrix: matrix is not square");
    DenseTensor t(m.rows(), {first, second});
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t(i, j) = m(i, j);
    return t;
}

RatMatrix matrix_from_tensor(const DenseTensor& t) {
    if (t.order() != 2) throw DimensionMismatchError("matrix_from_tensor: tensor order != 2");
    RatMatrix m(t.dim(), t.dim());
    for (std::size_t i = 0; i < t.dim(); ++i)
        for (std::size_t j = 0; j < t.dim(); ++j) m(i, j) = t(i, j);
    return m;
}

}  // namespace acbm
