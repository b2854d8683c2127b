#ifndef ACBM_METRIC_HPP
#define ACBM_METRIC_HPP

#include <cstddef>

#include "acbm/linalg.hpp"

namespace acbm {

// Symmetric nondegenerate bilinear form with its exact inverse and Sylvester
// signature, both computed once at construction. Degenerate input raises
// SingularMetricError, a non-symmetric or non-square one ValidationError.
class MetricTensor {
public:
    explicit MetricTensor(RatMatrix g);

    std::size_t dim() const { return g_.rows(); }

    const Rational& operator()(std::size_t i, std::size_t j) const { return g_(i, j); }
    const Rational& inv(std::size_t i, std::size_t j) const { return inv_(i, j); }

    const RatMatrix& matrix() const { return g_; }
    const RatMatrix& inverse() const { return inv_; }
    const MatrixSignature& sig() const { return sig_; }

    bool operator==(const MetricTensor& o) const { return g_ == o.g_; }

private:
    RatMatrix g_;
    RatMatrix inv_;
    MatrixSignature sig_;
};

}  // namespace acbm

#endif
