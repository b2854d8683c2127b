#include "acbm/metric.hpp"

#include "acbm/errors.hpp"

namespace acbm {

MetricTensor::MetricTensor(RatMatrix g) : g_(std::move(g)) {
    if (!g_.is_square()) throw ValidationError("MetricTensor: matrix is not square");
    if (!g_.is_symmetric()) throw ValidationError("MetricTensor: matrix is not symmetric");
    inv_ = invert_symmetric(g_);  // SingularMetricError when degenerate
    sig_ = signature(g_);
}

}  // namespace acbm
