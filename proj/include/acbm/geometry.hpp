#ifndef ACBM_GEOMETRY_HPP
#define ACBM_GEOMETRY_HPP

#include <cstddef>

#include "acbm/lie_algebra.hpp"
#include "acbm/metric.hpp"
#include "acbm/tensor.hpp"

namespace acbm {

// Coefficients of a left-invariant connection in the chosen basis:
// nabla_{e_i} e_j = gamma(k,i,j) e_k.
class ConnectionCoefficients {
public:
    ConnectionCoefficients() = default;
    explicit ConnectionCoefficients(std::size_t dim)
        : gamma_(dim, {Variance::Upper, Variance::Lower, Variance::Lower}) {}

    std::size_t dim() const { return gamma_.dim(); }

    Rational& operator()(std::size_t k, std::size_t i, std::size_t j) { return gamma_(k, i, j); }
    const Rational& operator()(std::size_t k, std::size_t i, std::size_t j) const {
        return gamma_(k, i, j);
    }

    const DenseTensor& tensor() const { return gamma_; }

    bool operator==(const ConnectionCoefficients&) const = default;

private:
    DenseTensor gamma_;
};

// Levi-Civita connection of a left-invariant metric via the Koszul formula,
// which for constant fields collapses to bracket/metric contractions:
//   2 g(nabla_{e_i} e_j, e_k) = g([e_i,e_j],e_k) - g([e_i,e_k],e_j) - g([e_j,e_k],e_i).
ConnectionCoefficients levi_civita(const LieAlgebra& l, const MetricTensor& g);

struct CurvatureData {
    // riemann(l,i,j,k): coefficient of e_l in R(e_i,e_j)e_k with
    // R(x,y)z = nabla_x nabla_y z - nabla_y nabla_x z - nabla_{[x,y]} z.
    DenseTensor riemann;
    // riemann_cov(i,j,k,l) = g(R(e_i,e_j)e_k, e_l).
    DenseTensor riemann_cov;
    DenseTensor ricci;           // ricci(j,k) = trace of i -> R(e_i,e_j,e_k,.) against the inverse metric
    DenseTensor ricci_operator;  // q(i,j): g(Q e_j, e_k) = ricci(j,k)
    Rational tau = 0;            // scalar curvature
    Rational tau_star = 0;       // trace of ricci against the inverse metric twisted by phi
    Rational tau_tilde = 0;      // scalar curvature of the associated metric (full pipeline rerun)
};

// Riemann tensor only; the traces are filled in by ricci_data.
CurvatureData curvature(const LieAlgebra& l, const MetricTensor& g, const ConnectionCoefficients& conn);

// Completes curv with ricci, the Ricci operator, tau, tau_star and tau_tilde.
// tau_tilde is not obtained from an identity: the Levi-Civita / curvature /
// trace chain is rerun from scratch with g_tilde as the metric.
void ricci_data(const LieAlgebra& l, const MetricTensor& g, const DenseTensor& phi,
                const MetricTensor& g_tilde, CurvatureData& curv);

// Scalar curvature of (l, g) by the full chain; used for tau_tilde and as an
// independent oracle in tests.
Rational scalar_curvature(const LieAlgebra& l, const MetricTensor& g);

// Covariant derivative of a constant tensor field on a Lie group with
// left-invariant data: the partial-derivative term vanishes and only the
// connection terms remain. The derivative slot is prepended (lower).
// Works for any order/variance; order-2 and order-3 inputs are what we use.
DenseTensor covariant_derivative(const DenseTensor& t, const ConnectionCoefficients& conn);

// (L_v g)(x,y) = g(nabla_x v, y) + g(x, nabla_y v) for a constant field v.
DenseTensor lie_derivative_metric(const RatVector& v, const MetricTensor& g,
                                  const ConnectionCoefficients& conn);

}  // namespace acbm

#endif
