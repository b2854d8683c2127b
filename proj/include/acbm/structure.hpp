#ifndef ACBM_STRUCTURE_HPP
#define ACBM_STRUCTURE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "acbm/geometry.hpp"
#include "acbm/lie_algebra.hpp"
#include "acbm/metric.hpp"
#include "acbm/tensor.hpp"

namespace acbm {

// Almost contact B-metric data (phi, xi, eta, g) on a (2n+1)-dimensional Lie
// algebra, all left-invariant, expressed in one fixed basis. Construction
// checks shapes only; the axioms are a reported verdict, not an invariant,
// so that broken inputs can be diagnosed instead of rejected blindly.
struct AlmostContactBMetricStructure {
    AlmostContactBMetricStructure(LieAlgebra algebra_, MetricTensor g_, DenseTensor phi_,
                                  RatVector xi_, RatVector eta_);

    LieAlgebra algebra;
    MetricTensor g;
    DenseTensor phi;  // phi(i,j) = coefficient of e_i in phi(e_j)
    RatVector xi;
    RatVector eta;

    std::size_t dim() const { return algebra.dim(); }
    std::size_t n() const { return algebra.n(); }

    Rational eta_of(const RatVector& v) const;

    // phi^2 as a (1,1) tensor, used by several axiom and predicate checks.
    DenseTensor phi_squared() const;
};

struct AxiomCheck {
    std::string name;
    bool passed = false;
    std::vector<std::size_t> witness;  // first violating index tuple, empty when passed
};

struct StructureVerdict {
    bool valid = false;
    std::vector<AxiomCheck> axioms;
};

// Checks every defining axiom plus the standard derived compatibilities
// (phi-symmetry of g, g(x,xi) = eta(x), g(xi,xi) = 1, eta(nabla_x xi) = 0,
// signature (n+1, n)). All failures are reported, not just the first.
StructureVerdict validate_structure(const AlmostContactBMetricStructure& s);

// g_tilde(x,y) = g(x, phi y) + eta(x) eta(y).
MetricTensor associated_metric(const AlmostContactBMetricStructure& s);

struct FundamentalTensor {
    DenseTensor f;  // f(i,j,k) = g((nabla_{e_i} phi) e_j, e_k)
    // Traces over the full basis against the inverse metric:
    RatVector lee_theta;       // theta(z)  = g^{ij} F(e_i, e_j, z)
    RatVector lee_theta_star;  // theta*(z) = g^{ij} F(e_i, phi e_j, z)
    RatVector lee_omega;       // omega(z)  = F(xi, xi, z)
};

FundamentalTensor fundamental_tensor(const AlmostContactBMetricStructure& s,
                                     const ConnectionCoefficients& conn);

// F identically zero.
bool is_cosymplectic(const FundamentalTensor& f);

struct SasakiLikeVerdict {
    bool sasaki_like = false;
    // First (i,j,l) where (nabla_{e_i} phi) e_j misses the defining value.
    std::vector<std::size_t> witness;
    // When the defining condition holds, the curvature consequences are
    // asserted as well; any failure here flags an engine bug.
    bool consequences_checked = false;
    std::vector<std::string> consequence_failures;
};

// Decided from the defining condition
//   (nabla_x phi) y = -g(x,y) xi - eta(y) x + 2 eta(x) eta(y) xi,
// never from the curvature identities (those are only asserted afterwards).
SasakiLikeVerdict is_sasaki_like(const AlmostContactBMetricStructure& s,
                                 const ConnectionCoefficients& conn);

}  // namespace acbm

#endif
