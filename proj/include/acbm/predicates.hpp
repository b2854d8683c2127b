#ifndef ACBM_PREDICATES_HPP
#define ACBM_PREDICATES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "acbm/geometry.hpp"
#include "acbm/linalg.hpp"
#include "acbm/structure.hpp"

namespace acbm {

// Outcome of one curvature-condition test. A false verdict names the first
// violating index tuple; the recurrent-forms solvers attach the full solution
// space of the 1-form system instead, and `applicable` goes false when the
// condition does not even make sense on the input (vanishing Ricci tensor).
// `einstein_equivalent` is filled by the analysis layer on inputs where the
// condition is known to reduce to the Einstein property.
struct PredicateVerdict {
    std::string name;
    bool holds = false;
    bool applicable = true;
    std::vector<std::size_t> witness;
    std::optional<AffineSolutionSpace> form_space;
    std::optional<bool> einstein_equivalent;
};

// Exact basis of ker eta = { v : eta(v) = 0 }.
std::vector<RatVector> ker_eta_basis(const RatVector& eta);

// The five parallelism flavours of the Ricci tensor, decided componentwise
// from nabla_ricci(i,j,k) = (nabla_{e_i} ricci)(e_j, e_k):
//   locally_symmetric   nabla ricci = 0
//   eta_parallel        zero whenever all three slots lie in ker eta
//   parallel_along_xi   nabla_xi ricci = 0
//   cyclic_parallel     (nabla_x)(y,z) + (nabla_y)(z,x) + (nabla_z)(x,y) = 0
//   codazzi             (nabla_x)(y,z) = (nabla_y)(x,z)
struct RicciParallelismReport {
    PredicateVerdict locally_symmetric;
    PredicateVerdict eta_parallel;
    PredicateVerdict parallel_along_xi;
    PredicateVerdict cyclic_parallel;
    PredicateVerdict codazzi;
};

RicciParallelismReport ricci_parallelism_report(const DenseTensor& nabla_ricci,
                                                const AlmostContactBMetricStructure& s);

// rho(R(xi,x)y, z) + rho(y, R(xi,x)z) = 0 over all basis triples (x,y,z).
PredicateVerdict r_xi_action_on_rho(const DenseTensor& riemann, const DenseTensor& ricci,
                                    const AlmostContactBMetricStructure& s);

enum class PhiSymmetryScope { Local, Global };

// phi^2 (nabla_x Q) y = 0; Global quantifies x, y over the full basis,
// Local restricts both to ker eta.
PredicateVerdict ricci_phi_symmetry(const DenseTensor& nabla_q,
                                    const AlmostContactBMetricStructure& s,
                                    PhiSymmetryScope scope);

enum class RecurrentKind { Pseudo, SpecialWeakly };

// Solves the 1-form system behind pseudo-Ricci symmetry,
//   (nabla_x rho)(y,z) = [alpha(x) + beta(x)] rho(y,z)
//                      + alpha(y) rho(x,z) + alpha(z) rho(x,y),
// or its special weakly variant with beta = alpha. Unknowns are the covector
// components of alpha (and beta). The verdict holds iff the system is
// consistent and the required forms do not vanish identically on the
// solution space (the definitions demand non-vanishing forms; over the
// rationals such a point exists iff no required form is forced to zero).
// Throws NotApplicableError when rho = 0.
PredicateVerdict recurrent_forms_solve(const DenseTensor& nabla_ricci, const DenseTensor& ricci,
                                       RecurrentKind kind);

// R(x,y,z,Qw) - R(Qx,y,z,w) - R(x,Qy,z,w) - R(x,y,Qz,w) = 0 over all basis
// quadruples, from the (0,4) curvature and the Ricci operator.
PredicateVerdict q_dot_r_zero(const DenseTensor& riemann_cov, const DenseTensor& q,
                              const DenseTensor& ricci);

// Contracted residual rho(Qy, z) + rho(y, Qz) as a (0,2) tensor; it must
// vanish whenever q_dot_r_zero holds.
DenseTensor q_commutator_trace(const DenseTensor& ricci, const DenseTensor& q);

// Everything above evaluated on one manifold. The recurrent-forms verdicts
// degrade to applicable=false instead of throwing when rho = 0.
struct PredicateCatalogue {
    RicciParallelismReport parallelism;
    PredicateVerdict r_xi_action;
    PredicateVerdict phi_symmetry_local;
    PredicateVerdict phi_symmetry_global;
    PredicateVerdict pseudo_ricci_symmetric;
    PredicateVerdict special_weakly_ricci_symmetric;
    PredicateVerdict q_dot_r;
};

PredicateCatalogue evaluate_predicates(const AlmostContactBMetricStructure& s,
                                       const ConnectionCoefficients& conn,
                                       const CurvatureData& curv);

// Consistency assertions between the catalogue and the Einstein-like fit on
// inputs carrying a consistent vertical-potential soliton: the equivalence
// chain locally_symmetric = cyclic_parallel = codazzi = global phi-symmetry
// = r_xi_action = (b = c = 0), unconditional local phi-symmetry, and the
// exclusion between Q.R = 0 and the existence of the soliton.
struct EquivalenceChecks {
    bool chain = false;
    bool local_phi = false;
    bool q_dot_r_exclusion = false;
    bool all() const { return chain && local_phi && q_dot_r_exclusion; }
};

EquivalenceChecks cross_predicate_consistency(const PredicateCatalogue& cat,
                                              bool einstein_b_c_zero,
                                              bool vertical_fit_consistent);

}  // namespace acbm

#endif
