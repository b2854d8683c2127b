#include "acbm/predicates.hpp"

#include <utility>

#include "acbm/errors.hpp"

namespace acbm {

namespace {

PredicateVerdict make_verdict(std::string name) {
    PredicateVerdict v;
    v.name = std::move(name);
    return v;
}

// Is the covector block [lo, hi) zero on the whole affine solution space?
bool block_vanishes(const AffineSolutionSpace& sol, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
        if (sol.particular[i] != 0) return false;
    for (const RatVector& v : sol.nullspace)
        for (std::size_t i = lo; i < hi; ++i)
            if (v[i] != 0) return false;
    return true;
}

}  // namespace

std::vector<RatVector> ker_eta_basis(const RatVector& eta) {
    RatMatrix a(1, eta.size());
    for (std::size_t i = 0; i < eta.size(); ++i) a(0, i) = eta[i];
    return solve_affine(a, RatVector(1, Rational(0))).nullspace;
}

RicciParallelismReport ricci_parallelism_report(const DenseTensor& nabla_ricci,
                                                const AlmostContactBMetricStructure& s) {
    const std::size_t d = s.dim();
    if (nabla_ricci.dim() != d)
        throw DimensionMismatchError("ricci_parallelism_report: inconsistent dimensions");
    const DenseTensor& t = nabla_ricci;

    RicciParallelismReport rep;
    rep.locally_symmetric = make_verdict("ricci_locally_symmetric");
    rep.eta_parallel = make_verdict("ricci_eta_parallel");
    rep.parallel_along_xi = make_verdict("ricci_parallel_along_xi");
    rep.cyclic_parallel = make_verdict("ricci_cyclic_parallel");
    rep.codazzi = make_verdict("ricci_codazzi");

    rep.locally_symmetric.holds = true;
    for (std::size_t i = 0; i < d && rep.locally_symmetric.holds; ++i)
        for (std::size_t j = 0; j < d && rep.locally_symmetric.holds; ++j)
            for (std::size_t k = 0; k < d; ++k)
                if (t(i, j, k) != 0) {
                    rep.locally_symmetric.holds = false;
                    rep.locally_symmetric.witness = {i, j, k};
                    break;
                }

    // All three slots contracted against a basis of ker eta; the witness
    // indexes that basis, not the ambient one.
    const std::vector<RatVector> ker = ker_eta_basis(s.eta);
    rep.eta_parallel.holds = true;
    for (std::size_t a = 0; a < ker.size() && rep.eta_parallel.holds; ++a)
        for (std::size_t b = 0; b < ker.size() && rep.eta_parallel.holds; ++b)
            for (std::size_t c = 0; c < ker.size(); ++c) {
                Rational val(0);
                for (std::size_t i = 0; i < d; ++i)
                    for (std::size_t j = 0; j < d; ++j)
                        for (std::size_t k = 0; k < d; ++k)
                            val += t(i, j, k) * ker[a][i] * ker[b][j] * ker[c][k];
                if (val != 0) {
                    rep.eta_parallel.holds = false;
                    rep.eta_parallel.witness = {a, b, c};
                    break;
                }
            }

    rep.parallel_along_xi.holds = true;
    for (std::size_t j = 0; j < d && rep.parallel_along_xi.holds; ++j)
        for (std::size_t k = 0; k < d; ++k) {
            Rational val(0);
            for (std::size_t i = 0; i < d; ++i) val += s.xi[i] * t(i, j, k);
            if (val != 0) {
                rep.parallel_along_xi.holds = false;
                rep.parallel_along_xi.witness = {j, k};
                break;
            }
        }

    rep.cyclic_parallel.holds = true;
    for (std::size_t i = 0; i < d && rep.cyclic_parallel.holds; ++i)
        for (std::size_t j = 0; j < d && rep.cyclic_parallel.holds; ++j)
            for (std::size_t k = 0; k < d; ++k)
                if (t(i, j, k) + t(j, k, i) + t(k, i, j) != 0) {
                    rep.cyclic_parallel.holds = false;
                    rep.cyclic_parallel.witness = {i, j, k};
                    break;
                }

    rep.codazzi.holds = true;
    for (std::size_t i = 0; i < d && rep.codazzi.holds; ++i)
        for (std::size_t j = 0; j < d && rep.codazzi.holds; ++j)
            for (std::size_t k = 0; k < d; ++k)
                if (t(i, j, k) != t(j, i, k)) {
                    rep.codazzi.holds = false;
                    rep.codazzi.witness = {i, j, k};
                    break;
                }

    return rep;
}

PredicateVerdict r_xi_action_on_rho(const DenseTensor& riemann, const DenseTensor& ricci,
                                    const AlmostContactBMetricStructure& s) {
    const std::size_t d = s.dim();
    PredicateVerdict v = make_verdict("r_xi_action_on_rho");

    // m(l,x,y) = coefficient of e_l in R(xi, e_x) e_y
    DenseTensor m(d, {Variance::Upper, Variance::Lower, Variance::Lower});
    for (std::size_t l = 0; l < d; ++l)
        for (std::size_t x = 0; x < d; ++x)
            for (std::size_t y = 0; y < d; ++y) {
                Rational sum(0);
                for (std::size_t a = 0; a < d; ++a) sum += s.xi[a] * riemann(l, a, x, y);
                m(l, x, y) = sum;
            }

    v.holds = true;
    for (std::size_t x = 0; x < d && v.holds; ++x)
        for (std::size_t y = 0; y < d && v.holds; ++y)
            for (std::size_t z = 0; z < d; ++z) {
                Rational val(0);
                for (std::size_t l = 0; l < d; ++l)
                    val += m(l, x, y) * ricci(l, z) + m(l, x, z) * ricci(y, l);
                if (val != 0) {
                    v.holds = false;
                    v.witness = {x, y, z};
                    break;
                }
            }
    return v;
}

PredicateVerdict ricci_phi_symmetry(const DenseTensor& nabla_q,
                                    const AlmostContactBMetricStructure& s,
                                    PhiSymmetryScope scope) {
    const std::size_t d = s.dim();
    PredicateVerdict v =
        make_verdict(scope == PhiSymmetryScope::Local ? "ricci_phi_symmetry_local"
                                                      : "ricci_phi_symmetry_global");

    // w(m,i,j) = component m of phi^2 (nabla_{e_i} Q) e_j
    const DenseTensor p2 = s.phi_squared();
    DenseTensor w(d, {Variance::Upper, Variance::Lower, Variance::Lower});
    for (std::size_t mm = 0; mm < d; ++mm)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                Rational sum(0);
                for (std::size_t k = 0; k < d; ++k) sum += p2(mm, k) * nabla_q(i, k, j);
                w(mm, i, j) = sum;
            }

    v.holds = true;
    if (scope == PhiSymmetryScope::Global) {
        // witness = (x, y, component)
        for (std::size_t i = 0; i < d && v.holds; ++i)
            for (std::size_t j = 0; j < d && v.holds; ++j)
                for (std::size_t mm = 0; mm < d; ++mm)
                    if (w(mm, i, j) != 0) {
                        v.holds = false;
                        v.witness = {i, j, mm};
                        break;
                    }
    } else {
        // witness = (ker-basis x, ker-basis y, component)
        const std::vector<RatVector> ker = ker_eta_basis(s.eta);
        for (std::size_t a = 0; a < ker.size() && v.holds; ++a)
            for (std::size_t b = 0; b < ker.size() && v.holds; ++b)
                for (std::size_t mm = 0; mm < d; ++mm) {
                    Rational val(0);
                    for (std::size_t i = 0; i < d; ++i)
                        for (std::size_t j = 0; j < d; ++j)
                            val += w(mm, i, j) * ker[a][i] * ker[b][j];
                    if (val != 0) {
                        v.holds = false;
                        v.witness = {a, b, mm};
                        break;
                    }
                }
    }
    return v;
}

PredicateVerdict recurrent_forms_solve(const DenseTensor& nabla_ricci, const DenseTensor& ricci,
                                       RecurrentKind kind) {
    if (ricci.is_zero())
        throw NotApplicableError("recurrent_forms_solve: Ricci tensor vanishes");

    const std::size_t d = ricci.dim();
    const bool pseudo = kind == RecurrentKind::Pseudo;
    PredicateVerdict v = make_verdict(pseudo ? "pseudo_ricci_symmetric"
                                             : "special_weakly_ricci_symmetric");

    // Unknown layout: alpha_0..alpha_{d-1} then (pseudo only) beta_0..beta_{d-1}.
    const std::size_t unknowns = pseudo ? 2 * d : d;
    RatMatrix a(d * d * d, unknowns);
    RatVector b(d * d * d);
    std::size_t r = 0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k, ++r) {
                if (pseudo) {
                    a(r, i) += ricci(j, k);
                    a(r, d + i) += ricci(j, k);
                } else {
                    a(r, i) += 2 * ricci(j, k);
                }
                a(r, j) += ricci(i, k);
                a(r, k) += ricci(i, j);
                b[r] = nabla_ricci(i, j, k);
            }

    AffineSolutionSpace sol = solve_affine(a, b);
    if (!sol.consistent) {
        v.holds = false;
        // No covectors at all satisfy the recurrence; in particular the zero
        // pair fails, so nabla ricci has a nonzero entry to point at.
        for (std::size_t i = 0; i < d && v.witness.empty(); ++i)
            for (std::size_t j = 0; j < d && v.witness.empty(); ++j)
                for (std::size_t k = 0; k < d; ++k)
                    if (nabla_ricci(i, j, k) != 0) {
                        v.witness = {i, j, k};
                        break;
                    }
        v.form_space = std::move(sol);
        return v;
    }

    const bool alpha_zero = block_vanishes(sol, 0, d);
    const bool beta_zero = pseudo && block_vanishes(sol, d, 2 * d);
    v.holds = !alpha_zero && !(pseudo && beta_zero);
    v.form_space = std::move(sol);
    return v;
}

PredicateVerdict q_dot_r_zero(const DenseTensor& riemann_cov, const DenseTensor& q,
                              const DenseTensor& ricci) {
    const std::size_t d = ricci.dim();
    PredicateVerdict v = make_verdict("q_dot_r_zero");

    v.holds = true;
    for (std::size_t x = 0; x < d && v.holds; ++x)
        for (std::size_t y = 0; y < d && v.holds; ++y)
            for (std::size_t z = 0; z < d && v.holds; ++z)
                for (std::size_t w = 0; w < d; ++w) {
                    Rational val(0);
                    for (std::size_t l = 0; l < d; ++l)
                        val += riemann_cov(x, y, z, l) * q(l, w) -
                               riemann_cov(l, y, z, w) * q(l, x) -
                               riemann_cov(x, l, z, w) * q(l, y) -
                               riemann_cov(x, y, l, w) * q(l, z);
                    if (val != 0) {
                        v.holds = false;
                        v.witness = {x, y, z, w};
                        break;
                    }
                }
    return v;
}

DenseTensor q_commutator_trace(const DenseTensor& ricci, const DenseTensor& q) {
    const std::size_t d = ricci.dim();
    DenseTensor out(d, {Variance::Lower, Variance::Lower});
    for (std::size_t y = 0; y < d; ++y)
        for (std::size_t z = 0; z < d; ++z) {
            Rational sum(0);
            for (std::size_t l = 0; l < d; ++l)
                sum += q(l, y) * ricci(l, z) + q(l, z) * ricci(y, l);
            out(y, z) = sum;
        }
    return out;
}

PredicateCatalogue evaluate_predicates(const AlmostContactBMetricStructure& s,
                                       const ConnectionCoefficients& conn,
                                       const CurvatureData& curv) {
    const DenseTensor nabla_ricci = covariant_derivative(curv.ricci, conn);
    const DenseTensor nabla_q = covariant_derivative(curv.ricci_operator, conn);

    PredicateCatalogue cat;
    cat.parallelism = ricci_parallelism_report(nabla_ricci, s);
    cat.r_xi_action = r_xi_action_on_rho(curv.riemann, curv.ricci, s);
    cat.phi_symmetry_local = ricci_phi_symmetry(nabla_q, s, PhiSymmetryScope::Local);
    cat.phi_symmetry_global = ricci_phi_symmetry(nabla_q, s, PhiSymmetryScope::Global);
    try {
        cat.pseudo_ricci_symmetric =
            recurrent_forms_solve(nabla_ricci, curv.ricci, RecurrentKind::Pseudo);
    } catch (const NotApplicableError&) {
        cat.pseudo_ricci_symmetric = make_verdict("pseudo_ricci_symmetric");
        cat.pseudo_ricci_symmetric.applicable = false;
    }
    try {
        cat.special_weakly_ricci_symmetric =
            recurrent_forms_solve(nabla_ricci, curv.ricci, RecurrentKind::SpecialWeakly);
    } catch (const NotApplicableError&) {
        cat.special_weakly_ricci_symmetric = make_verdict("special_weakly_ricci_symmetric");
        cat.special_weakly_ricci_symmetric.applicable = false;
    }
    cat.q_dot_r = q_dot_r_zero(curv.riemann_cov, curv.ricci_operator, curv.ricci);
    return cat;
}

EquivalenceChecks cross_predicate_consistency(const PredicateCatalogue& cat,
                                              bool einstein_b_c_zero,
                                              bool vertical_fit_consistent) {
    EquivalenceChecks ec;
    const bool base = cat.parallelism.locally_symmetric.holds;
    ec.chain = base == cat.parallelism.cyclic_parallel.holds &&
               base == cat.parallelism.codazzi.holds &&
               base == cat.phi_symmetry_global.holds && base == cat.r_xi_action.holds &&
               base == einstein_b_c_zero;
    ec.local_phi = cat.phi_symmetry_local.holds;
    ec.q_dot_r_exclusion = !(cat.q_dot_r.holds && vertical_fit_consistent);
    return ec;
}

}  // namespace acbm
