#include "acbm/soliton.hpp"

#include "acbm/errors.hpp"

namespace acbm {

namespace {

DenseTensor sym_outer(const RatVector& w) {
    DenseTensor t(w.size(), {Variance::Lower, Variance::Lower});
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j) t(i, j) = w[i] * w[j];
    return t;
}

// g(e_i, phi e_j) as a (0,2) tensor.
DenseTensor g_phi(const AlmostContactBMetricStructure& s) {
    const std::size_t d = s.dim();
    DenseTensor t(d, {Variance::Lower, Variance::Lower});
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Rational sum(0);
            for (std::size_t a = 0; a < d; ++a) sum += s.g(i, a) * s.phi(a, j);
            t(i, j) = sum;
        }
    return t;
}

// g(phi e_i, phi e_j) as a (0,2) tensor.
DenseTensor g_phi_phi(const AlmostContactBMetricStructure& s) {
    const std::size_t d = s.dim();
    DenseTensor t(d, {Variance::Lower, Variance::Lower});
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Rational sum(0);
            for (std::size_t a = 0; a < d; ++a)
                for (std::size_t b = 0; b < d; ++b) sum += s.phi(a, i) * s.phi(b, j) * s.g(a, b);
            t(i, j) = sum;
        }
    return t;
}

void require_symmetric(const DenseTensor& t, const char* who) {
    for (std::size_t i = 0; i < t.dim(); ++i)
        for (std::size_t j = i + 1; j < t.dim(); ++j)
            if (t(i, j) != t(j, i)) throw ValidationError(std::string(who) + ": tensor is not symmetric");
}

// One equation per unordered index pair: x0 t0 + x1 t1 + x2 t2 = y.
struct Span3System {
    RatMatrix a;
    RatVector b;
};

Span3System span3_system(const DenseTensor& t0, const DenseTensor& t1, const DenseTensor& t2,
                         const DenseTensor& y) {
    const std::size_t d = y.dim();
    Span3System sys{RatMatrix(d * (d + 1) / 2, 3), RatVector(d * (d + 1) / 2)};
    std::size_t r = 0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j, ++r) {
            sys.a(r, 0) = t0(i, j);
            sys.a(r, 1) = t1(i, j);
            sys.a(r, 2) = t2(i, j);
            sys.b[r] = y(i, j);
        }
    return sys;
}

// Can the system still be solved with the listed coordinates pinned to zero?
bool feasible_with_zeros(const Span3System& sys, std::initializer_list<std::size_t> zero_cols) {
    RatMatrix a(sys.a.rows() + zero_cols.size(), 3);
    RatVector b(sys.b.size() + zero_cols.size());
    for (std::size_t i = 0; i < sys.a.rows(); ++i) {
        for (std::size_t j = 0; j < 3; ++j) a(i, j) = sys.a(i, j);
        b[i] = sys.b[i];
    }
    std::size_t r = sys.a.rows();
    for (std::size_t col : zero_cols) a(r++, col) = 1;
    return solve_affine(a, b).consistent;
}

}  // namespace

EinsteinLikeFit einstein_like_fit(const DenseTensor& ricci, const MetricTensor& g,
                                  const MetricTensor& g_tilde, const RatVector& eta) {
    if (ricci.dim() != g.dim() || g_tilde.dim() != g.dim() || eta.size() != g.dim())
        throw DimensionMismatchError("einstein_like_fit: inconsistent dimensions");
    require_symmetric(ricci, "einstein_like_fit");

    const DenseTensor tg = tensor_from_matrix(g.matrix(), Variance::Lower, Variance::Lower);
    const DenseTensor tgt = tensor_from_matrix(g_tilde.matrix(), Variance::Lower, Variance::Lower);
    const DenseTensor tee = sym_outer(eta);
    const Span3System sys = span3_system(tg, tgt, tee, ricci);
    const AffineSolutionSpace sol = solve_affine(sys.a, sys.b);

    EinsteinLikeFit fit;
    fit.consistent = sol.consistent;
    if (!sol.consistent) return fit;
    fit.a = sol.particular[0];
    fit.b = sol.particular[1];
    fit.c = sol.particular[2];
    fit.unique = sol.nullspace.empty();
    for (const RatVector& v : sol.nullspace) fit.nullspace.push_back({v[0], v[1], v[2]});

    if (feasible_with_zeros(sys, {1, 2}))
        fit.classification = EinsteinLikeFit::Classification::Einstein;
    else if (feasible_with_zeros(sys, {1}))
        fit.classification = EinsteinLikeFit::Classification::EtaEinstein;
    else
        fit.classification = EinsteinLikeFit::Classification::EinsteinLike;
    return fit;
}

SolitonFit soliton_fit(const RatVector& v, const AlmostContactBMetricStructure& s,
                       const ConnectionCoefficients& conn, const DenseTensor& ricci) {
    const std::size_t d = s.dim();
    if (v.size() != d || ricci.dim() != d)
        throw DimensionMismatchError("soliton_fit: inconsistent dimensions");
    require_symmetric(ricci, "soliton_fit");

    const MetricTensor g_tilde = associated_metric(s);
    const DenseTensor lie = lie_derivative_metric(v, s.g, conn);

    // Move the data to the right side: lambda g + mu g~ + nu eta(x)eta = -(L_v g / 2 + ricci).
    DenseTensor rhs(d, {Variance::Lower, Variance::Lower});
    const Rational half(1, 2);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) rhs(i, j) = -(half * lie(i, j) + ricci(i, j));

    const DenseTensor tg = tensor_from_matrix(s.g.matrix(), Variance::Lower, Variance::Lower);
    const DenseTensor tgt = tensor_from_matrix(g_tilde.matrix(), Variance::Lower, Variance::Lower);
    const DenseTensor tee = sym_outer(s.eta);
    const Span3System sys = span3_system(tg, tgt, tee, rhs);
    const AffineSolutionSpace sol = solve_affine(sys.a, sys.b);

    SolitonFit fit;
    fit.potential = v;
    fit.consistent = sol.consistent;
    if (!sol.consistent) return fit;
    fit.lambda = sol.particular[0];
    fit.mu = sol.particular[1];
    fit.nu = sol.particular[2];
    fit.unique = sol.nullspace.empty();
    for (const RatVector& nv : sol.nullspace) fit.nullspace.push_back({nv[0], nv[1], nv[2]});
    return fit;
}

FitCrossChecks cross_check_fits(const EinsteinLikeFit& e, const SolitonFit& f, std::size_t n) {
    FitCrossChecks checks;
    if (!e.consistent || !f.consistent) return checks;
    const Rational two_n(2 * n);
    checks.a_lambda = e.a + f.lambda == 0;
    checks.b_mu = e.b + f.mu - 1 == 0;
    checks.c_nu = e.c + f.nu + 1 == 0;
    checks.abc_sum = e.a + e.b + e.c == two_n;
    checks.lmn_sum = f.lambda + f.mu + f.nu == -two_n;
    return checks;
}

EinsteinScalarChecks einstein_scalar_relations(const EinsteinLikeFit& e, const Rational& tau,
                                               const Rational& tau_tilde, std::size_t n) {
    EinsteinScalarChecks checks;
    if (!e.consistent) return checks;
    const Rational two_n(2 * n);
    checks.sum = e.a + e.b + e.c == two_n;
    checks.tau = tau == two_n * (e.a + 1);
    checks.tau_tilde = tau_tilde == two_n * (e.b + 1);
    return checks;
}

CorollaryVerdict corollary_scalar_relations(const SolitonFit& fit, const Rational& tau,
                                            const Rational& tau_tilde, std::size_t n) {
    if (!fit.consistent)
        throw NotApplicableError("corollary_scalar_relations: soliton fit is inconsistent");
    const Rational two_n(2 * n);
    CorollaryVerdict v;
    v.a = -fit.lambda;
    v.b = 1 - fit.mu;
    v.c = -1 - fit.nu;
    v.lambda_ok = fit.lambda == 1 - tau / two_n;
    v.mu_ok = fit.mu == 2 - tau_tilde / two_n;
    v.nu_ok = fit.nu == (tau + tau_tilde) / two_n - two_n - 3;
    v.a_ok = v.a == tau / two_n - 1;
    v.b_ok = v.b == tau_tilde / two_n - 1;
    v.c_ok = v.c == two_n + 2 - (tau + tau_tilde) / two_n;
    return v;
}

DenseTensor nabla_rho_closed_form(const SolitonFit& fit, const AlmostContactBMetricStructure& s) {
    if (!fit.consistent) throw NotApplicableError("nabla_rho_closed_form: fit is inconsistent");
    if (fit.potential != s.xi)
        throw NotApplicableError("nabla_rho_closed_form: fit potential is not xi");
    const std::size_t d = s.dim();
    const DenseTensor gp = g_phi(s);
    const DenseTensor gpp = g_phi_phi(s);
    const Rational one_minus_mu = 1 - fit.mu;
    const Rational mu_plus_nu = fit.mu + fit.nu;

    DenseTensor out(d, {Variance::Lower, Variance::Lower, Variance::Lower});
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                out(i, j, k) = one_minus_mu * (gpp(i, j) * s.eta[k] + gpp(i, k) * s.eta[j]) +
                               mu_plus_nu * (gp(i, j) * s.eta[k] + gp(i, k) * s.eta[j]);
    return out;
}

RecurrenceCoefficients recurrence_coefficients(const Rational& lambda, const Rational& mu,
                                               std::size_t n) {
    const Rational one_minus_mu = 1 - mu;
    const Rational den = lambda * lambda + one_minus_mu * one_minus_mu;
    if (den == 0)
        throw DegenerateCaseError("recurrence_coefficients: undefined at (lambda, mu) = (0, 1)");
    const Rational two_n(2 * n);
    RecurrenceCoefficients rc;
    rc.c1 = (one_minus_mu * one_minus_mu + lambda * (lambda + two_n)) / den;
    rc.c2 = two_n * one_minus_mu / den;
    return rc;
}

DenseTensor assemble_recurrence(const RecurrenceCoefficients& rc, const DenseTensor& ricci,
                                const AlmostContactBMetricStructure& s) {
    const std::size_t d = s.dim();
    if (ricci.dim() != d) throw DimensionMismatchError("assemble_recurrence: inconsistent dimensions");

    // rho(x, phi y) and rho(phi x, phi y)
    DenseTensor rp(d, {Variance::Lower, Variance::Lower});
    DenseTensor rpp(d, {Variance::Lower, Variance::Lower});
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Rational sum(0);
            for (std::size_t a = 0; a < d; ++a) sum += ricci(i, a) * s.phi(a, j);
            rp(i, j) = sum;
            Rational sum2(0);
            for (std::size_t a = 0; a < d; ++a)
                for (std::size_t b = 0; b < d; ++b) sum2 += s.phi(a, i) * s.phi(b, j) * ricci(a, b);
            rpp(i, j) = sum2;
        }

    DenseTensor out(d, {Variance::Lower, Variance::Lower, Variance::Lower});
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                out(i, j, k) = rc.c1 * (rp(i, j) * s.eta[k] + rp(i, k) * s.eta[j]) +
                               rc.c2 * (rpp(i, j) * s.eta[k] + rpp(i, k) * s.eta[j]);
    return out;
}

VerticalPotentialReport vertical_potential_analysis(const Rational& k,
                                                    const AlmostContactBMetricStructure& s,
                                                    const ConnectionCoefficients& conn,
                                                    const DenseTensor& ricci) {
    if (!is_sasaki_like(s, conn).sasaki_like)
        throw NotApplicableError("vertical_potential_analysis: structure is not Sasaki-like");

    const std::size_t d = s.dim();
    VerticalPotentialReport report;
    report.k = k;

    RatVector v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = k * s.xi[i];
    report.fit = soliton_fit(v, s, conn, ricci);
    if (!report.fit.consistent) return report;

    const Rational two_n(2 * s.n());
    const Rational lambda = report.fit.lambda;
    report.mu_equals_k = report.fit.mu == k;
    report.lambda_nu_sum = lambda + report.fit.nu == -k - two_n;
    report.constants_sum = lambda + report.fit.mu + report.fit.nu == -two_n;

    const MetricTensor g_tilde = associated_metric(s);
    report.einstein = einstein_like_fit(ricci, s.g, g_tilde, s.eta);
    report.eta_einstein_constants = report.einstein.consistent && report.einstein.a == -lambda &&
                                    report.einstein.b == 0 && report.einstein.c == lambda + two_n;

    // ricci = -lambda g + (lambda + 2n) eta (x) eta
    {
        DenseTensor expect = sym_outer(s.eta);
        expect *= lambda + two_n;
        expect -= lambda * tensor_from_matrix(s.g.matrix(), Variance::Lower, Variance::Lower);
        report.ricci_closed_form = ricci == expect;
    }
    // nabla ricci = -(lambda + 2n) [ g(x, phi y) eta(z) + g(x, phi z) eta(y) ]
    {
        const DenseTensor direct = covariant_derivative(ricci, conn);
        const DenseTensor gp = g_phi(s);
        const Rational coeff = -(lambda + two_n);
        bool ok = true;
        for (std::size_t i = 0; i < d && ok; ++i)
            for (std::size_t j = 0; j < d && ok; ++j)
                for (std::size_t kk = 0; kk < d && ok; ++kk)
                    ok = direct(i, j, kk) == coeff * (gp(i, j) * s.eta[kk] + gp(i, kk) * s.eta[j]);
        report.nabla_ricci_closed_form = ok;
    }
    return report;
}

ParallelTensorSpace parallel_symmetric_space(const ConnectionCoefficients& conn,
                                             const MetricTensor& g) {
    const std::size_t d = g.dim();
    if (conn.dim() != d)
        throw DimensionMismatchError("parallel_symmetric_space: inconsistent dimensions");

    // Unknowns: h_{ij} for i <= j, in row-major pair order.
    const std::size_t unknowns = d * (d + 1) / 2;
    std::vector<std::vector<std::size_t>> pair_index(d, std::vector<std::size_t>(d));
    {
        std::size_t u = 0;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i; j < d; ++j, ++u) {
                pair_index[i][j] = u;
                pair_index[j][i] = u;
            }
    }

    // (nabla_a h)_{bc} = -Gamma^l_{ab} h_{lc} - Gamma^l_{ac} h_{bl} = 0.
    RatMatrix a(d * unknowns, unknowns);
    std::size_t r = 0;
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t c = b; c < d; ++c, ++r)
                for (std::size_t l = 0; l < d; ++l) {
                    a(r, pair_index[l][c]) -= conn(l, x, b);
                    a(r, pair_index[b][l]) -= conn(l, x, c);
                }

    const AffineSolutionSpace sol = solve_affine(a, RatVector(d * unknowns, Rational(0)));

    ParallelTensorSpace space;
    for (const RatVector& v : sol.nullspace) {
        DenseTensor h(d, {Variance::Lower, Variance::Lower});
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) h(i, j) = v[pair_index[i][j]];
        // scale so the first nonzero component is 1
        Rational lead(0);
        for (std::size_t i = 0; i < d && lead == 0; ++i)
            for (std::size_t j = 0; j < d && lead == 0; ++j)
                if (h(i, j) != 0) lead = h(i, j);
        if (lead != 0) h *= 1 / lead;
        space.basis.push_back(std::move(h));
    }
    return space;
}

SolitonTensorH soliton_tensor_h(const AlmostContactBMetricStructure& s,
                                const ConnectionCoefficients& conn, const DenseTensor& ricci,
                                const Rational& mu, const Rational& nu) {
    const std::size_t d = s.dim();
    if (ricci.dim() != d) throw DimensionMismatchError("soliton_tensor_h: inconsistent dimensions");

    const MetricTensor g_tilde = associated_metric(s);
    SolitonTensorH out{DenseTensor(d, {Variance::Lower, Variance::Lower})};
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            out.h(i, j) = ricci(i, j) + (mu - 1) * g_tilde(i, j) + (nu + 1) * s.eta[i] * s.eta[j];

    out.parallel = covariant_derivative(out.h, conn).is_zero();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) out.h_xi_xi += out.h(i, j) * s.xi[i] * s.xi[j];
    out.lambda = -out.h_xi_xi;

    if (out.parallel) {
        bool prop = true;
        for (std::size_t i = 0; i < d && prop; ++i)
            for (std::size_t j = 0; j < d && prop; ++j)
                prop = out.h(i, j) == out.h_xi_xi * s.g(i, j);
        out.proportional_to_g = prop;
    }
    return out;
}

}  // namespace acbm
