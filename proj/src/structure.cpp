#include "acbm/structure.hpp"

#include "acbm/errors.hpp"

namespace acbm {

AlmostContactBMetricStructure::AlmostContactBMetricStructure(LieAlgebra algebra_, MetricTensor g_,
                                                             DenseTensor phi_, RatVector xi_,
                                                             RatVector eta_)
    : algebra(std::move(algebra_)),
      g(std::move(g_)),
      phi(std::move(phi_)),
      xi(std::move(xi_)),
      eta(std::move(eta_)) {
    const std::size_t d = algebra.dim();
    if (g.dim() != d) throw DimensionMismatchError("structure: metric dimension != algebra dimension");
    if (phi.dim() != d || phi.order() != 2 ||
        phi.variance() != std::vector<Variance>{Variance::Upper, Variance::Lower})
        throw DimensionMismatchError("structure: phi must be a (1,1) tensor of matching dimension");
    if (xi.size() != d || eta.size() != d)
        throw DimensionMismatchError("structure: xi/eta length != algebra dimension");
}

Rational AlmostContactBMetricStructure::eta_of(const RatVector& v) const {
    Rational s(0);
    for (std::size_t i = 0; i < v.size(); ++i) s += eta[i] * v[i];
    return s;
}

DenseTensor AlmostContactBMetricStructure::phi_squared() const {
    const std::size_t d = dim();
    DenseTensor p2(d, {Variance::Upper, Variance::Lower});
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Rational s(0);
            for (std::size_t k = 0; k < d; ++k) s += phi(i, k) * phi(k, j);
            p2(i, j) = s;
        }
    return p2;
}

namespace {

void record(StructureVerdict& v, std::string name, bool passed, std::vector<std::size_t> witness) {
    v.axioms.push_back({std::move(name), passed, passed ? std::vector<std::size_t>{} : std::move(witness)});
    if (!passed) v.valid = false;
}

}  // namespace

StructureVerdict validate_structure(const AlmostContactBMetricStructure& s) {
    const std::size_t d = s.dim();
    StructureVerdict verdict;
    verdict.valid = true;

    // phi(xi) = 0
    {
        bool ok = true;
        std::vector<std::size_t> w;
        for (std::size_t i = 0; i < d && ok; ++i) {
            Rational sum(0);
            for (std::size_t j = 0; j < d; ++j) sum += s.phi(i, j) * s.xi[j];
            if (sum != 0) { ok = false; w = {i}; }
        }
        record(verdict, "phi_xi_zero", ok, w);
    }
    // phi^2 = -id + eta (x) xi
    {
        bool ok = true;
        std::vector<std::size_t> w;
        const DenseTensor p2 = s.phi_squared();
        for (std::size_t i = 0; i < d && ok; ++i)
            for (std::size_t j = 0; j < d && ok; ++j) {
                Rational expect = s.eta[j] * s.xi[i];
                if (i == j) expect -= 1;
                if (p2(i, j) != expect) { ok = false; w = {i, j}; }
            }
        record(verdict, "phi_squared", ok, w);
    }
    // eta o phi = 0
    {
        bool ok = true;
        std::vector<std::size_t> w;
        for (std::size_t j = 0; j < d && ok; ++j) {
            Rational sum(0);
            for (std::size_t i = 0; i < d; ++i) sum += s.eta[i] * s.phi(i, j);
            if (sum != 0) { ok = false; w = {j}; }
        }
        record(verdict, "eta_phi_zero", ok, w);
    }
    // eta(xi) = 1
    record(verdict, "eta_xi_one", s.eta_of(s.xi) == 1, {});
    // g(phi x, phi y) = -g(x,y) + eta(x) eta(y)
    {
        bool ok = true;
        std::vector<std::size_t> w;
        for (std::size_t i = 0; i < d && ok; ++i)
            for (std::size_t j = 0; j < d && ok; ++j) {
                Rational lhs(0);
                for (std::size_t a = 0; a < d; ++a)
                    for (std::size_t b = 0; b < d; ++b) lhs += s.phi(a, i) * s.phi(b, j) * s.g(a, b);
                if (lhs != -s.g(i, j) + s.eta[i] * s.eta[j]) { ok = false; w = {i, j}; }
            }
        record(verdict, "b_metric", ok, w);
    }
    // signature (n+1, n)
    {
        const MatrixSignature& sig = s.g.sig();
        record(verdict, "signature",
               sig.plus == s.n() + 1 && sig.minus == s.n() && sig.zero == 0, {});
    }
    // derived: g(phi x, y) = g(x, phi y)
    {
        bool ok = true;
        std::vector<std::size_t> w;
        for (std::size_t i = 0; i < d && ok; ++i)
            for (std::size_t j = i + 1; j < d && ok; ++j) {
                Rational lhs(0), rhs(0);
                for (std::size_t a = 0; a < d; ++a) {
                    lhs += s.phi(a, i) * s.g(a, j);
                    rhs += s.g(i, a) * s.phi(a, j);
                }
                if (lhs != rhs) { ok = false; w = {i, j}; }
            }
        record(verdict, "g_phi_symmetric", ok, w);
    }
    // derived: g(x, xi) = eta(x)
    {
        bool ok = true;
        std::vector<std::size_t> w;
        for (std::size_t i = 0; i < d && ok; ++i) {
            Rational sum(0);
            for (std::size_t j = 0; j < d; ++j) sum += s.g(i, j) * s.xi[j];
            if (sum != s.eta[i]) { ok = false; w = {i}; }
        }
        record(verdict, "g_xi_eta", ok, w);
    }
    // derived: g(xi, xi) = 1
    {
        Rational sum(0);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) sum += s.g(i, j) * s.xi[i] * s.xi[j];
        record(verdict, "g_xi_xi_one", sum == 1, {});
    }
    // derived: eta(nabla_x xi) = 0 (uses the Levi-Civita connection)
    {
        const ConnectionCoefficients conn = levi_civita(s.algebra, s.g);
        bool ok = true;
        std::vector<std::size_t> w;
        for (std::size_t i = 0; i < d && ok; ++i) {
            Rational sum(0);
            for (std::size_t a = 0; a < d; ++a)
                for (std::size_t j = 0; j < d; ++j) sum += s.eta[a] * conn(a, i, j) * s.xi[j];
            if (sum != 0) { ok = false; w = {i}; }
        }
        record(verdict, "eta_nabla_xi_zero", ok, w);
    }
    return verdict;
}

MetricTensor associated_metric(const AlmostContactBMetricStructure& s) {
    const std::size_t d = s.dim();
    RatMatrix gt(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Rational sum = s.eta[i] * s.eta[j];
            for (std::size_t a = 0; a < d; ++a) sum += s.g(i, a) * s.phi(a, j);
            gt(i, j) = sum;
        }
    return MetricTensor(std::move(gt));  // throws if asymmetric or degenerate
}

FundamentalTensor fundamental_tensor(const AlmostContactBMetricStructure& s,
                                     const ConnectionCoefficients& conn) {
    const std::size_t d = s.dim();
    const DenseTensor nabla_phi = covariant_derivative(s.phi, conn);  // (i, a, j) = (nabla_i phi)^a_j

    FundamentalTensor out;
    out.f = DenseTensor(d, {Variance::Lower, Variance::Lower, Variance::Lower});
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Rational sum(0);
                for (std::size_t a = 0; a < d; ++a) sum += nabla_phi(i, a, j) * s.g(a, k);
                out.f(i, j, k) = sum;
            }

    out.lee_theta.assign(d, Rational(0));
    out.lee_theta_star.assign(d, Rational(0));
    out.lee_omega.assign(d, Rational(0));
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                if (s.g.inv(i, j) != 0) {
                    out.lee_theta[k] += s.g.inv(i, j) * out.f(i, j, k);
                    for (std::size_t m = 0; m < d; ++m)
                        out.lee_theta_star[k] += s.g.inv(i, j) * s.phi(m, j) * out.f(i, m, k);
                }
                out.lee_omega[k] += s.xi[i] * s.xi[j] * out.f(i, j, k);
            }
    }
    return out;
}

bool is_cosymplectic(const FundamentalTensor& f) { return f.f.is_zero(); }

SasakiLikeVerdict is_sasaki_like(const AlmostContactBMetricStructure& s,
                                 const ConnectionCoefficients& conn) {
    const std::size_t d = s.dim();
    const DenseTensor nabla_phi = covariant_derivative(s.phi, conn);

    SasakiLikeVerdict verdict;
    verdict.sasaki_like = true;
    for (std::size_t i = 0; i < d && verdict.sasaki_like; ++i)
        for (std::size_t j = 0; j < d && verdict.sasaki_like; ++j)
            for (std::size_t a = 0; a < d && verdict.sasaki_like; ++a) {
                Rational rhs = (-s.g(i, j) + 2 * s.eta[i] * s.eta[j]) * s.xi[a];
                if (a == i) rhs -= s.eta[j];
                if (nabla_phi(i, a, j) != rhs) {
                    verdict.sasaki_like = false;
                    verdict.witness = {i, j, a};
                }
            }
    if (!verdict.sasaki_like) return verdict;

    // Consequence identities. These follow from the defining condition, so a
    // failure below cannot be blamed on the input; it means the engine itself
    // is inconsistent.
    verdict.consequences_checked = true;
    auto fail = [&](const std::string& which) { verdict.consequence_failures.push_back(which); };

    // nabla_x xi = -phi x
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t i = 0; i < d; ++i) {
            Rational sum(0);
            for (std::size_t m = 0; m < d; ++m) sum += conn(a, i, m) * s.xi[m];
            if (sum != -s.phi(a, i)) { fail("nabla_xi"); a = d; break; }
        }
    // (nabla_x eta)(y) = -g(x, phi y)
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Rational lhs(0), rhs(0);
            for (std::size_t a = 0; a < d; ++a) {
                lhs -= conn(a, i, j) * s.eta[a];
                rhs -= s.g(i, a) * s.phi(a, j);
            }
            if (lhs != rhs) { fail("nabla_eta"); i = d; break; }
        }

    const CurvatureData curv = curvature(s.algebra, s.g, conn);

    // R(x,y) xi = eta(y) x - eta(x) y
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                Rational lhs(0);
                for (std::size_t k = 0; k < d; ++k) lhs += curv.riemann(a, i, j, k) * s.xi[k];
                Rational rhs(0);
                if (a == i) rhs += s.eta[j];
                if (a == j) rhs -= s.eta[i];
                if (lhs != rhs) { fail("r_xy_xi"); a = d; i = d; break; }
            }
    // R(xi, y) z = g(y,z) xi - eta(z) y
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Rational lhs(0);
                for (std::size_t i = 0; i < d; ++i) lhs += s.xi[i] * curv.riemann(a, i, j, k);
                Rational rhs = s.g(j, k) * s.xi[a];
                if (a == j) rhs -= s.eta[k];
                if (lhs != rhs) { fail("r_xi_yz"); a = d; j = d; break; }
            }

    // ricci(x, xi) = 2n eta(x) and ricci(xi, xi) = 2n
    const Rational two_n(2 * s.n());
    DenseTensor ricci(d, {Variance::Lower, Variance::Lower});
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
            Rational sum(0);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t m = 0; m < d; ++m) sum += s.g.inv(i, m) * curv.riemann_cov(i, j, k, m);
            ricci(j, k) = sum;
        }
    for (std::size_t i = 0; i < d; ++i) {
        Rational sum(0);
        for (std::size_t k = 0; k < d; ++k) sum += ricci(i, k) * s.xi[k];
        if (sum != two_n * s.eta[i]) { fail("ricci_xi"); break; }
    }
    {
        Rational sum(0);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t k = 0; k < d; ++k) sum += ricci(i, k) * s.xi[i] * s.xi[k];
        if (sum != two_n) fail("ricci_xi_xi");
    }
    return verdict;
}

}  // namespace acbm
