#include "acbm/geometry.hpp"

#include "acbm/errors.hpp"

namespace acbm {

ConnectionCoefficients levi_civita(const LieAlgebra& l, const MetricTensor& g) {
    const std::size_t d = l.dim();
    if (g.dim() != d) throw DimensionMismatchError("levi_civita: metric dimension != algebra dimension");
    const Rational half(1, 2);

    // k_low(i,j,k) = g(nabla_{e_i} e_j, e_k)
    DenseTensor k_low(d, {Variance::Lower, Variance::Lower, Variance::Lower});
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Rational s(0);
                for (std::size_t m = 0; m < d; ++m)
                    s += l.c(m, i, j) * g(m, k) - l.c(m, i, k) * g(m, j) - l.c(m, j, k) * g(m, i);
                k_low(i, j, k) = half * s;
            }

    ConnectionCoefficients conn(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t a = 0; a < d; ++a) {
                Rational s(0);
                for (std::size_t k = 0; k < d; ++k) s += g.inv(a, k) * k_low(i, j, k);
                conn(a, i, j) = s;
            }
    return conn;
}

CurvatureData curvature(const LieAlgebra& l, const MetricTensor& g, const ConnectionCoefficients& conn) {
    const std::size_t d = l.dim();
    if (g.dim() != d || conn.dim() != d)
        throw DimensionMismatchError("curvature: inconsistent dimensions");

    CurvatureData curv;
    curv.riemann = DenseTensor(d, {Variance::Upper, Variance::Lower, Variance::Lower, Variance::Lower});
    curv.riemann_cov =
        DenseTensor(d, {Variance::Lower, Variance::Lower, Variance::Lower, Variance::Lower});

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t a = 0; a < d; ++a) {
                    Rational s(0);
                    for (std::size_t m = 0; m < d; ++m)
                        s += conn(m, j, k) * conn(a, i, m) - conn(m, i, k) * conn(a, j, m) -
                             l.c(m, i, j) * conn(a, m, k);
                    curv.riemann(a, i, j, k) = s;
                }

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t m = 0; m < d; ++m) {
                    Rational s(0);
                    for (std::size_t a = 0; a < d; ++a) s += curv.riemann(a, i, j, k) * g(a, m);
                    curv.riemann_cov(i, j, k, m) = s;
                }
    return curv;
}

Rational scalar_curvature(const LieAlgebra& l, const MetricTensor& g) {
    const ConnectionCoefficients conn = levi_civita(l, g);
    const CurvatureData curv = curvature(l, g, conn);
    const std::size_t d = l.dim();
    Rational tau(0);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
            Rational ricci_jk(0);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t m = 0; m < d; ++m)
                    ricci_jk += g.inv(i, m) * curv.riemann_cov(i, j, k, m);
            tau += g.inv(j, k) * ricci_jk;
        }
    return tau;
}

void ricci_data(const LieAlgebra& l, const MetricTensor& g, const DenseTensor& phi,
                const MetricTensor& g_tilde, CurvatureData& curv) {
    const std::size_t d = l.dim();
    if (phi.dim() != d || phi.order() != 2 || g_tilde.dim() != d)
        throw DimensionMismatchError("ricci_data: inconsistent dimensions");

    curv.ricci = DenseTensor(d, {Variance::Lower, Variance::Lower});
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
            Rational s(0);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t m = 0; m < d; ++m) s += g.inv(i, m) * curv.riemann_cov(i, j, k, m);
            curv.ricci(j, k) = s;
        }

    curv.ricci_operator = DenseTensor(d, {Variance::Upper, Variance::Lower});
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t j = 0; j < d; ++j) {
            Rational s(0);
            for (std::size_t k = 0; k < d; ++k) s += g.inv(a, k) * curv.ricci(k, j);
            curv.ricci_operator(a, j) = s;
        }

    curv.tau = 0;
    curv.tau_star = 0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            curv.tau += g.inv(i, j) * curv.ricci(i, j);
            if (g.inv(i, j) == 0) continue;
            for (std::size_t k = 0; k < d; ++k)
                curv.tau_star += g.inv(i, j) * curv.ricci(i, k) * phi(k, j);
        }

    curv.tau_tilde = scalar_curvature(l, g_tilde);
}

DenseTensor covariant_derivative(const DenseTensor& t, const ConnectionCoefficients& conn) {
    const std::size_t d = t.dim();
    if (conn.dim() != d) throw DimensionMismatchError("covariant_derivative: inconsistent dimensions");
    const std::size_t r = t.order();

    std::vector<Variance> out_var;
    out_var.reserve(r + 1);
    out_var.push_back(Variance::Lower);
    for (Variance v : t.variance()) out_var.push_back(v);
    DenseTensor out(d, out_var);

    // Iterate all multi-indices (a_0 .. a_{r-1}) of the input tensor.
    std::vector<std::size_t> idx(r, 0);
    std::vector<std::size_t> probe(r, 0);
    bool done = (d == 0);
    while (!done) {
        for (std::size_t i = 0; i < d; ++i) {
            Rational s(0);
            for (std::size_t slot = 0; slot < r; ++slot) {
                probe = idx;
                if (t.variance()[slot] == Variance::Lower) {
                    for (std::size_t m = 0; m < d; ++m) {
                        probe[slot] = m;
                        s -= conn(m, i, idx[slot]) * t.at(probe);
                    }
                } else {
                    for (std::size_t m = 0; m < d; ++m) {
                        probe[slot] = m;
                        s += conn(idx[slot], i, m) * t.at(probe);
                    }
                }
            }
            std::vector<std::size_t> out_idx;
            out_idx.reserve(r + 1);
            out_idx.push_back(i);
            for (std::size_t v : idx) out_idx.push_back(v);
            out.at(out_idx) = s;
        }
        // next multi-index
        std::size_t slot = r;
        while (slot > 0) {
            --slot;
            if (++idx[slot] < d) break;
            idx[slot] = 0;
            if (slot == 0) done = true;
        }
        if (r == 0) done = true;
    }
    return out;
}

DenseTensor lie_derivative_metric(const RatVector& v, const MetricTensor& g,
                                  const ConnectionCoefficients& conn) {
    const std::size_t d = g.dim();
    if (v.size() != d || conn.dim() != d)
        throw DimensionMismatchError("lie_derivative_metric: inconsistent dimensions");
    DenseTensor out(d, {Variance::Lower, Variance::Lower});
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Rational s(0);
            for (std::size_t m = 0; m < d; ++m) {
                if (v[m] == 0) continue;
                for (std::size_t a = 0; a < d; ++a)
                    s += v[m] * (conn(a, i, m) * g(a, j) + conn(a, j, m) * g(i, a));
            }
            out(i, j) = s;
        }
    return out;
}

}  // namespace acbm
