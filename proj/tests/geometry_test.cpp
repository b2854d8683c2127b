#include <vector>

#include "doctest.h"
#include "test_support.hpp"

#include "acbm/errors.hpp"

using namespace acbm;
using namespace acbm::testsupport;

namespace {

DenseTensor outer_eta_eta(const AlmostContactBMetricStructure& s) {
    DenseTensor t(s.dim(), {Variance::Lower, Variance::Lower});
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j) t(i, j) = s.eta[i] * s.eta[j];
    return t;
}

}  // namespace

TEST_CASE("jacobi identity verdicts") {
    CHECK(check_jacobi(sasaki5(Rational(1) / 2, -3).algebra).holds);
    CHECK(check_jacobi(abelian5().algebra).holds);
    CHECK(check_jacobi(detuned5().algebra).holds);

    // [e0,e1] = e2, [e0,e2] = e0 breaks Jacobi: the cyclic sum over (0,1,2)
    // is [[e0,e1],e2] + [[e1,e2],e0] + [[e2,e0],e1] = [e2,e2] + 0 - [e0,e1]
    // = -e2.
    DenseTensor c(3, {Variance::Upper, Variance::Lower, Variance::Lower});
    c(2, 0, 1) = 1;
    c(2, 1, 0) = -1;
    c(0, 0, 2) = 1;
    c(0, 2, 0) = -1;
    const LieAlgebra bad(3, std::move(c));
    const JacobiReport rep = check_jacobi(bad);
    CHECK_FALSE(rep.holds);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0] == std::array<std::size_t, 3>{0, 1, 2});
}

TEST_CASE("bracket evaluation on the example family") {
    const AlmostContactBMetricStructure s = sasaki5(2, -3);
    RatVector e0(5, Rational(0)), e1(5, Rational(0));
    e0[0] = 1;
    e1[1] = 1;
    const RatVector b = s.algebra.bracket(e0, e1);
    // [e0,e1] = p e2 + e3 + q e4 with p=2, q=-3.
    CHECK(b == RatVector{Rational(0), Rational(0), Rational(2), Rational(1), Rational(-3)});
    const RatVector zero(5, Rational(0));
    CHECK(s.algebra.bracket(e1, e1) == zero);

    // Brackets of two contact-distribution fields vanish in this family.
    RatVector e2(5, Rational(0));
    e2[2] = 1;
    CHECK(s.algebra.bracket(e1, e2) == zero);
}

TEST_CASE("levi-civita table matches the hand-computed one") {
    for (const auto& [p, q] : std::vector<std::pair<Rational, Rational>>{
             {Rational(1) / 2, Rational(-3)}, {Rational(2), Rational(5)}, {Rational(0), Rational(0)}}) {
        const AlmostContactBMetricStructure s = sasaki5(p, q);
        CHECK(levi_civita(s.algebra, s.g) == expected_sasaki5_connection(p, q));
    }
}

TEST_CASE("curvature of the example family") {
    const AlmostContactBMetricStructure s = sasaki5(Rational(1) / 2, -3);
    const ConnectionCoefficients conn = levi_civita(s.algebra, s.g);
    const CurvatureData curv = full_curvature(s, conn);

    SUBCASE("covariant curvature equals the golden tensor") {
        CHECK(curv.riemann_cov == expected_sasaki5_riemann_cov());
    }

    SUBCASE("riemann and riemann_cov are metric-consistent") {
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j)
                for (std::size_t k = 0; k < 5; ++k)
                    for (std::size_t l = 0; l < 5; ++l) {
                        Rational lowered(0);
                        for (std::size_t m = 0; m < 5; ++m)
                            lowered += s.g(m, l) * curv.riemann(m, i, j, k);
                        CHECK(curv.riemann_cov(i, j, k, l) == lowered);
                    }
    }

    SUBCASE("ricci tensor is 4 eta (x) eta") {
        CHECK(curv.ricci == 4 * outer_eta_eta(s));
    }

    SUBCASE("ricci operator is 4 xi (x) eta") {
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j)
                CHECK(curv.ricci_operator(i, j) == (i == 0 && j == 0 ? Rational(4) : Rational(0)));
    }

    SUBCASE("scalar traces") {
        CHECK(curv.tau == 4);
        CHECK(curv.tau_star == 0);
        CHECK(curv.tau_tilde == 4);
        CHECK(scalar_curvature(s.algebra, s.g) == curv.tau);
        // tau~ really comes from the associated metric's own chain.
        CHECK(scalar_curvature(s.algebra, associated_metric(s)) == curv.tau_tilde);
    }

    SUBCASE("curvature does not depend on p and q") {
        const AlmostContactBMetricStructure other = sasaki5(7, Rational(-2) / 9);
        const CurvatureData curv2 =
            full_curvature(other, levi_civita(other.algebra, other.g));
        CHECK(curv2.riemann_cov == curv.riemann_cov);
        CHECK(curv2.ricci == curv.ricci);
    }
}

TEST_CASE("covariant derivatives of the structure tensors") {
    const AlmostContactBMetricStructure s = sasaki5(Rational(1) / 2, -3);
    const ConnectionCoefficients conn = levi_civita(s.algebra, s.g);

    SUBCASE("metric is parallel") {
        const DenseTensor g = tensor_from_matrix(s.g.matrix(), Variance::Lower, Variance::Lower);
        CHECK(covariant_derivative(g, conn).is_zero());
    }

    SUBCASE("eta and eta (x) eta pick up the expected components") {
        DenseTensor eta(5, {Variance::Lower});
        eta(0) = 1;
        const DenseTensor d_eta = covariant_derivative(eta, conn);
        CHECK(d_eta(1, 3) == 1);
        CHECK(d_eta(3, 1) == 1);
        CHECK(d_eta(0, 0) == 0);

        const DenseTensor d_ee = covariant_derivative(outer_eta_eta(s), conn);
        CHECK(d_ee(1, 3, 0) == 1);
        CHECK(d_ee(1, 0, 3) == 1);
        CHECK(d_ee(2, 4, 0) == 1);
        CHECK(d_ee(0, 0, 0) == 0);
    }

    SUBCASE("phi is not parallel") {
        const DenseTensor d_phi = covariant_derivative(s.phi, conn);
        CHECK(d_phi(1, 0, 1) == -1);
        CHECK_FALSE(d_phi.is_zero());
    }
}

TEST_CASE("lie derivative of g along xi") {
    const AlmostContactBMetricStructure s = sasaki5(Rational(1) / 2, -3);
    const ConnectionCoefficients conn = levi_civita(s.algebra, s.g);
    const DenseTensor lie = lie_derivative_metric(s.xi, s.g, conn);

    DenseTensor expected(5, {Variance::Lower, Variance::Lower});
    expected(1, 3) = expected(3, 1) = expected(2, 4) = expected(4, 2) = 2;
    CHECK(lie == expected);

    const MetricTensor gt = associated_metric(s);
    const DenseTensor gt_t = tensor_from_matrix(gt.matrix(), Variance::Lower, Variance::Lower);
    CHECK(lie == Rational(-2) * gt_t + Rational(2) * outer_eta_eta(s));
}

TEST_CASE("connection and curvature axioms across the corpus") {
    std::string why;
    for (const auto& [name, s] :
         std::vector<std::pair<const char*, AlmostContactBMetricStructure>>{
             {"sasaki5", sasaki5(Rational(1) / 2, -3)},
             {"abelian5", abelian5()},
             {"detuned5", detuned5()},
             {"scaled5", scaled5()}}) {
        CAPTURE(name);
        CHECK_MESSAGE(connection_and_curvature_axioms(s.algebra, s.g, &why), why);
    }
}

TEST_CASE("dimension mismatches are rejected") {
    const AlmostContactBMetricStructure s5 = sasaki5(0, 0);
    const ConnectionCoefficients conn3(3);
    const DenseTensor t(5, {Variance::Lower, Variance::Lower});
    CHECK_THROWS_AS(covariant_derivative(t, conn3), DimensionMismatchError);
    CHECK_THROWS_AS(lie_derivative_metric(RatVector(3, Rational(0)), s5.g, conn3),
                    DimensionMismatchError);
}
