#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "test_support.hpp"

using namespace acbm;
using namespace acbm::testsupport;

namespace {

bool axiom_failed(const StructureVerdict& v, const std::string& name) {
    for (const AxiomCheck& a : v.axioms)
        if (a.name == name) return !a.passed;
    return false;
}

}  // namespace

TEST_CASE("the example structure validates, on every axiom") {
    const StructureVerdict v = validate_structure(sasaki5(Rational(1) / 2, -3));
    CHECK(v.valid);
    CHECK(v.axioms.size() == 10);
    for (const AxiomCheck& a : v.axioms) {
        CAPTURE(a.name);
        CHECK(a.passed);
        CHECK(a.witness.empty());
    }
}

TEST_CASE("abelian and modified structures validate too") {
    CHECK(validate_structure(abelian5()).valid);
    CHECK(validate_structure(detuned5()).valid);
    CHECK(validate_structure(scaled5()).valid);
}

TEST_CASE("a corrupted phi is caught with a witness") {
    ManifoldDescription d = example_sasaki5(0, 0);
    d.phi(3, 1) = 0;
    d.phi(4, 1) = 1;  // phi(e1) = e4 instead of e3: phi^2 e1 is now -e2, not -e1
    const StructureVerdict v = validate_structure(build_structure(d));
    CHECK_FALSE(v.valid);
    CHECK(axiom_failed(v, "phi_squared"));

    bool witnessed = false;
    for (const AxiomCheck& a : v.axioms)
        if (a.name == "phi_squared" && !a.passed) witnessed = !a.witness.empty();
    CHECK(witnessed);
}

TEST_CASE("a flipped metric fails exactly where the sign matters") {
    ManifoldDescription d = example_sasaki5(0, 0);
    for (std::size_t i = 0; i < 5; ++i) d.metric(i, i) = -d.metric(i, i);
    const StructureVerdict v = validate_structure(build_structure(d));
    CHECK_FALSE(v.valid);
    CHECK(axiom_failed(v, "signature"));
    // The eta(x)eta(y) term of the compatibility does not change sign with g,
    // so the flip breaks it at (xi, xi).
    CHECK(axiom_failed(v, "b_metric"));
    CHECK(axiom_failed(v, "g_xi_xi_one"));
    // The purely phi-side axioms do not involve g at all.
    CHECK_FALSE(axiom_failed(v, "phi_squared"));
    CHECK_FALSE(axiom_failed(v, "phi_xi_zero"));
}

TEST_CASE("associated metric of the example") {
    const AlmostContactBMetricStructure s = sasaki5(Rational(1) / 2, -3);
    const MetricTensor gt = associated_metric(s);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
            const bool contact_pair = (i == 1 && j == 3) || (i == 3 && j == 1) ||
                                      (i == 2 && j == 4) || (i == 4 && j == 2);
            const Rational expected = (i == 0 && j == 0) ? 1 : contact_pair ? -1 : 0;
            CHECK(gt(i, j) == expected);
        }
    CHECK(gt.sig() == MatrixSignature{3, 2, 0});
}

TEST_CASE("fundamental tensor of the example") {
    const AlmostContactBMetricStructure s = sasaki5(Rational(1) / 2, -3);
    const ConnectionCoefficients conn = levi_civita(s.algebra, s.g);
    const FundamentalTensor f = fundamental_tensor(s, conn);

    SUBCASE("matches the closed form of the defining condition") {
        // F(x,y,z) = -g(x,y) eta(z) - eta(y) g(x,z) + 2 eta(x) eta(y) eta(z)
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j)
                for (std::size_t k = 0; k < 5; ++k) {
                    const Rational expected = -s.g(i, j) * s.eta[k] - s.eta[j] * s.g(i, k) +
                                              2 * s.eta[i] * s.eta[j] * s.eta[k];
                    CHECK(f.f(i, j, k) == expected);
                }
        CHECK(f.f(1, 1, 0) == -1);
    }

    SUBCASE("lee forms") {
        // theta = -2n eta = -4 eta, theta* = 0, omega = 0.
        CHECK(f.lee_theta == RatVector{Rational(-4), Rational(0), Rational(0), Rational(0), Rational(0)});
        CHECK(f.lee_theta_star == RatVector(5, Rational(0)));
        CHECK(f.lee_omega == RatVector(5, Rational(0)));
    }

    SUBCASE("not cosymplectic") { CHECK_FALSE(is_cosymplectic(f)); }
}

TEST_CASE("the abelian structure is cosymplectic and not sasaki-like") {
    const AlmostContactBMetricStructure s = abelian5();
    const ConnectionCoefficients conn = levi_civita(s.algebra, s.g);
    const FundamentalTensor f = fundamental_tensor(s, conn);
    CHECK(f.f.is_zero());
    CHECK(is_cosymplectic(f));
    CHECK(f.lee_theta == RatVector(5, Rational(0)));

    const SasakiLikeVerdict v = is_sasaki_like(s, conn);
    CHECK_FALSE(v.sasaki_like);
    CHECK_FALSE(v.witness.empty());
}

TEST_CASE("sasaki-like verdicts") {
    SUBCASE("the example family, any parameters") {
        for (const auto& [p, q] : std::vector<std::pair<Rational, Rational>>{
                 {Rational(0), Rational(0)}, {Rational(1) / 2, Rational(-3)}, {Rational(-7), Rational(9)}}) {
            const AlmostContactBMetricStructure s = sasaki5(p, q);
            const SasakiLikeVerdict v = is_sasaki_like(s, levi_civita(s.algebra, s.g));
            CHECK(v.sasaki_like);
            CHECK(v.consequences_checked);
            CHECK(v.consequence_failures.empty());
        }
    }

    SUBCASE("scaling the contact distribution keeps the condition") {
        const AlmostContactBMetricStructure s = scaled5();
        const SasakiLikeVerdict v = is_sasaki_like(s, levi_civita(s.algebra, s.g));
        CHECK(v.sasaki_like);
        CHECK(v.consequence_failures.empty());
    }

    SUBCASE("detuning one bracket breaks it") {
        const AlmostContactBMetricStructure s = detuned5();
        const ConnectionCoefficients conn = levi_civita(s.algebra, s.g);
        const SasakiLikeVerdict v = is_sasaki_like(s, conn);
        CHECK_FALSE(v.sasaki_like);
        CHECK_FALSE(v.witness.empty());
        // And it is not cosymplectic either: F(e1,e1,e0) = -3/2 here.
        const FundamentalTensor f = fundamental_tensor(s, conn);
        CHECK(f.f(1, 1, 0) == Rational(-3) / 2);
        CHECK_FALSE(is_cosymplectic(f));
    }
}

TEST_CASE("sasaki-like and cosymplectic exclude each other on valid structures") {
    // A structure with F = 0 has F(x,x,xi) = 0, but the defining condition
    // forces F(x,x,xi) = -g(x,x) for x in ker eta, and g restricted to
    // ker eta is nondegenerate.
    for (const auto& s : {sasaki5(0, 0), abelian5(), detuned5(), scaled5()}) {
        const ConnectionCoefficients conn = levi_civita(s.algebra, s.g);
        const bool sl = is_sasaki_like(s, conn).sasaki_like;
        const bool cs = is_cosymplectic(fundamental_tensor(s, conn));
        CHECK_FALSE((sl && cs));
    }
}

TEST_CASE("structure helpers") {
    const AlmostContactBMetricStructure s = sasaki5(1, 1);
    RatVector v(5, Rational(0));
    v[0] = Rational(3) / 2;
    v[2] = 7;
    CHECK(s.eta_of(v) == Rational(3) / 2);

    const DenseTensor p2 = s.phi_squared();
    // phi^2 = -id + eta (x) xi.
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
            const Rational expected = (i == j ? Rational(-1) : Rational(0)) + s.xi[i] * s.eta[j];
            CHECK(p2(i, j) == expected);
        }
}
