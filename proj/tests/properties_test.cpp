#include <string>

#include "doctest.h"
#include "property_suites.hpp"

using namespace acbm;
using namespace acbm::testsupport;

TEST_CASE("signature is a congruence invariant") {
    std::string why;
    CHECK_MESSAGE(signature_congruence_suite(120, 0x5157a11au, &why), why);
}

TEST_CASE("scalar traces and lee forms survive a change of basis") {
    std::string why;
    CHECK_MESSAGE(basis_change_suite(110, 0xbead5eedu, &why), why);
}

TEST_CASE("descriptions round trip through text") {
    std::string why;
    CHECK_MESSAGE(roundtrip_suite(150, 0x0ddba11u, &why), why);
}

TEST_CASE("solve_affine solutions verify against their systems") {
    std::mt19937_64 rng(0xfeedface);
    std::uniform_int_distribution<std::size_t> dims(1, 5);
    for (int it = 0; it < 120; ++it) {
        const std::size_t rows = dims(rng), cols = dims(rng);
        RatMatrix a(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) a(i, j) = random_rational(rng);
        RatVector b(rows);
        for (std::size_t i = 0; i < rows; ++i) b[i] = random_rational(rng);

        const AffineSolutionSpace sol = solve_affine(a, b);
        if (sol.consistent) {
            CHECK(a * sol.particular == b);
            for (const RatVector& n : sol.nullspace)
                CHECK(a * n == RatVector(rows, Rational(0)));
        } else {
            // Inconsistency must be genuine: retrying with b = 0 always works.
            CHECK(solve_affine(a, RatVector(rows, Rational(0))).consistent);
        }
    }
}
