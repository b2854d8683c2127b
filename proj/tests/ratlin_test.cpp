#include "acbm/errors.hpp"
#include "acbm/linalg.hpp"
#include "doctest.h"

using namespace acbm;

namespace {

RatMatrix mat(std::size_t rows, std::size_t cols, std::initializer_list<int> entries) {
    RatMatrix m(rows, cols);
    auto it = entries.begin();
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = *it++;
    return m;
}

}  // namespace

TEST_CASE("rationals stay in lowest terms with positive denominator") {
    const Rational half = Rational(2) / Rational(4);
    CHECK(half == Rational(1) / Rational(2));
    CHECK(numerator(half) == 1);
    CHECK(denominator(half) == 2);

    const Rational neg = Rational(3) / Rational(-6);
    CHECK(numerator(neg) == -1);
    CHECK(denominator(neg) == 2);

    CHECK(to_string(neg) == "-1/2");
    CHECK(to_string(Rational(-4) / Rational(2)) == "-2");
    CHECK(to_string(Rational(0)) == "0");
}

TEST_CASE("parse_rational reads integers and fractions") {
    CHECK(parse_rational("0") == Rational(0));
    CHECK(parse_rational("12") == Rational(12));
    CHECK(parse_rational("-3") == Rational(-3));
    CHECK(parse_rational("+7") == Rational(7));
    CHECK(parse_rational("1/2") == Rational(1) / 2);
    CHECK(parse_rational("-1/2") == Rational(-1) / 2);
    CHECK(parse_rational("5/-7") == Rational(-5) / 7);
    CHECK(parse_rational("6/4") == Rational(3) / 2);
}

TEST_CASE("parse_rational rejects everything else") {
    CHECK(!parse_rational(""));
    CHECK(!parse_rational("1/0"));
    CHECK(!parse_rational("1/"));
    CHECK(!parse_rational("/2"));
    CHECK(!parse_rational("1.5"));
    CHECK(!parse_rational(" 1"));
    CHECK(!parse_rational("1 "));
    CHECK(!parse_rational("abc"));
    CHECK(!parse_rational("1/2/3"));
    CHECK(!parse_rational("--1"));
    CHECK(!parse_rational("-"));
}

TEST_CASE("matrix product against identity and by hand") {
    const RatMatrix a = mat(2, 2, {1, 2, 3, 4});
    CHECK(a * RatMatrix::identity(2) == a);
    CHECK(RatMatrix::identity(2) * a == a);

    const RatMatrix b = mat(2, 2, {0, 1, 1, 0});
    CHECK(a * b == mat(2, 2, {2, 1, 4, 3}));

    const RatVector v{Rational(5), Rational(-1)};
    const RatVector av = a * v;
    CHECK(av[0] == 3);
    CHECK(av[1] == 11);

    CHECK_THROWS_AS(mat(2, 2, {1, 0, 0, 1}) * RatVector{Rational(1)}, DimensionMismatchError);
}

TEST_CASE("transpose and symmetry") {
    const RatMatrix a = mat(2, 3, {1, 2, 3, 4, 5, 6});
    CHECK(a.transposed() == mat(3, 2, {1, 4, 2, 5, 3, 6}));
    CHECK(!mat(2, 2, {1, 2, 3, 4}).is_symmetric());
    CHECK(mat(2, 2, {1, 2, 2, 4}).is_symmetric());
}

TEST_CASE("signature of diagonal and hyperbolic forms") {
    CHECK(signature(mat(5, 5, {1, 0, 0, 0, 0,  //
                               0, 1, 0, 0, 0,  //
                               0, 0, 1, 0, 0,  //
                               0, 0, 0, -1, 0,  //
                               0, 0, 0, 0, -1})) == MatrixSignature{3, 2, 0});
    // hyperbolic plane: no nonzero diagonal entry at all
    CHECK(signature(mat(2, 2, {0, 1, 1, 0})) == MatrixSignature{1, 1, 0});
    CHECK(signature(RatMatrix(3, 3)) == MatrixSignature{0, 0, 3});
    CHECK(signature(mat(1, 1, {4})) == MatrixSignature{1, 0, 0});
    // needs a diagonal swap first: leading entry is zero but a later one is not
    CHECK(signature(mat(2, 2, {0, 0, 0, -2})) == MatrixSignature{0, 1, 1});
}

TEST_CASE("signature is a congruence invariant, fixed instance") {
    const RatMatrix m = mat(3, 3, {2, 1, 0, 1, -3, 1, 0, 1, 0});
    const RatMatrix s = mat(3, 3, {1, 2, 0, 0, 1, 5, 1, 0, 3});  // invertible
    CHECK(signature(s.transposed() * m * s) == signature(m));
}

TEST_CASE("invert_symmetric round-trips and rejects bad input") {
    const RatMatrix m = mat(2, 2, {1, 2, 2, 1});
    const RatMatrix inv = invert_symmetric(m);
    CHECK(m * inv == RatMatrix::identity(2));
    CHECK(inv(0, 0) == Rational(-1) / 3);
    CHECK(inv(0, 1) == Rational(2) / 3);

    CHECK_THROWS_AS(invert_symmetric(mat(2, 2, {1, 1, 1, 1})), SingularMetricError);
    CHECK_THROWS_AS(invert_symmetric(mat(2, 2, {1, 2, 3, 4})), ValidationError);
}

TEST_CASE("solve_affine: unique solution") {
    const RatMatrix a = mat(2, 2, {1, 1, 1, -1});
    const AffineSolutionSpace sol = solve_affine(a, {Rational(3), Rational(1)});
    REQUIRE(sol.consistent);
    CHECK(sol.particular == RatVector{Rational(2), Rational(1)});
    CHECK(sol.dimension() == 0);
}

TEST_CASE("solve_affine: underdetermined system reports its nullspace") {
    const RatMatrix a = mat(1, 3, {1, 1, 1});
    const RatVector b{Rational(6)};
    const AffineSolutionSpace sol = solve_affine(a, b);
    REQUIRE(sol.consistent);
    CHECK(sol.dimension() == 2);
    CHECK(a * sol.particular == b);
    for (const RatVector& nv : sol.nullspace)
        CHECK(a * nv == RatVector{Rational(0)});
}

TEST_CASE("solve_affine: inconsistent and overdetermined cases") {
    CHECK(!solve_affine(mat(2, 1, {1, 1}), {Rational(1), Rational(2)}).consistent);

    const AffineSolutionSpace sol = solve_affine(mat(2, 1, {1, 2}), {Rational(3), Rational(6)});
    REQUIRE(sol.consistent);
    CHECK(sol.particular == RatVector{Rational(3)});
    CHECK(sol.dimension() == 0);
}

TEST_CASE("solve_affine: zero matrix leaves every column free") {
    const AffineSolutionSpace sol = solve_affine(RatMatrix(2, 4), RatVector(2, Rational(0)));
    REQUIRE(sol.consistent);
    CHECK(sol.dimension() == 4);
    CHECK(!solve_affine(RatMatrix(2, 4), {Rational(0), Rational(1)}).consistent);
}

TEST_CASE("solve_affine keeps fractions exact") {
    // x + y/2 = 1/3, x/5 - y = 7  ->  solved exactly, no rounding anywhere
    RatMatrix a(2, 2);
    a(0, 0) = 1;
    a(0, 1) = Rational(1) / 2;
    a(1, 0) = Rational(1) / 5;
    a(1, 1) = -1;
    const AffineSolutionSpace sol = solve_affine(a, {Rational(1) / 3, Rational(7)});
    REQUIRE(sol.consistent);
    CHECK(a * sol.particular == RatVector{Rational(1) / 3, Rational(7)});
}
