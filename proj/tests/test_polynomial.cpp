#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nadyn/polynomial.hpp"

using namespace nadyn;

TEST_CASE("arithmetic and normalization") {
    IntPoly a{1, 2, 3};
    IntPoly b{0, 1};
    CHECK((a + b) == IntPoly{1, 3, 3});
    CHECK((a - a).is_zero());
    CHECK((a * b) == IntPoly{0, 1, 2, 3});
    CHECK(IntPoly{1, 0, 0}.degree() == 0);  // trailing zeros trimmed
    CHECK(IntPoly{}.degree() == -1);
    CHECK(IntPoly::monomial(3) == IntPoly{0, 0, 0, 1});
    CHECK(a.eval(Int(2)) == 17);
    CHECK(a.reversed() == IntPoly{3, 2, 1});
}

TEST_CASE("division with remainder over Q") {
    RatPoly n{Rat(-1), Rat(0), Rat(1)};  // t^2 - 1
    RatPoly d{Rat(-1), Rat(1)};          // t - 1
    auto [q, r] = divmod(n, d);
    CHECK(q == RatPoly{Rat(1), Rat(1)});
    CHECK(r.is_zero());
    auto [q2, r2] = divmod(RatPoly{Rat(1), Rat(0), Rat(1)}, d);
    CHECK(r2 == RatPoly{Rat(2)});
    CHECK(q2 == RatPoly{Rat(1), Rat(1)});
}

TEST_CASE("gcd and divisibility") {
    IntPoly a{-1, 0, 1};   // (t-1)(t+1)
    IntPoly b{1, -2, 1};   // (t-1)^2
    RatPoly g = gcd(to_rat(a), to_rat(b));
    CHECK(primitive_from_rat(g) == IntPoly{-1, 1});
    CHECK(divides(IntPoly{-1, 1}, a));
    CHECK(!divides(IntPoly{1, 1}, b));
    CHECK(exact_div(a, IntPoly{-1, 1}) == IntPoly{1, 1});
    CHECK_THROWS_AS(exact_div(b, IntPoly{1, 1}), BadInput);
}

TEST_CASE("content and primitive part") {
    CHECK(content(IntPoly{2, 4, 6}) == 2);
    CHECK(content(IntPoly{-2, -4}) == -2);  // sign follows the leading coefficient
    CHECK(primitive_from_rat(RatPoly{Rat(1, 2), Rat(3, 2)}) == IntPoly{1, 3});
}

TEST_CASE("display form") {
    CHECK(poly_str(IntPoly{1, -1, -1}) == "1-t-t^2");
    CHECK(poly_str(IntPoly{1, 0, -3}) == "1-3t^2");
    CHECK(poly_str(IntPoly{1, 1}) == "1+t");
    CHECK(poly_str(IntPoly{}) == "0");
    CHECK(poly_str(IntPoly{0, 2}, "z") == "2z");
}

TEST_CASE("derivative") {
    CHECK(IntPoly{5, 3, 1}.derivative() == IntPoly{3, 2});
    CHECK(IntPoly{7}.derivative().is_zero());
}
