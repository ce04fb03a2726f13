#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nadyn/matrix.hpp"

using namespace nadyn;

TEST_CASE("construction and products") {
    IntMatrix a({{1, 1}, {1, 0}});
    CHECK(a.size() == 2);
    IntMatrix a2 = a * a;
    CHECK(a2.at(0, 0) == 2);
    CHECK(a2.at(1, 1) == 1);
    CHECK(a.pow(0) == IntMatrix::identity(2));
    CHECK(a.pow(3) == a * a * a);
    CHECK_THROWS_AS(IntMatrix({{1, -1}, {0, 1}}), BadInput);
    CHECK_THROWS_AS(IntMatrix({{1, 1}, {1}}), BadInput);
}

TEST_CASE("characteristic polynomial, exact") {
    // x^2 - x - 1 for the Fibonacci matrix.
    CHECK(char_poly(IntMatrix({{1, 1}, {1, 0}})) == IntPoly{-1, -1, 1});
    // Companion-style check on a 3x3.
    IntMatrix m({{2, 1, 0}, {0, 2, 0}, {0, 0, 3}});
    // (x-2)^2 (x-3) = x^3 - 7x^2 + 16x - 12
    CHECK(char_poly(m) == IntPoly{-12, 16, -7, 1});
    CHECK(det_I_minus_tA(IntMatrix({{1, 1}, {1, 0}})) == IntPoly{1, -1, -1});
}

TEST_CASE("trace powers count closed walks") {
    // Lucas numbers for the Fibonacci matrix.
    std::vector<Int> tr = trace_powers(IntMatrix({{1, 1}, {1, 0}}), 5);
    CHECK(tr == std::vector<Int>{1, 3, 4, 7, 11});
}

TEST_CASE("edge subdivision") {
    // A single vertex with a double loop, each loop cut into a 2-path:
    // 1 original vertex + 2 midpoints.
    IntMatrix g = augment(IntMatrix({{2}}), 2);
    REQUIRE(g.size() == 3);
    CHECK(g.is_zero_one());
    // Spectral law: lambda(augment)^n = lambda(original); here the
    // characteristic polynomial must vanish at sqrt(2) -> x^2 = 2 divides.
    IntPoly cp = char_poly(g);
    CHECK(cp.eval(Int(0)) == 0);  // the midpoints force a zero root or sign structure
    // Direct check: det(xI - G) has x^2 - 2 as the nontrivial factor.
    // char poly of the 3-cycle-like graph: x^3 - 2x = x (x^2 - 2).
    CHECK(cp == IntPoly{0, -2, 0, 1});

    CHECK(augment(IntMatrix({{0, 1}, {1, 0}}), 1) == IntMatrix({{0, 1}, {1, 0}}));
    CHECK_THROWS_AS(augment(IntMatrix({{2}}), 1), NotSimpleAtN1);
    // n = 3 on a 2x2: every edge becomes a 3-path.
    IntMatrix h = augment(IntMatrix({{1, 1}, {1, 0}}), 3);
    CHECK(h.size() == 2 + 3 * 2);  // 3 edges, 2 new vertices each
    CHECK(h.is_zero_one());
    // Closed 3-walks in the subdivision are the original closed 1-walks,
    // once per intermediate starting point.
    CHECK(trace_powers(h, 3).back() == 3 * trace_powers(IntMatrix({{1, 1}, {1, 0}}), 1)[0]);
}

TEST_CASE("irreducibility") {
    CHECK(irreducible(IntMatrix({{1, 1}, {1, 0}})));
    CHECK(irreducible(IntMatrix({{0, 1}, {1, 0}})));
    CHECK(!irreducible(IntMatrix({{1, 1}, {0, 1}})));
    CHECK(!irreducible(IntMatrix({{1, 0}, {0, 1}})));
}

TEST_CASE("positivity") {
    CHECK(IntMatrix({{1, 2}, {3, 1}}).is_positive());
    CHECK(!IntMatrix({{1, 0}, {3, 1}}).is_positive());
}
