#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "nadyn/fixtures.hpp"
#include "nadyn/root.hpp"

using namespace nadyn;

namespace {
const Rat kTol = default_root_tol();
}

TEST_CASE("golden ratio bracket") {
    RootCertificate r = leading_root(fixtures::golden_matrix(), kTol);
    CHECK(!r.exact);
    CHECK(r.width() <= kTol);
    // The bracket straddles the root of x^2 - x - 1.
    auto f = [](const Rat& x) { return Rat(x * x - x - 1); };
    CHECK(f(r.lo) <= 0);
    CHECK(f(r.hi) >= 0);
    CHECK(std::abs(entropy_log(r) - 0.4812118250596035) < 1e-12);
}

TEST_CASE("sqrt(3) bracket for the 6x6 fixture") {
    RootCertificate r = leading_root(fixtures::tame_matrix(), kTol);
    CHECK(!r.exact);
    CHECK(r.width() <= kTol);
    CHECK(Rat(r.lo * r.lo) <= 3);
    CHECK(Rat(r.hi * r.hi) >= 3);
    CHECK(std::abs(entropy_log(r) - std::log(std::sqrt(3.0))) < 1e-12);
}

TEST_CASE("exact integer roots") {
    // Permutation matrix: leading root exactly 1, entropy exactly 0.
    RootCertificate r = leading_root(fixtures::swap_matrix(), kTol);
    CHECK(r.exact);
    CHECK(r.lo == 1);
    CHECK(entropy_log(r) == 0.0);

    RootCertificate two = leading_root(IntMatrix({{2}}), kTol);
    CHECK(two.exact);
    CHECK(two.lo == 2);

    // The 12x12 fixture has leading root exactly 3.
    RootCertificate three = leading_root(fixtures::wild_matrix(), kTol);
    CHECK(three.exact);
    CHECK(three.lo == 3);
    CHECK(std::abs(entropy_log(three) - std::log(3.0)) < 1e-15);
}

TEST_CASE("nilpotent matrices have leading root 0") {
    RootCertificate r = leading_root(IntMatrix({{0, 1}, {0, 0}}), kTol);
    CHECK(r.exact);
    CHECK(r.lo == 0);
    CHECK(entropy_log(r) == 0.0);
}

TEST_CASE("det-form entry point") {
    // det(I - tA) = 1 - t - t^2 recovers the golden ratio.
    RootCertificate r = leading_root(IntPoly{1, -1, -1}, kTol);
    CHECK(std::abs(r.decimal - 1.618033988749895) < 1e-9);
}

TEST_CASE("tolerance is honoured") {
    Rat coarse(1, 1000);
    RootCertificate r = leading_root(fixtures::golden_matrix(), coarse);
    CHECK(r.width() <= coarse);
    CHECK(r.width() > kTol);  // coarse run really is coarse
}
