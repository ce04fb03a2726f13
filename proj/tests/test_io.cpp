#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nadyn/fixtures.hpp"
#include "nadyn/io.hpp"

using namespace nadyn;

TEST_CASE("disk round trip") {
    Disk d = Disk::closed(Rat(3, 4), 2);
    Json j = disk_to_json(d);
    CHECK(j.at("center") == "3/4");
    CHECK(j.at("radius_exp") == "2");
    CHECK(disk_from_json(j) == d);
    // Open disks normalize on the way in.
    CHECK(disk_from_json(Json{{"center", "1"}, {"radius_exp", "2"}, {"kind", "open"}}) ==
          Disk::closed(Rat(1), 3));
    CHECK_THROWS_AS(disk_from_json(Json{{"center", "1"}}), BadInput);
    CHECK_THROWS_AS(disk_from_json(Json{{"center", "x"}, {"radius_exp", "1"}}), BadInput);
}

TEST_CASE("system round trip") {
    PiecewiseSystem sys = fixtures::golden_system();
    Json j = system_to_json(sys);
    PiecewiseSystem back = system_from_json(j);
    CHECK(back.ctx().p() == 2);
    REQUIRE(back.pieces().size() == 2);
    CHECK(back.pieces()[0].domain == sys.pieces()[0].domain);
    CHECK(back.pieces()[0].alpha == sys.pieces()[0].alpha);
    CHECK(back.pieces()[1].beta == sys.pieces()[1].beta);
    REQUIRE(back.sink().has_value());
    CHECK(*back.sink() == *sys.sink());
}

TEST_CASE("matrix round trip and bare-array form") {
    IntMatrix a = fixtures::tame_matrix();
    CHECK(matrix_from_json(matrix_to_json(a)) == a);
    CHECK(matrix_from_json(Json::parse("[[1,1],[1,0]]")) == fixtures::golden_matrix());
    CHECK_THROWS_AS(matrix_from_json(Json::parse("{\"n\":3,\"rows\":[[1]]}")), BadInput);
    CHECK_THROWS_AS(matrix_from_json(Json::parse("[[1,-2]]")), BadInput);
}

TEST_CASE("polynomial and zeta round trips") {
    IntPoly p{1, -1, -1};
    CHECK(poly_from_json(poly_to_json(p)) == p);
    Json jz = zeta_to_json(zeta_sft(fixtures::golden_matrix()));
    CHECK(jz.at("display") == "1/(1-t-t^2)");
    CHECK(zeta_from_json(jz) == zeta_sft(fixtures::golden_matrix()));
}

TEST_CASE("root certificate round trip keeps exact brackets") {
    RootCertificate r = leading_root(fixtures::golden_matrix(), default_root_tol());
    Json j = root_to_json(r);
    RootCertificate back = root_from_json(j);
    CHECK(back.lo == r.lo);
    CHECK(back.hi == r.hi);
    CHECK(back.exact == r.exact);
}

TEST_CASE("bundle serialization is self-consistent") {
    FieldContext ctx(2);
    RealizeOptions opt;
    opt.forced_M = 14;
    RealizationBundle b = realize(fixtures::golden_matrix(), 1, 1, ctx, opt);
    Json j = bundle_to_json(b);
    CHECK(j.at("glue").at("M") == 14);
    CHECK(matrix_from_json(j.at("matrix")) == b.matrix);
    CHECK(j.at("verification").at("pass") == true);
    // The serialized terms parse back to the computed polynomials.
    REQUIRE(j.at("map").at("terms").size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(poly_from_json(j.at("map").at("terms").at(i).at("num")) == b.expr.terms[i].num);
        CHECK(poly_from_json(j.at("map").at("terms").at(i).at("den")) == b.expr.terms[i].den);
    }
}

TEST_CASE("analysis report serialization") {
    Json j = analysis_to_json(analyze(fixtures::golden_system()));
    CHECK(matrix_from_json(j.at("adjacency")) == fixtures::golden_matrix());
    CHECK(j.at("zeta").at("display") == "1/(1-t-t^2)");
}
