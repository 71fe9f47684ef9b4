#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "conescale/conescale.h"

namespace {

struct Cone {
    cs_cone* c = nullptr;

    explicit Cone(const char* json) { REQUIRE(cs_cone_from_json(json, &c) == CS_OK); }
    ~Cone() { cs_cone_free(c); }
};

std::string take(char* s) {
    std::string out = s ? s : "";
    cs_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("cone lifecycle and oracles") {
    Cone cone("{\"kind\":\"orthant\",\"dim\":2}");
    CHECK(cs_cone_dim(cone.c) == 2);

    const double inside[2] = {1.0, 2.0};
    const double outside[2] = {1.0, -1.0};
    int r = 0;
    CHECK(cs_cone_contains(cone.c, inside, 2, &r) == CS_OK);
    CHECK(r == 1);
    CHECK(cs_cone_contains(cone.c, outside, 2, &r) == CS_OK);
    CHECK(r == 0);
    CHECK(cs_cone_interior_contains(cone.c, inside, 2, &r) == CS_OK);
    CHECK(r == 1);

    const double x[2] = {1.0, 1.0}, y[2] = {2.0, 3.0};
    CHECK(cs_cone_leq(cone.c, x, y, 2, &r) == CS_OK);
    CHECK(r == 1);
    CHECK(cs_cone_strictly_less(cone.c, x, y, 2, &r) == CS_OK);
    CHECK(r == 1);

    const double c2[2] = {2.0, 2.0}, e2[2] = {1.0, 1.0};
    double delta = 0.0;
    CHECK(cs_cone_find_scale(cone.c, c2, e2, 2, &delta) == CS_OK);
    CHECK(delta == 0.25);

    char* report = nullptr;
    CHECK(cs_cone_validate(cone.c, 42, &report) == CS_OK);
    std::string text = take(report);
    CHECK(text.find("\"all_passed\":true") != std::string::npos);
}

TEST_CASE("error codes and last error messages") {
    Cone cone("{\"kind\":\"orthant\",\"dim\":2}");
    const double x3[3] = {1.0, 2.0, 3.0};
    int r = 0;
    CHECK(cs_cone_contains(cone.c, x3, 3, &r) == CS_ERROR_DIMENSION);
    CHECK(std::strlen(cs_last_error()) > 0);

    cs_cone* bad = nullptr;
    CHECK(cs_cone_from_json("{\"kind\":\"cube\"}", &bad) == CS_ERROR_PARSE);
    CHECK(cs_cone_from_json(nullptr, &bad) == CS_ERROR_INVALID_ARGUMENT);

    const double boundary_e[2] = {1.0, 0.0}, y[2] = {1.0, 1.0};
    cs_scalarization_result sr;
    CHECK(cs_xi(cone.c, boundary_e, y, 2, &sr) == CS_ERROR_NOT_INTERIOR);

    CHECK(std::string(cs_status_name(CS_ERROR_NOT_INTERIOR)) == "not_interior_error");
}

TEST_CASE("scalarization through the C surface") {
    Cone cone("{\"kind\":\"orthant\",\"dim\":2}");
    const double e[2] = {1.0, 1.0}, y[2] = {3.0, 5.0};
    cs_scalarization_result r;
    REQUIRE(cs_xi(cone.c, e, y, 2, &r) == CS_OK);
    CHECK(r.value == 5.0);
    CHECK(r.iterations == 0);

    const double x[2] = {3.0, -5.0};
    double n = 0.0;
    REQUIRE(cs_norm(cone.c, e, x, 2, &n) == CS_OK);
    CHECK(n == 5.0);

    const double e2[2] = {1.0, 2.0};
    double lower = 0.0, upper = 0.0;
    REQUIRE(cs_equivalence_constants(cone.c, e, e2, 2, &lower, &upper) == CS_OK);
    CHECK(lower == 0.5);
    CHECK(upper == 1.0);
}

TEST_CASE("order check through the C surface") {
    Cone cone("{\"kind\":\"orthant\",\"dim\":2}");
    const double x[2] = {1.0, 1.0}, y[2] = {2.0, 3.0};
    int membership = 0, scalarized = 0;
    REQUIRE(cs_order_check(cone.c, x, y, 2, 16, 42, &membership, &scalarized) == CS_OK);
    CHECK(membership == 1);
    CHECK(scalarized == 1);

    const double u[2] = {1.0, 0.0}, v[2] = {0.0, 1.0};
    REQUIRE(cs_order_check(cone.c, u, v, 2, 16, 42, &membership, &scalarized) == CS_OK);
    CHECK(membership == 0);
    CHECK(scalarized == 0);
}

TEST_CASE("metric validation through the C surface") {
    const char* space =
        "{\"cone\":{\"kind\":\"orthant\",\"dim\":2},\"n_points\":2,"
        "\"d\":[[[0,0],[1,2]],[[1,2],[0,0]]]}";
    char* report = nullptr;
    REQUIRE(cs_metric_validate(space, 100, 42, &report) == CS_OK);
    CHECK(take(report).find("\"all_passed\":true") != std::string::npos);

    CHECK(cs_metric_validate("{}", 100, 42, &report) == CS_ERROR_PARSE);
}

TEST_CASE("solvers through the C surface") {
    const char* good =
        "{\"f\":{\"F\":[[0.5]],\"b\":[1]},\"gauges\":{\"kind\":\"linear\",\"k\":0.6},"
        "\"x0\":[0],\"weakly_compatible\":true}";
    char* report = nullptr;
    REQUIRE(cs_solve(good, &report) == CS_OK);
    std::string text = take(report);
    CHECK(text.find("\"converged\":true") != std::string::npos);
    CHECK(text.find("\"r0_bound\":2.5") != std::string::npos);

    const char* diverging =
        "{\"f\":{\"F\":[[1]],\"b\":[1]},\"gauges\":{\"kind\":\"linear\",\"k\":0.5},"
        "\"x0\":[0],\"max_iter\":200}";
    report = nullptr;
    CHECK(cs_solve(diverging, &report) == CS_ERROR_NONCONVERGENCE);
    REQUIRE(report != nullptr);  // the report is still produced
    CHECK(take(report).find("\"converged\":false") != std::string::npos);

    const char* tvs =
        "{\"cone\":{\"kind\":\"orthant\",\"dim\":2},\"e\":[1,1],"
        "\"f\":{\"F\":[[0.5,0],[0,0.5]]},"
        "\"cone_gauges\":{\"kind\":\"scale\",\"k\":0.6,\"epsilon\":0.2},\"x0\":[8,8]}";
    report = nullptr;
    REQUIRE(cs_solve_tvs(tvs, &report) == CS_OK);
    CHECK(take(report).find("\"check_disagreements\":0") != std::string::npos);
}

TEST_CASE("selftest determinism through the C surface") {
    char* a = nullptr;
    char* b = nullptr;
    int failures_a = -1, failures_b = -1;
    REQUIRE(cs_selftest("cones", 42, &failures_a, &a) == CS_OK);
    REQUIRE(cs_selftest("cones", 42, &failures_b, &b) == CS_OK);
    std::string sa = take(a), sb = take(b);
    CHECK(failures_a == 0);
    CHECK(failures_a == failures_b);
    CHECK(sa == sb);
    CHECK(sa.find("\"total_failures\":0") != std::string::npos);

    CHECK(cs_selftest("bogus", 42, nullptr, &a) == CS_ERROR_DOMAIN);
}
