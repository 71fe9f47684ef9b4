#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conescale/json_io.hpp"
#include "conescale/selftest.hpp"

using namespace conescale;

TEST_CASE("cone parsing") {
    SolidCone orthant = parse_cone(R"({"kind":"orthant","dim":2})");
    CHECK(orthant.kind() == ConeKind::Orthant);
    CHECK(orthant.dim() == 2);

    SolidCone lorentz = parse_cone(R"({"kind":"lorentz","dim":3})");
    CHECK(lorentz.kind() == ConeKind::Lorentz);

    SolidCone poly = parse_cone(
        R"({"kind":"polyhedral","normals":[[1,0],[0,1]],"interior_witness":[1,1]})");
    CHECK(poly.kind() == ConeKind::Polyhedral);
    CHECK(poly.contains({1.0, 1.0}));

    SolidCone loose = parse_cone(R"({"kind":"orthant","dim":2,"tol_membership":1e-6})");
    CHECK(loose.tol_membership() == 1e-6);

    CHECK_THROWS_AS(parse_cone("not json"), ParseError);
    CHECK_THROWS_AS(parse_cone(R"({"kind":"cube","dim":2})"), ParseError);
    CHECK_THROWS_AS(parse_cone(R"({"kind":"orthant","dim":0})"), ParseError);
    CHECK_THROWS_AS(parse_cone(R"({"kind":"orthant","dim":2,"extra":1})"), ParseError);
    CHECK_THROWS_AS(parse_cone(R"({"kind":"polyhedral","normals":[[1,0]]})"), ParseError);
}

TEST_CASE("gauge parsing") {
    GaugeFunction lin = parse_gauge(R"({"kind":"linear","k":0.5})");
    CHECK(lin(4.0) == 2.0);
    CHECK(lin.declared_class() == GaugeClass::Phi1);

    GaugeFunction sat = parse_gauge(R"({"kind":"saturating"})");
    CHECK(sat(1.0) == 0.5);

    GaugeFunction weak = parse_gauge(R"({"kind":"linear","k":0.5,"class":"phi"})");
    CHECK(weak.declared_class() == GaugeClass::Phi);

    CHECK_THROWS_AS(parse_gauge(R"({"kind":"linear"})"), ParseError);
    CHECK_THROWS_AS(parse_gauge(R"({"kind":"linear","k":1.5})"), DomainError);
    CHECK_THROWS_AS(parse_gauge(R"({"kind":"exp"})"), ParseError);
}

TEST_CASE("cone gauge parsing") {
    ConeGauge sc = parse_cone_gauge(R"({"kind":"scale","k":0.5,"epsilon":0.5})");
    CHECK(sc({2.0, 4.0}) == Vec{1.0, 2.0});
    CHECK(sc.epsilon() == 0.5);

    ConeGauge op = parse_cone_gauge(R"({"kind":"operator","matrix":[[0.5,0],[0,0.25]],"epsilon":0.5})");
    CHECK(op({4.0, 4.0}) == Vec{2.0, 1.0});

    ConeGauge plain = parse_cone_gauge(R"({"kind":"scale","k":0.5})");
    CHECK_FALSE(plain.epsilon().has_value());

    CHECK_THROWS_AS(parse_cone_gauge(R"({"kind":"operator","matrix":[[1,0]],"epsilon":0.5})"),
                    DimensionError);
}

TEST_CASE("finite metric parsing") {
    const char* text = R"({
        "cone": {"kind": "orthant", "dim": 2},
        "n_points": 2,
        "d": [[[0,0],[1,2]],[[1,2],[0,0]]]
    })";
    FiniteConeMetric space = parse_finite_metric(text);
    CHECK(space.size() == 2);
    CHECK(space.d[0][1] == Vec{1.0, 2.0});
    CHECK(validate_cone_metric(space, 50, 42).all_passed());

    CHECK_THROWS_AS(parse_finite_metric(R"({"cone":{"kind":"orthant","dim":2},"n_points":2,"d":[[[0,0]]]})"),
                    ParseError);
}

TEST_CASE("solve config parsing and building") {
    const char* text = R"({
        "metric": {"kind": "euclidean"},
        "f": {"F": [[0.5]], "b": [1]},
        "gauges": {"kind": "linear", "k": 0.6},
        "x0": [0],
        "weakly_compatible": true
    })";
    SolveConfig cfg = parse_solve_config(text);
    CHECK(cfg.gauges.size() == 5);
    CHECK(cfg.weakly_compatible);
    CHECK(cfg.tol_conv == 1e-10);
    CHECK(cfg.max_iter == 10000);

    JungckProblem p = build_problem(cfg);
    CHECK(p.g({7.0}) == Vec{7.0});  // default g is the identity
    CHECK(p.f({0.0}) == Vec{1.0});
    CHECK(p.g_preimage({3.0}) == Vec{3.0});

    // five explicit gauges
    const char* five = R"({
        "f": {"F": [[0.5]], "b": [1]},
        "gauges": [{"kind":"linear","k":0.1},{"kind":"linear","k":0.2},{"kind":"linear","k":0.3},
                   {"kind":"linear","k":0.4},{"kind":"linear","k":0.5}],
        "x0": [0]
    })";
    CHECK(parse_solve_config(five).gauges[4](1.0) == 0.5);

    CHECK_THROWS_AS(parse_solve_config(R"({"f":{"F":[[1]]},"gauges":{"kind":"linear","k":0.5}})"),
                    ParseError);  // x0 missing
    CHECK_THROWS_AS(parse_solve_config(R"({
        "f": {"F": [[1, 0]]}, "gauges": {"kind":"linear","k":0.5}, "x0": [0]
    })"),
                    ParseError);  // non-square F

    // singular g has no usable preimage selector
    SolveConfig bad = parse_solve_config(R"({
        "f": {"F": [[0.5]], "b": [1]},
        "g": {"F": [[0]]},
        "gauges": {"kind":"linear","k":0.5},
        "x0": [0]
    })");
    CHECK_THROWS_AS(build_problem(bad), DomainError);
}

TEST_CASE("tvs config parsing") {
    const char* text = R"({
        "cone": {"kind": "orthant", "dim": 2},
        "e": [1, 1],
        "f": {"F": [[0.5, 0], [0, 0.5]]},
        "cone_gauges": {"kind": "scale", "k": 0.6, "epsilon": 0.2},
        "x0": [8, 8]
    })";
    TvsProblem p = build_tvs_problem(parse_tvs_solve_config(text));
    CHECK(p.space.point_dim == 2);
    CHECK(p.space.d({0.0, 0.0}, {1.0, -2.0}) == Vec{1.0, 2.0});
    CHECK(p.g_preimage({5.0, 6.0}) == Vec{5.0, 6.0});

    CHECK_THROWS_AS(parse_tvs_solve_config(R"({
        "cone": {"kind": "orthant", "dim": 3},
        "e": [1, 1, 1],
        "f": {"F": [[0.5, 0], [0, 0.5]]},
        "cone_gauges": {"kind": "scale", "k": 0.6},
        "x0": [8, 8]
    })"),
                    ParseError);  // cone dim mismatch with x0
}

TEST_CASE("deterministic double formatting") {
    CHECK(JsonValue::format_double(5.0) == "5.0");
    CHECK(JsonValue::format_double(0.5) == "0.5");
    CHECK(JsonValue::format_double(-2.0) == "-2.0");
    // 17 significant digits round-trip
    for (double v : {0.1 + 0.2, 1e300, 3.0 / 7.0, 1e-12})
        CHECK(std::stod(JsonValue::format_double(v)) == v);
    CHECK(JsonValue::format_double(std::nan("")) == "null");
}

TEST_CASE("json writer escaping and ordering") {
    JsonValue o = JsonValue::object();
    o.set("b", 1);
    o.set("a", JsonValue("line\nbreak\ttab \"quote\""));
    JsonValue arr = JsonValue::array();
    arr.push(true);
    arr.push(nullptr);
    o.set("list", std::move(arr));
    CHECK(o.dump() == R"({"b":1,"a":"line\nbreak\ttab \"quote\"","list":[true,null]})");
}

TEST_CASE("report serialization shape") {
    ScalarizationResult r{5.0, 4.99, 5.01, 12};
    CHECK(to_json(r).dump() ==
          R"({"value":5.0,"bracket_lo":4.9900000000000002,"bracket_hi":5.0099999999999998,"iterations":12})");
}
