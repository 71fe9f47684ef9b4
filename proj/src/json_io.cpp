#include "conescale/json_io.hpp"

#include <json.hpp>

namespace conescale {

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON");
    return j;
}

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed,
                         const char* what) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* k : allowed)
            if (it.key() == k) known = true;
        if (!known) throw ParseError(std::string(what) + ": unknown key '" + it.key() + "'");
    }
}

const json& need(const json& j, const char* key, const char* what) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string(what) + ": missing key '" + key + "'");
    return *it;
}

double as_number(const json& j, const char* what) {
    if (!j.is_number()) throw ParseError(std::string(what) + ": expected a number");
    return j.get<double>();
}

Vec as_vec(const json& j, const char* what) {
    if (!j.is_array() || j.empty())
        throw ParseError(std::string(what) + ": expected a nonempty array of numbers");
    Vec v;
    v.reserve(j.size());
    for (const auto& x : j) v.push_back(as_number(x, what));
    require_finite(what, v);
    return v;
}

Matrix as_matrix(const json& j, const char* what) {
    if (!j.is_array() || j.empty())
        throw ParseError(std::string(what) + ": expected a nonempty array of rows");
    std::vector<Vec> rows;
    for (const auto& r : j) rows.push_back(as_vec(r, what));
    for (const auto& r : rows)
        if (r.size() != rows[0].size()) throw ParseError(std::string(what) + ": ragged matrix");
    return Matrix::from_rows(rows);
}

SolidCone cone_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("cone: expected an object");
    std::string kind = need(j, "kind", "cone").get<std::string>();
    double tol = SolidCone::kDefaultTol;
    if (j.contains("tol_membership")) tol = as_number(j["tol_membership"], "cone.tol_membership");
    if (kind == "orthant" || kind == "lorentz") {
        reject_unknown_keys(j, {"kind", "dim", "tol_membership"}, "cone");
        auto dim = need(j, "dim", "cone");
        if (!dim.is_number_unsigned() || dim.get<std::uint64_t>() == 0)
            throw ParseError("cone.dim: expected a positive integer");
        std::size_t m = dim.get<std::size_t>();
        return kind == "orthant" ? SolidCone::orthant(m, tol) : SolidCone::lorentz(m, tol);
    }
    if (kind == "polyhedral") {
        reject_unknown_keys(j, {"kind", "normals", "interior_witness", "tol_membership"}, "cone");
        const json& nj = need(j, "normals", "cone");
        if (!nj.is_array() || nj.empty()) throw ParseError("cone.normals: expected a nonempty array");
        std::vector<Vec> normals;
        for (const auto& row : nj) normals.push_back(as_vec(row, "cone.normals"));
        Vec witness = as_vec(need(j, "interior_witness", "cone"), "cone.interior_witness");
        return SolidCone::polyhedral(std::move(normals), std::move(witness), tol);
    }
    throw ParseError("cone.kind: expected orthant, lorentz or polyhedral");
}

GaugeClass class_from_string(const std::string& s) {
    if (s == "phi") return GaugeClass::Phi;
    if (s == "phi1") return GaugeClass::Phi1;
    if (s == "phi2") return GaugeClass::Phi2;
    throw ParseError("gauge.class: expected phi, phi1 or phi2");
}

GaugeFunction gauge_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("gauge: expected an object");
    std::string kind = need(j, "kind", "gauge").get<std::string>();
    std::optional<GaugeClass> declared;
    if (j.contains("class")) declared = class_from_string(j["class"].get<std::string>());
    if (kind == "linear") {
        reject_unknown_keys(j, {"kind", "k", "class"}, "gauge");
        GaugeFunction g = GaugeFunction::linear(as_number(need(j, "k", "gauge"), "gauge.k"));
        if (declared && *declared != g.declared_class()) {
            double k = as_number(j["k"], "gauge.k");
            return GaugeFunction::custom([k](double t) { return k * t; }, *declared,
                                         "linear(" + std::to_string(k) + ")");
        }
        return g;
    }
    if (kind == "saturating") {
        reject_unknown_keys(j, {"kind", "class"}, "gauge");
        GaugeFunction g = GaugeFunction::saturating();
        if (declared && *declared != g.declared_class())
            return GaugeFunction::custom([](double t) { return t / (1.0 + t); }, *declared,
                                         "saturating");
        return g;
    }
    throw ParseError("gauge.kind: expected linear or saturating");
}

ConeGauge cone_gauge_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("cone gauge: expected an object");
    std::string kind = need(j, "kind", "cone gauge").get<std::string>();
    std::optional<double> eps;
    if (j.contains("epsilon")) eps = as_number(j["epsilon"], "cone gauge.epsilon");
    if (kind == "scale") {
        reject_unknown_keys(j, {"kind", "k", "epsilon"}, "cone gauge");
        return ConeGauge::scaling(as_number(need(j, "k", "cone gauge"), "cone gauge.k"), eps);
    }
    if (kind == "operator") {
        reject_unknown_keys(j, {"kind", "matrix", "epsilon"}, "cone gauge");
        return ConeGauge::linear_operator(as_matrix(need(j, "matrix", "cone gauge"), "cone gauge.matrix"),
                                          eps);
    }
    throw ParseError("cone gauge.kind: expected scale or operator");
}

template <class Parser>
auto five_of(const json& j, const char* what, Parser parse) {
    std::vector<decltype(parse(j))> out;
    if (j.is_object()) {
        for (int i = 0; i < 5; ++i) out.push_back(parse(j));
    } else if (j.is_array() && j.size() == 5) {
        for (const auto& g : j) out.push_back(parse(g));
    } else {
        throw ParseError(std::string(what) + ": expected one gauge object or an array of five");
    }
    return out;
}

RealMetric metric_from_kind(const std::string& kind) {
    if (kind == "euclidean")
        return [](const Vec& a, const Vec& b) { return norm2(sub(a, b)); };
    if (kind == "chebyshev")
        return [](const Vec& a, const Vec& b) { return norm_inf(sub(a, b)); };
    if (kind == "manhattan")
        return [](const Vec& a, const Vec& b) {
            double s = 0.0;
            for (std::size_t i = 0; i < a.size(); ++i) s += std::fabs(a[i] - b[i]);
            return s;
        };
    throw ParseError("metric.kind: expected euclidean, chebyshev or manhattan");
}

AffineMap affine_from_json(const json& j, std::size_t dim, const char* what) {
    if (!j.is_object()) throw ParseError(std::string(what) + ": expected an object");
    reject_unknown_keys(j, {"F", "b"}, what);
    AffineMap m;
    m.f = as_matrix(need(j, "F", what), what);
    m.b = j.contains("b") ? as_vec(j["b"], what) : zeros(m.f.rows);
    if (!m.f.square() || m.f.rows != dim || m.b.size() != dim)
        throw ParseError(std::string(what) + ": shape does not match x0 dimension");
    return m;
}

}  // namespace

Vec parse_vec(const std::string& text) { return as_vec(parse_text(text), "vector"); }

SolidCone parse_cone(const std::string& text) { return cone_from_json(parse_text(text)); }

GaugeFunction parse_gauge(const std::string& text) { return gauge_from_json(parse_text(text)); }

ConeGauge parse_cone_gauge(const std::string& text) {
    return cone_gauge_from_json(parse_text(text));
}

FiniteConeMetric parse_finite_metric(const std::string& text) {
    json j = parse_text(text);
    if (!j.is_object()) throw ParseError("finite metric: expected an object");
    reject_unknown_keys(j, {"cone", "n_points", "d"}, "finite metric");
    FiniteConeMetric space{cone_from_json(need(j, "cone", "finite metric")), {}};
    const json& np = need(j, "n_points", "finite metric");
    if (!np.is_number_unsigned() || np.get<std::uint64_t>() == 0)
        throw ParseError("finite metric.n_points: expected a positive integer");
    std::size_t n = np.get<std::size_t>();
    const json& dj = need(j, "d", "finite metric");
    if (!dj.is_array() || dj.size() != n)
        throw ParseError("finite metric.d: expected an n_points x n_points matrix of vectors");
    for (const auto& row : dj) {
        if (!row.is_array() || row.size() != n)
            throw ParseError("finite metric.d: expected an n_points x n_points matrix of vectors");
        std::vector<Vec> r;
        for (const auto& cell : row) {
            Vec v = as_vec(cell, "finite metric.d entry");
            require_dim("finite metric.d entry", v, space.cone.dim());
            r.push_back(std::move(v));
        }
        space.d.push_back(std::move(r));
    }
    return space;
}

SolveConfig parse_solve_config(const std::string& text) {
    json j = parse_text(text);
    if (!j.is_object()) throw ParseError("solve config: expected an object");
    reject_unknown_keys(
        j, {"metric", "f", "g", "gauges", "x0", "tol_conv", "max_iter", "weakly_compatible"},
        "solve config");
    SolveConfig cfg;
    cfg.x0 = as_vec(need(j, "x0", "solve config"), "solve config.x0");
    const std::size_t n = cfg.x0.size();
    if (j.contains("metric")) {
        reject_unknown_keys(j["metric"], {"kind"}, "metric");
        cfg.metric_kind = need(j["metric"], "kind", "metric").get<std::string>();
    }
    metric_from_kind(cfg.metric_kind);  // validate the name early
    cfg.f = affine_from_json(need(j, "f", "solve config"), n, "solve config.f");
    cfg.g = j.contains("g") ? affine_from_json(j["g"], n, "solve config.g")
                            : AffineMap{Matrix::identity(n), zeros(n)};
    cfg.gauges = five_of(need(j, "gauges", "solve config"), "solve config.gauges",
                         [](const json& g) { return gauge_from_json(g); });
    if (j.contains("tol_conv")) cfg.tol_conv = as_number(j["tol_conv"], "solve config.tol_conv");
    if (j.contains("max_iter")) {
        if (!j["max_iter"].is_number_integer())
            throw ParseError("solve config.max_iter: expected an integer");
        cfg.max_iter = j["max_iter"].get<int>();
    }
    if (j.contains("weakly_compatible")) {
        if (!j["weakly_compatible"].is_boolean())
            throw ParseError("solve config.weakly_compatible: expected a boolean");
        cfg.weakly_compatible = j["weakly_compatible"].get<bool>();
    }
    return cfg;
}

JungckProblem build_problem(const SolveConfig& cfg) {
    JungckProblem p;
    p.metric = metric_from_kind(cfg.metric_kind);
    p.f = cfg.f;
    p.g = cfg.g;
    auto g_inv = inverse(cfg.g.f);
    if (!g_inv) throw DomainError("solve config: G must be invertible for the preimage selector");
    Matrix gi = *g_inv;
    Vec gc = cfg.g.b;
    p.g_preimage = [gi, gc](const Vec& y) { return matvec(gi, sub(y, gc)); };
    for (int i = 0; i < 5; ++i) p.gauges[static_cast<std::size_t>(i)] = cfg.gauges[static_cast<std::size_t>(i)];
    p.x0 = cfg.x0;
    p.tol_conv = cfg.tol_conv;
    p.max_iter = cfg.max_iter;
    p.weakly_compatible = cfg.weakly_compatible;
    return p;
}

TvsSolveConfig parse_tvs_solve_config(const std::string& text) {
    json j = parse_text(text);
    if (!j.is_object()) throw ParseError("tvs solve config: expected an object");
    reject_unknown_keys(j,
                        {"cone", "e", "cone_metric", "f", "g", "cone_gauges", "x0", "tol_conv",
                         "max_iter", "weakly_compatible"},
                        "tvs solve config");
    TvsSolveConfig cfg(cone_from_json(need(j, "cone", "tvs solve config")));
    cfg.e = as_vec(need(j, "e", "tvs solve config"), "tvs solve config.e");
    cfg.x0 = as_vec(need(j, "x0", "tvs solve config"), "tvs solve config.x0");
    const std::size_t n = cfg.x0.size();
    if (j.contains("cone_metric")) {
        reject_unknown_keys(j["cone_metric"], {"kind"}, "cone_metric");
        cfg.cone_metric_kind = need(j["cone_metric"], "kind", "cone_metric").get<std::string>();
    }
    if (cfg.cone_metric_kind != "coordinatewise")
        throw ParseError("cone_metric.kind: only coordinatewise is built in");
    if (cfg.cone.dim() != n)
        throw ParseError("tvs solve config: coordinatewise metric needs cone dim == x0 dim");
    cfg.f = affine_from_json(need(j, "f", "tvs solve config"), n, "tvs solve config.f");
    cfg.g = j.contains("g") ? affine_from_json(j["g"], n, "tvs solve config.g")
                            : AffineMap{Matrix::identity(n), zeros(n)};
    cfg.cone_gauges = five_of(need(j, "cone_gauges", "tvs solve config"), "tvs solve config.cone_gauges",
                              [](const json& g) { return cone_gauge_from_json(g); });
    if (j.contains("tol_conv")) cfg.tol_conv = as_number(j["tol_conv"], "tvs solve config.tol_conv");
    if (j.contains("max_iter")) {
        if (!j["max_iter"].is_number_integer())
            throw ParseError("tvs solve config.max_iter: expected an integer");
        cfg.max_iter = j["max_iter"].get<int>();
    }
    if (j.contains("weakly_compatible")) {
        if (!j["weakly_compatible"].is_boolean())
            throw ParseError("tvs solve config.weakly_compatible: expected a boolean");
        cfg.weakly_compatible = j["weakly_compatible"].get<bool>();
    }
    return cfg;
}

TvsProblem build_tvs_problem(const TvsSolveConfig& cfg) {
    TvsProblem p{ConeMetricSpace{cfg.cone, cfg.x0.size(),
                                 [](const Vec& a, const Vec& b) {
                                     Vec d(a.size());
                                     for (std::size_t i = 0; i < a.size(); ++i)
                                         d[i] = std::fabs(a[i] - b[i]);
                                     return d;
                                 }},
                 cfg.f,
                 cfg.g,
                 {},
                 {cfg.cone_gauges[0], cfg.cone_gauges[1], cfg.cone_gauges[2], cfg.cone_gauges[3],
                  cfg.cone_gauges[4]},
                 cfg.e,
                 cfg.x0,
                 cfg.tol_conv,
                 cfg.max_iter,
                 cfg.weakly_compatible};
    auto g_inv = inverse(cfg.g.f);
    if (!g_inv)
        throw DomainError("tvs solve config: G must be invertible for the preimage selector");
    Matrix gi = *g_inv;
    Vec gc = cfg.g.b;
    p.g_preimage = [gi, gc](const Vec& y) { return matvec(gi, sub(y, gc)); };
    return p;
}

JsonValue to_json(const Vec& v) {
    JsonValue a = JsonValue::array();
    for (double x : v) a.push(x);
    return a;
}

JsonValue to_json(const ScalarizationResult& r) {
    JsonValue o = JsonValue::object();
    o.set("value", r.value);
    o.set("bracket_lo", r.bracket_lo);
    o.set("bracket_hi", r.bracket_hi);
    o.set("iterations", r.iterations);
    return o;
}

JsonValue to_json(const ValidationReport& r) {
    JsonValue checks = JsonValue::array();
    for (const auto& c : r.checks) {
        JsonValue e = JsonValue::object();
        e.set("name", c.name);
        e.set("passed", c.passed);
        e.set("detail", c.detail);
        checks.push(std::move(e));
    }
    JsonValue notes = JsonValue::array();
    for (const auto& n : r.notes) notes.push(n);
    JsonValue o = JsonValue::object();
    o.set("checks", std::move(checks));
    o.set("all_passed", r.all_passed());
    o.set("notes", std::move(notes));
    return o;
}

JsonValue to_json(const OrderCheckResult& r, int samples) {
    JsonValue o = JsonValue::object();
    o.set("leq_membership", r.leq_membership);
    o.set("leq_scalarized", r.leq_scalarized);
    o.set("samples", samples);
    if (r.sampling_gap)
        o.set("note", "scalarized conjunction held on the sampled directions only");
    return o;
}

JsonValue to_json(const SolveReport& r, bool tvs) {
    JsonValue o = JsonValue::object();
    o.set("converged", r.converged);
    o.set("iterations", r.iterations);
    o.set("limit", to_json(r.limit));
    o.set("coincidence_arg", to_json(r.coincidence_arg));
    o.set("coincidence_residual", r.coincidence_residual);
    o.set("d0", r.d0);
    o.set("r0_bound", r.r0_bound);
    o.set("observed_orbit_diameter", r.observed_orbit_diameter);
    o.set("trajectory_base_index", r.trajectory_base_index);
    JsonValue gaps = JsonValue::array();
    for (double g : r.trajectory_gaps) gaps.push(g);
    o.set("trajectory_gaps", std::move(gaps));
    o.set("contraction_violation_count", r.contraction_violation_count);
    JsonValue viols = JsonValue::array();
    for (const auto& v : r.contraction_violations) {
        JsonValue e = JsonValue::object();
        e.set("i", v.i);
        e.set("j", v.j);
        e.set("lhs", v.lhs);
        e.set("rhs", v.rhs);
        viols.push(std::move(e));
    }
    o.set("contraction_violations", std::move(viols));
    if (tvs) {
        o.set("tvs_violation_count", r.tvs_violation_count);
        JsonValue tv = JsonValue::array();
        for (const auto& v : r.tvs_violations) {
            JsonValue e = JsonValue::object();
            e.set("i", v.i);
            e.set("j", v.j);
            e.set("lhs", v.lhs);
            e.set("rhs", v.rhs);
            tv.push(std::move(e));
        }
        o.set("tvs_violations", std::move(tv));
        o.set("check_disagreements", r.check_disagreements);
    }
    if (r.fixed_point_residual) o.set("fixed_point_residual", *r.fixed_point_residual);
    if (r.commutation_residual) o.set("commutation_residual", *r.commutation_residual);
    JsonValue notes = JsonValue::array();
    for (const auto& n : r.notes) notes.push(n);
    o.set("notes", std::move(notes));
    return o;
}

}  // namespace conescale
