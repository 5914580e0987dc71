#include "pipeline/pipeline.hpp"

#include <chrono>
#include <functional>

#include "logtangent/logtangent.hpp"
#include "polycore/format.hpp"

namespace logvec {

namespace {

constexpr const char* kVersion = "0.1.0";

using Clock = std::chrono::steady_clock;

/// Records wall time of each named stage under report["timings"].
class Stopwatch {
public:
  explicit Stopwatch(Json& sink) : sink_(sink) {}
  template <class F>
  auto run(const std::string& stage, F&& f) {
    auto start = Clock::now();
    if constexpr (std::is_void_v<decltype(f())>) {
      f();
      record(stage, start);
    } else {
      auto r = f();
      record(stage, start);
      return r;
    }
  }

private:
  void record(const std::string& stage, Clock::time_point start) {
    double s = std::chrono::duration<double>(Clock::now() - start).count();
    sink_[stage] = static_cast<double>(static_cast<long long>(s * 1e4)) / 1e4;
  }
  Json& sink_;
};

class CheckList {
public:
  void add(const std::string& name, bool pass, const std::string& detail = "") {
    items_.push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
    if (!pass) all_pass_ = false;
  }
  const Json& json() const { return items_; }
  bool all_pass() const { return all_pass_; }

private:
  Json items_ = Json::array();
  bool all_pass_ = true;
};

template <class K>
std::string text(const Poly<K>& p, const std::vector<std::string>& vars) {
  return to_string(lift_to_rational(p), vars);
}

template <class K>
std::string text(const K& c) {
  return lift(c).get_str();
}

std::string field_name(std::optional<std::uint32_t> prime) {
  return prime ? "GF(" + std::to_string(*prime) + ")" : "QQ";
}

Json degrees_json(const std::vector<int>& v) {
  Json j = Json::array();
  for (int d : v) j.push_back(d);
  return j;
}

/// Everything computed about one reduced curve (the arrangement or the union).
template <class K>
struct CurveAnalysis {
  Poly<K> F;
  CurveSingularities<K> sing;
  SingularityProfile profile;
  LogDerivationModule<K> d0;
  FreenessCertificate<K> cert;
  FreeResolution<K> resolution;
  HilbertSeries series;
  long long jacobian_degree = 0;
};

template <class K>
CurveAnalysis<K> analyze_curve(const Poly<K>& F, const ChartOptions& chart, Stopwatch& sw, const std::string& tag) {
  CurveAnalysis<K> a;
  a.F = F;
  a.sing = sw.run(tag + ".singularities", [&] { return CurveSingularities<K>::compute(F, chart); });
  a.profile = sw.run(tag + ".milnor_tjurina", [&] { return a.sing.profile(); });
  a.jacobian_degree = sw.run(tag + ".jacobian_scheme", [&] { return projective_degree(jacobian_ideal(F)); });
  a.d0 = sw.run(tag + ".d0", [&] { return d0_module(F); });
  a.cert = sw.run(tag + ".freeness", [&] { return freeness(a.d0); });
  a.resolution = sw.run(tag + ".resolution", [&] { return free_resolution(a.d0.d0); });
  a.series = hilbert_series(a.d0.d0);
  return a;
}

template <class K>
Json curve_json(const CurveAnalysis<K>& a, const std::vector<std::string>& vars, CheckList& checks,
                const std::string& tag) {
  Json j;
  j["degree"] = a.F.total_degree();
  j["equation"] = text(a.F, vars);
  const auto& m = a.sing.chart.change;
  j["singularities"] = {
      {"points", a.profile.sing_point_count},
      {"mu_total", a.profile.mu_total},
      {"tau_total", a.profile.tau_total},
      {"quasihomogeneous_all", a.profile.quasihomogeneous_all},
      {"chart", {{"seed", a.profile.chart_seed}, {"attempt", a.profile.chart_attempt},
                 {"shear", {m(2, 0).get_str(), m(2, 1).get_str()}}}}};

  bool jac = a.jacobian_degree == a.profile.tau_total;
  j["jacobian_scheme"] = {{"degree", a.jacobian_degree}, {"tau_total", a.profile.tau_total}, {"pass", jac}};
  checks.add(tag + ".tau_equals_jacobian_degree", jac,
             std::to_string(a.profile.tau_total) + " vs " + std::to_string(a.jacobian_degree));

  Json gens = Json::array();
  for (const auto& g : a.d0.d0.gens) {
    Json row = Json::array();
    for (const auto& c : g) row.push_back(text(c, vars));
    gens.push_back(row);
  }
  j["d0"] = {{"degrees", degrees_json(a.d0.degrees)}, {"generators", gens}};

  Json free;
  free["free"] = a.cert.is_free;
  free["exponents"] = a.cert.is_free ? degrees_json(a.cert.exponents) : Json(nullptr);
  free["saito_constant"] = a.cert.saito_constant ? Json(text(*a.cert.saito_constant)) : Json(nullptr);
  Json betti = Json::array();
  for (auto b : a.resolution.betti_numbers()) betti.push_back(b);
  free["betti"] = betti;
  j["freeness"] = free;
  if (a.cert.is_free) checks.add(tag + ".saito_determinant", true, "det = " + text(*a.cert.saito_constant) + " * F");

  bool agree = a.series == a.resolution.hilbert_series();
  j["hilbert_series"] = {{"d0", a.series.to_string()}, {"resolution_agrees", agree}};
  checks.add(tag + ".hilbert_series_staircase_vs_resolution", agree);
  j["regularity"] = a.resolution.regularity();
  return j;
}

struct Hypothesis {
  std::string name;
  bool pass;
  std::string detail;
};

void record_hypotheses(Json& report, const std::vector<Hypothesis>& hs) {
  Json h;
  for (const auto& x : hs) h[x.name] = x.pass;
  report["hypotheses"] = h;
}

template <class K>
Analysis run_analysis(const ArrangementFile& file, const Arrangement& arr, const std::optional<Polynomial>& curve,
                      Field<K> field, std::uint64_t seed, Json report) {
  const auto& vars = file.vars;
  Json timings;
  Stopwatch sw(timings);
  CheckList checks;
  ChartOptions chart{seed};
  Analysis out;
  auto finish = [&](int code, Json failure) {
    report["checks"] = checks.json();
    if (code == kExitOk && !checks.all_pass()) code = kExitInconsistent;
    report["status"] = {{"exit_code", code}, {"all_checks_pass", checks.all_pass()}, {"failure", failure}};
    report["timings"] = timings;
    out.report = std::move(report);
    out.exit_code = code;
    return out;
  };

  try {
    Poly<K> Q = map_to_field(arr.product, field);
    auto A = analyze_curve(Q, chart, sw, "arrangement");
    report["arrangement"] = curve_json(A, vars, checks, "arrangement");
    if (!curve) return finish(kExitOk, nullptr);

    Poly<K> C = map_to_field(*curve, field);
    const int m = arr.degree;
    const int n = C.total_degree();
    report["curve"] = {{"equation", text(C, vars)}, {"degree", n}, {"genus", genus_smooth(n)}};

    std::vector<Hypothesis> hyps;
    bool smooth = sw.run("curve.smoothness", [&] { return is_smooth(C); });
    hyps.push_back({"curve_smooth", smooth, "the added curve is singular"});
    hyps.push_back({"arrangement_quasihomogeneous", A.profile.quasihomogeneous_all,
                    "the arrangement has a singularity with mu != tau"});
    std::optional<CurveAnalysis<K>> U;
    if (smooth && A.profile.quasihomogeneous_all) {
      U = analyze_curve(C * Q, chart, sw, "union");
      hyps.push_back({"union_quasihomogeneous", U->profile.quasihomogeneous_all,
                      "the union has a singularity with mu != tau"});
    }
    record_hypotheses(report, hyps);
    for (const auto& h : hyps)
      if (!h.pass) return finish(kExitHypothesis, Json{{"hypothesis", h.name}, {"detail", h.detail}});

    report["union"] = curve_json(*U, vars, checks, "union");

    auto inter = sw.run("intersection", [&] { return intersection_data(C, Q, chart); });
    const long long k = inter.reduced_count;
    bool bez = inter.bezout_total == static_cast<long long>(m) * n;
    report["intersection"] = {{"k", k}, {"bezout_total", inter.bezout_total}, {"bezout_expected", m * n}, {"pass", bez}};
    checks.add("bezout_total", bez, std::to_string(inter.bezout_total) + " vs m n = " + std::to_string(m * n));

    auto md = milnor_delta_from(U->profile.mu_total, A.profile.mu_total, m, n, k);
    report["milnor_delta"] = {{"mu_union", md.mu_union},
                              {"mu_arrangement", md.mu_arrangement},
                              {"difference", md.mu_union - md.mu_arrangement},
                              {"expected", md.expected},
                              {"pass", md.pass}};
    checks.add("milnor_delta", md.pass,
               std::to_string(md.mu_union - md.mu_arrangement) + " vs 2 m n - k = " + std::to_string(md.expected));

    auto coker = cokernel_from_series(A.series, U->series, n, k);
    auto theorem = theorem_main_check(coker);
    Json hf = Json::array();
    for (auto v : coker.hilbert_function) hf.push_back(v);
    report["cokernel"] = {{"t_min", coker.t_min},
                          {"hilbert_function", hf},
                          {"numerator", coker.numerator.to_string()},
                          {"series", coker.series().to_string()},
                          {"hilbert_polynomial", {{"slope", coker.hp_slope}, {"constant", coker.hp_constant}}}};
    auto deg = degree_identity(n, k);
    report["degree_identity"] = {{"n", n}, {"k", k}, {"genus", genus_smooth(n)},
                                 {"via_degree", deg.via_degree}, {"via_genus", deg.via_genus}, {"pass", deg.pass}};
    Json th;
    for (const auto& c : theorem) {
      th[c.name] = c.pass;
      checks.add("cokernel." + c.name, c.pass, c.detail);
    }
    report["cokernel"]["checks_pass"] = th;

    Json pred;
    if (A.cert.is_free) {
      auto p = predict_addition(A.d0.degrees, n, coker.numerator);
      bool agree = p.is_free == U->cert.is_free && (!p.is_free || p.d0_degrees == U->d0.degrees);
      pred["applicable"] = true;
      pred["numerator"] = p.numerator.to_string();
      pred["predicted_free"] = p.is_free;
      std::vector<int> pe;
      if (p.is_free) pe = {1, p.d0_degrees[0], p.d0_degrees[1]};
      pred["predicted_exponents"] = p.is_free ? degrees_json(pe) : Json(nullptr);
      pred["computed_free"] = U->cert.is_free;
      pred["computed_exponents"] = U->cert.is_free ? degrees_json(U->cert.exponents) : Json(nullptr);
      pred["agree"] = agree;
      checks.add("prediction_matches_direct", agree, "numerator " + p.numerator.to_string());
    } else {
      pred["applicable"] = false;
      pred["reason"] = "D0 of the arrangement is not free";
    }
    report["prediction"] = pred;

    auto reg = regularity_bound_check(A.resolution.regularity(), U->resolution.regularity(), n, k);
    report["regularity"] = {{"reg_arrangement", reg.reg_arrangement},
                            {"reg_union", reg.reg_union},
                            {"bound", reg.bound.get_str()},
                            {"pass", reg.pass}};
    checks.add("regularity_bound", reg.pass, std::to_string(reg.reg_union) + " <= " + reg.bound.get_str());
    return finish(kExitOk, nullptr);
  } catch (const HypothesisError& e) {
    return finish(kExitHypothesis, Json{{"hypothesis", e.check()}, {"detail", e.detail()}});
  } catch (const InconsistencyError& e) {
    return finish(kExitInconsistent, Json{{"inconsistency", e.what()}});
  }
}

Json report_header(const ArrangementFile& file, std::optional<std::uint32_t> prime, std::uint64_t seed) {
  Json r;
  r["version"] = kVersion;
  Json comps = Json::array();
  for (const auto& p : file.component_polynomials()) comps.push_back(to_string(p, file.vars));
  auto c = file.curve_polynomial();
  r["input"] = {{"source", file.source},
                {"vars", file.vars},
                {"components", comps},
                {"curve", c ? Json(to_string(*c, file.vars)) : Json(nullptr)}};
  r["field"] = field_name(prime);
  r["exact"] = !prime.has_value();
  r["seed"] = seed;
  return r;
}

struct Setup {
  std::optional<std::uint32_t> prime;
  std::uint64_t seed;
};

Setup setup(const ArrangementFile& file, const RunOptions& opts) {
  return {opts.prime ? opts.prime : file.prime, opts.seed.value_or(file.seed.value_or(1))};
}

/// Hypothesis failures detected before any algebra: invalid components,
/// a curve sharing a component with the arrangement.
Analysis early_failure(Json report, const HypothesisError& e) {
  report["checks"] = Json::array();
  report["status"] = {{"exit_code", kExitHypothesis},
                      {"all_checks_pass", true},
                      {"failure", {{"hypothesis", e.check()}, {"detail", e.detail()}}}};
  report["timings"] = Json::object();
  return {std::move(report), kExitHypothesis};
}

template <class F>
auto in_field(std::optional<std::uint32_t> prime, F&& f) {
  if (prime) return f(Field<ModP>{*prime});
  return f(Field<Rational>{});
}

}  // namespace

std::string library_version() { return kVersion; }

Analysis analyze(const ArrangementFile& file, const RunOptions& opts) {
  auto [prime, seed] = setup(file, opts);
  Json header = report_header(file, prime, seed);
  Arrangement arr;
  std::optional<Polynomial> curve = file.curve_polynomial();
  try {
    arr = Arrangement::from_components(file.component_polynomials());
    if (curve) {
      auto g = grading(*curve);
      if (g.is_zero || g.degree < 1 || !g.is_homogeneous)
        throw HypothesisError("curve_homogeneous", "the added curve must be a form of positive degree");
      require_no_common_component(*curve, arr.product);
      if (!is_reduced(*curve)) throw HypothesisError("curve_reduced", "the added curve has a repeated factor");
    }
  } catch (const HypothesisError& e) {
    return early_failure(std::move(header), e);
  }
  return in_field(prime, [&](auto field) {
    using K = std::decay_t<decltype(field.one())>;
    return run_analysis<K>(file, arr, curve, field, seed, header);
  });
}

Analysis add_curve(ArrangementFile file, const std::string& curve, const RunOptions& opts) {
  file.curve = SourceExpr{curve, 1, 1};
  file.parse_expr(*file.curve);
  return analyze(file, opts);
}

namespace {

template <class K>
CurveSearch run_find_curve(const ArrangementFile& file, const Arrangement& arr, int degree, Field<K> field,
                           std::uint64_t seed, Json report) {
  CurveSearch out;
  Json timings;
  Stopwatch sw(timings);
  auto done = [&](int code, Json failure) {
    report["status"] = {{"exit_code", code}, {"failure", failure}};
    report["timings"] = timings;
    out.report = std::move(report);
    out.exit_code = code;
    return out;
  };
  try {
    Poly<K> Q = map_to_field(arr.product, field);
    auto sing = sw.run("singularities", [&] { return CurveSingularities<K>::compute(Q, ChartOptions{seed}); });
    auto basis = sw.run("linear_system", [&] { return sing.forms_through_points(degree); });
    auto via_ideal = sw.run("points_ideal", [&] { return curves_through(sing.points_ideal(), degree); });
    report["singular_points"] = sing.point_count();
    report["degree"] = degree;
    report["h0"] = basis.size();
    Json b = Json::array();
    for (const auto& f : basis) b.push_back(text(f, file.vars));
    report["basis"] = b;
    if (via_ideal.size() != basis.size())
      throw InconsistencyError("linear system dimension differs between the chart and the points ideal");
    if (basis.empty()) return done(kExitHypothesis, Json{{"hypothesis", "nonempty_linear_system"}, {"detail", "empty linear system"}});

    SmoothMemberOptions so;
    so.seed = seed;
    so.chart = ChartOptions{seed};
    auto member = sw.run("certification", [&] { return find_smooth_member(basis, Q, so); });
    std::string eq = text(member.curve, file.vars);
    Json coeffs = Json::array();
    for (long c : member.coefficients) coeffs.push_back(c);
    Json rejected = Json::array();
    for (const auto& r : member.rejected) rejected.push_back(r);
    report["curve"] = eq;
    report["coefficients"] = coeffs;
    report["attempt"] = member.attempt;
    report["rejected"] = rejected;
    report["certification"] = {{"smooth", true},
                               {"no_common_component", true},
                               {"union_quasihomogeneous", member.union_profile.quasihomogeneous_all},
                               {"union_mu_total", member.union_profile.mu_total},
                               {"union_tau_total", member.union_profile.tau_total}};
    ArrangementFile aug = file;
    aug.curve = SourceExpr{eq, 0, 1};
    aug.seed = seed;
    out.curve = eq;
    out.augmented_file = aug.render();
    return done(kExitOk, nullptr);
  } catch (const HypothesisError& e) {
    return done(kExitHypothesis, Json{{"hypothesis", e.check()}, {"detail", e.detail()}});
  } catch (const InconsistencyError& e) {
    return done(kExitInconsistent, Json{{"inconsistency", e.what()}});
  } catch (const RetryExhaustedError& e) {
    return done(kExitError, Json{{"retry_exhausted", e.what()}});
  }
}

}  // namespace

CurveSearch find_curve(const ArrangementFile& file, int degree, const RunOptions& opts) {
  if (degree < 1) throw std::invalid_argument("degree must be positive");
  auto [prime, seed] = setup(file, opts);
  Json header = report_header(file, prime, seed);
  Arrangement arr;
  try {
    arr = Arrangement::from_components(file.component_polynomials());
  } catch (const HypothesisError& e) {
    header["status"] = {{"exit_code", kExitHypothesis}, {"failure", {{"hypothesis", e.check()}, {"detail", e.detail()}}}};
    return {std::move(header), kExitHypothesis, std::nullopt, std::nullopt};
  }
  return in_field(prime, [&](auto field) {
    using K = std::decay_t<decltype(field.one())>;
    return run_find_curve<K>(file, arr, degree, field, seed, header);
  });
}

}  // namespace logvec
