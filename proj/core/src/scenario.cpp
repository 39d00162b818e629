#include "acx/scenario.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "acx/cauchy.hpp"
#include "acx/disc_limits.hpp"
#include "acx/disc_solver.hpp"
#include "acx/errors.hpp"
#include "acx/experiments.hpp"
#include "acx/fields.hpp"
#include "acx/foliation.hpp"
#include "acx/levi.hpp"
#include "acx/model.hpp"
#include "acx/model_discs.hpp"
#include "acx/normalize.hpp"
#include "acx/parallel.hpp"
#include "acx/regions.hpp"
#include "acx/rng.hpp"
#include "acx/transform.hpp"

namespace acx {

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw SpecError("expected an object", where);
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key())) throw SpecError("unknown key", where + "." + it.key());
  }
}

double require_positive(const json& v, const std::string& where) {
  if (!v.is_number()) throw SpecError("expected a number", where);
  double x = v.get<double>();
  if (x <= 0.0) throw SpecError("value must be positive", where);
  return x;
}

Complex parse_complex(const json& v, const std::string& where) {
  if (v.is_number()) return Complex(v.get<double>(), 0.0);
  check_keys(v, {"re", "im"}, where);
  double re = v.value("re", 0.0), im = v.value("im", 0.0);
  return Complex(re, im);
}

CVector parse_point(const json& v, int n, const std::string& where) {
  if (!v.is_array() || int(v.size()) != n) throw SpecError("expected n complex entries", where);
  CVector p(n);
  for (int i = 0; i < n; ++i) p[i] = parse_complex(v[i], where);
  return p;
}

MultiIndex parse_index(const json& v, int n, const std::string& where) {
  if (!v.is_array() || int(v.size()) != n)
    throw SpecError("multi-index needs n entries", where);
  MultiIndex out(n);
  for (int i = 0; i < n; ++i) {
    if (!v[i].is_number_integer() || v[i].get<int>() < 0)
      throw SpecError("multi-index entries must be nonnegative integers", where);
    out[i] = v[i].get<int>();
  }
  return out;
}

struct ChartSpec {
  AlmostComplexChart chart;
  std::optional<ModelStructure> model;  // set for builtin "model"
  bool is_standard = false;             // A == 0 (jst / siegel)
  std::string description;
};

ChartSpec parse_chart(const json& spec, const std::string& where) {
  ChartSpec out;
  if (spec.contains("builtin")) {
    check_keys(spec, {"builtin", "n", "radius", "mu"}, where);
    std::string b = spec["builtin"].get<std::string>();
    int n = spec.value("n", 2);
    if (n < 1) throw SpecError("dimension must be >= 1", where + ".n");
    double radius = spec.value("radius", 1.0);
    if (radius <= 0) throw SpecError("radius must be positive", where + ".radius");
    if (b == "jst" || b == "siegel") {
      out.chart = AlmostComplexChart::standard(n, radius);
      out.is_standard = true;
      out.description = b + "(n=" + std::to_string(n) + ")";
      if (b == "siegel" && n < 2) throw SpecError("siegel needs n >= 2", where + ".n");
      return out;
    }
    if (b == "model") {
      if (n < 2) throw SpecError("model needs n >= 2", where + ".n");
      if (!spec.contains("mu")) throw SpecError("model needs mu", where + ".mu");
      const json& mu = spec["mu"];
      if (!mu.is_array() || int(mu.size()) != n - 1)
        throw SpecError("mu must be an (n-1) x (n-1) array", where + ".mu");
      ModelStructure m;
      m.n = n;
      m.mu = CMatrix::Zero(n - 1, n - 1);
      for (int j = 0; j + 1 < n; ++j) {
        if (!mu[j].is_array() || int(mu[j].size()) != n - 1)
          throw SpecError("mu must be an (n-1) x (n-1) array", where + ".mu");
        for (int k = 0; k + 1 < n; ++k) m.mu(j, k) = parse_complex(mu[j][k], where + ".mu");
      }
      out.chart = model_chart(m, radius);
      out.model = m;
      out.description = "model(n=" + std::to_string(n) + ")";
      return out;
    }
    throw SpecError("unknown builtin chart", where + ".builtin");
  }

  check_keys(spec, {"n", "radius", "entries"}, where);
  if (!spec.contains("n") || !spec.contains("radius") || !spec.contains("entries"))
    throw SpecError("inline chart needs n, radius, entries", where);
  int n = spec["n"].get<int>();
  if (n < 1) throw SpecError("dimension must be >= 1", where + ".n");
  double radius = require_positive(spec["radius"], where + ".radius");
  PolyMatrix table(n, n, n);
  int idx = 0;
  for (const auto& e : spec["entries"]) {
    std::string ew = where + ".entries[" + std::to_string(idx++) + "]";
    check_keys(e, {"row", "col", "alpha", "beta", "re", "im"}, ew);
    int row = e.value("row", 0), col = e.value("col", 0);
    if (row < 1 || row > n || col < 1 || col > n)
      throw SpecError("row/col must be in 1..n", ew);
    MultiIndex alpha = parse_index(e.at("alpha"), n, ew + ".alpha");
    MultiIndex beta = parse_index(e.at("beta"), n, ew + ".beta");
    table.add_term(row - 1, col - 1, alpha, beta,
                   Complex(e.value("re", 0.0), e.value("im", 0.0)));
  }
  out.chart = AlmostComplexChart(table, radius);
  out.description = "inline(n=" + std::to_string(n) + ")";
  return out;
}

ScalarField parse_field(const json& spec, int n, const std::string& where) {
  check_keys(spec, {"builtin", "re", "im", "j"}, where);
  if (!spec.contains("builtin")) throw SpecError("field needs a builtin name", where);
  std::string b = spec["builtin"].get<std::string>();
  if (b == "const")
    return fields::constant(n, Complex(spec.value("re", 0.0), spec.value("im", 0.0)));
  if (b == "coordinate") {
    int j = spec.value("j", 1);
    if (j < 1 || j > n) throw SpecError("coordinate index out of range", where + ".j");
    return fields::coordinate(n, j - 1);
  }
  if (b == "conj_z1_half") return fields::conj_coordinate_half(n, 0);
  if (b == "exp_inv_zn") return fields::exp_inv_zn(n);
  if (b == "zn_pow_i") return fields::zn_pow_i(n);
  if (b == "exp_inv_zn_plus_conj_z1_half") return fields::exp_inv_plus_conj(n);
  if (b == "cutoff_zn_pow_1pi") return fields::cutoff_product(n);
  throw SpecError("unknown builtin field", where + ".builtin");
}

RealField parse_real_field(const json& spec, int n, const std::string& where) {
  check_keys(spec, {"builtin"}, where);
  std::string b = spec.value("builtin", "");
  RealField u;
  if (b == "abs2") {
    u.eval = [](const CVector& z) { return z.squaredNorm(); };
    return u;
  }
  if (b == "re_z1_sq") {
    u.eval = [](const CVector& z) { return (z[0] * z[0]).real(); };
    return u;
  }
  if (b == "rho0") {
    u.eval = [n](const CVector& z) {
      double s = z[n - 1].imag();
      for (int j = 0; j + 1 < n; ++j) s += std::norm(z[j]);
      return s;
    };
    return u;
  }
  throw SpecError("unknown real test function", where + ".builtin");
}

struct Context {
  ChartSpec chart;
  uint64_t seed = 0;
  fs::path out;
  json summary;
  std::vector<std::string> failures;

  void fail(const std::string& what) { failures.push_back(what); }
  void note(const std::string& key, json value) { summary[key] = std::move(value); }
};

std::ofstream open_out(const Context& ctx, const std::string& name) {
  fs::create_directories(ctx.out);
  std::ofstream os(ctx.out / name);
  if (!os) throw AcxError("cannot open output file " + (ctx.out / name).string());
  return os;
}

// ---------------------------------------------------------------- validate
void op_validate(Context& ctx, const json& params) {
  check_keys(params, {"samples", "margin"}, "params");
  int count = params.value("samples", 200);
  double margin = params.value("margin", 1e-6);
  if (margin <= 0) throw SpecError("tolerances must be positive", "params.margin");
  auto samples =
      ball_samples(ctx.chart.chart.dimension(), ctx.chart.chart.radius(), count, ctx.seed);
  auto rep = validate_chart(ctx.chart.chart, samples, margin);

  auto os = open_out(ctx, "validate.csv");
  os << "sample,norm\n";
  for (size_t i = 0; i < samples.size(); ++i)
    os << i << "," << format_double(spectral_norm(ctx.chart.chart.a(samples[i]))) << "\n";

  ctx.note("max_norm", rep.max_norm);
  ctx.note("margin", rep.margin);
  ctx.note("pass", rep.pass);
  if (!rep.pass) ctx.fail("chart validation failed: max |A| = " + std::to_string(rep.max_norm));
}

// ---------------------------------------------------------- transform-suite
void op_transform_suite(Context& ctx, const json& params) {
  check_keys(params, {"samples"}, "params");
  int count = params.value("samples", 32);
  const auto& chart = ctx.chart.chart;
  int n = chart.dimension();
  auto samples = ball_samples(n, chart.radius() * 0.35, count, ctx.seed);

  auto os = open_out(ctx, "transform_suite.csv");
  os << "check,value,threshold,pass\n";
  auto row = [&](const std::string& name, double value, double thr) {
    bool ok = value < thr;
    os << name << "," << format_double(value) << "," << format_double(thr) << ","
       << (ok ? 1 : 0) << "\n";
    if (!ok) ctx.fail(name + " exceeded threshold");
    return ok;
  };

  // Identity transformation keeps A pointwise.
  {
    ChartTransformation id = ChartTransformation::identity(n);
    AlmostComplexChart pushed = pushforward(chart, id);
    double worst = 0.0;
    for (const auto& z : samples)
      worst = std::max(worst, spectral_norm(pushed.a(z) - chart.a(z)));
    row("identity_pushforward", worst, 1e-10);
  }

  // Functoriality through a pair of quadratic shears.
  {
    Rng rng(Rng(ctx.seed).split(2).next_u64());
    auto shear = [&](int which) {
      PolyMap map = PolyMap::identity(n);
      for (int j = 0; j < n; ++j) {
        MultiIndex a(n, 0), b(n, 0);
        a[(j + which) % n] += 1;
        b[j] += 1;
        map.add_term(j, a, b, 0.05 * rng.next_complex_normal());
      }
      return ChartTransformation::from_poly(map);
    };
    ChartTransformation f = shear(0), g = shear(1);
    ChartTransformation gf = g.compose_after(f);
    AlmostComplexChart two = pushforward(pushforward(chart, f), g);
    AlmostComplexChart one = pushforward(chart, gf);
    double worst = 0.0;
    for (const auto& z : samples) {
      CVector w = gf.forward(z);
      worst = std::max(worst, spectral_norm(two.a(w) - one.a(w)));
    }
    row("functoriality", worst, 1e-8);
  }

  if (ctx.chart.model) {
    const ModelStructure& m = *ctx.chart.model;
    // d_lambda invariance of A_0.
    double worst = 0.0;
    for (double lambda : {0.1, 0.5, 2.0, 10.0}) {
      AlmostComplexChart dil = dilate_chart(chart, lambda, DilationMode::Nonisotropic);
      for (const auto& z : samples) {
        if (z.norm() > dil.radius()) continue;
        worst = std::max(worst, spectral_norm(dil.a(z) - chart.a(z)));
      }
    }
    row("model_dilation_invariance", worst, 1e-12);

    if (m.n == 2) {
      ChartTransformation flat = dim2_flatten(m);
      AlmostComplexChart small = model_chart(m, std::min(chart.radius(), 0.3));
      AlmostComplexChart flattened = pushforward(small, flat, small.radius() * 0.5);
      double worst2 = 0.0;
      for (const auto& z : ball_samples(2, small.radius() * 0.4, count, ctx.seed + 1))
        worst2 = std::max(worst2, spectral_norm(flattened.a(flat.forward(z))));
      row("dim2_flatten_to_zero", worst2, 1e-10);
    }
  }
}

// ------------------------------------------------------------- solve-disc
void op_solve_disc(Context& ctx, const json& params) {
  check_keys(params, {"phi", "point", "tangent", "nr", "ntheta", "tolerance", "max_iter"},
             "params");
  const auto& chart = ctx.chart.chart;
  int n = chart.dimension();
  SolverOptions opts;
  opts.nr = params.value("nr", 96);
  opts.ntheta = params.value("ntheta", 128);
  opts.tolerance = params.value("tolerance", 1e-10);
  opts.max_iter = params.value("max_iter", 60);
  if (opts.tolerance <= 0) throw SpecError("tolerances must be positive", "params.tolerance");

  HolomorphicDatum phi;
  if (params.contains("phi")) {
    const json& p = params["phi"];
    if (!p.is_array() || int(p.size()) != n)
      throw SpecError("phi needs one coefficient list per component", "params.phi");
    phi.coeffs.resize(n);
    for (int c = 0; c < n; ++c)
      for (const auto& cf : p[c]) phi.coeffs[c].push_back(parse_complex(cf, "params.phi"));
  } else if (params.contains("point") && params.contains("tangent")) {
    CVector pt = parse_point(params["point"], n, "params.point");
    CVector tv = parse_point(params["tangent"], n, "params.tangent");
    phi = HolomorphicDatum::line(pt, tv);
  } else {
    throw SpecError("solve-disc needs phi or point+tangent", "params");
  }

  DiscSolution sol = solve_disc(chart, phi, opts);
  {
    auto os = open_out(ctx, "solution.csv");
    sol.grid.write_csv(os);
  }
  json sidecar;
  sidecar["residual"] = sol.residual;
  sidecar["iterations"] = sol.iterations;
  sidecar["residual_history"] = sol.residual_history;
  json datum = json::array();
  for (const auto& comp : sol.datum.coeffs) {
    json cc = json::array();
    for (auto c : comp) cc.push_back({{"re", c.real()}, {"im", c.imag()}});
    datum.push_back(cc);
  }
  sidecar["datum"] = datum;
  {
    auto os = open_out(ctx, "solution.json");
    os << sidecar.dump(2) << "\n";
  }
  ctx.note("residual", sol.residual);
  ctx.note("iterations", sol.iterations);
}

// -------------------------------------------------------------------- levi
void op_levi(Context& ctx, const json& params) {
  check_keys(params, {"u", "point", "directions"}, "params");
  const auto& chart = ctx.chart.chart;
  int n = chart.dimension();
  if (!params.contains("u")) throw SpecError("levi needs a test function u", "params.u");
  RealField u = parse_real_field(params["u"], n, "params.u");
  CVector p = params.contains("point") ? parse_point(params["point"], n, "params.point")
                                       : CVector(CVector::Zero(n));
  int directions = params.value("directions", 24);

  Rng rng(ctx.seed);
  auto os = open_out(ctx, "levi.csv");
  os << "direction,value\n";
  double minval = 0.0;
  bool first = true;
  for (int k = 0; k < directions; ++k) {
    CVector v = rng.next_unit_vector(n);
    double val = levi_form(chart, u, p, v);
    os << k << "," << format_double(val) << "\n";
    if (first || val < minval) {
      minval = val;
      first = false;
    }
  }
  ctx.note("min_levi", minval);
  ctx.note("strictly_psh", minval > 1e-8);
}

// --------------------------------------------------------------- normalize
void op_normalize(Context& ctx, const json& params) {
  check_keys(params, {}, "params");
  auto res = normalize_chart(ctx.chart.chart);
  ctx.note("a_at_zero", res.a_at_zero);
  ctx.note("da_dz_at_zero", res.da_dz_at_zero);
  bool ok = res.a_at_zero < 1e-12 && res.da_dz_at_zero < 1e-6;
  ctx.note("pass", ok);
  if (!ok) ctx.fail("normalization post-checks failed");
}

// ------------------------------------------------------------ dilate-study
void op_dilate_study(Context& ctx, const json& params) {
  check_keys(params, {"k_max", "compact_radius", "samples", "mode"}, "params");
  int k_max = params.value("k_max", 10);
  double compact = params.value("compact_radius", 1.0);
  int count = params.value("samples", 64);
  std::string mode = params.value("mode", "nonisotropic");

  const auto& chart = ctx.chart.chart;
  auto os = open_out(ctx, "dilate.csv");
  os << "lambda,gap\n";

  if (mode == "isotropic") {
    double prev = std::numeric_limits<double>::infinity();
    bool monotone = true;
    double last = 0.0;
    for (int k = 1; k <= k_max; ++k) {
      double lambda = std::pow(2.0, -k);
      AlmostComplexChart dil = dilate_chart(chart, lambda, DilationMode::Isotropic);
      double worst = 0.0;
      for (const auto& z : ball_samples(chart.dimension(), 1.0, count, ctx.seed))
        worst = std::max(worst, spectral_norm(dil.a(z)));
      os << format_double(lambda) << "," << format_double(worst) << "\n";
      if (worst > prev + 1e-12) monotone = false;
      prev = worst;
      last = worst;
    }
    ctx.note("monotone", monotone);
    ctx.note("final_gap", last);
    if (!monotone) ctx.fail("isotropic shrinkage not monotone");
    return;
  }
  if (mode != "nonisotropic") throw SpecError("mode must be isotropic|nonisotropic", "params.mode");

  if (!is_normalized(chart)) throw SpecError("dilate-study needs a normalized chart", "chart");
  ModelStructure model = model_limit(chart);
  double prev = std::numeric_limits<double>::infinity();
  bool monotone = true;
  double last = 0.0;
  for (int k = 1; k <= k_max; ++k) {
    double lambda = std::pow(2.0, -k);
    double gap = model_convergence_gap(chart, model, lambda, compact, count, ctx.seed);
    os << format_double(lambda) << "," << format_double(gap) << "\n";
    if (gap > prev + 1e-12) monotone = false;
    prev = gap;
    last = gap;
  }
  ctx.note("monotone", monotone);
  ctx.note("final_gap", last);
  if (!monotone) ctx.fail("dilation convergence not monotone");
}

// -------------------------------------------------------- limit-experiment
json verdict_json(const LimitVerdict& v) {
  json out;
  out["status"] = v.status == LimitStatus::Limit
                      ? "limit"
                      : (v.status == LimitStatus::NoLimit ? "no-limit" : "inconclusive");
  out["value"] = {{"re", v.value.real()}, {"im", v.value.imag()}};
  out["tail_oscillation"] = v.tail_oscillation;
  if (v.curve) {
    out["curve_status"] = v.curve->status == LimitStatus::Limit
                              ? "limit"
                              : (v.curve->status == LimitStatus::NoLimit ? "no-limit"
                                                                         : "inconclusive");
    out["curve_agrees"] = v.curve_agrees;
  }
  return out;
}

void write_verdict_csv(std::ofstream& os, const std::string& tag, const LimitVerdict& v) {
  for (const auto& row : v.table)
    os << tag << "," << format_double(row.scale) << "," << format_double(row.oscillation) << ","
       << format_double(row.mean.real()) << "," << format_double(row.mean.imag()) << "\n";
}

void op_limit_experiment(Context& ctx, const json& params) {
  check_keys(params,
             {"field", "alphas", "k_min", "k_max", "per_scale", "tolerance", "kind"},
             "params");
  const auto& chart = ctx.chart.chart;
  int n = chart.dimension();
  if (n < 2) throw SpecError("limit experiments need n >= 2", "chart");
  if (!params.contains("field")) throw SpecError("limit-experiment needs a field", "params.field");
  ScalarField field = parse_field(params["field"], n, "params.field");

  ExperimentOptions opts;
  opts.schedule.k_min = params.value("k_min", 3);
  opts.schedule.k_max = params.value("k_max", 22);
  opts.schedule.per_scale = params.value("per_scale", 6);
  opts.tolerance = params.value("tolerance", 5e-3);
  if (opts.tolerance <= 0) throw SpecError("tolerances must be positive", "params.tolerance");
  opts.seed = ctx.seed;
  std::string kind = params.value("kind", "admissible");
  if (kind == "wedge")
    throw SpecError("wedge regions are accepted as a kind but carry no analysis", "params.kind");
  if (kind != "cone" && kind != "admissible")
    throw SpecError("kind must be cone|admissible|wedge", "params.kind");

  std::vector<double> alphas;
  if (params.contains("alphas"))
    for (const auto& a : params["alphas"]) alphas.push_back(require_positive(a, "params.alphas"));
  else
    alphas = {0.5, 2.0, 8.0};

  auto os = open_out(ctx, "limit_experiment.csv");
  os << "alpha,scale,oscillation,mean_re,mean_im\n";
  json verdicts = json::array();
  for (double alpha : alphas) {
    DefiningFunction rho = model_defining(n);
    RegionKind rk = kind == "cone" ? RegionKind::Cone : RegionKind::Admissible;
    ApproachRegion region(rk, alpha, rho, chart, DeltaMode::AbsRho);
    LimitVerdict v = admissible_limit_experiment(field, region, opts);
    write_verdict_csv(os, format_double(alpha), v);
    json jv = verdict_json(v);
    jv["alpha"] = alpha;
    verdicts.push_back(jv);
    if (!v.curve_agrees) ctx.fail("curve and region verdicts disagree at alpha " +
                                  std::to_string(alpha));
  }
  ctx.note("field", field.name);
  ctx.note("verdicts", verdicts);
}

// -------------------------------------------------------------- fatou-scan
void op_fatou_scan(Context& ctx, const json& params) {
  check_keys(params,
             {"field", "alpha", "grid_tangent", "grid_normal", "tangent_halfwidth", "normal_lo",
              "normal_hi", "k_min", "k_max", "per_scale", "tolerance"},
             "params");
  const auto& chart = ctx.chart.chart;
  int n = chart.dimension();
  if (n < 2) throw SpecError("fatou-scan needs n >= 2", "chart");
  if (!params.contains("field")) throw SpecError("fatou-scan needs a field", "params.field");
  ScalarField field = parse_field(params["field"], n, "params.field");
  double alpha = params.value("alpha", 2.0);

  ExperimentOptions opts;
  opts.schedule.k_min = params.value("k_min", 3);
  opts.schedule.k_max = params.value("k_max", 22);
  opts.schedule.per_scale = params.value("per_scale", 4);
  opts.tolerance = params.value("tolerance", 5e-3);
  if (opts.tolerance <= 0) throw SpecError("tolerances must be positive", "params.tolerance");
  opts.seed = ctx.seed;

  auto edge = model_edge_grid(n, params.value("grid_tangent", 16), params.value("grid_normal", 16),
                              params.value("tangent_halfwidth", 0.12),
                              params.value("normal_lo", 0.05), params.value("normal_hi", 0.25));
  FatouScan scan = fatou_scan(field, chart, edge, alpha, opts);

  auto os = open_out(ctx, "fatou.csv");
  os << "point";
  for (int c = 0; c < n; ++c) os << ",re" << c << ",im" << c;
  os << ",status,limit_re,limit_im,tail_oscillation";
  for (int k = opts.schedule.k_min; k <= opts.schedule.k_max; ++k) os << ",osc_k" << k;
  os << "\n";
  for (size_t i = 0; i < scan.results.size(); ++i) {
    const auto& r = scan.results[i];
    os << i;
    for (int c = 0; c < n; ++c)
      os << "," << format_double(r.point[c].real()) << "," << format_double(r.point[c].imag());
    os << ","
       << (r.status == LimitStatus::Limit
               ? "limit"
               : (r.status == LimitStatus::NoLimit ? "no-limit" : "inconclusive"))
       << "," << format_double(r.value.real()) << "," << format_double(r.value.imag()) << ","
       << format_double(r.tail_oscillation);
    for (const auto& row : r.table) os << "," << format_double(row.oscillation);
    os << "\n";
  }
  ctx.note("existence_fraction", scan.existence_fraction);
  ctx.note("tolerance", opts.tolerance);
  ctx.note("points", int(scan.results.size()));
  ctx.note("limits", scan.limits);
  ctx.note("no_limits", scan.no_limits);
  ctx.note("inconclusive", scan.inconclusive);
  ctx.note("field", field.name);
}

// ----------------------------------------------------------------- foliate
void op_foliate(Context& ctx, const json& params) {
  check_keys(params, {"builtin", "d", "slices", "box"}, "params");
  const auto& chart = ctx.chart.chart;
  int n = chart.dimension();
  int d = params.value("d", 1);
  int slices = params.value("slices", 5);
  double box = params.value("box", 0.25);
  std::string b = params.value("builtin", "flat");

  SubmanifoldParametrization param;
  param.ambient_n = n;
  param.intrinsic = n + d;
  if (b == "flat") {
    // N = R^d(x) x i R^n(y): first n parameters are y, last d are x.
    param.psi = [n, d](const RVector& u) {
      CVector z = CVector::Zero(n);
      for (int j = 0; j < n; ++j) z[j] = Complex(0.0, u[j]);
      for (int j = 0; j < d && j < n; ++j) z[j] += u[n + j];
      return z;
    };
  } else if (b == "complex_line") {
    if (n < 2 || d != 1) throw SpecError("complex_line demo needs n >= 2, d = 1", "params");
    param.psi = [n](const RVector& u) {
      CVector z = CVector::Zero(n);
      z[0] = Complex(u[0], u[1]);
      for (int j = 2; j < n; ++j) z[j - 1] += Complex(0.0, u[j]);
      z[n - 1] += Complex(0.0, u[n]);
      return z;
    };
  } else {
    throw SpecError("unknown builtin parametrization", "params.builtin");
  }

  auto os = open_out(ctx, "foliate.csv");
  os << "slice,s,min_singular,samples\n";
  try {
    FoliationResult res = foliate_generic(param, chart, d, slices, box);
    for (size_t i = 0; i < res.slices.size(); ++i) {
      const auto& s = res.slices[i];
      os << i << "," << format_double(s.s[0]) << "," << format_double(s.min_singular) << ","
         << s.samples << "\n";
    }
    ctx.note("slices", int(res.slices.size()));
    ctx.note("pass", true);
  } catch (const TotallyRealFailure& e) {
    ctx.note("pass", false);
    ctx.note("min_singular", e.smallest_singular_value);
    ctx.fail(std::string("totally-real certification failed: ") + e.what());
  }
}

}  // namespace

int run_scenario_file(const RunOptions& options) {
  set_thread_hint(options.threads);

  std::ifstream is(options.scenario_path);
  if (!is) throw SpecError("cannot open scenario file", options.scenario_path);
  json doc;
  try {
    is >> doc;
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("JSON parse error: ") + e.what(), options.scenario_path);
  }

  check_keys(doc, {"name", "seed", "chart", "operation", "params", "out"}, "scenario");
  if (!doc.contains("name") || !doc["name"].is_string())
    throw SpecError("scenario needs a name", "scenario.name");
  if (!doc.contains("operation")) throw SpecError("scenario needs an operation", "scenario.operation");
  if (!doc.contains("chart")) throw SpecError("scenario needs a chart", "scenario.chart");
  std::string op = doc["operation"].get<std::string>();

  static const std::set<std::string> sampling_ops = {
      "validate", "transform-suite", "levi", "dilate-study", "limit-experiment", "fatou-scan"};
  if (sampling_ops.count(op) && !doc.contains("seed") && !options.seed_override)
    throw SpecError("seed is mandatory for sampling operations", "scenario.seed");

  Context ctx{parse_chart(doc["chart"], "scenario.chart"),
              options.seed_override.value_or(doc.value("seed", 0ull)),
              fs::path(options.out_dir.empty() ? doc.value("out", std::string(".")) : options.out_dir),
              json::object(),
              {}};
  ctx.summary["name"] = doc["name"];
  ctx.summary["operation"] = op;
  ctx.summary["seed"] = ctx.seed;
  ctx.summary["chart"] = ctx.chart.description;

  json params = doc.value("params", json::object());
  if (op == "validate")
    op_validate(ctx, params);
  else if (op == "transform-suite")
    op_transform_suite(ctx, params);
  else if (op == "solve-disc")
    op_solve_disc(ctx, params);
  else if (op == "levi")
    op_levi(ctx, params);
  else if (op == "normalize")
    op_normalize(ctx, params);
  else if (op == "dilate-study")
    op_dilate_study(ctx, params);
  else if (op == "limit-experiment")
    op_limit_experiment(ctx, params);
  else if (op == "fatou-scan")
    op_fatou_scan(ctx, params);
  else if (op == "foliate")
    op_foliate(ctx, params);
  else
    throw SpecError("unknown operation", "scenario.operation");

  ctx.summary["ok"] = ctx.failures.empty();
  {
    auto os = open_out(ctx, "summary.json");
    os << ctx.summary.dump(2) << "\n";
  }
  if (!ctx.failures.empty()) {
    json report;
    report["scenario"] = doc["name"];
    report["failures"] = ctx.failures;
    auto os = open_out(ctx, "failure_report.json");
    os << report.dump(2) << "\n";
    return 2;
  }
  return 0;
}

std::string serialize_chart_json(const AlmostComplexChart& chart) {
  if (!chart.poly())
    throw SpecError("only polynomial-table charts serialize to JSON", "chart");
  const PolyMatrix& table = *chart.poly();
  std::vector<PolyTerm> terms = table.terms();
  std::sort(terms.begin(), terms.end(), [](const PolyTerm& a, const PolyTerm& b) {
    if (a.row != b.row) return a.row < b.row;
    if (a.col != b.col) return a.col < b.col;
    if (a.alpha != b.alpha) return a.alpha < b.alpha;
    return a.beta < b.beta;
  });
  json doc;
  doc["n"] = chart.dimension();
  doc["radius"] = chart.radius();
  json entries = json::array();
  for (const auto& t : terms) {
    json e;
    e["row"] = t.row + 1;
    e["col"] = t.col + 1;
    e["alpha"] = t.alpha;
    e["beta"] = t.beta;
    e["re"] = t.coeff.real();
    e["im"] = t.coeff.imag();
    entries.push_back(e);
  }
  doc["entries"] = entries;
  return doc.dump(2);
}

AlmostComplexChart load_chart_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("JSON parse error: ") + e.what(), "chart");
  }
  return parse_chart(doc, "chart").chart;
}

std::string catalog_text() {
  std::ostringstream os;
  os << "acx " << version() << "\n";
  os << "charts:\n";
  os << "  jst        standard structure (A = 0), any n       {\"builtin\":\"jst\",\"n\":N}\n";
  os << "  siegel     Siegel model domain with J_st, n >= 2   {\"builtin\":\"siegel\"}\n";
  os << "  model      homogeneous model A_0 from mu           {\"builtin\":\"model\",\"n\":N,\"mu\":[[..]]}\n";
  os << "  inline     polynomial table {n, radius, entries:[{row,col,alpha,beta,re,im}]}\n";
  os << "fields (declared sup / dbar_J bounds on the model domain):\n";
  for (const auto& f : fields::catalog(2)) {
    os << "  " << f.name;
    for (size_t pad = f.name.size(); pad < 34; ++pad) os << ' ';
    os << "sup<=" << f.sup_bound << " dbar<=" << f.dbar_bound << "\n";
  }
  os << "operations: validate transform-suite solve-disc levi normalize dilate-study"
        " limit-experiment fatou-scan foliate\n";
  os << "acceptance suites: AC1..AC11 (tests/acceptance)\n";
  return os.str();
}

}  // namespace acx
