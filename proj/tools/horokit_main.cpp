// horokit: geodesic/horocycle flow experiments on the hyperbolic plane,
// Schottky ping-pong certification, orbit censuses, and SVG scenes.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "horokit/config.hpp"
#include "horokit/csv.hpp"
#include "horokit/lemma_lab.hpp"

namespace {

using namespace horokit;

std::string word_to_string(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(w.letters[i]);
  }
  return s;
}

BoundaryPoint endpoint_from(double value, bool infinite) {
  return infinite ? BoundaryPoint::infinity() : BoundaryPoint::real(value);
}

int run_flow(const FlowParams& p) {
  Frame f = frame_from_endpoints(endpoint_from(p.vminus, p.vminus_infinite),
                                 endpoint_from(p.vplus, p.vplus_infinite), p.base);
  CsvTable table;
  table.header = {"op", "param", "base_x", "base_y", "direction"};
  auto record = [&](const std::string& op, double param, const Frame& g) {
    Point b = basepoint(g);
    table.rows.push_back({op, param, b.x, b.y, direction(g)});
  };
  record("start", 0.0, f);
  Frame cur = f;
  std::size_t steps = std::max(p.t_steps.size(), p.s_steps.size());
  for (std::size_t i = 0; i < steps; ++i) {
    if (i < p.t_steps.size()) {
      cur = geodesic_flow(cur, p.t_steps[i]);
      record("g", p.t_steps[i], cur);
    }
    if (i < p.s_steps.size()) {
      cur = horocycle_flow(cur, p.s_steps[i]);
      record("h", p.s_steps[i], cur);
    }
  }
  emit_csv(table, p.out);
  return 0;
}

int run_schottky(const std::string& spec_path) {
  SchottkySpec spec = load_schottky_spec(spec_path);
  PingPongResult result = verify_ping_pong(spec);
  if (result.certified) {
    std::printf("certified: %zu pairs, ping-pong conditions hold\n", spec.pairs.size());
    return 0;
  }
  for (const PingPongViolation& v : result.violations)
    std::printf("violation: %s (witness %.12g)\n", v.message.c_str(), v.witness);
  return 1;
}

int run_orbit(const OrbitParams& p) {
  SchottkySpec spec = load_schottky_spec(p.spec_path);
  CsvTable table;
  table.header = {"word", "x", "y"};
  for (const OrbitPoint& op : enumerate_orbit(spec, p.max_word_len))
    table.rows.push_back({word_to_string(op.word), op.point.x, op.point.y});
  emit_csv(table, p.out);
  return 0;
}

void census_row(CsvTable& table, std::size_t n_truncation, const Census& c) {
  table.rows.push_back({static_cast<long long>(n_truncation),
                        static_cast<long long>(c.max_len), c.depth, c.width, c.plus_count,
                        c.minus_count});
}

int run_census(const CensusParams& p) {
  SchottkySpec spec = load_schottky_spec(p.spec_path);
  Frame v = frame_from_endpoints(BoundaryPoint::infinity(), BoundaryPoint::real(0.0),
                                 Point{0.0, 1.0});
  std::vector<OrbitPoint> orbit = enumerate_orbit(spec, p.max_word_len);
  Census c = census_over_points(orbit, v, p.D, p.R, p.max_word_len);
  CsvTable table;
  table.header = {"n_truncation", "max_len", "D", "R", "plus_count", "minus_count"};
  census_row(table, spec.pairs.size(), c);
  emit_csv(table, p.out);
  std::printf("plus_count=%lld minus_count=%lld full_horoball=%lld\n", c.plus_count,
              c.minus_count, full_horoball_count(orbit, v, p.D, p.R));
  return 0;
}

int run_counterexample(const CounterexampleParams& p) {
  std::vector<RowReport> rows = report(p.config);
  OneSidedness cert = one_sidedness_certificate(p.config, p.D, p.R, p.max_word_len);
  CsvTable table;
  table.header = {"n",       "x_n",       "r_n",    "P_x",     "P_y",        "N_x",
                  "N_y",     "ell_n",     "im_gamma_o", "d_o_zn", "d_Pn_zn", "theta_n",
                  "n_truncation", "max_len", "D",     "R",       "plus_count", "minus_count"};
  for (const RowReport& r : rows) {
    table.rows.push_back({static_cast<long long>(r.n), r.x_n, r.r_n, r.P_n.x, r.P_n.y, r.N_n.x,
                          r.N_n.y, r.ell_n, r.im_gamma_o, r.d_o_zn, r.d_Pn_zn, r.theta_n,
                          static_cast<long long>(p.config.n_max),
                          static_cast<long long>(cert.census.max_len), cert.census.depth,
                          cert.census.width, cert.census.plus_count, cert.census.minus_count});
  }
  emit_csv(table, p.out);
  const char* status = cert.status == CertStatus::Certified        ? "certified"
                       : cert.status == CertStatus::WithheldNoDepth ? "withheld (no orbit point at this depth)"
                                                                     : "minus side occupied";
  std::printf("one-sidedness: %s; plus_count=%lld minus_count=%lld attained_depth=%.6g\n",
              status, cert.census.plus_count, cert.census.minus_count, cert.attained_depth);
  return 0;
}

int run_lemmas(const LemmasParams& p) {
  CsvTable table;
  if (p.which == "thin") {
    ConstantEstimate e = estimate_thin_constant(p.alpha0, p.samples, p.seed);
    table.header = {"alpha0", "estimate", "samples", "seed"};
    table.rows.push_back({e.parameter, e.estimate, e.samples, static_cast<long long>(e.seed)});
    std::printf("thin constant estimate C(%.6g) = %.12g\n", e.parameter, e.estimate);
  } else if (p.which == "reciprocal") {
    ReciprocalReport r = verify_reciprocal(p.k, p.samples, p.seed);
    table.header = {"k",          "alpha_hat", "d_hat",   "c_hat",
                    "violations", "excluded",  "samples", "seed"};
    table.rows.push_back({r.k, r.alpha_hat, r.d_hat, r.c_hat, r.violations, r.excluded,
                          r.samples, static_cast<long long>(r.seed)});
    std::printf("reciprocal: alpha_hat=%.12g c_hat=%.12g violations=%lld\n", r.alpha_hat,
                r.c_hat, r.violations);
  } else if (p.which == "inner") {
    InnerTriangleReport r = verify_inner_triangle(p.samples, p.seed);
    table.header = {"delta_hat", "max_chain_deviation", "degenerate", "samples", "seed"};
    table.rows.push_back({r.delta_hat.estimate, r.max_chain_deviation, r.degenerate, r.samples,
                          static_cast<long long>(r.seed)});
    std::printf("inner triangle: delta_hat=%.12g max_chain_dev=%.3g\n", r.delta_hat.estimate,
                r.max_chain_deviation);
  } else {
    FlowLemmaReport r = verify_flow_lemmas(p.alpha0, p.samples, p.seed);
    table.header = {"alpha0",  "samples_used", "skipped", "max_d_iv_iw", "worst_upper_slack",
                    "c2_hat",  "c2_sep0",      "c2_sep1", "c2_sep2",     "c2_sep4",
                    "seed"};
    table.rows.push_back({r.alpha0, r.samples_used, r.skipped, r.max_d_iv_iw,
                          r.worst_upper_slack, r.c2_hat, r.c2_by_threshold[0],
                          r.c2_by_threshold[1], r.c2_by_threshold[2], r.c2_by_threshold[3],
                          static_cast<long long>(r.seed)});
    std::printf("flow lemmas: max d(I_v,I_w)=%.12g c2_hat=%.12g (used %lld, skipped %lld)\n",
                r.max_d_iv_iw, r.c2_hat, r.samples_used, r.skipped);
  }
  emit_csv(table, p.out);
  return 0;
}

int run_render(const RenderParams& p) {
  SchottkySpec spec = load_schottky_spec(p.spec_path);
  Scene scene = scene_from_schottky(spec, p.orbit_len);
  render_svg(scene, p.out, p.model == "disk" ? Model::Disk : Model::HalfPlane, p.viewport);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperbolic flows, Schottky groups, and half-horocycle censuses"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "JSON run config (flags override its sections)");

  // counterexample
  auto* cx = app.add_subcommand("counterexample", "build a paired-circle family and report");
  std::string variant = "tangent", schedule = "linear";
  double alpha = 2.0, cxD = 1.0, cxR = 1.0;
  int n_max = 10, cx_len = 2;
  std::string cx_out = "report.csv";
  cx->add_option("--variant", variant, "tangent|opposite")
      ->check(CLI::IsMember({"tangent", "opposite"}));
  cx->add_option("--schedule", schedule, "linear|geometric")
      ->check(CLI::IsMember({"linear", "geometric"}));
  cx->add_option("--alpha", alpha, "geometric ratio (> 1)");
  cx->add_option("--n-max", n_max, "truncation depth");
  cx->add_option("--D", cxD, "census horoball depth");
  cx->add_option("--R", cxR, "census cone width");
  cx->add_option("--max-word-len", cx_len, "census word length");
  cx->add_option("--out", cx_out, "output CSV");

  // census
  auto* cs = app.add_subcommand("census", "half-horoball census of a Schottky orbit");
  std::string cs_spec, cs_out = "census.csv";
  double csD = 1.0, csR = 1.0;
  int cs_len = 3;
  cs->add_option("--spec", cs_spec, "SchottkySpec JSON");
  cs->add_option("--D", csD, "horoball depth");
  cs->add_option("--R", csR, "cone width");
  cs->add_option("--max-word-len", cs_len, "word length");
  cs->add_option("--out", cs_out, "output CSV");

  // schottky
  auto* sk = app.add_subcommand("schottky", "verify the ping-pong conditions");
  std::string sk_spec;
  sk->add_option("--spec", sk_spec, "SchottkySpec JSON")->required();

  // orbit
  auto* ob = app.add_subcommand("orbit", "enumerate the orbit of o");
  std::string ob_spec, ob_out = "orbit.csv";
  int ob_len = 3;
  ob->add_option("--spec", ob_spec, "SchottkySpec JSON");
  ob->add_option("--max-word-len", ob_len, "word length");
  ob->add_option("--out", ob_out, "output CSV");

  // lemmas
  auto* lm = app.add_subcommand("lemmas", "empirical comparison-lemma constants");
  LemmasParams lm_params;
  lm->add_option("--which", lm_params.which, "thin|reciprocal|inner|flow")
      ->check(CLI::IsMember({"thin", "reciprocal", "inner", "flow"}));
  lm->add_option("--samples", lm_params.samples, "sample count");
  lm->add_option("--seed", lm_params.seed, "RNG seed");
  lm->add_option("--alpha0", lm_params.alpha0, "angle lower bound");
  lm->add_option("--k", lm_params.k, "reciprocal-lemma distance bound");
  lm->add_option("--out", lm_params.out, "output CSV");

  // render
  auto* rd = app.add_subcommand("render", "draw a spec as SVG");
  RenderParams rd_params;
  rd->add_option("--spec", rd_params.spec_path, "SchottkySpec JSON");
  rd->add_option("--model", rd_params.model, "halfplane|disk")
      ->check(CLI::IsMember({"halfplane", "disk"}));
  rd->add_option("--xmin", rd_params.viewport.xmin, "half-plane viewport");
  rd->add_option("--xmax", rd_params.viewport.xmax, "half-plane viewport");
  rd->add_option("--ycap", rd_params.viewport.ycap, "half-plane y ceiling");
  rd->add_option("--orbit-len", rd_params.orbit_len, "orbit dots word length");
  rd->add_option("--out", rd_params.out, "output SVG");

  // flow
  auto* fl = app.add_subcommand("flow", "apply geodesic/horocycle flow steps to a frame");
  FlowParams fl_params;
  std::vector<double> fl_t, fl_s;
  fl->add_option("--t", fl_t, "geodesic flow steps");
  fl->add_option("--s", fl_s, "horocycle flow steps");
  fl->add_option("--out", fl_params.out, "output CSV");

  CLI11_PARSE(app, argc, argv);

  try {
    horokit::RunConfig cfg;
    if (!config_path.empty()) {
      cfg = horokit::parse_config(config_path);
      if (cfg.tolerance_override > 0.0) horokit::set_tolerance(cfg.tolerance_override);
    }

    if (cx->parsed()) {
      CounterexampleParams p = cfg.counterexample.value_or(CounterexampleParams{});
      if (cx->count("--variant") || !cfg.counterexample)
        p.config.variant = variant == "opposite" ? Variant::Opposite : Variant::Tangent;
      if (cx->count("--schedule") || !cfg.counterexample)
        p.config.schedule =
            schedule == "geometric" ? Schedule::geometric(alpha) : Schedule::linear();
      if (cx->count("--alpha") && p.config.schedule.kind == Schedule::Kind::Geometric)
        p.config.schedule = Schedule::geometric(alpha);
      if (cx->count("--n-max") || !cfg.counterexample) p.config.n_max = n_max;
      if (cx->count("--D")) p.D = cxD;
      if (cx->count("--R")) p.R = cxR;
      if (cx->count("--max-word-len")) p.max_word_len = cx_len;
      if (cx->count("--out")) p.out = cx_out;
      return run_counterexample(p);
    }
    if (cs->parsed()) {
      CensusParams p = cfg.census.value_or(CensusParams{});
      if (cs->count("--spec")) p.spec_path = cs_spec;
      if (p.spec_path.empty())
        throw horokit::error(horokit::errc::schema_violation,
                             "census: --spec or a config census.spec is required");
      if (cs->count("--D")) p.D = csD;
      if (cs->count("--R")) p.R = csR;
      if (cs->count("--max-word-len")) p.max_word_len = cs_len;
      if (cs->count("--out")) p.out = cs_out;
      return run_census(p);
    }
    if (sk->parsed()) return run_schottky(sk_spec);
    if (ob->parsed()) {
      OrbitParams p = cfg.orbit.value_or(OrbitParams{});
      if (ob->count("--spec")) p.spec_path = ob_spec;
      if (p.spec_path.empty())
        throw horokit::error(horokit::errc::schema_violation,
                             "orbit: --spec or a config orbit.spec is required");
      if (ob->count("--max-word-len")) p.max_word_len = ob_len;
      if (ob->count("--out")) p.out = ob_out;
      return run_orbit(p);
    }
    if (lm->parsed()) {
      LemmasParams p = cfg.lemmas.value_or(lm_params);
      if (lm->count("--which")) p.which = lm_params.which;
      if (lm->count("--samples")) p.samples = lm_params.samples;
      if (lm->count("--seed")) p.seed = lm_params.seed;
      if (lm->count("--alpha0")) p.alpha0 = lm_params.alpha0;
      if (lm->count("--k")) p.k = lm_params.k;
      if (lm->count("--out")) p.out = lm_params.out;
      return run_lemmas(p);
    }
    if (rd->parsed()) {
      RenderParams p = cfg.render.value_or(rd_params);
      if (rd->count("--spec")) p.spec_path = rd_params.spec_path;
      if (p.spec_path.empty())
        throw horokit::error(horokit::errc::schema_violation,
                             "render: --spec or a config render.spec is required");
      if (rd->count("--model")) p.model = rd_params.model;
      if (rd->count("--xmin")) p.viewport.xmin = rd_params.viewport.xmin;
      if (rd->count("--xmax")) p.viewport.xmax = rd_params.viewport.xmax;
      if (rd->count("--ycap")) p.viewport.ycap = rd_params.viewport.ycap;
      if (rd->count("--orbit-len")) p.orbit_len = rd_params.orbit_len;
      if (rd->count("--out")) p.out = rd_params.out;
      return run_render(p);
    }
    if (fl->parsed()) {
      FlowParams p = cfg.flow.value_or(fl_params);
      if (fl->count("--t")) p.t_steps = fl_t;
      if (fl->count("--s")) p.s_steps = fl_s;
      if (fl->count("--out")) p.out = fl_params.out;
      return run_flow(p);
    }
  } catch (const horokit::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
