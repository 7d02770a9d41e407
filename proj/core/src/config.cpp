#include "horokit/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace horokit {

namespace {

using nlohmann::json;

[[noreturn]] void bad_field(const std::string& path, const std::string& why) {
  throw error(errc::schema_violation, path + ": " + why);
}

double need_number(const json& j, const std::string& path) {
  if (!j.is_number()) bad_field(path, "expected a number");
  return j.get<double>();
}

double positive_number(const json& j, const std::string& path) {
  double v = need_number(j, path);
  if (!(v > 0.0)) bad_field(path, "must be positive");
  return v;
}

int need_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) bad_field(path, "expected an integer");
  return j.get<int>();
}

std::string need_string(const json& j, const std::string& path) {
  if (!j.is_string()) bad_field(path, "expected a string");
  return j.get<std::string>();
}

json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw error(errc::file_not_found, "no such file: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  json j = json::parse(ss.str(), nullptr, false);
  if (j.is_discarded()) throw error(errc::schema_violation, path + ": malformed JSON");
  return j;
}

PairedCircle parse_circle(const json& j, const std::string& path) {
  if (!j.is_object()) bad_field(path, "expected an object");
  if (!j.contains("center")) bad_field(path + ".center", "missing");
  if (!j.contains("radius")) bad_field(path + ".radius", "missing");
  PairedCircle c;
  c.center = need_number(j["center"], path + ".center");
  c.radius = positive_number(j["radius"], path + ".radius");
  return c;
}

SchottkySpec parse_schottky_spec(const json& j, const std::string& base) {
  if (!j.is_object() || !j.contains("pairs") || !j["pairs"].is_array())
    bad_field(base + "pairs", "expected an array of pairs");
  SchottkySpec spec;
  const json& pairs = j["pairs"];
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    std::string path = base + "pairs[" + std::to_string(i) + "]";
    const json& pj = pairs[i];
    if (!pj.is_object()) bad_field(path, "expected an object");
    SchottkyPair pair;
    if (!pj.contains("plus")) bad_field(path + ".plus", "missing");
    if (!pj.contains("minus")) bad_field(path + ".minus", "missing");
    pair.plus = parse_circle(pj["plus"], path + ".plus");
    pair.minus = parse_circle(pj["minus"], path + ".minus");
    if (pj.contains("matrix")) {
      const json& m = pj["matrix"];
      if (!m.is_array() || m.size() != 4) bad_field(path + ".matrix", "expected [a, b, c, d]");
      double a = need_number(m[0], path + ".matrix[0]");
      double b = need_number(m[1], path + ".matrix[1]");
      double c = need_number(m[2], path + ".matrix[2]");
      double d = need_number(m[3], path + ".matrix[3]");
      if (!(a * d - b * c > 0.0)) bad_field(path + ".matrix", "determinant must be positive");
      pair.gamma = Mobius(a, b, c, d);  // normalized on ingestion
    } else if (pj.contains("derive")) {
      const json& dv = pj["derive"];
      if (!dv.is_object() || !dv.contains("p") || !dv.contains("q"))
        bad_field(path + ".derive", "expected {\"p\", \"q\"}");
      BoundaryPoint p = BoundaryPoint::real(need_number(dv["p"], path + ".derive.p"));
      BoundaryPoint q = BoundaryPoint::real(need_number(dv["q"], path + ".derive.q"));
      pair.gamma = pairing_isometry(p, q, pair.plus.geodesic(), pair.minus.geodesic());
    } else {
      bad_field(path, "needs either \"matrix\" or \"derive\"");
    }
    spec.pairs.push_back(pair);
  }
  return spec;
}

Schedule parse_schedule(const json& j, const std::string& path) {
  if (j.is_string()) {
    std::string kind = j.get<std::string>();
    if (kind == "linear") return Schedule::linear();
    if (kind == "geometric") return Schedule::geometric(2.0);
    bad_field(path, "unknown schedule \"" + kind + "\"");
  }
  if (!j.is_object()) bad_field(path, "expected a string or an object");
  std::string kind = j.contains("kind") ? need_string(j["kind"], path + ".kind") : "linear";
  if (kind == "linear") return Schedule::linear();
  if (kind == "geometric") {
    double alpha = j.contains("alpha") ? need_number(j["alpha"], path + ".alpha") : 2.0;
    if (!(alpha > 1.0)) bad_field(path + ".alpha", "geometric schedule needs alpha > 1");
    return Schedule::geometric(alpha);
  }
  if (kind == "custom") {
    if (!j.contains("radii") || !j["radii"].is_array())
      bad_field(path + ".radii", "expected an array of positive radii");
    std::vector<double> radii;
    for (std::size_t i = 0; i < j["radii"].size(); ++i)
      radii.push_back(
          positive_number(j["radii"][i], path + ".radii[" + std::to_string(i) + "]"));
    return Schedule::with_radii(std::move(radii));
  }
  bad_field(path + ".kind", "unknown schedule \"" + kind + "\"");
}

CounterexampleParams parse_counterexample(const json& j) {
  const std::string base = "counterexample";
  if (!j.is_object()) bad_field(base, "expected an object");
  CounterexampleParams p;
  if (j.contains("variant")) {
    std::string v = need_string(j["variant"], base + ".variant");
    if (v == "tangent") p.config.variant = Variant::Tangent;
    else if (v == "opposite") p.config.variant = Variant::Opposite;
    else bad_field(base + ".variant", "expected \"tangent\" or \"opposite\"");
  }
  if (j.contains("schedule")) p.config.schedule = parse_schedule(j["schedule"], base + ".schedule");
  p.config.n_max = j.contains("n_max") ? need_int(j["n_max"], base + ".n_max") : 10;
  if (p.config.n_max < 1) bad_field(base + ".n_max", "must be at least 1");
  if (j.contains("D")) p.D = need_number(j["D"], base + ".D");
  if (j.contains("R")) p.R = need_number(j["R"], base + ".R");
  if (j.contains("max_word_len")) {
    p.max_word_len = need_int(j["max_word_len"], base + ".max_word_len");
    if (p.max_word_len < 0) bad_field(base + ".max_word_len", "must be nonnegative");
  }
  if (j.contains("out")) p.out = need_string(j["out"], base + ".out");
  return p;
}

RunConfig parse_run_config(const json& j) {
  if (!j.is_object()) throw error(errc::schema_violation, "config root: expected an object");
  RunConfig cfg;
  for (const auto& [key, value] : j.items()) {
    if (key == "tolerance") {
      cfg.tolerance_override = positive_number(value, "tolerance");
    } else if (key == "counterexample") {
      cfg.counterexample = parse_counterexample(value);
    } else if (key == "census") {
      CensusParams p;
      if (!value.is_object()) bad_field("census", "expected an object");
      if (!value.contains("spec")) bad_field("census.spec", "missing spec path");
      p.spec_path = need_string(value["spec"], "census.spec");
      if (value.contains("D")) p.D = need_number(value["D"], "census.D");
      if (value.contains("R")) p.R = need_number(value["R"], "census.R");
      if (value.contains("max_word_len"))
        p.max_word_len = need_int(value["max_word_len"], "census.max_word_len");
      if (value.contains("out")) p.out = need_string(value["out"], "census.out");
      cfg.census = p;
    } else if (key == "orbit") {
      OrbitParams p;
      if (!value.is_object()) bad_field("orbit", "expected an object");
      if (!value.contains("spec")) bad_field("orbit.spec", "missing spec path");
      p.spec_path = need_string(value["spec"], "orbit.spec");
      if (value.contains("max_word_len"))
        p.max_word_len = need_int(value["max_word_len"], "orbit.max_word_len");
      if (value.contains("out")) p.out = need_string(value["out"], "orbit.out");
      cfg.orbit = p;
    } else if (key == "lemmas") {
      LemmasParams p;
      if (!value.is_object()) bad_field("lemmas", "expected an object");
      if (value.contains("which")) {
        p.which = need_string(value["which"], "lemmas.which");
        if (p.which != "thin" && p.which != "reciprocal" && p.which != "inner" &&
            p.which != "flow")
          bad_field("lemmas.which", "expected thin|reciprocal|inner|flow");
      }
      if (value.contains("samples")) {
        if (!value["samples"].is_number_integer()) bad_field("lemmas.samples", "expected an integer");
        p.samples = value["samples"].get<long long>();
        if (p.samples < 1) bad_field("lemmas.samples", "must be at least 1");
      }
      if (value.contains("seed")) {
        if (!value["seed"].is_number_integer()) bad_field("lemmas.seed", "expected an integer");
        p.seed = value["seed"].get<std::uint64_t>();
      }
      if (value.contains("alpha0")) p.alpha0 = positive_number(value["alpha0"], "lemmas.alpha0");
      if (value.contains("k")) p.k = positive_number(value["k"], "lemmas.k");
      if (value.contains("out")) p.out = need_string(value["out"], "lemmas.out");
      cfg.lemmas = p;
    } else if (key == "render") {
      RenderParams p;
      if (!value.is_object()) bad_field("render", "expected an object");
      if (!value.contains("spec")) bad_field("render.spec", "missing spec path");
      p.spec_path = need_string(value["spec"], "render.spec");
      if (value.contains("model")) {
        p.model = need_string(value["model"], "render.model");
        if (p.model != "halfplane" && p.model != "disk")
          bad_field("render.model", "expected halfplane|disk");
      }
      if (value.contains("xmin")) p.viewport.xmin = need_number(value["xmin"], "render.xmin");
      if (value.contains("xmax")) p.viewport.xmax = need_number(value["xmax"], "render.xmax");
      if (value.contains("ycap")) p.viewport.ycap = positive_number(value["ycap"], "render.ycap");
      if (p.viewport.xmin >= p.viewport.xmax) bad_field("render.xmin", "xmin must be below xmax");
      if (value.contains("orbit_len")) p.orbit_len = need_int(value["orbit_len"], "render.orbit_len");
      if (value.contains("out")) p.out = need_string(value["out"], "render.out");
      cfg.render = p;
    } else if (key == "flow") {
      FlowParams p;
      if (!value.is_object()) bad_field("flow", "expected an object");
      auto endpoint = [&](const char* name, double& val, bool& inf) {
        if (!value.contains(name)) return;
        const json& e = value[name];
        if (e.is_string() && e.get<std::string>() == "inf") {
          inf = true;
        } else {
          val = need_number(e, std::string("flow.") + name);
          inf = false;
        }
      };
      endpoint("vminus", p.vminus, p.vminus_infinite);
      endpoint("vplus", p.vplus, p.vplus_infinite);
      if (value.contains("base")) {
        const json& b = value["base"];
        if (!b.is_array() || b.size() != 2) bad_field("flow.base", "expected [x, y]");
        p.base.x = need_number(b[0], "flow.base[0]");
        p.base.y = positive_number(b[1], "flow.base[1]");
      }
      auto steps = [&](const char* name, std::vector<double>& dst) {
        if (!value.contains(name)) return;
        const json& arr = value[name];
        if (!arr.is_array()) bad_field(std::string("flow.") + name, "expected an array");
        for (std::size_t i = 0; i < arr.size(); ++i)
          dst.push_back(need_number(arr[i], std::string("flow.") + name + "[" +
                                                std::to_string(i) + "]"));
      };
      steps("t_steps", p.t_steps);
      steps("s_steps", p.s_steps);
      if (value.contains("out")) p.out = need_string(value["out"], "flow.out");
      cfg.flow = p;
    } else {
      bad_field(key, "unknown section");
    }
  }
  return cfg;
}

}  // namespace

RunConfig parse_config(const std::string& path) {
  return parse_run_config(read_json_file(path));
}

RunConfig parse_config_string(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw error(errc::schema_violation, "malformed JSON");
  return parse_run_config(j);
}

SchottkySpec parse_schottky_spec_string(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw error(errc::schema_violation, "malformed JSON");
  return parse_schottky_spec(j, "");
}

SchottkySpec load_schottky_spec(const std::string& path) {
  return parse_schottky_spec(read_json_file(path), "");
}

}  // namespace horokit
