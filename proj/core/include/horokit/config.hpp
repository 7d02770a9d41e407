#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "horokit/counterexample.hpp"
#include "horokit/scene.hpp"

namespace horokit {

// One config schema shared by all subcommands, with per-subcommand sections.
// Unknown keys are rejected; missing optionals get documented defaults.

struct CounterexampleParams {
  CounterexampleConfig config;
  double D = 1.0;
  double R = 1.0;
  int max_word_len = 2;
  std::string out = "report.csv";
};

struct CensusParams {
  std::string spec_path;  // SchottkySpec JSON
  double D = 1.0;
  double R = 1.0;
  int max_word_len = 3;
  std::string out = "census.csv";
};

struct OrbitParams {
  std::string spec_path;
  int max_word_len = 3;
  std::string out = "orbit.csv";
};

struct LemmasParams {
  std::string which = "thin";  // thin | reciprocal | inner | flow
  long long samples = 10000;
  std::uint64_t seed = 42;
  double alpha0 = M_PI / 2.0;
  double k = 1.0;  // reciprocal lemma parameter
  std::string out = "lemmas.csv";
};

struct RenderParams {
  std::string spec_path;
  std::string model = "halfplane";  // halfplane | disk
  Viewport viewport;
  int orbit_len = 2;
  std::string out = "scene.svg";
};

struct FlowParams {
  // Frame given by endpoints and basepoint; steps alternate g^t / h^s.
  double vminus = 0.0;  // NaN encodes infinity on ingestion
  bool vminus_infinite = false;
  double vplus = 0.0;
  bool vplus_infinite = true;
  Point base{0.0, 1.0};
  std::vector<double> t_steps;
  std::vector<double> s_steps;
  std::string out = "flow.csv";
};

struct RunConfig {
  double tolerance_override = 0.0;  // 0: keep ambient tolerance
  std::optional<CounterexampleParams> counterexample;
  std::optional<CensusParams> census;
  std::optional<OrbitParams> orbit;
  std::optional<LemmasParams> lemmas;
  std::optional<RenderParams> render;
  std::optional<FlowParams> flow;
};

// Throws errc::file_not_found / errc::schema_violation (message carries the
// offending field path, e.g. "counterexample.schedule.alpha").
RunConfig parse_config(const std::string& path);
RunConfig parse_config_string(const std::string& text);

// SchottkySpec JSON: {"pairs": [{"plus": {"center", "radius"}, "minus":
// {...}, "matrix": [a,b,c,d]} ...]}; "derive": {"p", "q"} builds gamma via
// pairing_isometry on the paired circles instead of an explicit matrix.
SchottkySpec parse_schottky_spec_string(const std::string& text);
SchottkySpec load_schottky_spec(const std::string& path);

}  // namespace horokit
