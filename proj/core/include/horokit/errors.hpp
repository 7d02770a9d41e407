#pragma once

#include <stdexcept>
#include <string>

namespace horokit {

enum class errc {
  no_intersection,
  is_identity,
  not_hyperbolic,
  degenerate_axis,
  axis_miss,
  degenerate_length,
  off_geodesic,
  ping_pong_unverified,
  ping_pong_failed,
  max_steps_exceeded,
  index_out_of_range,
  bisection_failure,
  root_search_failure,
  empty_targets,
  empty_scene,
  file_not_found,
  schema_violation,
  io_error,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

// Ambient tolerance for geometric predicates. Defaults to 1e-9; the
// HOROKIT_TOL environment variable overrides it at first use.
double tolerance();
void set_tolerance(double tol);

}  // namespace horokit
