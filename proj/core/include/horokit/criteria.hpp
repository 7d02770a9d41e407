#pragma once

#include "horokit/flows.hpp"
#include "horokit/schottky.hpp"

namespace horokit {

enum class Side { Plus, Minus };

struct Census {
  double depth = 0.0;   // D
  double width = 0.0;   // R
  int max_len = 0;
  long long plus_count = 0;
  long long minus_count = 0;
};

// Coordinates of f^-1 · p: the frame-normalized chart in which f sits at i
// pointing up, with v- at 0. Side tests read off the sign of u.
struct NormalizedCoords {
  double u = 0.0;
  double w = 1.0;  // > 0
};

NormalizedCoords normalized_coords(const Frame& f, const Point& p);

// Horoball based at v- through the basepoint of v.
Horoball horoball_of(const Frame& v);

// Membership in the closed half-horoball Hor^{side}(g^{-D} v).
// Normalizes by (v.m a_{-D})^{-1}: the image q must satisfy Im q >= |q|^2
// (the horoball based at 0 through i) with Re q >= 0 for Plus, Re q <= 0
// for Minus. Closed conditions: the dividing ray counts for both sides.
bool in_horoball_half(const Frame& v, double D, const Point& p, Side side);

// p lies in the horoball of v within hyperbolic distance alpha of the
// backward ray (g^{-t} v)_{t>=0}; inside the horoball the nearest point of
// the full geodesic is automatically on the ray.
bool in_cone(const Frame& v, double alpha, const Point& p);

// Count of the given points in Hor^{+-}(g^{-D}v) minus the cone C(v, R).
Census census_over_points(const std::vector<OrbitPoint>& points, const Frame& v, double D,
                          double R, int max_len);

// Count in the full horoball Hor(g^{-D}v) minus the cone, both halves
// together; equals plus_count + minus_count except for points on the
// dividing ray, which the halves both claim.
long long full_horoball_count(const std::vector<OrbitPoint>& points, const Frame& v, double D,
                              double R);

// Same over the orbit of o = (0,1) under reduced words of length <= max_len.
Census census(const SchottkySpec& spec, const Frame& v, double D, double R, int max_len);

// Grid times t in [0, t_max] (step 0.1) at which some enumerated orbit point
// lies within R0 of the basepoint of g^{-t} v.
std::vector<double> radial_witnesses(const SchottkySpec& spec, const Frame& v, double R0,
                                     double t_max, int max_len);

// max over targets w of min over sampled s and enumerated words g of
// frame_dist(h^s v, g·w). Decreasing upper-bound proxy for non-density.
double density_gap(const SchottkySpec& spec, const Frame& v, const std::vector<Frame>& targets,
                   std::pair<double, double> s_range, int s_steps, int max_len);

}  // namespace horokit
