#pragma once

#include <string>
#include <variant>
#include <vector>

#include "horokit/criteria.hpp"

namespace horokit {

// Drawables carry a style class emitted as the SVG class attribute.
struct GeodesicArc {
  Geodesic g;
  std::string cls = "geodesic";
};
struct Dots {
  std::vector<Point> points;
  std::string cls = "orbit";
};
struct HoroballShape {
  Horoball ball;
  std::string cls = "horoball";
};
struct HorocycleArc {
  Frame frame;
  double s0 = 0.0;
  double s1 = 1.0;
  std::string cls = "horocycle";
};
struct FrameArrow {
  Frame frame;
  std::string cls = "frame";
};

using Drawable = std::variant<GeodesicArc, Dots, HoroballShape, HorocycleArc, FrameArrow>;

struct Scene {
  std::vector<Drawable> items;
};

enum class Model { HalfPlane, Disk };

// Defaults cover the paired-circle families to depth 10 of the linear
// schedule (minus circles down to -110).
struct Viewport {
  double xmin = -120.0;
  double xmax = 24.0;
  double ycap = 12.0;  // half-plane y ceiling
};

// Scene with the paired circles, generator axes, and the orbit of o.
Scene scene_from_schottky(const SchottkySpec& spec, int orbit_len = 2);

std::string render_svg_string(const Scene& scene, Model model, const Viewport& vp = Viewport{});

// Valid SVG 1.1; geodesics emitted as circular arc paths (class attributes
// name the drawable kind). Disk model converts every drawable through the
// Cayley map. Throws errc::empty_scene / errc::io_error.
void render_svg(const Scene& scene, const std::string& path, Model model,
                const Viewport& vp = Viewport{});

}  // namespace horokit
