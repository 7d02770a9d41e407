#include "horokit/scene.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <optional>

#include "horokit/csv.hpp"

namespace horokit {

Scene scene_from_schottky(const SchottkySpec& spec, int orbit_len) {
  Scene scene;
  scene.items.push_back(
      GeodesicArc{Geodesic(BoundaryPoint::real(0.0), BoundaryPoint::infinity()), "axis"});
  for (const SchottkyPair& pair : spec.pairs) {
    scene.items.push_back(GeodesicArc{pair.plus.geodesic(), "geodesic"});
    scene.items.push_back(GeodesicArc{pair.minus.geodesic(), "geodesic"});
  }
  Dots dots;
  for (const OrbitPoint& op : enumerate_orbit(spec, orbit_len)) dots.points.push_back(op.point);
  scene.items.push_back(dots);
  return scene;
}

namespace {

struct V2 {
  double x, y;
};

std::optional<std::array<double, 3>> circumcircle(V2 a, V2 b, V2 c) {
  double d = 2.0 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
  double scale = std::abs(a.x) + std::abs(a.y) + std::abs(b.x) + std::abs(b.y) + 1.0;
  if (std::abs(d) < 1e-12 * scale * scale) return std::nullopt;
  double a2 = a.x * a.x + a.y * a.y;
  double b2 = b.x * b.x + b.y * b.y;
  double c2 = c.x * c.x + c.y * c.y;
  double ux = (a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d;
  double uy = (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d;
  double r = std::hypot(a.x - ux, a.y - uy);
  return std::array<double, 3>{ux, uy, r};
}

double mod_2pi(double a) {
  while (a < 0.0) a += 2.0 * M_PI;
  while (a >= 2.0 * M_PI) a -= 2.0 * M_PI;
  return a;
}

class SvgWriter {
 public:
  SvgWriter(Model model, const Viewport& vp) : model_(model), vp_(vp) {
    if (model_ == Model::HalfPlane) {
      stroke_ = (vp_.xmax - vp_.xmin) / 400.0;
      dot_ = 2.0 * stroke_;
    } else {
      stroke_ = 0.006;
      dot_ = 0.012;
    }
  }

  V2 plot(const Point& p) const {
    if (model_ == Model::HalfPlane) return {p.x, vp_.ycap - p.y};
    auto z = halfplane_to_disk(p);
    return {z.real(), -z.imag()};
  }
  V2 plot_boundary(const BoundaryPoint& b) const {
    if (model_ == Model::HalfPlane) {
      // callers only pass finite boundary points in this model
      return {b.value(), vp_.ycap};
    }
    auto z = halfplane_to_disk(b);
    return {z.real(), -z.imag()};
  }

  void line(V2 a, V2 b, const std::string& cls) {
    body_ += "<line class=\"" + cls + "\" x1=\"" + format_double(a.x) + "\" y1=\"" +
             format_double(a.y) + "\" x2=\"" + format_double(b.x) + "\" y2=\"" +
             format_double(b.y) + "\"/>\n";
  }

  void circle(V2 c, double r, const std::string& cls) {
    body_ += "<circle class=\"" + cls + "\" cx=\"" + format_double(c.x) + "\" cy=\"" +
             format_double(c.y) + "\" r=\"" + format_double(r) + "\"/>\n";
  }

  void dot(V2 c, const std::string& cls) { circle(c, dot_, cls + " dot"); }

  // Circular arc from s to e passing through m.
  void arc(V2 s, V2 e, V2 m, const std::string& cls) {
    auto cc = circumcircle(s, e, m);
    if (!cc) {
      line(s, e, cls);
      return;
    }
    auto [cx, cy, r] = *cc;
    double a1 = std::atan2(s.y - cy, s.x - cx);
    double a2 = std::atan2(e.y - cy, e.x - cx);
    double am = std::atan2(m.y - cy, m.x - cx);
    double d_se = mod_2pi(a2 - a1);
    double d_sm = mod_2pi(am - a1);
    int sweep = d_sm <= d_se ? 1 : 0;
    double delta = sweep ? d_se : 2.0 * M_PI - d_se;
    int large = delta > M_PI ? 1 : 0;
    body_ += "<path class=\"" + cls + "\" d=\"M " + format_double(s.x) + " " +
             format_double(s.y) + " A " + format_double(r) + " " + format_double(r) + " 0 " +
             std::to_string(large) + " " + std::to_string(sweep) + " " + format_double(e.x) +
             " " + format_double(e.y) + "\"/>\n";
  }

  void polyline(const std::vector<V2>& pts, const std::string& cls) {
    body_ += "<polyline class=\"" + cls + "\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) body_ += ' ';
      body_ += format_double(pts[i].x) + "," + format_double(pts[i].y);
    }
    body_ += "\"/>\n";
  }

  std::string finish() const {
    std::string view;
    double w, h;
    if (model_ == Model::HalfPlane) {
      w = vp_.xmax - vp_.xmin;
      h = vp_.ycap;
      view = format_double(vp_.xmin) + " 0 " + format_double(w) + " " + format_double(h);
    } else {
      w = h = 2.2;
      view = "-1.1 -1.1 2.2 2.2";
    }
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" + view +
           "\" width=\"800\" height=\"" + format_double(800.0 * h / w) + "\">\n";
    out += "<style>path,line,polyline,circle{fill:none;stroke:#333;stroke-width:" +
           format_double(stroke_) +
           "}.axis{stroke:#888}.geodesic{stroke:#1f77b4}.horoball{stroke:#2ca02c}"
           ".horocycle{stroke:#d62728}.frame{stroke:#9467bd}.dot{fill:#ff7f0e;stroke:none}"
           ".boundary{stroke:#000}</style>\n";
    out += body_;
    out += "</svg>\n";
    return out;
  }

  Model model() const { return model_; }
  const Viewport& viewport() const { return vp_; }

 private:
  Model model_;
  Viewport vp_;
  double stroke_, dot_;
  std::string body_;
};

// Interior point used as the third sample of an arc: the point of g closest
// to i, always well inside the model.
Point arc_midpoint(const Geodesic& g) { return foot_on_geodesic(Point{0.0, 1.0}, g); }

void draw_geodesic(SvgWriter& w, const Geodesic& g, const std::string& cls) {
  if (w.model() == Model::HalfPlane) {
    double ycap = w.viewport().ycap;
    if (g.is_vertical()) {
      double x = g.foot();
      w.line({x, ycap}, {x, 0.0}, cls);  // plot coords: the real axis is y = ycap
      return;
    }
    w.arc({g.center() - g.radius(), ycap}, {g.center() + g.radius(), ycap},
          {g.center(), ycap - g.radius()}, cls);
    return;
  }
  V2 s = w.plot_boundary(g.e1);
  V2 e = w.plot_boundary(g.e2);
  w.arc(s, e, w.plot(arc_midpoint(g)), cls);
}

void draw_horoball(SvgWriter& w, const Horoball& h, const std::string& cls) {
  if (w.model() == Model::HalfPlane && h.base.is_infinity()) {
    double y = h.anchor.y;
    w.line(w.plot(Point{w.viewport().xmin, y}), w.plot(Point{w.viewport().xmax, y}), cls);
    return;
  }
  // Three points of the bounding horocycle, circumcircled in plot space.
  std::array<Point, 3> pts;
  if (h.base.is_infinity()) {
    pts = {Point{h.anchor.x - 1.0, h.anchor.y}, h.anchor, Point{h.anchor.x + 1.0, h.anchor.y}};
  } else {
    double xi = h.base.value();
    double dx = h.anchor.x - xi;
    double rho = (dx * dx + h.anchor.y * h.anchor.y) / (2.0 * h.anchor.y);
    pts = {Point{xi, 2.0 * rho}, Point{xi + rho, rho}, Point{xi - rho, rho}};
  }
  auto cc = circumcircle(w.plot(pts[0]), w.plot(pts[1]), w.plot(pts[2]));
  if (cc) {
    w.circle({(*cc)[0], (*cc)[1]}, (*cc)[2], cls);
  } else {
    w.line(w.plot(pts[0]), w.plot(pts[2]), cls);
  }
}

}  // namespace

std::string render_svg_string(const Scene& scene, Model model, const Viewport& vp) {
  if (scene.items.empty()) throw error(errc::empty_scene, "render_svg: empty scene");
  SvgWriter writer(model, vp);

  // Model boundary first.
  if (model == Model::Disk) {
    writer.circle({0.0, 0.0}, 1.0, "boundary");
  } else {
    writer.line({vp.xmin, vp.ycap}, {vp.xmax, vp.ycap}, "boundary");  // the real axis
  }

  for (const Drawable& item : scene.items) {
    if (const auto* g = std::get_if<GeodesicArc>(&item)) {
      draw_geodesic(writer, g->g, g->cls);
    } else if (const auto* d = std::get_if<Dots>(&item)) {
      for (const Point& p : d->points) writer.dot(writer.plot(p), d->cls);
    } else if (const auto* hb = std::get_if<HoroballShape>(&item)) {
      draw_horoball(writer, hb->ball, hb->cls);
    } else if (const auto* hc = std::get_if<HorocycleArc>(&item)) {
      std::vector<V2> pts;
      const int kSteps = 64;
      for (int i = 0; i <= kSteps; ++i) {
        double s = hc->s0 + (hc->s1 - hc->s0) * i / kSteps;
        pts.push_back(writer.plot(basepoint(horocycle_flow(hc->frame, s))));
      }
      writer.polyline(pts, hc->cls);
    } else if (const auto* fa = std::get_if<FrameArrow>(&item)) {
      Point base = basepoint(fa->frame);
      Point tip = geodesic_step(base, direction(fa->frame), 0.3);
      writer.line(writer.plot(base), writer.plot(tip), fa->cls);
    }
  }
  return writer.finish();
}

void render_svg(const Scene& scene, const std::string& path, Model model, const Viewport& vp) {
  std::string body = render_svg_string(scene, model, vp);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw error(errc::io_error, "cannot open for writing: " + path);
  f.write(body.data(), static_cast<std::streamsize>(body.size()));
  if (!f) throw error(errc::io_error, "write failed: " + path);
}

}  // namespace horokit
