#pragma once

#include <optional>
#include <string>
#include <vector>

#include "horokit/mobius.hpp"

namespace horokit {

// Geodesic semicircle centered on the real axis together with the closed
// Euclidean disk it bounds.
struct PairedCircle {
  double center = 0.0;
  double radius = 1.0;

  double left() const { return center - radius; }
  double right() const { return center + radius; }
  Geodesic geodesic() const {
    return Geodesic(BoundaryPoint::real(left()), BoundaryPoint::real(right()));
  }
  bool contains_open(const Point& p) const {
    double dx = p.x - center;
    return dx * dx + p.y * p.y < radius * radius;
  }
};

struct SchottkyPair {
  PairedCircle plus;
  PairedCircle minus;
  Mobius gamma;  // maps the closed exterior of the plus disk into the minus disk
};

struct SchottkySpec {
  std::vector<SchottkyPair> pairs;
};

struct PingPongViolation {
  enum class Kind { OverlappingDisks, CircleImageNotContained, ExteriorOrientation };
  Kind kind;
  int pair_a = -1;      // 1-based pair index
  int pair_b = -1;      // second pair for disk overlaps, -1 otherwise
  double witness = 0.0; // offending boundary abscissa
  std::string message;
};

struct PingPongResult {
  bool certified = false;
  std::vector<PingPongViolation> violations;
};

// Certificate iff (a) all 2k open disks are pairwise disjoint (tangency
// allowed) and (b) each gamma maps the closed exterior of its plus disk into
// the closed minus disk, checked through the image circle of the plus circle
// and the image of infinity. Violations name the failing pair(s) and a
// witness abscissa.
PingPongResult verify_ping_pong(const SchottkySpec& spec);

// Reduced word in the generators: letters are +-(pair index + 1); +j is
// gamma_j, -j its inverse.
struct Word {
  std::vector<int> letters;

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }
};

Mobius evaluate(const SchottkySpec& spec, const Word& w);

struct OrbitPoint {
  Point point;
  Word word;
};

// All reduced words of length <= max_len applied to o = (0, 1), in
// breadth-first order with letters ordered +1, -1, +2, -2, ...
// Throws errc::ping_pong_unverified when the spec fails certification.
std::vector<OrbitPoint> enumerate_orbit(const SchottkySpec& spec, int max_len);

// Number of reduced words of length <= max_len over k generator pairs.
long long reduced_word_count(int k, int max_len);

// Fundamental-domain representative: returns (x, w) with x outside every
// open disk and apply(evaluate(w), x) = p. Scans disks in index order (plus
// before minus) and strips one letter per step. Points in a pairing slack
// region (inside a minus disk but outside the image of the paired exterior)
// have no such representative; the strip oscillates and MaxStepsExceeded is
// thrown, as it is when the step budget runs out near tangency points.
std::pair<Point, Word> reduce_point(const SchottkySpec& spec, const Point& p,
                                    int max_steps = 256);

// Attracting fixed points of all nonempty reduced words of length <= max_len,
// in enumeration order.
std::vector<BoundaryPoint> sample_limit_set(const SchottkySpec& spec, int max_len);

// Supremum and infimum of the finite limit-set sample abscissas.
// Requires max_len >= 1.
std::pair<double, double> one_sided_accumulation(const SchottkySpec& spec, int max_len);

}  // namespace horokit
