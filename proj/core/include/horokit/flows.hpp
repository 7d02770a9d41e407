#pragma once

#include "horokit/mobius.hpp"

namespace horokit {

// Unit tangent vector, encoded as the PSL(2,R) element carrying the
// reference frame to it: basepoint m·i, v- = m·0, v+ = m·infinity.
// The reference frame sits at i pointing up (toward infinity).
struct Frame {
  Mobius m;

  Frame() = default;
  explicit Frame(const Mobius& mm) : m(mm) {}
};

Point basepoint(const Frame& f);
// (v-, v+) = (m·0, m·infinity).
std::pair<BoundaryPoint, BoundaryPoint> endpoints(const Frame& f);
// Euclidean angle of the vector's direction at its basepoint.
double direction(const Frame& f);

// f · a_t: moves the basepoint distance |t| along the geodesic, toward v+
// for t > 0.
Frame geodesic_flow(const Frame& f, double t);

// f · n_s: moves distance |s| along the strong unstable horocycle,
// preserving v-.
Frame horocycle_flow(const Frame& f, double s);

// Unique frame with the given endpoints and basepoint; the basepoint must
// lie on the geodesic (minus, plus) within tolerance (errc::off_geodesic).
Frame frame_from_endpoints(const BoundaryPoint& minus, const BoundaryPoint& plus,
                           const Point& base);

// Base distance plus direction gap:
//   frame_dist(f, g) = dist(pi f, pi g) + (tau(f^-1 g) + tau(g^-1 f))/2,
// tau(m) = 2|arg(c i + d)| — the rotation the relative frame applies to the
// upward direction at i. Symmetric, vanishes iff f = g, left-invariant, and
// equivalent to the Riemannian metric on compact sets.
double frame_dist(const Frame& f, const Frame& g);

}  // namespace horokit
