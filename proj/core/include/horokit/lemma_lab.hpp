#pragma once

#include <array>
#include <cstdint>

#include "horokit/flows.hpp"

namespace horokit {

// Empirical constant as a running extremum over a seeded sample stream.
struct ConstantEstimate {
  double parameter = 0.0;
  double estimate = 0.0;
  long long samples = 0;
  std::uint64_t seed = 0;
};

// C(alpha0) estimate: max over sampled triangles with vertex angle >= alpha0
// of max(defect d(a,b)+d(a,c)-d(b,c), d(a,[b,c])). Sample 0 is the
// deterministic extremal ideal wedge at angle exactly alpha0 (side distance
// arccosh(1/sin(alpha0/2)), computed exactly); random samples mix finite
// legs (log-uniform lengths in [0.1, 20]) and ideal legs (exact geodesic for
// the side distance, surrogate points at distance 30 for the defect).
ConstantEstimate estimate_thin_constant(double alpha0, long long samples, std::uint64_t seed);

struct ReciprocalReport {
  double k = 0.0;
  double alpha_hat = 0.0;   // minimal vertex angle over accepted samples
  double d_hat = 0.0;       // side-length threshold, fixed at 2k + 1
  double c_hat = 0.0;       // fitted defect constant C(k)
  long long violations = 0; // samples breaking d(a,b)+d(a,c)-c_hat <= d(b,c)
  long long excluded = 0;   // samples with d(b,c) < d_hat (diagnostics only)
  long long samples = 0;
  std::uint64_t seed = 0;
};

// Triangles with d(a, [b,c]) <= k: reports the minimal vertex angle over
// samples with d(b,c) >= d_hat and checks the corrected sandwich
// d(a,b)+d(a,c)-C(k) <= d(b,c) with C(k) fitted as the running maximum.
ReciprocalReport verify_reciprocal(double k, long long samples, std::uint64_t seed);

struct InnerTriangle {
  Point alpha;  // on (xi, q]
  Point beta;   // on (xi, p]
  Point gamma;  // on [p, q]
};

// The inner-triangle construction for busemann(xi, p, q) = 0: gamma on
// [p,q] with d(alpha,q) = d(gamma,q), d(beta,p) = d(gamma,p) and
// busemann(xi, alpha, beta) = 0, found by bisection in the position of
// gamma. Throws errc::bisection_failure if no root is bracketed.
InnerTriangle inner_triangle_for(const BoundaryPoint& xi, const Point& p, const Point& q);

struct InnerTriangleReport {
  ConstantEstimate delta_hat;  // max pairwise distance among alpha, beta, gamma
  double max_chain_deviation = 0.0;  // worst |d(p,q) - 2 d(..)| over the four equalities
  long long degenerate = 0;          // samples with p ~ q, contribute 0
  long long samples = 0;
  std::uint64_t seed = 0;
};

InnerTriangleReport verify_inner_triangle(long long samples, std::uint64_t seed);

struct FlowLemmaReport {
  double alpha0 = 0.0;
  long long samples_used = 0;
  long long skipped = 0;          // no orthogonal w in the search window, or
                                  // the crossing misses the backward ray
  double max_d_iv_iw = 0.0;       // max d(I_v, I_w) over accepted samples
  double worst_upper_slack = 0.0; // max of d(y_n, ray) - (d(y0,x0)+d(x_n,I)); <= 0 up to fp
  double c2_hat = 0.0;            // fitted C_2(alpha0): max lower-sandwich deficit
  std::array<double, 4> c2_by_threshold{};  // fitted over samples with
                                            // min(d(x_n,I_w), d(x_n,I_v)) >= {0,1,2,4}
  std::uint64_t seed = 0;
};

// Samples (v ray, axis crossing at angle >= alpha0, w on v's horocycle with
// orthogonal crossing found by root search in s) and checks both sandwich
// inequality families with empirically fitted constants.
FlowLemmaReport verify_flow_lemmas(double alpha0, long long samples, std::uint64_t seed);

}  // namespace horokit
