#pragma once

#include "horokit/criteria.hpp"

namespace horokit {

// Radius schedule r_1, r_2, ... for the paired semicircles.
struct Schedule {
  enum class Kind { Linear, Geometric, Custom };
  Kind kind = Kind::Linear;
  double alpha = 2.0;                 // Geometric: r_k = alpha^k, alpha > 1
  std::vector<double> custom;         // Custom: explicit radii, 1-based as custom[k-1]

  static Schedule linear() { return Schedule{}; }
  static Schedule geometric(double alpha);
  static Schedule with_radii(std::vector<double> radii);

  double radius(int k) const;
};

enum class Variant { Tangent, Opposite };

struct CounterexampleConfig {
  Variant variant = Variant::Tangent;
  Schedule schedule;
  int n_max = 1;
};

struct RowReport {
  int n = 0;
  double x_n = 0.0;
  double r_n = 0.0;
  Point P_n;              // axis crossing of the plus circle
  Point N_n;              // axis crossing of the minus circle
  double ell_n = 0.0;     // translation length of gamma_n
  double im_gamma_o = 0.0;  // ordinate of gamma_n · o, matrix-computed
  double d_o_zn = 0.0;
  double d_Pn_zn = 0.0;
  double theta_n = 0.0;   // crossing angle with the imaginary axis
};

// Center abscissa of the minus circle is -x_n, from the tangency identity
// x_n + r_n = 2 sum_{k<=n} r_k. Exact integer arithmetic for the linear
// schedule (x_n = n^2).
double x_sequence(const Schedule& schedule, int n);

// Plus-circle data: Tangent has centers 2n+1 radius 1, Opposite has centers
// x_n radius 1. Minus circles sit at -x_n with radius r_n in both variants.
PairedCircle plus_circle(const CounterexampleConfig& config, int n);
PairedCircle minus_circle(const CounterexampleConfig& config, int n);

// Axis of gamma_n: (2n+1, -x_n) for Tangent, (x_n, -x_n) for Opposite,
// repelling endpoint on the plus side.
Geodesic axis_of(const CounterexampleConfig& config, int n);

// Builds the truncated Schottky family. gamma_n is the translation along
// the axis with the smallest multiplier mapping the closed exterior of the
// plus disk into the closed minus disk (internally tangent at one ideal
// point); an exact circle-onto-circle pairing with this axis does not exist.
// Throws errc::ping_pong_failed naming the first offending pair if the
// resulting disks fail certification.
SchottkySpec build(const CounterexampleConfig& config);

struct SpecialPoints {
  Point P;  // axis ∩ plus circle
  Point N;  // axis ∩ minus circle
  Point z;  // (2n+1, 1)
};

// Crossing points solved independently from the circle equations.
// Throws errc::index_out_of_range for n outside 1..n_max.
SpecialPoints special_points(const CounterexampleConfig& config, int n);

std::vector<RowReport> report(const CounterexampleConfig& config);

// Acute angle between the imaginary axis and the axis of gamma_n.
double crossing_angle(const CounterexampleConfig& config, int n);

enum class CertStatus { Certified, WithheldNoDepth, MinusSideOccupied };

struct OneSidedness {
  Census census;
  CertStatus status = CertStatus::WithheldNoDepth;
  // max over enumerated orbit points of busemann(v-, basepoint(v), p):
  // the largest D at which the half-horoball census can be nonempty.
  double attained_depth = 0.0;
};

// Census against the backward-vertical frame v with v- = infinity,
// v+ = 0, based at o. Certified when minus_count = 0 and plus_count >= 1.
OneSidedness one_sidedness_certificate(const CounterexampleConfig& config, double D, double R,
                                       int max_len);

}  // namespace horokit
