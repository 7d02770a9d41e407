#include "horokit/schottky.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace horokit {

namespace {

const Point kOrigin{0.0, 1.0};

void require_certified(const SchottkySpec& spec) {
  PingPongResult r = verify_ping_pong(spec);
  if (!r.certified) {
    std::string msg = "ping-pong certification failed";
    if (!r.violations.empty()) msg += ": " + r.violations.front().message;
    throw error(errc::ping_pong_unverified, msg);
  }
}

// Letter l in {+-1, ..., +-k} to its Mobius element.
Mobius letter_mobius(const SchottkySpec& spec, int l) {
  const SchottkyPair& pair = spec.pairs.at(static_cast<std::size_t>(std::abs(l)) - 1);
  return l > 0 ? pair.gamma : pair.gamma.inverse();
}

// Breadth-first over reduced words, letters ordered +1, -1, +2, -2, ...
// fn(word, matrix) is called once per nonempty word; the empty word is the
// caller's responsibility.
template <typename Fn>
void for_each_reduced_word(const SchottkySpec& spec, int max_len, Fn&& fn) {
  int k = static_cast<int>(spec.pairs.size());
  std::vector<int> alphabet;
  for (int j = 1; j <= k; ++j) {
    alphabet.push_back(j);
    alphabet.push_back(-j);
  }
  struct Node {
    Word word;
    Mobius m;
  };
  std::vector<Node> level{{Word{}, Mobius::identity()}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Node> next;
    next.reserve(level.size() * alphabet.size());
    for (const Node& node : level) {
      for (int l : alphabet) {
        if (!node.word.empty() && node.word.letters.back() == -l) continue;
        Node child{node.word, node.m * letter_mobius(spec, l)};
        child.word.letters.push_back(l);
        fn(child.word, child.m);
        next.push_back(std::move(child));
      }
    }
    level = std::move(next);
  }
}

}  // namespace

PingPongResult verify_ping_pong(const SchottkySpec& spec) {
  PingPongResult result;
  if (spec.pairs.empty()) {
    result.violations.push_back(
        {PingPongViolation::Kind::OverlappingDisks, -1, -1, 0.0, "empty spec"});
    return result;
  }

  // (a) pairwise disjoint open disks; tangency allowed.
  struct Disk {
    double c, r;
    int pair;
    const char* side;
  };
  std::vector<Disk> disks;
  for (std::size_t i = 0; i < spec.pairs.size(); ++i) {
    disks.push_back({spec.pairs[i].plus.center, spec.pairs[i].plus.radius,
                     static_cast<int>(i) + 1, "plus"});
    disks.push_back({spec.pairs[i].minus.center, spec.pairs[i].minus.radius,
                     static_cast<int>(i) + 1, "minus"});
  }
  for (std::size_t i = 0; i < disks.size(); ++i) {
    for (std::size_t j = i + 1; j < disks.size(); ++j) {
      double scale = 1.0 + std::abs(disks[i].c) + std::abs(disks[j].c);
      double gap = std::abs(disks[i].c - disks[j].c) - (disks[i].r + disks[j].r);
      if (gap < -tolerance() * scale) {
        double witness = 0.5 * (disks[i].c + disks[j].c);
        result.violations.push_back(
            {PingPongViolation::Kind::OverlappingDisks, disks[i].pair, disks[j].pair, witness,
             std::string("open disks overlap: pair ") + std::to_string(disks[i].pair) + " " +
                 disks[i].side + " and pair " + std::to_string(disks[j].pair) + " " +
                 disks[j].side});
      }
    }
  }

  // (b) gamma maps the closed exterior of the plus disk into the closed
  // minus disk: the image of the plus circle must land inside the minus
  // disk and infinity (an exterior point) must land on the same side.
  for (std::size_t i = 0; i < spec.pairs.size(); ++i) {
    const SchottkyPair& pair = spec.pairs[i];
    int idx = static_cast<int>(i) + 1;
    double scale = 1.0 + std::abs(pair.minus.center) + pair.minus.radius;
    double tol = tolerance() * scale;

    BoundaryPoint im1 = apply(pair.gamma, BoundaryPoint::real(pair.plus.left()));
    BoundaryPoint im2 = apply(pair.gamma, BoundaryPoint::real(pair.plus.right()));
    BoundaryPoint iminf = apply(pair.gamma, BoundaryPoint::infinity());
    if (im1.is_infinity() || im2.is_infinity() || iminf.is_infinity()) {
      result.violations.push_back(
          {PingPongViolation::Kind::CircleImageNotContained, idx, -1, 0.0,
           "pair " + std::to_string(idx) +
               ": circle image mismatch, the image of the plus circle or of infinity is unbounded"});
      continue;
    }
    double lo = std::min(im1.value(), im2.value());
    double hi = std::max(im1.value(), im2.value());
    if (lo < pair.minus.left() - tol || hi > pair.minus.right() + tol) {
      double witness = lo < pair.minus.left() - tol ? lo : hi;
      result.violations.push_back(
          {PingPongViolation::Kind::CircleImageNotContained, idx, -1, witness,
           "pair " + std::to_string(idx) + ": circle image mismatch, image of plus circle [" +
               std::to_string(lo) + ", " + std::to_string(hi) + "] is not inside the minus disk"});
      continue;
    }
    if (iminf.value() < lo - tol || iminf.value() > hi + tol) {
      result.violations.push_back(
          {PingPongViolation::Kind::ExteriorOrientation, idx, -1, iminf.value(),
           "pair " + std::to_string(idx) +
               ": gamma maps the plus interior, not the exterior, toward the minus disk"});
    }
  }

  result.certified = result.violations.empty();
  return result;
}

Mobius evaluate(const SchottkySpec& spec, const Word& w) {
  Mobius m;
  for (int l : w.letters) m = m * letter_mobius(spec, l);
  return m;
}

long long reduced_word_count(int k, int max_len) {
  long long total = 1;
  long long level = 1;
  for (int len = 1; len <= max_len; ++len) {
    level *= (len == 1) ? 2LL * k : 2LL * k - 1;
    total += level;
  }
  return total;
}

std::vector<OrbitPoint> enumerate_orbit(const SchottkySpec& spec, int max_len) {
  require_certified(spec);
  std::vector<OrbitPoint> orbit;
  orbit.push_back({kOrigin, Word{}});
  for_each_reduced_word(spec, max_len, [&](const Word& w, const Mobius& m) {
    orbit.push_back({apply(m, kOrigin), w});
  });
  return orbit;
}

std::pair<Point, Word> reduce_point(const SchottkySpec& spec, const Point& p, int max_steps) {
  require_certified(spec);
  Point x = p;
  Word w;
  for (int step = 0; step < max_steps; ++step) {
    int found = 0;  // +j: inside minus disk of pair j; -j: inside plus disk
    for (std::size_t i = 0; i < spec.pairs.size() && found == 0; ++i) {
      if (spec.pairs[i].plus.contains_open(x)) found = -(static_cast<int>(i) + 1);
      else if (spec.pairs[i].minus.contains_open(x)) found = static_cast<int>(i) + 1;
    }
    if (found == 0) return {x, w};
    if (!w.letters.empty() && w.letters.back() == -found)
      throw error(errc::max_steps_exceeded,
                  "reduce_point: strip oscillates (point lies in a pairing slack region)");
    const SchottkyPair& pair = spec.pairs[static_cast<std::size_t>(std::abs(found)) - 1];
    x = found > 0 ? apply(pair.gamma.inverse(), x) : apply(pair.gamma, x);
    w.letters.push_back(found);
  }
  throw error(errc::max_steps_exceeded, "reduce_point: step budget exhausted");
}

std::vector<BoundaryPoint> sample_limit_set(const SchottkySpec& spec, int max_len) {
  require_certified(spec);
  std::vector<BoundaryPoint> samples;
  for_each_reduced_word(spec, max_len, [&](const Word&, const Mobius& m) {
    if (classify(m) != IsometryKind::Hyperbolic) return;  // cannot occur in a Schottky group
    samples.push_back(attracting_fixed_point(m));
  });
  return samples;
}

std::pair<double, double> one_sided_accumulation(const SchottkySpec& spec, int max_len) {
  if (max_len < 1)
    throw std::invalid_argument("one_sided_accumulation: max_len must be at least 1");
  std::vector<BoundaryPoint> samples = sample_limit_set(spec, max_len);
  double sup = -std::numeric_limits<double>::infinity();
  double inf = std::numeric_limits<double>::infinity();
  for (const BoundaryPoint& b : samples) {
    if (b.is_infinity()) continue;
    sup = std::max(sup, b.value());
    inf = std::min(inf, b.value());
  }
  return {sup, inf};
}

}  // namespace horokit
