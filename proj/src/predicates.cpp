#include "lsl/predicates.hpp"

#include <algorithm>
#include <numeric>

namespace lsl {

int orientation(Vec2i a, Vec2i b, Vec2i c) {
  const std::int64_t cross = static_cast<std::int64_t>(b.u - a.u) * (c.v - a.v) -
                             static_cast<std::int64_t>(b.v - a.v) * (c.u - a.u);
  return (cross > 0) - (cross < 0);
}

namespace {

// c is known to be collinear with ab.
bool within_box(Vec2i a, Vec2i b, Vec2i c) {
  return std::min(a.u, b.u) <= c.u && c.u <= std::max(a.u, b.u) && std::min(a.v, b.v) <= c.v &&
         c.v <= std::max(a.v, b.v);
}

}  // namespace

bool segments_cross(const Segment& s1, const Segment& s2) {
  const Vec2i a = s1.a;
  const Vec2i b = s1.b;
  const Vec2i c = s2.a;
  const Vec2i d = s2.b;
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);

  if (o1 == 0 && o2 == 0) {
    // Collinear: project on the dominant axis and measure the overlap.
    const bool use_u = a.u != b.u;
    auto key = [use_u](Vec2i p) { return use_u ? p.u : p.v; };
    const int lo1 = std::min(key(a), key(b));
    const int hi1 = std::max(key(a), key(b));
    const int lo2 = std::min(key(c), key(d));
    const int hi2 = std::max(key(c), key(d));
    return std::min(hi1, hi2) - std::max(lo1, lo2) > 0;
  }

  const bool shared = a == c || a == d || b == c || b == d;
  if (shared) return false;  // non-parallel lines meet once, at the shared endpoint

  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && within_box(a, b, c)) return true;
  if (o2 == 0 && within_box(a, b, d)) return true;
  if (o3 == 0 && within_box(c, d, a)) return true;
  if (o4 == 0 && within_box(c, d, b)) return true;
  return false;
}

bool edge_pierces_point(const Segment& e, const Section& section) {
  const Vec2i delta = e.b - e.a;
  const int g = std::gcd(delta.u, delta.v);
  if (g <= 1) return false;
  const Vec2i step{delta.u / g, delta.v / g};
  Vec2i p = e.a;
  for (int k = 1; k < g; ++k) {
    p = p + step;
    if (section.contains(p)) return true;
  }
  return false;
}

}  // namespace lsl
