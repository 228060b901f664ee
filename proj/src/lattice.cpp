#include "lsl/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "lsl/errors.hpp"

namespace lsl {

namespace {

constexpr double kHalfSqrt3 = 0.86602540378443864676;

}  // namespace

std::array<Vec2d, 2> basis(LatticeKind kind) {
  if (kind == LatticeKind::kSquare) return {Vec2d{1.0, 0.0}, Vec2d{0.0, 1.0}};
  return {Vec2d{1.0, 0.0}, Vec2d{0.5, kHalfSqrt3}};
}

int radicand(LatticeKind kind) { return kind == LatticeKind::kSquare ? 2 : 3; }

std::string kind_name(LatticeKind kind) {
  return kind == LatticeKind::kSquare ? "square" : "hex";
}

LatticeKind parse_kind(const std::string& name) {
  if (name == "square") return LatticeKind::kSquare;
  if (name == "hex" || name == "hexagonal") return LatticeKind::kHexagonal;
  throw UsageError("unknown lattice kind '" + name + "' (expected square|hex)");
}

Vec2d embed(LatticeKind kind, Vec2i p) {
  if (kind == LatticeKind::kSquare) return {static_cast<double>(p.u), static_cast<double>(p.v)};
  return {p.u + 0.5 * p.v, kHalfSqrt3 * p.v};
}

Vec2d embed(const LatticeCoord& c) { return embed(c.kind, c.vec()); }

std::int64_t sq_dist(const LatticeCoord& a, const LatticeCoord& b) {
  if (a.kind != b.kind) throw KindMismatchError("sq_dist: coordinates belong to different lattices");
  return norm2(a.kind, b.vec() - a.vec());
}

double dist(const LatticeCoord& a, const LatticeCoord& b) {
  return std::sqrt(static_cast<double>(sq_dist(a, b)));
}

std::string shape_name(const Shape& shape) {
  switch (shape.type) {
    case ShapeType::kEmpty:
      return "empty";
    case ShapeType::kRect:
      return "rect";
    case ShapeType::kRhombus:
      return "rhombus";
    case ShapeType::kHexBall:
      return "hexball";
  }
  return "?";
}

std::optional<int> Section::index_of(Vec2i p) const {
  const int row = p.v - v_min_;
  if (row < 0 || row >= static_cast<int>(row_lo_.size())) return std::nullopt;
  if (p.u < row_lo_[row] || p.u > row_hi_[row]) return std::nullopt;
  return row_start_[row] + (p.u - row_lo_[row]);
}

int Section::boundary_margin(std::size_t i) const {
  const Vec2i p = points_[i];
  switch (shape_.type) {
    case ShapeType::kRect:
    case ShapeType::kRhombus:
      return std::min({p.u, shape_.a - p.u, p.v, shape_.b - p.v});
    case ShapeType::kHexBall:
      return shape_.a - std::max({std::abs(p.u), std::abs(p.v), std::abs(p.u + p.v)});
    case ShapeType::kEmpty:
      break;
  }
  return 0;
}

std::size_t expected_point_count(const Shape& shape) {
  switch (shape.type) {
    case ShapeType::kRect:
    case ShapeType::kRhombus:
      return static_cast<std::size_t>(shape.a + 1) * static_cast<std::size_t>(shape.b + 1);
    case ShapeType::kHexBall:
      return 1 + 3 * static_cast<std::size_t>(shape.a) * static_cast<std::size_t>(shape.a + 1);
    case ShapeType::kEmpty:
      break;
  }
  return 0;
}

Section generate_section(LatticeKind kind, const Shape& shape) {
  if (shape.a < 0 || shape.b < 0) throw UsageError("section shape parameters must be nonnegative");
  Section s;
  s.kind_ = kind;
  s.shape_ = shape;
  if (shape.type == ShapeType::kEmpty) return s;

  int v_lo = 0;
  int v_hi = 0;
  if (shape.type == ShapeType::kHexBall) {
    v_lo = -shape.a;
    v_hi = shape.a;
  } else {
    v_hi = shape.b;
  }
  s.v_min_ = v_lo;
  for (int v = v_lo; v <= v_hi; ++v) {
    int lo = 0;
    int hi = shape.a;
    if (shape.type == ShapeType::kHexBall) {
      const int r = shape.a;
      lo = std::max(-r, -r - v);
      hi = std::min(r, r - v);
    }
    s.row_lo_.push_back(lo);
    s.row_hi_.push_back(hi);
    s.row_start_.push_back(static_cast<int>(s.points_.size()));
    for (int u = lo; u <= hi; ++u) s.points_.push_back({u, v});
  }
  return s;
}

Wedge classify_wedge(const LatticeCoord& p, const LatticeCoord& q) {
  if (p.kind != q.kind) throw KindMismatchError("classify_wedge: coordinates belong to different lattices");
  const Vec2i d = q.vec() - p.vec();
  if (d.u == 0 && d.v == 0) throw UsageError("classify_wedge: degenerate pair (p == q)");

  Wedge w;
  const LatticeKind kind = p.kind;
  if (kind == LatticeKind::kSquare) {
    const int x = d.u;
    const int y = d.v;
    if (x >= 0 && y >= 0) {
      w.index = 1;
    } else if (x < 0 && y >= 0) {
      w.index = 2;
    } else if (x <= 0 && y < 0) {
      w.index = 3;
    } else {
      w.index = 4;
    }
    w.local = {std::abs(x), std::abs(y), kind};
    w.canonical = w.local;
    w.y_ge_x = w.canonical.v >= w.canonical.u;
    return w;
  }

  // q - p = a*mu0 + b*mu1. Each wedge is spanned by two consecutive unit
  // vectors mu_i, mu_{i+1} (mu2 = mu1 - mu0, mu3 = -mu0, ...).
  const int a = d.u;
  const int b = d.v;
  int lu = 0;
  int lv = 0;
  if (a >= 0 && b >= 0) {
    w.index = 1;  // u*mu0 + v*mu1
    lu = a;
    lv = b;
  } else if (a <= 0 && a + b >= 0) {
    w.index = 2;  // u*mu2 + v*mu1
    lu = -a;
    lv = a + b;
  } else if (b >= 0 && a + b <= 0) {
    w.index = 3;  // u*mu2 + v*mu3
    lu = b;
    lv = -a - b;
  } else if (a <= 0 && b <= 0) {
    w.index = 4;
    lu = -a;
    lv = -b;
  } else if (a >= 0 && a + b <= 0) {
    w.index = 5;
    lu = a;
    lv = -a - b;
  } else {
    w.index = 6;  // -u*mu2 + v*mu0
    lu = -b;
    lv = a + b;
  }
  w.local = {lu, lv, kind};
  w.canonical = {std::max(lu, lv), std::min(lu, lv), kind};
  return w;
}

}  // namespace lsl
