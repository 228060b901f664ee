#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lsl {

enum class LatticeKind { kSquare, kHexagonal };

struct Vec2d {
  double x = 0.0;
  double y = 0.0;
};

// Integer vector in a lattice basis. Used both for points and for offsets.
struct Vec2i {
  int u = 0;
  int v = 0;

  friend constexpr Vec2i operator+(Vec2i a, Vec2i b) { return {a.u + b.u, a.v + b.v}; }
  friend constexpr Vec2i operator-(Vec2i a, Vec2i b) { return {a.u - b.u, a.v - b.v}; }
  friend constexpr Vec2i operator-(Vec2i a) { return {-a.u, -a.v}; }
  friend constexpr Vec2i operator*(int k, Vec2i a) { return {k * a.u, k * a.v}; }
  friend constexpr auto operator<=>(const Vec2i&, const Vec2i&) = default;
};

struct LatticeCoord {
  int u = 0;
  int v = 0;
  LatticeKind kind = LatticeKind::kSquare;

  constexpr Vec2i vec() const { return {u, v}; }
  friend constexpr bool operator==(const LatticeCoord&, const LatticeCoord&) = default;
};

/// Unit basis vectors of the lattice: (1,0),(0,1) for the square lattice,
/// (1,0),(1/2,sqrt(3)/2) for the hexagonal one.
std::array<Vec2d, 2> basis(LatticeKind kind);

/// Radicand of the short diagonal: 2 for square, 3 for hexagonal.
int radicand(LatticeKind kind);

std::string kind_name(LatticeKind kind);
LatticeKind parse_kind(const std::string& name);

/// Integer quadratic form of the lattice (squared Euclidean length).
constexpr std::int64_t norm2(LatticeKind kind, Vec2i d) {
  const std::int64_t u = d.u;
  const std::int64_t v = d.v;
  return kind == LatticeKind::kSquare ? u * u + v * v : u * u + v * v + u * v;
}

Vec2d embed(LatticeKind kind, Vec2i p);
Vec2d embed(const LatticeCoord& c);

std::int64_t sq_dist(const LatticeCoord& a, const LatticeCoord& b);
double dist(const LatticeCoord& a, const LatticeCoord& b);

enum class ShapeType { kEmpty, kRect, kRhombus, kHexBall };

struct Shape {
  ShapeType type = ShapeType::kEmpty;
  int a = 0;  // RECT/RHOMBUS width, HEXBALL radius
  int b = 0;  // RECT/RHOMBUS height

  static Shape rect(int a, int b) { return {ShapeType::kRect, a, b}; }
  static Shape rhombus(int a, int b) { return {ShapeType::kRhombus, a, b}; }
  static Shape hexball(int r) { return {ShapeType::kHexBall, r, 0}; }
  static Shape empty() { return {}; }

  friend bool operator==(const Shape&, const Shape&) = default;
};

std::string shape_name(const Shape& shape);

/// Finite lattice section. Points are stored row by row (v ascending, then u
/// ascending); every supported shape has a contiguous u-range per row, which
/// gives O(1) index lookup.
class Section {
 public:
  Section() = default;

  LatticeKind kind() const { return kind_; }
  const Shape& shape() const { return shape_; }
  const std::vector<Vec2i>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  Vec2i point(std::size_t i) const { return points_[i]; }
  LatticeCoord coord(std::size_t i) const { return {points_[i].u, points_[i].v, kind_}; }

  std::optional<int> index_of(Vec2i p) const;
  bool contains(Vec2i p) const { return index_of(p).has_value(); }

  /// Lattice distance from point i to the section boundary: Chebyshev slack
  /// for RECT/RHOMBUS, hexagonal-norm slack for HEXBALL.
  int boundary_margin(std::size_t i) const;

  friend bool operator==(const Section& a, const Section& b) {
    return a.kind_ == b.kind_ && a.shape_ == b.shape_;
  }

 private:
  friend Section generate_section(LatticeKind kind, const Shape& shape);

  LatticeKind kind_ = LatticeKind::kSquare;
  Shape shape_;
  std::vector<Vec2i> points_;
  int v_min_ = 0;
  std::vector<int> row_lo_;
  std::vector<int> row_hi_;
  std::vector<int> row_start_;
};

Section generate_section(LatticeKind kind, const Shape& shape);

/// Closed-form point count of a shape.
std::size_t expected_point_count(const Shape& shape);

struct Wedge {
  int index = 1;  // 1..4 square quadrants, 1..6 hexagonal wedges
  // Offset in the wedge-local basis used by the case analysis: (|x|,|y|) for
  // square quadrants; coefficients (u,v) along the wedge's bounding unit
  // vectors for hexagonal wedges (e.g. u*mu2 + v*mu1 in W2).
  LatticeCoord local;
  // Square: equals local. Hexagonal: local with the larger coefficient first.
  LatticeCoord canonical;
  // Square only: canonical has y >= x.
  bool y_ge_x = false;
};

/// Wedge of q around p. Boundary rays go to the lower adjacent index.
Wedge classify_wedge(const LatticeCoord& p, const LatticeCoord& q);

}  // namespace lsl
