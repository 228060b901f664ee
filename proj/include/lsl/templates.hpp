#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lsl/graph.hpp"
#include "lsl/lattice.hpp"

namespace lsl {

/// Full-rank sublattice of Z^2 in Hermite normal form:
/// generated by t1 = (a,0) and t2 = (b,d) with a,d > 0 and 0 <= b < a.
/// Residue classes are represented by {(u,v) : 0 <= u < a, 0 <= v < d}.
class PeriodLattice {
 public:
  PeriodLattice() = default;
  static PeriodLattice from_generators(std::span<const Vec2i> generators);
  static PeriodLattice from_periods(Vec2i t1, Vec2i t2);

  /// All sublattices of the given index, in (a, b) order.
  static std::vector<PeriodLattice> of_index(int index);

  int a() const { return a_; }
  int b() const { return b_; }
  int d() const { return d_; }
  Vec2i t1() const { return {a_, 0}; }
  Vec2i t2() const { return {b_, d_}; }
  int index() const { return a_ * d_; }

  Vec2i reduce(Vec2i p) const;
  bool contains(Vec2i p) const { return reduce(p) == Vec2i{0, 0}; }
  /// Position of reduce(p) within cell().
  int class_of(Vec2i p) const;
  std::vector<Vec2i> cell() const;

  friend auto operator<=>(const PeriodLattice&, const PeriodLattice&) = default;

 private:
  int a_ = 1;
  int b_ = 0;
  int d_ = 1;
};

/// Edge rule: the edge set {(p, p + delta) : p congruent to anchor}.
struct EdgeRule {
  Vec2i anchor;
  Vec2i delta;

  friend auto operator<=>(const EdgeRule&, const EdgeRule&) = default;
};

/// Translation-invariant edge pattern on a lattice. Rules are kept in
/// canonical form: anchor reduced into the cell, delta lexicographically
/// positive (du > 0, or du == 0 and dv > 0), sorted, no duplicates.
class PeriodicTemplate {
 public:
  PeriodicTemplate() = default;
  PeriodicTemplate(LatticeKind kind, PeriodLattice periods, std::vector<EdgeRule> rules,
                   int declared_cap);

  LatticeKind kind() const { return kind_; }
  const PeriodLattice& periods() const { return periods_; }
  const std::vector<EdgeRule>& rules() const { return rules_; }
  int declared_cap() const { return declared_cap_; }
  std::size_t cell_size() const { return static_cast<std::size_t>(periods_.index()); }

  friend bool operator==(const PeriodicTemplate&, const PeriodicTemplate&) = default;

 private:
  LatticeKind kind_ = LatticeKind::kSquare;
  PeriodLattice periods_;
  std::vector<EdgeRule> rules_;
  int declared_cap_ = 0;
};

enum class BuiltinId { kSquareGrid4, kHexRhombic4, kHexUnit6 };

PeriodicTemplate builtin(BuiltinId id);
BuiltinId parse_builtin(const std::string& name);
std::string builtin_name(BuiltinId id);

/// Edge (p, p+delta) is included iff both endpoints lie in the section and p
/// is congruent to the rule's anchor.
GeomGraph instantiate(const PeriodicTemplate& t, const Section& s);

/// Average edge length per vertex: sum of rule lengths over the cell size.
double weight_per_vertex(const PeriodicTemplate& t);

/// Lexicographically positive edge deltas allowed in templates:
/// squared length {1,2} on the square lattice, {1,3} on the hexagonal one.
std::vector<Vec2i> edge_alphabet(LatticeKind kind);

bool is_positive_delta(Vec2i d);

struct TemplateCheck {
  std::vector<int> class_degree;               // degree of each residue class
  int max_degree = 0;
  std::vector<std::pair<int, int>> conflicts;  // rule index pairs whose translates cross
  std::vector<int> piercing_rules;             // rules whose edges contain a lattice point
  bool ok(int cap) const { return max_degree <= cap && conflicts.empty() && piercing_rules.empty(); }
};

/// Exact validity of the infinite periodic graph: vertex degrees per residue
/// class and crossings between any translates of any two rules.
TemplateCheck check_template(const PeriodicTemplate& t);

/// True if rule translates of r1 and r2 cross somewhere.
bool rules_conflict(const PeriodLattice& lattice, const EdgeRule& r1, const EdgeRule& r2);

/// Integer 2x2 matrix acting on lattice coordinates.
struct Mat2i {
  int m00 = 1, m01 = 0, m10 = 0, m11 = 1;

  Vec2i operator()(Vec2i p) const { return {m00 * p.u + m01 * p.v, m10 * p.u + m11 * p.v}; }
  friend Mat2i operator*(const Mat2i& x, const Mat2i& y) {
    return {x.m00 * y.m00 + x.m01 * y.m10, x.m00 * y.m01 + x.m01 * y.m11,
            x.m10 * y.m00 + x.m11 * y.m10, x.m10 * y.m01 + x.m11 * y.m11};
  }
  friend auto operator<=>(const Mat2i&, const Mat2i&) = default;
};

/// Point symmetry group of the lattice (8 elements square, 12 hexagonal),
/// as isometries of the lattice quadratic form.
const std::vector<Mat2i>& point_group(LatticeKind kind);

/// Image of the template under p -> g(p) + shift.
PeriodicTemplate transform(const PeriodicTemplate& t, const Mat2i& g, Vec2i shift);

/// Same edge set expressed on its full translation-symmetry lattice.
PeriodicTemplate primitive(const PeriodicTemplate& t);

/// Canonical representative up to lattice symmetries and translations: the
/// lexicographically smallest (a, b, d, rules...) over the point group and
/// all cell translations of the primitive form. Equal keys mean the
/// infinite graphs are congruent.
std::vector<int> canonical_key(const PeriodicTemplate& t);
PeriodicTemplate canonical_form(const PeriodicTemplate& t);

}  // namespace lsl
