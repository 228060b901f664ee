#pragma once

#include <cstdint>

#include "lsl/lattice.hpp"

namespace lsl {

// Closed segment between two lattice points, in integer lattice coordinates.
// Incidence and crossing are affine invariants, so the hexagonal lattice is
// handled in its (u,v) coordinates without embedding.
struct Segment {
  Vec2i a;
  Vec2i b;
};

/// Sign of the 2D cross product (b-a) x (c-a): +1 left turn, -1 right, 0 collinear.
int orientation(Vec2i a, Vec2i b, Vec2i c);

/// True iff the two segments meet anywhere other than at a shared endpoint.
/// Proper crossings, T-contacts, and collinear overlaps of positive length
/// all count.
bool segments_cross(const Segment& s1, const Segment& s2);

/// True iff some point of the section lies strictly inside the segment.
bool edge_pierces_point(const Segment& e, const Section& section);

}  // namespace lsl
