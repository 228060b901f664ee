#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace lsl {

/// Exact length a + b*sqrt(d) in the quadratic ring Z[sqrt(d)], d in {2,3}.
/// Paths built from unit and sqrt(d) edges have lengths of this form, so
/// their comparison needs no floating point.
class ExtLength {
 public:
  ExtLength() = default;
  ExtLength(std::int64_t a, std::int64_t b, int d);

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  int radicand() const { return d_; }
  double value() const;
  std::string to_string() const;

  ExtLength& operator+=(const ExtLength& other);
  friend ExtLength operator+(ExtLength x, const ExtLength& y) { return x += y; }

  /// Exact ordering; both operands must share the radicand.
  friend std::strong_ordering operator<=>(const ExtLength& x, const ExtLength& y);
  friend bool operator==(const ExtLength& x, const ExtLength& y) {
    return (x <=> y) == std::strong_ordering::equal;
  }

 private:
  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
  int d_ = 2;
};

/// Sign of a + b*sqrt(d) for a nonsquare d > 0.
int sign_of_surd(std::int64_t a, std::int64_t b, int d);

}  // namespace lsl
