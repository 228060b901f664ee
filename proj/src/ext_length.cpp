#include "lsl/ext_length.hpp"

#include <cmath>

#include "lsl/errors.hpp"

namespace lsl {

ExtLength::ExtLength(std::int64_t a, std::int64_t b, int d) : a_(a), b_(b), d_(d) {
  if (d != 2 && d != 3) throw UsageError("ExtLength radicand must be 2 or 3");
}

double ExtLength::value() const {
  return static_cast<double>(a_) + static_cast<double>(b_) * std::sqrt(static_cast<double>(d_));
}

// "2+3*sqrt(2)", "sqrt(3)", "1-sqrt(2)", "4".
std::string ExtLength::to_string() const {
  const std::string root = "sqrt(" + std::to_string(d_) + ")";
  if (b_ == 0) return std::to_string(a_);
  std::string surd = (b_ == 1 || b_ == -1) ? root : std::to_string(b_ < 0 ? -b_ : b_) + "*" + root;
  if (a_ == 0) return (b_ < 0 ? "-" : "") + surd;
  return std::to_string(a_) + (b_ < 0 ? "-" : "+") + surd;
}

ExtLength& ExtLength::operator+=(const ExtLength& other) {
  if (other.d_ != d_) throw UsageError("ExtLength: adding lengths with different radicands");
  a_ += other.a_;
  b_ += other.b_;
  return *this;
}

int sign_of_surd(std::int64_t a, std::int64_t b, int d) {
  if (a >= 0 && b >= 0) return (a == 0 && b == 0) ? 0 : 1;
  if (a <= 0 && b <= 0) return -1;
  const __int128 a2 = static_cast<__int128>(a) * a;
  const __int128 b2d = static_cast<__int128>(b) * b * d;
  // Opposite signs; a^2 == b^2 d is impossible for nonsquare d.
  if (a > 0) return a2 > b2d ? 1 : -1;
  return b2d > a2 ? 1 : -1;
}

std::strong_ordering operator<=>(const ExtLength& x, const ExtLength& y) {
  if (x.d_ != y.d_) throw UsageError("ExtLength: comparing lengths with different radicands");
  const int s = sign_of_surd(x.a_ - y.a_, x.b_ - y.b_, x.d_);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace lsl
