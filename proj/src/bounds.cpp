#include "lsl/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "lsl/errors.hpp"

namespace lsl::bounds {

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);
const double kS2 = 1.0 + kSqrt2 / 2.0;  // 1 + sqrt2/2
const double kH2 = kSqrt2 / 2.0;
const double kS3 = 1.0 + kSqrt3 / 2.0;  // 1 + sqrt3/2
const double kH3 = kSqrt3 / 2.0;

double hex_norm(double u, double v) { return std::sqrt(u * u + v * v + u * v); }

BoundEval make(Family f, std::vector<double> params, double num, double den) {
  return {f, std::move(params), num, den, num / den};
}

void require(bool ok, const char* what) {
  if (!ok) throw UsageError(std::string("bound domain violation: ") + what);
}

}  // namespace

double delta0() { return (3.0 + 2.0 * kSqrt2) / std::sqrt(5.0); }
double prior_square_bound() { return (7.0 + 5.0 * kSqrt2) / std::sqrt(29.0); }
double one_plus_sqrt2() { return 1.0 + kSqrt2; }
double one_plus_sqrt3() { return 1.0 + kSqrt3; }
double sqrt2() { return kSqrt2; }
double hex_unit_stretch() { return 2.0 / kSqrt3; }
double light_weight() { return 0.8 + 0.6 * kSqrt2; }
double regular3_weight() { return 1.0 + kH2; }

std::string family_name(Family f) {
  switch (f) {
    case Family::kFact1: return "FACT1";
    case Family::kS1Gamma: return "S1_GAMMA";
    case Family::kS2GammaW1Even: return "S2_GAMMA_W1_EVEN";
    case Family::kS2GammaW1Odd: return "S2_GAMMA_W1_ODD";
    case Family::kS2GammaW2: return "S2_GAMMA_W2";
    case Family::kHex3GammaW1Even: return "HEX3_GAMMA_W1_EVEN";
    case Family::kHex3GammaW1Odd: return "HEX3_GAMMA_W1_ODD";
    case Family::kHex3GammaW2: return "HEX3_GAMMA_W2";
    case Family::kHex4Gamma: return "HEX4_GAMMA";
    case Family::kHFunc: return "H_FUNC";
    case Family::kFLambda: return "F_LAMBDA";
  }
  return "?";
}

Fact1Result fact1(double a, double b, double lam) {
  require(a > 0 && b > 0 && lam > 0, "fact1 needs a, b, lambda > 0");
  return {(a * lam + b) / std::sqrt(lam * lam + 1.0), std::sqrt(a * a + b * b), a / b};
}

double s1_gamma_real(double x, double y) {
  return (1.0 + y * (1.0 + kSqrt2)) / std::hypot(x, y);
}
double s2_gamma_w1_even_real(double x, double y) {
  return (kS2 * x + kH2 * y + kH2) / std::hypot(x, y);
}
double s2_gamma_w1_odd_real(double x, double y) {
  return (kS2 * x + kH2 * y + kS2) / std::hypot(x, y);
}
double s2_gamma_w2_real(double x, double y) { return (kS2 * x + y) / std::hypot(x, y); }
double hex_w1_even_real(double u, double v) { return (kS3 * u + kH3 * v + kH3) / hex_norm(u, v); }
double hex_w1_odd_real(double u, double v) { return (kS3 * u + kH3 * v + kS3) / hex_norm(u, v); }
double hex_w2_real(double u, double v) { return (2.0 * u + kS3 * v + kH3) / hex_norm(u, v); }

BoundEval s1_gamma(int x, int y) {
  require(y >= x && x >= 1, "s1_gamma needs y >= x >= 1");
  return make(Family::kS1Gamma, {double(x), double(y)}, 1.0 + y * (1.0 + kSqrt2), std::hypot(x, y));
}

BoundEval s2_gamma(int x, int y, SquareWedge wedge) {
  const double den = std::hypot(x, y);
  if (wedge == SquareWedge::kW1) {
    require(x >= y && y >= 0 && x >= 1, "s2_gamma W1 needs x >= y >= 0, x >= 1");
    if (y % 2 == 0) return make(Family::kS2GammaW1Even, {double(x), double(y)}, kS2 * x + kH2 * y + kH2, den);
    return make(Family::kS2GammaW1Odd, {double(x), double(y)}, kS2 * x + kH2 * y + kS2, den);
  }
  require(x >= y && y >= 1, "s2_gamma W2 needs x >= y >= 1");
  return make(Family::kS2GammaW2, {double(x), double(y)}, kS2 * x + y, den);
}

BoundEval hex_gamma(int u, int v, HexCase c) {
  const std::vector<double> params{double(u), double(v)};
  switch (c) {
    case HexCase::kW1Even:
      require(u >= v && v >= 0 && u >= 1, "hex W1 needs u >= v >= 0, u >= 1");
      return make(Family::kHex3GammaW1Even, params, kS3 * u + kH3 * v + kH3, hex_norm(u, v));
    case HexCase::kW1Odd:
      require(u >= v && v >= 0 && u >= 1, "hex W1 needs u >= v >= 0, u >= 1");
      return make(Family::kHex3GammaW1Odd, params, kS3 * u + kH3 * v + kS3, hex_norm(u, v));
    case HexCase::kW2:
      require(u >= 1 && v >= 1, "hex W2 needs u, v >= 1");
      return make(Family::kHex3GammaW2, params, 2.0 * u + kS3 * v + kH3, hex_norm(u, v));
    case HexCase::kDeg4Plus:
    case HexCase::kDeg4Minus: {
      require(u >= 0 && v >= 0 && u + v >= 1, "degree-4 form needs u, v >= 0, u + v >= 1");
      const double q = c == HexCase::kDeg4Plus ? double(u) * u + double(v) * v + double(u) * v
                                               : double(u) * u + double(v) * v - double(u) * v;
      return make(Family::kHex4Gamma, params, u + v, std::sqrt(q));
    }
  }
  throw UsageError("unknown hexagonal case");
}

BoundEval hex_gamma_w1(int u, int v) {
  return hex_gamma(u, v, v % 2 == 0 ? HexCase::kW1Even : HexCase::kW1Odd);
}

double s1_f(double lam) { return (lam + 1.0 + kSqrt2) / std::sqrt(lam * lam + 1.0); }
double s2_f_odd(double x) { return s2_gamma_w1_odd_real(x, 1.0); }
double s2_f1(double x) { return kS2 - (1.0 + kSqrt2) * x; }
double h_func(double u) { return (kS3 * u + 1.0 + kSqrt3) / std::sqrt(u * u + u + 1.0); }
double hex_case2_f(double lam) { return (2.0 * lam + 1.0 + kSqrt3) / std::sqrt(lam * lam + lam + 1.0); }

namespace {

constexpr double kStep = 1e-3;

// Grid points x_i = lo + i*step in [lo, hi] (both ends inclusive when on grid).
template <typename Fn>
void sweep(double lo, double hi, Fn&& fn) {
  const long n = std::lround((hi - lo) / kStep);
  for (long i = 0; i <= n; ++i) fn(lo + static_cast<double>(i) * kStep);
}

// Number of consecutive grid steps where f fails to strictly decrease.
int decreasing_violations(const std::function<double(double)>& f, double lo, double hi) {
  int bad = 0;
  double prev = 0.0;
  bool first = true;
  sweep(lo, hi, [&](double x) {
    const double y = f(x);
    if (!first && !(y < prev)) ++bad;
    prev = y;
    first = false;
  });
  return bad;
}

int increasing_violations(const std::function<double(double)>& f, double lo, double hi) {
  return decreasing_violations([&](double x) { return -f(x); }, lo, hi);
}

class Claims {
 public:
  void eq(std::string id, std::string ctx, double computed, double expected, double tol) {
    out_.push_back({std::move(id), std::move(ctx), "=", computed, expected, tol,
                    std::abs(computed - expected) <= tol});
  }
  void lt(std::string id, std::string ctx, double computed, double bound) {
    out_.push_back({std::move(id), std::move(ctx), "<", computed, bound, 0.0, computed < bound});
  }
  void le(std::string id, std::string ctx, double computed, double bound, double tol) {
    out_.push_back({std::move(id), std::move(ctx), "<=", computed, bound, tol, computed <= bound + tol});
  }
  void none(std::string id, std::string ctx, std::string relation, int violations) {
    out_.push_back({std::move(id), std::move(ctx), std::move(relation), double(violations), 0.0, 0.0,
                    violations == 0});
  }
  std::vector<ClaimResult> take() { return std::move(out_); }

 private:
  std::vector<ClaimResult> out_;
};

}  // namespace

std::vector<ClaimResult> property_checks() {
  Claims c;
  const double d0 = delta0();

  // Printed constants (4 decimals).
  c.eq("delta0", "(3+2sqrt2)/sqrt5, printed 2.6065", d0, 2.6065, 1e-4);
  c.eq("prior_square_bound", "(7+5sqrt2)/sqrt29, printed 2.6129", prior_square_bound(), 2.6129, 1e-4);
  c.eq("one_plus_sqrt2", "square degree-3 lower bound, printed 2.4142", one_plus_sqrt2(), 2.4142, 1e-4);
  c.eq("one_plus_sqrt3", "hexagonal degree-3 dilation, printed 2.7320", one_plus_sqrt3(), 2.7320, 1e-4);
  c.eq("light_weight", "4/5 + 3sqrt2/5, printed 1.6485", light_weight(), 1.6485, 1e-4);
  c.eq("regular3_weight", "1/2 + 1/2 + sqrt2/2, printed 1.7071", regular3_weight(), 1.7071, 1e-4);

  // Square, first degree-3 construction, x = 1 column.
  c.eq("s1_f(1/3)", "x=1 column, lambda=1/y", s1_f(1.0 / 3.0), d0, 1e-12);
  c.eq("s1_f(1/2)", "x=1 column, lambda=1/y", s1_f(0.5), d0, 1e-12);
  const double lambda0 = fact1(1.0, 1.0 + kSqrt2, 0.5).argmax;
  c.eq("lambda0", "argmax of s1_f equals sqrt2-1", lambda0, kSqrt2 - 1.0, 1e-12);
  c.eq("lambda0_printed", "lambda0 printed 0.4142", lambda0, 0.4142, 1e-4);
  c.none("s1_f_increasing", "s1_f increasing on (0, lambda0)", "increasing",
         increasing_violations(s1_f, kStep, std::floor(lambda0 / kStep) * kStep));
  c.none("s1_f_decreasing", "s1_f decreasing on (lambda0, 1)", "decreasing",
         decreasing_violations(s1_f, std::ceil(lambda0 / kStep) * kStep, 1.0));
  {
    double best = 0.0;
    for (int y = 1; y <= 100; ++y) best = std::max(best, s1_gamma(1, y).value);
    c.eq("s1_gamma_x1_max", "max over y<=100 of gamma(1,y)", best, d0, 1e-12);
  }
  c.eq("s1_gamma_tail", "gamma(1,1e4) tends to 1+sqrt2", s1_gamma(1, 10000).value, one_plus_sqrt2(), 1e-3);

  // x >= 2: Fact 1 with a = 1+sqrt2, b = 1/2, lambda = y/2.
  const double x2_bound = fact1(1.0 + kSqrt2, 0.5, 1.0).upper_bound;
  c.eq("s1_x2_bound", "sqrt((1+sqrt2)^2 + 1/4), printed 2.4654", x2_bound, 2.4654, 1e-4);
  c.lt("s1_x2_bound_lt_delta0", "x>=2 bound below delta0", x2_bound, d0);
  {
    double best = 0.0;
    for (int x = 2; x <= 100; ++x) {
      for (int y = x; y <= 100; ++y) best = std::max(best, s1_gamma(x, y).value);
    }
    c.le("s1_gamma_x2_grid", "gamma(x,y) for 2<=x<=y<=100", best, x2_bound, 1e-12);
  }

  // Square, second degree-3 construction.
  c.eq("s2_gamma_w1(2,1)", "odd-y formula at x=2, y=1", s2_gamma(2, 1, SquareWedge::kW1).value, d0, 1e-12);
  c.none("s2_f_odd_decreasing", "gamma(x,1) decreasing on [2,50]", "decreasing",
         decreasing_violations(s2_f_odd, 2.0, 50.0));
  {
    int bad = 0;
    sweep(2.0, 50.0, [&](double x) { bad += s2_f1(x) < 0 ? 0 : 1; });
    c.none("s2_f1_negative", "f1(x) < 0 on [2,50]", "negative", bad);
  }
  const double even_bound = std::sqrt(kS2 * kS2 + 9.0 / 8.0);
  const double odd_bound = std::sqrt(kS2 * kS2 + std::pow((1.0 + 2.0 * kSqrt2) / 3.0, 2));
  const double w2_bound = std::sqrt(kS2 * kS2 + 1.0);
  c.lt("s2_even_bound", "even y >= 2: sqrt((1+sqrt2/2)^2 + 9/8) < 2.01", even_bound, 2.01);
  c.lt("s2_odd_bound", "odd y >= 3: Fact 1 bound < 2.14", odd_bound, 2.14);
  c.lt("s2_w2_bound", "W2: sqrt((1+sqrt2/2)^2 + 1) < 2", w2_bound, 2.0);
  {
    double best = 0.0;
    for (int y = 1; y <= 100; ++y) {
      for (int x = y + 1; x <= 100; ++x) best = std::max(best, s2_gamma(x, y, SquareWedge::kW1).value);
    }
    c.eq("s2_w1_grid_max", "W1 max over y>=1, x>=y+1, <=100", best, d0, 1e-12);
    double best2 = 0.0;
    for (int y = 1; y <= 100; ++y) {
      for (int x = y; x <= 100; ++x) best2 = std::max(best2, s2_gamma(x, y, SquareWedge::kW2).value);
    }
    c.le("s2_w2_grid_max", "W2 max over x>=y>=1, <=100", best2, w2_bound, 1e-12);
  }

  // Hexagonal degree 3.
  c.eq("hex_w1_even(1,0)", "gamma(u,0) at u=1", hex_gamma(1, 0, HexCase::kW1Even).value, one_plus_sqrt3(), 1e-12);
  {
    int bad_even = 0;
    int bad_odd = 0;
    for (int u = 1; u <= 50; ++u) {
      bad_even += decreasing_violations([u](double v) { return hex_w1_even_real(u, v); }, 0.0, u);
      bad_odd += decreasing_violations([u](double v) { return hex_w1_odd_real(u, v); }, 0.0, u);
    }
    c.none("hex_w1_even_decreasing_v", "even-v gamma decreasing in v on [0,u], u=1..50", "decreasing", bad_even);
    c.none("hex_w1_odd_decreasing_v", "odd-v gamma decreasing in v on [0,u], u=1..50", "decreasing", bad_odd);
    double best = 0.0;
    for (int u = 1; u <= 100; ++u) best = std::max(best, hex_gamma(u, 0, HexCase::kW1Even).value);
    c.le("hex_gamma_u0_max", "gamma(u,0) = 1 + sqrt3/2 + sqrt3/(2u)", best, one_plus_sqrt3(), 1e-12);
  }
  c.eq("h(1)", "h(1) = 3/2 + 2/sqrt3", h_func(1.0), 1.5 + 2.0 / kSqrt3, 1e-12);
  c.eq("hex_w1_odd(1,1)", "odd-v gamma at (1,1) equals h(1)", hex_gamma(1, 1, HexCase::kW1Odd).value,
       1.5 + 2.0 / kSqrt3, 1e-12);
  c.lt("h(1)_lt", "h(1) < 1+sqrt3", h_func(1.0), one_plus_sqrt3());
  c.none("h_decreasing", "h decreasing on [1,50]", "decreasing", decreasing_violations(h_func, 1.0, 50.0));
  c.eq("hex_case2_f(1)", "W2: f(1) = 1+sqrt3", hex_case2_f(1.0), one_plus_sqrt3(), 1e-12);
  c.none("hex_case2_f_decreasing", "W2: f decreasing on [1,50]", "decreasing",
         decreasing_violations(hex_case2_f, 1.0, 50.0));
  {
    double best = 0.0;
    for (int u = 1; u <= 100; ++u) {
      for (int v = 1; v <= 100; ++v) best = std::max(best, hex_gamma(u, v, HexCase::kW2).value);
    }
    c.le("hex_w2_grid_max", "W2 gamma over u,v in [1,100]", best, one_plus_sqrt3(), 1e-12);
  }

  // Hexagonal degree 4 and 6.
  {
    double minus = 0.0;
    double plus = 0.0;
    for (int u = 0; u <= 100; ++u) {
      for (int v = 0; v <= 100; ++v) {
        if (u + v == 0) continue;
        minus = std::max(minus, hex_gamma(u, v, HexCase::kDeg4Minus).value);
        plus = std::max(plus, hex_gamma(u, v, HexCase::kDeg4Plus).value);
      }
    }
    c.eq("hex4_minus_max", "(u+v)/sqrt(u^2+v^2-uv) peaks at 2", minus, 2.0, 1e-12);
    c.eq("hex4_plus_max", "(u+v)/sqrt(u^2+v^2+uv) peaks at 2/sqrt3", plus, hex_unit_stretch(), 1e-12);
    c.eq("hex4_minus(1,1)", "equality case u=v=1", hex_gamma(1, 1, HexCase::kDeg4Minus).value, 2.0, 1e-12);
  }

  // Fact 1 on a deterministic low-discrepancy set of (a, b).
  {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    double worst_eq = 0.0;
    int exceed = 0;
    for (int k = 1; k <= 100; ++k) {
      const double a = 0.05 + 10.0 * std::fmod(k * phi, 1.0);
      const double b = 0.05 + 10.0 * std::fmod(k * phi * phi * 0.5, 1.0);
      const Fact1Result at = fact1(a, b, a / b);
      worst_eq = std::max(worst_eq, std::abs(at.f_value - at.upper_bound) / at.upper_bound);
      for (int i = 1; i <= 200; ++i) {
        const Fact1Result r = fact1(a, b, 0.05 * i);
        if (r.f_value > r.upper_bound * (1.0 + 1e-15)) ++exceed;
      }
    }
    c.eq("fact1_equality", "f(a/b) = sqrt(a^2+b^2), 100 (a,b) pairs (max rel. error)", worst_eq, 0.0, 1e-12);
    c.none("fact1_upper_bound", "f(lambda) <= sqrt(a^2+b^2) on a lambda grid", "<=", exceed);
  }

  return c.take();
}

}  // namespace lsl::bounds
