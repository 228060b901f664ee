#pragma once

#include <string>
#include <vector>

namespace lsl::bounds {

// Named constants.
double delta0();             // (3 + 2 sqrt2) / sqrt5, degree-3 square upper bound
double prior_square_bound();  // (7 + 5 sqrt2) / sqrt29
double one_plus_sqrt2();
double one_plus_sqrt3();
double sqrt2();
double hex_unit_stretch();    // 2 / sqrt3
double light_weight();        // 4/5 + 3 sqrt2 / 5
double regular3_weight();     // 1/2 + 1/2 + sqrt2 / 2

enum class Family {
  kFact1,
  kS1Gamma,
  kS2GammaW1Even,
  kS2GammaW1Odd,
  kS2GammaW2,
  kHex3GammaW1Even,
  kHex3GammaW1Odd,
  kHex3GammaW2,
  kHex4Gamma,
  kHFunc,
  kFLambda,
};

std::string family_name(Family f);

/// One evaluation of a stretch bound. `numerator` is the path-length bound
/// l(.) and `denominator` the Euclidean distance, so value = num / den.
struct BoundEval {
  Family family = Family::kFact1;
  std::vector<double> params;
  double numerator = 0.0;
  double denominator = 1.0;
  double value = 0.0;
};

struct Fact1Result {
  double f_value = 0.0;      // (a*lam + b) / sqrt(lam^2 + 1)
  double upper_bound = 0.0;  // sqrt(a^2 + b^2)
  double argmax = 0.0;       // a / b
};

/// Cauchy-Schwarz in one variable. Requires a, b, lam > 0.
Fact1Result fact1(double a, double b, double lam);

/// Square degree-3 construction, path via the diagonal: (1 + y(1+sqrt2)) / sqrt(x^2+y^2).
/// Domain y >= x >= 1.
BoundEval s1_gamma(int x, int y);

enum class SquareWedge { kW1, kW2 };

/// Second square degree-3 construction. W1 (x >= y >= 0, x >= 1) picks the
/// even- or odd-y formula by the parity of y; W2 requires x >= y >= 1.
BoundEval s2_gamma(int x, int y, SquareWedge wedge);

enum class HexCase { kW1Even, kW1Odd, kW2, kDeg4Plus, kDeg4Minus };

/// Hexagonal bounds. W1 formulas (u >= v >= 0, u >= 1) are evaluated as
/// named, without a parity check, so both can be studied as functions of v.
/// W2 requires u, v >= 1. DEG4 forms (u+v)/sqrt(u^2+v^2 +- uv) require
/// u, v >= 0 and u + v >= 1.
BoundEval hex_gamma(int u, int v, HexCase c);

/// Parity-dispatched hexagonal W1 bound (even or odd v formula).
BoundEval hex_gamma_w1(int u, int v);

/// Real-argument versions of the same formulas, for monotonicity sweeps.
double s1_gamma_real(double x, double y);
double s2_gamma_w1_even_real(double x, double y);
double s2_gamma_w1_odd_real(double x, double y);
double s2_gamma_w2_real(double x, double y);
double hex_w1_even_real(double u, double v);
double hex_w1_odd_real(double u, double v);
double hex_w2_real(double u, double v);

/// (lam + 1 + sqrt2) / sqrt(lam^2 + 1): the x = 1 column of s1_gamma with lam = 1/y.
double s1_f(double lam);
/// Odd-y W1 bound at y = 1 as a function of x.
double s2_f_odd(double x);
/// Numerator of s2_f_odd' (up to a positive factor): (1 + sqrt2/2) - (1 + sqrt2) x.
double s2_f1(double x);
/// ((1 + sqrt3/2) u + 1 + sqrt3) / sqrt(u^2 + u + 1).
double h_func(double u);
/// (2 lam + 1 + sqrt3) / sqrt(lam^2 + lam + 1).
double hex_case2_f(double lam);

struct ClaimResult {
  std::string id;
  std::string context;
  std::string relation;  // "=", "<", "<=", "decreasing", ...
  double computed = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Grid-verified numeric checks of every monotonicity, extremum and equality
/// claim behind the bounds (step 1e-3, parameters up to 50).
std::vector<ClaimResult> property_checks();

}  // namespace lsl::bounds
