#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cycsub {

// ------------------------------------------------------------ binomial tails

enum class TailMode { exact, floating };

// f_n(t) = P(Bin(2n, 1/2) >= n + t).
struct BinomTail {
  std::int64_t n = 0;
  std::int64_t t = 0;
  double value = 0;
  std::optional<mpq_class> exact;  // set in exact mode
};

inline constexpr std::int64_t kExactTailMaxN = 2000;
inline constexpr std::int64_t kFloatTailMaxN = 10'000'000;

// Requires |t| <= n. Exact mode is limited to n <= 2000.
BinomTail binom_tail(std::int64_t n, std::int64_t t, TailMode mode);
mpq_class binom_tail_exact(std::int64_t n, std::int64_t t);
double binom_tail_float(std::int64_t n, std::int64_t t);

// P(Bin(N, 1/2) = k) with relative error around 1e-14 for all N (saddle point
// form with Stirling error terms).
double binom_half_pmf(std::int64_t big_n, std::int64_t k);

// Natural log of a positive rational without converting it to double first.
double log_of(const mpq_class& q);

struct ChernoffCheck {
  bool holds = true;
  double worst_ratio = 0;  // max over t of f_n(t) / exp(-t^2/(3n+t))
  std::int64_t worst_t = 0;
};
// Checks f_n(t) <= exp(-t^2/(3n + t)) for every 1 <= t <= t_max.
ChernoffCheck chernoff_check(std::int64_t n, std::int64_t t_max);

struct SecondEstimateCheck {
  bool holds = true;
  double max_ratio = 0;  // max residual / (2|t|^3 + 1) n^{-3/2}
  std::int64_t t_range = 0;
};
// Every integer |t| <= sqrt(n)/100; requires n >= 10^4.
SecondEstimateCheck fn_second_estimate_check(std::int64_t n);

// Exact law of X + m - Y for X ~ Bin(n, 1/2), Y ~ Bin(m, 1/2) against
// Bin(n + m, 1/2); requires n + m <= 512.
bool bindiff_check(int n, int m);

// --------------------------------------------------------------- normal law

// I[a, b] = integral of the standard normal density over [a sqrt 2, b sqrt 2].
double normal_I(double a, double b);

// f(alpha) = I[-alpha/4, 1/alpha].
double f_alpha(double alpha);

struct Window {
  double m1 = 0;
  double m2 = 0;
  double value = 0;  // I[-m1, m2]
  int regime = 0;    // 1: beta <= 8/(5 alpha), 2: middle, 3: beta >= 4/alpha
  bool identity_holds = false;
};
Window window_m1_m2(double alpha, double beta);

struct GRoots {
  double r1 = 0;
  double r2 = 4;
  double r3 = 0;
  bool sign_pattern_ok = false;
};
double g_function(double x);
// Bisection brackets taken from the monotonicity intervals of g.
GRoots g_roots();

struct PnRow {
  std::int64_t n = 0;
  double p = 0;
  double approx = 0;
  double scaled_residual = 0;
  bool exact = false;  // false: binomial surrogate
};
struct PnTable {
  std::vector<PnRow> rows;
  double max_residual = 0;
  double spread = 0;  // max / min scaled residual
  bool pass = false;  // every residual <= 2 and spread <= 4
};
// Exact family value with cycle type [n + 1] for n <= 1000, otherwise the
// surrogate P(Bin(2n, 1/2) >= n - 1).
PnTable pn_expansion_check(std::span<const std::int64_t> ns);

struct CurveRow {
  double alpha = 0;
  double f = 0;
  bool is_extremum = false;
};
struct Curve {
  std::vector<CurveRow> rows;  // sorted by alpha
  double min_f = 0;
  double argmin_alpha = 0;
  std::vector<std::string> pattern;  // "inc"/"dec" runs along the grid
  bool pattern_ok = false;
  bool above_half = false;
};
// Log-spaced grid with the three extrema sqrt(r1), 2, sqrt(r3) inserted.
Curve emit_f_alpha_curve(double alpha_min, double alpha_max, int points);

// ------------------------------------------------------------- intervals

struct Interval {
  double low = 0;
  double high = 0;
};
inline constexpr double kZ99 = 2.5758293035489004;
Interval wilson_interval(std::int64_t successes, std::int64_t trials, double z = kZ99);

}  // namespace cycsub
