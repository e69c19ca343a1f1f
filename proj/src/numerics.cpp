#include "cycsub/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "cycsub/counting.hpp"
#include "cycsub/errors.hpp"

namespace cycsub {

namespace {

constexpr double kLnSqrt2Pi = 0.918938533204672741780329736406;

// ln Gamma(n + 1) - [(n + 1/2) ln n - n + ln sqrt(2 pi)].
double stirlerr(std::int64_t n) {
  const double x = static_cast<double>(n);
  if (n <= 15) return std::lgamma(x + 1) - (x + 0.5) * std::log(x) + x - kLnSqrt2Pi;
  constexpr double s0 = 1.0 / 12, s1 = 1.0 / 360, s2 = 1.0 / 1260, s3 = 1.0 / 1680, s4 = 1.0 / 1188;
  const double x2 = x * x;
  return (s0 - (s1 - (s2 - (s3 - s4 / x2) / x2) / x2) / x2) / x;
}

// x ln(x / np) + np - x, computed without cancellation when x is near np.
double bd0(double x, double np) {
  if (std::abs(x - np) < 0.1 * (x + np)) {
    double v = (x - np) / (x + np);
    double s = (x - np) * v;
    double ej = 2 * x * v;
    v *= v;
    for (int j = 1; j < 1000; ++j) {
      ej *= v;
      const double s1 = s + ej / (2 * j + 1);
      if (s1 == s) return s1;
      s = s1;
    }
    return s;
  }
  return x * std::log(x / np) + np - x;
}

void check_tail_args(std::int64_t n, std::int64_t t) {
  if (n < 1) throw PreconditionError("binom_tail: n must be positive");
  if (t < -n || t > n) throw PreconditionError("binom_tail: t must satisfy |t| <= n");
}

// Numerators C(2n, j) for j = 0..2n (the common denominator is 4^n).
std::vector<mpz_class> central_row(std::int64_t n) {
  std::vector<mpz_class> row(2 * n + 1);
  row[0] = 1;
  for (std::int64_t j = 0; j < 2 * n; ++j) {
    row[j + 1] = row[j] * static_cast<unsigned long>(2 * n - j);
    mpz_divexact_ui(row[j + 1].get_mpz_t(), row[j + 1].get_mpz_t(), static_cast<unsigned long>(j + 1));
  }
  return row;
}

mpz_class four_pow(std::int64_t n) {
  mpz_class d;
  mpz_ui_pow_ui(d.get_mpz_t(), 2, static_cast<unsigned long>(2 * n));
  return d;
}

}  // namespace

double binom_half_pmf(std::int64_t big_n, std::int64_t k) {
  if (k < 0 || k > big_n) return 0;
  if (k == 0 || k == big_n) return std::ldexp(1.0, -static_cast<int>(std::min<std::int64_t>(big_n, 1 << 20)));
  const double nn = static_cast<double>(big_n);
  const double x = static_cast<double>(k);
  const double half = nn / 2;
  const double lc = stirlerr(big_n) - stirlerr(k) - stirlerr(big_n - k) - bd0(x, half) - bd0(nn - x, half);
  return std::exp(lc) * std::sqrt(nn / (2 * std::numbers::pi * x * (nn - x)));
}

mpq_class binom_tail_exact(std::int64_t n, std::int64_t t) {
  check_tail_args(n, t);
  if (n > kExactTailMaxN) throw PreconditionError("binom_tail: exact mode is limited to n <= 2000");
  const auto row = central_row(n);
  mpz_class num = 0;
  for (std::int64_t j = n + t; j <= 2 * n; ++j) num += row[j];
  mpq_class q(num, four_pow(n));
  q.canonicalize();
  return q;
}

double binom_tail_float(std::int64_t n, std::int64_t t) {
  check_tail_args(n, t);
  if (n > kFloatTailMaxN) throw PreconditionError("binom_tail: float mode is limited to n <= 10^7");
  if (t <= 0) return t == -n ? 1.0 : 1.0 - binom_tail_float(n, 1 - t);
  // Terms decrease from j = n + t on; Kahan summation until they vanish.
  double sum = 0, comp = 0;
  for (std::int64_t j = n + t; j <= 2 * n; ++j) {
    const double term = binom_half_pmf(2 * n, j);
    const double y = term - comp;
    const double s = sum + y;
    comp = (s - sum) - y;
    sum = s;
    if (term < sum * 1e-18) break;
  }
  return sum;
}

BinomTail binom_tail(std::int64_t n, std::int64_t t, TailMode mode) {
  BinomTail out;
  out.n = n;
  out.t = t;
  if (mode == TailMode::exact) {
    out.exact = binom_tail_exact(n, t);
    out.value = out.exact->get_d();
  } else {
    out.value = binom_tail_float(n, t);
  }
  return out;
}

double log_of(const mpq_class& q) {
  if (sgn(q) <= 0) throw PreconditionError("log_of: argument must be positive");
  long en = 0, ed = 0;
  const double dn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
  const double dd = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
  return std::log(dn) - std::log(dd) + static_cast<double>(en - ed) * std::numbers::ln2;
}

ChernoffCheck chernoff_check(std::int64_t n, std::int64_t t_max) {
  if (t_max < 1 || t_max > n) throw PreconditionError("chernoff_check: need 1 <= t_max <= n");
  ChernoffCheck out;
  out.worst_ratio = -1;
  std::vector<double> log_tail(t_max + 1);
  if (n <= kExactTailMaxN) {
    const auto row = central_row(n);
    const mpz_class den = four_pow(n);
    mpz_class suffix = 0;
    for (std::int64_t j = 2 * n; j >= n + 1; --j) {
      suffix += row[j];
      const std::int64_t t = j - n;
      if (t <= t_max) log_tail[t] = log_of(mpq_class(suffix, den));
    }
  } else {
    for (std::int64_t t = 1; t <= t_max; ++t) log_tail[t] = std::log(binom_tail_float(n, t));
  }
  for (std::int64_t t = 1; t <= t_max; ++t) {
    const double log_bound = -static_cast<double>(t) * t / (3.0 * n + t);
    const double ratio = std::exp(log_tail[t] - log_bound);
    if (ratio > out.worst_ratio) {
      out.worst_ratio = ratio;
      out.worst_t = t;
    }
    if (log_tail[t] > log_bound) out.holds = false;
  }
  return out;
}

SecondEstimateCheck fn_second_estimate_check(std::int64_t n) {
  if (n < 10'000) throw PreconditionError("fn_second_estimate_check: n must be at least 10^4");
  SecondEstimateCheck out;
  std::int64_t range = 0;
  while ((100 * (range + 1)) * (100 * (range + 1)) <= n) ++range;
  out.t_range = range;
  const double nn = static_cast<double>(n);
  const double root = std::sqrt(nn * std::numbers::pi);
  for (std::int64_t t = -range; t <= range; ++t) {
    const double f = binom_tail_float(n, t);
    const double approx = 0.5 - (static_cast<double>(t) - 0.5) / root;
    const double at = static_cast<double>(std::abs(t));
    const double bound = (2 * at * at * at + 1) / std::pow(nn, 1.5);
    const double ratio = std::abs(f - approx) / bound;
    out.max_ratio = std::max(out.max_ratio, ratio);
    if (ratio > 1) out.holds = false;
  }
  return out;
}

bool bindiff_check(int n, int m) {
  if (n < 0 || m < 0 || n + m > 512) throw PreconditionError("bindiff_check: need n, m >= 0 and n + m <= 512");
  std::vector<mpz_class> cn(n + 1), cm(m + 1);
  for (int i = 0; i <= n; ++i) mpz_bin_uiui(cn[i].get_mpz_t(), n, i);
  for (int j = 0; j <= m; ++j) mpz_bin_uiui(cm[j].get_mpz_t(), m, j);
  // X + m - Y = k  <=>  X = i and m - Y = k - i; P(m - Y = s) = C(m, s) / 2^m.
  for (int k = 0; k <= n + m; ++k) {
    mpz_class conv = 0;
    for (int i = std::max(0, k - m); i <= std::min(n, k); ++i) conv += cn[i] * cm[k - i];
    mpz_class target;
    mpz_bin_uiui(target.get_mpz_t(), n + m, k);
    if (conv != target) return false;
  }
  return true;
}

double normal_I(double a, double b) {
  if (std::isnan(a) || std::isnan(b)) throw PreconditionError("normal_I: NaN bound");
  if (a > b) throw PreconditionError("normal_I: requires a <= b");
  // The substitution t = s sqrt 2 turns the density integral into erf.
  if (a >= 0) return 0.5 * (std::erfc(a) - std::erfc(b));
  if (b <= 0) return 0.5 * (std::erfc(-b) - std::erfc(-a));
  return 0.5 * (std::erf(b) - std::erf(a));
}

double f_alpha(double alpha) {
  if (!(alpha > 0)) throw PreconditionError("f_alpha: alpha must be positive");
  return normal_I(-alpha / 4, 1 / alpha);
}

Window window_m1_m2(double alpha, double beta) {
  if (!(alpha > 0 && beta > 0)) throw PreconditionError("window_m1_m2: alpha and beta must be positive");
  Window w;
  w.m1 = std::max(alpha / 4, 2 / beta - alpha);
  w.m2 = std::max(beta / 4, 1 / alpha);
  w.value = normal_I(-w.m1, w.m2);
  const double f = f_alpha(alpha);
  if (beta <= 8 / (5 * alpha)) {
    w.regime = 1;
    w.identity_holds = w.value >= f - 1e-12;
  } else if (beta <= 4 / alpha) {
    w.regime = 2;
    w.identity_holds = w.value == f;
  } else {
    w.regime = 3;
    w.identity_holds = w.value >= f - 1e-12;
  }
  return w;
}

double g_function(double x) { return -x / 16 + 1 / x + std::log(x / 4); }

namespace {

// g changes sign exactly once on (lo, hi).
double bisect_root(double lo, double hi) {
  double glo = g_function(lo);
  const double ghi = g_function(hi);
  if (!((glo > 0) != (ghi > 0))) throw ConstructionFailure("g_roots: bracket does not change sign");
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double gm = g_function(mid);
    if (gm == 0) return mid;
    if ((gm > 0) == (glo > 0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  const double r = std::abs(g_function(lo)) <= std::abs(g_function(hi)) ? lo : hi;
  if (hi - lo > 1e-10 || std::abs(g_function(r)) > 1e-12) {
    throw ConstructionFailure("g_roots: bisection did not reach the required accuracy");
  }
  return r;
}

}  // namespace

GRoots g_roots() {
  const double s = 4 * std::sqrt(3.0);
  GRoots out;
  out.r1 = bisect_root(1e-6, 8 - s);
  out.r2 = 4;
  out.r3 = bisect_root(8 + s, 1e3);
  bool ok = g_function(4) == 0;
  for (int i = 0; i < 1000; ++i) {
    const double x = std::pow(10.0, -3 + 7.0 * i / 999);
    bool near_root = false;
    for (double r : {out.r1, out.r2, out.r3}) near_root = near_root || std::abs(x - r) <= 1e-9 * r;
    if (near_root) continue;
    const double gx = g_function(x);
    const bool positive = x < out.r1 || (x > 4 && x < out.r3);
    if (positive ? !(gx > 0) : !(gx < 0)) ok = false;
  }
  out.sign_pattern_ok = ok;
  return out;
}

PnTable pn_expansion_check(std::span<const std::int64_t> ns) {
  PnTable table;
  double lo = std::numeric_limits<double>::infinity();
  for (std::int64_t n : ns) {
    if (n < 2) throw PreconditionError("pn_expansion_check: n must be at least 2");
    PnRow row;
    row.n = n;
    if (n <= kExtremalExactMaxN) {
      const std::vector<int> type{static_cast<int>(n + 1)};
      row.p = p_exact_extremal(static_cast<int>(n), type).get_d();
      row.exact = true;
    } else {
      row.p = binom_tail_float(n, -1);
    }
    const double nn = static_cast<double>(n);
    row.approx = 0.5 + 1.5 / std::sqrt(nn * std::numbers::pi);
    row.scaled_residual = std::pow(nn, 1.5) * std::abs(row.p - row.approx);
    table.max_residual = std::max(table.max_residual, row.scaled_residual);
    lo = std::min(lo, row.scaled_residual);
    table.rows.push_back(row);
  }
  table.spread = table.rows.empty() ? 0 : (lo > 0 ? table.max_residual / lo : std::numeric_limits<double>::infinity());
  table.pass = !table.rows.empty() && table.max_residual <= 2 && table.spread <= 4;
  return table;
}

Curve emit_f_alpha_curve(double alpha_min, double alpha_max, int points) {
  if (!(alpha_min > 0 && alpha_min < alpha_max)) {
    throw PreconditionError("emit_f_alpha_curve: need 0 < alpha_min < alpha_max");
  }
  if (points < 2) throw PreconditionError("emit_f_alpha_curve: need at least 2 grid points");
  const GRoots roots = g_roots();
  const double extrema[3] = {std::sqrt(roots.r1), 2.0, std::sqrt(roots.r3)};
  Curve c;
  const double ratio = std::log(alpha_max / alpha_min);
  for (int i = 0; i < points; ++i) {
    const double a = i == points - 1 ? alpha_max : alpha_min * std::exp(ratio * i / (points - 1));
    c.rows.push_back({a, f_alpha(a), false});
  }
  for (double e : extrema) {
    if (e >= alpha_min && e <= alpha_max) c.rows.push_back({e, f_alpha(e), true});
  }
  std::stable_sort(c.rows.begin(), c.rows.end(), [](const CurveRow& x, const CurveRow& y) { return x.alpha < y.alpha; });

  c.min_f = c.rows.front().f;
  c.argmin_alpha = c.rows.front().alpha;
  c.above_half = true;
  for (const auto& r : c.rows) {
    if (r.f < c.min_f) {
      c.min_f = r.f;
      c.argmin_alpha = r.alpha;
    }
    c.above_half = c.above_half && r.f > 0.5;
  }
  for (std::size_t i = 1; i < c.rows.size(); ++i) {
    const double d = c.rows[i].f - c.rows[i - 1].f;
    if (d == 0) continue;
    const char* dir = d > 0 ? "inc" : "dec";
    if (c.pattern.empty() || c.pattern.back() != dir) c.pattern.emplace_back(dir);
  }
  // Increasing before sqrt(r1), then alternating at each extremum in range.
  std::vector<std::string> expected;
  bool inc = true;
  for (double e : extrema) {
    if (alpha_min >= e) inc = !inc;
  }
  expected.emplace_back(inc ? "inc" : "dec");
  for (double e : extrema) {
    if (e > alpha_min && e < alpha_max) {
      inc = !inc;
      expected.emplace_back(inc ? "inc" : "dec");
    }
  }
  c.pattern_ok = c.pattern == expected;
  return c;
}

Interval wilson_interval(std::int64_t successes, std::int64_t trials, double z) {
  if (trials <= 0) return {0, 1};
  if (successes < 0 || successes > trials) throw PreconditionError("wilson_interval: successes out of range");
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1 + z2 / n;
  const double centre = (p + z2 / (2 * n)) / denom;
  const double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
  return {std::clamp(std::min(centre - half, p), 0.0, 1.0), std::clamp(std::max(centre + half, p), 0.0, 1.0)};
}

}  // namespace cycsub
