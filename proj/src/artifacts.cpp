#include "cycsub/artifacts.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace cycsub {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) s[i] = digits[v & 15];
  return s;
}

std::string format_double(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string curve_csv(const Curve& c) {
  std::string out = "alpha,f_alpha,is_extremum\n";
  for (const auto& r : c.rows) {
    out += format_double(r.alpha);
    out += ',';
    out += format_double(r.f);
    out += r.is_extremum ? ",1\n" : ",0\n";
  }
  return out;
}

namespace {

std::string fixed(double v) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(2);
  s << v;
  return s.str();
}

}  // namespace

std::string curve_svg(const Curve& c) {
  constexpr double W = 640, H = 400, L = 60, R = 20, T = 20, B = 50;
  const double a0 = std::log10(c.rows.front().alpha);
  const double a1 = std::log10(c.rows.back().alpha);
  double f0 = c.rows.front().f, f1 = f0;
  for (const auto& r : c.rows) {
    f0 = std::min(f0, r.f);
    f1 = std::max(f1, r.f);
  }
  const double pad = (f1 - f0) * 0.05 + 1e-9;
  f0 -= pad;
  f1 += pad;
  auto px = [&](double alpha) { return L + (std::log10(alpha) - a0) / (a1 - a0) * (W - L - R); };
  auto py = [&](double f) { return H - B - (f - f0) / (f1 - f0) * (H - T - B); };

  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W
    << ' ' << H << "\">\n"
    << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    << "  <line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B
    << "\" stroke=\"black\"/>\n"
    << "  <line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n"
    << "  <text x=\"" << (W + L - R) / 2 << "\" y=\"" << H - 12 << "\" text-anchor=\"middle\" font-size=\"14\">"
    << "alpha (log scale, " << format_double(c.rows.front().alpha) << " to " << format_double(c.rows.back().alpha)
    << ")</text>\n"
    << "  <text x=\"16\" y=\"" << (H - B + T) / 2 << "\" font-size=\"14\" transform=\"rotate(-90 16 "
    << (H - B + T) / 2 << ")\" text-anchor=\"middle\">f(alpha)</text>\n"
    << "  <text x=\"" << L - 6 << "\" y=\"" << fixed(py(f1 - pad)) << "\" text-anchor=\"end\" font-size=\"11\">"
    << fixed(f1 - pad) << "</text>\n"
    << "  <text x=\"" << L - 6 << "\" y=\"" << fixed(py(f0 + pad)) << "\" text-anchor=\"end\" font-size=\"11\">"
    << fixed(f0 + pad) << "</text>\n";

  s << "  <polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
  bool first = true;
  for (const auto& r : c.rows) {
    if (r.is_extremum) continue;
    s << (first ? "" : " ") << fixed(px(r.alpha)) << ',' << fixed(py(r.f));
    first = false;
  }
  s << "\"/>\n";
  for (const auto& r : c.rows) {
    if (!r.is_extremum) continue;
    s << "  <circle cx=\"" << fixed(px(r.alpha)) << "\" cy=\"" << fixed(py(r.f))
      << "\" r=\"4\" fill=\"crimson\"><title>alpha = " << format_double(r.alpha) << "</title></circle>\n";
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace cycsub
