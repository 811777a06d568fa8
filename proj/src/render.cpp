#include "grobfan/render.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <vector>

namespace grobfan {

namespace {

using BaryPoint = std::array<Rational, 3>;

Rational eval(const IntVec& a, const BaryPoint& p) {
  return Rational(a[0]) * p[0] + Rational(a[1]) * p[1] + Rational(a[2]) * p[2];
}

// Sutherland-Hodgman against the half-plane <a, .> >= 0, exact.
std::vector<BaryPoint> clip(const std::vector<BaryPoint>& poly, const IntVec& a) {
  std::vector<BaryPoint> out;
  for (size_t i = 0; i < poly.size(); ++i) {
    const BaryPoint& p = poly[i];
    const BaryPoint& q = poly[(i + 1) % poly.size()];
    Rational fp = eval(a, p), fq = eval(a, q);
    bool pin = fp >= 0, qin = fq >= 0;
    if (pin) out.push_back(p);
    if (pin != qin) {
      Rational t = fp / (fp - fq);
      BaryPoint r;
      for (int k = 0; k < 3; ++k) r[k] = p[k] + t * (q[k] - p[k]);
      out.push_back(r);
    }
  }
  return out;
}

std::vector<BaryPoint> dedup(std::vector<BaryPoint> poly) {
  std::vector<BaryPoint> out;
  for (const BaryPoint& p : poly)
    if (out.empty() || out.back() != p) out.push_back(p);
  while (out.size() > 1 && out.front() == out.back()) out.pop_back();
  return out;
}

// Shoelace in the affine chart (p0, p2); zero iff the slice is degenerate.
bool has_area(const std::vector<BaryPoint>& poly) {
  if (poly.size() < 3) return false;
  Rational area = 0;
  for (size_t i = 0; i < poly.size(); ++i) {
    const BaryPoint& p = poly[i];
    const BaryPoint& q = poly[(i + 1) % poly.size()];
    area += p[0] * q[2] - q[0] * p[2];
  }
  return area != 0;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string points_attr(const std::vector<BaryPoint>& poly) {
  const double cy = 560.0 - 600.0 * std::sqrt(3.0) / 2.0;
  std::string s;
  for (const BaryPoint& p : poly) {
    double a = mpq_class(p[0]).get_d();
    double b = mpq_class(p[1]).get_d();
    double c = mpq_class(p[2]).get_d();
    if (!s.empty()) s += ' ';
    s += fmt(620.0 * a + 20.0 * b + 320.0 * c) + ',' +
         fmt(560.0 * a + 560.0 * b + cy * c);
  }
  return s;
}

constexpr const char* kPalette[] = {
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948",
    "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac", "#86bcb6", "#d37295",
};

}  // namespace

std::string render_slice_svg(const FanSummary& summary) {
  if (summary.maximal.empty()) throw Error("nothing to render");
  if (summary.maximal[0].n() != 3)
    throw Error("render requires exactly 3 variables");

  std::string svg =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
      "width=\"640\" height=\"600\" viewBox=\"0 0 640 600\">\n"
      "<rect width=\"640\" height=\"600\" fill=\"white\"/>\n";
  const std::vector<BaryPoint> simplex = {
      {Rational(1), Rational(0), Rational(0)},
      {Rational(0), Rational(1), Rational(0)},
      {Rational(0), Rational(0), Rational(1)}};
  // gray positive-orthant slice behind everything
  svg += "<polygon points=\"" + points_attr(simplex) +
         "\" fill=\"#d9d9d9\" stroke=\"none\"/>\n";
  size_t color = 0;
  for (const MarkedBasis& g : summary.maximal) {
    Cone c = cone_of(g);
    std::vector<BaryPoint> poly = simplex;
    for (const IntVec& a : c.inequalities()) {
      poly = clip(poly, a);
      if (poly.empty()) break;
    }
    poly = dedup(std::move(poly));
    if (!has_area(poly)) {
      ++color;
      continue;
    }
    svg += "<polygon points=\"" + points_attr(poly) + "\" fill=\"" +
           kPalette[color % (sizeof kPalette / sizeof *kPalette)] +
           "\" fill-opacity=\"0.75\" stroke=\"black\" stroke-width=\"1\"/>\n";
    ++color;
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace grobfan
