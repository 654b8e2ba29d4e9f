#include "sqc/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace sqc {

namespace {
constexpr double kEps = 1e-9;
}

double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
double norm(Point a) { return std::hypot(a.x, a.y); }
double distance(Point a, Point b) { return norm(a - b); }

Rect Rect::unite(const Rect& o) const {
  return {std::min(x0, o.x0), std::min(y0, o.y0), std::max(x1, o.x1), std::max(y1, o.y1)};
}

Rect bounding_box(std::span<const Point> pts) {
  if (pts.empty()) return {};
  Rect r{pts[0].x, pts[0].y, pts[0].x, pts[0].y};
  for (const auto& p : pts) {
    r.x0 = std::min(r.x0, p.x);
    r.y0 = std::min(r.y0, p.y);
    r.x1 = std::max(r.x1, p.x);
    r.y1 = std::max(r.y1, p.y);
  }
  return r;
}

Polygon rect_polygon(const Rect& r) { return {{r.x0, r.y0}, {r.x1, r.y0}, {r.x1, r.y1}, {r.x0, r.y1}}; }

Polygon translated(const Polygon& poly, Point offset) {
  Polygon out;
  out.reserve(poly.size());
  for (const auto& p : poly) out.push_back(p + offset);
  return out;
}

double signed_area(const Polygon& poly) {
  double a = 0.0;
  for (std::size_t i = 0, n = poly.size(); i < n; ++i) a += cross(poly[i], poly[(i + 1) % n]);
  return a / 2.0;
}

double point_segment_distance(Point p, Point a, Point b) {
  const Point ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 <= 0.0) return distance(p, a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return distance(p, a + ab * t);
}

bool point_in_polygon(Point p, const Polygon& poly) {
  const std::size_t n = poly.size();
  if (n < 3) return false;
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point a = poly[i], b = poly[j];
    if (point_segment_distance(p, a, b) <= kEps) return true;
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

namespace {

int orientation(Point a, Point b, Point c) {
  const double v = cross(b - a, c - a);
  const double scale = std::max({norm(b - a), norm(c - a), 1.0});
  if (std::abs(v) <= kEps * scale) return 0;
  return v > 0 ? 1 : -1;
}

bool on_segment(Point p, Point a, Point b) {
  return p.x >= std::min(a.x, b.x) - kEps && p.x <= std::max(a.x, b.x) + kEps &&
         p.y >= std::min(a.y, b.y) - kEps && p.y <= std::max(a.y, b.y) + kEps;
}

}  // namespace

SegmentIntersection intersect_segments(Point a, Point b, Point c, Point d) {
  SegmentIntersection out;
  const int o1 = orientation(a, b, c), o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a), o4 = orientation(c, d, b);

  if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
    // Collinear: project onto the dominant axis of ab.
    const Point dir = (norm(b - a) > 0.0) ? b - a : d - c;
    if (norm(dir) == 0.0) {
      if (distance(a, c) <= kEps) out = {SegmentIntersection::Kind::Point, a, a};
      return out;
    }
    auto t = [&](Point p) { return dot(p - a, dir); };
    double s0 = t(a), s1 = t(b), u0 = t(c), u1 = t(d);
    Point pa = a, pb = b, pc = c, pd = d;
    if (s0 > s1) { std::swap(s0, s1); std::swap(pa, pb); }
    if (u0 > u1) { std::swap(u0, u1); std::swap(pc, pd); }
    const double lo = std::max(s0, u0), hi = std::min(s1, u1);
    const double tol = kEps * dot(dir, dir);
    if (lo > hi + tol) return out;
    const Point plo = (s0 >= u0) ? pa : pc;
    const Point phi = (s1 <= u1) ? pb : pd;
    if (hi - lo <= tol) {
      out = {SegmentIntersection::Kind::Point, plo, plo};
    } else {
      out = {SegmentIntersection::Kind::Overlap, plo, phi};
    }
    return out;
  }

  if (o1 != o2 && o3 != o4) {
    const Point r = b - a, s = d - c;
    const double denom = cross(r, s);
    if (std::abs(denom) > 0.0) {
      const double t = cross(c - a, s) / denom;
      const Point p = a + r * t;
      out = {SegmentIntersection::Kind::Point, p, p};
      return out;
    }
  }
  if (o1 == 0 && on_segment(c, a, b)) return {SegmentIntersection::Kind::Point, c, c};
  if (o2 == 0 && on_segment(d, a, b)) return {SegmentIntersection::Kind::Point, d, d};
  if (o3 == 0 && on_segment(a, c, d)) return {SegmentIntersection::Kind::Point, a, a};
  if (o4 == 0 && on_segment(b, c, d)) return {SegmentIntersection::Kind::Point, b, b};
  return out;
}

double segment_distance(Point a, Point b, Point c, Point d) {
  if (intersect_segments(a, b, c, d).kind != SegmentIntersection::Kind::None) return 0.0;
  return std::min({point_segment_distance(a, c, d), point_segment_distance(b, c, d),
                   point_segment_distance(c, a, b), point_segment_distance(d, a, b)});
}

double point_polygon_distance(Point p, const Polygon& poly) {
  if (point_in_polygon(p, poly)) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0, n = poly.size(); i < n; ++i)
    best = std::min(best, point_segment_distance(p, poly[i], poly[(i + 1) % n]));
  return best;
}

double polygon_distance(const Polygon& a, const Polygon& b) {
  if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
  if (point_in_polygon(a[0], b) || point_in_polygon(b[0], a)) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0, n = a.size(); i < n; ++i)
    for (std::size_t j = 0, m = b.size(); j < m; ++j)
      best = std::min(best, segment_distance(a[i], a[(i + 1) % n], b[j], b[(j + 1) % m]));
  return best;
}

double polyline_distance(const Polyline& a, const Polyline& b) {
  double best = std::numeric_limits<double>::infinity();
  if (a.size() == 1 && b.size() == 1) return distance(a[0], b[0]);
  for (std::size_t i = 0; i + 1 < std::max<std::size_t>(a.size(), 2); ++i) {
    const Point a0 = a[i], a1 = a.size() > 1 ? a[i + 1] : a[i];
    for (std::size_t j = 0; j + 1 < std::max<std::size_t>(b.size(), 2); ++j) {
      const Point b0 = b[j], b1 = b.size() > 1 ? b[j + 1] : b[j];
      best = std::min(best, segment_distance(a0, a1, b0, b1));
    }
  }
  return best;
}

double polyline_polygon_distance(const Polyline& line, const Polygon& poly) {
  if (line.empty() || poly.empty()) return std::numeric_limits<double>::infinity();
  if (point_in_polygon(line[0], poly)) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < line.size(); ++i)
    for (std::size_t j = 0, m = poly.size(); j < m; ++j)
      best = std::min(best, segment_distance(line[i], line[i + 1], poly[j], poly[(j + 1) % m]));
  if (line.size() == 1) best = point_polygon_distance(line[0], poly);
  return best;
}

bool is_simple_polygon(const Polygon& poly) {
  const std::size_t n = poly.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = poly[i], b = poly[(i + 1) % n];
    if (distance(a, b) <= kEps) return false;
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point c = poly[j], d = poly[(j + 1) % n];
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      const auto hit = intersect_segments(a, b, c, d);
      if (hit.kind == SegmentIntersection::Kind::None) continue;
      if (!adjacent) return false;
      if (hit.kind == SegmentIntersection::Kind::Overlap) return false;
    }
  }
  return true;
}

Polygon arc_band(Point center, double radius, double width, double start_angle, double end_angle,
                 int segments) {
  const double r_in = radius - width / 2.0, r_out = radius + width / 2.0;
  Polygon out;
  out.reserve(2 * (segments + 1));
  for (int i = 0; i <= segments; ++i) {
    const double t = start_angle + (end_angle - start_angle) * i / segments;
    out.push_back({center.x + r_out * std::cos(t), center.y + r_out * std::sin(t)});
  }
  for (int i = segments; i >= 0; --i) {
    const double t = start_angle + (end_angle - start_angle) * i / segments;
    out.push_back({center.x + r_in * std::cos(t), center.y + r_in * std::sin(t)});
  }
  return out;
}

Polyline simplify_polyline(const Polyline& line) {
  Polyline out;
  for (const auto& p : line) {
    if (!out.empty() && distance(out.back(), p) <= kEps) continue;
    while (out.size() >= 2 && orientation(out[out.size() - 2], out.back(), p) == 0 &&
           dot(out.back() - out[out.size() - 2], p - out.back()) > 0) {
      out.pop_back();
    }
    out.push_back(p);
  }
  return out;
}

Polyline round_corners(const Polyline& input, double radius, int segments_per_quarter) {
  const Polyline line = simplify_polyline(input);
  if (radius <= 0.0 || line.size() < 3) return line;
  Polyline out;
  out.push_back(line.front());
  for (std::size_t i = 1; i + 1 < line.size(); ++i) {
    const Point prev = line[i - 1], cur = line[i], next = line[i + 1];
    const double l_in = distance(prev, cur), l_out = distance(cur, next);
    const Point u = (cur - prev) * (1.0 / l_in), v = (next - cur) * (1.0 / l_out);
    const double turn = std::acos(std::clamp(dot(u, v), -1.0, 1.0));
    if (turn <= 1e-9) {
      out.push_back(cur);
      continue;
    }
    // Tangent length for a fillet of radius r: r * tan(turn / 2).
    double r = radius;
    const double t_max = std::min(l_in, l_out) / 2.0;
    double tangent = r * std::tan(turn / 2.0);
    if (tangent > t_max) {
      tangent = t_max;
      r = tangent / std::tan(turn / 2.0);
    }
    const Point start = cur - u * tangent, end = cur + v * tangent;
    const double side = cross(u, v) > 0 ? 1.0 : -1.0;
    const Point normal{-u.y * side, u.x * side};
    const Point center = start + normal * r;
    const double a0 = std::atan2(start.y - center.y, start.x - center.x);
    const double a1 = a0 + side * turn;
    const int segs = std::max(1, static_cast<int>(std::ceil(segments_per_quarter * turn / (std::numbers::pi / 2) - 1e-9)));
    out.push_back(start);
    for (int k = 1; k < segs; ++k) {
      const double a = a0 + (a1 - a0) * k / segs;
      out.push_back({center.x + r * std::cos(a), center.y + r * std::sin(a)});
    }
    out.push_back(end);
  }
  out.push_back(line.back());
  Polyline dedup;
  for (const auto& p : out)
    if (dedup.empty() || distance(dedup.back(), p) > kEps) dedup.push_back(p);
  return dedup;
}

}  // namespace sqc
