#pragma once
// Reference implementations used only by tests. Nothing here calls into the
// library's algorithms; only its plain data types are shared.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "sqc/geometry.hpp"
#include "sqc/grid.hpp"

namespace oracle {

// CODATA 2018, typed in again rather than taken from the library.
inline constexpr double kE = 1.602176634e-19;
inline constexpr double kH = 6.62607015e-34;
inline constexpr double kKB = 1.380649e-23;
inline constexpr double kPi = 3.14159265358979323846;

inline double ec_hz(double c) { return kE * kE / (2.0 * c * kH); }
inline double ej_standard(double f, double ec) { return (f + ec) * (f + ec) / (8.0 * ec); }
// I_c = E_J h / phi0 with phi0 = h / 2e, i.e. 2 e E_J.
inline double ic_literal(double ej) { return ej * kH / (kH / (2.0 * kE)); }
inline double rn(double ic, double vg = 0.182e-3, double t = 0.020) {
  return kPi * vg / (2.0 * ic) * std::tanh(kE * vg / (2.0 * kKB * t));
}
inline double lj(double ic, double delta = 0.0) { return (kH / (2.0 * kPi)) / (2.0 * kE * ic * std::cos(delta)); }

// Shortest 4-connected path length in steps, nullopt when unreachable.
inline std::optional<int> bfs(const std::vector<std::uint8_t>& blocked, int cols, int rows, sqc::Cell s, sqc::Cell g) {
  std::vector<int> dist(static_cast<std::size_t>(cols) * rows, -1);
  auto at = [&](sqc::Cell c) { return static_cast<std::size_t>(c.y) * cols + c.x; };
  std::deque<sqc::Cell> q{s};
  dist[at(s)] = 0;
  const int dx[] = {1, -1, 0, 0}, dy[] = {0, 0, 1, -1};
  while (!q.empty()) {
    const sqc::Cell c = q.front();
    q.pop_front();
    if (c == g) return dist[at(c)];
    for (int k = 0; k < 4; ++k) {
      const sqc::Cell n{c.x + dx[k], c.y + dy[k]};
      if (n.x < 0 || n.y < 0 || n.x >= cols || n.y >= rows || blocked[at(n)] || dist[at(n)] >= 0) continue;
      dist[at(n)] = dist[at(c)] + 1;
      q.push_back(n);
    }
  }
  return std::nullopt;
}

// Minimum of steps + k*(turns + occupied cells entered), Dijkstra over
// (cell, arrival heading). 4-connected only.
inline std::optional<double> penalized_cost(const std::vector<std::uint8_t>& blocked,
                                            const std::vector<std::uint8_t>& occ, int cols, int rows, sqc::Cell s,
                                            sqc::Cell g, double k) {
  const int dx[] = {1, -1, 0, 0}, dy[] = {0, 0, 1, -1};
  const std::size_t n = static_cast<std::size_t>(cols) * rows * 5;
  std::vector<double> dist(n, 1e300);
  auto id = [&](sqc::Cell c, int h) { return (static_cast<std::size_t>(c.y) * cols + c.x) * 5 + (h + 1); };
  using Item = std::tuple<double, int, int, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[id(s, -1)] = 0;
  pq.push({0.0, s.x, s.y, -1});
  while (!pq.empty()) {
    auto [d, x, y, h] = pq.top();
    pq.pop();
    if (d > dist[id({x, y}, h)]) continue;
    if (x == g.x && y == g.y) return d;
    for (int k2 = 0; k2 < 4; ++k2) {
      const int nx = x + dx[k2], ny = y + dy[k2];
      if (nx < 0 || ny < 0 || nx >= cols || ny >= rows) continue;
      const std::size_t ci = static_cast<std::size_t>(ny) * cols + nx;
      if (blocked[ci]) continue;
      const double nd = d + 1 + k * ((h >= 0 && h != k2) + (occ[ci] ? 1 : 0));
      if (nd < dist[id({nx, ny}, k2)]) {
        dist[id({nx, ny}, k2)] = nd;
        pq.push({nd, nx, ny, k2});
      }
    }
  }
  return std::nullopt;
}

// Walk every unit step between listed vertices.
inline std::vector<sqc::Cell> unit_nodes(const std::vector<sqc::Cell>& vertices) {
  std::vector<sqc::Cell> out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i == 0) {
      out.push_back(vertices[0]);
      continue;
    }
    sqc::Cell c = vertices[i - 1];
    const sqc::Cell t = vertices[i];
    while (c != t) {
      c.x += (t.x > c.x) - (t.x < c.x);
      c.y += (t.y > c.y) - (t.y < c.y);
      out.push_back(c);
    }
  }
  return out;
}

inline int corners(const std::vector<sqc::Cell>& nodes) {
  int n = 0;
  for (std::size_t i = 1; i + 1 < nodes.size(); ++i) {
    const bool same = nodes[i].x - nodes[i - 1].x == nodes[i + 1].x - nodes[i].x &&
                      nodes[i].y - nodes[i - 1].y == nodes[i + 1].y - nodes[i].y;
    n += same ? 0 : 1;
  }
  return n;
}

inline int crossings(const std::vector<sqc::Cell>& nodes, const std::vector<std::uint8_t>& occ, int cols) {
  int n = 0;
  for (const auto& c : nodes) n += occ[static_cast<std::size_t>(c.y) * cols + c.x] ? 1 : 0;
  return n;
}

// True when no grid node is used by two different paths.
inline bool node_disjoint(const std::vector<std::vector<sqc::Cell>>& paths, std::pair<int, int>* clash = nullptr) {
  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    std::set<std::pair<int, int>> mine;
    for (const auto& c : paths[i]) mine.insert({c.x, c.y});
    for (const auto& p : mine)
      if (!seen.insert(p).second) {
        if (clash) *clash = p;
        return false;
      }
  }
  return true;
}

// Geometric intersection pieces between two polylines, brute force over all
// segment pairs; touching pieces are merged.
inline std::size_t intersection_pieces(const sqc::Polyline& a, const sqc::Polyline& b) {
  struct Piece {
    sqc::Point p, q;
  };
  std::vector<Piece> pieces;
  const double eps = 1e-9;
  auto on_seg = [&](sqc::Point p, sqc::Point s, sqc::Point t) {
    const double cr = (t.x - s.x) * (p.y - s.y) - (t.y - s.y) * (p.x - s.x);
    if (std::abs(cr) > eps) return false;
    return std::min(s.x, t.x) - eps <= p.x && p.x <= std::max(s.x, t.x) + eps && std::min(s.y, t.y) - eps <= p.y &&
           p.y <= std::max(s.y, t.y) + eps;
  };
  for (std::size_t i = 0; i + 1 < a.size(); ++i)
    for (std::size_t j = 0; j + 1 < b.size(); ++j) {
      const sqc::Point p = a[i], p2 = a[i + 1], q = b[j], q2 = b[j + 1];
      const double rx = p2.x - p.x, ry = p2.y - p.y, sx = q2.x - q.x, sy = q2.y - q.y;
      const double den = rx * sy - ry * sx;
      if (std::abs(den) > eps) {
        const double t = ((q.x - p.x) * sy - (q.y - p.y) * sx) / den;
        const double u = ((q.x - p.x) * ry - (q.y - p.y) * rx) / den;
        if (t >= -eps && t <= 1 + eps && u >= -eps && u <= 1 + eps) {
          const sqc::Point x{p.x + t * rx, p.y + t * ry};
          pieces.push_back({x, x});
        }
        continue;
      }
      // Parallel: collect the shared endpoints (collinear overlap or touch).
      std::vector<sqc::Point> shared;
      for (auto c : {q, q2})
        if (on_seg(c, p, p2)) shared.push_back(c);
      for (auto c : {p, p2})
        if (on_seg(c, q, q2)) shared.push_back(c);
      if (shared.empty()) continue;
      auto lo = *std::min_element(shared.begin(), shared.end(),
                                  [](auto l, auto r) { return std::tie(l.x, l.y) < std::tie(r.x, r.y); });
      auto hi = *std::max_element(shared.begin(), shared.end(),
                                  [](auto l, auto r) { return std::tie(l.x, l.y) < std::tie(r.x, r.y); });
      pieces.push_back({lo, hi});
    }
  // Union pieces that touch.
  std::vector<std::size_t> parent(pieces.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto touch = [&](const Piece& l, const Piece& r) {
    auto pt_seg = [&](sqc::Point c, sqc::Point s, sqc::Point t) {
      const double dx = t.x - s.x, dy = t.y - s.y, len2 = dx * dx + dy * dy;
      double u = len2 == 0 ? 0 : ((c.x - s.x) * dx + (c.y - s.y) * dy) / len2;
      u = std::clamp(u, 0.0, 1.0);
      return std::hypot(c.x - (s.x + u * dx), c.y - (s.y + u * dy));
    };
    return pt_seg(l.p, r.p, r.q) < 1e-6 || pt_seg(l.q, r.p, r.q) < 1e-6 || pt_seg(r.p, l.p, l.q) < 1e-6 ||
           pt_seg(r.q, l.p, l.q) < 1e-6;
  };
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (std::size_t j = i + 1; j < pieces.size(); ++j)
      if (touch(pieces[i], pieces[j])) parent[find(i)] = find(j);
  std::size_t n = 0;
  for (std::size_t i = 0; i < pieces.size(); ++i) n += find(i) == i;
  return n;
}

// Excess-64 real, built digit by digit from the definition.
inline std::uint64_t real8(double v) {
  if (v == 0) return 0;
  std::uint64_t sign = v < 0 ? 1 : 0;
  v = std::abs(v);
  int exp = 0;
  while (v >= 1.0) v /= 16.0, ++exp;
  while (v < 1.0 / 16.0) v *= 16.0, --exp;
  std::uint64_t mant = 0;
  for (int i = 0; i < 14; ++i) {  // 14 hex digits = 56 bits
    v *= 16.0;
    const int d = static_cast<int>(v);
    mant = (mant << 4) | static_cast<std::uint64_t>(d);
    v -= d;
  }
  if (v >= 0.5) ++mant;
  return (sign << 63) | (static_cast<std::uint64_t>(exp + 64) << 56) | mant;
}

}  // namespace oracle
