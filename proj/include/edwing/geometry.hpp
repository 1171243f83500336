#pragma once
// Planar polygons: area, perimeter and convex clipping.

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace edwing::geometry {

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(Point const&, Point const&) = default;
};

using Polygon = std::vector<Point>;

inline double signed_area(Polygon const& p) {
  double a = 0.0;
  for (std::size_t i = 0, n = p.size(); i < n; ++i) {
    auto const& u = p[i];
    auto const& v = p[(i + 1) % n];
    a += u.x * v.y - v.x * u.y;
  }
  return 0.5 * a;
}

inline double area(Polygon const& p) { return std::abs(signed_area(p)); }

inline double perimeter(Polygon const& p) {
  double len = 0.0;
  for (std::size_t i = 0, n = p.size(); i < n; ++i)
    len += std::hypot(p[(i + 1) % n].x - p[i].x, p[(i + 1) % n].y - p[i].y);
  return len;
}

/// Drops repeated vertices and vertices lying on the segment between their
/// neighbours (within `eps`, in length units).
inline Polygon simplify(Polygon const& p, double eps) {
  Polygon out;
  for (auto const& v : p)
    if (out.empty() || std::hypot(v.x - out.back().x, v.y - out.back().y) > eps) out.push_back(v);
  while (out.size() > 1 && std::hypot(out.front().x - out.back().x, out.front().y - out.back().y) <= eps)
    out.pop_back();

  bool changed = true;
  while (changed && out.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < out.size(); ++i) {
      auto const& a = out[(i + out.size() - 1) % out.size()];
      auto const& b = out[i];
      auto const& c = out[(i + 1) % out.size()];
      double const cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
      double const base = std::hypot(c.x - a.x, c.y - a.y);
      if (base > 0.0 && std::abs(cross) / base <= eps) {
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return out;
}

/// Sutherland-Hodgman: clips `subject` by a convex counter-clockwise `clip`.
inline Polygon clip_convex(Polygon const& subject, Polygon const& clip) {
  Polygon out = subject;
  for (std::size_t e = 0, m = clip.size(); e < m && !out.empty(); ++e) {
    Point const a = clip[e];
    Point const b = clip[(e + 1) % m];
    auto side = [&](Point const& p) { return (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x); };
    Polygon in = std::move(out);
    out.clear();
    for (std::size_t i = 0, n = in.size(); i < n; ++i) {
      Point const cur = in[i];
      Point const prev = in[(i + n - 1) % n];
      double const s_cur = side(cur);
      double const s_prev = side(prev);
      if (s_cur >= 0.0) {
        if (s_prev < 0.0) {
          double const t = s_prev / (s_prev - s_cur);
          out.push_back({prev.x + t * (cur.x - prev.x), prev.y + t * (cur.y - prev.y)});
        }
        out.push_back(cur);
      } else if (s_prev >= 0.0) {
        double const t = s_prev / (s_prev - s_cur);
        out.push_back({prev.x + t * (cur.x - prev.x), prev.y + t * (cur.y - prev.y)});
      }
    }
  }
  return out;
}

inline Polygon rectangle(double x0, double y0, double x1, double y1) {
  return {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
}

}  // namespace edwing::geometry
