#include "mammoseg/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace mammoseg {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool adjacent8(Point a, Point b) {
  int dx = std::abs(a.x - b.x), dy = std::abs(a.y - b.y);
  return (dx | dy) != 0 && dx <= 1 && dy <= 1;
}

void bresenham(Point a, Point b, std::vector<Point>& out) {
  int dx = std::abs(b.x - a.x), sx = a.x < b.x ? 1 : -1;
  int dy = -std::abs(b.y - a.y), sy = a.y < b.y ? 1 : -1;
  int err = dx + dy;
  Point p = a;
  while (true) {
    out.push_back(p);
    if (p == b) break;
    int e2 = 2 * err;
    if (e2 >= dy) {
      err += dy;
      p.x += sx;
    }
    if (e2 <= dx) {
      err += dx;
      p.y += sy;
    }
  }
}

}  // namespace

Polygon circle_polygon(PointF center, double radius, int n_points) {
  Polygon poly;
  poly.reserve(n_points);
  for (int i = 0; i < n_points; ++i) {
    double t = 2.0 * kPi * i / n_points;
    poly.push_back({center.x + radius * std::cos(t), center.y + radius * std::sin(t)});
  }
  return poly;
}

Polygon ellipse_polygon(PointF center, double a, double b, double angle, int n_points) {
  Polygon poly;
  poly.reserve(n_points);
  double c = std::cos(angle), s = std::sin(angle);
  for (int i = 0; i < n_points; ++i) {
    double t = 2.0 * kPi * i / n_points;
    double u = a * std::cos(t), v = b * std::sin(t);
    poly.push_back({center.x + u * c - v * s, center.y + u * s + v * c});
  }
  return poly;
}

Polygon resample_closed(const Polygon& poly, double spacing, int min_pts, int max_pts) {
  require(!poly.empty(), "resample: empty polygon");
  double total = 0;
  for (size_t i = 0; i < poly.size(); ++i) {
    const PointF& p = poly[i];
    const PointF& q = poly[(i + 1) % poly.size()];
    total += std::hypot(q.x - p.x, q.y - p.y);
  }
  int n = std::clamp(static_cast<int>(std::lround(total / std::max(spacing, 1e-9))),
                     min_pts, max_pts);
  return resample_closed_n(poly, n);
}

Polygon resample_closed_n(const Polygon& poly, int n) {
  require(!poly.empty() && n >= 3, "resample: need a polygon and n >= 3");
  const size_t m = poly.size();
  std::vector<double> cum(m + 1, 0.0);
  for (size_t i = 0; i < m; ++i) {
    const PointF& p = poly[i];
    const PointF& q = poly[(i + 1) % m];
    cum[i + 1] = cum[i] + std::hypot(q.x - p.x, q.y - p.y);
  }
  double total = cum[m];
  if (total <= 0) return Polygon(static_cast<size_t>(n), poly[0]);

  Polygon out;
  out.reserve(n);
  size_t seg = 0;
  for (int i = 0; i < n; ++i) {
    double target = total * i / n;
    while (seg + 1 < m && cum[seg + 1] < target) ++seg;
    double seg_len = cum[seg + 1] - cum[seg];
    double t = seg_len > 0 ? (target - cum[seg]) / seg_len : 0.0;
    const PointF& p = poly[seg];
    const PointF& q = poly[(seg + 1) % m];
    out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
  }
  return out;
}

double polygon_area(const Polygon& poly) {
  double acc = 0;
  for (size_t i = 0; i < poly.size(); ++i) {
    const PointF& p = poly[i];
    const PointF& q = poly[(i + 1) % poly.size()];
    acc += p.x * q.y - q.x * p.y;
  }
  return std::abs(acc) / 2.0;
}

Contour rasterize_closed(const Polygon& poly) {
  require(poly.size() >= 3, "rasterize: need at least 3 vertices");
  std::vector<Point> rounded;
  rounded.reserve(poly.size());
  for (const PointF& p : poly)
    rounded.push_back({static_cast<int>(std::lround(p.x)), static_cast<int>(std::lround(p.y))});

  std::vector<Point> chain;
  for (size_t i = 0; i < rounded.size(); ++i) {
    std::vector<Point> seg;
    bresenham(rounded[i], rounded[(i + 1) % rounded.size()], seg);
    seg.pop_back();  // endpoint opens the next segment
    for (Point p : seg)
      if (chain.empty() || !(chain.back() == p)) chain.push_back(p);
  }
  // close-up duplicates across the wrap point
  while (chain.size() > 1 && chain.front() == chain.back()) chain.pop_back();
  return Contour{std::move(chain)};
}

bool is_closed_chain(const Contour& c) {
  const auto& pts = c.points;
  if (pts.size() < 4) return false;
  for (size_t i = 0; i < pts.size(); ++i) {
    const Point& a = pts[i];
    const Point& b = pts[(i + 1) % pts.size()];
    if (a == b || !adjacent8(a, b)) return false;
  }
  return true;
}

Mask chain_mask(const Contour& c, int width, int height) {
  Mask m(width, height);
  for (Point p : c.points)
    if (m.in_bounds(p)) m.set(p, true);
  return m;
}

Mask region_from_contour(const Contour& c, int width, int height) {
  Mask chain = chain_mask(c, width, height);
  // flood the complement from the border; what is never reached is enclosed
  Mask outside(width, height);
  std::queue<Point> q;
  auto push = [&](int x, int y) {
    if (x < 0 || x >= width || y < 0 || y >= height) return;
    if (chain.get(x, y) || outside.get(x, y)) return;
    outside.set(x, y, true);
    q.push({x, y});
  };
  for (int x = 0; x < width; ++x) {
    push(x, 0);
    push(x, height - 1);
  }
  for (int y = 0; y < height; ++y) {
    push(0, y);
    push(width - 1, y);
  }
  while (!q.empty()) {
    Point p = q.front();
    q.pop();
    push(p.x + 1, p.y);
    push(p.x - 1, p.y);
    push(p.x, p.y + 1);
    push(p.x, p.y - 1);
  }
  Mask region(width, height);
  for (size_t i = 0; i < region.bits.size(); ++i)
    region.bits[i] = outside.bits[i] ? 0 : 1;
  return region;
}

ContourInterior contour_interior(const Contour& c, int width, int height) {
  ContourInterior out;
  out.region = region_from_contour(c, width, height);
  Mask chain = chain_mask(c, width, height);
  double sx = 0, sy = 0;
  size_t n = 0;
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x)
      if (out.region.get(x, y) && !chain.get(x, y)) {
        sx += x;
        sy += y;
        ++n;
      }
  if (n == 0) throw InvalidArgument("contour encloses zero interior pixels");
  out.interior_count = n;
  out.centroid = {sx / n, sy / n};
  return out;
}

std::vector<Point> boundary_pixels(const Mask& m) {
  std::vector<Point> out;
  for (int y = 0; y < m.height; ++y)
    for (int x = 0; x < m.width; ++x) {
      if (!m.get(x, y)) continue;
      bool edge = false;
      for (int dy = -1; dy <= 1 && !edge; ++dy)
        for (int dx = -1; dx <= 1 && !edge; ++dx) {
          if (dx == 0 && dy == 0) continue;
          int nx = x + dx, ny = y + dy;
          if (!m.in_bounds(nx, ny) || !m.get(nx, ny)) edge = true;
        }
      if (edge) out.push_back({x, y});
    }
  return out;
}

Mask boundary_mask(const Mask& m) {
  Mask out(m.width, m.height);
  for (Point p : boundary_pixels(m)) out.set(p, true);
  return out;
}

Mask component_containing(const Mask& m, Point seed, Connectivity conn) {
  Mask out(m.width, m.height);
  if (!m.in_bounds(seed) || !m.get(seed)) return out;
  std::queue<Point> q;
  out.set(seed, true);
  q.push(seed);
  const int n_dirs = conn == Connectivity::Four ? 4 : 8;
  static const int DX[8] = {1, -1, 0, 0, 1, 1, -1, -1};
  static const int DY[8] = {0, 0, 1, -1, 1, -1, 1, -1};
  while (!q.empty()) {
    Point p = q.front();
    q.pop();
    for (int d = 0; d < n_dirs; ++d) {
      int nx = p.x + DX[d], ny = p.y + DY[d];
      if (m.in_bounds(nx, ny) && m.get(nx, ny) && !out.get(nx, ny)) {
        out.set(nx, ny, true);
        q.push({nx, ny});
      }
    }
  }
  return out;
}

Mask largest_component(const Mask& m, Connectivity conn) {
  Mask seen(m.width, m.height);
  Mask best(m.width, m.height);
  size_t best_n = 0;
  for (int y = 0; y < m.height; ++y)
    for (int x = 0; x < m.width; ++x) {
      if (!m.get(x, y) || seen.get(x, y)) continue;
      Mask comp = component_containing(m, {x, y}, conn);
      size_t n = comp.count();
      for (size_t i = 0; i < seen.bits.size(); ++i)
        seen.bits[i] = seen.bits[i] | comp.bits[i];
      if (n > best_n) {
        best_n = n;
        best = std::move(comp);
      }
    }
  return best;
}

namespace {

// Moore neighbourhood clockwise on screen (y grows downward), starting West.
const int MOORE_DX[8] = {-1, -1, 0, 1, 1, 1, 0, -1};
const int MOORE_DY[8] = {0, -1, -1, -1, 0, 1, 1, 1};

int moore_index(Point center, Point nb) {
  for (int i = 0; i < 8; ++i)
    if (center.x + MOORE_DX[i] == nb.x && center.y + MOORE_DY[i] == nb.y) return i;
  return -1;
}

}  // namespace

Contour trace_boundary(const Mask& m, Point start_hint) {
  Mask comp = component_containing(m, start_hint, Connectivity::Eight);
  require(!comp.empty(), "trace_boundary: hint pixel not in mask");

  // topmost-leftmost pixel; its West neighbour is guaranteed empty
  Point start{-1, -1};
  for (int y = 0; y < comp.height && start.x < 0; ++y)
    for (int x = 0; x < comp.width; ++x)
      if (comp.get(x, y)) {
        start = {x, y};
        break;
      }

  auto solid = [&](Point p) { return comp.in_bounds(p) && comp.get(p); };

  std::vector<Point> chain{start};
  Point cur = start;
  Point backtrack{start.x - 1, start.y};
  const Point start_backtrack = backtrack;
  const size_t limit = comp.bits.size() * 4 + 16;

  while (chain.size() < limit) {
    int bi = moore_index(cur, backtrack);
    int found = -1;
    for (int k = 1; k <= 8; ++k) {
      int cand = (bi + k) % 8;
      Point nb{cur.x + MOORE_DX[cand], cur.y + MOORE_DY[cand]};
      if (solid(nb)) {
        found = cand;
        break;
      }
    }
    if (found < 0) break;  // isolated pixel
    Point next{cur.x + MOORE_DX[found], cur.y + MOORE_DY[found]};
    Point new_backtrack{cur.x + MOORE_DX[(found + 7) % 8], cur.y + MOORE_DY[(found + 7) % 8]};
    cur = next;
    backtrack = new_backtrack;
    if (cur == start && backtrack == start_backtrack) break;
    chain.push_back(cur);
  }
  if (chain.size() < 4)
    throw InvalidArgument("trace_boundary: component too small for a closed chain");
  return Contour{std::move(chain)};
}

Contour trace_boundary(const Mask& m) {
  Mask comp = largest_component(m, Connectivity::Eight);
  require(!comp.empty(), "trace_boundary: empty mask");
  for (int y = 0; y < comp.height; ++y)
    for (int x = 0; x < comp.width; ++x)
      if (comp.get(x, y)) return trace_boundary(comp, {x, y});
  throw InvalidArgument("trace_boundary: empty mask");
}

double chain_length(const Contour& c) {
  require(c.points.size() >= 2, "chain_length: need at least 2 points");
  double len = 0;
  for (size_t i = 0; i < c.points.size(); ++i) {
    const Point& a = c.points[i];
    const Point& b = c.points[(i + 1) % c.points.size()];
    len += std::hypot(static_cast<double>(b.x - a.x), static_cast<double>(b.y - a.y));
  }
  return len;
}

MaskMoments mask_moments(const Mask& m) {
  MaskMoments mom;
  double sx = 0, sy = 0;
  for (int y = 0; y < m.height; ++y)
    for (int x = 0; x < m.width; ++x)
      if (m.get(x, y)) {
        mom.m00 += 1;
        sx += x;
        sy += y;
      }
  if (mom.m00 == 0) return mom;
  mom.cx = sx / mom.m00;
  mom.cy = sy / mom.m00;
  for (int y = 0; y < m.height; ++y)
    for (int x = 0; x < m.width; ++x)
      if (m.get(x, y)) {
        double dx = x - mom.cx, dy = y - mom.cy;
        mom.mu20 += dx * dx;
        mom.mu02 += dy * dy;
        mom.mu11 += dx * dy;
      }
  return mom;
}

double major_axis_angle(const MaskMoments& mom) {
  return 0.5 * std::atan2(2.0 * mom.mu11, mom.mu20 - mom.mu02);
}

}  // namespace mammoseg
