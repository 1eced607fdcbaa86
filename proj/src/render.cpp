#include "dirtile/render.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <algorithm>
#include <deque>
#include <numbers>

#include "dirtile/errors.hpp"

namespace dirtile {

namespace {

using Point = std::complex<double>;

bool use_disk(const TilingPatch& patch, Geometry g) {
  if (g == Geometry::automatic) return !patch.params.euclidean();
  if (g == Geometry::euclidean && !patch.params.euclidean())
    throw DomainError("euclidean layout only exists for {3,6}, {4,4} and {6,3}");
  return g == Geometry::poincare_disk;
}

Point reflect_line(Point z, Point a, Point b) {
  Point d = b - a;
  return a + d * std::conj((z - a) / d);
}

// Inversion in the circle through a and b orthogonal to the unit circle.
Point reflect_disk(Point z, Point a, Point b) {
  double det = a.real() * b.imag() - a.imag() * b.real();
  if (std::abs(det) < 1e-12) return reflect_line(z, a, b);
  double ra = (std::norm(a) + 1) / 2, rb = (std::norm(b) + 1) / 2;
  Point c((ra * b.imag() - rb * a.imag()) / det, (a.real() * rb - b.real() * ra) / det);
  double r2 = std::norm(c) - 1;
  Point w = z - c;
  return c + r2 / std::conj(w);
}

// Points along the edge from a to b (a hyperbolic geodesic in the disk).
std::vector<Point> edge_points(Point a, Point b, bool disk) {
  if (!disk) return {a, b};
  auto to0 = [&](Point z) { return (z - a) / (1.0 - std::conj(a) * z); };
  auto from0 = [&](Point z) { return (z + a) / (1.0 + std::conj(a) * z); };
  Point q = to0(b);
  std::vector<Point> pts;
  const int k = 12;
  for (int i = 0; i <= k; ++i) pts.push_back(from0(q * (static_cast<double>(i) / k)));
  return pts;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", std::abs(v) < 5e-4 ? 0.0 : v);
  return buf;
}

}  // namespace

std::vector<std::pair<double, double>> layout_vertices(const TilingPatch& patch, Geometry geometry) {
  const int m = patch.sides(), n = patch.params.n;
  bool disk = use_disk(patch, geometry);
  double radius = 1.0;
  if (disk) {
    double c = 1.0 / (std::tan(std::numbers::pi / m) * std::tan(std::numbers::pi / n));
    radius = std::tanh(std::acosh(c) / 2);
  }
  std::vector<Point> pos(patch.vertices.size());
  std::vector<char> placed(patch.vertices.size(), 0);
  auto cycle = [&](int x) {
    std::vector<int> v;
    for (int i = 1; i <= m; ++i) v.push_back(patch.vertex_of(x, i));
    return v;
  };
  // Vertices of x from a, walking away from b.
  auto walk = [&](const std::vector<int>& v, int a, int b) {
    int at = static_cast<int>(std::find(v.begin(), v.end(), a) - v.begin());
    int step = v[(at + 1) % m] == b ? m - 1 : 1;
    std::vector<int> out;
    for (int k = 0; k < m; ++k) out.push_back(v[(at + k * step) % m]);
    return out;
  };
  int base = patch.base_tile;
  auto bv = cycle(base);
  for (int i = 0; i < m; ++i)
    if (bv[i] >= 0) {
      pos[bv[i]] = std::polar(radius, std::numbers::pi / 2 + 2 * std::numbers::pi * i / m);
      placed[bv[i]] = 1;
    }
  std::vector<char> done(patch.tiles.size(), 0);
  done[base] = 1;
  std::deque<int> q{base};
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (int j = 1; j <= m; ++j) {
      int y = patch.neighbor(x, j);
      if (y < 0 || done[y]) continue;
      const auto& e = patch.edges[patch.tiles[x].edges[j - 1]];
      auto vx = cycle(x), vy = cycle(y);
      if (std::count(vx.begin(), vx.end(), -1) || std::count(vy.begin(), vy.end(), -1)) continue;
      auto px = walk(vx, e.src, e.tgt), py = walk(vy, e.src, e.tgt);
      Point a = pos[e.src], b = pos[e.tgt];
      for (int k = 0; k < m; ++k)
        if (!placed[py[k]]) {
          pos[py[k]] = disk ? reflect_disk(pos[px[k]], a, b) : reflect_line(pos[px[k]], a, b);
          placed[py[k]] = 1;
        }
      done[y] = 1;
      q.push_back(y);
    }
  }
  std::vector<std::pair<double, double>> out;
  for (const auto& p : pos) out.emplace_back(p.real(), p.imag());
  return out;
}

std::string render_svg(const TilingPatch& patch, const EdgeReversal* tau, const RenderStyle& style) {
  bool disk = use_disk(patch, style.geometry);
  auto raw = layout_vertices(patch, style.geometry);
  std::vector<Point> pos;
  for (auto [x, y] : raw) pos.emplace_back(x, y);
  double lo_x = -1, hi_x = 1, lo_y = -1, hi_y = 1;
  if (!disk) {
    lo_x = hi_x = pos.empty() ? 0 : pos[0].real();
    lo_y = hi_y = pos.empty() ? 0 : pos[0].imag();
    for (auto p : pos) {
      lo_x = std::min(lo_x, p.real());
      hi_x = std::max(hi_x, p.real());
      lo_y = std::min(lo_y, p.imag());
      hi_y = std::max(hi_y, p.imag());
    }
  }
  double span = std::max(hi_x - lo_x, hi_y - lo_y);
  double scale = style.size * 0.9 / (span > 0 ? span : 1);
  double cx = (lo_x + hi_x) / 2, cy = (lo_y + hi_y) / 2;
  auto screen = [&](Point p) {
    return Point(style.size / 2.0 + (p.real() - cx) * scale, style.size / 2.0 - (p.imag() - cy) * scale);
  };
  auto pt = [&](Point p) {
    Point s = screen(p);
    return num(s.real()) + "," + num(s.imag());
  };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(style.size) + "\" height=\"" +
         std::to_string(style.size) + "\" viewBox=\"0 0 " + std::to_string(style.size) + " " + std::to_string(style.size) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (disk)
    out += "<circle cx=\"" + num(style.size / 2.0) + "\" cy=\"" + num(style.size / 2.0) + "\" r=\"" + num(scale) +
           "\" fill=\"none\" stroke=\"#999999\"/>\n";

  out += "<g stroke=\"none\">\n";
  for (int x = 0; x < static_cast<int>(patch.tiles.size()); ++x) {
    std::string d;
    for (int i = 1; i <= patch.sides(); ++i) {
      int a = patch.vertex_of(x, i), b = patch.vertex_of(x, i % patch.sides() + 1);
      if (a < 0 || b < 0) continue;
      auto pts = edge_points(pos[a], pos[b], disk);
      for (std::size_t k = 0; k < pts.size(); ++k) d += (d.empty() ? "M" : "L") + pt(pts[k]);
    }
    out += "<path d=\"" + d + "Z\" fill=\"" + (patch.tiles[x].color > 0 ? "#ffffff" : "#eeeeee") + "\"/>\n";
  }
  out += "</g>\n<g fill=\"none\" stroke-width=\"1.2\">\n";
  for (int e = 0; e < static_cast<int>(patch.edges.size()); ++e) {
    const auto& pe = patch.edges[e];
    bool flipped = tau && tau->values.at(e) < 0;
    std::string colour = flipped ? style.highlight : "#000000";
    auto pts = edge_points(pos[pe.src], pos[pe.tgt], disk);
    std::string d;
    for (std::size_t k = 0; k < pts.size(); ++k) d += (k ? "L" : "M") + pt(pts[k]);
    out += "<path d=\"" + d + "\" stroke=\"" + colour + "\"/>\n";
    // Arrowhead at the midpoint, pointing from src to tgt.
    std::size_t h = pts.size() / 2;
    Point a = screen(pts.size() == 2 ? pts[0] : pts[h - 1]), b = screen(pts.size() == 2 ? pts[1] : pts[h + 1]);
    Point mid = pts.size() == 2 ? (a + b) / 2.0 : screen(pts[h]);
    Point dir = b - a;
    if (std::abs(dir) < 1e-9) dir = screen(pts.back()) - screen(pts.front());
    if (std::abs(dir) < 1e-9) continue;
    dir /= std::abs(dir);
    double len = std::min(8.0, 0.25 * std::abs(screen(pts.back()) - screen(pts.front())));
    Point tip = mid + dir * (len / 2), back = mid - dir * (len / 2), perp = dir * Point(0, 1) * (len / 2.5);
    out += "<path d=\"M" + num((back + perp).real()) + "," + num((back + perp).imag()) + "L" + num(tip.real()) + "," +
           num(tip.imag()) + "L" + num((back - perp).real()) + "," + num((back - perp).imag()) + "Z\" fill=\"" + colour +
           "\" stroke=\"none\"/>\n";
  }
  out += "</g>\n";

  if (style.show_tile_ids || style.show_edge_labels) {
    out += "<g font-family=\"sans-serif\" font-size=\"9\" text-anchor=\"middle\">\n";
    for (int x = 0; x < static_cast<int>(patch.tiles.size()); ++x) {
      Point c = 0;
      for (int i = 1; i <= patch.sides(); ++i) c += pos[std::max(0, patch.vertex_of(x, i))];
      c /= static_cast<double>(patch.sides());
      if (style.show_tile_ids) {
        Point s = screen(c);
        out += "<text x=\"" + num(s.real()) + "\" y=\"" + num(s.imag()) + "\">" + std::to_string(x) + "</text>\n";
      }
      if (style.show_edge_labels)
        for (int i = 1; i <= patch.sides(); ++i) {
          const auto& pe = patch.edges[patch.tiles[x].edges[i - 1]];
          Point mid = (pos[pe.src] + pos[pe.tgt]) / 2.0;
          Point s = screen(c + (mid - c) * 0.75);
          out += "<text x=\"" + num(s.real()) + "\" y=\"" + num(s.imag()) + "\" fill=\"#1f77b4\">" + std::to_string(i) + "</text>\n";
        }
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace dirtile
