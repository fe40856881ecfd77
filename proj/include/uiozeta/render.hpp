#pragma once

// Drawings of a Dyck path on the n x n grid, (0,0) bottom-left.

#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "uiozeta/lattice.hpp"

namespace uiozeta {

/// 'o' marks path points, '+' other lattice points, '/' the diagonal cells.
inline std::string render_ascii(const DyckWord& d) {
  const int n = d.size();
  std::set<std::pair<int, int>> on_path, up_from, right_from;
  Point p;
  on_path.insert({0, 0});
  for (Step s : d.steps()) {
    if (s == Step::Up) {
      up_from.insert({p.x, p.y});
      ++p.y;
    } else {
      right_from.insert({p.x, p.y});
      ++p.x;
    }
    on_path.insert({p.x, p.y});
  }
  std::ostringstream os;
  for (int y = n; y >= 0; --y) {
    std::string row;
    for (int x = 0; x <= n; ++x) {
      row += on_path.count({x, y}) ? 'o' : '+';
      if (x < n) row += right_from.count({x, y}) ? "---" : "   ";
    }
    os << row << '\n';
    if (y == 0) break;
    std::string cells;
    for (int x = 0; x <= n; ++x) {
      cells += up_from.count({x, y - 1}) ? '|' : ' ';
      if (x < n) cells += x == y - 1 ? " / " : "   ";
    }
    while (!cells.empty() && cells.back() == ' ') cells.pop_back();
    os << cells << '\n';
  }
  return os.str();
}

/// SVG drawing; `diagonals` adds the dashed lines y = x + t read by zeta.
inline std::string render_svg(const DyckWord& d, bool diagonals = false) {
  const int n = d.size();
  const int scale = 40;
  const int margin = 20;
  const int side = n * scale + 2 * margin;
  auto X = [&](int x) { return margin + x * scale; };
  auto Y = [&](int y) { return margin + (n - y) * scale; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\"" << side
     << "\" viewBox=\"0 0 " << side << ' ' << side << "\">\n";
  os << "  <g stroke=\"#bbbbbb\" stroke-width=\"1\">\n";
  for (int k = 0; k <= n; ++k) {
    os << "    <line x1=\"" << X(k) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(k) << "\" y2=\"" << Y(n)
       << "\"/>\n";
    os << "    <line x1=\"" << X(0) << "\" y1=\"" << Y(k) << "\" x2=\"" << X(n) << "\" y2=\"" << Y(k)
       << "\"/>\n";
  }
  os << "  </g>\n";
  os << "  <line class=\"diagonal\" x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(n)
     << "\" y2=\"" << Y(n) << "\" stroke=\"black\" stroke-dasharray=\"4 3\"/>\n";
  if (diagonals) {
    for (int t = 1; t < n; ++t) {
      os << "  <line class=\"diagonal-" << t << "\" x1=\"" << X(0) << "\" y1=\"" << Y(t)
         << "\" x2=\"" << X(n - t) << "\" y2=\"" << Y(n)
         << "\" stroke=\"gray\" stroke-width=\"0.5\" stroke-dasharray=\"2 3\"/>\n";
    }
  }
  os << "  <polyline class=\"path\" fill=\"none\" stroke=\"blue\" stroke-width=\"4\" points=\"";
  bool first = true;
  for (const Point& q : d.points()) {
    os << (first ? "" : " ") << X(q.x) << ',' << Y(q.y);
    first = false;
  }
  os << "\"/>\n</svg>\n";
  return os.str();
}

}  // namespace uiozeta
