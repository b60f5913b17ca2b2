#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "preop/errors.hpp"
#include "preop/ring.hpp"

namespace preop {

/// Lattice cell (i, j) indexing a double composition (h o_i f) o_j g.
struct Cell {
  int i = 0;
  int j = 0;
  auto operator<=>(const Cell&) const = default;
};

inline std::string to_string(const Cell& c) {
  return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")";
}

/// The scope {0 <= i <= |h|, 0 <= j <= |f|+|h|} of (h o_i f) o_j g, split
/// into the triangles B and G and the parallelogram A.  Each rewrite rule
/// of the composition relations applies on exactly one of the three parts.
struct ScopeDecomposition {
  int deg_h = 0;
  int deg_f = 0;
  int deg_g = 0;
  std::vector<Cell> b;
  std::vector<Cell> a;
  std::vector<Cell> g;

  std::vector<Cell> all() const {
    std::vector<Cell> cells;
    cells.reserve(b.size() + a.size() + g.size());
    cells.insert(cells.end(), b.begin(), b.end());
    cells.insert(cells.end(), a.begin(), a.end());
    cells.insert(cells.end(), g.begin(), g.end());
    std::sort(cells.begin(), cells.end());
    return cells;
  }
};

/// Cells of the triangle G alone; empty whenever deg_h <= 1.  Safe for any
/// degrees (no precondition), which is what the tribrace sum needs.
inline std::vector<Cell> cells_g(int deg_h, int deg_f, int deg_g) {
  (void)deg_g;
  std::vector<Cell> cells;
  const int sh = ddeg(deg_h);
  const int sf = ddeg(deg_f);
  for (int i = 0; i <= sh - 1; ++i)
    for (int j = i + deg_f; j <= sf + sh; ++j)
      cells.push_back({i, j});
  return cells;
}

inline ScopeDecomposition scope_decompose(int deg_h, int deg_f, int deg_g) {
  if (deg_h < 1) throw RangeError("scope_decompose: outer degree must be >= 1");
  ScopeDecomposition s;
  s.deg_h = deg_h;
  s.deg_f = deg_f;
  s.deg_g = deg_g;
  const int sh = ddeg(deg_h);
  const int sf = ddeg(deg_f);
  for (int i = 1; i <= sh; ++i)
    for (int j = 0; j <= i - 1; ++j)
      s.b.push_back({i, j});
  for (int i = 0; i <= sh; ++i)
    for (int j = i; j <= i + sf; ++j)
      s.a.push_back({i, j});
  s.g = cells_g(deg_h, deg_f, deg_g);
  return s;
}

/// Index geometry of the auxiliary-variable bookkeeping: the shifted
/// triangle G' = {1 <= i <= |h|, i+f <= j <= f+|h|}, its enveloping
/// triangle, and the truncated envelope obtained by removing the three
/// corners of the envelope.  The truncated envelope splits as
/// G' disjoint-union boundary; for deg_h >= 2 it is a hexagon.
struct EnvelopeGeometry {
  int deg_h = 0;
  int deg_f = 0;
  std::vector<Cell> gprime;
  std::vector<Cell> envelope;
  std::vector<Cell> truncated;
  std::vector<Cell> boundary;      // truncated minus gprime
  std::array<Cell, 3> removed{};   // the three envelope corners
};

inline EnvelopeGeometry envelope(int deg_h, int deg_f) {
  if (deg_h < 1) throw RangeError("envelope: outer degree must be >= 1");
  EnvelopeGeometry e;
  e.deg_h = deg_h;
  e.deg_f = deg_f;
  const int sh = ddeg(deg_h);
  const int sf = ddeg(deg_f);

  for (int i = 1; i <= sh; ++i)
    for (int j = i + deg_f; j <= deg_f + sh; ++j)
      e.gprime.push_back({i, j});

  for (int i = 0; i <= deg_h + 1; ++i)
    for (int j = i + sf; j <= deg_f + deg_h; ++j)
      e.envelope.push_back({i, j});

  e.removed = {Cell{0, sf}, Cell{0, deg_f + deg_h}, Cell{deg_h + 1, deg_f + deg_h}};

  for (const Cell& c : e.envelope) {
    if (c == e.removed[0] || c == e.removed[1] || c == e.removed[2]) continue;
    e.truncated.push_back(c);
  }
  for (const Cell& c : e.truncated) {
    const bool interior = c.i >= 1 && c.i <= sh && c.j >= c.i + deg_f && c.j <= deg_f + sh;
    if (!interior) e.boundary.push_back(c);
  }
  return e;
}

}  // namespace preop
