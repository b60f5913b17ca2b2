#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "preop/scope.hpp"

using namespace preop;

namespace {

// integer monotone-chain convex hull; returns the extreme points
std::vector<Cell> hull(std::vector<Cell> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  const auto cross = [](const Cell& o, const Cell& a, const Cell& b) {
    return static_cast<long long>(a.i - o.i) * (b.j - o.j) -
           static_cast<long long>(a.j - o.j) * (b.i - o.i);
  };
  std::vector<Cell> h(2 * pts.size());
  std::size_t k = 0;
  for (const Cell& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    while (k >= lower && cross(h[k - 2], h[k - 1], *it) <= 0) --k;
    h[k++] = *it;
  }
  h.resize(k - 1);
  return h;
}

}  // namespace

TEST_CASE("scope decomposition cell counts", "[scope]") {
  const auto s222 = scope_decompose(2, 2, 2);
  CHECK(s222.b.size() == 1);
  CHECK(s222.a.size() == 4);
  CHECK(s222.g.size() == 1);
  CHECK(s222.g == std::vector<Cell>{{0, 2}});

  // degree-1 outer empties both triangles
  for (int df : {0, 1, 2, 3})
    for (int dg : {0, 1, 2, 3}) {
      const auto s = scope_decompose(1, df, dg);
      CHECK(s.b.empty());
      CHECK(s.g.empty());
      CHECK(s.a.size() == static_cast<std::size_t>(df));
    }

  const auto s322 = scope_decompose(3, 2, 2);
  CHECK(s322.b.size() == 3);
  CHECK(s322.g.size() == 3);
  CHECK(s322.a.size() == 6);
  CHECK(s322.all().size() == 12);
}

TEST_CASE("scope is a disjoint union with closed-form counts", "[scope]") {
  for (int dh = 1; dh <= 4; ++dh)
    for (int df = 0; df <= 3; ++df)
      for (int dg = 0; dg <= 3; ++dg) {
        const auto s = scope_decompose(dh, df, dg);
        const int sh = ddeg(dh);
        const int sf = ddeg(df);

        std::set<Cell> grid;
        for (int i = 0; i <= sh; ++i)
          for (int j = 0; j <= sf + sh; ++j) grid.insert({i, j});

        const auto united = s.all();  // keeps duplicates, sorted
        CHECK(united.size() == grid.size());
        CHECK(std::set<Cell>(united.begin(), united.end()) == grid);

        CHECK(s.b.size() == static_cast<std::size_t>(sh * (sh + 1) / 2));
        CHECK(s.g.size() == static_cast<std::size_t>(sh * (sh + 1) / 2));
        CHECK(s.a.size() == static_cast<std::size_t>((sh + 1) * (sf + 1)));
      }
  CHECK_THROWS_AS(scope_decompose(0, 2, 2), RangeError);
}

TEST_CASE("triangle G alone degenerates quietly", "[scope]") {
  CHECK(cells_g(0, 2, 2).empty());
  CHECK(cells_g(1, 2, 2).empty());
  CHECK(cells_g(2, 2, 2) == std::vector<Cell>{{0, 2}});
  CHECK(cells_g(2, 1, 1) == std::vector<Cell>{{0, 1}});
}

TEST_CASE("envelope geometry", "[scope]") {
  const auto e = envelope(2, 1);
  CHECK(e.gprime == std::vector<Cell>{{1, 2}});

  for (int dh = 1; dh <= 4; ++dh)
    for (int df = 1; df <= 3; ++df) {
      const auto env = envelope(dh, df);

      // truncated = G' disjoint-union boundary
      std::vector<Cell> united = env.gprime;
      united.insert(united.end(), env.boundary.begin(), env.boundary.end());
      std::sort(united.begin(), united.end());
      CHECK(united == env.truncated);
      CHECK(std::unique(united.begin(), united.end()) == united.end());

      // exactly the three corners were removed
      CHECK(env.envelope.size() == env.truncated.size() + 3);
      for (const Cell& r : env.removed) {
        CHECK(std::find(env.envelope.begin(), env.envelope.end(), r) != env.envelope.end());
        CHECK(std::find(env.truncated.begin(), env.truncated.end(), r) == env.truncated.end());
      }
    }
  CHECK_THROWS_AS(envelope(0, 1), RangeError);
}

TEST_CASE("truncated envelope is a hexagon", "[scope]") {
  for (int dh = 2; dh <= 4; ++dh)
    for (int df = 1; df <= 3; ++df) {
      const auto env = envelope(dh, df);
      CHECK(hull(env.truncated).size() == 6);
    }
}
