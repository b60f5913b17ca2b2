#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "preop/tree.hpp"

using namespace preop;

namespace {
Tree node2(const std::string& g) { return Tree::node(g, {Tree::leaf(), Tree::leaf()}); }
}  // namespace

TEST_CASE("leaf counting", "[tree]") {
  CHECK(Tree::leaf().leaves() == 1);
  CHECK(node2("a").leaves() == 2);
  CHECK(Tree::node("c", {}).leaves() == 0);  // arity-0 generator
  CHECK(Tree::node("a", {node2("b"), Tree::leaf()}).leaves() == 3);
}

TEST_CASE("grafting", "[tree]") {
  const Tree t = node2("a");
  CHECK(graft(Tree::leaf(), 0, t) == t);
  CHECK(graft(t, 0, Tree::leaf()) == t);
  CHECK(graft(t, 1, Tree::leaf()) == t);
  CHECK(graft(node2("a"), 1, node2("b")) == Tree::node("a", {Tree::leaf(), node2("b")}));
  CHECK(graft(node2("a"), 0, node2("b")) == Tree::node("a", {node2("b"), Tree::leaf()}));

  // grafting an arity-0 node eats a leaf
  CHECK(graft(node2("a"), 0, Tree::node("c", {})).leaves() == 1);

  CHECK_THROWS_AS(graft(t, 2, t), RangeError);
  CHECK_THROWS_AS(graft(t, -1, t), RangeError);
  CHECK_THROWS_AS(graft(Tree::node("c", {}), 0, t), RangeError);
}

TEST_CASE("canonical order: leaf first, then names, then children", "[tree]") {
  CHECK(Tree::leaf() < node2("a"));
  CHECK(node2("a") < node2("b"));
  CHECK(Tree::node("a", {Tree::leaf(), node2("b")}) < Tree::node("a", {node2("b"), Tree::leaf()}));
  CHECK(node2("a") == node2("a"));

  std::map<Tree, int> order;
  order[node2("b")] = 0;
  order[Tree::leaf()] = 1;
  order[node2("a")] = 2;
  auto it = order.begin();
  CHECK((it++)->first == Tree::leaf());
  CHECK((it++)->first == node2("a"));
  CHECK((it++)->first == node2("b"));
}

TEST_CASE("preorder rendering", "[tree]") {
  CHECK(Tree::leaf().str() == "*");
  CHECK(node2("a").str() == "a(*,*)");
  CHECK(Tree::node("a", {Tree::leaf(), node2("b")}).str() == "a(*,b(*,*))");
}
