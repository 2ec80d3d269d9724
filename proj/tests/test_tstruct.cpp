#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "trihered/cones.hpp"
#include "trihered/tstruct.hpp"

using namespace trihered;

namespace {

Node nd(const PathGraph& g, const std::string& s) {
  auto n = g.parse(s);
  REQUIRE(n.has_value());
  return *n;
}

std::set<Node> nodes_of(const PathGraph& g, std::initializer_list<const char*> names) {
  std::set<Node> out;
  for (const char* s : names) out.insert(nd(g, s));
  return out;
}

}  // namespace

TEST_CASE("path graph edges agree with formal Hom dimensions") {
  for (const auto& q : {linear_quiver(2), linear_quiver(3), d4_quiver()}) {
    const auto g = build_path_graph(q, 0, 2);
    for (const auto& a : g.nodes()) {
      for (const auto& b : g.nodes()) {
        const bool nonzero = HomSpace(g.object(a), g.object(b)).dim() > 0;
        CHECK(g.has_edge(a, b, EdgeKind::hom) == nonzero);
        CHECK(g.has_edge(a, b, EdgeKind::shift) == (b == a.shifted(1)));
      }
    }
  }
}

TEST_CASE("A2 path graph examples") {
  const auto g = build_path_graph(linear_quiver(2), 0, 2);
  CHECK(g.size() == 9);
  CHECK(g.has_edge(nd(g, "S1"), nd(g, "S2[1]"), EdgeKind::hom));
  CHECK_FALSE(g.has_edge(nd(g, "S1"), nd(g, "P1")));
  CHECK(g.has_edge(nd(g, "P1"), nd(g, "S1"), EdgeKind::hom));
  for (const auto& n : g.nodes()) CHECK(g.has_edge(n, n.shifted(1), EdgeKind::shift) == (n.shift < 2));
  CHECK(g.parse("S1[x]") == std::nullopt);
  CHECK(g.parse("Q7") == std::nullopt);
  CHECK(g.name(nd(g, "P1[2]")) == g.catalog()[nd(g, "P1").index].label + "[2]");
}

TEST_CASE("blocks") {
  CHECK(blocks(build_path_graph(linear_quiver(2), 0, 2)).size() == 1);
  CHECK(blocks(build_path_graph(linear_quiver(3), -1, 1)).size() == 1);
  CHECK(blocks(build_path_graph(d4_quiver(), 0, 1)).size() == 1);
  auto two = make_quiver(2, {});
  const auto g = build_path_graph(two, 0, 2);
  const auto b = blocks(g);
  REQUIRE(b.size() == 2);
  CHECK(b[0].size() == 3);
  CHECK(b[1].size() == 3);
  CHECK(blocks(build_path_graph(linear_quiver(2), 1, 0)).empty());
}

TEST_CASE("walk to path: A2 examples") {
  const auto g = build_path_graph(linear_quiver(2), -1, 3);
  const Node s1 = nd(g, "S1"), p1 = nd(g, "P1"), s2 = nd(g, "S2");

  Walk fwd{s1, {{StepKind::forward_hom, s2.shifted(1)}, {StepKind::forward_hom, p1.shifted(1)}}};
  auto r = walk_to_path(g, fwd);
  CHECK(r.m == 0);
  CHECK(r.rewrites == 0);
  CHECK(r.nodes == std::vector<Node>{s1, s2.shifted(1), p1.shifted(1)});

  Walk back{s1, {{StepKind::backward_hom, p1}}};
  r = walk_to_path(g, back);
  CHECK(r.m == 1);
  CHECK(r.rewrites == 1);
  CHECK(r.nodes == std::vector<Node>{s1, s2.shifted(1), p1.shifted(1)});

  Walk down{s1.shifted(1), {{StepKind::shift_down, s1}, {StepKind::forward_hom, s2.shifted(1)}}};
  r = walk_to_path(g, down);
  CHECK(r.m == 1);
  CHECK(r.nodes == std::vector<Node>{s1.shifted(1), s2.shifted(2)});

  Walk bad{s1, {{StepKind::forward_hom, p1}}};
  CHECK_THROWS_AS(walk_to_path(g, bad), Error);

  const auto small = build_path_graph(linear_quiver(2), 0, 0);
  CHECK_THROWS_AS(walk_to_path(small, Walk{s1, {{StepKind::backward_hom, p1}}}), WindowExhausted);
}

TEST_CASE("walk to path: random walks on A3 and D4") {
  std::mt19937_64 rng(41);
  for (const auto& q : {linear_quiver(3), d4_quiver()}) {
    const auto g = build_path_graph(q, -2, 12);
    const std::size_t n = g.catalog().size();
    for (int trial = 0; trial < 60; ++trial) {
      Walk w{Node{rng() % n, 0}, {}};
      std::size_t backward = 0;
      Node cur = w.start;
      for (int s = 0; s < 4; ++s) {
        std::vector<WalkStep> options;
        for (std::size_t j = 0; j < n; ++j) {
          for (int d : {-1, 0, 1}) {
            const Node b{j, cur.shift + d};
            if (b.shift < -1 || b.shift > 1) continue;
            if (g.hom_nonzero(cur, b)) options.push_back({StepKind::forward_hom, b});
            if (g.hom_nonzero(b, cur)) options.push_back({StepKind::backward_hom, b});
          }
        }
        if (cur.shift < 1) options.push_back({StepKind::shift_up, cur.shifted(1)});
        if (cur.shift > -1) options.push_back({StepKind::shift_down, cur.shifted(-1)});
        const auto step = options[rng() % options.size()];
        if (step.kind == StepKind::backward_hom || step.kind == StepKind::shift_down) ++backward;
        w.steps.push_back(step);
        cur = step.to;
      }
      const auto r = walk_to_path(g, w);
      CHECK(r.m >= 0);
      CHECK(r.rewrites <= backward);
      CHECK(r.nodes.front() == w.start);
      CHECK(r.nodes.back() == w.end().shifted(r.m));
      for (std::size_t i = 0; i + 1 < r.nodes.size(); ++i) CHECK(g.has_edge(r.nodes[i], r.nodes[i + 1]));
    }
  }
}

TEST_CASE("t-structure from S1 on A2") {
  const auto g = build_path_graph(linear_quiver(2), -2, 3);
  const auto ts = t_structure_from(g, nd(g, "S1"));
  CHECK(ts.heart == nodes_of(g, {"S1", "S2[1]", "P1[1]"}));
  std::set<Node> expect;
  for (int k = 0; k <= 3; ++k) expect.insert(nd(g, "S1").shifted(k));
  for (int k = 1; k <= 3; ++k) {
    expect.insert(nd(g, "S2").shifted(k));
    expect.insert(nd(g, "P1").shifted(k));
  }
  CHECK(ts.leq0 == expect);
  CHECK(ts.report.passed());
  CHECK(ts.bounded);

  const auto tp = t_structure_from(g, nd(g, "P1"));
  CHECK(tp.heart.count(nd(g, "P1")) == 1);
}

TEST_CASE("t-structures: exhaustive over A2, A3 and D4") {
  for (const auto& q : {linear_quiver(2), linear_quiver(3), d4_quiver()}) {
    const auto g = build_path_graph(q, -2, 4);
    for (const auto& m : g.nodes()) {
      if (m.shift < -1 || m.shift > 1) continue;
      const auto ts = t_structure_from(g, m);
      CHECK_MESSAGE(ts.report.passed(), g.name(m));
      CHECK(ts.heart.count(m) == 1);
      CHECK(ts.bounded);
      CHECK(is_bounded(g, m).bounded);
      for (const auto& n : g.nodes()) {
        if (ts.leq0.count(n) && g.contains(n.shifted(1))) CHECK(ts.leq0.count(n.shifted(1)) == 1);
        if (ts.geq0.count(n) && g.contains(n.shifted(-1))) CHECK(ts.geq0.count(n.shifted(-1)) == 1);
      }
      // Heart objects only see Hom and Ext^1 among themselves.
      for (const auto& a : ts.heart) {
        for (const auto& b : ts.heart) {
          for (int n = -3; n <= 4; ++n) {
            if (n == 0 || n == 1) continue;
            CHECK(HomSpace(g.object(a), g.object(b).shift(n)).dim() == 0);
          }
        }
      }
    }
  }
}

TEST_CASE("boundedness") {
  const auto g = build_path_graph(linear_quiver(2), -1, 3);
  CHECK(is_bounded(g, nd(g, "S1[1]")).bounded);
  CHECK_THROWS_AS(is_bounded(g, nd(g, "S1[-1]")), WindowExhausted);

  // Synthetic: A[0] -> B[0] -> A[-1], a back edge no quiver produces.
  PathGraph syn({"A", "B"}, -1, 1);
  syn.add_edge({0, 0}, {1, 0}, EdgeKind::hom);
  syn.add_edge({1, 0}, {0, -1}, EdgeKind::hom);
  const auto v = is_bounded(syn, {0, 0});
  CHECK_FALSE(v.bounded);
  CHECK(v.witness == std::vector<Node>{{0, 0}, {1, 0}, {0, -1}});
  const auto ts = t_structure_from(syn, {0, 0});
  CHECK_FALSE(ts.bounded);
  CHECK(ts.heart.count({0, 0}) == 0);  // the generator reaches its own shift by -1
}

TEST_CASE("heart decomposition") {
  testutil::A2 a;
  const auto g = build_path_graph(a.q, -2, 3);
  const auto ts = t_structure_from(g, nd(g, "S1"));

  auto pieces = heart_decompose(ts, FormalObject::stalk(a.s1, 0));
  REQUIRE(pieces.size() == 1);
  CHECK(pieces[0].heart_node == nd(g, "S1"));
  CHECK(pieces[0].n == 0);

  pieces = heart_decompose(ts, FormalObject::stalk(a.p1, 0));
  REQUIRE(pieces.size() == 1);
  CHECK(pieces[0].heart_node == nd(g, "P1[1]"));
  CHECK(pieces[0].n == 1);

  FormalObject x(a.q, {{0, a.s1}, {-1, a.s2}});
  pieces = heart_decompose(ts, x);
  REQUIRE(pieces.size() == 2);
  for (const auto& p : pieces) CHECK(p.n == 0);

  std::mt19937_64 rng(5);
  for (const auto& q : {linear_quiver(3), d4_quiver()}) {
    const auto gq = build_path_graph(q, -4, 5);
    for (int trial = 0; trial < 10; ++trial) {
      const Node m{rng() % gq.catalog().size(), static_cast<int>(rng() % 3) - 1};
      const auto tq = t_structure_from(gq, m);
      const auto obj = testutil::random_formal(q, -1, 1, 2, rng);
      const auto ps = heart_decompose(tq, obj);
      for (const auto& p : ps) CHECK(tq.heart.count(p.heart_node) == 1);
      CHECK(isomorphic(reassemble(gq, ps), obj));
    }
  }

  const auto narrow = build_path_graph(a.q, 0, 0);
  const auto tn = t_structure_from(narrow, nd(narrow, "S1"));
  CHECK_THROWS_AS(heart_decompose(tn, FormalObject::stalk(a.p1, 0)), WindowExhausted);
}
