#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "trihered/io.hpp"

using namespace trihered;
using io::json;

namespace {

std::string location_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const io::ParseError& e) {
    return e.location;
  }
  return "<no error>";
}

}  // namespace

TEST_CASE("quiver files are 1-based") {
  const json j = json::parse(R"({"vertices": 3, "arrows": [{"label": "a", "from": 1, "to": 2}, {"from": 3, "to": 2}]})");
  const auto q = io::quiver_from_json(j);
  CHECK(q->vertex_count() == 3);
  CHECK(q->arrow(0).source == 0);
  CHECK(q->arrow(0).target == 1);
  CHECK(q->arrow(1).label == "a2");
  CHECK(*io::quiver_from_json(io::to_json(*q)) == *q);

  CHECK(location_of([] { io::quiver_from_json(json::parse(R"({"vertices": 2, "arrows": [{"from": 1, "to": 3}]})")); }) ==
        "/arrows/0/to");
  CHECK_THROWS_WITH_AS(
      io::quiver_from_json(json::parse(R"({"vertices": 2, "arrows": [{"from": 1, "to": 2}, {"from": 2, "to": 1}]})")),
      doctest::Contains("directed cycle"), io::ParseError);
}

TEST_CASE("representations, morphisms and complexes round trip") {
  std::mt19937_64 rng(9);
  const auto q = linear_quiver(3);
  for (int t = 0; t < 20; ++t) {
    const auto r = testutil::random_rep(q, 3, rng);
    CHECK(io::rep_from_json(q, io::to_json(r)) == r);
    const auto s = testutil::random_rep(q, 2, rng);
    const auto f = testutil::random_hom(r, s, rng);
    CHECK(io::rep_morphism_from_json(q, io::to_json(f)) == f);
    const auto c = random_complex(q, -1, 1, 2, rng());
    CHECK(io::complex_from_json(q, io::to_json(c)) == c);
    const auto d = random_complex(q, -1, 1, 2, rng());
    const auto m = random_chain_map(c, d, rng());
    CHECK(io::chain_map_from_json(q, io::to_json(m)) == m);
    const auto x = random_formal_object(q, {-1, 1}, 2, rng());
    const auto y = random_formal_object(q, {-1, 1}, 2, rng());
    CHECK(io::formal_object_from_json(q, io::to_json(x)) == x);
    const auto g = random_formal_morphism(x, y, rng());
    CHECK(io::formal_morphism_from_json(q, io::to_json(g)) == g);
  }
}

TEST_CASE("names and sums") {
  testutil::A2 a;
  CHECK(io::rep_from_json(a.q, json("P1")) == a.p1);
  const auto x = io::formal_object_from_json(a.q, json("S1 + S2[1]"));
  CHECK(x.component(0) == a.s1);
  CHECK(x.component(-1) == a.s2);
  CHECK(io::summand_names(x) == std::vector<std::string>{"S2[1]", "S1"});
  CHECK(io::formal_object_from_json(a.q, json("0")).is_zero());
  CHECK(location_of([&] { io::formal_object_from_json(a.q, json("Q9")); }) == "");
}

TEST_CASE("error locations") {
  testutil::A2 a;
  CHECK(location_of([&] { io::rep_from_json(a.q, json::parse(R"({"dims": [1, 1], "mats": {"a1": [[1, 2]]}})")); }) ==
        "/mats/a1/0");
  CHECK(location_of([&] { io::rep_from_json(a.q, json::parse(R"({"dims": [1], "mats": {}})")); }) == "/dims");
  CHECK(location_of([&] { io::rep_from_json(a.q, json::parse(R"({"dims": [1, 1], "mats": {"z": []}})")); }) ==
        "/mats/z");
  // Not a morphism: the square of arrow a1 does not commute.
  CHECK(location_of([&] {
          io::rep_morphism_from_json(a.q, json::parse(R"({"source": "P1", "target": "S2", "maps": [[], [[1]]]})"));
        }) == "");
  CHECK(location_of([&] {
          io::formal_morphism_from_json(
              a.q, json::parse(R"({"source": "S1", "target": "S2[1]", "ext": {"0": [1, 2]}})"));
        }) == "/ext/0");
}

TEST_CASE("walk files") {
  const auto g = build_path_graph(linear_quiver(2), -1, 2);
  const auto w = io::walk_from_json(
      g, json::parse(R"({"start": ["P1", 0], "steps": [{"kind": "hom-backward", "to": ["S2", 0]}]})"));
  CHECK(w.start == *g.parse("P1"));
  REQUIRE(w.steps.size() == 1);
  CHECK(w.steps[0].kind == StepKind::backward_hom);
  CHECK(location_of([&] {
          io::walk_from_json(g, json::parse(R"({"start": ["P1", 0], "steps": [{"kind": "sideways", "to": ["S2", 0]}]})"));
        }) == "/steps/0/kind");
}
