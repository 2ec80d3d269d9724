#include <random>
#include <set>

#include "doctest.h"
#include "test_util.hpp"
#include "trihered/cones.hpp"
#include "trihered/equivalence.hpp"
#include "trihered/io.hpp"

using namespace trihered;
using testutil::A2;

namespace {

FormalObject sum_of(const FormalObject& a, const FormalObject& b) {
  return direct_sum(std::vector<FormalObject>{a, b}).sum;
}

// dim_v Z_n = dim coker(f0_n) + dim ker(f0_{n+1}) at every vertex.
bool cone_dims_match(const FormalMorphism& f, const FormalObject& z) {
  std::set<int> degrees;
  for (const auto* o : {&f.source(), &f.target(), &z}) {
    for (const auto& [n, _] : o->components()) {
      degrees.insert(n);
      degrees.insert(n - 1);
    }
  }
  for (int n : degrees) {
    const auto here = factorize(f.hom(n));
    const auto next = factorize(f.hom(n + 1));
    DimVector want = here.cokernel.target().dims();
    for (std::size_t v = 0; v < want.size(); ++v) want[v] += next.kernel.source().dim(v);
    if (z.component(n).dims() != want) return false;
  }
  return true;
}

FormalMorphism random_morphism(std::uint64_t seed, QuiverPtr* out_q = nullptr) {
  std::mt19937_64 rng(seed);
  QuiverPtr q = seed % 3 == 0 ? linear_quiver(2) : seed % 3 == 1 ? linear_quiver(3) : d4_quiver();
  if (out_q) *out_q = q;
  auto x = testutil::random_formal(q, -1, 1, 2, rng);
  auto y = testutil::random_formal(q, -1, 1, 2, rng);
  return testutil::random_formal_hom(x, y, rng);
}

}  // namespace

TEST_CASE("cone of a map in H: worked examples") {
  A2 a;
  const auto p2 = Representation::projective(a.q, 1);
  auto incl = hom_ext(p2, a.p1)->hom_element(0);
  auto c = cone_in_H(incl);
  c.diagram.validate();
  CHECK(c.triangle.z() == FormalObject::stalk(a.s1, 0));
  CHECK(is_exact(c.triangle).passed);

  auto epi = hom_ext(a.p1, a.s1)->hom_element(0);
  auto d = cone_in_H(epi);
  d.diagram.validate();
  CHECK(isomorphic(d.triangle.z(), FormalObject::shifted(a.s2, 1)));
  CHECK(is_exact(d.triangle).passed);
  // the map S1 -> S2[1] into the cone is (minus) the nonzero extension class
  CHECK_FALSE(d.triangle.g.ext(0).is_zero());
  CHECK(d.diagram.epsilon.coords.rows() == 1);

  auto id = cone_in_H(RepMorphism::identity(a.p1));
  CHECK(id.triangle.z().is_zero());
  CHECK(is_exact(id.triangle).passed);
}

TEST_CASE("cone of a map in H is Ker[1] + Coker") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    auto q = t % 2 ? linear_quiver(3) : d4_quiver();
    auto x = testutil::random_rep(q, 2, rng);
    auto y = testutil::random_rep(q, 2, rng);
    auto f = testutil::random_hom(x, y, rng);
    auto c = cone_in_H(f);
    c.diagram.validate();
    const auto fac = factorize(f);
    const FormalObject want(q, {{-1, fac.kernel.source()}, {0, fac.cokernel.target()}});
    CHECK(c.triangle.z() == want);
    if (t < 60) CHECK(is_exact(c.triangle).passed);
  }
}

TEST_CASE("cone of a pure extension") {
  A2 a;
  ExtClass gen{a.s1, a.s2, Matrix::from_rows({{1}})};
  auto t = cone_pure_ext(gen, 0);
  CHECK(isomorphic(t.z(), FormalObject::shifted(a.p1, 1)));
  CHECK(is_exact(t).passed);
  CHECK(cone_pure_ext(FormalMorphism::pure_ext(gen, 0)).z() == t.z());

  const auto s11 = direct_sum(a.s1, a.s1);
  ExtClass block{s11, a.s2, Matrix::from_rows({{1}, {0}})};
  auto u = cone_pure_ext(block, 0);
  CHECK(isomorphic(u.z(), FormalObject::shifted(direct_sum(a.p1, a.s1), 1)));
  CHECK(is_exact(u).passed);

  auto z = cone_pure_ext(ExtClass::zero(a.s1, a.s2), 2);
  CHECK(z.z() == FormalObject::stalk(direct_sum(a.s2, a.s1), 1));
  CHECK(is_exact(z).passed);

  std::mt19937_64 rng(5);
  auto q = d4_quiver();
  for (int i = 0; i < 30; ++i) {
    auto x = testutil::random_rep(q, 2, rng);
    auto b = testutil::random_rep(q, 2, rng);
    auto tr = cone_pure_ext(testutil::random_ext(x, b, rng), i % 3 - 1);
    CHECK(is_exact(tr).passed);
  }
}

TEST_CASE("realization of formal morphisms") {
  A2 a;
  auto f = FormalMorphism::stalk(hom_ext(a.p1, a.s1)->hom_element(0), 0);
  auto r = realize(f);
  CHECK(r.tilde == as_complex(f.source()));
  CHECK(roof_morphism(r) == f);

  auto e = FormalMorphism::pure_ext(ExtClass{a.s1, a.s2, Matrix::from_rows({{1}})}, 0);
  auto re = realize(e);
  CHECK(re.tilde.term(-1) == a.s2);
  CHECK(isomorphic(re.tilde.term(0), a.p1));
  CHECK(is_quasi_isomorphism(re.quasi));
  CHECK(roof_morphism(re) == e);

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto g = random_morphism(seed);
    CHECK(F_object(as_complex(g.source())) == g.source());
    auto rg = realize(g);
    CHECK(is_quasi_isomorphism(rg.quasi));
    CHECK(roof_morphism(rg) == g);
    auto cone = mapping_cone(rg.map).cone;
    CHECK(cone_dims_match(g, F_object(cone)));
  }
}

TEST_CASE("general cone: worked examples") {
  A2 a;
  const auto x = FormalObject::stalk(a.p1, 0);
  auto t = cone_general(FormalMorphism::identity(x));
  CHECK(t.z().is_zero());

  const auto y = sum_of(FormalObject::stalk(a.s1, 0), FormalObject::shifted(a.s2, 1));
  auto zero = cone_general(FormalMorphism::zero(x, y));
  CHECK(isomorphic(zero.z(), sum_of(y, x.shift(1))));
  CHECK(is_exact(zero).passed);

  // S1 -> P1[1] (+) S1 with Hom part the identity and no Ext part
  const auto s1 = FormalObject::stalk(a.s1, 0);
  const auto target = direct_sum(std::vector<FormalObject>{FormalObject::shifted(a.p1, 1), s1});
  auto f = into_sum(target, {FormalMorphism::zero(s1, FormalObject::shifted(a.p1, 1)), FormalMorphism::identity(s1)});
  auto c = cone_general(f);
  CHECK(isomorphic(c.z(), FormalObject::shifted(a.p1, 1)));
  CHECK(is_exact(c).passed);
}

TEST_CASE("general cone agrees with the realization oracle") {
  int closed = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto f = random_morphism(seed);
    auto t = cone_general(f);
    closed += last_cone_was_closed_form() ? 1 : 0;
    CHECK(cone_dims_match(f, t.z()));
    CHECK(is_exact(t).passed);
    auto oracle = realization_cone(f);
    auto iso = tr3_iso(oracle, t, FormalMorphism::identity(f.source()), FormalMorphism::identity(f.target()));
    REQUIRE(iso.has_value());
    CHECK(is_triangle_morphism(oracle, t, FormalMorphism::identity(f.source()),
                               FormalMorphism::identity(f.target()), *iso));
  }
  CHECK(closed == 100);
}

TEST_CASE("general cone: rotation and direct sums") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto f = random_morphism(seed + 300);
    auto t = cone_general(f);
    auto r = cone_general(t.g);
    CHECK(isomorphic(r.z(), f.source().shift(1)));

    auto f2 = random_morphism(seed + 600);
    if (!same_quiver(f.source().quiver_ptr(), f2.source().quiver_ptr())) continue;
    auto sum = cone_general(direct_sum(std::vector<FormalMorphism>{f, f2}));
    CHECK(isomorphic(sum.z(), sum_of(t.z(), cone_general(f2).z())));
  }
}

TEST_CASE("key lemma assembly") {
  A2 a;
  // the pull-back/push-out grid of P1 -> S1
  auto epi = hom_ext(a.p1, a.s1)->hom_element(0);
  auto d = cone_in_H(epi).diagram;
  auto st = [](const RepMorphism& m, int deg) { return FormalMorphism::stalk(m, deg); };
  auto ext = [](const ExtClass& e) { return FormalMorphism::pure_ext(e, 0); };
  KeyLemmaGrid grid{
      {st(d.f2, 0), st(d.y, 0), ext(ses_class({d.f2, d.y}))},
      {ext(ses_class({d.x, d.f1})), st(d.x, -1), st(d.f1, -1)},
      {ext(d.epsilon), st(d.iota_prime, -1), st(d.pi, -1)},
      {ext(d.eta), st(d.iota, -1), st(d.pi_prime, -1)},
  };
  auto t = key_lemma_assemble(grid);
  CHECK(is_exact(t).passed);
  CHECK(t.h == st(epi, -1));
  CHECK(isomorphic(t.y(), cone_in_H(epi).triangle.z()));

  // I = 0 and Y'' = 0: the first row again
  const auto s1 = FormalObject::stalk(a.s1, 0);
  const auto zero = FormalObject(a.q);
  auto id = FormalMorphism::identity(s1);
  auto row = trivial_triangle(s1);
  KeyLemmaGrid small{row, trivial_triangle(zero),
                     {FormalMorphism::zero(s1, zero), FormalMorphism::zero(zero, s1.shift(1)), id.shift(1)},
                     {FormalMorphism::zero(s1, zero), FormalMorphism::zero(zero, s1.shift(1)), id.shift(1)}};
  auto deg = key_lemma_assemble(small);
  CHECK(deg.y() == s1);
  CHECK(deg.f == -id);
  CHECK(is_exact(deg).passed);

  // Hom(Y'', g') != 0
  auto zs = FormalMorphism::zero(zero, s1);
  Triangle r{zs, id, FormalMorphism::zero(s1, zero.shift(1))};
  Triangle c{id, FormalMorphism::zero(s1, zero), FormalMorphism::zero(zero, s1.shift(1))};
  KeyLemmaGrid bad{r, r, c, c};
  CHECK_THROWS_WITH_AS(key_lemma_assemble(bad), doctest::Contains("Hom(Y'', g') = 0"), Error);
}

TEST_CASE("splitting off a trivial triangle") {
  A2 a;
  const auto s1 = FormalObject::stalk(a.s1, 0);
  const auto split = direct_sum(std::vector<FormalObject>{FormalObject::stalk(a.p1, 0), FormalObject::shifted(a.s2, 2)});
  auto f = FormalMorphism::zero(s1, split.sum);
  auto s = split_off(cone_general(f), split);
  CHECK(s.trivial.y() == FormalObject::shifted(a.s2, 2));
  CHECK(is_exact(s.sum).passed);
  CHECK(s.iso.is_iso());

  std::mt19937_64 rng(23);
  auto q = linear_quiver(3);
  for (int t = 0; t < 20; ++t) {
    auto x = testutil::random_formal(q, 0, 1, 2, rng);
    auto y1 = testutil::random_formal(q, 0, 1, 2, rng);
    auto y2 = testutil::random_formal(q, 3, 3, 2, rng);
    auto parts = direct_sum(std::vector<FormalObject>{y1, y2});
    auto fp = testutil::random_formal_hom(x, y1, rng);
    auto g = into_sum(parts, {fp, FormalMorphism::zero(x, y2)});
    auto tri = cone_general(g);
    auto so = split_off(tri, parts);
    CHECK(so.iso.is_iso());
    CHECK(is_triangle_morphism(tri, so.sum, FormalMorphism::identity(x), FormalMorphism::identity(parts.sum), so.iso));
  }
}

TEST_CASE("cones of maps in H and of extensions match the realization oracle") {
  std::mt19937_64 rng(41);
  auto q = linear_quiver(3);
  auto agree = [](const Triangle& o, const Triangle& t) {
    return tr3_iso(o, t, FormalMorphism::identity(o.x()), FormalMorphism::identity(o.y())).has_value();
  };
  for (int i = 0; i < 20; ++i) {
    auto x = testutil::random_rep(q, 2, rng);
    auto y = testutil::random_rep(q, 2, rng);
    auto c = cone_in_H(testutil::random_hom(x, y, rng)).triangle;
    CHECK(agree(realization_cone(c.f), c));
    auto e = testutil::random_ext(x, y, rng);
    for (int n = -1; n <= 1; ++n) {
      auto t = cone_pure_ext(e, n);
      CHECK(agree(realization_cone(t.f), t));
    }
  }
}

TEST_CASE("a sign-twisted cone passes the Hom test but is not a cone") {
  A2 a;
  auto t = cone_pure_ext(ExtClass{a.s1, a.s2, Matrix::from_rows({{1}})}, 0);
  Triangle twisted{t.f, t.g, -t.h};
  CHECK(is_exact(twisted).passed);
  auto o = realization_cone(t.f);
  CHECK_FALSE(tr3_iso(o, twisted, FormalMorphism::identity(t.x()), FormalMorphism::identity(t.y())).has_value());
}

TEST_CASE("closed-form cone with coupled Ext parts is certified against the realization") {
  // A mixed Hom/Ext morphism over D4 where the first exact solution of the closed-form
  // system is not a cone.
  const auto q = d4_quiver();
  const auto j = io::json::parse(R"({
    "source": {"components": {
      "-1": {"dims": [2,1,2,1], "mats": {"a": [[24,93]], "b": [[49,25]], "c": [[69]]}},
      "0": {"dims": [1,1,1,0], "mats": {"a": [[45]], "b": [[52]], "c": [[]]}},
      "1": {"dims": [2,2,0,2], "mats": {"a": [[22,29],[11,54]], "b": [[],[]], "c": [[5,66],[81,73]]}}}},
    "target": {"components": {
      "-1": {"dims": [2,2,0,1], "mats": {"a": [[65,36],[32,15]], "b": [[],[]], "c": [[51],[27]]}},
      "0": {"dims": [0,2,1,1], "mats": {"a": [[],[]], "b": [[67],[14]], "c": [[12],[85]]}},
      "1": {"dims": [1,0,0,0], "mats": {"a": [], "b": [], "c": []}}}},
    "hom": {"1": {"maps": [[[51,16]],[],[],[]]}},
    "ext": {"1": [33,49]}})");
  const auto f = io::formal_morphism_from_json(q, j);
  const auto t = cone_general(f);
  CHECK(is_exact(t).passed);
  const auto ix = FormalMorphism::identity(f.source());
  const auto iy = FormalMorphism::identity(f.target());
  CHECK(tr3_iso(realization_cone(f), t, ix, iy).has_value());
  CHECK(is_distinguished(t));
}
