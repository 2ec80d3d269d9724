#include <random>

#include "doctest.h"
#include "test_util.hpp"
#include "trihered/complexes.hpp"

using namespace trihered;
using testutil::A2;

namespace {

RepMorphism p2_to_p1(const A2& a) { return hom_ext(a.s2, a.p1)->hom_element(0); }

// [P2 -> P1] in degrees lo, lo+1
Complex two_term(const A2& a, int lo) { return {a.q, {{lo, a.s2}, {lo + 1, a.p1}}, {{lo, p2_to_p1(a)}}}; }

std::size_t total(const Representation& r) { return r.total_dim(); }

}  // namespace

TEST_CASE("complex validation") {
  A2 a;
  auto f = p2_to_p1(a);
  auto epi = hom_ext(a.p1, a.s1)->hom_element(0);
  CHECK_NOTHROW(Complex(a.q, {{0, a.s2}, {1, a.p1}, {2, a.s1}}, {{0, f}, {1, epi}}));
  auto id = RepMorphism::identity(a.p1);
  CHECK_THROWS_AS(Complex(a.q, {{0, a.p1}, {1, a.p1}, {2, a.p1}}, {{0, id}, {1, id}}), Error);
}

TEST_CASE("cohomology examples") {
  A2 a;
  auto st = Complex::stalk(a.p1, 0);
  CHECK(cohomology(st, 0) == a.p1);
  CHECK(cohomology(st, 1).is_zero());
  auto c = two_term(a, 0);
  CHECK(cohomology(c, 0).is_zero());
  CHECK(cohomology(c, 1).dims() == a.s1.dims());
  auto cone = mapping_cone(ChainMap::identity(c)).cone;
  CHECK(is_acyclic(cone));
}

TEST_CASE("shifts") {
  A2 a;
  auto c = two_term(a, 0);
  CHECK(c.shift(0) == c);
  auto s = Complex::stalk(a.s1, 0).shift(1);
  CHECK(s.terms().begin()->first == -1);
  CHECK(c.shift(1).diff(-1) == -c.diff(0));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto r = random_complex(linear_quiver(3), 0, 3, 2, seed);
    CHECK(r.shift(1).shift(1) == r.shift(2));
    CHECK(r.shift(-1).shift(1) == r);
    for (int n = -1; n <= 4; ++n) CHECK(cohomology(r.shift(1), n - 1) == cohomology(r, n));
  }
}

TEST_CASE("mapping cones") {
  A2 a;
  auto c = two_term(a, 0);
  auto id = mapping_cone(ChainMap::identity(c));
  CHECK(is_acyclic(id.cone));
  auto x = Complex::stalk(a.s1, 0);
  auto y = Complex::stalk(a.p1, 0);
  auto z = mapping_cone(ChainMap::zero(x, y));
  CHECK(cohomology(z.cone, -1) == a.s1);
  CHECK(cohomology(z.cone, 0) == a.p1);
  auto f = mapping_cone(ChainMap::stalk(p2_to_p1(a), 0));
  CHECK(cohomology(f.cone, -1).is_zero());
  CHECK(cohomology(f.cone, 0).dims() == a.s1.dims());
  CHECK(compose(f.g, ChainMap::stalk(p2_to_p1(a), 0)).components().size() <= 1);

  // The cone triangle maps compose to zero up to the cone construction.
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto q = linear_quiver(3);
    auto xx = random_complex(q, 0, 2, 2, seed);
    auto yy = random_complex(q, 0, 2, 2, seed + 100);
    auto m = random_chain_map(xx, yy, seed);
    auto mc = mapping_cone(m);
    CHECK(compose(mc.h, mc.g).is_zero());
  }
}

TEST_CASE("projective replacement") {
  A2 a;
  auto st = Complex::stalk(a.p1, 0);
  auto r = projective_replacement(st);
  CHECK(r.complex == st);
  auto s1 = projective_replacement(Complex::stalk(a.s1, 0));
  CHECK(s1.complex.min_degree() == -1);
  CHECK(s1.complex.max_degree() == 0);
  CHECK(s1.complex.term(-1).dims() == a.s2.dims());
  CHECK(s1.complex.term(0).dims() == a.p1.dims());
  CHECK(is_quasi_isomorphism(s1.quasi));

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto q = seed % 2 ? linear_quiver(3) : d4_quiver();
    auto c = random_complex(q, -1, 2, 2, seed);
    auto rep = standard_replacement(c);
    for (const auto& [n, t] : rep.complex.terms()) CHECK(t.is_projective());
    CHECK(is_quasi_isomorphism(rep.quasi));
    CHECK(standard_replacement(c.shift(1)).complex == rep.complex.shift(1));
  }
}

TEST_CASE("standard replacement is functorial and shift compatible") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    auto q = linear_quiver(3);
    auto x = random_complex(q, 0, 1, 2, seed);
    auto y = random_complex(q, 0, 1, 2, seed + 7);
    auto z = random_complex(q, 0, 1, 2, seed + 13);
    auto f = random_chain_map(x, y, seed);
    auto g = random_chain_map(y, z, seed + 1);
    CHECK(standard_replacement(compose(g, f)) == compose(standard_replacement(g), standard_replacement(f)));
    CHECK(standard_replacement(f.shift(1)) == standard_replacement(f).shift(1));
    auto px = standard_replacement(x);
    auto py = standard_replacement(y);
    CHECK(compose(py.quasi, standard_replacement(f)) == compose(f, px.quasi));
  }
}

TEST_CASE("derived homs") {
  A2 a;
  auto p1 = Complex::stalk(a.p1, 0);
  CHECK(hom_mod_homotopy(p1, p1).dim == 1);
  auto r1 = projective_replacement(Complex::stalk(a.s1, 0)).complex;
  auto r2 = projective_replacement(Complex::stalk(a.s2, 0)).complex;
  CHECK(hom_mod_homotopy(r1, r2.shift(1)).dim == 1);
  for (int n : {-2, -1, 0, 2, 3}) CHECK(hom_mod_homotopy(r1, r2.shift(n)).dim == 0);
  CHECK_THROWS_AS(hom_mod_homotopy(Complex::stalk(a.s1, 0), p1), Error);
}

TEST_CASE("derived Hom dimension matches the formal Hom formula") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto q = seed % 3 == 0 ? d4_quiver() : linear_quiver(3);
    auto x = random_complex(q, 0, 2, 2, seed);
    auto y = random_complex(q, -1, 1, 2, seed + 1000);
    auto px = standard_replacement(x).complex;
    auto py = standard_replacement(y).complex;
    std::size_t expect = 0;
    for (int n = -3; n <= 4; ++n) {
      expect += dim_hom(cohomology(x, n), cohomology(y, n));
      expect += dim_ext(cohomology(x, n), cohomology(y, n - 1));
    }
    CHECK(hom_mod_homotopy(px, py).dim == expect);
  }
}

TEST_CASE("homotopy classes of null-homotopic maps vanish") {
  A2 a;
  auto r1 = projective_replacement(Complex::stalk(a.s1, 0)).complex;
  auto id = ChainMap::identity(r1);
  CHECK_FALSE(homotopy_class_coords(id).is_zero());
  auto cone = mapping_cone(id).cone;
  CHECK(hom_mod_homotopy(cone, cone).dim == 0);
}

TEST_CASE("strictify") {
  A2 a;
  auto s = strictify(Complex::stalk(a.p1, 0));
  CHECK(s.formal == FormalObject::stalk(a.p1, 0));
  auto t = strictify(two_term(a, 0));
  REQUIRE(t.formal.components().size() == 1);
  CHECK(t.formal.components().begin()->first == 1);
  CHECK(t.formal.component(1).dims() == a.s1.dims());
  CHECK(strictify(mapping_cone(ChainMap::identity(two_term(a, 0))).cone).formal.is_zero());

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto q = seed % 2 ? linear_quiver(3) : d4_quiver();
    auto c = random_complex(q, 0, 3, 4, seed);
    auto st = strictify(c);
    for (int n = -1; n <= 4; ++n) CHECK(st.formal.component(n) == cohomology(c, n));
    if (seed < 30) CHECK(strictify(c.shift(1)).formal == st.formal.shift(1));
  }
}
