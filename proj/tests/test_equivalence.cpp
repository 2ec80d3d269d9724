#include <random>

#include "doctest.h"
#include "test_util.hpp"
#include "trihered/equivalence.hpp"

using namespace trihered;
using testutil::A2;

TEST_CASE("F on objects") {
  A2 a;
  CHECK(F_object(Complex::stalk(a.s1, 0)) == FormalObject::stalk(a.s1, 0));
  auto f = hom_ext(a.s2, a.p1)->hom_element(0);
  Complex c(a.q, {{0, a.s2}, {1, a.p1}}, {{0, f}});
  auto fc = F_object(c);
  REQUIRE(fc.components().size() == 1);
  CHECK(fc.component(1).dims() == a.s1.dims());
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto x = random_complex(linear_quiver(3), -1, 2, 2, seed);
    CHECK(F_object(x.shift(1)) == F_object(x).shift(1));
  }
}

TEST_CASE("F on identities and stalk maps") {
  A2 a;
  auto r1 = projective_replacement(Complex::stalk(a.s1, 0)).complex;
  CHECK(F_morphism(ChainMap::identity(r1)) == FormalMorphism::identity(F_object(r1)));
  auto epi = hom_ext(a.p1, a.s1)->hom_element(0);
  CHECK(F_morphism(ChainMap::stalk(epi, 0)) == FormalMorphism::stalk(epi, 0));
  std::mt19937_64 rng(3);
  auto q = d4_quiver();
  for (int t = 0; t < 20; ++t) {
    auto x = testutil::random_rep(q, 2, rng);
    auto y = testutil::random_rep(q, 2, rng);
    auto h = testutil::random_hom(x, y, rng);
    CHECK(F_morphism(ChainMap::stalk(h, 0)) == FormalMorphism::stalk(h, 0));
  }
}

TEST_CASE("F sends the derived Hom generator to an Ext generator") {
  A2 a;
  auto r1 = projective_replacement(Complex::stalk(a.s1, 0)).complex;
  auto r2 = projective_replacement(Complex::stalk(a.s2, 0)).complex.shift(1);
  auto hc = hom_mod_homotopy(r1, r2);
  REQUIRE(hc.dim == 1);
  auto f = F_projective(hc.basis[0]);
  CHECK(f.hom_parts().empty());
  REQUIRE(f.ext_parts().size() == 1);
  CHECK_FALSE(f.ext_parts().begin()->second.is_zero());
  auto g = F_morphism(hc.basis[0]);
  CHECK_FALSE(g.ext_parts().begin()->second.is_zero());
}

TEST_CASE("F is a functor and commutes with shifts") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto q = seed % 2 ? linear_quiver(3) : linear_quiver(2);
    auto x = random_complex(q, -1, 1, 2, seed);
    auto y = random_complex(q, -1, 1, 2, seed + 1000);
    auto z = random_complex(q, -1, 1, 2, seed + 2000);
    auto f = random_chain_map(x, y, seed);
    auto g = random_chain_map(y, z, seed + 1);
    auto ff = F_morphism(f);
    CHECK(F_morphism(compose(g, f)) == compose(F_morphism(g), ff));
    if (seed < 50) {
      CHECK(F_morphism(f.shift(1)) == ff.shift(1));
      CHECK(F_morphism(f.shift(-1)) == ff.shift(-1));
      auto f2 = random_chain_map(x, y, seed + 5);
      CHECK(F_morphism(f + f2) == ff + F_morphism(f2));
    }
  }
}

TEST_CASE("verify_equivalence on A2") {
  EquivalenceOptions opt;
  opt.trials = 100;
  opt.seed = 7;
  auto rep = verify_equivalence(linear_quiver(2), opt);
  for (const auto& f : rep.failures) MESSAGE(f.check << " seed " << f.seed << ": " << f.detail);
  CHECK(rep.passed());
  CHECK(rep.trials == 100);
  for (const auto& c : rep.checks) CHECK(c.runs > 0);
}

TEST_CASE("verify_equivalence on A3 and D4, short runs") {
  EquivalenceOptions opt;
  opt.trials = 15;
  opt.seed = 3;
  for (auto q : {linear_quiver(3), d4_quiver()}) {
    auto rep = verify_equivalence(q, opt);
    for (const auto& f : rep.failures) MESSAGE(f.check << " seed " << f.seed << ": " << f.detail);
    CHECK(rep.passed());
  }
}

TEST_CASE("verify_equivalence with zero complexes") {
  EquivalenceOptions opt;
  opt.trials = 5;
  opt.max_dim = 0;
  auto rep = verify_equivalence(linear_quiver(2), opt);
  CHECK(rep.passed());
}
