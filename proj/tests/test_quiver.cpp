#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "test_util.hpp"

using namespace trihered;
using testutil::A2;

namespace {

// Oracle: dimension vectors d with Tits form q(d) = 1, found by exhaustive search.
std::set<DimVector> positive_roots_brute(const Quiver& q, std::size_t bound) {
  std::set<DimVector> out;
  DimVector d(q.vertex_count(), 0);
  while (true) {
    std::size_t i = 0;
    while (i < d.size() && d[i] == bound) d[i++] = 0;
    if (i == d.size()) break;
    ++d[i];
    if (q.euler_form(d, d) == 1) out.insert(d);
  }
  return out;
}

// Oracle: number of arrow-stable subspaces of a representation, by enumerating all
// subspaces vertexwise (only for dimensions <= 1 per vertex).
std::size_t count_sub_reps_01(const Representation& x) {
  const std::size_t n = x.quiver().vertex_count();
  std::size_t count = 0;
  for (std::size_t mask = 0; mask < (1U << n); ++mask) {
    bool ok = true;
    for (std::size_t v = 0; v < n; ++v) {
      if ((mask >> v & 1U) && x.dim(v) == 0) ok = false;
    }
    if (!ok) continue;
    for (std::size_t a = 0; a < x.quiver().arrows().size(); ++a) {
      const auto& ar = x.quiver().arrow(a);
      if ((mask >> ar.source & 1U) && !(mask >> ar.target & 1U) && !x.mat(a).is_zero()) ok = false;
    }
    if (ok) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("quiver validation") {
  CHECK_THROWS_WITH_AS(make_quiver(2, {{"a", 0, 1}, {"b", 1, 0}}), doctest::Contains("directed cycle detected"), Error);
  CHECK_THROWS_AS(make_quiver(2, {{"a", 0, 1}, {"a", 0, 1}}), Error);
  CHECK_THROWS_AS(make_quiver(2, {{"a", 0, 2}}), Error);
  auto q = linear_quiver(3);
  CHECK(q->path_count(0, 2) == 1);
  CHECK(q->path_count(2, 0) == 0);
  CHECK(q->is_dynkin());
  CHECK_FALSE(make_quiver(2, {{"a", 0, 1}, {"b", 0, 1}})->is_dynkin());
}

TEST_CASE("representation shape checks") {
  auto q = linear_quiver(2);
  CHECK_THROWS_AS(Representation(q, {1, 1}, {Matrix(2, 1)}), Error);
  A2 a;
  CHECK(a.p1.dims() == DimVector{1, 1});
  CHECK(a.p1.is_projective());
  CHECK_FALSE(a.s1.is_projective());
  CHECK(a.s2.is_projective());
  CHECK_THROWS_AS(RepMorphism(a.p1, a.s2, {Matrix(0, 1), Matrix::from_rows({{1}})}), Error);
}

TEST_CASE("hom and ext on A2") {
  A2 a;
  CHECK(dim_hom(a.s1, a.s1) == 1);
  CHECK(dim_ext(a.s1, a.s1) == 0);
  CHECK(dim_ext(a.s1, a.s2) == 1);
  CHECK(dim_hom(a.s1, a.p1) == 0);
  CHECK(dim_ext(a.s1, a.p1) == 0);
  CHECK(dim_hom(a.p1, a.s1) == 1);
  CHECK(dim_hom(a.s2, a.p1) == 1);
}

TEST_CASE("Euler form identity on random pairs") {
  std::mt19937_64 rng(17);
  std::vector<QuiverPtr> qs{linear_quiver(3), d4_quiver(), make_quiver(2, {{"a", 0, 1}, {"b", 0, 1}})};
  for (int t = 0; t < 100; ++t) {
    const auto& q = qs[t % qs.size()];
    auto x = testutil::random_rep(q, 2, rng);
    auto y = testutil::random_rep(q, 2, rng);
    const long lhs = static_cast<long>(dim_hom(x, y)) - static_cast<long>(dim_ext(x, y));
    CHECK(lhs == q->euler_form(x.dims(), y.dims()));
  }
}

TEST_CASE("factorize") {
  A2 a;
  auto id = RepMorphism::identity(a.p1);
  auto f = factorize(id);
  CHECK(f.kernel.source().is_zero());
  CHECK(f.cokernel.target().is_zero());
  CHECK(f.image.source().dims() == a.p1.dims());

  auto epi = hom_ext(a.p1, a.s1)->hom_element(0);
  auto g = factorize(epi);
  CHECK(g.kernel.source().dims() == a.s2.dims());
  CHECK(g.image.source().dims() == a.s1.dims());
  CHECK(g.cokernel.target().is_zero());
  CHECK(compose(g.image, g.coimage) == epi);

  auto z = factorize(RepMorphism::zero(a.p1, a.s1));
  CHECK(z.kernel.source().dims() == a.p1.dims());
  CHECK(z.image.source().is_zero());
  CHECK(z.cokernel.target().dims() == a.s1.dims());

  std::mt19937_64 rng(5);
  auto q = d4_quiver();
  for (int t = 0; t < 40; ++t) {
    auto x = testutil::random_rep(q, 2, rng);
    auto y = testutil::random_rep(q, 2, rng);
    auto h = testutil::random_hom(x, y, rng);
    auto fz = factorize(h);
    CHECK(compose(fz.image, fz.coimage) == h);
    CHECK(compose(h, fz.kernel).is_zero());
    CHECK(compose(fz.cokernel, h).is_zero());
    for (std::size_t v = 0; v < q->vertex_count(); ++v) {
      CHECK(fz.kernel.source().dim(v) + fz.image.source().dim(v) == x.dim(v));
      CHECK(fz.image.source().dim(v) + fz.cokernel.target().dim(v) == y.dim(v));
    }
    CHECK(fz.kernel.is_injective());
    CHECK(fz.image.is_injective());
    CHECK(fz.coimage.is_surjective());
    CHECK(fz.cokernel.is_surjective());
  }
}

TEST_CASE("extension middle terms") {
  A2 a;
  auto z = extension_middle(ExtClass::zero(a.s1, a.s2));
  CHECK(z.middle().mat(0).is_zero());
  CHECK(ses_class(z).is_zero());

  ExtClass e{a.s1, a.s2, Matrix::from_rows({{1}})};
  auto s = extension_middle(e);
  s.validate();
  auto parts = decompose_rep(s.middle());
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].rep.dims() == DimVector{1, 1});
  CHECK(count_sub_reps_01(s.middle()) == 3);  // 0, S2, E: uniserial

  auto ss = direct_sum(std::vector<Representation>{a.s1, a.s1}, a.q);
  ExtClass e2{ss.sum, a.s2, Matrix::from_rows({{1}, {0}})};
  auto mid = decompose_rep(extension_middle(e2).middle());
  REQUIRE(mid.size() == 2);
  CHECK(mid[0].rep.dims() == DimVector{1, 0});
  CHECK(mid[1].rep.dims() == DimVector{1, 1});
}

TEST_CASE("ses_class of the projective cover sequence and round trips") {
  A2 a;
  auto epi = hom_ext(a.p1, a.s1)->hom_element(0);
  auto fz = factorize(epi);
  ShortExact s{fz.kernel, epi};
  auto cls = ses_class(s);
  CHECK(cls.sub.dims() == a.s2.dims());
  CHECK_FALSE(cls.is_zero());

  std::mt19937_64 rng(23);
  auto q = linear_quiver(3);
  for (int t = 0; t < 50; ++t) {
    auto x = testutil::random_rep(q, 2, rng);
    auto y = testutil::random_rep(q, 2, rng);
    auto e = testutil::random_ext(x, y, rng);
    CHECK(ses_class(extension_middle(e)) == e);
  }
}

TEST_CASE("transport of extension classes") {
  A2 a;
  ExtClass e{a.s1, a.s2, Matrix::from_rows({{1}})};
  CHECK(transport_ext(e, RepMorphism::identity(a.s1), RepMorphism::identity(a.s2)) == e);
  CHECK(transport_ext(e, RepMorphism::zero(a.s1, a.s1), std::nullopt).is_zero());
  auto epi = hom_ext(a.p1, a.s1)->hom_element(0);
  CHECK(transport_ext(e, epi, std::nullopt).is_zero());

  // pullback and pushout commute, both are linear.
  std::mt19937_64 rng(29);
  auto q = d4_quiver();
  for (int t = 0; t < 30; ++t) {
    auto x = testutil::random_rep(q, 1, rng);
    auto y = testutil::random_rep(q, 1, rng);
    auto x2 = testutil::random_rep(q, 1, rng);
    auto y2 = testutil::random_rep(q, 1, rng);
    auto e1 = testutil::random_ext(x, y, rng);
    auto e2 = testutil::random_ext(x, y, rng);
    auto th = testutil::random_hom(x2, x, rng);
    auto ph = testutil::random_hom(y, y2, rng);
    auto both = transport_ext(e1, th, ph);
    CHECK(transport_ext(transport_ext(e1, th, std::nullopt), std::nullopt, ph) == both);
    CHECK(transport_ext(transport_ext(e1, std::nullopt, ph), th, std::nullopt) == both);
    CHECK(transport_ext(e1 + e2, th, ph) == both + transport_ext(e2, th, ph));
  }
}

TEST_CASE("pullback along a mono is onto (hereditary)") {
  std::mt19937_64 rng(31);
  auto q = linear_quiver(3);
  for (int t = 0; t < 30; ++t) {
    auto y = testutil::random_rep(q, 2, rng);
    auto k = testutil::random_rep(q, 2, rng);
    auto w = testutil::random_rep(q, 2, rng);
    auto fz = factorize(testutil::random_hom(w, y, rng));
    const auto& mono = fz.image;  // I -> Y
    auto h = hom_ext(y, k);
    auto hi = hom_ext(mono.source(), k);
    Matrix m(hi->ext_dim(), h->ext_dim());
    for (std::size_t j = 0; j < h->ext_dim(); ++j) {
      Matrix c(h->ext_dim(), 1);
      c(j, 0) = 1;
      m.set_block(0, j, transport_ext(ExtClass{y, k, c}, mono, std::nullopt).coords);
    }
    CHECK(linalg::rank(m) == hi->ext_dim());
  }
}

TEST_CASE("decompose_rep") {
  A2 a;
  auto p = decompose_rep(a.p1);
  REQUIRE(p.size() == 1);
  auto two = decompose_rep(direct_sum(a.s1, a.s2));
  REQUIRE(two.size() == 2);
  CHECK(decompose_rep(Representation::zero(a.q)).empty());

  std::mt19937_64 rng(37);
  for (auto q : {linear_quiver(3), d4_quiver()}) {
    auto cat = indecomposables(q);
    for (int t = 0; t < 50; ++t) {
      std::vector<Representation> parts;
      std::multiset<DimVector> expect;
      const std::size_t k = 1 + rng() % 3;
      for (std::size_t i = 0; i < k; ++i) {
        parts.push_back(cat[rng() % cat.size()]);
        expect.insert(parts.back().dims());
      }
      auto ds = direct_sum(parts, q);
      // Conjugate by a random vertexwise automorphism so the split is not block-visible.
      std::vector<Matrix> g;
      for (std::size_t v = 0; v < q->vertex_count(); ++v) {
        Matrix m;
        do {
          m = testutil::random_matrix(ds.sum.dim(v), ds.sum.dim(v), rng);
        } while (linalg::rank(m) != m.rows());
        g.push_back(m);
      }
      std::vector<Matrix> mats;
      for (std::size_t ai = 0; ai < q->arrows().size(); ++ai) {
        const auto& ar = q->arrow(ai);
        mats.push_back(g[ar.target] * ds.sum.mat(ai) * *linalg::inverse(g[ar.source]));
      }
      Representation x(q, ds.sum.dims(), mats);
      auto sm = decompose_rep(x, static_cast<std::uint64_t>(t));
      std::multiset<DimVector> got;
      Matrix total;
      std::vector<Matrix> sum_ip(q->vertex_count());
      for (std::size_t v = 0; v < q->vertex_count(); ++v) sum_ip[v] = Matrix(x.dim(v), x.dim(v));
      for (auto& s : sm) {
        got.insert(s.rep.dims());
        auto ip = compose(s.inclusion, s.projection);
        for (std::size_t v = 0; v < q->vertex_count(); ++v) sum_ip[v] = sum_ip[v] + ip.component(v);
        CHECK(compose(s.projection, s.inclusion) == RepMorphism::identity(s.rep));
      }
      CHECK(got == expect);
      for (std::size_t v = 0; v < q->vertex_count(); ++v) CHECK(sum_ip[v] == Matrix::identity(x.dim(v)));
    }
  }
}

TEST_CASE("indecomposables match positive roots") {
  auto a2 = indecomposables(linear_quiver(2));
  CHECK(a2.size() == 3);
  std::set<DimVector> d2;
  for (auto& r : a2) d2.insert(r.dims());
  CHECK(d2 == std::set<DimVector>{{1, 0}, {0, 1}, {1, 1}});

  std::vector<QuiverPtr> qs{linear_quiver(3), linear_quiver(4), d4_quiver(),
                            make_quiver(3, {{"a", 1, 0}, {"b", 1, 2}}),
                            make_quiver(4, {{"a", 0, 1}, {"b", 2, 1}, {"c", 2, 3}})};
  std::vector<std::size_t> counts{6, 10, 12, 6, 10};
  for (std::size_t i = 0; i < qs.size(); ++i) {
    auto reps = indecomposables(qs[i]);
    CHECK(reps.size() == counts[i]);
    std::set<DimVector> got;
    for (auto& r : reps) {
      got.insert(r.dims());
      CHECK(dim_hom(r, r) == 1);  // Dynkin indecomposables are bricks
      CHECK(decompose_rep(r).size() == 1);
    }
    CHECK(got == positive_roots_brute(*qs[i], 3));
  }
  CHECK_THROWS_AS(indecomposables(make_quiver(2, {{"a", 0, 1}, {"b", 0, 1}})), Unsupported);
}

TEST_CASE("catalog labels") {
  auto cat = indecomposable_catalog(linear_quiver(2));
  REQUIRE(cat.size() == 3);
  auto s1 = find_indecomposable(cat, "S1");
  auto p1 = find_indecomposable(cat, "P1");
  auto s2 = find_indecomposable(cat, "P2");
  REQUIRE(s1);
  REQUIRE(p1);
  REQUIRE(s2);
  CHECK(cat[*p1].rep.dims() == DimVector{1, 1});
  CHECK(cat[*s2].label == "S2");
  CHECK(find_indecomposable(cat, "(1,1)") == p1);
  CHECK(find_indecomposable(cat, "M(1,1)") == p1);
  auto d4 = indecomposable_catalog(d4_quiver());
  CHECK(find_indecomposable(d4, "M(1,2,1,1)"));
}
