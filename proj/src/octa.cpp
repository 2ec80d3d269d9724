#include "trihered/octa.hpp"

#include <functional>
#include <random>

#include "trihered/cones.hpp"

namespace trihered {

bool OctaReport::passed() const {
  for (const auto& c : checks) {
    if (!c.holds) return false;
  }
  return true;
}

void OctaReport::add(std::string name, bool holds, std::string detail) {
  checks.push_back({std::move(name), holds, std::move(detail)});
}

namespace {

using Pred = std::function<bool(const FormalMorphism&)>;

// Particular solution first, then random points of the affine solution space.
std::optional<FormalMorphism> first_good(const LinearSolution& sol, const Pred& ok, std::uint64_t seed,
                                         std::size_t tries) {
  if (ok(sol.particular)) return sol.particular;
  if (sol.homogeneous.empty()) return std::nullopt;
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < tries; ++t) {
    FormalMorphism z = sol.particular;
    for (const auto& h : sol.homogeneous) z = z + h.scaled(static_cast<linalg::Elem>(rng() % linalg::prime()));
    if (ok(z)) return z;
  }
  return std::nullopt;
}

FormalMorphism id(const FormalObject& x) { return FormalMorphism::identity(x); }
FormalMorphism zero(const FormalObject& a, const FormalObject& b) { return FormalMorphism::zero(a, b); }

Triangle dagger_of(const Octahedron& o, const FormalMorphism& u_prime) {
  return {into_sum(o.zy, {-o.tf.g, o.u}), out_of_sum(o.zy, {u_prime, o.tfp.g}), o.delta};
}

// The second TR4'' application: dagger over tu, with (0, 1): Z (+) Y' -> Y'.
struct Second {
  FormalSum zpyp;  // Z' (+) Y'
  Triangle big;
};

Second second_application(const Octahedron& o) {
  const FormalObject& yp = o.tu.y();
  const FormalObject& z = o.tf.z();
  const FormalObject& zp = o.tfp.z();
  Second s;
  s.zpyp = direct_sum(std::vector<FormalObject>{zp, yp});
  const FormalMorphism first = into_sum(
      s.zpyp, {out_of_sum(o.zy, {-o.u_prime, -o.tfp.g}), out_of_sum(o.zy, {zero(z, yp), id(yp)})});
  const FormalMorphism second = out_of_sum(s.zpyp, {o.v_prime, o.tu.g});
  const FormalSum zy1 = direct_sum(std::vector<FormalObject>{z.shift(1), yp.shift(1)});
  const FormalMorphism third = into_sum(zy1, {-o.w_prime, zero(o.tu.z(), yp.shift(1))});
  s.big = {first, second, third};
  return s;
}

}  // namespace

Octahedron octahedron_tr4pp(const FormalMorphism& f, const FormalMorphism& u, const OctaOptions& options) {
  if (!(f.target() == u.source())) throw Error("octahedron: target of f differs from source of u");
  Octahedron o;
  o.f = f;
  o.u = u;
  o.fp = compose(u, f);
  o.tf = cone_general(f);
  o.tfp = cone_general(o.fp);
  o.tu = cone_general(u);
  o.delta = compose(f.shift(1), o.tfp.h);
  o.zy = direct_sum(std::vector<FormalObject>{o.tf.z(), o.tu.y()});

  auto us = tr3_solutions(o.tf, o.tfp, id(f.source()), u);
  if (!us) throw Error("octahedron: no TR3 completion u' (inconsistent cone triangles)");
  auto up = first_good(
      *us, [&](const FormalMorphism& c) { return is_distinguished(dagger_of(o, c)); }, options.seed, options.tries);
  if (!up) throw Error("octahedron: no completion u' makes the dagger triangle exact");
  o.u_prime = *up;
  o.dagger = dagger_of(o, o.u_prime);

  // v' completes (id_Y, (0, 1)) from dagger to tu.
  const FormalMorphism p2 = o.zy.projections[1];
  auto vs = tr3_solutions(o.dagger, o.tu, id(f.target()), p2);
  if (!vs) throw Error("octahedron: no TR3 completion v'");
  o.w_prime = compose(o.tf.g.shift(1), o.tu.h);
  auto vp = first_good(
      *vs,
      [&](const FormalMorphism& c) {
        Octahedron t = o;
        t.v_prime = c;
        return is_distinguished(second_application(t).big);
      },
      options.seed + 1, options.tries);
  if (!vp) throw Error("octahedron: no completion v' makes the second triangle exact");
  o.v_prime = *vp;
  o.column = {o.u_prime, o.v_prime, o.w_prime};
  return o;
}

OctaReport verify_octahedron(const Octahedron& o) {
  OctaReport r;
  const auto& [f, g, h] = o.tf;
  const auto& [fp, gp, hp] = o.tfp;
  const auto& [u, v, w] = o.tu;
  r.add("f' = u f", fp == compose(u, f));
  r.add("u' g = g' u", compose(o.u_prime, g) == compose(gp, u));
  r.add("h' u' = h", compose(hp, o.u_prime) == h);
  r.add("v' g' = v", compose(o.v_prime, gp) == v);
  r.add("w' = g[1] w", o.w_prime == compose(g.shift(1), w));
  r.add("w v' = delta", compose(w, o.v_prime) == o.delta);
  r.add("delta = f[1] h'", o.delta == compose(f.shift(1), hp));
  r.add("dagger exact", is_exact(o.dagger).passed);
  r.add("dagger distinguished", is_distinguished(o.dagger));
  r.add("column (u', v', w') exact", is_exact(o.column).passed);
  r.add("column (u', v', w') distinguished", is_distinguished(o.column));
  return r;
}

OctaReport derive_tr4_strong(const Octahedron& o) {
  OctaReport r;
  const Second s = second_application(o);
  const Triangle& big = s.big;
  r.add("second square (0,1)(-g; u) = u", compose(o.zy.projections[1], o.dagger.f) == o.u);
  r.add("v' (u', g') = v (0,1)", compose(o.v_prime, o.dagger.g) == compose(o.tu.g, o.zy.projections[1]));
  r.add("w v' = delta", compose(o.tu.h, o.v_prime) == o.delta);
  r.add("big triangle exact", is_exact(big).passed);
  r.add("big triangle distinguished", is_distinguished(big));

  // big = summand (+) (Y' -1-> Y' -> 0 -> Y'[1]) via b = [[1, -g'], [0, 1]] on Z' (+) Y'.
  const FormalObject& zp = o.tfp.z();
  const FormalObject& yp = o.tu.y();
  const Triangle summand{-o.u_prime, o.v_prime, -o.w_prime};
  const FormalObject zero_obj(yp.quiver_ptr());
  const Triangle trivial{id(yp), zero(yp, zero_obj), zero(zero_obj, yp.shift(1))};
  const Triangle sum = direct_sum_triangle(summand, trivial);
  const FormalMorphism b = into_sum(
      s.zpyp, {out_of_sum(s.zpyp, {id(zp), -o.tfp.g}), out_of_sum(s.zpyp, {zero(zp, yp), id(yp)})});
  auto sol = tr3_solutions(sum, big, id(sum.x()), b);
  std::string ranks;
  if (sol) ranks = "solution space dimension " + std::to_string(sol->homogeneous.size());
  const bool iso = sol && find_invertible(*sol, 5).has_value();
  r.add("summand isomorphism", iso, ranks.empty() ? "no TR3 completion" : ranks);
  r.add("summand (-u', v', -w') exact", is_exact(summand).passed);
  r.add("summand (-u', v', -w') distinguished", is_distinguished(summand));
  return r;
}

OctaReport derive_tr4prime(const FormalMorphism& f, const FormalMorphism& u, const OctaOptions& options) {
  const Octahedron o = octahedron_tr4pp(f, u, options);
  OctaReport r;
  const FormalMorphism& g = o.tf.g;
  const FormalMorphism& h = o.tf.h;
  const auto& [fp, gp, hp] = o.tfp;
  const auto& [uu, v, w] = o.tu;
  const FormalObject& z = o.tf.z();
  const FormalObject& yp = o.tu.y();
  const FormalMorphism& p1 = o.zy.projections[0];
  const FormalMorphism& p2 = o.zy.projections[1];
  const FormalSum zy1 = direct_sum(std::vector<FormalObject>{z.shift(1), yp.shift(1)});
  const FormalMorphism bottom = out_of_sum(zy1, {o.u_prime.shift(1), gp.shift(1)});

  // First grid: rows dagger and (-g, h, f[1]); columns ((1,0), 0, (0;1)) and (h', f'[1], g'[1]).
  const Triangle row1{-g, h, f.shift(1)};
  const Triangle col2a{p1, zero(z, yp.shift(1)), zy1.inclusions[1]};
  const Triangle col3a{hp, fp.shift(1), gp.shift(1)};
  r.add("grid1: (1,0)(-g; u) = -g", compose(p1, o.dagger.f) == -g);
  r.add("grid1: h' (u', g') = h (1,0)", compose(hp, o.dagger.g) == compose(h, p1));
  r.add("grid1: f[1] h' = delta", compose(f.shift(1), hp) == o.delta);
  r.add("grid1: f'[1] h = 0", compose(fp.shift(1), h).is_zero());
  r.add("grid1: (u'[1], g'[1]) (0;1) = g'[1]", compose(bottom, zy1.inclusions[1]) == gp.shift(1));
  r.add("grid1: row (-g, h, f[1]) exact", is_distinguished(row1));
  r.add("grid1: column ((1,0), 0, (0;1)) exact", is_distinguished(col2a));
  r.add("grid1: column (h', f'[1], g'[1]) exact", is_distinguished(col3a));

  // Second grid: rows dagger and tu; columns ((0,1), 0, (1;0)) and (v', -w', u'[1]).
  const Triangle col2b{p2, zero(yp, z.shift(1)), zy1.inclusions[0]};
  const Triangle col3b{o.v_prime, -o.w_prime, o.u_prime.shift(1)};
  r.add("grid2: (0,1)(-g; u) = u", compose(p2, o.dagger.f) == uu);
  r.add("grid2: v' (u', g') = v (0,1)", compose(o.v_prime, o.dagger.g) == compose(v, p2));
  r.add("grid2: w v' = delta", compose(w, o.v_prime) == o.delta);
  r.add("grid2: -w' v = 0", compose(-o.w_prime, v).is_zero());
  r.add("grid2: (u'[1], g'[1]) (1;0) = u'[1]", compose(bottom, zy1.inclusions[0]) == o.u_prime.shift(1));
  r.add("grid2: column ((0,1), 0, (1;0)) exact", is_distinguished(col2b));
  r.add("grid2: column (v', -w', u'[1]) exact", is_distinguished(col3b));
  r.add("dagger distinguished", is_distinguished(o.dagger));

  // Back to TR4'': C = cone(-g; u) with (a, b), c: C -> X[1] with c a = h, c b = 0, f[1] c = delta_C.
  const Triangle tc = cone_general(o.dagger.f);
  const FormalMorphism a = compose(tc.g, o.zy.inclusions[0]);
  const FormalMorphism b = compose(tc.g, o.zy.inclusions[1]);
  const FormalObject& x1 = f.source().shift(1);
  auto cs = solve_morphism(tc.z(), x1,
                           {{[&a](const FormalMorphism& c) { return compose(c, a); }, h},
                            {[&b](const FormalMorphism& c) { return compose(c, b); }, zero(yp, x1)},
                            {[&f](const FormalMorphism& c) { return compose(f.shift(1), c); }, tc.h}});
  r.add("TR4': c with c a = h, c b = 0, f[1] c = delta_C", cs.has_value());
  if (cs) {
    const Triangle bc{fp, b, cs->particular};
    auto gamma = tr3_iso(bc, o.tfp, id(f.source()), id(yp), options.seed);
    r.add("TR3: gamma: C -> Z' invertible", gamma.has_value());
    if (gamma) {
      const FormalMorphism up = compose(*gamma, a);
      const Triangle dag{o.dagger.f, out_of_sum(o.zy, {up, gp}), o.delta};
      r.add("u' = gamma a makes dagger exact", is_distinguished(dag));
      r.add("gamma a: u' g = g' u", compose(up, g) == compose(gp, uu));
      const Matrix coords = HomSpace(tc.z(), o.tfp.z()).coords(*gamma);
      std::string text = "gamma coordinates:";
      for (std::size_t i = 0; i < coords.rows(); ++i) text += " " + std::to_string(coords(i, 0));
      r.notes.push_back(text);
    }
  }
  return r;
}

}  // namespace trihered
