#include "trihered/axioms.hpp"

#include <random>

#include "trihered/complexes.hpp"
#include "trihered/cones.hpp"

namespace trihered {

CheckReport verify_axioms(const QuiverPtr& q, const AxiomOptions& options) {
  if (!q->is_dynkin()) throw Unsupported("verify_axioms: the quiver is not of Dynkin type");
  CheckReport report;
  report.trials = options.trials;
  report.seed = options.seed;
  Recorder rec(report);

  for (const auto& ind : *catalog_for(q)) {
    const auto x = FormalObject::stalk(ind.rep, 0);
    rec.run("TR0", options.seed, [&](std::string& d) {
      d = "indecomposable " + ind.label;
      return is_exact(trivial_triangle(x)).passed && is_distinguished(trivial_triangle(x));
    });
  }

  for (std::size_t t = 0; t < options.trials; ++t) {
    const std::uint64_t s = trial_seed(options.seed, t);
    std::mt19937_64 rng(s);
    const auto obj = [&] { return random_formal_object(q, options.window, options.max_dim, rng()); };
    const FormalObject x = obj();
    const FormalObject y = obj();
    const FormalMorphism f = random_formal_morphism(x, y, rng());
    const Triangle tf = cone_general(f);

    rec.run("TR0", s, [&](std::string&) { return is_exact(trivial_triangle(x)).passed; });

    rec.run("TR1", s, [&](std::string& d) {
      if (!is_exact(tf).passed) {
        d = "cone triangle not exact";
        return false;
      }
      const Triangle oracle = realization_cone(f);
      if (!tr3_iso(tf, oracle, FormalMorphism::identity(x), FormalMorphism::identity(y))) {
        d = "cone differs from the realization cone";
        return false;
      }
      return true;
    });

    rec.run("TR2", s, [&](std::string& d) {
      const Triangle r1 = rotate(tf);
      if (!is_distinguished(r1)) {
        d = "rotation not distinguished";
        return false;
      }
      const Triangle r3 = rotate(rotate(r1));
      if (!is_distinguished(r3)) {
        d = "triple rotation not distinguished";
        return false;
      }
      return true;
    });

    rec.run("TR3", s, [&](std::string& d) {
      const FormalObject yp = obj();
      const FormalMorphism v = random_formal_morphism(y, yp, rng());
      const Triangle t2 = cone_general(compose(v, f));
      const FormalMorphism idx = FormalMorphism::identity(x);
      auto z = tr3_complete(tf, t2, idx, v);
      if (!z) {
        d = "no completion";
        return false;
      }
      return is_triangle_morphism(tf, t2, idx, v, *z);
    });

    if (t < options.conjugation_trials) {
      rec.run("two-out-of-three", s, [&](std::string& d) {
        const FormalMorphism a = random_automorphism(x, rng());
        const FormalMorphism b = random_automorphism(y, rng());
        const Triangle t2 = cone_general(compose(b, compose(f, a.inverse())));
        auto z = tr3_complete(tf, t2, a, b);
        if (!z) {
          d = "no completion";
          return false;
        }
        if (!z->is_iso()) {
          d = "completion is not invertible";
          return false;
        }
        return true;
      });
    }

    rec.run("direct sums", s, [&](std::string&) {
      const FormalObject x2 = obj();
      const Triangle t2 = cone_general(random_formal_morphism(x2, obj(), rng()));
      return is_distinguished(direct_sum_triangle(tf, t2));
    });

    if (t < options.split_trials) {
      rec.run("split normalization", s, [&](std::string& d) {
        const FormalObject z = obj();
        const FormalSum xz = direct_sum(std::vector<FormalObject>{x, z});
        const FormalMorphism th0 = random_automorphism(xz.sum, rng());
        const Triangle split{compose(th0.inverse(), xz.inclusions[0]), compose(xz.projections[1], th0),
                             FormalMorphism::zero(z, x.shift(1))};
        if (!is_exact(split).passed) {
          d = "conjugated split triangle not exact";
          return false;
        }
        const FormalMorphism th = split_exact_normalize(split);
        if (!(compose(th, split.f) == xz.inclusions[0]) || !(compose(xz.projections[1], th) == split.g)) {
          d = "theta does not normalize";
          return false;
        }
        return th.is_iso();
      });
    }
  }
  return report;
}

}  // namespace trihered
