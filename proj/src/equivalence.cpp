#include "trihered/equivalence.hpp"

#include <random>

#include "trihered/cones.hpp"

namespace trihered {

namespace {

// A complex of projectives P splits as (+)_n [B^n -> Z^n] (degrees n-1, n) once
// sections s^n: B^n -> P^{n-1} of the differential are fixed.
struct Splitting {
  std::map<int, CohomologyData> coh;
  std::map<int, RepMorphism> section;  // s^n with d^{n-1} s^n = (B^n -> P^n)
};

// s: B -> M with d s = target, B projective. A map out of B is free on generators (a
// complement of the incoming images at each vertex), so each generator is lifted through d
// and s is extended along paths. nullopt when B is not projective or a lift fails.
std::optional<RepMorphism> lift_from_projective(const Representation& b, const RepMorphism& d,
                                                const RepMorphism& target) {
  const Quiver& q = b.quiver();
  const std::size_t nv = q.vertex_count();
  std::vector<std::vector<Matrix>> gens(nv);  // per vertex: generator columns in B, lifts in M
  std::vector<std::vector<Matrix>> lifts(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    std::vector<Matrix> incoming;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
      if (q.arrow(a).target == v) incoming.push_back(b.mat(a));
    }
    Matrix span = linalg::column_space_basis(Matrix::hstack(incoming, b.dim(v)));
    std::size_t r = span.cols();
    const Matrix id = Matrix::identity(b.dim(v));
    for (std::size_t i = 0; i < b.dim(v) && r < b.dim(v); ++i) {
      Matrix trial = Matrix::hstack({span, id.col(i)}, b.dim(v));
      if (linalg::rank(trial) == r + 1) {
        span = std::move(trial);
        ++r;
        gens[v].push_back(id.col(i));
        auto x = linalg::solve(d.component(v), target.component(v) * id.col(i));
        if (!x) return std::nullopt;
        lifts[v].push_back(*x);
      }
    }
  }
  const Representation& m = d.source();
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < nv; ++v) {
    std::vector<Matrix> from;
    std::vector<Matrix> to;
    for (std::size_t w = 0; w < nv; ++w) {
      for (const auto& path : q.paths(w, v)) {
        const Matrix pb = b.path_matrix(path, w);
        const Matrix pm = m.path_matrix(path, w);
        for (std::size_t k = 0; k < gens[w].size(); ++k) {
          from.push_back(pb * gens[w][k]);
          to.push_back(pm * lifts[w][k]);
        }
      }
    }
    if (from.size() != b.dim(v)) return std::nullopt;
    const auto inv = linalg::inverse(Matrix::hstack(from, b.dim(v)));
    if (!inv) return std::nullopt;
    comps.push_back(Matrix::hstack(to, m.dim(v)) * *inv);
  }
  return RepMorphism::unchecked(b, m, std::move(comps));
}

Splitting split_projective(const Complex& p) {
  Splitting out;
  for (const auto& [n, _] : p.terms()) out.coh.emplace(n, cohomology_data(p, n));
  for (const auto& [n, data] : out.coh) {
    const Representation& b = data.boundaries();
    if (b.is_zero()) continue;
    const RepMorphism incl = compose(data.cycle_inclusion, data.boundary_inclusion);
    const RepMorphism d = p.diff(n - 1);
    if (auto s = lift_from_projective(b, d, incl); s && compose(d, *s) == incl) {
      out.section.emplace(n, *s);
      continue;
    }
    auto unknown = hom_ext(b, p.term(n - 1));
    auto image = hom_ext(b, p.term(n));
    Matrix a(image->hom_dim(), unknown->hom_dim());
    for (std::size_t j = 0; j < unknown->hom_dim(); ++j) a.set_block(0, j, image->hom_coords(compose(d, unknown->hom_element(j))));
    auto x = linalg::solve(a, image->hom_coords(incl));
    if (!x) throw Error("boundaries are not projective: the complex has non-projective terms");
    out.section.emplace(n, unknown->hom_from_coords(*x));
  }
  return out;
}

// P^k -> Z^k, v |-> v - s^{k+1} d^k v, in cycle coordinates.
RepMorphism cycle_projection(const Complex& p, const Splitting& s, int k) {
  const CohomologyData& data = s.coh.at(k);
  const Representation& pk = p.term(k);
  RepMorphism id = RepMorphism::identity(pk);
  auto it = s.section.find(k + 1);
  if (it != s.section.end()) {
    const CohomologyData& next = s.coh.at(k + 1);
    // d^k lands in B^{k+1}; express it in boundary coordinates.
    std::vector<Matrix> comps;
    for (std::size_t v = 0; v < pk.quiver().vertex_count(); ++v) {
      const Matrix incl = next.cycle_inclusion.component(v) * next.boundary_inclusion.component(v);
      comps.push_back(linalg::left_inverse(incl) * p.diff(k).component(v));
    }
    const RepMorphism to_b(pk, next.boundaries(), std::move(comps));
    id = id - compose(it->second, to_b);
  }
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < pk.quiver().vertex_count(); ++v) {
    comps.push_back(linalg::left_inverse(data.cycle_inclusion.component(v)) * id.component(v));
  }
  return {pk, data.cycles(), std::move(comps)};
}

int ext_sign(int n) { return n % 2 == 0 ? 1 : -1; }

// The Ext part of g: P -> P' from H^n(P) to H^{n-1}(P').
ExtClass extract_ext(const ChainMap& g, const Splitting& sx, const Splitting& sy, int n) {
  const Complex& py = g.target();
  const CohomologyData& dx = sx.coh.at(n);
  const CohomologyData& dy = sy.coh.at(n - 1);
  const auto sec = sx.section.find(n);
  if (sec == sx.section.end() || !py.has(n - 1)) return ExtClass::zero(dx.cohomology(), dy.cohomology());
  const RepMorphism psi = compose(cycle_projection(py, sy, n - 1), compose(g.component(n - 1), sec->second));
  const RepMorphism phi = compose(dy.to_cohomology, psi);
  const ExtClass xi = ses_class(ShortExact{dx.boundary_inclusion, dx.to_cohomology});
  const ExtClass e = transport_ext(xi, std::nullopt, phi);
  return ext_sign(n) == 1 ? e : -e;
}

FormalMorphism extract(const ChainMap& g, const Splitting& sx, const Splitting& sy, const FormalObject& fx,
                       const FormalObject& fy) {
  std::map<int, RepMorphism> hom;
  std::map<int, ExtClass> ext;
  for (const auto& [n, _] : fx.components()) {
    if (fy.has(n)) hom.emplace(n, induced_map(g, n));
    if (fy.has(n - 1)) ext.emplace(n, extract_ext(g, sx, sy, n));
  }
  return {fx, fy, std::move(hom), std::move(ext)};
}

}  // namespace

FormalObject F_object(const Complex& c) { return strictify(c).formal; }

FormalMorphism F_projective(const ChainMap& g) {
  const Splitting sx = split_projective(g.source());
  const Splitting sy = split_projective(g.target());
  return extract(g, sx, sy, F_object(g.source()), F_object(g.target()));
}

FormalMorphism F_morphism(const ChainMap& f) {
  const FormalObject fx = F_object(f.source());
  const FormalObject fy = F_object(f.target());
  const Replacement rx = standard_replacement(f.source());
  const Replacement ry = standard_replacement(f.target());
  const ChainMap pf = standard_replacement(f);
  const Splitting sx = split_projective(rx.complex);
  const Splitting sy = split_projective(ry.complex);
  std::map<int, RepMorphism> hom;
  std::map<int, ExtClass> ext;
  for (const auto& [n, _] : fx.components()) {
    if (fy.has(n)) hom.emplace(n, induced_map(f, n));
    if (fy.has(n - 1)) {
      const ExtClass e = extract_ext(pf, sx, sy, n);
      const RepMorphism qx_inv = *induced_map(rx.quasi, n).inverse();
      ext.emplace(n, transport_ext(e, qx_inv, induced_map(ry.quasi, n - 1)));
    }
  }
  return {fx, fy, std::move(hom), std::move(ext)};
}

namespace {

// dim Hom_D(X, Y[n]) computed on standard replacements.
std::size_t derived_hom_dim(const Complex& x, const Complex& y, int n) {
  return hom_mod_homotopy(standard_replacement(x).complex, standard_replacement(y).complex.shift(n)).dim;
}

}  // namespace

FunctorReport verify_equivalence(const QuiverPtr& q, const EquivalenceOptions& options) {
  if (!q->is_dynkin()) throw Unsupported("verify_equivalence: the quiver is not of Dynkin type");
  FunctorReport report;
  report.trials = options.trials;
  report.seed = options.seed;
  Recorder rec(report);
  const DegreeWindow w = options.window;
  const std::size_t md = options.max_dim;
  auto rc = [&](std::uint64_t s) { return random_complex(q, w.lo, w.hi, md, s); };

  for (std::size_t t = 0; t < options.trials; ++t) {
    const std::uint64_t s = trial_seed(options.seed, t);
    std::mt19937_64 rng(s);
    const Complex x = rc(rng());
    const Complex y = rc(rng());
    const Complex z = rc(rng());
    const ChainMap f = random_chain_map(x, y, rng());
    const ChainMap g = random_chain_map(y, z, rng());
    const ChainMap f2 = random_chain_map(x, y, rng());

    rec.run("functoriality", s, [&](std::string& d) {
      if (!(F_morphism(ChainMap::identity(x)) == FormalMorphism::identity(F_object(x)))) {
        d = "F(id) != id";
        return false;
      }
      if (!(F_morphism(compose(g, f)) == compose(F_morphism(g), F_morphism(f)))) {
        d = "F(g o f) != F(g) o F(f)";
        return false;
      }
      return true;
    });
    rec.run("additivity", s, [&](std::string& d) {
      if (!(F_morphism(f + f2) == F_morphism(f) + F_morphism(f2))) {
        d = "F(f + f') != F(f) + F(f')";
        return false;
      }
      const auto sum = direct_sum(std::vector<FormalMorphism>{F_morphism(f), F_morphism(g)});
      if (!(F_morphism(direct_sum(f, g)) == sum)) {
        d = "F(f (+) g) != F(f) (+) F(g)";
        return false;
      }
      return true;
    });
    rec.run("shift", s, [&](std::string& d) {
      if (!(F_object(x.shift(1)) == F_object(x).shift(1))) {
        d = "F(X[1]) != F(X)[1]";
        return false;
      }
      if (!(F_morphism(f.shift(1)) == F_morphism(f).shift(1))) {
        d = "F(f[1]) != F(f)[1]";
        return false;
      }
      return true;
    });
    rec.run("restriction to H", s, [&](std::string& d) {
      const Representation a = random_representation(q, md, rng());
      const Representation b = random_representation(q, md, rng());
      auto h = hom_ext(a, b);
      Matrix c(h->hom_dim(), 1);
      for (std::size_t i = 0; i < c.rows(); ++i) c(i, 0) = static_cast<linalg::Elem>(rng() % linalg::prime());
      const RepMorphism m = h->hom_from_coords(c);
      if (!(F_morphism(ChainMap::stalk(m, 0)) == FormalMorphism::stalk(m, 0))) {
        d = "F(stalk map) != stalk map";
        return false;
      }
      return true;
    });
    rec.run("fullness dims", s, [&](std::string& d) {
      const Complex px = standard_replacement(x).complex;
      const Complex py = standard_replacement(y).complex;
      const HomotopyClasses hc = hom_mod_homotopy(px, py);
      const HomSpace space(F_object(px), F_object(py));
      if (hc.dim != space.dim()) {
        d = "dim Hom_K = " + std::to_string(hc.dim) + ", dim Hom_formal = " + std::to_string(space.dim());
        return false;
      }
      std::vector<Matrix> cols;
      for (const auto& b : hc.basis) cols.push_back(space.coords(F_projective(b)));
      const std::size_t r = cols.empty() ? 0 : linalg::rank(Matrix::hstack(cols, space.dim()));
      rec.record("faithfulness dims", s, r == hc.dim,
                 "rank of F on a homotopy basis = " + std::to_string(r) + " < " + std::to_string(hc.dim));
      return true;
    });
    rec.run("essential surjectivity", s, [&](std::string& d) {
      const FormalObject o = random_formal_object(q, w, md, rng());
      if (!(F_object(as_complex(o)) == o)) {
        d = "F(realization) != object";
        return false;
      }
      return true;
    });
    rec.run("triangle exactness", s, [&](std::string& d) {
      const MappingCone mc = mapping_cone(f);
      const Triangle tri{F_morphism(f), F_morphism(mc.g), F_morphism(mc.h)};
      const ExactnessReport ex = is_exact(tri);
      if (!ex.passed) {
        d = ex.failures.front();
        return false;
      }
      const Triangle model = cone_general(tri.f);
      const FormalMorphism ix = FormalMorphism::identity(tri.x());
      const FormalMorphism iy = FormalMorphism::identity(tri.y());
      if (!tr3_iso(tri, model, ix, iy)) {
        d = "image of the mapping-cone triangle is not isomorphic to the model cone";
        return false;
      }
      return true;
    });
  }

  // Hom_D(X, Y[n]) = Ext^n(X, Y) = Hom_formal(X, Y[n]) on indecomposables.
  const auto catalog = catalog_for(q);
  for (std::size_t i = 0; i < catalog->size(); ++i) {
    for (std::size_t j = 0; j < catalog->size(); ++j) {
      const Representation& a = (*catalog)[i].rep;
      const Representation& b = (*catalog)[j].rep;
      for (int n = -1; n <= 2; ++n) {
        rec.run("hom comparison", options.seed, [&](std::string& d) {
          const std::size_t dd = derived_hom_dim(Complex::stalk(a, 0), Complex::stalk(b, 0), n);
          const std::size_t de = n == 0 ? dim_hom(a, b) : n == 1 ? dim_ext(a, b) : 0;
          const std::size_t df = HomSpace(FormalObject::stalk(a, 0), FormalObject::shifted(b, n)).dim();
          if (dd == de && de == df) return true;
          d = "Hom(" + (*catalog)[i].label + ", " + node_name((*catalog)[j].label, n) + "): derived " +
              std::to_string(dd) + ", ext " + std::to_string(de) + ", formal " + std::to_string(df);
          return false;
        });
      }
    }
  }
  return report;
}

}  // namespace trihered
