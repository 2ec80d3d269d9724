#include "trihered/cones.hpp"

#include <random>
#include <functional>
#include <set>

#include "trihered/equivalence.hpp"

namespace trihered {

namespace {

thread_local bool g_last_closed_form = false;

// Some e in Ext^1(Y, K) with e o f2 = target; f2: I -> Y mono, so pull-back along f2 is onto.
ExtClass lift_through_pullback(const ExtClass& target, const RepMorphism& f2, const Representation& y) {
  const Representation& k = target.sub;
  const std::size_t n = dim_ext(y, k);
  Matrix a(target.coords.rows(), n);
  for (std::size_t j = 0; j < n; ++j) {
    Matrix unit(n, 1);
    unit(j, 0) = 1;
    a.set_block(0, j, transport_ext(ExtClass{y, k, unit}, f2, std::nullopt).coords);
  }
  auto c = linalg::solve(a, target.coords);
  if (!c) throw Error("cone_in_H: pull-back along the image is not onto (quiver not hereditary?)");
  return {y, k, *c};
}

// phi: X -> E with pi o phi = f and phi o x = i.
RepMorphism solve_iota(const RepMorphism& f, const RepMorphism& x, const RepMorphism& i, const RepMorphism& pi) {
  auto space = hom_ext(f.source(), pi.source());
  auto hy = hom_ext(f.source(), f.target());
  auto hk = hom_ext(x.source(), i.target());
  Matrix a(hy->hom_dim() + hk->hom_dim(), space->hom_dim());
  for (std::size_t j = 0; j < space->hom_dim(); ++j) {
    const RepMorphism phi = space->hom_element(j);
    a.set_block(0, j, hy->hom_coords(compose(pi, phi)));
    a.set_block(hy->hom_dim(), j, hk->hom_coords(compose(phi, x)));
  }
  const Matrix b = Matrix::vstack({hy->hom_coords(f), hk->hom_coords(i)}, 1);
  auto c = linalg::solve(a, b);
  if (!c) throw Error("cone_in_H: no map into the middle term over f");
  return space->hom_from_coords(*c);
}

void check(bool ok, const std::string& what) {
  if (!ok) throw Error(what);
}

std::set<int> degrees_of(const FormalObject& a, const FormalObject& b) {
  std::set<int> out;
  for (const auto& [n, _] : a.components()) out.insert(n);
  for (const auto& [n, _] : b.components()) out.insert(n);
  return out;
}

}  // namespace

void PBPODiagram::validate() const {
  for (const auto& [s, name] : {std::pair{ShortExact{x, f1}, "top row"}, {ShortExact{iota_prime, pi}, "middle row"},
                                {ShortExact{iota, pi_prime}, "middle column"}, {ShortExact{f2, y}, "right column"}}) {
    try {
      s.validate();
    } catch (const Error& e) {
      throw Error(std::string("pull-back/push-out diagram: ") + name + ": " + e.what());
    }
  }
  check(compose(iota, x) == iota_prime, "pull-back/push-out diagram: iota o x != iota'");
  check(compose(pi, iota) == compose(f2, f1), "pull-back/push-out diagram: pi o iota != f2 o f1");
  check(compose(y, pi) == pi_prime, "pull-back/push-out diagram: y o pi != pi'");
  check(ses_class({iota_prime, pi}) == epsilon, "pull-back/push-out diagram: epsilon is not the middle row class");
  check(ses_class({iota, pi_prime}) == eta, "pull-back/push-out diagram: eta is not the middle column class");
}

ConeInH cone_in_H(const RepMorphism& f) {
  const Factorization fac = factorize(f);
  PBPODiagram d;
  d.X = f.source();
  d.Y = f.target();
  d.K = fac.kernel.source();
  d.I = fac.coimage.target();
  d.C = fac.cokernel.target();
  d.x = fac.kernel;
  d.f1 = fac.coimage;
  d.f2 = fac.image;
  d.y = fac.cokernel;
  d.epsilon = lift_through_pullback(ses_class({d.x, d.f1}), d.f2, d.Y);
  const ShortExact mid = extension_middle(d.epsilon);
  d.E = mid.middle();
  d.iota_prime = mid.inclusion;
  d.pi = mid.projection;
  d.iota = solve_iota(f, d.x, d.iota_prime, d.pi);
  d.pi_prime = compose(d.y, d.pi);
  d.eta = ses_class({d.iota, d.pi_prime});

  const QuiverPtr& q = f.source().quiver_ptr();
  const FormalObject x0 = FormalObject::stalk(d.X, 0);
  const FormalObject y0 = FormalObject::stalk(d.Y, 0);
  const FormalObject z(q, {{-1, d.K}, {0, d.C}});
  Triangle t{FormalMorphism::stalk(f, 0), FormalMorphism(y0, z, {{0, d.y}}, {{0, -d.epsilon}}),
             FormalMorphism(z, x0.shift(1), {{-1, d.x}}, {{0, d.eta}})};
  return {std::move(t), std::move(d)};
}

Triangle cone_pure_ext(const ExtClass& e, int degree) {
  const ShortExact s = extension_middle(e);
  // degree 0: X -e-> B[1] -i[1]-> E[1] -p[1]-> X[1]
  Triangle t{FormalMorphism::pure_ext(e, 0), FormalMorphism::stalk(s.inclusion, -1),
             FormalMorphism::stalk(s.projection, -1)};
  return shift_triangle(t, -degree);
}

Triangle cone_pure_ext(const FormalMorphism& f) {
  const FormalObject& x = f.source();
  const FormalObject& y = f.target();
  if (x.components().size() != 1 || y.components().size() != 1) {
    throw Error("cone_pure_ext: source and target must be single stalks");
  }
  const int n = x.min_degree();
  if (y.min_degree() != n - 1) throw Error("cone_pure_ext: target must sit one degree below the source");
  return cone_pure_ext(f.ext(n), n);
}

// ---------------------------------------------------------------------------

Complex as_complex(const FormalObject& x) { return Complex(x.quiver_ptr(), x.components(), {}); }

Roof realize(const FormalMorphism& f) {
  const FormalObject& x = f.source();
  const FormalObject& y = f.target();
  const QuiverPtr& q = x.quiver_ptr();
  std::map<int, ShortExact> mids;
  for (const auto& [n, e] : f.ext_parts()) {
    if (!e.is_zero()) mids.emplace(n, extension_middle(e));
  }
  if (x.is_zero()) {
    const Complex c = as_complex(x);
    return {c, ChainMap::identity(c), ChainMap::zero(c, as_complex(y))};
  }
  // degree m: Y_m (if e_{m+1} != 0) (+) (E_m or X_m)
  std::map<int, DirectSum> sums;
  for (int m = x.min_degree() - 1; m <= x.max_degree() + 1; ++m) {
    const Representation low = mids.count(m + 1) ? y.component(m) : Representation::zero(q);
    if (low.is_zero() && (mids.count(m) ? false : x.component(m).is_zero())) continue;
    const Representation high = mids.count(m) ? mids.at(m).middle() : x.component(m);
    sums.emplace(m, direct_sum({low, high}, q));
  }
  std::map<int, Representation> terms;
  std::map<int, RepMorphism> diffs;
  std::map<int, RepMorphism> quasi;
  std::map<int, RepMorphism> map;
  for (auto it = sums.begin(); it != sums.end(); ++it) {
    const int m = it->first;
    const DirectSum& s = it->second;
    terms.emplace(m, s.sum);
    const bool resolved = mids.count(m) != 0;
    const RepMorphism to_x = resolved ? mids.at(m).projection : RepMorphism::identity(x.component(m));
    quasi.emplace(m, compose(to_x, s.projections[1]));
    RepMorphism to_y = compose(compose(f.hom(m), to_x), s.projections[1]);
    // (-1)^{m+1} matches the sign with which F reads Ext parts in degree m+1
    if (mids.count(m + 1)) to_y = to_y + s.projections[0].scaled((m + 1) % 2 == 0 ? 1 : linalg::prime() - 1);
    map.emplace(m, to_y);
    auto next = std::next(it);
    if (next != sums.end() && next->first == m + 1 && mids.count(m + 1)) {
      diffs.emplace(m, compose(next->second.inclusions[1], compose(mids.at(m + 1).inclusion, s.projections[0])));
    }
  }
  Complex tilde(q, std::move(terms), std::move(diffs));
  // Terms of tilde may have been dropped as zero; rebuild components against the stored terms.
  auto restrict = [&tilde](std::map<int, RepMorphism> comps) {
    std::map<int, RepMorphism> out;
    for (auto& [m, c] : comps) {
      if (tilde.has(m)) out.emplace(m, std::move(c));
    }
    return out;
  };
  ChainMap qm(tilde, as_complex(x), restrict(std::move(quasi)));
  ChainMap fm(tilde, as_complex(y), restrict(std::move(map)));
  return {std::move(tilde), std::move(qm), std::move(fm)};
}

FormalMorphism roof_morphism(const Roof& r) {
  return compose(F_morphism(r.map), F_morphism(r.quasi).inverse());
}

Triangle realization_cone(const FormalMorphism& f) {
  const Roof r = realize(f);
  const MappingCone mc = mapping_cone(r.map);
  const FormalMorphism fq = F_morphism(r.quasi);
  const FormalMorphism fo = compose(F_morphism(r.map), fq.inverse());
  if (!(fo == f)) throw Error("realization_cone: roof does not reproduce the morphism");
  return {f, F_morphism(mc.g), compose(fq.shift(1), F_morphism(mc.h))};
}

// ---------------------------------------------------------------------------

namespace {

// `object` receives the closed-form cone object even when no candidate is certified.
std::optional<Triangle> closed_form_cone(const FormalMorphism& f, const GeneralConeOptions& options,
                                         FormalObject& object) {
  const FormalObject& x = f.source();
  const FormalObject& y = f.target();
  const QuiverPtr& q = x.quiver_ptr();
  std::set<int> degrees;
  for (int n : degrees_of(x, y)) {
    degrees.insert(n);
    degrees.insert(n - 1);
  }
  std::map<int, Factorization> fac;
  for (int n : degrees) fac.emplace(n, factorize(f.hom(n)));
  for (int n : degrees) {
    if (!fac.count(n + 1)) fac.emplace(n + 1, factorize(f.hom(n + 1)));
  }

  auto sign = [](int n) -> linalg::Elem { return n % 2 == 0 ? 1 : linalg::prime() - 1; };

  // 0 -> coker f0_n -> Z_n -> ker f0_{n+1} -> 0 with class (-1)^{n+1} y_n e_{n+1} k_{n+1}.
  std::map<int, ShortExact> mids;
  std::map<int, Representation> zc;
  for (int n : degrees) {
    const ExtClass zeta = transport_ext(f.ext(n + 1), fac.at(n + 1).kernel, fac.at(n).cokernel).scaled(sign(n + 1));
    mids.emplace(n, extension_middle(zeta));
    zc.emplace(n, mids.at(n).middle());
  }
  const FormalObject z(q, zc);
  object = z;
  const FormalObject x1 = x.shift(1);
  std::map<int, RepMorphism> g0;
  std::map<int, RepMorphism> h0;
  for (int n : degrees) {
    g0.emplace(n, compose(mids.at(n).inclusion, fac.at(n).cokernel));
    h0.emplace(n, compose(fac.at(n + 1).kernel, mids.at(n).projection));
  }
  auto keep = [](const FormalObject& s, const FormalObject& t, std::map<int, RepMorphism> parts) {
    std::map<int, RepMorphism> out;
    for (auto& [n, p] : parts) {
      if (s.has(n) && t.has(n)) out.emplace(n, std::move(p));
    }
    return out;
  };
  const FormalMorphism g = FormalMorphism(y, z, keep(y, z, g0), {});
  const FormalMorphism h = FormalMorphism(z, x1, keep(z, x1, h0), {});
  const FormalMorphism f1 = f.shift(1);

  // Unknown Ext parts dg, dh. Composites vanish:
  //   (g + dg) f = 0, (h + dh)(g + dg) = 0, f[1] (h + dh) = 0,
  // and the parts are normalised against the kernel and cokernel sequences of f0_n:
  //   (K_n -> Z_{n-1}) dg_n pulled back to I_n = (-1)^{n+1} [K_n -> X_n -> I_n],
  //   dh_n restricted to C_n, pushed out to I_n = (-1)^n [I_n -> Y_n -> C_n].
  const HomSpace sg(y, z);
  const HomSpace sh(z, x1);
  const std::size_t ng = sg.ext_dim();
  const std::size_t nh = sh.ext_dim();
  std::vector<Matrix> rows;
  std::vector<Matrix> rhs;
  auto add_block = [&](std::size_t height, const std::function<Matrix(const FormalMorphism&, const FormalMorphism&)>& lin,
                       const Matrix& constant, const Matrix& target) {
    Matrix a(height, ng + nh);
    const FormalMorphism zg = FormalMorphism::zero(y, z);
    const FormalMorphism zh = FormalMorphism::zero(z, x1);
    for (std::size_t j = 0; j < ng; ++j) a.set_block(0, j, lin(sg.basis_element(sg.hom_dim() + j), zh));
    for (std::size_t j = 0; j < nh; ++j) a.set_block(0, ng + j, lin(zg, sh.basis_element(sh.hom_dim() + j)));
    rows.push_back(std::move(a));
    rhs.push_back(target - constant);
  };
  {
    const HomSpace r1(x, z);
    const HomSpace r2(y, x1);
    const HomSpace r3(z, y.shift(1));
    add_block(r1.dim(), [&](const FormalMorphism& dg, const FormalMorphism&) { return r1.coords(compose(dg, f)); },
              r1.coords(compose(g, f)), Matrix(r1.dim(), 1));
    add_block(r2.dim(),
              [&](const FormalMorphism& dg, const FormalMorphism& dh) {
                return r2.coords(compose(h, dg) + compose(dh, g));
              },
              r2.coords(compose(h, g)), Matrix(r2.dim(), 1));
    add_block(r3.dim(), [&](const FormalMorphism&, const FormalMorphism& dh) { return r3.coords(compose(f1, dh)); },
              r3.coords(compose(f1, h)), Matrix(r3.dim(), 1));
  }
  for (int n : degrees) {
    const Factorization& fn = fac.at(n);
    if (y.has(n) && z.has(n - 1)) {
      const ExtClass target = ses_class({fn.kernel, fn.coimage}).scaled(sign(n + 1));
      const RepMorphism r = mids.at(n - 1).projection;
      auto lin = [&](const FormalMorphism& dg, const FormalMorphism&) {
        return transport_ext(dg.ext(n), fn.image, r).coords;
      };
      add_block(target.coords.rows(), lin, Matrix(target.coords.rows(), 1), target.coords);
    }
    if (z.has(n) && x1.has(n - 1)) {
      const ExtClass target = ses_class({fn.image, fn.cokernel}).scaled(sign(n));
      const RepMorphism jn = mids.at(n).inclusion;
      auto lin = [&](const FormalMorphism&, const FormalMorphism& dh) {
        return transport_ext(dh.ext(n), jn, fn.coimage).coords;
      };
      add_block(target.coords.rows(), lin, Matrix(target.coords.rows(), 1), target.coords);
    }
  }
  const Matrix a = Matrix::vstack(rows, ng + nh);
  const Matrix b = Matrix::vstack(rhs, 1);
  auto sol = linalg::solve(a, b);
  if (!sol) return std::nullopt;
  const Matrix kernel = linalg::kernel_basis(a);

  auto candidate = [&](const Matrix& u) {
    Matrix cg(sg.dim(), 1);
    Matrix ch(sh.dim(), 1);
    if (ng) cg.set_block(sg.hom_dim(), 0, u.block(0, 0, ng, 1));
    if (nh) ch.set_block(sh.hom_dim(), 0, u.block(ng, 0, nh, 1));
    return Triangle{f, g + sg.from_coords(cg), h + sh.from_coords(ch)};
  };
  // The linear conditions leave the Ext parts of g and h coupled only through h g = 0, so
  // some exact solutions are not cones. Each candidate is certified against the realization.
  const auto catalog = catalog_for(q);
  const Triangle reference = realization_cone(f);
  const FormalMorphism ix = FormalMorphism::identity(x);
  const FormalMorphism iy = FormalMorphism::identity(y);
  std::mt19937_64 rng(options.seed);
  for (std::size_t t = 0; t <= options.tries; ++t) {
    Matrix u = *sol;
    if (t > 0) {
      if (kernel.cols() == 0) break;
      Matrix r(kernel.cols(), 1);
      for (std::size_t i = 0; i < r.rows(); ++i) r(i, 0) = static_cast<linalg::Elem>(rng() % linalg::prime());
      u = u + kernel * r;
    }
    Triangle cand = candidate(u);
    if (!is_exact(cand, default_window(cand), *catalog).passed) continue;
    if (tr3_iso(reference, cand, ix, iy)) return cand;
  }
  return std::nullopt;
}

// The realization cone moved onto the object z along some isomorphism.
std::optional<Triangle> transported(const Triangle& r, const FormalObject& z) {
  const auto space = solve_morphism(r.z(), z, {});
  if (!space) return std::nullopt;
  const auto gamma = find_invertible(*space, 7);
  if (!gamma) return std::nullopt;
  return Triangle{r.f, compose(*gamma, r.g), compose(r.h, gamma->inverse())};
}

}  // namespace

Triangle cone_general(const FormalMorphism& f, const GeneralConeOptions& options) {
  g_last_closed_form = false;
  if (f.source().quiver_ptr()->is_dynkin()) {
    FormalObject z(f.source().quiver_ptr());
    if (auto t = closed_form_cone(f, options, z)) {
      g_last_closed_form = true;
      return *t;
    }
    if (auto t = transported(realization_cone(f), z)) return *t;
  }
  return realization_cone(f);
}

bool last_cone_was_closed_form() { return g_last_closed_form; }

// ---------------------------------------------------------------------------

Triangle key_lemma_assemble(const KeyLemmaGrid& grid) {
  const Triangle& r1 = grid.row1;
  const Triangle& r2 = grid.row2;
  const Triangle& c1 = grid.col1;
  const Triangle& c2 = grid.col2;
  for (const Triangle* t : {&r1, &r2, &c1, &c2}) t->validate();
  check(r1.x() == r2.x(), "key lemma grid: rows do not start at the same I");
  check(r1.y() == c1.x(), "key lemma grid: first row and first column do not share X");
  check(r1.z() == c2.x(), "key lemma grid: first row and second column do not share Y'");
  check(r2.y() == c1.y(), "key lemma grid: second row and first column do not share Y''");
  check(r2.z() == c2.y(), "key lemma grid: second row and second column do not share Z");
  check(c1.z() == c2.z(), "key lemma grid: columns do not share E[1]");
  const FormalMorphism& a = r1.f;
  const FormalMorphism& f1 = r1.g;   // f'
  const FormalMorphism& f2 = c1.f;   // f''
  const FormalMorphism& g2 = r2.g;   // g''
  const FormalMorphism& g1 = c2.f;   // g'
  const FormalMorphism& z = c2.g;
  check(r2.f == compose(f2, a), "key lemma grid: second row does not start with f'' o a");
  check(compose(g1, f1) == compose(g2, f2), "key lemma grid: g' o f' != g'' o f''");
  check(compose(z, g2) == c1.g, "key lemma grid: z o g'' != y''");
  check(c2.h == compose(f1.shift(1), c1.h), "key lemma grid: second column does not end with (f' x)[1]");
  const FormalMorphism h = compose(c1.h, z);
  check(compose(a.shift(1), r2.h) == h, "key lemma grid: a[1] o b != x[1] o z");

  const HomSpace hyy(r2.y(), r1.z());
  const HomSpace hyz(r2.y(), r2.z());
  for (std::size_t j = 0; j < hyy.dim(); ++j) {
    const FormalMorphism c = compose(g1, hyy.basis_element(j));
    if (!c.is_zero()) {
      throw Error("key lemma hypothesis Hom(Y'', g') = 0 fails: g' o phi != 0 for basis element " + std::to_string(j) +
                  " of Hom(Y'', Y')");
    }
  }
  const FormalSum ys = direct_sum(std::vector<FormalObject>{r1.z(), r2.y()});
  return {into_sum(ys, {-f1, f2}), out_of_sum(ys, {g1, g2}), h};
}

SplitOff split_off(const Triangle& t, const FormalSum& split) {
  t.validate();
  if (split.inclusions.size() != 2) throw Error("split_off: expected a decomposition into two summands");
  if (!(split.sum == t.y())) throw Error("split_off: decomposition is not of the middle object");
  if (!compose(split.projections[1], t.f).is_zero()) throw Error("split_off: f has a nonzero component into Y''");
  SplitOff out;
  out.main = cone_general(compose(split.projections[0], t.f));
  out.trivial = trivial_triangle(split.projections[1].target());
  out.sum = direct_sum_triangle(out.main, out.trivial);
  const FormalMorphism id_x = FormalMorphism::identity(t.x());
  const FormalMorphism id_y = FormalMorphism::identity(t.y());
  auto iso = tr3_iso(t, out.sum, id_x, id_y);
  if (!iso) throw Error("split_off: no isomorphism onto the split triangle");
  out.iso = *iso;
  return out;
}

bool isomorphic(const Representation& a, const Representation& b, std::uint64_t seed) {
  if (a.dims() != b.dims()) return false;
  if (a.is_zero()) return true;
  auto h = hom_ext(a, b);
  if (h->hom_dim() == 0) return false;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 32; ++t) {
    Matrix c(h->hom_dim(), 1);
    for (std::size_t i = 0; i < c.rows(); ++i) c(i, 0) = static_cast<linalg::Elem>(rng() % linalg::prime());
    if (h->hom_from_coords(c).is_iso()) return true;
  }
  return false;
}

bool isomorphic(const FormalObject& a, const FormalObject& b, std::uint64_t seed) {
  for (int n : degrees_of(a, b)) {
    if (!isomorphic(a.component(n), b.component(n), seed)) return false;
  }
  return true;
}

bool is_distinguished(const Triangle& t) {
  t.validate();
  if (!is_exact(t).passed) return false;
  const Triangle model = cone_general(t.f);
  return tr3_iso(model, t, FormalMorphism::identity(t.x()), FormalMorphism::identity(t.y())).has_value();
}

}  // namespace trihered
