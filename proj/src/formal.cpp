#include "trihered/formal.hpp"

#include <random>
#include <set>
#include <sstream>

namespace trihered {

namespace {

void require_same(const FormalObject& a, const FormalObject& b, const char* what) {
  if (!(a == b)) throw Error(std::string(what) + ": endpoint mismatch");
}

std::set<int> degree_union(const FormalObject& a, const FormalObject& b) {
  std::set<int> out;
  for (const auto& [n, _] : a.components()) out.insert(n);
  for (const auto& [n, _] : b.components()) out.insert(n);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

FormalObject::FormalObject(QuiverPtr quiver, std::map<int, Representation> components) : quiver_(std::move(quiver)) {
  if (!quiver_) throw Error("formal object without a quiver");
  for (auto& [n, x] : components) {
    if (x.is_zero()) continue;
    if (!same_quiver(x.quiver_ptr(), quiver_)) throw Error("formal object components over different quivers");
    comps_.emplace(n, std::move(x));
  }
}

FormalObject FormalObject::stalk(const Representation& x, int degree) {
  return FormalObject(x.quiver_ptr(), {{degree, x}});
}

Representation FormalObject::component(int n) const {
  auto it = comps_.find(n);
  return it == comps_.end() ? Representation::zero(quiver_) : it->second;
}

int FormalObject::min_degree() const {
  if (comps_.empty()) throw Error("degree range of the zero object");
  return comps_.begin()->first;
}

int FormalObject::max_degree() const {
  if (comps_.empty()) throw Error("degree range of the zero object");
  return comps_.rbegin()->first;
}

FormalObject FormalObject::shift(int k) const {
  std::map<int, Representation> out;
  for (const auto& [n, x] : comps_) out.emplace(n - k, x);
  return {quiver_, std::move(out)};
}

// ---------------------------------------------------------------------------

FormalMorphism::FormalMorphism(FormalObject source, FormalObject target, std::map<int, RepMorphism> hom,
                               std::map<int, ExtClass> ext)
    : source_(std::move(source)), target_(std::move(target)) {
  if (!same_quiver(source_.quiver_ptr(), target_.quiver_ptr())) throw Error("formal morphism between quivers");
  for (auto& [n, f] : hom) {
    if (!(f.source() == source_.component(n)) || !(f.target() == target_.component(n))) {
      throw Error("formal morphism: hom part in degree " + std::to_string(n) + " has wrong endpoints");
    }
  }
  for (auto& [n, e] : ext) {
    if (!(e.quotient == source_.component(n)) || !(e.sub == target_.component(n - 1))) {
      throw Error("formal morphism: ext part in degree " + std::to_string(n) + " has wrong endpoints");
    }
  }
  for (const auto& [n, x] : source_.components()) {
    if (target_.has(n)) {
      auto it = hom.find(n);
      hom_.emplace(n, it != hom.end() ? std::move(it->second) : RepMorphism::zero(x, target_.component(n)));
    }
    if (target_.has(n - 1)) {
      auto it = ext.find(n);
      ext_.emplace(n, it != ext.end() ? std::move(it->second) : ExtClass::zero(x, target_.component(n - 1)));
    }
  }
}

FormalMorphism FormalMorphism::zero(const FormalObject& source, const FormalObject& target) {
  return {source, target, {}, {}};
}

FormalMorphism FormalMorphism::identity(const FormalObject& x) {
  std::map<int, RepMorphism> hom;
  for (const auto& [n, c] : x.components()) hom.emplace(n, RepMorphism::identity(c));
  return {x, x, std::move(hom), {}};
}

FormalMorphism FormalMorphism::stalk(const RepMorphism& f, int degree) {
  return {FormalObject::stalk(f.source(), degree), FormalObject::stalk(f.target(), degree), {{degree, f}}, {}};
}

FormalMorphism FormalMorphism::pure_ext(const ExtClass& e, int degree) {
  return {FormalObject::stalk(e.quotient, degree), FormalObject::stalk(e.sub, degree - 1), {}, {{degree, e}}};
}

RepMorphism FormalMorphism::hom(int n) const {
  auto it = hom_.find(n);
  return it != hom_.end() ? it->second : RepMorphism::zero(source_.component(n), target_.component(n));
}

ExtClass FormalMorphism::ext(int n) const {
  auto it = ext_.find(n);
  return it != ext_.end() ? it->second : ExtClass::zero(source_.component(n), target_.component(n - 1));
}

bool FormalMorphism::is_zero() const {
  for (const auto& [_, f] : hom_) {
    if (!f.is_zero()) return false;
  }
  for (const auto& [_, e] : ext_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

bool FormalMorphism::is_iso() const {
  for (int n : degree_union(source_, target_)) {
    if (source_.component(n).dims() != target_.component(n).dims()) return false;
    if (!hom(n).is_iso()) return false;
  }
  return true;
}

FormalMorphism FormalMorphism::inverse() const {
  if (!is_iso()) throw Error("formal morphism is not an isomorphism");
  std::map<int, RepMorphism> inv;
  for (const auto& [n, f] : hom_) inv.emplace(n, *f.inverse());
  const FormalMorphism d(target_, source_, std::move(inv), {});
  // f = f0 (1 + N) with N = f0^{-1} f1 square-zero, so f^{-1} = (1 - N) f0^{-1}.
  const FormalMorphism n = trihered::compose(d, ext_only());
  return trihered::compose(identity(source_) - n, d);
}

FormalMorphism FormalMorphism::shift(int k) const {
  std::map<int, RepMorphism> hom;
  std::map<int, ExtClass> ext;
  for (const auto& [n, f] : hom_) hom.emplace(n - k, f);
  for (const auto& [n, e] : ext_) ext.emplace(n - k, e);
  return {source_.shift(k), target_.shift(k), std::move(hom), std::move(ext)};
}

FormalMorphism FormalMorphism::scaled(linalg::Elem s) const {
  FormalMorphism out = *this;
  for (auto& [_, f] : out.hom_) f = f.scaled(s);
  for (auto& [_, e] : out.ext_) e = e.scaled(s);
  return out;
}

FormalMorphism FormalMorphism::hom_only() const { return {source_, target_, hom_, {}}; }

FormalMorphism FormalMorphism::ext_only() const { return {source_, target_, {}, ext_}; }

bool operator==(const FormalMorphism& a, const FormalMorphism& b) {
  return a.source_ == b.source_ && a.target_ == b.target_ && a.hom_ == b.hom_ && a.ext_ == b.ext_;
}

FormalMorphism operator+(const FormalMorphism& a, const FormalMorphism& b) {
  require_same(a.source_, b.source_, "formal sum");
  require_same(a.target_, b.target_, "formal sum");
  FormalMorphism out = a;
  for (auto& [n, f] : out.hom_) f = f + b.hom_.at(n);
  for (auto& [n, e] : out.ext_) e = e + b.ext_.at(n);
  return out;
}

FormalMorphism operator-(const FormalMorphism& a) {
  FormalMorphism out = a;
  for (auto& [_, f] : out.hom_) f = -f;
  for (auto& [_, e] : out.ext_) e = -e;
  return out;
}

FormalMorphism compose(const FormalMorphism& g, const FormalMorphism& f) {
  require_same(f.target(), g.source(), "formal composition");
  const FormalObject& x = f.source();
  const FormalObject& z = g.target();
  std::map<int, RepMorphism> hom;
  std::map<int, ExtClass> ext;
  for (const auto& [n, xn] : x.components()) {
    if (z.has(n)) hom.emplace(n, compose(g.hom(n), f.hom(n)));
    if (z.has(n - 1)) {
      ExtClass e = transport_ext(g.ext(n), f.hom(n), std::nullopt);
      e = e + transport_ext(f.ext(n), std::nullopt, g.hom(n - 1));
      ext.emplace(n, std::move(e));
    }
  }
  return {x, z, std::move(hom), std::move(ext)};
}

FormalMorphism compose(std::initializer_list<std::reference_wrapper<const FormalMorphism>> chain) {
  if (chain.size() == 0) throw Error("empty composition");
  auto it = chain.end();
  --it;
  FormalMorphism acc = it->get();
  while (it != chain.begin()) {
    --it;
    acc = compose(it->get(), acc);
  }
  return acc;
}

// ---------------------------------------------------------------------------

FormalSum direct_sum(const std::vector<FormalObject>& parts) {
  if (parts.empty()) throw Error("direct sum of no formal objects");
  const QuiverPtr& q = parts.front().quiver_ptr();
  std::set<int> degrees;
  for (const auto& p : parts) {
    for (const auto& [n, _] : p.components()) degrees.insert(n);
  }
  std::map<int, DirectSum> sums;
  std::map<int, Representation> comps;
  for (int n : degrees) {
    std::vector<Representation> reps;
    for (const auto& p : parts) reps.push_back(p.component(n));
    auto ds = direct_sum(reps, q);
    comps.emplace(n, ds.sum);
    sums.emplace(n, std::move(ds));
  }
  FormalSum out{FormalObject(q, std::move(comps)), {}, {}};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::map<int, RepMorphism> inc;
    std::map<int, RepMorphism> proj;
    for (const auto& [n, ds] : sums) {
      inc.emplace(n, ds.inclusions[i]);
      proj.emplace(n, ds.projections[i]);
    }
    out.inclusions.emplace_back(parts[i], out.sum, inc, std::map<int, ExtClass>{});
    out.projections.emplace_back(out.sum, parts[i], proj, std::map<int, ExtClass>{});
  }
  return out;
}

FormalMorphism direct_sum(const std::vector<FormalMorphism>& parts) {
  std::vector<FormalObject> src;
  std::vector<FormalObject> tgt;
  for (const auto& f : parts) {
    src.push_back(f.source());
    tgt.push_back(f.target());
  }
  const FormalSum s = direct_sum(src);
  const FormalSum t = direct_sum(tgt);
  FormalMorphism out = FormalMorphism::zero(s.sum, t.sum);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out = out + compose({t.inclusions[i], parts[i], s.projections[i]});
  }
  return out;
}

FormalMorphism into_sum(const FormalSum& target, const std::vector<FormalMorphism>& parts) {
  if (parts.size() != target.inclusions.size()) throw Error("into_sum: wrong number of components");
  FormalMorphism out = FormalMorphism::zero(parts.front().source(), target.sum);
  for (std::size_t i = 0; i < parts.size(); ++i) out = out + compose(target.inclusions[i], parts[i]);
  return out;
}

FormalMorphism out_of_sum(const FormalSum& source, const std::vector<FormalMorphism>& parts) {
  if (parts.size() != source.projections.size()) throw Error("out_of_sum: wrong number of components");
  FormalMorphism out = FormalMorphism::zero(source.sum, parts.front().target());
  for (std::size_t i = 0; i < parts.size(); ++i) out = out + compose(parts[i], source.projections[i]);
  return out;
}

// ---------------------------------------------------------------------------

HomSpace::HomSpace(FormalObject source, FormalObject target) : source_(std::move(source)), target_(std::move(target)) {
  for (const auto& [n, x] : source_.components()) {
    if (!target_.has(n)) continue;
    const std::size_t d = hom_ext(x, target_.component(n))->hom_dim();
    blocks_.push_back({n, false, dim_, d});
    dim_ += d;
  }
  hom_dim_ = dim_;
  for (const auto& [n, x] : source_.components()) {
    if (!target_.has(n - 1)) continue;
    const std::size_t d = hom_ext(x, target_.component(n - 1))->ext_dim();
    blocks_.push_back({n, true, dim_, d});
    dim_ += d;
  }
}

Matrix HomSpace::coords(const FormalMorphism& f) const {
  require_same(f.source(), source_, "hom space coordinates");
  require_same(f.target(), target_, "hom space coordinates");
  Matrix c(dim_, 1);
  for (const auto& b : blocks_) {
    if (b.size == 0) continue;
    if (b.ext) {
      c.set_block(b.offset, 0, f.ext(b.degree).coords);
    } else {
      const RepMorphism part = f.hom(b.degree);
      c.set_block(b.offset, 0, hom_ext(part.source(), part.target())->hom_coords(part));
    }
  }
  return c;
}

FormalMorphism HomSpace::from_coords(const Matrix& c) const {
  if (c.rows() != dim_ || c.cols() != 1) throw Error("hom space: coordinate vector has wrong size");
  std::map<int, RepMorphism> hom;
  std::map<int, ExtClass> ext;
  for (const auto& b : blocks_) {
    const Matrix part = c.block(b.offset, 0, b.size, 1);
    if (b.ext) {
      ext.emplace(b.degree, ExtClass{source_.component(b.degree), target_.component(b.degree - 1), part});
    } else {
      hom.emplace(b.degree, hom_ext(source_.component(b.degree), target_.component(b.degree))->hom_from_coords(part));
    }
  }
  return {source_, target_, std::move(hom), std::move(ext)};
}

FormalMorphism HomSpace::basis_element(std::size_t j) const {
  Matrix c(dim_, 1);
  c(j, 0) = 1;
  return from_coords(c);
}

std::vector<FormalMorphism> HomSpace::basis() const {
  std::vector<FormalMorphism> out;
  for (std::size_t j = 0; j < dim_; ++j) out.push_back(basis_element(j));
  return out;
}

Matrix HomSpace::matrix_of(const HomSpace& codomain,
                           const std::function<FormalMorphism(const FormalMorphism&)>& map) const {
  Matrix m(codomain.dim(), dim_);
  for (std::size_t j = 0; j < dim_; ++j) m.set_block(0, j, codomain.coords(map(basis_element(j))));
  return m;
}

std::optional<LinearSolution> solve_morphism(const FormalObject& source, const FormalObject& target,
                                             const std::vector<LinearCondition>& conditions) {
  const HomSpace space(source, target);
  std::vector<Matrix> as;
  std::vector<Matrix> bs;
  for (const auto& c : conditions) {
    const HomSpace codomain(c.rhs.source(), c.rhs.target());
    as.push_back(space.matrix_of(codomain, c.map));
    bs.push_back(codomain.coords(c.rhs));
  }
  const Matrix a = Matrix::vstack(as, space.dim());
  const Matrix b = Matrix::vstack(bs, 1);
  auto x = linalg::solve(a, b);
  if (!x) return std::nullopt;
  LinearSolution out{space.from_coords(*x), {}};
  const Matrix k = linalg::kernel_basis(a);
  for (std::size_t j = 0; j < k.cols(); ++j) out.homogeneous.push_back(space.from_coords(k.col(j)));
  return out;
}

std::optional<FormalMorphism> find_invertible(const LinearSolution& sol, std::uint64_t seed, std::size_t tries) {
  if (sol.particular.is_iso()) return sol.particular;
  if (sol.homogeneous.empty()) return std::nullopt;
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < tries; ++t) {
    FormalMorphism z = sol.particular;
    for (const auto& h : sol.homogeneous) z = z + h.scaled(static_cast<linalg::Elem>(rng() % linalg::prime()));
    if (z.is_iso()) return z;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

void Triangle::validate() const {
  require_same(f.target(), g.source(), "triangle f/g");
  require_same(g.target(), h.source(), "triangle g/h");
  require_same(h.target(), f.source().shift(1), "triangle h/f[1]");
}

Triangle rotate(const Triangle& t) { return {-t.g, -t.h, -t.f.shift(1)}; }

Triangle shift_triangle(const Triangle& t, int k) {
  const FormalMorphism h = t.h.shift(k);
  return {t.f.shift(k), t.g.shift(k), k % 2 == 0 ? h : -h};
}

Triangle trivial_triangle(const FormalObject& x) {
  const FormalObject zero(x.quiver_ptr());
  return {FormalMorphism::zero(zero, x), FormalMorphism::identity(x), FormalMorphism::zero(x, zero.shift(1))};
}

DegreeWindow default_window(const Triangle& t) {
  bool any = false;
  DegreeWindow w;
  for (const FormalObject* o : {&t.x(), &t.y(), &t.z()}) {
    if (o->is_zero()) continue;
    if (!any) {
      w = {o->min_degree(), o->max_degree()};
      any = true;
    } else {
      w.lo = std::min(w.lo, o->min_degree());
      w.hi = std::max(w.hi, o->max_degree());
    }
  }
  return {w.lo - 1, w.hi + 1};
}

ExactnessReport is_exact(const Triangle& t) { return is_exact(t, default_window(t)); }

ExactnessReport is_exact(const Triangle& t, const DegreeWindow& window) {
  return is_exact(t, window, *catalog_for(t.f.source().quiver_ptr()));
}

ExactnessReport is_exact(const Triangle& t, const DegreeWindow& window, const std::vector<Indecomposable>& catalog) {
  t.validate();
  ExactnessReport rep;
  auto fail = [&rep](std::string msg) {
    rep.passed = false;
    rep.failures.push_back(std::move(msg));
  };
  if (!compose(t.g, t.f).is_zero()) fail("g o f != 0");
  if (!compose(t.h, t.g).is_zero()) fail("h o g != 0");
  const FormalMorphism f1 = t.f.shift(1);
  if (!compose(f1, t.h).is_zero()) fail("f[1] o h != 0");

  const FormalObject x1 = t.x().shift(1);
  const FormalObject y1 = t.y().shift(1);
  for (int k = window.lo; k <= window.hi; ++k) {
    for (const auto& ind : catalog) {
      const FormalObject u = FormalObject::stalk(ind.rep, k);
      const HomSpace hx(u, t.x());
      const HomSpace hy(u, t.y());
      const HomSpace hz(u, t.z());
      const HomSpace hx1(u, x1);
      const HomSpace hy1(u, y1);
      auto post = [](const FormalMorphism& m) {
        return [&m](const FormalMorphism& a) { return compose(m, a); };
      };
      const Matrix a = hx.matrix_of(hy, post(t.f));
      const Matrix b = hy.matrix_of(hz, post(t.g));
      const Matrix c = hz.matrix_of(hx1, post(t.h));
      const Matrix d = hx1.matrix_of(hy1, post(f1));
      const std::string uname = node_name(ind.label, -k);
      const std::size_t ra = linalg::rank(a);
      const std::size_t rb = linalg::rank(b);
      const std::size_t rc = linalg::rank(c);
      const std::size_t rd = linalg::rank(d);
      if (!(b * a).is_zero() || ra + rb != hy.dim()) fail("Hom(" + uname + ", -) not exact at Y");
      if (!(c * b).is_zero() || rb + rc != hz.dim()) fail("Hom(" + uname + ", -) not exact at Z");
      if (!(d * c).is_zero() || rc + rd != hx1.dim()) fail("Hom(" + uname + ", -) not exact at X[1]");
    }
  }
  return rep;
}

namespace {

std::optional<LinearSolution> tr3_solve(const Triangle& t, const Triangle& t2, const FormalMorphism& x,
                                        const FormalMorphism& y) {
  t.validate();
  t2.validate();
  if (!(compose(y, t.f) == compose(t2.f, x))) throw Error("tr3_complete: the given square does not commute");
  const FormalMorphism& g = t.g;
  const FormalMorphism& h2 = t2.h;
  std::vector<LinearCondition> conds{
      {[&g](const FormalMorphism& z) { return compose(z, g); }, compose(t2.g, y)},
      {[&h2](const FormalMorphism& z) { return compose(h2, z); }, compose(x.shift(1), t.h)},
  };
  return solve_morphism(t.z(), t2.z(), conds);
}

}  // namespace

std::optional<LinearSolution> tr3_solutions(const Triangle& t, const Triangle& t2, const FormalMorphism& x,
                                            const FormalMorphism& y) {
  return tr3_solve(t, t2, x, y);
}

std::optional<FormalMorphism> tr3_complete(const Triangle& t, const Triangle& t2, const FormalMorphism& x,
                                           const FormalMorphism& y) {
  auto sol = tr3_solve(t, t2, x, y);
  if (!sol) return std::nullopt;
  return sol->particular;
}

std::optional<FormalMorphism> tr3_iso(const Triangle& t, const Triangle& t2, const FormalMorphism& x,
                                      const FormalMorphism& y, std::uint64_t seed) {
  auto sol = tr3_solve(t, t2, x, y);
  if (!sol) return std::nullopt;
  return find_invertible(*sol, seed);
}

bool is_triangle_morphism(const Triangle& t, const Triangle& t2, const FormalMorphism& a, const FormalMorphism& b,
                          const FormalMorphism& c) {
  return compose(b, t.f) == compose(t2.f, a) && compose(c, t.g) == compose(t2.g, b) &&
         compose(a.shift(1), t.h) == compose(t2.h, c);
}

Triangle direct_sum_triangle(const Triangle& t, const Triangle& t2) {
  return {direct_sum(std::vector<FormalMorphism>{t.f, t2.f}), direct_sum(std::vector<FormalMorphism>{t.g, t2.g}),
          direct_sum(std::vector<FormalMorphism>{t.h, t2.h})};
}

FormalMorphism split_exact_normalize(const Triangle& t) {
  t.validate();
  if (!t.h.is_zero()) throw Error("split_exact_normalize: connecting morphism is not zero");
  const FormalSum xz = direct_sum(std::vector<FormalObject>{t.x(), t.z()});
  const FormalMorphism& f = t.f;
  const FormalMorphism& pz = xz.projections[1];
  std::vector<LinearCondition> conds{
      {[&f](const FormalMorphism& th) { return compose(th, f); }, xz.inclusions[0]},
      {[&pz](const FormalMorphism& th) { return compose(pz, th); }, t.g},
  };
  auto sol = solve_morphism(t.y(), xz.sum, conds);
  if (!sol) throw Error("split_exact_normalize: triangle is not split exact");
  auto theta = find_invertible(*sol);
  if (!theta) throw Error("split_exact_normalize: no invertible splitting found");
  return *theta;
}

std::string describe(const FormalObject& x) {
  if (x.is_zero()) return "0";
  std::shared_ptr<const std::vector<Indecomposable>> cat;
  if (x.quiver_ptr()->is_dynkin()) cat = catalog_for(x.quiver_ptr());
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, c] : x.components()) {
    for (const auto& s : decompose_rep(c)) {
      std::string label = "M" + dim_vector_string(s.rep.dims());
      if (cat) {
        if (auto i = find_indecomposable(*cat, s.rep.dims())) label = (*cat)[*i].label;
      }
      os << (first ? "" : " + ") << node_name(label, -n);
      first = false;
    }
  }
  return os.str();
}

}  // namespace trihered
