#include "trihered/complexes.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace trihered {

namespace {

std::set<int> degree_range(const Complex& a, const Complex& b, int widen_lo = 0, int widen_hi = 0) {
  std::set<int> out;
  for (const Complex* c : {&a, &b}) {
    if (c->is_zero()) continue;
    for (int n = c->min_degree() - widen_lo; n <= c->max_degree() + widen_hi; ++n) out.insert(n);
  }
  return out;
}

Matrix random_coords(std::size_t n, std::mt19937_64& rng) {
  Matrix m(n, 1);
  for (auto& x : m.data()) x = static_cast<linalg::Elem>(rng() % linalg::prime());
  return m;
}

// Graded Hom space (+)_n Hom(X^n, Y^{n+offset}) in concatenated hom coordinates.
class GradedHom {
 public:
  GradedHom(const Complex& x, const Complex& y, int offset) {
    for (const auto& [n, xn] : x.terms()) {
      if (!y.has(n + offset)) continue;
      auto p = hom_ext(xn, y.term(n + offset));
      blocks_.push_back({n, dim_, p});
      dim_ += p->hom_dim();
    }
  }

  [[nodiscard]] std::size_t dim() const { return dim_; }

  [[nodiscard]] Matrix coords(const std::map<int, RepMorphism>& parts) const {
    Matrix c(dim_, 1);
    for (const auto& b : blocks_) {
      auto it = parts.find(b.degree);
      if (it != parts.end()) c.set_block(b.offset, 0, b.pres->hom_coords(it->second));
    }
    return c;
  }

  [[nodiscard]] std::map<int, RepMorphism> parts(const Matrix& c) const {
    std::map<int, RepMorphism> out;
    for (const auto& b : blocks_) out.emplace(b.degree, b.pres->hom_from_coords(c.block(b.offset, 0, b.pres->hom_dim(), 1)));
    return out;
  }

  /// Calls fn(degree, basis morphism, column index) for every basis vector.
  template <class Fn>
  void for_each_basis(Fn fn) const {
    for (const auto& b : blocks_) {
      for (std::size_t j = 0; j < b.pres->hom_dim(); ++j) fn(b.degree, b.pres->hom_element(j), b.offset + j);
    }
  }

 private:
  struct Block {
    int degree;
    std::size_t offset;
    std::shared_ptr<const HomExtPresentation> pres;
  };
  std::vector<Block> blocks_;
  std::size_t dim_ = 0;
};

// Adds coordinates of a morphism x^n -> y^{n+offset} into column `col`.
void accumulate(Matrix& m, std::size_t col, const GradedHom& space, int degree, const RepMorphism& f) {
  const Matrix c = space.coords({{degree, f}});
  for (std::size_t r = 0; r < c.rows(); ++r) m(r, col) = linalg::add(m(r, col), c(r, 0));
}

// Constraint matrix whose kernel is the chain maps x -> y, in GradedHom(x, y, 0) coordinates.
Matrix chain_constraints(const Complex& x, const Complex& y, const GradedHom& u) {
  const GradedHom w(x, y, 1);
  Matrix m(w.dim(), u.dim());
  u.for_each_basis([&](int n, const RepMorphism& phi, std::size_t col) {
    // (d phi - phi d) lands in Hom(x^n, y^{n+1}) and Hom(x^{n-1}, y^n).
    if (y.has(n + 1)) accumulate(m, col, w, n, compose(y.diff(n), phi));
    if (x.has(n - 1)) accumulate(m, col, w, n - 1, -compose(phi, x.diff(n - 1)));
  });
  return m;
}

struct HomotopyData {
  Matrix cycles;  // chain maps, columns in u coordinates
  linalg::QuotientChart chart;
};

HomotopyData homotopy_data(const Complex& x, const Complex& y, const GradedHom& u) {
  const Matrix z = linalg::kernel_basis(chain_constraints(x, y, u));
  const GradedHom s(x, y, -1);
  Matrix b(u.dim(), s.dim());
  s.for_each_basis([&](int n, const RepMorphism& h, std::size_t col) {
    // d h + h d: components in degree n (d_Y^{n-1} h) and degree n-1 (h d_X^{n-1}).
    if (y.has(n - 1)) accumulate(b, col, u, n, compose(y.diff(n - 1), h));
    if (x.has(n - 1)) accumulate(b, col, u, n - 1, compose(h, x.diff(n - 1)));
  });
  Matrix bz(z.cols(), 0);
  if (b.cols() > 0) {
    auto sol = linalg::solve(z, b);
    if (!sol) throw Error("null-homotopic map is not a chain map");
    bz = *sol;
  }
  return {z, linalg::QuotientChart(bz, z.cols())};
}

}  // namespace

// ---------------------------------------------------------------------------

Complex::Complex(QuiverPtr quiver, std::map<int, Representation> terms, std::map<int, RepMorphism> diffs)
    : quiver_(std::move(quiver)) {
  if (!quiver_) throw Error("complex without a quiver");
  for (auto& [n, x] : terms) {
    if (x.is_zero()) continue;
    if (!same_quiver(x.quiver_ptr(), quiver_)) throw Error("complex terms over different quivers");
    terms_.emplace(n, std::move(x));
  }
  for (auto& [n, d] : diffs) {
    if (!(d.source() == term(n)) || !(d.target() == term(n + 1))) {
      throw Error("complex: differential in degree " + std::to_string(n) + " has wrong endpoints");
    }
    if (has(n) && has(n + 1)) diffs_.emplace(n, std::move(d));
  }
  for (const auto& [n, d] : diffs_) {
    auto it = diffs_.find(n + 1);
    if (it != diffs_.end() && !compose(it->second, d).is_zero()) {
      throw Error("complex: d o d != 0 at degree " + std::to_string(n));
    }
  }
}

Complex Complex::stalk(const Representation& x, int degree) { return {x.quiver_ptr(), {{degree, x}}, {}}; }

Representation Complex::term(int n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? Representation::zero(quiver_) : it->second;
}

RepMorphism Complex::diff(int n) const {
  auto it = diffs_.find(n);
  return it == diffs_.end() ? RepMorphism::zero(term(n), term(n + 1)) : it->second;
}

int Complex::min_degree() const {
  if (terms_.empty()) throw Error("degree range of the zero complex");
  return terms_.begin()->first;
}

int Complex::max_degree() const {
  if (terms_.empty()) throw Error("degree range of the zero complex");
  return terms_.rbegin()->first;
}

Complex Complex::shift(int k) const {
  std::map<int, Representation> terms;
  std::map<int, RepMorphism> diffs;
  for (const auto& [n, x] : terms_) terms.emplace(n - k, x);
  for (const auto& [n, d] : diffs_) diffs.emplace(n - k, k % 2 == 0 ? d : -d);
  return {quiver_, std::move(terms), std::move(diffs)};
}

// ---------------------------------------------------------------------------

ChainMap ChainMap::unchecked(Complex source, Complex target, std::map<int, RepMorphism> comps) {
  ChainMap m;
  m.source_ = std::move(source);
  m.target_ = std::move(target);
  for (auto& [n, f] : comps) {
    if (!(f.source() == m.source_.term(n)) || !(f.target() == m.target_.term(n))) {
      throw Error("chain map: component in degree " + std::to_string(n) + " has wrong endpoints");
    }
  }
  for (const auto& [n, x] : m.source_.terms()) {
    if (!m.target_.has(n)) continue;
    auto it = comps.find(n);
    m.comps_.emplace(n, it != comps.end() ? std::move(it->second) : RepMorphism::zero(x, m.target_.term(n)));
  }
  return m;
}

ChainMap::ChainMap(Complex source, Complex target, std::map<int, RepMorphism> comps) {
  *this = unchecked(std::move(source), std::move(target), std::move(comps));
  for (int n : degree_range(source_, target_, 1, 0)) {
    if (!(compose(component(n + 1), source_.diff(n)) == compose(target_.diff(n), component(n)))) {
      throw Error("chain map does not commute with the differentials at degree " + std::to_string(n));
    }
  }
}

ChainMap ChainMap::zero(const Complex& source, const Complex& target) { return unchecked(source, target, {}); }

ChainMap ChainMap::identity(const Complex& x) {
  std::map<int, RepMorphism> comps;
  for (const auto& [n, t] : x.terms()) comps.emplace(n, RepMorphism::identity(t));
  return unchecked(x, x, std::move(comps));
}

ChainMap ChainMap::stalk(const RepMorphism& f, int degree) {
  return unchecked(Complex::stalk(f.source(), degree), Complex::stalk(f.target(), degree), {{degree, f}});
}

RepMorphism ChainMap::component(int n) const {
  auto it = comps_.find(n);
  return it != comps_.end() ? it->second : RepMorphism::zero(source_.term(n), target_.term(n));
}

ChainMap ChainMap::shift(int k) const {
  std::map<int, RepMorphism> comps;
  for (const auto& [n, f] : comps_) comps.emplace(n - k, f);
  return unchecked(source_.shift(k), target_.shift(k), std::move(comps));
}

ChainMap ChainMap::scaled(linalg::Elem s) const {
  ChainMap out = *this;
  for (auto& [_, f] : out.comps_) f = f.scaled(s);
  return out;
}

bool ChainMap::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

bool operator==(const Complex& a, const Complex& b) {
  if (a.terms_ != b.terms_) return false;
  for (const auto& [n, t] : a.terms_) {
    if (!(a.diff(n) == b.diff(n))) return false;
  }
  return true;
}

bool operator==(const ChainMap& a, const ChainMap& b) {
  if (!(a.source_ == b.source_) || !(a.target_ == b.target_)) return false;
  for (const auto& [n, t] : a.source_.terms()) {
    if (!(a.component(n) == b.component(n))) return false;
  }
  return true;
}

ChainMap operator+(const ChainMap& a, const ChainMap& b) {
  if (!(a.source_ == b.source_) || !(a.target_ == b.target_)) throw Error("adding chain maps with different endpoints");
  ChainMap out = a;
  for (auto& [n, f] : out.comps_) f = f + b.comps_.at(n);
  return out;
}

ChainMap operator-(const ChainMap& a) {
  ChainMap out = a;
  for (auto& [_, f] : out.comps_) f = -f;
  return out;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  if (!(f.target() == g.source())) throw Error("chain map composition: endpoint mismatch");
  std::map<int, RepMorphism> comps;
  for (const auto& [n, _] : f.source().terms()) {
    if (g.target().has(n)) comps.emplace(n, compose(g.component(n), f.component(n)));
  }
  return ChainMap::unchecked(f.source(), g.target(), std::move(comps));
}

// ---------------------------------------------------------------------------

CohomologyData cohomology_data(const Complex& c, int n) {
  const Representation x = c.term(n);
  const RepMorphism d = c.diff(n);
  const RepMorphism dprev = c.diff(n - 1);
  const std::size_t nv = c.quiver_ptr()->vertex_count();
  std::vector<Matrix> kernels;
  std::vector<Matrix> bounds;
  for (std::size_t v = 0; v < nv; ++v) {
    kernels.push_back(linalg::kernel_basis(d.component(v)));
    const Matrix img = linalg::column_space_basis(dprev.component(v));
    bounds.push_back(linalg::left_inverse(kernels.back()) * img);
  }
  auto [z, zinc] = sub_representation(x, kernels);
  auto [b, binc] = sub_representation(z, bounds);
  auto [h, proj] = quotient_representation(z, bounds);
  std::vector<Matrix> lifts;
  for (std::size_t v = 0; v < nv; ++v) lifts.push_back(linalg::QuotientChart(bounds[v], z.dim(v)).lift_matrix());
  return {zinc, binc, proj, std::move(lifts)};
}

Representation cohomology(const Complex& c, int n) { return cohomology_data(c, n).cohomology(); }

RepMorphism induced_map(const ChainMap& f, int n) {
  const CohomologyData dx = cohomology_data(f.source(), n);
  const CohomologyData dy = cohomology_data(f.target(), n);
  const RepMorphism fn = f.component(n);
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < f.source().quiver_ptr()->vertex_count(); ++v) {
    const Matrix into_zy = linalg::left_inverse(dy.cycle_inclusion.component(v));
    comps.push_back(dy.to_cohomology.component(v) * into_zy * fn.component(v) * dx.cycle_inclusion.component(v) *
                    dx.lift[v]);
  }
  return {dx.cohomology(), dy.cohomology(), std::move(comps)};
}

bool is_quasi_isomorphism(const ChainMap& f) {
  for (int n : degree_range(f.source(), f.target())) {
    if (!induced_map(f, n).is_iso()) return false;
  }
  return true;
}

bool is_acyclic(const Complex& c) {
  if (c.is_zero()) return true;
  for (int n = c.min_degree(); n <= c.max_degree(); ++n) {
    if (!cohomology(c, n).is_zero()) return false;
  }
  return true;
}

Complex direct_sum(const Complex& a, const Complex& b) {
  const QuiverPtr& q = a.quiver_ptr();
  std::set<int> degrees = degree_range(a, b);
  if (degrees.empty()) return Complex(q);
  std::map<int, DirectSum> sums;
  for (int n = *degrees.begin(); n <= *degrees.rbegin() + 1; ++n) sums.emplace(n, direct_sum({a.term(n), b.term(n)}, q));
  std::map<int, Representation> terms;
  std::map<int, RepMorphism> diffs;
  for (int n = *degrees.begin(); n <= *degrees.rbegin(); ++n) {
    terms.emplace(n, sums.at(n).sum);
    diffs.emplace(n, block_morphism(sums.at(n), sums.at(n + 1), {{a.diff(n), std::nullopt}, {std::nullopt, b.diff(n)}}));
  }
  return {q, std::move(terms), std::move(diffs)};
}

ChainMap direct_sum(const ChainMap& f, const ChainMap& g) {
  const Complex s = direct_sum(f.source(), g.source());
  const Complex t = direct_sum(f.target(), g.target());
  const QuiverPtr& q = s.quiver_ptr();
  std::map<int, RepMorphism> comps;
  for (const auto& [n, _] : s.terms()) {
    if (!t.has(n)) continue;
    const DirectSum a = direct_sum({f.source().term(n), g.source().term(n)}, q);
    const DirectSum b = direct_sum({f.target().term(n), g.target().term(n)}, q);
    comps.emplace(n, block_morphism(a, b, {{f.component(n), std::nullopt}, {std::nullopt, g.component(n)}}));
  }
  return {s, t, std::move(comps)};
}

MappingCone mapping_cone(const ChainMap& f) {
  const Complex& x = f.source();
  const Complex& y = f.target();
  const QuiverPtr& q = x.quiver_ptr();
  const Complex x1 = x.shift(1);
  std::set<int> degrees = degree_range(x1, y);
  if (degrees.empty()) {
    const Complex zero(q);
    return {zero, ChainMap::zero(y, zero), ChainMap::zero(zero, x1)};
  }
  std::map<int, DirectSum> sums;
  const int lo = *degrees.begin();
  const int hi = *degrees.rbegin();
  for (int n = lo; n <= hi + 1; ++n) sums.emplace(n, direct_sum({x.term(n + 1), y.term(n)}, q));
  std::map<int, Representation> terms;
  std::map<int, RepMorphism> diffs;
  std::map<int, RepMorphism> g;
  std::map<int, RepMorphism> h;
  for (int n = lo; n <= hi; ++n) {
    const DirectSum& s = sums.at(n);
    const DirectSum& t = sums.at(n + 1);
    terms.emplace(n, s.sum);
    diffs.emplace(n, block_morphism(s, t, {{-x.diff(n + 1), std::nullopt}, {f.component(n + 1), y.diff(n)}}));
    g.emplace(n, s.inclusions[1]);
    h.emplace(n, s.projections[0]);
  }
  Complex cone(q, std::move(terms), std::move(diffs));
  return {cone, ChainMap(y, cone, std::move(g)), ChainMap(cone, x1, std::move(h))};
}

// ---------------------------------------------------------------------------
// Standard resolution 0 -> S1(X) -> S0(X) -> X -> 0.

namespace {

std::size_t path_position(const Quiver& q, std::size_t from, std::size_t to, const std::vector<std::size_t>& path) {
  const auto& ps = q.paths(from, to);
  auto it = std::find(ps.begin(), ps.end(), path);
  if (it == ps.end()) throw Error("internal: path not found");
  return static_cast<std::size_t>(it - ps.begin());
}

// Block layout of S0 (blocks indexed by vertices i) or S1 (blocks indexed by arrows a):
// at vertex j, block b has path_count(root(b), j) * dim X_{label(b)} coordinates.
struct Layout {
  std::vector<std::size_t> root;   // paths start here
  std::vector<std::size_t> label;  // tensor factor X_label
  std::vector<std::vector<std::size_t>> offset;  // [vertex][block]
  DimVector dims;
};

Layout layout(const Representation& x, bool s1) {
  const Quiver& q = x.quiver();
  Layout l;
  if (s1) {
    for (const auto& a : q.arrows()) {
      l.root.push_back(a.target);
      l.label.push_back(a.source);
    }
  } else {
    for (std::size_t i = 0; i < q.vertex_count(); ++i) {
      l.root.push_back(i);
      l.label.push_back(i);
    }
  }
  l.offset.assign(q.vertex_count(), {});
  l.dims.assign(q.vertex_count(), 0);
  for (std::size_t j = 0; j < q.vertex_count(); ++j) {
    for (std::size_t b = 0; b < l.root.size(); ++b) {
      l.offset[j].push_back(l.dims[j]);
      l.dims[j] += q.path_count(l.root[b], j) * x.dim(l.label[b]);
    }
  }
  return l;
}

Representation standard_term(const Representation& x, bool s1) {
  const Quiver& q = x.quiver();
  const Layout l = layout(x, s1);
  std::vector<Matrix> mats;
  for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
    const auto& arrow = q.arrow(ai);
    Matrix m(l.dims[arrow.target], l.dims[arrow.source]);
    for (std::size_t b = 0; b < l.root.size(); ++b) {
      const std::size_t dx = x.dim(l.label[b]);
      const auto& ps = q.paths(l.root[b], arrow.source);
      for (std::size_t p = 0; p < ps.size(); ++p) {
        auto ext = ps[p];
        ext.push_back(ai);
        const std::size_t p2 = path_position(q, l.root[b], arrow.target, ext);
        for (std::size_t e = 0; e < dx; ++e) {
          m(l.offset[arrow.target][b] + p2 * dx + e, l.offset[arrow.source][b] + p * dx + e) = 1;
        }
      }
    }
    mats.push_back(std::move(m));
  }
  return {x.quiver_ptr(), l.dims, std::move(mats)};
}

RepMorphism standard_map(const RepMorphism& f, bool s1) {
  const Representation& x = f.source();
  const Representation& y = f.target();
  const Quiver& q = x.quiver();
  const Layout lx = layout(x, s1);
  const Layout ly = layout(y, s1);
  std::vector<Matrix> comps;
  for (std::size_t j = 0; j < q.vertex_count(); ++j) {
    Matrix m(ly.dims[j], lx.dims[j]);
    for (std::size_t b = 0; b < lx.root.size(); ++b) {
      const std::size_t np = q.path_count(lx.root[b], j);
      const Matrix& fc = f.component(lx.label[b]);
      for (std::size_t p = 0; p < np; ++p) {
        m.set_block(ly.offset[j][b] + p * fc.rows(), lx.offset[j][b] + p * fc.cols(), fc);
      }
    }
    comps.push_back(std::move(m));
  }
  return RepMorphism::unchecked(standard_term(x, s1), standard_term(y, s1), std::move(comps));
}

// (a, p, e) |-> (a p, e) - (p, X_a e)
RepMorphism standard_boundary(const Representation& x) {
  const Quiver& q = x.quiver();
  const Layout l1 = layout(x, true);
  const Layout l0 = layout(x, false);
  std::vector<Matrix> comps;
  for (std::size_t j = 0; j < q.vertex_count(); ++j) {
    Matrix m(l0.dims[j], l1.dims[j]);
    for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
      const auto& arrow = q.arrow(ai);
      const std::size_t ds = x.dim(arrow.source);
      const std::size_t dt = x.dim(arrow.target);
      const auto& ps = q.paths(arrow.target, j);
      for (std::size_t p = 0; p < ps.size(); ++p) {
        std::vector<std::size_t> ap{ai};
        ap.insert(ap.end(), ps[p].begin(), ps[p].end());
        const std::size_t pos = path_position(q, arrow.source, j, ap);
        for (std::size_t e = 0; e < ds; ++e) {
          const std::size_t col = l1.offset[j][ai] + p * ds + e;
          m(l0.offset[j][arrow.source] + pos * ds + e, col) = 1;
          for (std::size_t r = 0; r < dt; ++r) {
            auto& cell = m(l0.offset[j][arrow.target] + p * dt + r, col);
            cell = linalg::sub(cell, x.mat(ai)(r, e));
          }
        }
      }
    }
    comps.push_back(std::move(m));
  }
  return RepMorphism::unchecked(standard_term(x, true), standard_term(x, false), std::move(comps));
}

// (p, e) |-> X_p e
RepMorphism standard_augmentation(const Representation& x) {
  const Quiver& q = x.quiver();
  const Layout l0 = layout(x, false);
  std::vector<Matrix> comps;
  for (std::size_t j = 0; j < q.vertex_count(); ++j) {
    Matrix m(x.dim(j), l0.dims[j]);
    for (std::size_t i = 0; i < q.vertex_count(); ++i) {
      const auto& ps = q.paths(i, j);
      for (std::size_t p = 0; p < ps.size(); ++p) m.set_block(0, l0.offset[j][i] + p * x.dim(i), x.path_matrix(ps[p], i));
    }
    comps.push_back(std::move(m));
  }
  return RepMorphism::unchecked(standard_term(x, false), x, std::move(comps));
}

// Tot^n = S0(X^n) (+) S1(X^{n+1})
struct Total {
  Complex complex;
  std::map<int, DirectSum> sums;
};

Total total_complex(const Complex& c) {
  const QuiverPtr& q = c.quiver_ptr();
  Total out{Complex(q), {}};
  if (c.is_zero()) return out;
  const int lo = c.min_degree() - 1;
  const int hi = c.max_degree();
  for (int n = lo; n <= hi + 1; ++n) {
    out.sums.emplace(n, direct_sum({standard_term(c.term(n), false), standard_term(c.term(n + 1), true)}, q));
  }
  std::map<int, Representation> terms;
  std::map<int, RepMorphism> diffs;
  for (int n = lo; n <= hi; ++n) {
    const DirectSum& s = out.sums.at(n);
    const DirectSum& t = out.sums.at(n + 1);
    RepMorphism bd = standard_boundary(c.term(n + 1));
    if (n % 2 != 0) bd = -bd;
    terms.emplace(n, s.sum);
    diffs.emplace(n, block_morphism(s, t, {{standard_map(c.diff(n), false), bd},
                                           {std::nullopt, standard_map(c.diff(n + 1), true)}}));
  }
  out.complex = Complex(q, std::move(terms), std::move(diffs));
  return out;
}

}  // namespace

Replacement standard_replacement(const Complex& c) {
  Total t = total_complex(c);
  std::map<int, RepMorphism> comps;
  for (const auto& [n, s] : t.sums) {
    if (t.complex.has(n) && c.has(n)) comps.emplace(n, compose(standard_augmentation(c.term(n)), s.projections[0]));
  }
  return {t.complex, ChainMap(t.complex, c, std::move(comps))};
}

ChainMap standard_replacement(const ChainMap& f) {
  const Total tx = total_complex(f.source());
  const Total ty = total_complex(f.target());
  std::map<int, RepMorphism> comps;
  for (const auto& [n, s] : tx.sums) {
    auto it = ty.sums.find(n);
    if (it == ty.sums.end() || !tx.complex.has(n) || !ty.complex.has(n)) continue;
    comps.emplace(n, block_morphism(s, it->second, {{standard_map(f.component(n), false), std::nullopt},
                                                    {std::nullopt, standard_map(f.component(n + 1), true)}}));
  }
  return ChainMap(tx.complex, ty.complex, std::move(comps));
}

Replacement projective_replacement(const Complex& c) {
  const bool projective =
      std::all_of(c.terms().begin(), c.terms().end(), [](const auto& kv) { return kv.second.is_projective(); });
  if (projective) return {c, ChainMap::identity(c)};
  return standard_replacement(c);
}

// ---------------------------------------------------------------------------

std::vector<ChainMap> chain_map_basis(const Complex& x, const Complex& y) {
  const GradedHom u(x, y, 0);
  const Matrix z = linalg::kernel_basis(chain_constraints(x, y, u));
  std::vector<ChainMap> out;
  for (std::size_t j = 0; j < z.cols(); ++j) out.push_back(ChainMap::unchecked(x, y, u.parts(z.col(j))));
  return out;
}

namespace {

void require_projective(const Complex& c) {
  for (const auto& [n, t] : c.terms()) {
    if (!t.is_projective()) throw Error("hom_mod_homotopy: term in degree " + std::to_string(n) + " is not projective");
  }
}

}  // namespace

HomotopyClasses hom_mod_homotopy(const Complex& p, const Complex& q) {
  require_projective(p);
  require_projective(q);
  const GradedHom u(p, q, 0);
  const HomotopyData data = homotopy_data(p, q, u);
  HomotopyClasses out;
  out.dim = data.chart.dim();
  const Matrix reps = data.cycles * data.chart.lift_matrix();
  for (std::size_t j = 0; j < reps.cols(); ++j) out.basis.push_back(ChainMap::unchecked(p, q, u.parts(reps.col(j))));
  return out;
}

Matrix homotopy_class_coords(const ChainMap& f) {
  require_projective(f.source());
  require_projective(f.target());
  const GradedHom u(f.source(), f.target(), 0);
  const HomotopyData data = homotopy_data(f.source(), f.target(), u);
  auto y = linalg::solve(data.cycles, u.coords(f.components()));
  if (!y) throw Error("homotopy_class_coords: not a chain map");
  return data.chart.project(*y);
}

Strictification strictify(const Complex& c) {
  Strictification s{c, FormalObject(c.quiver_ptr()), {}};
  std::map<int, Representation> comps;
  for (const auto& [n, _] : c.terms()) {
    CohomologyData d = cohomology_data(c, n);
    if (d.cohomology().is_zero()) continue;
    comps.emplace(n, d.cohomology());
    s.data.emplace(n, std::move(d));
  }
  s.formal = FormalObject(c.quiver_ptr(), std::move(comps));
  return s;
}

// ---------------------------------------------------------------------------

Representation random_representation(const QuiverPtr& q, std::size_t max_dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  DimVector dims(q->vertex_count());
  for (auto& d : dims) d = rng() % (max_dim + 1);
  std::vector<Matrix> mats;
  for (const auto& a : q->arrows()) {
    Matrix m(dims[a.target], dims[a.source]);
    for (auto& x : m.data()) x = static_cast<linalg::Elem>(rng() % linalg::prime());
    mats.push_back(std::move(m));
  }
  return {q, std::move(dims), std::move(mats)};
}

FormalObject random_formal_object(const QuiverPtr& q, const DegreeWindow& w, std::size_t max_dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::map<int, Representation> comps;
  for (int n = w.lo; n <= w.hi; ++n) comps.emplace(n, random_representation(q, max_dim, rng()));
  return {q, std::move(comps)};
}

FormalMorphism random_formal_morphism(const FormalObject& x, const FormalObject& y, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const HomSpace s(x, y);
  Matrix c(s.dim(), 1);
  for (auto& v : c.data()) v = static_cast<linalg::Elem>(rng() % linalg::prime());
  return s.from_coords(c);
}

FormalMorphism random_automorphism(const FormalObject& x, std::uint64_t seed) {
  const HomSpace s(x, x);
  LinearSolution sol{FormalMorphism::zero(x, x), s.basis()};
  if (auto a = find_invertible(sol, seed)) return *a;
  return FormalMorphism::identity(x);
}

Complex random_complex(const QuiverPtr& q, int lo, int hi, std::size_t max_dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::map<int, Representation> terms;
  for (int n = lo; n <= hi; ++n) terms.emplace(n, random_representation(q, max_dim, rng()));
  std::map<int, RepMorphism> diffs;
  for (int n = lo; n < hi; ++n) {
    const Representation& a = terms.at(n);
    const Representation& b = terms.at(n + 1);
    auto hom = hom_ext(a, b);
    Matrix allowed = Matrix::identity(hom->hom_dim());
    auto prev = diffs.find(n - 1);
    if (prev != diffs.end()) {
      auto h2 = hom_ext(prev->second.source(), b);
      Matrix m(h2->hom_dim(), hom->hom_dim());
      for (std::size_t j = 0; j < hom->hom_dim(); ++j) {
        m.set_block(0, j, h2->hom_coords(compose(hom->hom_element(j), prev->second)));
      }
      allowed = linalg::kernel_basis(m);
    }
    diffs.emplace(n, hom->hom_from_coords(allowed * random_coords(allowed.cols(), rng)));
  }
  return {q, std::move(terms), std::move(diffs)};
}

ChainMap random_chain_map(const Complex& x, const Complex& y, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ChainMap out = ChainMap::zero(x, y);
  for (const auto& b : chain_map_basis(x, y)) out = out + b.scaled(static_cast<linalg::Elem>(rng() % linalg::prime()));
  return out;
}

}  // namespace trihered
