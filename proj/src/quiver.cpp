#include "trihered/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace trihered {

using linalg::Elem;

Quiver::Quiver(std::size_t vertex_count, std::vector<Arrow> arrows)
    : vertices_(vertex_count), arrows_(std::move(arrows)) {
  std::set<std::string> labels;
  for (const auto& a : arrows_) {
    if (a.source >= vertices_ || a.target >= vertices_) {
      throw Error("arrow '" + a.label + "' has an endpoint outside the vertex range");
    }
    if (!labels.insert(a.label).second) throw Error("duplicate arrow label '" + a.label + "'");
  }
  // Kahn's algorithm; a leftover vertex means a directed cycle.
  std::vector<std::size_t> indeg(vertices_, 0);
  for (const auto& a : arrows_) ++indeg[a.target];
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < vertices_; ++v) {
    if (indeg[v] == 0) ready.push_back(v);
  }
  while (!ready.empty()) {
    std::sort(ready.begin(), ready.end(), std::greater<>());
    const std::size_t v = ready.back();
    ready.pop_back();
    topo_.push_back(v);
    for (const auto& a : arrows_) {
      if (a.source == v && --indeg[a.target] == 0) ready.push_back(a.target);
    }
  }
  if (topo_.size() != vertices_) throw Error("directed cycle detected");

  paths_.assign(vertices_, std::vector<std::vector<std::vector<std::size_t>>>(vertices_));
  for (std::size_t i = 0; i < vertices_; ++i) {
    paths_[i][i].push_back({});
    // Extend along the topological order so every prefix is already complete.
    for (std::size_t v : topo_) {
      for (std::size_t ai = 0; ai < arrows_.size(); ++ai) {
        if (arrows_[ai].source != v) continue;
        for (const auto& p : paths_[i][v]) {
          auto q = p;
          q.push_back(ai);
          paths_[i][arrows_[ai].target].push_back(std::move(q));
        }
      }
    }
  }
}

std::optional<std::size_t> Quiver::arrow_index(const std::string& label) const {
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    if (arrows_[a].label == label) return a;
  }
  return std::nullopt;
}

const std::vector<std::vector<std::size_t>>& Quiver::paths(std::size_t from, std::size_t to) const {
  return paths_.at(from).at(to);
}

long Quiver::euler_form(const DimVector& a, const DimVector& b) const {
  long s = 0;
  for (std::size_t i = 0; i < vertices_; ++i) s += static_cast<long>(a[i] * b[i]);
  for (const auto& ar : arrows_) s -= static_cast<long>(a[ar.source] * b[ar.target]);
  return s;
}

bool Quiver::is_dynkin() const {
  const std::size_t n = vertices_;
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 2;
  for (const auto& a : arrows_) {
    m[a.source][a.target] -= 1;
    m[a.target][a.source] -= 1;
  }
  // Fraction-free elimination: the k-th pivot is the k-th leading principal minor.
  long long prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    }
    prev = m[k][k];
  }
  return true;
}

Quiver Quiver::reflected_at(std::size_t k) const {
  std::vector<Arrow> out = arrows_;
  for (auto& a : out) {
    if (a.source == k || a.target == k) std::swap(a.source, a.target);
  }
  return {vertices_, std::move(out)};
}

bool Quiver::is_sink(std::size_t k) const {
  return std::none_of(arrows_.begin(), arrows_.end(), [k](const Arrow& a) { return a.source == k; });
}

bool Quiver::is_source(std::size_t k) const {
  return std::none_of(arrows_.begin(), arrows_.end(), [k](const Arrow& a) { return a.target == k; });
}

QuiverPtr make_quiver(std::size_t vertex_count, std::vector<Arrow> arrows) {
  return std::make_shared<const Quiver>(vertex_count, std::move(arrows));
}

QuiverPtr linear_quiver(std::size_t n) {
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i + 1 < n; ++i) arrows.push_back({"a" + std::to_string(i + 1), i, i + 1});
  return make_quiver(n, std::move(arrows));
}

QuiverPtr d4_quiver() { return make_quiver(4, {{"a", 0, 1}, {"b", 2, 1}, {"c", 3, 1}}); }

bool same_quiver(const QuiverPtr& a, const QuiverPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// ---------------------------------------------------------------------------

Representation::Representation(QuiverPtr quiver, DimVector dims, std::vector<Matrix> mats)
    : quiver_(std::move(quiver)), dims_(std::move(dims)), mats_(std::move(mats)) {
  if (!quiver_) throw Error("representation without a quiver");
  if (dims_.size() != quiver_->vertex_count()) throw Error("representation: wrong number of dimensions");
  if (mats_.size() != quiver_->arrows().size()) throw Error("representation: wrong number of arrow matrices");
  for (std::size_t a = 0; a < mats_.size(); ++a) {
    const auto& ar = quiver_->arrow(a);
    if (mats_[a].rows() != dims_[ar.target] || mats_[a].cols() != dims_[ar.source]) {
      throw Error("representation: matrix for arrow '" + ar.label + "' has shape " +
                  std::to_string(mats_[a].rows()) + "x" + std::to_string(mats_[a].cols()) + ", expected " +
                  std::to_string(dims_[ar.target]) + "x" + std::to_string(dims_[ar.source]));
    }
  }
}

Representation Representation::zero(QuiverPtr quiver) {
  DimVector dims(quiver->vertex_count(), 0);
  std::vector<Matrix> mats(quiver->arrows().size());
  return {std::move(quiver), std::move(dims), std::move(mats)};
}

Representation Representation::simple(QuiverPtr quiver, std::size_t vertex) {
  DimVector dims(quiver->vertex_count(), 0);
  dims.at(vertex) = 1;
  std::vector<Matrix> mats;
  for (const auto& a : quiver->arrows()) mats.emplace_back(dims[a.target], dims[a.source]);
  return {std::move(quiver), std::move(dims), std::move(mats)};
}

Representation Representation::projective(QuiverPtr quiver, std::size_t vertex) {
  const Quiver& q = *quiver;
  DimVector dims(q.vertex_count());
  for (std::size_t j = 0; j < q.vertex_count(); ++j) dims[j] = q.path_count(vertex, j);
  std::vector<Matrix> mats;
  for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
    const auto& a = q.arrow(ai);
    Matrix m(dims[a.target], dims[a.source]);
    const auto& src_paths = q.paths(vertex, a.source);
    const auto& tgt_paths = q.paths(vertex, a.target);
    for (std::size_t c = 0; c < src_paths.size(); ++c) {
      auto ext = src_paths[c];
      ext.push_back(ai);
      const auto it = std::find(tgt_paths.begin(), tgt_paths.end(), ext);
      m(static_cast<std::size_t>(it - tgt_paths.begin()), c) = 1;
    }
    mats.push_back(std::move(m));
  }
  return {std::move(quiver), std::move(dims), std::move(mats)};
}

Representation Representation::injective(QuiverPtr quiver, std::size_t vertex) {
  // Dual of the projective at `vertex` for the opposite quiver: basis of j = paths j -> vertex,
  // arrow a: s -> t sends the path starting a*p (from s) to p (from t).
  const Quiver& q = *quiver;
  DimVector dims(q.vertex_count());
  for (std::size_t j = 0; j < q.vertex_count(); ++j) dims[j] = q.path_count(j, vertex);
  std::vector<Matrix> mats;
  for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
    const auto& a = q.arrow(ai);
    Matrix m(dims[a.target], dims[a.source]);
    const auto& src_paths = q.paths(a.source, vertex);
    const auto& tgt_paths = q.paths(a.target, vertex);
    for (std::size_t c = 0; c < src_paths.size(); ++c) {
      const auto& p = src_paths[c];
      if (p.empty() || p.front() != ai) continue;
      std::vector<std::size_t> rest(p.begin() + 1, p.end());
      const auto it = std::find(tgt_paths.begin(), tgt_paths.end(), rest);
      m(static_cast<std::size_t>(it - tgt_paths.begin()), c) = 1;
    }
    mats.push_back(std::move(m));
  }
  return {std::move(quiver), std::move(dims), std::move(mats)};
}

std::size_t Representation::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }

Matrix Representation::path_matrix(const std::vector<std::size_t>& path, std::size_t from) const {
  Matrix m = Matrix::identity(dims_[from]);
  for (std::size_t a : path) m = mats_[a] * m;
  return m;
}

DimVector Representation::top_dims() const {
  DimVector top(dims_.size());
  for (std::size_t v = 0; v < dims_.size(); ++v) {
    std::vector<Matrix> incoming;
    for (std::size_t a = 0; a < mats_.size(); ++a) {
      if (quiver_->arrow(a).target == v) incoming.push_back(mats_[a]);
    }
    const std::size_t r = incoming.empty() ? 0 : linalg::rank(Matrix::hstack(incoming, dims_[v]));
    top[v] = dims_[v] - r;
  }
  return top;
}

bool Representation::is_projective() const {
  // The projective cover is onto, so X is projective iff the dimensions agree.
  const DimVector top = top_dims();
  for (std::size_t j = 0; j < dims_.size(); ++j) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < dims_.size(); ++i) d += top[i] * quiver_->path_count(i, j);
    if (d != dims_[j]) return false;
  }
  return true;
}

std::string Representation::key() const {
  std::string k;
  k.reserve(16 + total_dim() * 4);
  for (auto d : dims_) {
    k += std::to_string(d);
    k += ',';
  }
  k += '|';
  for (const auto& m : mats_) {
    for (Elem e : m.data()) {
      k += std::to_string(e);
      k += ',';
    }
    k += ';';
  }
  return k;
}

bool operator==(const Representation& a, const Representation& b) {
  return same_quiver(a.quiver_, b.quiver_) && a.dims_ == b.dims_ && a.mats_ == b.mats_;
}

// ---------------------------------------------------------------------------

RepMorphism RepMorphism::unchecked(Representation source, Representation target, std::vector<Matrix> components) {
  RepMorphism m;
  m.source_ = std::move(source);
  m.target_ = std::move(target);
  m.comps_ = std::move(components);
  if (!same_quiver(m.source_.quiver_ptr(), m.target_.quiver_ptr())) throw Error("morphism between different quivers");
  if (m.comps_.size() != m.source_.dims().size()) throw Error("morphism: wrong number of components");
  for (std::size_t v = 0; v < m.comps_.size(); ++v) {
    if (m.comps_[v].rows() != m.target_.dim(v) || m.comps_[v].cols() != m.source_.dim(v)) {
      throw Error("morphism: component at vertex " + std::to_string(v + 1) + " has the wrong shape");
    }
  }
  return m;
}

RepMorphism::RepMorphism(Representation source, Representation target, std::vector<Matrix> components) {
  *this = unchecked(std::move(source), std::move(target), std::move(components));
  const Quiver& q = source_.quiver();
  for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
    const auto& a = q.arrow(ai);
    if (!(comps_[a.target] * source_.mat(ai) == target_.mat(ai) * comps_[a.source])) {
      throw Error("morphism: square for arrow '" + a.label + "' does not commute");
    }
  }
}

RepMorphism RepMorphism::zero(const Representation& source, const Representation& target) {
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < source.dims().size(); ++v) comps.emplace_back(target.dim(v), source.dim(v));
  return unchecked(source, target, std::move(comps));
}

RepMorphism RepMorphism::identity(const Representation& x) {
  std::vector<Matrix> comps;
  for (auto d : x.dims()) comps.push_back(Matrix::identity(d));
  return unchecked(x, x, std::move(comps));
}

bool RepMorphism::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const Matrix& m) { return m.is_zero(); });
}

bool RepMorphism::is_injective() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const Matrix& m) { return linalg::rank(m) == m.cols(); });
}

bool RepMorphism::is_surjective() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const Matrix& m) { return linalg::rank(m) == m.rows(); });
}

std::optional<RepMorphism> RepMorphism::inverse() const {
  std::vector<Matrix> inv;
  for (const auto& m : comps_) {
    auto i = linalg::inverse(m);
    if (!i) return std::nullopt;
    inv.push_back(std::move(*i));
  }
  return unchecked(target_, source_, std::move(inv));
}

RepMorphism RepMorphism::scaled(Elem s) const {
  RepMorphism m = *this;
  for (auto& c : m.comps_) c = c.scaled(s);
  return m;
}

bool operator==(const RepMorphism& a, const RepMorphism& b) {
  return a.source_ == b.source_ && a.target_ == b.target_ && a.comps_ == b.comps_;
}

RepMorphism operator+(const RepMorphism& a, const RepMorphism& b) {
  if (!(a.source_ == b.source_) || !(a.target_ == b.target_)) throw Error("adding morphisms with different endpoints");
  RepMorphism m = a;
  for (std::size_t v = 0; v < m.comps_.size(); ++v) m.comps_[v] = m.comps_[v] + b.comps_[v];
  return m;
}

RepMorphism operator-(const RepMorphism& a, const RepMorphism& b) { return a + (-b); }

RepMorphism operator-(const RepMorphism& a) {
  RepMorphism m = a;
  for (auto& c : m.comps_) c = -c;
  return m;
}

RepMorphism compose(const RepMorphism& g, const RepMorphism& f) {
  if (!(f.target() == g.source())) throw Error("compose: target of f differs from source of g");
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < f.components().size(); ++v) comps.push_back(g.component(v) * f.component(v));
  return RepMorphism::unchecked(f.source(), g.target(), std::move(comps));
}

DirectSum direct_sum(const std::vector<Representation>& parts, const QuiverPtr& quiver) {
  const Quiver& q = *quiver;
  DimVector dims(q.vertex_count(), 0);
  for (const auto& p : parts) {
    for (std::size_t v = 0; v < dims.size(); ++v) dims[v] += p.dim(v);
  }
  std::vector<Matrix> mats;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    std::vector<Matrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.mat(a));
    Matrix m = Matrix::block_diag(blocks);
    mats.push_back(std::move(m));
  }
  DirectSum out{Representation(quiver, dims, std::move(mats)), {}, {}};
  DimVector offset(dims.size(), 0);
  for (const auto& p : parts) {
    std::vector<Matrix> inc;
    std::vector<Matrix> proj;
    for (std::size_t v = 0; v < dims.size(); ++v) {
      Matrix i(dims[v], p.dim(v));
      Matrix pr(p.dim(v), dims[v]);
      for (std::size_t k = 0; k < p.dim(v); ++k) {
        i(offset[v] + k, k) = 1;
        pr(k, offset[v] + k) = 1;
      }
      inc.push_back(std::move(i));
      proj.push_back(std::move(pr));
      offset[v] += p.dim(v);
    }
    out.inclusions.push_back(RepMorphism::unchecked(p, out.sum, std::move(inc)));
    out.projections.push_back(RepMorphism::unchecked(out.sum, p, std::move(proj)));
  }
  return out;
}

Representation direct_sum(const Representation& a, const Representation& b) {
  return direct_sum({a, b}, a.quiver_ptr()).sum;
}

RepMorphism block_morphism(const DirectSum& source, const DirectSum& target,
                           const std::vector<std::vector<std::optional<RepMorphism>>>& blocks) {
  RepMorphism acc = RepMorphism::zero(source.sum, target.sum);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = 0; j < blocks[i].size(); ++j) {
      if (!blocks[i][j]) continue;
      acc = acc + compose(target.inclusions[i], compose(*blocks[i][j], source.projections[j]));
    }
  }
  return acc;
}

std::pair<Representation, RepMorphism> sub_representation(const Representation& x, const std::vector<Matrix>& bases) {
  const Quiver& q = x.quiver();
  DimVector dims;
  std::vector<Matrix> left;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    dims.push_back(bases[v].cols());
    left.push_back(bases[v].cols() == 0 ? Matrix(0, x.dim(v)) : linalg::left_inverse(bases[v]));
  }
  std::vector<Matrix> mats;
  for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
    const auto& a = q.arrow(ai);
    mats.push_back(left[a.target] * x.mat(ai) * bases[a.source]);
  }
  Representation sub(x.quiver_ptr(), dims, std::move(mats));
  auto inc = RepMorphism::unchecked(sub, x, bases);
  return {std::move(sub), std::move(inc)};
}

std::pair<Representation, RepMorphism> quotient_representation(const Representation& x,
                                                               const std::vector<Matrix>& bases) {
  const Quiver& q = x.quiver();
  std::vector<linalg::QuotientChart> charts;
  DimVector dims;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    charts.emplace_back(bases[v], x.dim(v));
    dims.push_back(charts.back().dim());
  }
  std::vector<Matrix> mats;
  for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
    const auto& a = q.arrow(ai);
    mats.push_back(charts[a.target].project(x.mat(ai) * charts[a.source].lift_matrix()));
  }
  Representation quot(x.quiver_ptr(), dims, std::move(mats));
  std::vector<Matrix> proj;
  for (auto& c : charts) proj.push_back(c.projection());
  auto p = RepMorphism::unchecked(x, quot, std::move(proj));
  return {std::move(quot), std::move(p)};
}

}  // namespace trihered
