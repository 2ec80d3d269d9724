#include "trihered/homext.hpp"

#include <string>
#include <unordered_map>

namespace trihered {

using linalg::Elem;

HomExtPresentation::HomExtPresentation(Representation source, Representation target)
    : source_(std::move(source)), target_(std::move(target)) {
  if (!same_quiver(source_.quiver_ptr(), target_.quiver_ptr())) throw Error("Hom/Ext between different quivers");
  const Quiver& q = source_.quiver();
  std::size_t n_in = 0;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    vertex_offsets_.push_back(n_in);
    n_in += target_.dim(v) * source_.dim(v);
  }
  std::size_t n_out = 0;
  for (const auto& a : q.arrows()) {
    arrow_offsets_.push_back(n_out);
    n_out += target_.dim(a.target) * source_.dim(a.source);
  }
  phi_ = Matrix(n_out, n_in);
  for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
    const auto& a = q.arrow(ai);
    const std::size_t ys = target_.dim(a.source);
    const std::size_t yt = target_.dim(a.target);
    const std::size_t xs = source_.dim(a.source);
    const std::size_t xt = source_.dim(a.target);
    const Matrix& xa = source_.mat(ai);
    const Matrix& ya = target_.mat(ai);
    for (std::size_t r = 0; r < yt; ++r) {
      for (std::size_t c = 0; c < xs; ++c) {
        const std::size_t row = arrow_offsets_[ai] + r * xs + c;
        // + phi_t X_a
        for (std::size_t k = 0; k < xt; ++k) {
          auto& e = phi_(row, vertex_offsets_[a.target] + r * xt + k);
          e = linalg::add(e, xa(k, c));
        }
        // - Y_a phi_s
        for (std::size_t k = 0; k < ys; ++k) {
          auto& e = phi_(row, vertex_offsets_[a.source] + k * xs + c);
          e = linalg::sub(e, ya(r, k));
        }
      }
    }
  }
  hom_basis_ = linalg::kernel_basis(phi_);
  hom_left_inverse_ = hom_basis_.cols() == 0 ? Matrix(0, n_in) : linalg::left_inverse(hom_basis_);
  ext_chart_ = linalg::QuotientChart(phi_, n_out);
}

Matrix HomExtPresentation::flatten_vertex(const std::vector<Matrix>& comps) const {
  return Matrix::vstack([&] {
    std::vector<Matrix> parts;
    for (const auto& m : comps) parts.push_back(m.vec());
    return parts;
  }(), 1);
}

Matrix HomExtPresentation::flatten_arrow(const std::vector<Matrix>& raw) const {
  const Quiver& q = source_.quiver();
  std::vector<Matrix> parts;
  for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
    const auto& a = q.arrow(ai);
    if (raw.at(ai).rows() != target_.dim(a.target) || raw.at(ai).cols() != source_.dim(a.source)) {
      throw Error("ext cocycle for arrow '" + a.label + "' has the wrong shape");
    }
    parts.push_back(raw[ai].vec());
  }
  return Matrix::vstack(parts, 1);
}

std::vector<Matrix> HomExtPresentation::unflatten_arrow(const Matrix& flat) const {
  const Quiver& q = source_.quiver();
  std::vector<Matrix> raw;
  for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
    const auto& a = q.arrow(ai);
    const std::size_t r = target_.dim(a.target);
    const std::size_t c = source_.dim(a.source);
    raw.push_back(Matrix::unvec(flat.block(arrow_offsets_[ai], 0, r * c, 1), r, c));
  }
  return raw;
}

RepMorphism HomExtPresentation::hom_from_coords(const Matrix& coords) const {
  const Matrix flat = hom_basis_ * coords;
  const Quiver& q = source_.quiver();
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    const std::size_t r = target_.dim(v);
    const std::size_t c = source_.dim(v);
    comps.push_back(Matrix::unvec(flat.block(vertex_offsets_[v], 0, r * c, 1), r, c));
  }
  return RepMorphism::unchecked(source_, target_, std::move(comps));
}

RepMorphism HomExtPresentation::hom_element(std::size_t j) const {
  Matrix c(hom_dim(), 1);
  c(j, 0) = 1;
  return hom_from_coords(c);
}

std::vector<RepMorphism> HomExtPresentation::hom_basis() const {
  std::vector<RepMorphism> out;
  for (std::size_t j = 0; j < hom_dim(); ++j) out.push_back(hom_element(j));
  return out;
}

Matrix HomExtPresentation::hom_coords(const RepMorphism& f) const {
  return hom_left_inverse_ * flatten_vertex(f.components());
}

Matrix HomExtPresentation::ext_coords(const std::vector<Matrix>& raw) const {
  return ext_chart_.project(flatten_arrow(raw));
}

std::vector<Matrix> HomExtPresentation::ext_raw(const Matrix& coords) const {
  if (coords.rows() != ext_dim()) throw Error("ext coordinates have the wrong length");
  return unflatten_arrow(ext_chart_.lift(coords));
}

std::shared_ptr<const HomExtPresentation> hom_ext(const Representation& x, const Representation& y) {
  thread_local std::unordered_map<std::string, std::shared_ptr<const HomExtPresentation>> cache;
  if (!same_quiver(x.quiver_ptr(), y.quiver_ptr())) throw Error("Hom/Ext between different quivers");
  std::string key = std::to_string(linalg::prime());
  key += '#';
  for (const auto& a : x.quiver().arrows()) {
    key += std::to_string(a.source) + ">" + std::to_string(a.target) + ",";
  }
  key += '#' + x.key() + '#' + y.key();
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  if (cache.size() > 20000) cache.clear();
  auto p = std::make_shared<const HomExtPresentation>(x, y);
  cache.emplace(std::move(key), p);
  return p;
}

std::size_t dim_hom(const Representation& x, const Representation& y) { return hom_ext(x, y)->hom_dim(); }
std::size_t dim_ext(const Representation& x, const Representation& y) { return hom_ext(x, y)->ext_dim(); }

// ---------------------------------------------------------------------------

ExtClass ExtClass::zero(const Representation& quotient, const Representation& sub) {
  return {quotient, sub, Matrix(dim_ext(quotient, sub), 1)};
}

ExtClass ExtClass::from_raw(const Representation& quotient, const Representation& sub,
                            const std::vector<Matrix>& raw) {
  return {quotient, sub, hom_ext(quotient, sub)->ext_coords(raw)};
}

std::vector<Matrix> ExtClass::raw() const { return hom_ext(quotient, sub)->ext_raw(coords); }

ExtClass ExtClass::scaled(Elem s) const { return {quotient, sub, coords.scaled(s)}; }

ExtClass operator+(const ExtClass& a, const ExtClass& b) {
  if (!(a.quotient == b.quotient) || !(a.sub == b.sub)) throw Error("adding extension classes of different Ext groups");
  return {a.quotient, a.sub, a.coords + b.coords};
}

ExtClass operator-(const ExtClass& a) { return {a.quotient, a.sub, -a.coords}; }

void ShortExact::validate() const {
  if (!(inclusion.target() == projection.source())) throw Error("short exact sequence: maps are not composable");
  const Quiver& q = sub().quiver();
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    const Matrix& i = inclusion.component(v);
    const Matrix& p = projection.component(v);
    if (linalg::rank(i) != i.cols()) throw Error("short exact sequence: inclusion not injective at vertex " + std::to_string(v + 1));
    if (linalg::rank(p) != p.rows()) throw Error("short exact sequence: projection not surjective at vertex " + std::to_string(v + 1));
    if (!(p * i).is_zero()) throw Error("short exact sequence: projection o inclusion != 0");
    if (middle().dim(v) != sub().dim(v) + quotient().dim(v)) throw Error("short exact sequence: not exact in the middle");
  }
}

ShortExact extension_middle(const ExtClass& e) {
  const Representation& a = e.quotient;
  const Representation& b = e.sub;
  const Quiver& q = a.quiver();
  const auto raw = e.raw();
  DimVector dims;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) dims.push_back(b.dim(v) + a.dim(v));
  std::vector<Matrix> mats;
  for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
    const auto& ar = q.arrow(ai);
    Matrix m(dims[ar.target], dims[ar.source]);
    m.set_block(0, 0, b.mat(ai));
    m.set_block(0, b.dim(ar.source), raw[ai]);
    m.set_block(b.dim(ar.target), b.dim(ar.source), a.mat(ai));
    mats.push_back(std::move(m));
  }
  Representation mid(a.quiver_ptr(), dims, std::move(mats));
  std::vector<Matrix> inc;
  std::vector<Matrix> proj;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    Matrix i(dims[v], b.dim(v));
    for (std::size_t k = 0; k < b.dim(v); ++k) i(k, k) = 1;
    Matrix p(a.dim(v), dims[v]);
    for (std::size_t k = 0; k < a.dim(v); ++k) p(k, b.dim(v) + k) = 1;
    inc.push_back(std::move(i));
    proj.push_back(std::move(p));
  }
  return {RepMorphism::unchecked(b, mid, std::move(inc)), RepMorphism::unchecked(mid, a, std::move(proj))};
}

ExtClass ses_class(const ShortExact& s) {
  s.validate();
  const Quiver& q = s.sub().quiver();
  // Vertexwise splitting: section sec_v of the projection, retraction ret_v of the
  // inclusion with ret_v sec_v = 0. The cocycle is e_a = ret_t E_a sec_s.
  std::vector<Matrix> sec;
  std::vector<Matrix> ret;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    const Matrix& p = s.projection.component(v);
    auto sv = linalg::solve(p, Matrix::identity(p.rows()));
    if (!sv) throw Error("short exact sequence: projection has no section");
    const Matrix t = Matrix::hstack({s.inclusion.component(v), *sv}, s.middle().dim(v));
    const auto tinv = linalg::inverse(t);
    if (!tinv) throw Error("short exact sequence: not exact in the middle at vertex " + std::to_string(v + 1));
    ret.push_back(tinv->block(0, 0, s.sub().dim(v), s.middle().dim(v)));
    sec.push_back(std::move(*sv));
  }
  std::vector<Matrix> raw;
  for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
    const auto& a = q.arrow(ai);
    raw.push_back(ret[a.target] * s.middle().mat(ai) * sec[a.source]);
  }
  return ExtClass::from_raw(s.quotient(), s.sub(), raw);
}

ExtClass transport_ext(const ExtClass& e, const std::optional<RepMorphism>& pre,
                       const std::optional<RepMorphism>& post) {
  if (pre && !(pre->target() == e.quotient)) throw Error("transport_ext: pull-back map does not end at the quotient");
  if (post && !(post->source() == e.sub)) throw Error("transport_ext: push-out map does not start at the sub");
  const Quiver& q = e.quotient.quiver();
  auto raw = e.raw();
  for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
    const auto& a = q.arrow(ai);
    if (pre) raw[ai] = raw[ai] * pre->component(a.source);
    if (post) raw[ai] = post->component(a.target) * raw[ai];
  }
  return ExtClass::from_raw(pre ? pre->source() : e.quotient, post ? post->target() : e.sub, raw);
}

Factorization factorize(const RepMorphism& f) {
  const Quiver& q = f.source().quiver();
  std::vector<Matrix> ker;
  std::vector<Matrix> img;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    ker.push_back(linalg::kernel_basis(f.component(v)));
    img.push_back(linalg::column_space_basis(f.component(v)));
  }
  auto [k, kinc] = sub_representation(f.source(), ker);
  auto [i, iinc] = sub_representation(f.target(), img);
  std::vector<Matrix> co;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    co.push_back(img[v].cols() == 0 ? Matrix(0, f.source().dim(v)) : linalg::left_inverse(img[v]) * f.component(v));
  }
  auto coimage = RepMorphism::unchecked(f.source(), i, std::move(co));
  auto [c, cproj] = quotient_representation(f.target(), img);
  return {std::move(kinc), std::move(coimage), std::move(iinc), std::move(cproj)};
}

}  // namespace trihered
