#include "trihered/decompose.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace trihered {

using linalg::Elem;
using Poly = std::vector<Elem>;

namespace {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m) {
  trim(a);
  const Elem lead_inv = linalg::inv(m.back());
  while (a.size() >= m.size()) {
    const Elem f = linalg::mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = linalg::sub(a[shift + i], linalg::mul(f, m[i]));
    trim(a);
  }
  return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& m) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = linalg::add(r[i + j], linalg::mul(a[i], b[j]));
  }
  return poly_mod(std::move(r), m);
}

Poly poly_pow_mod(Poly base, std::uint64_t e, const Poly& m) {
  Poly r = poly_mod({1}, m);
  base = poly_mod(std::move(base), m);
  while (e != 0) {
    if ((e & 1U) != 0) r = poly_mul_mod(r, base, m);
    base = poly_mul_mod(base, base, m);
    e >>= 1U;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Elem li = linalg::inv(a.back());
    for (auto& c : a) c = linalg::mul(c, li);
  }
  return a;
}

Poly poly_div_exact(Poly a, const Poly& b) {
  trim(a);
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  const Elem li = linalg::inv(b.back());
  while (a.size() >= b.size() && !a.empty()) {
    const Elem f = linalg::mul(a.back(), li);
    const std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = linalg::sub(a[shift + i], linalg::mul(f, b[i]));
    trim(a);
  }
  return q;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = linalg::sub(a[i], b[i]);
  trim(a);
  return a;
}

Elem eval(const Poly& f, Elem x) {
  Elem acc = 0;
  for (std::size_t k = f.size(); k-- > 0;) acc = linalg::add(linalg::mul(acc, x), f[k]);
  return acc;
}

// g is a product of distinct linear factors.
void split_linear(const Poly& g, std::mt19937_64& rng, std::vector<Elem>& out) {
  if (g.size() <= 1) return;
  if (g.size() == 2) {
    out.push_back(linalg::neg(linalg::mul(g[0], linalg::inv(g[1]))));
    return;
  }
  const std::uint32_t p = linalg::prime();
  while (true) {
    const Elem a = static_cast<Elem>(rng() % p);
    Poly h = poly_pow_mod({a, 1}, (p - 1) / 2, g);
    h = poly_sub(std::move(h), {1});
    Poly d = poly_gcd(h, g);
    if (d.size() > 1 && d.size() < g.size()) {
      split_linear(d, rng, out);
      split_linear(poly_div_exact(g, d), rng, out);
      return;
    }
  }
}

struct Piece {
  Representation rep;
  RepMorphism inclusion;
  RepMorphism projection;
};

std::vector<Piece> split(const Representation& x, std::mt19937_64& rng, std::size_t retries) {
  if (x.is_zero()) return {};
  auto end = hom_ext(x, x);
  const std::size_t n = x.total_dim();
  // A one-dimensional endomorphism ring is local.
  if (end->hom_dim() > 1) {
    const std::uint32_t p = linalg::prime();
    const Quiver& q = x.quiver();
    for (std::size_t attempt = 0; attempt < retries; ++attempt) {
      Matrix c(end->hom_dim(), 1);
      for (std::size_t j = 0; j < c.rows(); ++j) c(j, 0) = static_cast<Elem>(rng() % p);
      const RepMorphism phi = end->hom_from_coords(c);
      const Matrix big = Matrix::block_diag(phi.components());
      for (Elem lambda : roots_mod_p(linalg::charpoly(big), rng())) {
        std::vector<Matrix> ker;
        std::vector<Matrix> img;
        std::size_t kdim = 0;
        for (std::size_t v = 0; v < q.vertex_count(); ++v) {
          const Matrix shifted = phi.component(v) - Matrix::identity(x.dim(v)).scaled(lambda);
          const Matrix power = linalg::mat_pow(shifted, n);
          ker.push_back(linalg::kernel_basis(power));
          img.push_back(linalg::column_space_basis(power));
          kdim += ker.back().cols();
        }
        if (kdim == 0 || kdim == n) continue;
        // Fitting decomposition X = ker (phi - lambda)^n (+) im (phi - lambda)^n.
        auto [krep, kinc] = sub_representation(x, ker);
        auto [irep, iinc] = sub_representation(x, img);
        std::vector<Matrix> kproj;
        std::vector<Matrix> iproj;
        for (std::size_t v = 0; v < q.vertex_count(); ++v) {
          const Matrix t = Matrix::hstack({ker[v], img[v]}, x.dim(v));
          const Matrix tinv = *linalg::inverse(t);
          kproj.push_back(tinv.block(0, 0, ker[v].cols(), x.dim(v)));
          iproj.push_back(tinv.block(ker[v].cols(), 0, img[v].cols(), x.dim(v)));
        }
        const auto kp = RepMorphism::unchecked(x, krep, std::move(kproj));
        const auto ip = RepMorphism::unchecked(x, irep, std::move(iproj));
        std::vector<Piece> out;
        for (auto& pc : split(krep, rng, retries)) {
          out.push_back({pc.rep, compose(kinc, pc.inclusion), compose(pc.projection, kp)});
        }
        for (auto& pc : split(irep, rng, retries)) {
          out.push_back({pc.rep, compose(iinc, pc.inclusion), compose(pc.projection, ip)});
        }
        return out;
      }
    }
  }
  return {{x, RepMorphism::identity(x), RepMorphism::identity(x)}};
}

}  // namespace

std::vector<Elem> roots_mod_p(const std::vector<Elem>& poly, std::uint64_t seed) {
  Poly f = poly;
  trim(f);
  std::vector<Elem> out;
  if (f.size() <= 1) return out;
  const std::uint32_t p = linalg::prime();
  if (p <= (1U << 16U)) {
    for (Elem x = 0; x < p; ++x) {
      if (eval(f, x) == 0) out.push_back(x);
    }
    return out;
  }
  Poly xp = poly_pow_mod({0, 1}, p, f);
  Poly g = poly_gcd(poly_sub(std::move(xp), {0, 1}), f);
  std::mt19937_64 rng(seed);
  split_linear(g, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Summand> decompose_rep(const Representation& x, std::uint64_t seed, std::size_t retries) {
  std::mt19937_64 rng(seed);
  auto pieces = split(x, rng, retries);
  std::stable_sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
    if (a.rep.total_dim() != b.rep.total_dim()) return a.rep.total_dim() < b.rep.total_dim();
    return a.rep.dims() < b.rep.dims();
  });
  std::vector<Summand> out;
  for (auto& p : pieces) out.push_back({std::move(p.rep), std::move(p.inclusion), std::move(p.projection)});
  return out;
}

Representation reflect_at_source(const Representation& v, std::size_t k, const QuiverPtr& reflected) {
  const Quiver& q = v.quiver();
  if (!q.is_source(k)) throw Error("reflection at a vertex that is not a source");
  std::vector<std::size_t> out_arrows;
  std::vector<std::size_t> offsets;
  std::size_t total = 0;
  for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
    if (q.arrow(ai).source != k) continue;
    out_arrows.push_back(ai);
    offsets.push_back(total);
    total += v.dim(q.arrow(ai).target);
  }
  std::vector<Matrix> stacked;
  for (auto ai : out_arrows) stacked.push_back(v.mat(ai));
  const Matrix map = Matrix::vstack(stacked, v.dim(k));
  const linalg::QuotientChart chart(map, total);
  DimVector dims = v.dims();
  dims[k] = chart.dim();
  std::vector<Matrix> mats = v.mats();
  for (std::size_t i = 0; i < out_arrows.size(); ++i) {
    const std::size_t ai = out_arrows[i];
    const std::size_t j = q.arrow(ai).target;
    mats[ai] = chart.projection().block(0, offsets[i], chart.dim(), v.dim(j));
  }
  return {reflected, std::move(dims), std::move(mats)};
}

std::vector<Representation> indecomposables(const QuiverPtr& quiver) {
  const Quiver& q = *quiver;
  if (!q.is_dynkin()) {
    throw Unsupported("unsupported enumeration: quiver is not of Dynkin type (infinite representation type)");
  }
  const std::size_t n = q.vertex_count();
  if (n == 0) return {};
  // Admissible sink sequence: reverse topological order, repeated.
  std::vector<std::size_t> order(q.topological_order().rbegin(), q.topological_order().rend());
  std::vector<QuiverPtr> quivers{quiver};
  auto sink_at = [&](std::size_t t) { return order[(t - 1) % n]; };  // k_t, t >= 1
  auto quiver_at = [&](std::size_t s) {
    while (quivers.size() <= s) {
      const std::size_t t = quivers.size();
      quivers.push_back(std::make_shared<const Quiver>(quivers.back()->reflected_at(sink_at(t))));
    }
    return quivers[s];
  };

  // M_{t+n} is the inverse Coxeter functor applied to M_t, so each residue class
  // mod n runs until its first zero; n zeros in a row end the enumeration.
  std::vector<Representation> out;
  std::set<DimVector> seen;
  std::size_t zeros = 0;
  const std::size_t cap = n * (n * n + 2);
  for (std::size_t t = 1; t <= cap && zeros < n; ++t) {
    // M_t = S-_{k_1} ... S-_{k_{t-1}} (simple at k_t of Q^{(t-1)})
    Representation m = Representation::simple(quiver_at(t - 1), sink_at(t));
    for (std::size_t s = t - 1; s >= 1 && !m.is_zero(); --s) {
      m = reflect_at_source(m, sink_at(s), quiver_at(s - 1));
    }
    if (m.is_zero()) {
      ++zeros;
      continue;
    }
    zeros = 0;
    if (!seen.insert(m.dims()).second) continue;
    out.push_back(Representation(quiver, m.dims(), m.mats()));
  }
  return out;
}

std::string dim_vector_string(const DimVector& d) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  os << ')';
  return os.str();
}

std::vector<Indecomposable> indecomposable_catalog(const QuiverPtr& quiver) {
  const std::size_t n = quiver->vertex_count();
  std::vector<DimVector> simple(n);
  std::vector<DimVector> proj(n);
  std::vector<DimVector> inj(n);
  for (std::size_t i = 0; i < n; ++i) {
    simple[i] = Representation::simple(quiver, i).dims();
    proj[i] = Representation::projective(quiver, i).dims();
    inj[i] = Representation::injective(quiver, i).dims();
  }
  std::vector<Indecomposable> out;
  for (auto& rep : indecomposables(quiver)) {
    Indecomposable e{rep, "", {}};
    for (std::size_t i = 0; i < n; ++i) {
      if (rep.dims() == simple[i]) e.aliases.push_back("S" + std::to_string(i + 1));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (rep.dims() == proj[i]) e.aliases.push_back("P" + std::to_string(i + 1));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (rep.dims() == inj[i]) e.aliases.push_back("I" + std::to_string(i + 1));
    }
    e.label = e.aliases.empty() ? "M" + dim_vector_string(rep.dims()) : e.aliases.front();
    out.push_back(std::move(e));
  }
  return out;
}

std::shared_ptr<const std::vector<Indecomposable>> catalog_for(const QuiverPtr& quiver) {
  thread_local std::map<std::string, std::shared_ptr<const std::vector<Indecomposable>>> cache;
  std::ostringstream key;
  key << linalg::prime() << '|' << quiver->vertex_count();
  for (const auto& a : quiver->arrows()) key << '|' << a.label << ':' << a.source << '>' << a.target;
  auto it = cache.find(key.str());
  if (it != cache.end()) return it->second;
  auto entry = std::make_shared<const std::vector<Indecomposable>>(indecomposable_catalog(quiver));
  cache.emplace(key.str(), entry);
  return entry;
}

std::string node_name(const std::string& label, int shift) {
  return shift == 0 ? label : label + "[" + std::to_string(shift) + "]";
}

std::optional<std::size_t> find_indecomposable(const std::vector<Indecomposable>& catalog, const DimVector& dims) {
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    if (catalog[i].rep.dims() == dims) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> find_indecomposable(const std::vector<Indecomposable>& catalog, const std::string& name) {
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    if (catalog[i].label == name) return i;
    if (std::find(catalog[i].aliases.begin(), catalog[i].aliases.end(), name) != catalog[i].aliases.end()) return i;
  }
  // Dimension vector text: optional leading 'M', optional parentheses, comma separated.
  std::string s = name;
  if (!s.empty() && s.front() == 'M') s.erase(0, 1);
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == '(' || c == ')' || c == ' '; }), s.end());
  DimVector dims;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit)) return std::nullopt;
    dims.push_back(std::stoul(tok));
  }
  return find_indecomposable(catalog, dims);
}

}  // namespace trihered
