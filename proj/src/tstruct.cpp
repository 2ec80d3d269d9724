#include "trihered/tstruct.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "trihered/cones.hpp"

namespace trihered {

PathGraph::PathGraph(std::vector<std::string> labels, int lo, int hi)
    : labels_(std::move(labels)), lo_(lo), hi_(hi) {
  for (int k = lo; k <= hi; ++k) {
    for (std::size_t i = 0; i < labels_.size(); ++i) nodes_.push_back({i, k});
  }
  out_.resize(nodes_.size());
  for (const auto& n : nodes_) {
    if (n.shift < hi) add_edge(n, n.shifted(1), EdgeKind::shift);
  }
}

std::optional<std::size_t> PathGraph::position(const Node& n) const {
  if (n.shift < lo_ || n.shift > hi_ || n.index >= labels_.size()) return std::nullopt;
  return static_cast<std::size_t>(n.shift - lo_) * labels_.size() + n.index;
}

bool PathGraph::has_edge(const Node& a, const Node& b, std::optional<EdgeKind> kind) const {
  auto pa = position(a);
  auto pb = position(b);
  if (!pa || !pb) return false;
  return std::any_of(out_[*pa].begin(), out_[*pa].end(),
                     [&](const Edge& e) { return e.to == *pb && (!kind || e.kind == *kind); });
}

std::size_t PathGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& e : out_) n += e.size();
  return n;
}

std::string PathGraph::name(const Node& n) const { return node_name(labels_.at(n.index), n.shift); }

std::optional<Node> PathGraph::parse(const std::string& text) const {
  std::string label = text;
  int shift = 0;
  if (auto open = text.find('['); open != std::string::npos) {
    if (text.back() != ']') return std::nullopt;
    label = text.substr(0, open);
    try {
      std::size_t used = 0;
      const std::string num = text.substr(open + 1, text.size() - open - 2);
      shift = std::stoi(num, &used);
      if (used != num.size()) return std::nullopt;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  if (!catalog_.empty()) {
    if (auto i = find_indecomposable(catalog_, label)) return Node{*i, shift};
    return std::nullopt;
  }
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return Node{static_cast<std::size_t>(it - labels_.begin()), shift};
}

void PathGraph::add_edge(const Node& from, const Node& to, EdgeKind kind) {
  auto pf = position(from);
  auto pt = position(to);
  if (!pf || !pt) throw Error("edge endpoint outside the window");
  if (has_edge(from, to, kind)) return;
  out_[*pf].push_back({*pt, kind});
}

FormalObject PathGraph::object(const Node& n) const {
  if (!quiver_) throw Error("synthetic path graph has no objects");
  return FormalObject::shifted(catalog_.at(n.index).rep, n.shift);
}

bool PathGraph::hom_nonzero(const Node& a, const Node& b) const {
  if (!quiver_) return has_edge(a, b, EdgeKind::hom);
  // I[k] -> J[l] is Hom(I, J) for l = k and Ext^1(I, J) for l = k + 1, zero otherwise.
  const int d = b.shift - a.shift;
  if (d == 0) return hom_dims_.at(a.index).at(b.index) > 0;
  if (d == 1) return ext_dims_.at(a.index).at(b.index) > 0;
  return false;
}

PathGraph build_path_graph(const QuiverPtr& q, int lo, int hi) {
  if (!q->is_dynkin()) throw Unsupported("path graph requires a Dynkin quiver");
  auto cat = catalog_for(q);
  std::vector<std::string> labels;
  for (const auto& c : *cat) labels.push_back(c.label);
  PathGraph g(std::move(labels), lo, hi);
  g.quiver_ = q;
  g.catalog_ = *cat;
  const std::size_t n = cat->size();
  g.hom_dims_.assign(n, std::vector<std::size_t>(n));
  g.ext_dims_.assign(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      g.hom_dims_[i][j] = dim_hom((*cat)[i].rep, (*cat)[j].rep);
      g.ext_dims_[i][j] = dim_ext((*cat)[i].rep, (*cat)[j].rep);
    }
  }
  for (const auto& a : g.nodes()) {
    for (const int d : {0, 1}) {
      for (std::size_t j = 0; j < n; ++j) {
        const Node b{j, a.shift + d};
        if (g.contains(b) && g.hom_nonzero(a, b)) g.add_edge(a, b, EdgeKind::hom);
      }
    }
  }
  return g;
}

std::vector<std::vector<Node>> blocks(const PathGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t p = 0; p < n; ++p) {
    for (const auto& e : g.out_edges(p)) {
      adj[p].push_back(e.to);
      adj[e.to].push_back(p);
    }
  }
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Node>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Node> comp;
    std::deque<std::size_t> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      const std::size_t p = queue.front();
      queue.pop_front();
      comp.push_back(g.node(p));
      for (std::size_t r : adj[p]) {
        if (!seen[r]) {
          seen[r] = true;
          queue.push_back(r);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::string step_kind_name(StepKind k) {
  switch (k) {
    case StepKind::forward_hom: return "hom-forward";
    case StepKind::backward_hom: return "hom-backward";
    case StepKind::shift_up: return "shift-up";
    case StepKind::shift_down: return "shift-down";
  }
  return "?";
}

std::optional<StepKind> parse_step_kind(const std::string& s) {
  if (s == "hom-forward" || s == "forward-hom") return StepKind::forward_hom;
  if (s == "hom-backward" || s == "backward-hom") return StepKind::backward_hom;
  if (s == "shift-up") return StepKind::shift_up;
  if (s == "shift-down") return StepKind::shift_down;
  return std::nullopt;
}

namespace {

bool step_ok(const PathGraph& g, StepKind k, const Node& a, const Node& b) {
  switch (k) {
    case StepKind::forward_hom: return g.hom_nonzero(a, b);
    case StepKind::backward_hom: return g.hom_nonzero(b, a);
    case StepKind::shift_up: return b == a.shifted(1);
    case StepKind::shift_down: return b == a.shifted(-1);
  }
  return false;
}

void require_in_window(const PathGraph& g, const Node& n) {
  if (g.contains(n)) return;
  throw WindowExhausted("node " + g.name(n) + " lies outside the window [" + std::to_string(g.lo()) + "," +
                            std::to_string(g.hi()) + "]",
                        std::min(g.lo(), n.shift), std::max(g.hi(), n.shift));
}

// The summand Z' of cone(f: from -> to) with to -> Z' and Z' -> from[1] both nonzero.
std::optional<Node> cone_summand(const PathGraph& g, const Node& from, const Node& to) {
  HomSpace hs(g.object(from), g.object(to));
  if (hs.dim() == 0) return std::nullopt;
  const FormalMorphism f = hs.basis_element(0);
  const Triangle t = cone_general(f);
  const FormalObject& z = t.z();
  for (const auto& [d, comp] : z.components()) {
    for (const auto& s : decompose_rep(comp)) {
      auto idx = find_indecomposable(g.catalog(), s.rep.dims());
      if (!idx) throw Error("cone summand missing from the catalog");
      const FormalObject piece = FormalObject::stalk(s.rep, d);
      const FormalMorphism incl(piece, z, {{d, s.inclusion}}, {});
      const FormalMorphism proj(z, piece, {{d, s.projection}}, {});
      if (!compose(proj, t.g).is_zero() && !compose(t.h, incl).is_zero()) return Node{*idx, -d};
    }
  }
  throw Error("no cone summand of " + g.name(from) + " -> " + g.name(to) + " carries both composites");
}

}  // namespace

void validate_walk(const PathGraph& g, const Walk& w) {
  Node cur = w.start;
  require_in_window(g, cur);
  for (std::size_t i = 0; i < w.steps.size(); ++i) {
    const auto& s = w.steps[i];
    require_in_window(g, s.to);
    if (!step_ok(g, s.kind, cur, s.to)) {
      throw Error("walk step " + std::to_string(i + 1) + " (" + step_kind_name(s.kind) + " " + g.name(cur) +
                  " to " + g.name(s.to) + ") is not supported by the graph");
    }
    cur = s.to;
  }
}

PathResult walk_to_path(const PathGraph& g, const Walk& w) {
  validate_walk(g, w);
  std::vector<Node> nodes{w.start};
  std::vector<StepKind> kinds;
  for (const auto& s : w.steps) {
    nodes.push_back(s.to);
    kinds.push_back(s.kind);
  }
  PathResult out;
  auto shift_tail = [&](std::size_t from) {
    for (std::size_t j = from; j < nodes.size(); ++j) {
      nodes[j] = nodes[j].shifted(1);
      require_in_window(g, nodes[j]);
    }
  };
  for (;;) {
    auto it = std::find_if(kinds.begin(), kinds.end(),
                           [](StepKind k) { return k == StepKind::backward_hom || k == StepKind::shift_down; });
    if (it == kinds.end()) break;
    const auto i = static_cast<std::size_t>(it - kinds.begin());
    ++out.rewrites;
    if (*it == StepKind::shift_down) {
      // X_i = X_{i+1}[1]: drop X_{i+1}; the next step now starts at X_i.
      nodes.erase(nodes.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      kinds.erase(it);
      shift_tail(i + 1);
      ++out.m;
      continue;
    }
    const Node to = nodes[i];
    const Node from = nodes[i + 1];
    if (!g.quiver()) throw Error("backward Hom steps need a path graph built from a quiver");
    HomSpace hs(g.object(from), g.object(to));
    if (hs.dim() > 0 && hs.basis_element(0).is_iso()) {
      // Isomorphic endpoints: the step is redundant.
      nodes.erase(nodes.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      kinds.erase(it);
      continue;
    }
    auto zp = cone_summand(g, from, to);
    if (!zp) throw Error("backward step without a nonzero Hom");
    require_in_window(g, *zp);
    nodes.insert(nodes.begin() + static_cast<std::ptrdiff_t>(i) + 1, *zp);
    *it = StepKind::forward_hom;
    kinds.insert(kinds.begin() + static_cast<std::ptrdiff_t>(i) + 1, StepKind::forward_hom);
    shift_tail(i + 2);
    ++out.m;
  }
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    if (!g.has_edge(nodes[i], nodes[i + 1])) throw Error("rewritten walk is not a path");
  }
  out.nodes = std::move(nodes);
  return out;
}

namespace {

std::vector<std::size_t> reach_parents(const PathGraph& g, std::size_t start, std::vector<bool>& seen) {
  std::vector<std::size_t> parent(g.size(), g.size());
  seen.assign(g.size(), false);
  std::deque<std::size_t> queue{start};
  seen[start] = true;
  while (!queue.empty()) {
    const std::size_t p = queue.front();
    queue.pop_front();
    for (const auto& e : g.out_edges(p)) {
      if (!seen[e.to]) {
        seen[e.to] = true;
        parent[e.to] = p;
        queue.push_back(e.to);
      }
    }
  }
  return parent;
}

}  // namespace

TStructure t_structure_from(const PathGraph& g, const Node& m) {
  auto start = g.position(m);
  if (!start) throw Error("generator " + g.name(m) + " is not a node of the graph");
  std::vector<bool> seen;
  reach_parents(g, *start, seen);
  TStructure ts;
  ts.graph = &g;
  ts.generator = m;
  auto reached = [&](const Node& n) {
    auto p = g.position(n);
    return p && seen[*p];
  };
  for (const auto& n : g.nodes()) {
    if (reached(n)) ts.leq0.insert(n);
    if (!reached(n.shifted(-1))) ts.geq0.insert(n);
  }
  std::set_intersection(ts.leq0.begin(), ts.leq0.end(), ts.geq0.begin(), ts.geq0.end(),
                        std::inserter(ts.heart, ts.heart.end()));
  ts.bounded = !reached(m.shifted(-1));

  auto& r = ts.report;
  auto fail = [&](bool& flag, std::string msg) {
    flag = false;
    if (r.failures.size() < 32) r.failures.push_back(std::move(msg));
  };
  for (const auto& y : ts.leq0) {
    for (const auto& z : ts.geq0) {
      if (g.hom_nonzero(y, z.shifted(-1))) fail(r.t1, "(t1) Hom(" + g.name(y) + ", " + g.name(z.shifted(-1)) + ") != 0");
    }
  }
  for (const auto& n : g.nodes()) {
    if (ts.leq0.count(n) && g.contains(n.shifted(1)) && !ts.leq0.count(n.shifted(1))) {
      fail(r.t2, "(t2) " + g.name(n) + " in the aisle but not its shift");
    }
    if (ts.geq0.count(n) && g.contains(n.shifted(-1)) && !ts.geq0.count(n.shifted(-1))) {
      fail(r.t2, "(t2) " + g.name(n) + " in the co-aisle but not its shift by -1");
    }
    if (!ts.leq0.count(n) && g.contains(n.shifted(1)) && !ts.geq0.count(n.shifted(1))) {
      fail(r.t3, "(t3) " + g.name(n) + " in neither part");
    }
  }
  // T^{>0} = geq0[-1], T^{<0} = leq0[1].
  for (const auto& z : ts.geq0) {
    for (const auto& y : ts.leq0) {
      if (g.hom_nonzero(z.shifted(-1), y.shifted(1))) {
        fail(r.split, "(split) Hom(" + g.name(z.shifted(-1)) + ", " + g.name(y.shifted(1)) + ") != 0");
      }
    }
  }
  return ts;
}

BoundedVerdict is_bounded(const PathGraph& g, const Node& m) {
  auto start = g.position(m);
  if (!start) throw Error("node " + g.name(m) + " is not in the graph");
  const Node target = m.shifted(-1);
  require_in_window(g, target);
  std::vector<bool> seen;
  auto parent = reach_parents(g, *start, seen);
  const std::size_t t = *g.position(target);
  BoundedVerdict v;
  if (!seen[t]) return v;
  v.bounded = false;
  for (std::size_t p = t; p != g.size(); p = parent[p]) v.witness.push_back(g.node(p));
  std::reverse(v.witness.begin(), v.witness.end());
  return v;
}

std::vector<HeartPiece> heart_decompose(const TStructure& ts, const FormalObject& x) {
  if (!ts.graph) throw Error("t-structure without a graph");
  const PathGraph& g = *ts.graph;
  std::vector<HeartPiece> out;
  for (const auto& [d, comp] : x.components()) {
    for (const auto& s : decompose_rep(comp)) {
      auto idx = find_indecomposable(g.catalog(), s.rep.dims());
      if (!idx) throw Error("summand missing from the catalog");
      const Node base{*idx, -d};
      // Minimal m with a path generator ~> base[m].
      std::optional<HeartPiece> piece;
      for (int k = g.lo(); k <= g.hi(); ++k) {
        const Node n{*idx, k};
        if (ts.leq0.count(n)) {
          piece = HeartPiece{n, k - base.shift};
          break;
        }
      }
      if (!piece || !ts.heart.count(piece->heart_node)) {
        throw WindowExhausted("summand " + g.name(base) + " has no heart shift inside the window", g.lo() - 1,
                              g.hi() + 1);
      }
      out.push_back(*piece);
    }
  }
  return out;
}

FormalObject reassemble(const PathGraph& g, const std::vector<HeartPiece>& pieces) {
  std::vector<FormalObject> parts;
  for (const auto& p : pieces) parts.push_back(g.object(p.heart_node.shifted(-p.n)));
  if (parts.empty()) return FormalObject(g.quiver());
  return direct_sum(parts).sum;
}

}  // namespace trihered
