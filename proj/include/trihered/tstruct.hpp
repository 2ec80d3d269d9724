// Path graph on indecomposables times shifts, walks and their rewriting into
// paths, and the split t-structures generated by one indecomposable.
#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "trihered/formal.hpp"

namespace trihered {

/// I[shift] for the catalog entry I = catalog[index].
struct Node {
  std::size_t index = 0;
  int shift = 0;
  friend auto operator<=>(const Node& a, const Node& b) {
    if (auto c = a.shift <=> b.shift; c != 0) return c;
    return a.index <=> b.index;
  }
  friend bool operator==(const Node&, const Node&) = default;
  [[nodiscard]] Node shifted(int k) const { return {index, shift + k}; }
};

enum class EdgeKind { hom, shift };

struct Edge {
  std::size_t to = 0;  // node position
  EdgeKind kind = EdgeKind::hom;
};

class WindowExhausted : public Error {
 public:
  WindowExhausted(const std::string& what, int required_lo, int required_hi)
      : Error(what), required_lo(required_lo), required_hi(required_hi) {}
  int required_lo;
  int required_hi;
};

class PathGraph {
 public:
  /// Nodes (i, k) for every label and lo <= k <= hi, with only the shift edges.
  /// Used directly for synthetic fixtures; build_path_graph adds the Hom edges.
  PathGraph(std::vector<std::string> labels, int lo, int hi);

  [[nodiscard]] int lo() const { return lo_; }
  [[nodiscard]] int hi() const { return hi_; }
  [[nodiscard]] bool empty() const { return nodes_.empty(); }
  [[nodiscard]] std::size_t size() const { return nodes_.size(); }
  [[nodiscard]] const std::vector<Node>& nodes() const { return nodes_; }
  [[nodiscard]] const Node& node(std::size_t pos) const { return nodes_.at(pos); }
  [[nodiscard]] std::optional<std::size_t> position(const Node& n) const;
  [[nodiscard]] bool contains(const Node& n) const { return position(n).has_value(); }
  [[nodiscard]] const std::vector<Edge>& out_edges(std::size_t pos) const { return out_.at(pos); }
  [[nodiscard]] bool has_edge(const Node& a, const Node& b, std::optional<EdgeKind> kind = std::nullopt) const;
  [[nodiscard]] std::size_t edge_count() const;

  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] std::string name(const Node& n) const;
  /// Parses "P1[2]" (or "P1") into a node; nullopt for unknown labels.
  [[nodiscard]] std::optional<Node> parse(const std::string& text) const;

  /// Throws Error for nodes outside the window.
  void add_edge(const Node& from, const Node& to, EdgeKind kind);

  /// Set by build_path_graph; null for synthetic graphs.
  [[nodiscard]] const QuiverPtr& quiver() const { return quiver_; }
  [[nodiscard]] const std::vector<Indecomposable>& catalog() const { return catalog_; }
  /// I[shift] as a formal object. Throws Error on synthetic graphs.
  [[nodiscard]] FormalObject object(const Node& n) const;
  /// Whether Hom(a, b) != 0; any shifts, not only those of the window. Synthetic graphs
  /// answer from their Hom edges.
  [[nodiscard]] bool hom_nonzero(const Node& a, const Node& b) const;

 private:
  friend PathGraph build_path_graph(const QuiverPtr& q, int lo, int hi);
  std::vector<std::string> labels_;
  int lo_;
  int hi_;
  std::vector<Node> nodes_;
  std::vector<std::vector<Edge>> out_;
  QuiverPtr quiver_;
  std::vector<Indecomposable> catalog_;
  std::vector<std::vector<std::size_t>> hom_dims_;  // [i][j] = dim Hom(I_i, I_j)
  std::vector<std::vector<std::size_t>> ext_dims_;  // [i][j] = dim Ext^1(I_i, I_j)
};

/// Hom edges I[k] -> J[l] whenever the formal Hom is nonzero (only l = k or l = k + 1 occur),
/// shift edges I[k] -> I[k+1]. Throws Unsupported for non-Dynkin quivers.
PathGraph build_path_graph(const QuiverPtr& q, int lo, int hi);

/// Connected components of the underlying undirected graph, each sorted; ordered by first node.
std::vector<std::vector<Node>> blocks(const PathGraph& g);

enum class StepKind { forward_hom, backward_hom, shift_up, shift_down };

std::string step_kind_name(StepKind k);
/// Accepts "hom-forward"/"forward-hom", "hom-backward"/"backward-hom", "shift-up", "shift-down".
std::optional<StepKind> parse_step_kind(const std::string& s);

struct WalkStep {
  StepKind kind = StepKind::forward_hom;
  Node to;
};

struct Walk {
  Node start;
  std::vector<WalkStep> steps;
  [[nodiscard]] Node end() const { return steps.empty() ? start : steps.back().to; }
};

/// Throws Error naming the first step that the graph does not support.
void validate_walk(const PathGraph& g, const Walk& w);

struct PathResult {
  std::vector<Node> nodes;  // consecutive nodes joined by edges of the graph
  int m = 0;                // nodes.back() == walk end shifted by m
  std::size_t rewrites = 0;
};

/// Removes backward steps one at a time: a shift-down is dropped and the tail shifted
/// by +1; a backward Hom f: X' -> X is replaced by X -> Z' -> X'[1] with Z' the first
/// indecomposable summand of cone(f) through which both composites are nonzero, and
/// the tail shifted by +1. Throws WindowExhausted when a node leaves the window.
PathResult walk_to_path(const PathGraph& g, const Walk& w);

struct TStructureReport {
  bool t1 = true;     // Hom(leq0, geq0[-1]) = 0
  bool t2 = true;     // leq0[1] in leq0, geq0[-1] in geq0
  bool t3 = true;     // every node in leq0 or its shift in geq0
  bool split = true;  // Hom(T^{>0}, T^{<0}) = 0
  std::vector<std::string> failures;
  [[nodiscard]] bool passed() const { return t1 && t2 && t3 && split; }
};

struct TStructure {
  const PathGraph* graph = nullptr;
  Node generator;
  std::set<Node> leq0;
  std::set<Node> geq0;
  std::set<Node> heart;
  TStructureReport report;
  bool bounded = false;  // within the window
};

/// Directed reachability from m; all checks are relative to the window.
TStructure t_structure_from(const PathGraph& g, const Node& m);

struct BoundedVerdict {
  bool bounded = true;
  std::vector<Node> witness;  // a path m ~> m[-1] when unbounded
};

/// Throws WindowExhausted when m[-1] is outside the window.
BoundedVerdict is_bounded(const PathGraph& g, const Node& m);

struct HeartPiece {
  Node heart_node;  // in the heart of ts
  int n = 0;        // the summand is heart_node[-n]
};

/// X as a sum of shifted heart objects, one piece per indecomposable summand, ordered by
/// degree and then summand order. Throws WindowExhausted for summands the window cannot place.
std::vector<HeartPiece> heart_decompose(const TStructure& ts, const FormalObject& x);

/// (+) heart_node[-n] over the pieces.
FormalObject reassemble(const PathGraph& g, const std::vector<HeartPiece>& pieces);

}  // namespace trihered
