// Finite acyclic quivers, their representations over F_p, and morphisms.
#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "trihered/linalg.hpp"

namespace trihered {

using linalg::Matrix;
using DimVector = std::vector<std::size_t>;

struct Arrow {
  std::string label;
  std::size_t source = 0;
  std::size_t target = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

class Quiver {
 public:
  /// Throws Error on out-of-range endpoints, duplicate labels or a directed cycle.
  Quiver(std::size_t vertex_count, std::vector<Arrow> arrows);

  [[nodiscard]] std::size_t vertex_count() const { return vertices_; }
  [[nodiscard]] const std::vector<Arrow>& arrows() const { return arrows_; }
  [[nodiscard]] const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }
  [[nodiscard]] std::optional<std::size_t> arrow_index(const std::string& label) const;

  /// Vertices ordered so every arrow goes from an earlier to a later vertex.
  [[nodiscard]] const std::vector<std::size_t>& topological_order() const { return topo_; }

  /// Paths from i to j as arrow-index sequences (the trivial path when i == j).
  [[nodiscard]] const std::vector<std::vector<std::size_t>>& paths(std::size_t from, std::size_t to) const;
  [[nodiscard]] std::size_t path_count(std::size_t from, std::size_t to) const { return paths(from, to).size(); }

  /// Euler form <a, b> = sum_i a_i b_i - sum_arrows a_s b_t.
  [[nodiscard]] long euler_form(const DimVector& a, const DimVector& b) const;

  /// True when the symmetrised Euler form is positive definite (disjoint union of ADE graphs).
  [[nodiscard]] bool is_dynkin() const;

  /// Same vertices, every arrow touching k reversed.
  [[nodiscard]] Quiver reflected_at(std::size_t k) const;

  [[nodiscard]] bool is_sink(std::size_t k) const;
  [[nodiscard]] bool is_source(std::size_t k) const;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_;
  }

 private:
  std::size_t vertices_;
  std::vector<Arrow> arrows_;
  std::vector<std::size_t> topo_;
  std::vector<std::vector<std::vector<std::vector<std::size_t>>>> paths_;  // [from][to]
};

using QuiverPtr = std::shared_ptr<const Quiver>;

QuiverPtr make_quiver(std::size_t vertex_count, std::vector<Arrow> arrows);
/// Linearly oriented A_n: 1 -> 2 -> ... -> n, arrows labelled a1, a2, ...
QuiverPtr linear_quiver(std::size_t n);
/// D_4 with arms 1 -> 2, 3 -> 2, 4 -> 2 (vertex 2 is the centre).
QuiverPtr d4_quiver();

bool same_quiver(const QuiverPtr& a, const QuiverPtr& b);

class Representation {
 public:
  /// Placeholder with no quiver; only useful as a container default.
  Representation() = default;
  /// mats[a] must have shape dims[target(a)] x dims[source(a)].
  Representation(QuiverPtr quiver, DimVector dims, std::vector<Matrix> mats);

  static Representation zero(QuiverPtr quiver);
  static Representation simple(QuiverPtr quiver, std::size_t vertex);
  /// P_i: basis of vertex j indexed by the paths i -> j.
  static Representation projective(QuiverPtr quiver, std::size_t vertex);
  /// I_i: basis of vertex j indexed by the paths j -> i.
  static Representation injective(QuiverPtr quiver, std::size_t vertex);

  [[nodiscard]] const Quiver& quiver() const { return *quiver_; }
  [[nodiscard]] const QuiverPtr& quiver_ptr() const { return quiver_; }
  [[nodiscard]] const DimVector& dims() const { return dims_; }
  [[nodiscard]] std::size_t dim(std::size_t vertex) const { return dims_[vertex]; }
  [[nodiscard]] const std::vector<Matrix>& mats() const { return mats_; }
  [[nodiscard]] const Matrix& mat(std::size_t arrow) const { return mats_[arrow]; }
  [[nodiscard]] std::size_t total_dim() const;
  [[nodiscard]] bool is_zero() const { return total_dim() == 0; }

  /// Composite of the arrow matrices along a path (identity for the trivial path).
  [[nodiscard]] Matrix path_matrix(const std::vector<std::size_t>& path, std::size_t from) const;

  /// Dimension of the top at each vertex: dim X_i minus the span of incoming images.
  [[nodiscard]] DimVector top_dims() const;
  [[nodiscard]] bool is_projective() const;

  /// Content fingerprint used for memoisation.
  [[nodiscard]] std::string key() const;

  friend bool operator==(const Representation& a, const Representation& b);

 private:
  QuiverPtr quiver_;
  DimVector dims_;
  std::vector<Matrix> mats_;
};

class RepMorphism {
 public:
  RepMorphism() = default;
  /// Validates shapes and that every arrow square commutes.
  RepMorphism(Representation source, Representation target, std::vector<Matrix> components);
  /// Skips the commuting-square check; for maps that commute by construction.
  static RepMorphism unchecked(Representation source, Representation target, std::vector<Matrix> components);

  static RepMorphism zero(const Representation& source, const Representation& target);
  static RepMorphism identity(const Representation& x);

  [[nodiscard]] const Representation& source() const { return source_; }
  [[nodiscard]] const Representation& target() const { return target_; }
  [[nodiscard]] const Matrix& component(std::size_t vertex) const { return comps_[vertex]; }
  [[nodiscard]] const std::vector<Matrix>& components() const { return comps_; }

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_injective() const;
  [[nodiscard]] bool is_surjective() const;
  [[nodiscard]] bool is_iso() const { return is_injective() && is_surjective(); }
  [[nodiscard]] std::optional<RepMorphism> inverse() const;
  [[nodiscard]] RepMorphism scaled(linalg::Elem s) const;

  friend bool operator==(const RepMorphism& a, const RepMorphism& b);
  friend RepMorphism operator+(const RepMorphism& a, const RepMorphism& b);
  friend RepMorphism operator-(const RepMorphism& a, const RepMorphism& b);
  friend RepMorphism operator-(const RepMorphism& a);

 private:
  Representation source_;
  Representation target_;
  std::vector<Matrix> comps_;
};

/// g o f
RepMorphism compose(const RepMorphism& g, const RepMorphism& f);

struct DirectSum {
  Representation sum;
  std::vector<RepMorphism> inclusions;
  std::vector<RepMorphism> projections;
};

/// Vertexwise block sum; summands occupy consecutive coordinate blocks in order.
DirectSum direct_sum(const std::vector<Representation>& parts, const QuiverPtr& quiver);
Representation direct_sum(const Representation& a, const Representation& b);

/// Matrix of morphisms sum_i sum_j incl_i o blocks[i][j] o proj_j between two direct sums.
RepMorphism block_morphism(const DirectSum& source, const DirectSum& target,
                           const std::vector<std::vector<std::optional<RepMorphism>>>& blocks);

/// Sub-representation spanned vertexwise by the columns of `bases` (must be arrow-stable).
std::pair<Representation, RepMorphism> sub_representation(const Representation& x, const std::vector<Matrix>& bases);

/// Quotient by the arrow-stable subspaces spanned by `bases`, with the projection.
std::pair<Representation, RepMorphism> quotient_representation(const Representation& x,
                                                               const std::vector<Matrix>& bases);

}  // namespace trihered
