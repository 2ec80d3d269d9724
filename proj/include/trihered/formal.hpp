// The formal triangulated model: objects are finite sums (+)_n X_n[-n] of
// shifted representations, morphisms are component matrices with a Hom part
// X_n -> Y_n and an Ext^1 part in Ext^1(X_n, Y_{n-1}) for every degree n.
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trihered/decompose.hpp"
#include "trihered/homext.hpp"

namespace trihered {

class FormalObject {
 public:
  FormalObject() = default;
  explicit FormalObject(QuiverPtr quiver) : quiver_(std::move(quiver)) {}
  /// Zero components are dropped.
  FormalObject(QuiverPtr quiver, std::map<int, Representation> components);

  /// x placed in the given degree, i.e. x[-degree].
  static FormalObject stalk(const Representation& x, int degree);
  /// x[k], i.e. x in degree -k.
  static FormalObject shifted(const Representation& x, int k) { return stalk(x, -k); }

  [[nodiscard]] const QuiverPtr& quiver_ptr() const { return quiver_; }
  [[nodiscard]] const std::map<int, Representation>& components() const { return comps_; }
  /// Component in degree n (the zero representation when absent).
  [[nodiscard]] Representation component(int n) const;
  [[nodiscard]] bool has(int n) const { return comps_.count(n) != 0; }
  [[nodiscard]] bool is_zero() const { return comps_.empty(); }
  [[nodiscard]] int min_degree() const;
  [[nodiscard]] int max_degree() const;
  [[nodiscard]] int amplitude() const { return is_zero() ? 0 : max_degree() - min_degree(); }

  /// X[k]: the degree-n component moves to degree n - k.
  [[nodiscard]] FormalObject shift(int k) const;

  friend bool operator==(const FormalObject& a, const FormalObject& b) { return a.comps_ == b.comps_; }

 private:
  QuiverPtr quiver_;
  std::map<int, Representation> comps_;
};

class FormalMorphism {
 public:
  FormalMorphism() = default;
  /// Missing parts are zero; parts in degrees where they must vanish are rejected.
  FormalMorphism(FormalObject source, FormalObject target, std::map<int, RepMorphism> hom,
                 std::map<int, ExtClass> ext);

  static FormalMorphism zero(const FormalObject& source, const FormalObject& target);
  static FormalMorphism identity(const FormalObject& x);
  /// Stalk morphism f placed in the given degree.
  static FormalMorphism stalk(const RepMorphism& f, int degree);
  /// Pure Ext part e in Ext^1(A, B), as a morphism A[-degree] -> B[-degree+1].
  static FormalMorphism pure_ext(const ExtClass& e, int degree);

  [[nodiscard]] const FormalObject& source() const { return source_; }
  [[nodiscard]] const FormalObject& target() const { return target_; }
  [[nodiscard]] const std::map<int, RepMorphism>& hom_parts() const { return hom_; }
  [[nodiscard]] const std::map<int, ExtClass>& ext_parts() const { return ext_; }
  /// f^0_n: X_n -> Y_n
  [[nodiscard]] RepMorphism hom(int n) const;
  /// f^1_n in Ext^1(X_n, Y_{n-1})
  [[nodiscard]] ExtClass ext(int n) const;

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_iso() const;
  /// Throws Error when not an isomorphism.
  [[nodiscard]] FormalMorphism inverse() const;
  [[nodiscard]] FormalMorphism shift(int k) const;
  [[nodiscard]] FormalMorphism scaled(linalg::Elem s) const;
  /// Same morphism with all Ext parts dropped / all Hom parts dropped.
  [[nodiscard]] FormalMorphism hom_only() const;
  [[nodiscard]] FormalMorphism ext_only() const;

  friend bool operator==(const FormalMorphism& a, const FormalMorphism& b);
  friend FormalMorphism operator+(const FormalMorphism& a, const FormalMorphism& b);
  friend FormalMorphism operator-(const FormalMorphism& a);
  friend FormalMorphism operator-(const FormalMorphism& a, const FormalMorphism& b) { return a + (-b); }

 private:
  FormalObject source_;
  FormalObject target_;
  std::map<int, RepMorphism> hom_;
  std::map<int, ExtClass> ext_;
};

/// g o f. Hom o Hom composes, Ext o Hom pulls back, Hom o Ext pushes out, Ext o Ext = 0.
FormalMorphism compose(const FormalMorphism& g, const FormalMorphism& f);
FormalMorphism compose(std::initializer_list<std::reference_wrapper<const FormalMorphism>> chain);

struct FormalSum {
  FormalObject sum;
  std::vector<FormalMorphism> inclusions;
  std::vector<FormalMorphism> projections;
};

FormalSum direct_sum(const std::vector<FormalObject>& parts);
/// Diagonal morphism between the sums of the sources and of the targets.
FormalMorphism direct_sum(const std::vector<FormalMorphism>& parts);
/// Morphism from a single object into a sum, given its components (column).
FormalMorphism into_sum(const FormalSum& target, const std::vector<FormalMorphism>& parts);
/// Morphism out of a sum into a single object, given its components (row).
FormalMorphism out_of_sum(const FormalSum& source, const std::vector<FormalMorphism>& parts);

/// Hom(X, Y) as a vector space: Hom coordinates per degree, then Ext coordinates per degree.
class HomSpace {
 public:
  HomSpace(FormalObject source, FormalObject target);

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] std::size_t hom_dim() const { return hom_dim_; }
  [[nodiscard]] std::size_t ext_dim() const { return dim_ - hom_dim_; }
  [[nodiscard]] const FormalObject& source() const { return source_; }
  [[nodiscard]] const FormalObject& target() const { return target_; }

  [[nodiscard]] Matrix coords(const FormalMorphism& f) const;
  [[nodiscard]] FormalMorphism from_coords(const Matrix& c) const;
  [[nodiscard]] FormalMorphism basis_element(std::size_t j) const;
  [[nodiscard]] std::vector<FormalMorphism> basis() const;

  /// Matrix of a linear map Hom(X, Y) -> Hom(X', Y') in these coordinates.
  [[nodiscard]] Matrix matrix_of(const HomSpace& codomain,
                                 const std::function<FormalMorphism(const FormalMorphism&)>& map) const;

 private:
  struct Block {
    int degree;
    bool ext;
    std::size_t offset;
    std::size_t size;
  };
  FormalObject source_;
  FormalObject target_;
  std::vector<Block> blocks_;
  std::size_t dim_ = 0;
  std::size_t hom_dim_ = 0;
};

/// One linear condition map(z) = rhs on an unknown morphism z.
struct LinearCondition {
  std::function<FormalMorphism(const FormalMorphism&)> map;
  FormalMorphism rhs;
};

struct LinearSolution {
  FormalMorphism particular;                // deterministic solve() solution
  std::vector<FormalMorphism> homogeneous;  // basis of the solutions of the homogeneous system
};

/// Solves for z: source -> target subject to all conditions; nullopt when inconsistent.
std::optional<LinearSolution> solve_morphism(const FormalObject& source, const FormalObject& target,
                                             const std::vector<LinearCondition>& conditions);

/// The particular solution if invertible, else particular + random homogeneous combinations.
std::optional<FormalMorphism> find_invertible(const LinearSolution& sol, std::uint64_t seed = 0,
                                              std::size_t tries = 64);

/// Candidate exact triangle X -f-> Y -g-> Z -h-> X[1].
struct Triangle {
  FormalMorphism f;
  FormalMorphism g;
  FormalMorphism h;

  [[nodiscard]] const FormalObject& x() const { return f.source(); }
  [[nodiscard]] const FormalObject& y() const { return f.target(); }
  [[nodiscard]] const FormalObject& z() const { return g.target(); }
  /// Throws Error when the endpoints do not chain.
  void validate() const;
};

/// (TR2) rotation: (-g, -h, -f[1]).
Triangle rotate(const Triangle& t);
/// (f[k], g[k], (-1)^k h[k]).
Triangle shift_triangle(const Triangle& t, int k);
/// (TR0) 0 -> X -id-> X -> 0.
Triangle trivial_triangle(const FormalObject& x);

struct DegreeWindow {
  int lo = 0;
  int hi = 0;
  [[nodiscard]] bool contains(int n) const { return lo <= n && n <= hi; }
};

/// Degrees of all objects of t, widened by one on each side.
DegreeWindow default_window(const Triangle& t);

struct ExactnessReport {
  bool passed = true;
  std::vector<std::string> failures;
};

/// Hom-long-exact-sequence check against every U = I[-k], I indecomposable, k in the window.
/// Throws Unsupported for quivers that are not of Dynkin type.
ExactnessReport is_exact(const Triangle& t, const DegreeWindow& window);
ExactnessReport is_exact(const Triangle& t);
ExactnessReport is_exact(const Triangle& t, const DegreeWindow& window, const std::vector<Indecomposable>& catalog);

/// (TR3) z with z o g = g' o y and h' o z = x[1] o h, or nullopt.
std::optional<FormalMorphism> tr3_complete(const Triangle& t, const Triangle& t2, const FormalMorphism& x,
                                           const FormalMorphism& y);

/// All such z: a particular solution plus a basis of the homogeneous solutions.
std::optional<LinearSolution> tr3_solutions(const Triangle& t, const Triangle& t2, const FormalMorphism& x,
                                            const FormalMorphism& y);

/// Same, but the third map is an isomorphism (random search in the solution space).
std::optional<FormalMorphism> tr3_iso(const Triangle& t, const Triangle& t2, const FormalMorphism& x,
                                      const FormalMorphism& y, std::uint64_t seed = 0);

/// Morphism of triangles (a, b, c) commuting with all three squares.
bool is_triangle_morphism(const Triangle& t, const Triangle& t2, const FormalMorphism& a, const FormalMorphism& b,
                          const FormalMorphism& c);

Triangle direct_sum_triangle(const Triangle& t, const Triangle& t2);

/// For an exact triangle with h = 0: theta: Y -> X (+) Z, iso, theta o f = incl, proj o theta = g.
FormalMorphism split_exact_normalize(const Triangle& t);

std::string describe(const FormalObject& x);

}  // namespace trihered
