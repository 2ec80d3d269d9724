// Hom and Ext^1 between quiver representations, extension classes and
// kernel/image/cokernel factorisations.
//
// Both spaces come from the two-term map
//   Phi: (+)_i Hom(X_i, Y_i) -> (+)_{a: i->j} Hom(X_i, Y_j),  (phi_i) |-> (phi_j X_a - Y_a phi_i),
// with Hom(X, Y) = ker Phi and Ext^1(X, Y) = coker Phi.
#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "trihered/quiver.hpp"

namespace trihered {

class HomExtPresentation {
 public:
  HomExtPresentation(Representation source, Representation target);

  [[nodiscard]] const Representation& source() const { return source_; }
  [[nodiscard]] const Representation& target() const { return target_; }
  [[nodiscard]] std::size_t hom_dim() const { return hom_basis_.cols(); }
  [[nodiscard]] std::size_t ext_dim() const { return ext_chart_.dim(); }

  [[nodiscard]] const Matrix& phi() const { return phi_; }
  [[nodiscard]] const Matrix& hom_basis_matrix() const { return hom_basis_; }

  [[nodiscard]] RepMorphism hom_element(std::size_t j) const;
  [[nodiscard]] std::vector<RepMorphism> hom_basis() const;
  [[nodiscard]] RepMorphism hom_from_coords(const Matrix& coords) const;
  [[nodiscard]] Matrix hom_coords(const RepMorphism& f) const;

  /// Flatten / unflatten Hom-shaped data (one matrix per vertex).
  [[nodiscard]] Matrix flatten_vertex(const std::vector<Matrix>& comps) const;
  /// Flatten / unflatten Ext-shaped raw data (one matrix per arrow, shape Y_t x X_s).
  [[nodiscard]] Matrix flatten_arrow(const std::vector<Matrix>& raw) const;
  [[nodiscard]] std::vector<Matrix> unflatten_arrow(const Matrix& flat) const;

  /// Coordinates of a raw cocycle in the canonical cokernel basis.
  [[nodiscard]] Matrix ext_coords(const std::vector<Matrix>& raw) const;
  /// Canonical raw representative of a coordinate vector.
  [[nodiscard]] std::vector<Matrix> ext_raw(const Matrix& coords) const;

 private:
  Representation source_;
  Representation target_;
  std::vector<std::size_t> vertex_offsets_;
  std::vector<std::size_t> arrow_offsets_;
  Matrix phi_;
  Matrix hom_basis_;
  Matrix hom_left_inverse_;
  linalg::QuotientChart ext_chart_;
};

/// Memoised presentation (per thread, keyed on representation contents and the prime).
std::shared_ptr<const HomExtPresentation> hom_ext(const Representation& x, const Representation& y);

std::size_t dim_hom(const Representation& x, const Representation& y);
std::size_t dim_ext(const Representation& x, const Representation& y);

/// A class in Ext^1(quotient, sub), i.e. of some 0 -> sub -> E -> quotient -> 0.
struct ExtClass {
  Representation quotient;
  Representation sub;
  Matrix coords;  // ext_dim x 1

  static ExtClass zero(const Representation& quotient, const Representation& sub);
  static ExtClass from_raw(const Representation& quotient, const Representation& sub, const std::vector<Matrix>& raw);
  [[nodiscard]] std::vector<Matrix> raw() const;
  [[nodiscard]] bool is_zero() const { return coords.is_zero(); }
  [[nodiscard]] ExtClass scaled(linalg::Elem s) const;

  friend bool operator==(const ExtClass& a, const ExtClass& b) {
    return a.quotient == b.quotient && a.sub == b.sub && a.coords == b.coords;
  }
  friend ExtClass operator+(const ExtClass& a, const ExtClass& b);
  friend ExtClass operator-(const ExtClass& a);
  friend ExtClass operator-(const ExtClass& a, const ExtClass& b) { return a + (-b); }
};

struct ShortExact {
  RepMorphism inclusion;   // sub -> middle
  RepMorphism projection;  // middle -> quotient

  [[nodiscard]] const Representation& sub() const { return inclusion.source(); }
  [[nodiscard]] const Representation& middle() const { return inclusion.target(); }
  [[nodiscard]] const Representation& quotient() const { return projection.target(); }
  /// Throws Error naming the violated condition.
  void validate() const;
};

/// Middle term E_i = sub_i (+) quotient_i with arrows [[B_a, e_a], [0, A_a]].
ShortExact extension_middle(const ExtClass& e);

/// Inverse of extension_middle up to equivalence of extensions.
ExtClass ses_class(const ShortExact& s);

/// Pull back along pre: A' -> A and/or push out along post: B -> B'.
ExtClass transport_ext(const ExtClass& e, const std::optional<RepMorphism>& pre,
                       const std::optional<RepMorphism>& post);

struct Factorization {
  RepMorphism kernel;    // K -> X
  RepMorphism coimage;   // X -> I (epi)
  RepMorphism image;     // I -> Y (mono)
  RepMorphism cokernel;  // Y -> C
};

Factorization factorize(const RepMorphism& f);

}  // namespace trihered
