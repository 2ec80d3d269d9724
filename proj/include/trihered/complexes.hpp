// Bounded cochain complexes over rep(Q), chain maps, cohomology, mapping cones,
// projective replacement and homotopy classes of chain maps.
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "trihered/formal.hpp"

namespace trihered {

class Complex {
 public:
  Complex() = default;
  explicit Complex(QuiverPtr quiver) : quiver_(std::move(quiver)) {}
  /// d^n: term(n) -> term(n+1); missing differentials are zero. Checks d o d = 0.
  Complex(QuiverPtr quiver, std::map<int, Representation> terms, std::map<int, RepMorphism> diffs);

  static Complex stalk(const Representation& x, int degree);

  [[nodiscard]] const QuiverPtr& quiver_ptr() const { return quiver_; }
  [[nodiscard]] const std::map<int, Representation>& terms() const { return terms_; }
  [[nodiscard]] const std::map<int, RepMorphism>& diffs() const { return diffs_; }
  [[nodiscard]] Representation term(int n) const;
  [[nodiscard]] RepMorphism diff(int n) const;
  [[nodiscard]] bool has(int n) const { return terms_.count(n) != 0; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] int min_degree() const;
  [[nodiscard]] int max_degree() const;

  /// C[k]: term(n) = C^{n+k}, differential (-1)^k d.
  [[nodiscard]] Complex shift(int k) const;

  /// Zero differentials compare equal whether stored or absent.
  friend bool operator==(const Complex& a, const Complex& b);

 private:
  QuiverPtr quiver_;
  std::map<int, Representation> terms_;
  std::map<int, RepMorphism> diffs_;
};

class ChainMap {
 public:
  ChainMap() = default;
  /// Missing components are zero. Checks commutation with the differentials.
  ChainMap(Complex source, Complex target, std::map<int, RepMorphism> comps);
  static ChainMap unchecked(Complex source, Complex target, std::map<int, RepMorphism> comps);

  static ChainMap zero(const Complex& source, const Complex& target);
  static ChainMap identity(const Complex& x);
  static ChainMap stalk(const RepMorphism& f, int degree);

  [[nodiscard]] const Complex& source() const { return source_; }
  [[nodiscard]] const Complex& target() const { return target_; }
  [[nodiscard]] const std::map<int, RepMorphism>& components() const { return comps_; }
  [[nodiscard]] RepMorphism component(int n) const;

  /// f[k]: component n is f^{n+k}; no sign.
  [[nodiscard]] ChainMap shift(int k) const;
  [[nodiscard]] ChainMap scaled(linalg::Elem s) const;
  [[nodiscard]] bool is_zero() const;

  friend bool operator==(const ChainMap& a, const ChainMap& b);
  friend ChainMap operator+(const ChainMap& a, const ChainMap& b);
  friend ChainMap operator-(const ChainMap& a);
  friend ChainMap operator-(const ChainMap& a, const ChainMap& b) { return a + (-b); }

 private:
  Complex source_;
  Complex target_;
  std::map<int, RepMorphism> comps_;
};

ChainMap compose(const ChainMap& g, const ChainMap& f);

/// Degreewise direct sums; a's summand first.
Complex direct_sum(const Complex& a, const Complex& b);
ChainMap direct_sum(const ChainMap& f, const ChainMap& g);

/// Cycles, boundaries and cohomology in one degree with deterministic bases.
struct CohomologyData {
  RepMorphism cycle_inclusion;     // Z^n -> C^n, columns = kernel basis of d^n
  RepMorphism boundary_inclusion;  // B^n -> Z^n
  RepMorphism to_cohomology;       // Z^n -> H^n
  std::vector<Matrix> lift;        // per vertex H^n_v -> Z^n_v (standard complement)

  [[nodiscard]] const Representation& cycles() const { return cycle_inclusion.source(); }
  [[nodiscard]] const Representation& boundaries() const { return boundary_inclusion.source(); }
  [[nodiscard]] const Representation& cohomology() const { return to_cohomology.target(); }
};

CohomologyData cohomology_data(const Complex& c, int n);
Representation cohomology(const Complex& c, int n);
/// H^n(f)
RepMorphism induced_map(const ChainMap& f, int n);
bool is_quasi_isomorphism(const ChainMap& f);
bool is_acyclic(const Complex& c);

struct MappingCone {
  Complex cone;  // C^n = X^{n+1} (+) Y^n, d = [[-d_X, 0], [f, d_Y]]
  ChainMap g;    // Y -> C
  ChainMap h;    // C -> X[1]
};

MappingCone mapping_cone(const ChainMap& f);

struct Replacement {
  Complex complex;  // terms projective
  ChainMap quasi;   // complex -> original, a quasi-isomorphism
};

/// The original complex with the identity when all terms are projective,
/// otherwise the standard replacement.
Replacement projective_replacement(const Complex& c);

/// Total complex of the functorial two-term resolutions 0 -> S1(X) -> S0(X) -> X -> 0,
/// S0(X) = (+)_i P_i (x) X_i and S1(X) = (+)_{a} P_{t(a)} (x) X_{s(a)}.
/// Strictly compatible with shifts: standard(C[1]) = standard(C)[1].
Replacement standard_replacement(const Complex& c);
/// The induced map standard(X) -> standard(Y), strictly functorial.
ChainMap standard_replacement(const ChainMap& f);

/// Basis of all chain maps X -> Y.
std::vector<ChainMap> chain_map_basis(const Complex& x, const Complex& y);

struct HomotopyClasses {
  std::size_t dim = 0;
  std::vector<ChainMap> basis;  // representatives of a basis of the quotient
};

/// Chain maps modulo null-homotopic maps; both complexes must have projective terms.
HomotopyClasses hom_mod_homotopy(const Complex& p, const Complex& q);

/// Coordinates of a chain map in the quotient basis of hom_mod_homotopy(source, target).
Matrix homotopy_class_coords(const ChainMap& f);

struct Strictification {
  Complex object;
  FormalObject formal;                   // H^n(C) in degree n
  std::map<int, CohomologyData> data;    // nonzero-cohomology degrees
};

Strictification strictify(const Complex& c);

/// Random complex with terms in degrees [lo, hi]; each d^n is a random element of
/// {phi : phi o d^{n-1} = 0}.
Complex random_complex(const QuiverPtr& q, int lo, int hi, std::size_t max_dim, std::uint64_t seed);
ChainMap random_chain_map(const Complex& x, const Complex& y, std::uint64_t seed);
Representation random_representation(const QuiverPtr& q, std::size_t max_dim, std::uint64_t seed);
/// Random components in every degree of the window.
FormalObject random_formal_object(const QuiverPtr& q, const DegreeWindow& w, std::size_t max_dim, std::uint64_t seed);
/// Uniform element of Hom(x, y).
FormalMorphism random_formal_morphism(const FormalObject& x, const FormalObject& y, std::uint64_t seed);
/// Random invertible endomorphism of x (identity if none is found).
FormalMorphism random_automorphism(const FormalObject& x, std::uint64_t seed);

}  // namespace trihered
