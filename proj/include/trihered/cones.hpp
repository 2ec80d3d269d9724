// Cones in the formal model: maps between representations, pure extension
// classes, arbitrary formal morphisms, plus the realization of a formal
// morphism by chain maps and the Key Lemma assembly.
#pragma once

#include <cstdint>

#include "trihered/complexes.hpp"
#include "trihered/formal.hpp"

namespace trihered {

/// The pull-back/push-out grid of f = f2 o f1 : X -> Y in H.
///
///        K -x-> X -f1-> I
///        ||     |iota   |f2
///        K -i'-> E -pi-> Y
///               |pi'    |y
///               C ===== C
struct PBPODiagram {
  Representation K, X, I, E, Y, C;
  RepMorphism x, f1, f2, iota, iota_prime, pi, pi_prime, y;
  ExtClass epsilon;  // class of the middle row, in Ext^1(Y, K)
  ExtClass eta;      // class of the middle column, in Ext^1(C, X)

  /// Throws Error naming the first violated relation.
  void validate() const;
};

struct ConeInH {
  Triangle triangle;  // X -f-> Y -(-eps; y)-> K[1] (+) C -(x[1], eta)-> X[1]
  PBPODiagram diagram;
};

/// f a morphism of representations, viewed as a map of degree-0 stalks.
ConeInH cone_in_H(const RepMorphism& f);

/// e in Ext^1(A, B) as the morphism A[-degree] -> B[-degree+1]; the cone is the middle
/// term of e in degree degree-1.
Triangle cone_pure_ext(const ExtClass& e, int degree);
/// Same, for a morphism with zero Hom parts and exactly one (possibly zero) Ext part
/// between two stalks.
Triangle cone_pure_ext(const FormalMorphism& f);

/// f viewed on complexes with zero differential: X~ -> X a quasi-isomorphism, X~ -> Y.
struct Roof {
  Complex tilde;
  ChainMap quasi;  // X~ -> as_complex(source)
  ChainMap map;    // X~ -> as_complex(target)
};

/// (+)_n X_n in degree n, zero differential.
Complex as_complex(const FormalObject& x);

/// Each nonzero Ext part e in Ext^1(X_n, Y_{n-1}) is replaced by [Y_{n-1} -> E_n] in
/// degrees n-1, n, E_n the middle term of e.
Roof realize(const FormalMorphism& f);

/// F(map) o F(quasi)^{-1}; equals the input of realize().
FormalMorphism roof_morphism(const Roof& r);

/// Image under F of the mapping-cone triangle of realize(f).map, transported along F(quasi).
Triangle realization_cone(const FormalMorphism& f);

struct GeneralConeOptions {
  std::uint64_t seed = 11;
  std::size_t tries = 32;
};

/// Cone with components coker(f0_n) extended by ker(f0_{n+1}) in degree n. On Dynkin quivers
/// the Ext parts of g and h come from a closed-form linear system; a solution is kept only if
/// it is exact and TR3-isomorphic to realization_cone(f). Otherwise the realization cone,
/// moved onto the closed-form object when possible.
Triangle cone_general(const FormalMorphism& f, const GeneralConeOptions& options = {});
/// is_exact, and isomorphic to cone_general(t.f) by a triangle map that is the identity on
/// X and Y. The second test sees the signs that is_exact cannot.
bool is_distinguished(const Triangle& t);
/// Whether the last cone_general call on this thread used the closed form.
bool last_cone_was_closed_form();

/// The Key Lemma grid:
///   row1: I -a-> X -f'-> Y' -y'-> I[1]
///   row2: I -f''a-> Y'' -g''-> Z -b-> I[1]
///   col1: X -f''-> Y'' -y''-> E[1] -x[1]-> X[1]
///   col2: Y' -g'-> Z -z-> E[1] -(f'x)[1]-> Y'[1]
struct KeyLemmaGrid {
  Triangle row1;
  Triangle row2;
  Triangle col1;
  Triangle col2;
};

/// X -(-f'; f'')-> Y' (+) Y'' -(g', g'')-> Z -h-> X[1] with h = x[1] o z. Throws Error when a
/// grid relation or the hypothesis Hom(Y'', g') = 0 fails.
Triangle key_lemma_assemble(const KeyLemmaGrid& grid);

struct SplitOff {
  Triangle main;     // cone triangle of f': X -> Y'
  Triangle trivial;  // 0 -> Y'' -> Y'' -> 0
  Triangle sum;      // direct_sum_triangle(main, trivial), objects X, Y' (+) Y'', cone (+) Y''
  FormalMorphism iso;  // cone of the input -> cone of sum, completing (id_X, id_Y)
};

/// For t with f = (f'; 0) against Y = Y' (+) Y'' given by inclusions/projections of `split`.
/// `split.projections[1] o t.f` must vanish.
SplitOff split_off(const Triangle& t, const FormalSum& split);

/// Componentwise isomorphism test (random invertible element of Hom, per degree).
bool isomorphic(const FormalObject& a, const FormalObject& b, std::uint64_t seed = 3);
bool isomorphic(const Representation& a, const Representation& b, std::uint64_t seed = 3);

}  // namespace trihered
