// The lifting functor F from bounded complexes to the formal model, and its
// property verification.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trihered/complexes.hpp"
#include "trihered/formal.hpp"
#include "trihered/report.hpp"

namespace trihered {

/// (+)_n H^n(C)[-n] with the bases of strictify().
FormalObject F_object(const Complex& c);

/// Hom parts H^n(f); Ext parts read off the standard projective replacement of f.
FormalMorphism F_morphism(const ChainMap& f);

/// F on a chain map between complexes with projective terms, computed on the complexes
/// themselves (their own splitting into two-term resolutions of the cohomology).
FormalMorphism F_projective(const ChainMap& g);

struct EquivalenceOptions {
  std::size_t trials = 100;
  std::uint64_t seed = 7;
  DegreeWindow window{-1, 1};  // degrees of random complexes
  std::size_t max_dim = 2;     // per-vertex dimension bound of random terms
};

using FunctorCheck = CheckStat;
using FunctorFailure = CheckFailure;
using FunctorReport = CheckReport;

/// Functoriality, additivity, shift, full faithfulness (dimensions and ranks),
/// essential surjectivity and exactness on mapping-cone triangles.
FunctorReport verify_equivalence(const QuiverPtr& q, const EquivalenceOptions& options);

}  // namespace trihered
