// Seeded checks of the pre-triangulated axioms and the split-triangle lemmas
// on random objects and morphisms of the formal model.
#pragma once

#include "trihered/formal.hpp"
#include "trihered/report.hpp"

namespace trihered {

struct AxiomOptions {
  std::size_t trials = 50;
  std::uint64_t seed = 13;
  DegreeWindow window{0, 1};  // degrees of random objects
  std::size_t max_dim = 1;
  std::size_t conjugation_trials = 30;
  std::size_t split_trials = 30;
};

/// Checks "TR0", "TR1", "TR2", "TR3", "two-out-of-three", "direct sums" and
/// "split normalization". Throws Unsupported for non-Dynkin quivers.
CheckReport verify_axioms(const QuiverPtr& q, const AxiomOptions& options = {});

}  // namespace trihered
