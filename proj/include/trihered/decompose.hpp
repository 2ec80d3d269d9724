// Krull-Schmidt decomposition of representations and enumeration of the
// indecomposables of a Dynkin quiver.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "trihered/homext.hpp"

namespace trihered {

class Unsupported : public Error {
 public:
  using Error::Error;
};

struct Summand {
  Representation rep;
  RepMorphism inclusion;   // rep -> X
  RepMorphism projection;  // X -> rep
};

inline constexpr std::size_t kDefaultSplitRetries = 64;

/// Splits X by generalised eigenspaces of random endomorphisms until every piece
/// survives `retries` attempts. Summands are ordered by dimension vector.
std::vector<Summand> decompose_rep(const Representation& x, std::uint64_t seed = 0,
                                   std::size_t retries = kDefaultSplitRetries);

/// Distinct roots in F_p of a polynomial (constant term first), ascending.
std::vector<linalg::Elem> roots_mod_p(const std::vector<linalg::Elem>& poly, std::uint64_t seed = 1);

/// BGP reflection at a source k: returns the representation of Q reflected at k.
Representation reflect_at_source(const Representation& v, std::size_t k, const QuiverPtr& reflected);

/// One representative per isomorphism class, in preprojective (reflection) order.
/// Throws Unsupported unless the quiver is of Dynkin type.
std::vector<Representation> indecomposables(const QuiverPtr& quiver);

struct Indecomposable {
  Representation rep;
  std::string label;                 // "S1", "P2", "I3" or "M(1,1,0)"
  std::vector<std::string> aliases;  // every S/P/I name that applies
};

/// Labelled enumeration; dimension vectors are distinct for Dynkin quivers.
std::vector<Indecomposable> indecomposable_catalog(const QuiverPtr& quiver);

/// Memoised catalog per quiver and prime (per thread).
std::shared_ptr<const std::vector<Indecomposable>> catalog_for(const QuiverPtr& quiver);

/// Name of I[k]: "S1", "S1[2]", "P2[-1]".
std::string node_name(const std::string& label, int shift);

/// Finds an entry by label, alias or dimension vector text such as "(1,1,0)".
std::optional<std::size_t> find_indecomposable(const std::vector<Indecomposable>& catalog, const std::string& name);
std::optional<std::size_t> find_indecomposable(const std::vector<Indecomposable>& catalog, const DimVector& dims);

std::string dim_vector_string(const DimVector& d);

}  // namespace trihered
