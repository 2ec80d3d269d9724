// Octahedra built from cones: the forms TR4, TR4' and TR4'' of the octahedral
// axiom and the identities linking them.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trihered/formal.hpp"

namespace trihered {

struct OctaOptions {
  std::uint64_t seed = 17;
  std::size_t tries = 32;  // random points of a completion space tried after the particular one
};

///  X -f-> Y -g-> Z -h-> X[1]
///  X -f'-> Y' -g'-> Z' -h'-> X[1]      f' = u o f
///  Y -u-> Y' -v-> W -w-> Y[1]
///  Z -u'-> Z' -v'-> W -w'-> Z[1]       w' = g[1] o w
struct Octahedron {
  FormalMorphism f, u, fp;
  Triangle tf, tfp, tu;
  FormalMorphism u_prime, v_prime, w_prime;
  FormalMorphism delta;  // f[1] o h'
  FormalSum zy;          // Z (+) Y'
  Triangle dagger;       // Y -(-g; u)-> Z (+) Y' -(u', g')-> Z' -delta-> Y[1]
  Triangle column;       // (u', v', w')
};

struct IdentityCheck {
  std::string name;
  bool holds = false;
  std::string detail;
};

struct OctaReport {
  std::vector<IdentityCheck> checks;
  std::vector<std::string> notes;
  [[nodiscard]] bool passed() const;
  void add(std::string name, bool holds, std::string detail = {});
};

/// Cones of f, u o f and u; u' from the TR3 completion space chosen so that the dagger
/// triangle is distinguished; v' likewise from the second application. Throws Error
/// when no completion works.
Octahedron octahedron_tr4pp(const FormalMorphism& f, const FormalMorphism& u, const OctaOptions& options = {});

/// The TR4 identities: squares of the grid, w v' = delta = f[1] h', exactness of dagger
/// and of the third column.
OctaReport verify_octahedron(const Octahedron& o);

/// Rebuilds Z (+) Y' -> Z' (+) Y' -> W -> Z[1] (+) Y'[1] from the second application, checks it
/// is distinguished and that (-u', v', -w') is a direct summand of it.
OctaReport derive_tr4_strong(const Octahedron& o);

/// Both grids over the dagger triangle, every displayed square and column, and the route
/// back to TR4'' through the cone C of (-g; u) with the TR3 isomorphism gamma: C -> Z'.
OctaReport derive_tr4prime(const FormalMorphism& f, const FormalMorphism& u, const OctaOptions& options = {});

}  // namespace trihered
