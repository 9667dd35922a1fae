#pragma once

#include <cstdint>
#include <vector>

#include "lietype/budget.hpp"
#include "lietype/matrix_group.hpp"

namespace lietype {

// The image of the character alpha: T -> F_q^x through which the torus
// acts on the root subgroup X_alpha, computed by an exhaustive torus sweep,
// together with the divisors of the index predicted from lattice
// divisibility.
struct RootActionReport {
  RootCoords root;
  std::vector<FqElem> image;  // subgroup of F_q^x, sorted lex
  std::uint32_t index = 1;    // [F_q^x : image]
  std::vector<std::uint32_t> predicted_divisors;
};

// Solves t x_alpha(1) t^-1 = x_alpha(c_t) for every t in T and collects the
// c_t.  A conjugate falling outside the root subgroup is a logic error.
RootActionReport root_action_image(
    const LieGroupData& g, const RootCoords& alpha,
    std::uint64_t budget = kDefaultElementBudget);

// {n : n | q-1 and n | divisibility of alpha in the lattice}; these are
// exactly the n dividing the index of im(alpha) when the group's character
// lattice is the given one.
std::vector<std::uint32_t> predicted_index_divisors(const RootSystem& rs,
                                                    LatticeKind lattice,
                                                    const RootCoords& alpha,
                                                    std::uint32_t q);

// The index the character lattice of the family forces: 1 for GL and for
// SL_n with n >= 3; gcd(2, q-1) for SL_2 and for the long roots of Sp;
// 1 for short Sp roots.
std::uint32_t expected_root_index(const LieGroupData& g,
                                  const RootCoords& alpha);

// Every root's computed index equals the family expectation and divides
// the weight-lattice divisibility bound.
bool cross_check(const LieGroupData& g,
                 std::uint64_t budget = kDefaultElementBudget);

}  // namespace lietype
