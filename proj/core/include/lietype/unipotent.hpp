#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lietype/budget.hpp"
#include "lietype/matrix_group.hpp"

namespace lietype {

// A complete flag V_1 < ... < V_{n-1} in F_q^n.  Each V_k is stored as its
// canonical k x n reduced-row-echelon basis matrix, so flags compare and
// hash by exact equality.
struct Flag {
  std::vector<FqMatrix> subspaces;

  int n() const {
    return subspaces.empty() ? 0 : subspaces.front().cols();
  }
  bool operator==(const Flag& o) const { return subspaces == o.subspaces; }
  bool operator!=(const Flag& o) const { return !(*this == o); }
  std::string key() const;
};

// prod_{k=1..n} (q^k - 1)/(q - 1)
std::uint64_t complete_flag_count(std::uint32_t q, int n);

Flag standard_flag(const Fq& field, int n);
std::vector<Flag> enumerate_flags(const Fq& field, int n,
                                  std::uint64_t budget = kDefaultFlagBudget);

// Image x.V_1 < ... < x.V_{n-1}, re-echelonized.
Flag transform_flag(const FqMatrix& x, const Flag& f);
bool flag_fixed_by(const FqMatrix& x, const Flag& f);

// x in U is regular unipotent iff it lies in no U_s, i.e. every
// simple-root coordinate of its normal form is nonzero.  Throws when x is
// not in U.
bool is_regular_unipotent(const LieGroupData& g, const FqMatrix& x);

// Flags fixed by every element of S.  GL/SL only: the complete flag
// variety realizes G/B for those families.
std::vector<Flag> fixed_flags(const LieGroupData& g,
                              const std::vector<FqMatrix>& S,
                              std::uint64_t flag_budget = kDefaultFlagBudget);

// Orbit sizes (size -> number of orbits) of a subgroup acting on all flags.
std::map<std::uint64_t, std::uint64_t> orbit_decomposition(
    const LieGroupData& g, const std::vector<FqMatrix>& subgroup,
    std::uint64_t flag_budget = kDefaultFlagBudget);

// An elementary abelian p-subgroup of rank r all of whose nontrivial
// elements are regular unipotent.
struct RegularSubgroup {
  std::vector<FqMatrix> generators;
  std::vector<FqMatrix> elements;  // all p^r of them
};

// The generating matrices behind build_regular_subgroup, with no
// precondition on the Coxeter number: GL/SL get I + lambda J (J the full
// superdiagonal, lambda over the F_p-basis), Sp gets the single product
// prod_s x_{alpha_s}(1).  Each generator is itself regular unipotent.
std::vector<FqMatrix> regular_unipotent_generators(const LieGroupData& g);

// Requires GL/SL with n <= p (any r), or Sp with h <= p and r = 1.  Every
// invariant is verified before returning; a verification failure is a
// logic_error, not user error.
RegularSubgroup build_regular_subgroup(const LieGroupData& g);

// a -> (coordinate of a at alpha_s) is a bijection A -> F_q.
bool composite_iso_check(const LieGroupData& g, const RegularSubgroup& A,
                         int s);

// Closure of a generating set under multiplication (the subgroup, since
// everything is finite).  Identity is included.
std::vector<FqMatrix> generated_subgroup(
    const FqMatrix& id, const std::vector<FqMatrix>& generators,
    std::uint64_t budget = kDefaultElementBudget);

// Generator sets of U_{ht>=1} >= U_{ht>=2} >= ... >= U_{ht>=h}; the last
// level is empty (the trivial group).
std::vector<std::vector<FqMatrix>> height_filtration(const LieGroupData& g);

// [U, C_k] <= C_{k+1} for consecutive levels of the chain, where U is the
// closure of the first level.  Commutators run over all element pairs when
// that fits the budget, over generator pairs otherwise.
bool is_central_series(const LieGroupData& g,
                       const std::vector<std::vector<FqMatrix>>& chain,
                       std::uint64_t budget = kDefaultElementBudget);

// lcm of element orders over all of U; a power of p.
std::uint64_t exponent_of_U(const LieGroupData& g,
                            std::uint64_t budget = kDefaultElementBudget);

// |gamma_1|, |gamma_2|, ... down to 1, where gamma_1 = U and
// gamma_{k+1} = [U, gamma_k].  The nilpotence class is the number of
// brackets taken, i.e. size() - 1.
std::vector<std::uint64_t> lower_central_series_orders(
    const LieGroupData& g, std::uint64_t budget = kDefaultElementBudget);

// [x_alpha(c), x_beta(c')] lies in the subgroup generated by the
// X_{i alpha + j beta} with i, j > 0, for all pairs of distinct positive
// roots and all field values.
bool chevalley_commutator_check(const LieGroupData& g,
                                std::uint64_t budget = kDefaultElementBudget);

}  // namespace lietype
