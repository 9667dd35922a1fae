#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lietype/gfq.hpp"

namespace lietype {

// A monomial of the bigraded algebra E(a_0..a_{r-1}) (x) F_p[b_0..b_{r-1}]
// modelling H^*(F_{p^r}; F_p) for odd p; for p = 2 there is no exterior
// part and the b_i have degree 1.  The F_q^x-action gives a_i and b_i
// weight p^i mod (q-1).
struct Monomial {
  std::vector<std::uint8_t> exterior;  // 0/1 per index, all zero when p = 2
  std::vector<std::uint32_t> powers;   // polynomial exponents
  int coeff = 1;                       // in [0, p)

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exterior == b.exterior && a.powers == b.powers &&
           a.coeff == b.coeff;
  }
};

// The invariants of the index-d subgroup of F_q^x acting on the monomial
// basis: d = 1 is the full group (the GL_2(F_q) invariants), d = 2 the
// squares (the SL_2(F_q) invariants).
class InvariantModel {
 public:
  InvariantModel(int p, int r, std::uint32_t subgroup_index);

  int p() const { return p_; }
  int r() const { return r_; }
  std::uint32_t q() const { return q_; }
  std::uint32_t subgroup_index() const { return d_; }

  std::uint32_t generator_weight(int i) const;  // p^i mod (q-1)

  int degree(const Monomial& m) const;
  std::uint32_t weight(const Monomial& m) const;  // mod q-1
  bool is_invariant_weight(std::uint32_t w) const;

  std::vector<Monomial> monomial_basis(int degree) const;

  // Number of degree-m basis monomials of weight 0 mod (q-1)/d.
  std::uint64_t invariant_dimension(int degree) const;

  // Least m >= 1 with invariant_dimension(m) > 0.
  int first_nonzero_degree() const;

  // The canonical invariant witness, p odd, d in {1,2}:
  //   d = 2: a_0...a_{r-1} (b_0...b_{r-1})^{(p-3)/2}, degree r(p-2);
  //   d = 1: a_0...a_{r-1} (b_0...b_{r-1})^{p-2},     degree r(2p-3).
  // Degree and invariance are verified, not assumed.
  Monomial explicit_generator() const;

  // The derivation with beta(a_i) = b_i, beta(b_i) = 0 and
  // beta(xy) = beta(x) y + (-1)^{|x|} x beta(y).  Odd p only.
  std::vector<Monomial> bockstein(const std::vector<Monomial>& sum) const;

  // Independent route: diagonalize the action of a generator of the
  // index-d subgroup on the degree-m basis and count eigenvalue-1 vectors
  // by exact field arithmetic (repeated multiplication, no weight
  // reduction).  Matches invariant_dimension.
  std::uint64_t brute_force_invariant_dimension(
      int degree, const Fq* field = nullptr) const;

  // Combine like terms mod p, drop zeros, sort.
  std::vector<Monomial> normalize(std::vector<Monomial> sum) const;

  std::string monomial_string(const Monomial& m) const;
  std::string sum_string(const std::vector<Monomial>& sum) const;

 private:
  int p_, r_;
  std::uint32_t q_, d_;
};

}  // namespace lietype
