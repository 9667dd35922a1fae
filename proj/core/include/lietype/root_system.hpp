#pragma once

#include <set>
#include <string>
#include <vector>

namespace lietype {

enum class DynkinType : char {
  A = 'A',
  B = 'B',
  C = 'C',
  D = 'D',
  E = 'E',
  F = 'F',
  G = 'G'
};

DynkinType dynkin_type_from_char(char c);

// Which lattice a divisibility question refers to: the root lattice ZPhi or
// the weight lattice spanned by the fundamental weights.
enum class LatticeKind { RootLattice, WeightLattice };

// A root, as its integer coordinate vector in the simple-root basis.
using RootCoords = std::vector<int>;

std::string root_to_string(const RootCoords& c);  // e.g. "a1+2a2"

// Reduced crystallographic root system, stored entirely in simple-root
// coordinates: no Euclidean embedding, all data integral.
//
// Cartan convention: cartan()[i][j] = <alpha_j, alpha_i-check>, so the
// weight coordinates of a root with simple coordinates c are cartan() * c,
// and a simple root's weight coordinates form a column of the matrix.  The
// orientation is pinned at construction: type C (not B) is the one whose
// long simple root gives a column divisible by 2.
class RootSystem {
 public:
  // Valid data: A_n (n>=1), B_n (n>=2), C_n (n>=2), D_n (n>=4), E_6..E_8,
  // F_4, G_2.
  RootSystem(DynkinType type, int rank);

  DynkinType type() const { return type_; }
  int rank() const { return rank_; }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  // Positive roots from reflection closure, ordered by (height, lex).
  const std::vector<RootCoords>& positive_roots() const {
    return positive_roots_;
  }

  bool is_positive_root(const RootCoords& c) const;
  bool is_root(const RootCoords& c) const;
  RootCoords simple_root(int s) const;
  int positive_root_index(const RootCoords& c) const;  // -1 if absent

  int height(const RootCoords& c) const;  // throws unless c is positive
  int coxeter_number() const { return coxeter_; }
  bool is_good_prime(int p) const;

  std::vector<int> weight_coords(const RootCoords& c) const;
  int divisibility_in_lattice(const RootCoords& c, LatticeKind kind) const;

  // Simple reflection s on coordinate vectors.
  RootCoords reflect(int s, const RootCoords& c) const;

  // Length data from the symmetrizer of the Cartan matrix.  In a
  // single-length system every root is long.
  bool is_long_root(const RootCoords& c) const;

 private:
  DynkinType type_;
  int rank_;
  int coxeter_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<RootCoords> positive_roots_;
  std::set<RootCoords> positive_set_;
  std::vector<long long> symmetrizer_;  // d_i with d_i C_ij = d_j C_ji
  long long max_norm_ = 0;

  long long root_norm(const RootCoords& c) const;
};

}  // namespace lietype
