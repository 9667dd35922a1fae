#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lietype/budget.hpp"
#include "lietype/gfq.hpp"
#include "lietype/root_system.hpp"

namespace lietype {

// Dense matrix over F_q.  Entries reference the Fq table by pointer; the
// table must outlive every matrix built over it.
class FqMatrix {
 public:
  FqMatrix() = default;
  FqMatrix(const Fq* field, int rows, int cols);  // zero-filled
  static FqMatrix identity(const Fq& field, int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Fq& field() const { return *field_; }

  FqElem at(int i, int j) const { return a_[i * cols_ + j]; }
  FqElem& at(int i, int j) { return a_[i * cols_ + j]; }

  FqMatrix operator*(const FqMatrix& o) const;
  bool operator==(const FqMatrix& o) const;
  bool operator!=(const FqMatrix& o) const { return !(*this == o); }

  FqMatrix add(const FqMatrix& o) const;
  FqMatrix sub(const FqMatrix& o) const;
  FqMatrix transpose() const;
  FqMatrix pow(std::uint64_t e) const;
  FqElem det() const;       // square only
  FqMatrix inverse() const; // throws invalid_argument when singular

  bool is_zero() const;
  bool is_identity() const;
  bool is_diagonal() const;
  bool is_upper_unitriangular() const;

  // Canonical byte string; equal matrices over the same field share it.
  std::string key() const;
  std::string to_string() const;  // rows of coordinate vectors

 private:
  const Fq* field_ = nullptr;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<FqElem> a_;
};

// Reduced row echelon form of the row space: pivots 1, zeros above and
// below, zero rows dropped.  The result is the canonical basis matrix of
// the row space.
FqMatrix row_space_rref(const FqMatrix& m);
int matrix_rank(const FqMatrix& m);

// Least k >= 1 with x^k = 1.
int element_order(const FqMatrix& x, std::uint64_t cap = 1u << 20);

// (x - 1)^n = 0, equivalently the order of x is a power of p.
bool is_unipotent(const FqMatrix& x);

enum class Family { GL, SL, Sp };

Family family_from_string(const std::string& s);
std::string family_to_string(Family f);

// A matrix realization of GL_n, SL_n or Sp_n over F_q, with its maximal
// torus T (diagonal), Borel B = U.T (upper triangular), unipotent radical
// U, and one-parameter root subgroups x_alpha attached to the roots of the
// associated system: A_{n-1} for GL/SL, C_{n/2} for Sp (A_1 when n = 2).
//
// Sp preserves the antidiagonal form J with +1 in the upper half and -1 in
// the lower; its torus is diag(t_1..t_m, t_m^-1..t_1^-1).  Every root
// subgroup is realized by one (long roots) or two (short roots) matrix
// entries, so positive root subgroups are upper triangular and the
// coordinate of u in U at a root is read off by elimination.
class LieGroupData {
 public:
  static LieGroupData build(Family family, int n,
                            std::shared_ptr<const Fq> field);

  Family family() const { return family_; }
  int n() const { return n_; }
  const Fq& field() const { return *field_; }
  std::shared_ptr<const Fq> field_ptr() const { return field_; }
  const RootSystem& roots() const { return roots_; }
  const FqMatrix* symplectic_form() const {
    return family_ == Family::Sp ? &form_ : nullptr;
  }

  FqMatrix identity() const { return FqMatrix::identity(*field_, n_); }

  // All roots, positive first (in (height, lex) order), then negatives.
  std::vector<RootCoords> all_roots() const;

  // x_alpha(c); throws when alpha is not a root of this group's system.
  FqMatrix root_subgroup_element(const RootCoords& alpha, FqElem c) const;

  // The matrix position whose entry carries the coordinate of x_alpha(c).
  std::pair<int, int> root_leading_entry(const RootCoords& alpha) const;

  // alpha(t) for diagonal t: the scalar with t x_alpha(c) t^-1 = x_alpha(alpha(t) c).
  FqElem root_character(const RootCoords& alpha, const FqMatrix& t) const;

  // Torus: GL takes n nonzero parameters, SL n with product 1, Sp m = n/2.
  int torus_rank() const;
  FqMatrix torus_element(const std::vector<FqElem>& params) const;
  std::uint64_t torus_order() const;
  std::vector<FqMatrix> torus_elements(
      std::uint64_t budget = kDefaultElementBudget) const;
  std::vector<FqMatrix> torus_generators() const;

  bool in_group(const FqMatrix& x) const;

  // Unique normal form u = prod x_alpha(c_alpha) over positive roots in
  // (height, lex) order, extracted by elimination; nullopt when x is not
  // in U.
  std::optional<std::vector<FqElem>> u_coordinates(const FqMatrix& x) const;
  bool in_U(const FqMatrix& x) const { return u_coordinates(x).has_value(); }

  // Membership in U_s = prod of positive root subgroups other than X_s:
  // the normal-form coordinate at alpha_s vanishes.  Throws when x is not
  // in U.
  bool in_U_s(const FqMatrix& x, int s) const;
  FqElem simple_coordinate(const FqMatrix& x, int s) const;

  std::uint64_t U_order() const;  // q^{|Phi+|}
  std::vector<FqMatrix> enumerate_U(
      std::uint64_t budget = kDefaultElementBudget) const;
  void for_each_in_U(const std::function<void(const FqMatrix&)>& fn,
                     std::uint64_t budget = kDefaultElementBudget) const;

  // x_alpha(b) for every positive root and every F_p-basis element b.
  std::vector<FqMatrix> U_generators() const;

 private:
  LieGroupData(Family family, int n, std::shared_ptr<const Fq> field,
               RootSystem roots);

  struct EntryTemplate {
    std::vector<std::array<int, 3>> entries;  // row, col, sign
  };

  Family family_;
  int n_;
  std::shared_ptr<const Fq> field_;
  RootSystem roots_;
  FqMatrix form_;  // Sp only
  std::map<RootCoords, EntryTemplate> templates_;
  std::vector<int> simple_position_;  // index of alpha_s among positive roots

  const EntryTemplate& entry_template(const RootCoords& alpha) const;
  void self_check() const;
};

}  // namespace lietype
