#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lietype {

// Element of F_{p^r}.  `code` packs the coordinate vector (c_0,...,c_{r-1})
// in the power basis of the modulus root, as sum c_i p^i.  Codes are only
// meaningful relative to the Fq table the element came from.
struct FqElem {
  std::uint16_t code = 0;

  friend constexpr bool operator==(FqElem a, FqElem b) {
    return a.code == b.code;
  }
};

// Arithmetic table for F_q, q = p^r <= 2^16, over an explicit monic
// irreducible modulus.  Multiplication and inversion run on log/antilog
// tables built from a fixed generator of F_q^x; addition is digitwise mod p.
//
// Immutable after construction; all operations are const and pure.
class Fq {
 public:
  // modulus: coefficients low to high, length r+1, monic, irreducible over
  // F_p (checked by trial division against all lower-degree monics).  When
  // omitted, the lexicographically least monic irreducible is chosen.
  Fq(int p, int r, std::optional<std::vector<int>> modulus = std::nullopt);

  int p() const { return p_; }
  int r() const { return r_; }
  std::uint32_t q() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }
  std::string modulus_string() const;

  FqElem zero() const { return {0}; }
  FqElem one() const { return {1}; }
  bool is_zero(FqElem a) const { return a.code == 0; }

  // Image of an integer in the prime subfield.
  FqElem from_int(long long v) const;
  FqElem from_coeffs(const std::vector<int>& c) const;
  std::vector<int> coeffs(FqElem a) const;
  std::string to_string(FqElem a) const;  // coordinate vector, e.g. "[0,1]"

  FqElem add(FqElem a, FqElem b) const;
  FqElem sub(FqElem a, FqElem b) const;
  FqElem neg(FqElem a) const;
  FqElem mul(FqElem a, FqElem b) const;
  FqElem inv(FqElem a) const;
  FqElem pow(FqElem a, std::uint64_t e) const;
  FqElem frobenius(FqElem a) const {
    return pow(a, static_cast<std::uint64_t>(p_));
  }

  // Total order on elements: lexicographic on coordinate vectors, c_0 major.
  std::uint32_t lex_index(FqElem a) const;
  FqElem element_at_lex(std::uint32_t idx) const;
  bool lex_less(FqElem a, FqElem b) const {
    return lex_index(a) < lex_index(b);
  }

  // The least generator of F_q^x in lexicographic coordinate order.
  FqElem primitive_element() const { return generator_; }
  std::uint32_t mult_order(FqElem a) const;

  // The power basis 1, t, ..., t^{r-1}.
  std::vector<FqElem> fp_basis() const;

  // {x^d : x in F_q^x} for d | q-1; a subgroup of index d, sorted lex.
  std::vector<FqElem> power_subgroup(std::uint32_t d) const;

 private:
  int p_ = 0;
  int r_ = 0;
  std::uint32_t q_ = 0;
  std::vector<int> modulus_;
  FqElem generator_{0};
  std::vector<std::uint16_t> exp_;  // exp_[k] = generator^k, 0 <= k < q-1
  std::vector<std::uint32_t> log_;  // log_[code] for nonzero codes

  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t slow_pow(std::uint32_t a, std::uint64_t e) const;
};

}  // namespace lietype
