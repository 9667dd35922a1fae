#include "lietype/invariant_ring.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>

namespace lietype {
namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// All length-r vectors of nonnegative integers with the given sum, in lex
// order.
void exponent_vectors(int r, int total,
                      const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
  std::vector<std::uint32_t> e(r, 0);
  const std::function<void(int, int)> rec = [&](int i, int rem) {
    if (i == r - 1) {
      e[i] = static_cast<std::uint32_t>(rem);
      fn(e);
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      e[i] = static_cast<std::uint32_t>(v);
      rec(i + 1, rem - v);
    }
  };
  if (r > 0) rec(0, total);
}

}  // namespace

InvariantModel::InvariantModel(int p, int r, std::uint32_t subgroup_index)
    : p_(p), r_(r), d_(subgroup_index) {
  if (!is_prime(p))
    throw std::invalid_argument("InvariantModel: p must be prime");
  if (r < 1) throw std::invalid_argument("InvariantModel: r must be positive");
  std::uint64_t q = 1;
  for (int i = 0; i < r; ++i) {
    q *= static_cast<std::uint64_t>(p);
    if (q > 65536)
      throw std::invalid_argument("InvariantModel: q = p^r exceeds 2^16");
  }
  q_ = static_cast<std::uint32_t>(q);
  if (d_ == 0 || (q_ - 1) % d_ != 0)
    throw std::invalid_argument("InvariantModel: index must divide q-1");
  if (q_ > 2) {
    // generator weights p^i are pairwise distinct mod q-1
    std::vector<std::uint32_t> w;
    for (int i = 0; i < r_; ++i) w.push_back(generator_weight(i));
    std::sort(w.begin(), w.end());
    if (std::adjacent_find(w.begin(), w.end()) != w.end())
      throw std::logic_error("InvariantModel: weight collision");
  }
}

std::uint32_t InvariantModel::generator_weight(int i) const {
  std::uint64_t w = 1;
  for (int k = 0; k < i; ++k) w = (w * p_) % (q_ - 1);
  return static_cast<std::uint32_t>(w % (q_ - 1));
}

int InvariantModel::degree(const Monomial& m) const {
  int d = 0;
  for (std::uint8_t e : m.exterior) d += e;
  for (std::uint32_t e : m.powers) d += static_cast<int>(p_ == 2 ? e : 2 * e);
  return d;
}

std::uint32_t InvariantModel::weight(const Monomial& m) const {
  if (q_ == 2) return 0;
  std::uint64_t w = 0;
  std::uint64_t pi = 1;
  for (int i = 0; i < r_; ++i) {
    const std::uint64_t mult =
        (i < static_cast<int>(m.exterior.size()) ? m.exterior[i] : 0) +
        (i < static_cast<int>(m.powers.size()) ? m.powers[i] : 0);
    w = (w + mult * (pi % (q_ - 1))) % (q_ - 1);
    pi = (pi * p_) % (q_ - 1);
  }
  return static_cast<std::uint32_t>(w);
}

bool InvariantModel::is_invariant_weight(std::uint32_t w) const {
  return w % ((q_ - 1) / d_) == 0;
}

std::vector<Monomial> InvariantModel::monomial_basis(int deg) const {
  std::vector<Monomial> out;
  if (deg < 0) return out;
  if (p_ == 2) {
    exponent_vectors(r_, deg, [&](const std::vector<std::uint32_t>& e) {
      out.push_back(Monomial{std::vector<std::uint8_t>(r_, 0), e, 1});
    });
    return out;
  }
  for (std::uint32_t mask = 0; mask < (1u << r_); ++mask) {
    int ext = 0;
    std::vector<std::uint8_t> eps(r_, 0);
    for (int i = 0; i < r_; ++i)
      if (mask & (1u << i)) {
        eps[i] = 1;
        ++ext;
      }
    const int rem = deg - ext;
    if (rem < 0 || rem % 2 != 0) continue;
    exponent_vectors(r_, rem / 2, [&](const std::vector<std::uint32_t>& e) {
      out.push_back(Monomial{eps, e, 1});
    });
  }
  return out;
}

std::uint64_t InvariantModel::invariant_dimension(int deg) const {
  std::uint64_t count = 0;
  for (const Monomial& m : monomial_basis(deg))
    if (is_invariant_weight(weight(m))) ++count;
  return count;
}

int InvariantModel::first_nonzero_degree() const {
  // (b_0...b_{r-1})^{p-1} is always invariant, so the search terminates.
  const int cap = p_ == 2 ? r_ : 2 * r_ * (p_ - 1);
  for (int m = 1; m <= cap; ++m)
    if (invariant_dimension(m) > 0) return m;
  throw std::logic_error("InvariantModel: no invariant found below cap");
}

Monomial InvariantModel::explicit_generator() const {
  if (p_ == 2)
    throw std::invalid_argument("InvariantModel: no exterior witness for p = 2");
  if (d_ != 1 && d_ != 2)
    throw std::invalid_argument("InvariantModel: witness known for d in {1,2}");
  Monomial m;
  m.exterior.assign(r_, 1);
  m.powers.assign(r_, static_cast<std::uint32_t>(d_ == 2 ? (p_ - 3) / 2
                                                         : p_ - 2));
  m.coeff = 1;
  const int expect = d_ == 2 ? r_ * (p_ - 2) : r_ * (2 * p_ - 3);
  if (degree(m) != expect)
    throw std::logic_error("InvariantModel: witness degree mismatch");
  if (!is_invariant_weight(weight(m)))
    throw std::logic_error("InvariantModel: witness not invariant");
  return m;
}

std::vector<Monomial> InvariantModel::bockstein(
    const std::vector<Monomial>& sum) const {
  if (p_ == 2)
    throw std::invalid_argument("InvariantModel: Bockstein branch needs odd p");
  std::vector<Monomial> out;
  for (const Monomial& m : sum) {
    int before = 0;  // exterior factors passed over: each contributes a sign
    for (int i = 0; i < r_; ++i) {
      if (!m.exterior[i]) continue;
      Monomial t = m;
      t.exterior[i] = 0;
      t.powers[i] += 1;
      const int sign = before % 2 == 0 ? 1 : p_ - 1;
      t.coeff = (m.coeff * sign) % p_;
      out.push_back(t);
      ++before;
    }
  }
  return normalize(std::move(out));
}

std::uint64_t InvariantModel::brute_force_invariant_dimension(
    int deg, const Fq* field) const {
  std::optional<Fq> own;
  if (field == nullptr) {
    own.emplace(p_, r_);
    field = &*own;
  }
  if (field->p() != p_ || field->r() != r_)
    throw std::invalid_argument("InvariantModel: field does not match model");
  const Fq& F = *field;
  // generator of the index-d subgroup of F_q^x
  const FqElem gamma = F.pow(F.primitive_element(), d_);
  // gamma^{p^i} by iterated Frobenius
  std::vector<FqElem> gpow{gamma};
  for (int i = 1; i < r_; ++i) gpow.push_back(F.frobenius(gpow.back()));

  std::uint64_t count = 0;
  for (const Monomial& m : monomial_basis(deg)) {
    FqElem eig = F.one();
    for (int i = 0; i < r_; ++i) {
      const std::uint32_t mult = m.exterior[i] + m.powers[i];
      for (std::uint32_t k = 0; k < mult; ++k) eig = F.mul(eig, gpow[i]);
    }
    if (eig == F.one()) ++count;
  }
  return count;
}

std::vector<Monomial> InvariantModel::normalize(std::vector<Monomial> sum) const {
  std::map<std::pair<std::vector<std::uint8_t>, std::vector<std::uint32_t>>, int>
      acc;
  for (Monomial& m : sum) {
    int c = m.coeff % p_;
    if (c < 0) c += p_;
    acc[{m.exterior, m.powers}] = (acc[{m.exterior, m.powers}] + c) % p_;
  }
  std::vector<Monomial> out;
  for (const auto& [key, c] : acc)
    if (c != 0) out.push_back(Monomial{key.first, key.second, c});
  return out;
}

std::string InvariantModel::monomial_string(const Monomial& m) const {
  std::vector<std::string> factors;
  for (int i = 0; i < r_; ++i)
    if (i < static_cast<int>(m.exterior.size()) && m.exterior[i])
      factors.push_back("a" + std::to_string(i));
  for (int i = 0; i < r_; ++i) {
    const std::uint32_t e =
        i < static_cast<int>(m.powers.size()) ? m.powers[i] : 0;
    if (e == 0) continue;
    factors.push_back("b" + std::to_string(i) +
                      (e > 1 ? "^" + std::to_string(e) : ""));
  }
  std::string s = m.coeff == 1 ? "" : std::to_string(m.coeff) + "*";
  if (factors.empty()) return s.empty() ? "1" : s + "1";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += ".";
    s += factors[i];
  }
  return s;
}

std::string InvariantModel::sum_string(const std::vector<Monomial>& sum) const {
  if (sum.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < sum.size(); ++i) {
    if (i) s += " + ";
    s += monomial_string(sum[i]);
  }
  return s;
}

}  // namespace lietype
