#include "lietype/gfq.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lietype {
namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Dense polynomials over F_p, coefficients low to high, no trailing zeros.
std::vector<int> trim(std::vector<int> a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b,
                          int p) {
  if (a.empty() || b.empty()) return {};
  std::vector<int> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return trim(c);
}

// Remainder of a modulo the monic polynomial b.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b,
                          int p) {
  a = trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    const int c = a.back();
    for (int i = 0; i <= db; ++i) {
      int& t = a[shift + i];
      t = ((t - c * b[i]) % p + p) % p;
    }
    a = trim(a);
    if (a.empty()) break;
  }
  return a;
}

bool is_irreducible(const std::vector<int>& m, int p) {
  const int r = static_cast<int>(m.size()) - 1;
  if (r == 1) return true;
  for (int d = 1; 2 * d <= r; ++d) {
    std::vector<int> g(d + 1, 0);
    g[d] = 1;
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= static_cast<std::uint64_t>(p);
    for (std::uint64_t k = 0; k < count; ++k) {
      std::uint64_t t = k;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<int>(t % p);
        t /= p;
      }
      if (poly_mod(m, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> distinct_prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

Fq::Fq(int p, int r, std::optional<std::vector<int>> modulus) : p_(p), r_(r) {
  if (!is_prime(p))
    throw std::invalid_argument("Fq: p must be prime, got " +
                                std::to_string(p));
  if (r < 1) throw std::invalid_argument("Fq: r must be positive");
  std::uint64_t q = 1;
  for (int i = 0; i < r; ++i) {
    q *= static_cast<std::uint64_t>(p);
    if (q > 65536)
      throw std::invalid_argument("Fq: q = p^r exceeds 2^16, unsupported");
  }
  q_ = static_cast<std::uint32_t>(q);

  if (modulus) {
    std::vector<int>& m = *modulus;
    if (static_cast<int>(m.size()) != r + 1 || m[r] != 1)
      throw std::invalid_argument("Fq: modulus must be monic of degree r");
    for (int c : m)
      if (c < 0 || c >= p)
        throw std::invalid_argument("Fq: modulus coefficients must be in [0,p)");
    if (!is_irreducible(m, p))
      throw std::invalid_argument("Fq: modulus " + std::to_string(p) +
                                  "-reducible: not a field");
    modulus_ = m;
  } else {
    // Least monic irreducible in lexicographic order on (a_0,...,a_{r-1}).
    std::vector<int> m(r + 1, 0);
    m[r] = 1;
    bool found = false;
    for (std::uint64_t k = 0; k < q && !found; ++k) {
      std::uint64_t t = k;
      for (int i = r - 1; i >= 0; --i) {
        m[i] = static_cast<int>(t % p);
        t /= p;
      }
      if (is_irreducible(m, p)) found = true;
    }
    if (!found) throw std::logic_error("Fq: no irreducible modulus found");
    modulus_ = m;
  }

  // Generator: least element (lex coordinate order) of multiplicative
  // order q-1, certified by the prime factorization of q-1.
  const auto primes = distinct_prime_factors(q_ - 1);
  std::uint32_t gcode = 0;
  for (std::uint32_t i = 1; i < q_ && gcode == 0; ++i) {
    const std::uint32_t cand = element_at_lex(i).code;
    bool ok = true;
    for (std::uint32_t ell : primes) {
      if (slow_pow(cand, (q_ - 1) / ell) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) gcode = cand;
  }
  if (gcode == 0) throw std::logic_error("Fq: no generator found");
  generator_ = {static_cast<std::uint16_t>(gcode)};

  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  std::uint32_t acc = 1;
  for (std::uint32_t k = 0; k + 1 < q_; ++k) {
    exp_[k] = static_cast<std::uint16_t>(acc);
    log_[acc] = k;
    acc = slow_mul(acc, gcode);
  }
  if (acc != 1) throw std::logic_error("Fq: generator order mismatch");
}

std::uint32_t Fq::slow_mul(std::uint32_t a, std::uint32_t b) const {
  std::vector<int> va, vb;
  for (int i = 0; i < r_; ++i) {
    va.push_back(static_cast<int>(a % p_));
    a /= p_;
    vb.push_back(static_cast<int>(b % p_));
    b /= p_;
  }
  const auto prod = poly_mod(poly_mul(trim(va), trim(vb), p_), modulus_, p_);
  std::uint32_t code = 0, w = 1;
  for (int c : prod) {
    code += static_cast<std::uint32_t>(c) * w;
    w *= static_cast<std::uint32_t>(p_);
  }
  return code;
}

std::uint32_t Fq::slow_pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t result = 1;
  while (e > 0) {
    if (e & 1) result = slow_mul(result, a);
    a = slow_mul(a, a);
    e >>= 1;
  }
  return result;
}

std::string Fq::modulus_string() const {
  std::string s;
  for (int i = r_; i >= 0; --i) {
    const int c = modulus_[i];
    if (c == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += std::to_string(c);
    } else {
      if (c != 1) s += std::to_string(c);
      s += (i == 1) ? "x" : "x^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

FqElem Fq::from_int(long long v) const {
  long long m = v % p_;
  if (m < 0) m += p_;
  return {static_cast<std::uint16_t>(m)};
}

FqElem Fq::from_coeffs(const std::vector<int>& c) const {
  if (static_cast<int>(c.size()) > r_)
    throw std::invalid_argument("Fq: too many coordinates");
  std::uint32_t code = 0, w = 1;
  for (int x : c) {
    if (x < 0 || x >= p_)
      throw std::invalid_argument("Fq: coordinate out of [0,p)");
    code += static_cast<std::uint32_t>(x) * w;
    w *= static_cast<std::uint32_t>(p_);
  }
  return {static_cast<std::uint16_t>(code)};
}

std::vector<int> Fq::coeffs(FqElem a) const {
  std::vector<int> out(r_);
  std::uint32_t c = a.code;
  for (int i = 0; i < r_; ++i) {
    out[i] = static_cast<int>(c % p_);
    c /= p_;
  }
  return out;
}

std::string Fq::to_string(FqElem a) const {
  const auto c = coeffs(a);
  std::string s = "[";
  for (int i = 0; i < r_; ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + "]";
}

FqElem Fq::add(FqElem x, FqElem y) const {
  std::uint32_t a = x.code, b = y.code, out = 0, w = 1;
  for (int i = 0; i < r_; ++i) {
    int s = static_cast<int>(a % p_) + static_cast<int>(b % p_);
    if (s >= p_) s -= p_;
    out += static_cast<std::uint32_t>(s) * w;
    a /= p_;
    b /= p_;
    w *= static_cast<std::uint32_t>(p_);
  }
  return {static_cast<std::uint16_t>(out)};
}

FqElem Fq::neg(FqElem x) const {
  std::uint32_t a = x.code, out = 0, w = 1;
  for (int i = 0; i < r_; ++i) {
    const int c = static_cast<int>(a % p_);
    out += static_cast<std::uint32_t>(c == 0 ? 0 : p_ - c) * w;
    a /= p_;
    w *= static_cast<std::uint32_t>(p_);
  }
  return {static_cast<std::uint16_t>(out)};
}

FqElem Fq::sub(FqElem a, FqElem b) const { return add(a, neg(b)); }

FqElem Fq::mul(FqElem a, FqElem b) const {
  if (a.code == 0 || b.code == 0) return {0};
  const std::uint32_t k = log_[a.code] + log_[b.code];
  return {exp_[k >= q_ - 1 ? k - (q_ - 1) : k]};
}

FqElem Fq::inv(FqElem a) const {
  if (a.code == 0) throw std::invalid_argument("Fq: zero has no inverse");
  return {exp_[(q_ - 1 - log_[a.code]) % (q_ - 1)]};
}

FqElem Fq::pow(FqElem a, std::uint64_t e) const {
  if (a.code == 0) return e == 0 ? one() : zero();
  const std::uint64_t k =
      (static_cast<std::uint64_t>(log_[a.code]) * (e % (q_ - 1))) % (q_ - 1);
  return {exp_[k]};
}

std::uint32_t Fq::lex_index(FqElem a) const {
  std::uint32_t c = a.code, idx = 0;
  // digit i has lex weight p^{r-1-i}
  std::uint32_t w = 1;
  for (int i = 1; i < r_; ++i) w *= static_cast<std::uint32_t>(p_);
  for (int i = 0; i < r_; ++i) {
    idx += (c % p_) * w;
    c /= p_;
    w /= static_cast<std::uint32_t>(p_);
  }
  return idx;
}

FqElem Fq::element_at_lex(std::uint32_t idx) const {
  std::uint32_t code = 0;
  std::uint32_t w = 1;
  for (int i = 1; i < r_; ++i) w *= static_cast<std::uint32_t>(p_);
  std::uint32_t pw = 1;
  for (int i = 0; i < r_; ++i) {
    code += ((idx / w) % p_) * pw;
    w /= static_cast<std::uint32_t>(p_);
    pw *= static_cast<std::uint32_t>(p_);
  }
  return {static_cast<std::uint16_t>(code)};
}

std::uint32_t Fq::mult_order(FqElem a) const {
  if (a.code == 0) throw std::invalid_argument("Fq: zero has no order");
  return (q_ - 1) / std::gcd(q_ - 1, log_[a.code]);
}

std::vector<FqElem> Fq::fp_basis() const {
  std::vector<FqElem> out;
  std::uint32_t w = 1;
  for (int i = 0; i < r_; ++i) {
    out.push_back({static_cast<std::uint16_t>(w)});
    w *= static_cast<std::uint32_t>(p_);
  }
  return out;
}

std::vector<FqElem> Fq::power_subgroup(std::uint32_t d) const {
  if (d == 0 || (q_ - 1) % d != 0)
    throw std::invalid_argument("Fq: d must divide q-1");
  std::vector<FqElem> out;
  for (std::uint32_t k = 0; k < (q_ - 1) / d; ++k)
    out.push_back({exp_[k * d]});
  std::sort(out.begin(), out.end(), [this](FqElem a, FqElem b) {
    return lex_index(a) < lex_index(b);
  });
  return out;
}

}  // namespace lietype
