#include "lietype/root_system.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace lietype {
namespace {

bool valid_datum(DynkinType t, int n) {
  switch (t) {
    case DynkinType::A:
      return n >= 1;
    case DynkinType::B:
    case DynkinType::C:
      return n >= 2;
    case DynkinType::D:
      return n >= 4;
    case DynkinType::E:
      return n >= 6 && n <= 8;
    case DynkinType::F:
      return n == 4;
    case DynkinType::G:
      return n == 2;
  }
  return false;
}

// Cartan matrix with entries C[i][j] = <alpha_j, alpha_i-check>.
std::vector<std::vector<int>> build_cartan(DynkinType t, int n) {
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto edge = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
  switch (t) {
    case DynkinType::A:
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case DynkinType::B:
      // alpha_n short: the short root's row carries the -2
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      c[n - 1][n - 2] = -2;
      break;
    case DynkinType::C:
      // alpha_n long: the long root's column is divisible by 2
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      c[n - 2][n - 1] = -2;
      break;
    case DynkinType::D:
      for (int i = 0; i + 1 < n - 2; ++i) edge(i, i + 1);
      edge(n - 3, n - 2);
      edge(n - 3, n - 1);
      break;
    case DynkinType::E:
      edge(0, 2);
      edge(2, 3);
      edge(3, 4);
      edge(4, 5);
      edge(1, 3);
      if (n >= 7) edge(5, 6);
      if (n >= 8) edge(6, 7);
      break;
    case DynkinType::F:
      edge(0, 1);
      edge(1, 2);
      edge(2, 3);
      c[2][1] = -2;
      break;
    case DynkinType::G:
      c[0][1] = -3;
      c[1][0] = -1;
      break;
  }
  return c;
}

int coord_sum(const RootCoords& c) {
  int s = 0;
  for (int x : c) s += x;
  return s;
}

bool all_nonneg(const RootCoords& c) {
  return std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
}

}  // namespace

DynkinType dynkin_type_from_char(char c) {
  switch (c) {
    case 'A':
    case 'a':
      return DynkinType::A;
    case 'B':
    case 'b':
      return DynkinType::B;
    case 'C':
    case 'c':
      return DynkinType::C;
    case 'D':
    case 'd':
      return DynkinType::D;
    case 'E':
    case 'e':
      return DynkinType::E;
    case 'F':
    case 'f':
      return DynkinType::F;
    case 'G':
    case 'g':
      return DynkinType::G;
  }
  throw std::invalid_argument(std::string("unknown Dynkin type '") + c + "'");
}

std::string root_to_string(const RootCoords& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!s.empty() && c[i] > 0) s += "+";
    if (c[i] == -1)
      s += "-";
    else if (c[i] != 1)
      s += std::to_string(c[i]);
    s += "a" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

RootSystem::RootSystem(DynkinType type, int rank) : type_(type), rank_(rank) {
  if (!valid_datum(type, rank))
    throw std::invalid_argument("RootSystem: invalid Dynkin datum " +
                                std::string(1, static_cast<char>(type)) +
                                "_" + std::to_string(rank));
  cartan_ = build_cartan(type, rank);

  // Reflection closure from the simple roots, keeping positive vectors.
  std::deque<RootCoords> queue;
  for (int s = 0; s < rank_; ++s) {
    RootCoords e(rank_, 0);
    e[s] = 1;
    positive_set_.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    const RootCoords c = queue.front();
    queue.pop_front();
    for (int s = 0; s < rank_; ++s) {
      RootCoords d = reflect(s, c);
      if (all_nonneg(d) && positive_set_.insert(d).second) queue.push_back(d);
    }
  }

  positive_roots_.assign(positive_set_.begin(), positive_set_.end());
  std::sort(positive_roots_.begin(), positive_roots_.end(),
            [](const RootCoords& a, const RootCoords& b) {
              const int ha = coord_sum(a), hb = coord_sum(b);
              if (ha != hb) return ha < hb;
              return a < b;
            });
  coxeter_ = coord_sum(positive_roots_.back()) + 1;

  // Closure under the simple reflections: s(alpha) is again a root.
  for (const RootCoords& c : positive_roots_) {
    for (int s = 0; s < rank_; ++s) {
      RootCoords d = reflect(s, c);
      if (!is_root(d))
        throw std::logic_error("RootSystem: reflection closure failed");
    }
  }

  // Symmetrizer d_i with d_i C_ij = d_j C_ji, integral, min 1.
  {
    std::vector<long long> num(rank_, 0), den(rank_, 1);
    num[0] = 1;
    std::deque<int> bfs{0};
    while (!bfs.empty()) {
      const int i = bfs.front();
      bfs.pop_front();
      for (int j = 0; j < rank_; ++j) {
        if (j == i || cartan_[i][j] == 0 || num[j] != 0) continue;
        // d_j = d_i * C_ij / C_ji
        num[j] = num[i] * cartan_[i][j];
        den[j] = den[i] * cartan_[j][i];
        if (num[j] < 0) num[j] = -num[j];
        if (den[j] < 0) den[j] = -den[j];
        const long long g = std::gcd(num[j], den[j]);
        num[j] /= g;
        den[j] /= g;
        bfs.push_back(j);
      }
    }
    long long l = 1;
    for (int i = 0; i < rank_; ++i) l = std::lcm(l, den[i]);
    symmetrizer_.resize(rank_);
    for (int i = 0; i < rank_; ++i) symmetrizer_[i] = num[i] * (l / den[i]);
    const long long g =
        std::accumulate(symmetrizer_.begin(), symmetrizer_.end(), 0LL,
                        [](long long a, long long b) { return std::gcd(a, b); });
    for (auto& d : symmetrizer_) d /= g;
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j)
        if (symmetrizer_[i] * cartan_[i][j] != symmetrizer_[j] * cartan_[j][i])
          throw std::logic_error("RootSystem: symmetrizer failed");
    max_norm_ = 0;
    for (int i = 0; i < rank_; ++i)
      max_norm_ = std::max(max_norm_, 2 * symmetrizer_[i]);
  }

  // Pin the B/C orientation: C_n's long simple root has weight coordinates
  // divisible by 2; B_n (n >= 3) has no such column.
  if (type_ == DynkinType::C) {
    if (divisibility_in_lattice(simple_root(rank_ - 1),
                                LatticeKind::WeightLattice) != 2)
      throw std::logic_error("RootSystem: C-type convention violated");
  }
  if (type_ == DynkinType::B && rank_ >= 3) {
    for (int s = 0; s < rank_; ++s)
      if (divisibility_in_lattice(simple_root(s),
                                  LatticeKind::WeightLattice) != 1)
        throw std::logic_error("RootSystem: B-type convention violated");
  }
}

bool RootSystem::is_positive_root(const RootCoords& c) const {
  return static_cast<int>(c.size()) == rank_ && positive_set_.count(c) > 0;
}

bool RootSystem::is_root(const RootCoords& c) const {
  if (is_positive_root(c)) return true;
  RootCoords m(c);
  for (int& x : m) x = -x;
  return is_positive_root(m);
}

RootCoords RootSystem::simple_root(int s) const {
  if (s < 0 || s >= rank_)
    throw std::invalid_argument("RootSystem: simple index out of range");
  RootCoords e(rank_, 0);
  e[s] = 1;
  return e;
}

int RootSystem::positive_root_index(const RootCoords& c) const {
  const auto it =
      std::find(positive_roots_.begin(), positive_roots_.end(), c);
  return it == positive_roots_.end()
             ? -1
             : static_cast<int>(it - positive_roots_.begin());
}

int RootSystem::height(const RootCoords& c) const {
  if (!is_positive_root(c))
    throw std::invalid_argument("RootSystem: height is defined on positive roots");
  return coord_sum(c);
}

bool RootSystem::is_good_prime(int p) const {
  for (const RootCoords& c : positive_roots_)
    for (int x : c)
      if (x != 0 && x % p == 0) return false;
  return true;
}

std::vector<int> RootSystem::weight_coords(const RootCoords& c) const {
  if (static_cast<int>(c.size()) != rank_)
    throw std::invalid_argument("RootSystem: bad coordinate length");
  std::vector<int> w(rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) w[i] += cartan_[i][j] * c[j];
  return w;
}

int RootSystem::divisibility_in_lattice(const RootCoords& c,
                                        LatticeKind kind) const {
  if (!is_root(c))
    throw std::invalid_argument("RootSystem: not a root");
  const std::vector<int> v =
      kind == LatticeKind::RootLattice ? c : weight_coords(c);
  int g = 0;
  for (int x : v) g = std::gcd(g, std::abs(x));
  return g == 0 ? 1 : g;
}

RootCoords RootSystem::reflect(int s, const RootCoords& c) const {
  if (s < 0 || s >= rank_)
    throw std::invalid_argument("RootSystem: simple index out of range");
  int pairing = 0;
  for (int j = 0; j < rank_; ++j) pairing += cartan_[s][j] * c[j];
  RootCoords d(c);
  d[s] -= pairing;
  return d;
}

long long RootSystem::root_norm(const RootCoords& c) const {
  long long n = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      n += static_cast<long long>(c[i]) * c[j] * symmetrizer_[i] *
           cartan_[i][j];
  return n;
}

bool RootSystem::is_long_root(const RootCoords& c) const {
  if (!is_root(c))
    throw std::invalid_argument("RootSystem: not a root");
  return root_norm(c) == max_norm_;
}

}  // namespace lietype
