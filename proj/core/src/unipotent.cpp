#include "lietype/unipotent.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace lietype {
namespace {

void require_flag_family(const LieGroupData& g) {
  if (g.family() == Family::Sp)
    throw std::invalid_argument(
        "flags: complete flag variety realizes G/B for GL/SL only");
}

}  // namespace

std::string Flag::key() const {
  std::string s;
  for (const FqMatrix& v : subspaces) s += v.key();
  return s;
}

std::uint64_t complete_flag_count(std::uint32_t q, int n) {
  unsigned __int128 acc = 1;
  unsigned __int128 qk = 1;
  for (int k = 1; k <= n; ++k) {
    qk *= q;
    acc *= (qk - 1) / (q - 1);
    if (acc > static_cast<unsigned __int128>(UINT64_MAX))
      throw std::overflow_error("complete_flag_count: exceeds 2^64");
  }
  return static_cast<std::uint64_t>(acc);
}

Flag standard_flag(const Fq& field, int n) {
  Flag f;
  for (int k = 1; k < n; ++k) {
    FqMatrix v(&field, k, n);
    for (int i = 0; i < k; ++i) v.at(i, i) = field.one();
    f.subspaces.push_back(v);
  }
  return f;
}

std::vector<Flag> enumerate_flags(const Fq& field, int n,
                                  std::uint64_t budget) {
  const std::uint64_t count = complete_flag_count(field.q(), n);
  if (count > budget)
    throw BudgetExceeded("enumerate_flags", count, budget);

  std::vector<Flag> out;
  out.reserve(count);

  // Extend a k-dimensional V by one dimension: subspaces W > V correspond
  // to lines of F_q^n / V, represented by vectors supported on the
  // non-pivot columns of V whose first nonzero entry is 1.
  struct Rec {
    const Fq& F;
    int n;
    std::vector<Flag>& out;
    void extend(const FqMatrix& v, Flag& chain) {
      const int k = v.rows();
      if (k == n) {
        out.push_back(chain);
        return;
      }
      std::vector<bool> is_pivot(n, false);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j)
          if (!F.is_zero(v.at(i, j))) {
            is_pivot[j] = true;
            break;
          }
      std::vector<int> free_cols;
      for (int j = 0; j < n; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
      const int nf = static_cast<int>(free_cols.size());
      // normalized vectors over the free columns: leading coefficient 1
      for (int lead = 0; lead < nf; ++lead) {
        std::vector<std::uint32_t> tail(nf - lead - 1, 0);
        const std::uint64_t tail_count = [&] {
          std::uint64_t t = 1;
          for (int i = lead + 1; i < nf; ++i) t *= F.q();
          return t;
        }();
        for (std::uint64_t it = 0; it < tail_count; ++it) {
          FqMatrix w(&F, k + 1, n);
          for (int i = 0; i < k; ++i)
            for (int j = 0; j < n; ++j) w.at(i, j) = v.at(i, j);
          w.at(k, free_cols[lead]) = F.one();
          for (int i = lead + 1; i < nf; ++i)
            w.at(k, free_cols[i]) = {
                static_cast<std::uint16_t>(tail[i - lead - 1])};
          FqMatrix canon = row_space_rref(w);
          if (k + 1 < n) chain.subspaces.push_back(canon);
          if (k + 1 == n) {
            out.push_back(chain);
          } else {
            extend(canon, chain);
            chain.subspaces.pop_back();
          }
          for (int i = 0; i < nf - lead - 1; ++i) {
            if (++tail[i] < F.q()) break;
            tail[i] = 0;
          }
        }
      }
    }
  } rec{field, n, out};

  Flag chain;
  rec.extend(FqMatrix(&field, 0, n), chain);
  if (out.size() != count)
    throw std::logic_error("enumerate_flags: count mismatch");
  return out;
}

Flag transform_flag(const FqMatrix& x, const Flag& f) {
  Flag out;
  const FqMatrix xt = x.transpose();
  out.subspaces.reserve(f.subspaces.size());
  for (const FqMatrix& v : f.subspaces)
    out.subspaces.push_back(row_space_rref(v * xt));
  return out;
}

bool flag_fixed_by(const FqMatrix& x, const Flag& f) {
  const FqMatrix xt = x.transpose();
  for (const FqMatrix& v : f.subspaces)
    if (row_space_rref(v * xt) != v) return false;
  return true;
}

bool is_regular_unipotent(const LieGroupData& g, const FqMatrix& x) {
  const auto coords = g.u_coordinates(x);
  if (!coords)
    throw std::invalid_argument(
        "is_regular_unipotent: the criterion is stated for x in U");
  for (int s = 0; s < g.roots().rank(); ++s)
    if (g.field().is_zero(g.simple_coordinate(x, s))) return false;
  return true;
}

std::vector<Flag> fixed_flags(const LieGroupData& g,
                              const std::vector<FqMatrix>& S,
                              std::uint64_t flag_budget) {
  require_flag_family(g);
  for (const FqMatrix& x : S)
    if (g.field().is_zero(x.det()))
      throw std::invalid_argument("fixed_flags: elements must be invertible");
  std::vector<Flag> out;
  for (const Flag& f : enumerate_flags(g.field(), g.n(), flag_budget)) {
    bool fixed = true;
    for (const FqMatrix& x : S)
      if (!flag_fixed_by(x, f)) {
        fixed = false;
        break;
      }
    if (fixed) out.push_back(f);
  }
  return out;
}

std::map<std::uint64_t, std::uint64_t> orbit_decomposition(
    const LieGroupData& g, const std::vector<FqMatrix>& subgroup,
    std::uint64_t flag_budget) {
  require_flag_family(g);
  const std::vector<Flag> flags = enumerate_flags(g.field(), g.n(), flag_budget);
  std::unordered_set<std::string> visited;
  std::map<std::uint64_t, std::uint64_t> sizes;
  for (const Flag& f : flags) {
    if (visited.count(f.key())) continue;
    std::set<std::string> orbit;
    for (const FqMatrix& a : subgroup) orbit.insert(transform_flag(a, f).key());
    for (const std::string& k : orbit) visited.insert(k);
    sizes[orbit.size()] += 1;
  }
  std::uint64_t total = 0;
  for (const auto& [size, count] : sizes) total += size * count;
  if (total != flags.size())
    throw std::logic_error("orbit_decomposition: orbits do not partition");
  return sizes;
}

std::vector<FqMatrix> regular_unipotent_generators(const LieGroupData& g) {
  const Fq& F = g.field();
  std::vector<FqMatrix> gens;
  if (g.family() == Family::Sp) {
    FqMatrix x = g.identity();
    for (int s = 0; s < g.roots().rank(); ++s)
      x = x * g.root_subgroup_element(g.roots().simple_root(s), F.one());
    gens.push_back(x);
  } else {
    for (FqElem lambda : F.fp_basis()) {
      FqMatrix x = g.identity();
      for (int i = 0; i + 1 < g.n(); ++i) x.at(i, i + 1) = lambda;
      gens.push_back(x);
    }
  }
  return gens;
}

RegularSubgroup build_regular_subgroup(const LieGroupData& g) {
  const Fq& F = g.field();
  const int p = F.p(), r = F.r();
  const int h = g.roots().coxeter_number();

  if (g.family() == Family::Sp) {
    if (h > p || r != 1)
      throw std::invalid_argument(
          "build_regular_subgroup: Sp needs h <= p and r = 1 (h = " +
          std::to_string(h) + ", p = " + std::to_string(p) +
          ", r = " + std::to_string(r) + ")");
  } else {
    if (g.n() > p)
      throw std::invalid_argument(
          "build_regular_subgroup: GL/SL need n <= p (h = " +
          std::to_string(h) + " > p = " + std::to_string(p) + ")");
  }

  RegularSubgroup A;
  A.generators = regular_unipotent_generators(g);

  std::uint64_t size = 1;
  for (std::size_t i = 0; i < A.generators.size(); ++i) size *= p;
  std::vector<std::uint32_t> odo(A.generators.size(), 0);
  for (std::uint64_t it = 0; it < size; ++it) {
    FqMatrix x = g.identity();
    for (std::size_t i = 0; i < A.generators.size(); ++i)
      for (std::uint32_t k = 0; k < odo[i]; ++k) x = x * A.generators[i];
    A.elements.push_back(x);
    for (std::size_t i = 0; i < odo.size(); ++i) {
      if (++odo[i] < static_cast<std::uint32_t>(p)) break;
      odo[i] = 0;
    }
  }

  // Verify every claimed invariant; failure here is an implementation bug.
  std::set<std::string> keys;
  for (const FqMatrix& x : A.elements) keys.insert(x.key());
  if (keys.size() != size)
    throw std::logic_error("build_regular_subgroup: rank defect");
  for (const FqMatrix& x : A.elements) {
    if (!g.in_U(x)) throw std::logic_error("build_regular_subgroup: not in U");
    if (!x.is_identity()) {
      if (!x.pow(p).is_identity())
        throw std::logic_error("build_regular_subgroup: order is not p");
      if (!is_regular_unipotent(g, x))
        throw std::logic_error("build_regular_subgroup: non-regular element");
    }
  }
  for (const FqMatrix& x : A.elements)
    for (const FqMatrix& y : A.elements)
      if (x * y != y * x)
        throw std::logic_error("build_regular_subgroup: not abelian");
  return A;
}

bool composite_iso_check(const LieGroupData& g, const RegularSubgroup& A,
                         int s) {
  std::set<std::uint16_t> values;
  for (const FqMatrix& a : A.elements) {
    if (!g.in_U(a))
      throw std::invalid_argument("composite_iso_check: A is not inside U");
    values.insert(g.simple_coordinate(a, s).code);
  }
  return values.size() == A.elements.size() &&
         values.size() == g.field().q();
}

std::vector<FqMatrix> generated_subgroup(const FqMatrix& id,
                                         const std::vector<FqMatrix>& gens,
                                         std::uint64_t budget) {
  std::vector<FqMatrix> elements{id};
  std::unordered_set<std::string> seen{id.key()};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    const FqMatrix cur = elements[head];
    for (const FqMatrix& gmat : gens) {
      FqMatrix next = cur * gmat;
      if (seen.insert(next.key()).second) {
        if (elements.size() + 1 > budget)
          throw BudgetExceeded("generated_subgroup", elements.size() + 1,
                               budget);
        elements.push_back(std::move(next));
      }
    }
  }
  return elements;
}

std::vector<std::vector<FqMatrix>> height_filtration(const LieGroupData& g) {
  const int h = g.roots().coxeter_number();
  std::vector<std::vector<FqMatrix>> levels(h);
  for (int k = 1; k <= h; ++k) {
    for (const RootCoords& alpha : g.roots().positive_roots()) {
      if (g.roots().height(alpha) < k) continue;
      for (FqElem b : g.field().fp_basis())
        levels[k - 1].push_back(g.root_subgroup_element(alpha, b));
    }
  }
  return levels;
}

bool is_central_series(const LieGroupData& g,
                       const std::vector<std::vector<FqMatrix>>& chain,
                       std::uint64_t budget) {
  if (chain.empty()) return true;
  std::vector<std::vector<FqMatrix>> closures;
  closures.reserve(chain.size());
  for (const auto& gens : chain)
    closures.push_back(generated_subgroup(g.identity(), gens, budget));

  const std::vector<FqMatrix>& U = closures.front();
  std::vector<FqMatrix> U_inv;
  U_inv.reserve(U.size());
  for (const FqMatrix& u : U) U_inv.push_back(u.inverse());

  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    std::unordered_set<std::string> next_keys;
    for (const FqMatrix& x : closures[k + 1]) next_keys.insert(x.key());

    const bool exhaustive =
        static_cast<std::uint64_t>(U.size()) * closures[k].size() <= budget;
    const std::vector<FqMatrix>& lhs = exhaustive ? U : chain.front();
    const std::vector<FqMatrix>& rhs = exhaustive ? closures[k] : chain[k];
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      const FqMatrix& u = lhs[i];
      const FqMatrix ui = exhaustive ? U_inv[i] : u.inverse();
      for (const FqMatrix& v : rhs) {
        const FqMatrix comm = u * v * ui * v.inverse();
        if (!next_keys.count(comm.key())) return false;
      }
    }
  }
  return true;
}

std::uint64_t exponent_of_U(const LieGroupData& g, std::uint64_t budget) {
  const int p = g.field().p();
  std::uint64_t exponent = 1;
  g.for_each_in_U(
      [&](const FqMatrix& x) {
        // orders in U are powers of p
        FqMatrix y = x;
        std::uint64_t order = 1;
        while (!y.is_identity()) {
          y = y.pow(static_cast<std::uint64_t>(p));
          order *= p;
        }
        exponent = std::max(exponent, order);
      },
      budget);
  return exponent;
}

std::vector<std::uint64_t> lower_central_series_orders(const LieGroupData& g,
                                                       std::uint64_t budget) {
  const std::vector<FqMatrix> U = g.enumerate_U(budget);
  std::vector<FqMatrix> U_inv;
  U_inv.reserve(U.size());
  for (const FqMatrix& u : U) U_inv.push_back(u.inverse());

  std::vector<std::uint64_t> orders{U.size()};
  std::vector<FqMatrix> layer = U;
  while (layer.size() > 1) {
    if (static_cast<std::uint64_t>(U.size()) * layer.size() > budget)
      throw BudgetExceeded("lower_central_series_orders",
                           static_cast<std::uint64_t>(U.size()) * layer.size(),
                           budget);
    std::vector<FqMatrix> comms;
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < U.size(); ++i) {
      for (const FqMatrix& v : layer) {
        FqMatrix c = U[i] * v * U_inv[i] * v.inverse();
        if (seen.insert(c.key()).second) comms.push_back(std::move(c));
      }
    }
    layer = generated_subgroup(g.identity(), comms, budget);
    orders.push_back(layer.size());
  }
  return orders;
}

bool chevalley_commutator_check(const LieGroupData& g, std::uint64_t budget) {
  const Fq& F = g.field();
  const auto& pos = g.roots().positive_roots();
  const int h = g.roots().coxeter_number();
  const std::uint64_t work = static_cast<std::uint64_t>(pos.size()) *
                             pos.size() * (F.q() - 1) * (F.q() - 1);
  if (work > budget)
    throw BudgetExceeded("chevalley_commutator_check", work, budget);
  for (std::size_t a = 0; a < pos.size(); ++a) {
    for (std::size_t b = 0; b < pos.size(); ++b) {
      if (a == b) continue;
      // positions of the roots i*alpha + j*beta, i, j > 0
      std::vector<bool> allowed(pos.size(), false);
      for (int i = 1; i <= h; ++i)
        for (int j = 1; j <= h; ++j) {
          RootCoords sum(pos[a]);
          for (std::size_t t = 0; t < sum.size(); ++t)
            sum[t] = i * pos[a][t] + j * pos[b][t];
          const int idx = g.roots().positive_root_index(sum);
          if (idx >= 0) allowed[idx] = true;
        }
      for (std::uint32_t ca = 1; ca < F.q(); ++ca) {
        const FqMatrix xa = g.root_subgroup_element(
            pos[a], {static_cast<std::uint16_t>(ca)});
        const FqMatrix xai = g.root_subgroup_element(
            pos[a], F.neg({static_cast<std::uint16_t>(ca)}));
        for (std::uint32_t cb = 1; cb < F.q(); ++cb) {
          const FqMatrix xb = g.root_subgroup_element(
              pos[b], {static_cast<std::uint16_t>(cb)});
          const FqMatrix xbi = g.root_subgroup_element(
              pos[b], F.neg({static_cast<std::uint16_t>(cb)}));
          const FqMatrix comm = xa * xb * xai * xbi;
          const auto coords = g.u_coordinates(comm);
          if (!coords) return false;
          for (std::size_t t = 0; t < coords->size(); ++t)
            if (!F.is_zero((*coords)[t]) && !allowed[t]) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace lietype
