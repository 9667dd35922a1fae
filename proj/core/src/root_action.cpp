#include "lietype/root_action.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace lietype {

RootActionReport root_action_image(const LieGroupData& g,
                                   const RootCoords& alpha,
                                   std::uint64_t budget) {
  const Fq& F = g.field();
  if (!g.roots().is_root(alpha))
    throw std::invalid_argument("root_action_image: not a root");

  const FqMatrix x1 = g.root_subgroup_element(alpha, F.one());
  const auto [row, col] = g.root_leading_entry(alpha);

  std::set<std::uint16_t> codes;
  for (const FqMatrix& t : g.torus_elements(budget)) {
    const FqMatrix conj = t * x1 * t.inverse();
    const FqElem c = conj.at(row, col);
    if (conj != g.root_subgroup_element(alpha, c))
      throw std::logic_error("root_action_image: conjugate left the root subgroup");
    codes.insert(c.code);
  }

  RootActionReport rep;
  rep.root = alpha;
  for (std::uint16_t c : codes) rep.image.push_back({c});
  std::sort(rep.image.begin(), rep.image.end(), [&F](FqElem a, FqElem b) {
    return F.lex_index(a) < F.lex_index(b);
  });

  // the image of a homomorphism is a subgroup; check it anyway
  for (FqElem a : rep.image) {
    if (F.is_zero(a)) throw std::logic_error("root_action_image: zero in image");
    for (FqElem b : rep.image)
      if (!codes.count(F.mul(a, b).code))
        throw std::logic_error("root_action_image: image not closed");
    if (!codes.count(F.inv(a).code))
      throw std::logic_error("root_action_image: image lacks inverses");
  }
  if ((F.q() - 1) % rep.image.size() != 0)
    throw std::logic_error("root_action_image: image size does not divide q-1");
  rep.index = (F.q() - 1) / static_cast<std::uint32_t>(rep.image.size());
  rep.predicted_divisors = predicted_index_divisors(
      g.roots(), LatticeKind::WeightLattice, alpha, F.q());
  return rep;
}

std::vector<std::uint32_t> predicted_index_divisors(const RootSystem& rs,
                                                    LatticeKind lattice,
                                                    const RootCoords& alpha,
                                                    std::uint32_t q) {
  const int div = rs.divisibility_in_lattice(alpha, lattice);
  std::vector<std::uint32_t> out;
  for (std::uint32_t n = 1; n <= q - 1; ++n)
    if ((q - 1) % n == 0 && div % static_cast<int>(n) == 0) out.push_back(n);
  return out;
}

std::uint32_t expected_root_index(const LieGroupData& g,
                                  const RootCoords& alpha) {
  const std::uint32_t q = g.field().q();
  switch (g.family()) {
    case Family::GL:
      return 1;
    case Family::SL:
      return g.n() == 2 ? std::gcd(2u, q - 1) : 1;
    case Family::Sp:
      return g.roots().is_long_root(alpha) ? std::gcd(2u, q - 1) : 1;
  }
  return 1;
}

bool cross_check(const LieGroupData& g, std::uint64_t budget) {
  for (const RootCoords& alpha : g.all_roots()) {
    const RootActionReport rep = root_action_image(g, alpha, budget);
    if (rep.index != expected_root_index(g, alpha)) return false;
    // the lemma's bound: the index divides the weight-lattice divisibility
    const int div =
        g.roots().divisibility_in_lattice(alpha, LatticeKind::WeightLattice);
    if (div % static_cast<int>(rep.index) != 0) return false;
    if (rep.predicted_divisors.empty() || rep.predicted_divisors.front() != 1)
      return false;
  }
  return true;
}

}  // namespace lietype
