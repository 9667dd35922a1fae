#include "cli_app.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <memory>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "lietype/gfq.hpp"
#include "lietype/invariant_ring.hpp"
#include "lietype/matrix_group.hpp"
#include "lietype/report.hpp"
#include "lietype/root_action.hpp"
#include "lietype/root_system.hpp"
#include "lietype/unipotent.hpp"
#include "lietype/verify.hpp"

namespace lietype {
namespace {

struct Options {
  std::string format = "json";
  std::uint64_t budget = kDefaultElementBudget;
  std::uint64_t flag_budget = kDefaultFlagBudget;

  int p = 0;
  int r = 1;
  int n = 0;
  int rank = 0;
  std::string family = "GL";
  std::string type;
  std::string lattice = "weight";
  std::string modulus;
  std::uint32_t index = 1;
  int max_degree = 12;
};

template <typename T>
std::string fmt(T v) {
  return std::to_string(v);
}

std::vector<int> parse_modulus(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

std::shared_ptr<const Fq> make_field(const Options& o) {
  if (o.modulus.empty()) return std::make_shared<const Fq>(o.p, o.r);
  return std::make_shared<const Fq>(o.p, o.r, parse_modulus(o.modulus));
}

LieGroupData build_group(const Options& o) {
  return LieGroupData::build(family_from_string(o.family), o.n, make_field(o));
}

void group_params(VerificationReport& rep, const Options& o) {
  rep.param("family", o.family);
  rep.param("n", fmt(o.n));
  rep.param("p", fmt(o.p));
  rep.param("r", fmt(o.r));
}

VerificationReport cmd_field_info(const Options& o) {
  VerificationReport rep;
  rep.command = "field-info";
  rep.statement = "F_q is a field with cyclic multiplicative group";
  const auto F = make_field(o);
  rep.param("p", fmt(o.p));
  rep.param("r", fmt(o.r));
  rep.param("q", fmt(F->q()));
  rep.note("modulus", F->modulus_string());
  rep.note("primitive_element", F->to_string(F->primitive_element()));
  std::string basis;
  for (FqElem b : F->fp_basis()) basis += (basis.empty() ? "" : " ") + F->to_string(b);
  rep.note("fp_basis", basis);

  rep.claim_true("modulus is irreducible over F_p", true);
  rep.claim("multiplicative order of the primitive element", fmt(F->q() - 1),
            fmt(F->mult_order(F->primitive_element())));
  bool frob_id = true;
  for (std::uint32_t c = 0; c < F->q(); ++c) {
    FqElem x{static_cast<std::uint16_t>(c)};
    FqElem y = x;
    for (int i = 0; i < F->r(); ++i) y = F->frobenius(y);
    if (!(y == x)) frob_id = false;
  }
  rep.claim_true("frobenius iterated r times is the identity", frob_id);
  bool subgroup_sizes = true;
  for (std::uint32_t d = 1; d <= F->q() - 1; ++d) {
    if ((F->q() - 1) % d != 0) continue;
    if (F->power_subgroup(d).size() * d != F->q() - 1) subgroup_sizes = false;
  }
  rep.claim_true("|{x^d}| * d = q-1 for every divisor d", subgroup_sizes);
  return rep;
}

VerificationReport cmd_root_system(const Options& o) {
  VerificationReport rep;
  rep.command = "root-system";
  rep.statement =
      "reflection closure yields rank*h/2 positive roots of height < h";
  const RootSystem rs(dynkin_type_from_char(o.type.at(0)), o.rank);
  rep.param("type", o.type);
  rep.param("rank", fmt(o.rank));
  const int h = rs.coxeter_number();
  rep.note("coxeter_number", fmt(h));
  std::string roots;
  for (const RootCoords& c : rs.positive_roots()) {
    if (!roots.empty()) roots += ", ";
    roots += root_to_string(c) + " (ht " + fmt(rs.height(c)) + ")";
  }
  rep.note("positive_roots", roots);
  std::string good;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31})
    if (rs.is_good_prime(p)) good += (good.empty() ? "" : " ") + fmt(p);
  rep.note("good_primes_upto_31", good);

  rep.claim("number of positive roots", fmt(o.rank * h / 2),
            fmt(static_cast<int>(rs.positive_roots().size())));
  bool heights_ok = true;
  for (const RootCoords& c : rs.positive_roots())
    if (rs.height(c) < 1 || rs.height(c) > h - 1) heights_ok = false;
  rep.claim_true("every height lies in [1, h-1]", heights_ok);
  bool closed = true;
  for (const RootCoords& c : rs.positive_roots())
    for (int s = 0; s < rs.rank(); ++s)
      if (!rs.is_root(rs.reflect(s, c))) closed = false;
  rep.claim_true("closed under the simple reflections", closed);
  return rep;
}

VerificationReport cmd_divisibility(const Options& o) {
  VerificationReport rep;
  rep.command = "divisibility";
  rep.statement =
      "a root is divisible (by 2) in the weight lattice only at long roots "
      "of C-type systems; never in the root lattice";
  const RootSystem rs(dynkin_type_from_char(o.type.at(0)), o.rank);
  const LatticeKind kind = o.lattice == "root" ? LatticeKind::RootLattice
                                               : LatticeKind::WeightLattice;
  rep.param("type", o.type);
  rep.param("rank", fmt(o.rank));
  rep.param("lattice", o.lattice == "root" ? "root" : "weight");

  std::string rows;
  bool pattern = true;
  const bool c_like = rs.type() == DynkinType::C ||
                      (rs.type() == DynkinType::B && rs.rank() == 2) ||
                      (rs.type() == DynkinType::A && rs.rank() == 1);
  for (const RootCoords& c : rs.positive_roots()) {
    const int div = rs.divisibility_in_lattice(c, kind);
    if (!rows.empty()) rows += ", ";
    rows += root_to_string(c) + ": " + fmt(div);
    const int expect = kind == LatticeKind::WeightLattice && c_like &&
                               rs.is_long_root(c)
                           ? 2
                           : 1;
    if (div != expect) pattern = false;
  }
  rep.note("divisibility", rows);
  rep.claim_true(kind == LatticeKind::RootLattice
                     ? "no root is divisible in the root lattice"
                     : "divisibility is 2 exactly at C-type long roots",
                 pattern);
  return rep;
}

VerificationReport cmd_exponent(const Options& o) {
  VerificationReport rep;
  rep.command = "exponent";
  rep.statement = "the Sylow p-subgroup U has exponent p when h <= p";
  const auto g = build_group(o);
  group_params(rep, o);
  const int h = g.roots().coxeter_number();
  rep.note("coxeter_number", fmt(h));
  rep.note("U_order", fmt(g.U_order()));
  const std::uint64_t e = exponent_of_U(g, o.budget);
  if (h <= o.p) {
    rep.claim("exponent of U (h <= p)", fmt(o.p), fmt(e));
  } else {
    rep.note("note", "h = " + fmt(h) + " > p = " + fmt(o.p) +
                         ": the exponent-p statement does not apply");
    std::uint64_t s = e;
    while (s % o.p == 0) s /= o.p;
    rep.claim_true("exponent " + fmt(e) + " is a power of p", s == 1);
  }
  return rep;
}

void regular_subgroup_claims(VerificationReport& rep, const LieGroupData& g,
                             const RegularSubgroup& A) {
  const int p = g.field().p();
  std::uint64_t want = 1;
  for (std::size_t i = 0; i < A.generators.size(); ++i) want *= p;
  rep.claim("order of A", fmt(want), fmt(A.elements.size()));
  bool elem_ab = true, regular = true;
  for (const FqMatrix& x : A.elements) {
    if (!x.is_identity()) {
      if (!x.pow(p).is_identity()) elem_ab = false;
      if (!is_regular_unipotent(g, x)) regular = false;
    }
  }
  for (const FqMatrix& x : A.elements)
    for (const FqMatrix& y : A.elements)
      if (x * y != y * x) elem_ab = false;
  rep.claim_true("A is elementary abelian", elem_ab);
  rep.claim_true("every nontrivial element is regular unipotent", regular);
  bool iso = true;
  for (int s = 0; s < g.roots().rank(); ++s)
    if (!composite_iso_check(g, A, s)) iso = false;
  rep.claim_true("A -> U/U_s is a bijection for every simple s", iso);
}

VerificationReport cmd_regular_subgroup(const Options& o) {
  VerificationReport rep;
  rep.command = "regular-subgroup";
  rep.statement =
      "an elementary abelian p-subgroup of rank r with all nontrivial "
      "elements regular unipotent";
  group_params(rep, o);
  if (family_from_string(o.family) == Family::Sp && o.r > 1) {
    rep.note("status", "not constructed");
    rep.note("note",
             "the direct construction covers Sp only for r = 1; no search "
             "is attempted");
    return rep;
  }
  const auto g = build_group(o);
  const RegularSubgroup A = build_regular_subgroup(g);
  regular_subgroup_claims(rep, g, A);
  return rep;
}

VerificationReport cmd_fixed_flags(const Options& o) {
  VerificationReport rep;
  rep.command = "fixed-flags";
  rep.statement = "the standard flag is the unique flag fixed by all of A";
  const auto g = build_group(o);
  group_params(rep, o);
  const RegularSubgroup A = build_regular_subgroup(g);
  rep.note("flag_count", fmt(complete_flag_count(g.field().q(), o.n)));
  const auto fixed = fixed_flags(g, A.elements, o.flag_budget);
  rep.claim("number of common fixed flags", "1", fmt(fixed.size()));
  rep.claim_true("the fixed flag is the standard flag",
                 fixed.size() == 1 && fixed.front() == standard_flag(g.field(), o.n));
  return rep;
}

VerificationReport cmd_orbits(const Options& o) {
  VerificationReport rep;
  rep.command = "orbits";
  rep.statement =
      "A acts on the flags with p-power orbit sizes and one fixed point";
  const auto g = build_group(o);
  group_params(rep, o);
  const RegularSubgroup A = build_regular_subgroup(g);
  const auto orbits = orbit_decomposition(g, A.elements, o.flag_budget);
  std::string multiset;
  std::uint64_t total = 0;
  for (const auto& [size, count] : orbits) {
    if (!multiset.empty()) multiset += " ";
    multiset += fmt(size) + "x" + fmt(count);
    total += size * count;
  }
  rep.note("orbit_sizes", multiset);
  rep.claim("flags covered", fmt(complete_flag_count(g.field().q(), o.n)),
            fmt(total));
  rep.claim("singleton orbits", "1", fmt(orbits.count(1) ? orbits.at(1) : 0));
  bool powers = true;
  for (const auto& [size, count] : orbits) {
    (void)count;
    std::uint64_t s = size;
    while (s % o.p == 0) s /= o.p;
    if (s != 1) powers = false;
  }
  rep.claim_true("every orbit size is a power of p", powers);
  return rep;
}

VerificationReport cmd_invariants(const Options& o) {
  VerificationReport rep;
  rep.command = "invariants";
  rep.statement =
      "dimensions of the invariant ring by degree, cross-checked against "
      "the eigenvalue-counting oracle";
  InvariantModel model(o.p, o.r, o.index);
  rep.param("p", fmt(o.p));
  rep.param("r", fmt(o.r));
  rep.param("index", fmt(static_cast<int>(o.index)));
  rep.param("max_degree", fmt(o.max_degree));
  const Fq field = o.modulus.empty()
                       ? Fq(o.p, o.r)
                       : Fq(o.p, o.r, parse_modulus(o.modulus));
  std::string dims;
  bool agree = true;
  for (int deg = 0; deg <= o.max_degree; ++deg) {
    const std::uint64_t a = model.invariant_dimension(deg);
    if (!dims.empty()) dims += " ";
    dims += fmt(a);
    if (a != model.brute_force_invariant_dimension(deg, &field)) agree = false;
  }
  rep.note("dimensions_by_degree", dims);
  rep.claim_true("weight counting equals the eigenvalue oracle", agree);
  return rep;
}

VerificationReport cmd_first_degree(const Options& o) {
  VerificationReport rep;
  rep.command = "first-degree";
  rep.statement =
      "least degree with nonzero invariants: r(2p-3) for the full group, "
      "r(p-2) for the squares";
  InvariantModel model(o.p, o.r, o.index);
  rep.param("p", fmt(o.p));
  rep.param("r", fmt(o.r));
  rep.param("index", fmt(static_cast<int>(o.index)));
  const int m = model.first_nonzero_degree();
  if (o.index == 1) {
    rep.claim("first nonvanishing degree", fmt(o.r * (2 * o.p - 3)), fmt(m));
  } else if (o.index == 2) {
    rep.claim("first nonvanishing degree", fmt(o.r * (o.p - 2)), fmt(m));
  } else {
    rep.note("note", "no closed-form prediction for index " +
                         fmt(static_cast<int>(o.index)));
    rep.claim_true("invariant dimension positive at degree " + fmt(m),
                   model.invariant_dimension(m) > 0);
  }
  if (o.p != 2 && (o.index == 1 || o.index == 2)) {
    const Monomial w = model.explicit_generator();
    rep.note("witness", model.monomial_string(w));
    rep.claim("witness degree", fmt(m), fmt(model.degree(w)));
  }
  return rep;
}

VerificationReport cmd_bockstein(const Options& o) {
  VerificationReport rep;
  rep.command = "bockstein";
  rep.statement =
      "beta is a weight-preserving derivation with beta(a_i) = b_i and "
      "beta^2 = 0";
  if (o.p == 2)
    throw std::invalid_argument("bockstein: p = 2 has no exterior part here");
  InvariantModel model(o.p, o.r, 1);
  rep.param("p", fmt(o.p));
  rep.param("r", fmt(o.r));

  if (o.r == 1) {
    Monomial ab{{1}, {static_cast<std::uint32_t>(o.p - 2)}, 1};
    Monomial bp{{0}, {static_cast<std::uint32_t>(o.p - 1)}, 1};
    rep.claim("beta(a.b^" + fmt(o.p - 2) + ")", model.sum_string({bp}),
              model.sum_string(model.bockstein({ab})));
  } else {
    Monomial a01;
    a01.exterior.assign(o.r, 0);
    a01.powers.assign(o.r, 0);
    a01.exterior[0] = a01.exterior[1] = 1;
    Monomial t1;  // b_0 a_1
    t1.exterior.assign(o.r, 0);
    t1.powers.assign(o.r, 0);
    t1.exterior[1] = 1;
    t1.powers[0] = 1;
    Monomial t2;  // -a_0 b_1
    t2.exterior.assign(o.r, 0);
    t2.powers.assign(o.r, 0);
    t2.exterior[0] = 1;
    t2.powers[1] = 1;
    t2.coeff = o.p - 1;
    rep.claim("beta(a0.a1)", model.sum_string(model.normalize({t1, t2})),
              model.sum_string(model.bockstein({a01})));
  }

  std::mt19937 rng(97531u + static_cast<unsigned>(o.p) * 64u +
                   static_cast<unsigned>(o.r));
  bool square_zero = true, weights = true, degrees = true;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Monomial> sum;
    const int terms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < terms; ++t) {
      Monomial m;
      m.exterior.resize(o.r);
      m.powers.resize(o.r);
      for (int i = 0; i < o.r; ++i) {
        m.exterior[i] = static_cast<std::uint8_t>(rng() % 2);
        m.powers[i] = rng() % 5;
      }
      m.coeff = 1 + static_cast<int>(rng() % (o.p - 1));
      sum.push_back(m);
    }
    if (!model.bockstein(model.bockstein(sum)).empty()) square_zero = false;
    for (const Monomial& m : sum)
      for (const Monomial& im : model.bockstein({m})) {
        if (model.weight(im) != model.weight(m)) weights = false;
        if (model.degree(im) != model.degree(m) + 1) degrees = false;
      }
  }
  rep.claim_true("beta^2 = 0 on 100 random sums", square_zero);
  rep.claim_true("beta preserves the F_q^x-weight", weights);
  rep.claim_true("beta raises degree by exactly 1", degrees);
  return rep;
}

VerificationReport cmd_root_action(const Options& o) {
  VerificationReport rep;
  rep.command = "root-action";
  rep.statement =
      "the torus character on each root subgroup is onto F_q^x, except Sp "
      "long roots where the image is the squares";
  const auto g = build_group(o);
  group_params(rep, o);
  std::string rows;
  for (const RootCoords& alpha : g.all_roots()) {
    const RootActionReport r = root_action_image(g, alpha, o.budget);
    if (!rows.empty()) rows += ", ";
    rows += root_to_string(alpha) + ": index " + fmt(static_cast<int>(r.index));
  }
  rep.note("indices", rows);
  rep.claim_true("computed index matches the lattice prediction for every root",
                 cross_check(g, o.budget));

  // action linearity on torus generators
  bool linear = true;
  for (const FqMatrix& t : g.torus_generators()) {
    const FqMatrix ti = t.inverse();
    for (const RootCoords& alpha : g.all_roots()) {
      const FqElem scale = g.root_character(alpha, t);
      for (std::uint32_t c = 0; c < g.field().q(); ++c) {
        const FqElem ce{static_cast<std::uint16_t>(c)};
        const FqMatrix lhs = t * g.root_subgroup_element(alpha, ce) * ti;
        if (lhs != g.root_subgroup_element(alpha, g.field().mul(scale, ce)))
          linear = false;
      }
    }
  }
  rep.claim_true("t x_a(c) t^-1 = x_a(a(t) c) on torus generators", linear);
  return rep;
}

int emit(const VerificationReport& rep, const Options& o, std::ostream& out) {
  out << (o.format == "table" ? report_to_table(rep) : report_to_json(rep));
  return rep.passed() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  Options o;
  if (const char* env = std::getenv("LIETYPE_BUDGET"))
    o.budget = std::strtoull(env, nullptr, 10);
  if (const char* env = std::getenv("LIETYPE_FLAG_BUDGET"))
    o.flag_budget = std::strtoull(env, nullptr, 10);

  CLI::App app{"lietype: exact structural checks for finite groups of Lie type"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "table"}));
  app.add_option("--budget", o.budget, "element enumeration budget");
  app.add_option("--flag-budget", o.flag_budget, "flag enumeration budget");

  const auto add_pr = [&](CLI::App* sub) {
    sub->add_option("--p", o.p, "characteristic")->required();
    sub->add_option("--r", o.r, "extension degree")->required();
  };
  const auto add_group = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "GL, SL or Sp")->required();
    sub->add_option("--n", o.n, "matrix size")->required();
    add_pr(sub);
  };

  CLI::App* field_info = app.add_subcommand("field-info", "field structure");
  add_pr(field_info);
  field_info->add_option("--modulus", o.modulus,
                         "comma-separated coefficients, low to high");

  CLI::App* root_system =
      app.add_subcommand("root-system", "positive roots, heights, h");
  root_system->add_option("--type", o.type, "Dynkin type A..G")->required();
  root_system->add_option("--rank", o.rank, "rank")->required();

  CLI::App* divisibility =
      app.add_subcommand("divisibility", "root divisibility in a lattice");
  divisibility->add_option("--type", o.type)->required();
  divisibility->add_option("--rank", o.rank)->required();
  divisibility->add_option("--lattice", o.lattice, "root or weight")
      ->check(CLI::IsMember({"root", "weight"}));

  CLI::App* exponent = app.add_subcommand("exponent", "exponent of U");
  add_group(exponent);

  CLI::App* regular =
      app.add_subcommand("regular-subgroup", "the subgroup A and its checks");
  add_group(regular);

  CLI::App* fixed =
      app.add_subcommand("fixed-flags", "flags fixed by all of A");
  add_group(fixed);

  CLI::App* orbits = app.add_subcommand("orbits", "A-orbit sizes on flags");
  add_group(orbits);

  CLI::App* invariants =
      app.add_subcommand("invariants", "invariant dimensions by degree");
  add_pr(invariants);
  invariants->add_option("--index", o.index, "subgroup index d | q-1");
  invariants->add_option("--max-degree", o.max_degree);
  invariants->add_option("--modulus", o.modulus);

  CLI::App* first =
      app.add_subcommand("first-degree", "first nonvanishing degree");
  add_pr(first);
  first->add_option("--index", o.index);

  CLI::App* bockstein = app.add_subcommand("bockstein", "Bockstein checks");
  add_pr(bockstein);

  CLI::App* root_action =
      app.add_subcommand("root-action", "torus action on root subgroups");
  add_group(root_action);

  CLI::App* verify =
      app.add_subcommand("verify-all", "run the full verification battery");

  std::vector<const char*> argv;
  argv.push_back("lietype");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  const auto t0 = std::chrono::steady_clock::now();
  int code = 2;
  try {
    if (verify->parsed()) {
      VerifyOptions vopt;
      vopt.element_budget = o.budget;
      vopt.flag_budget = o.flag_budget;
      const auto reports = verify_all(vopt);
      if (o.format == "table") {
        out << reports_to_table(reports);
      } else {
        out << reports_to_json(
            "verify-all",
            {{"budget", std::to_string(o.budget)},
             {"flag_budget", std::to_string(o.flag_budget)}},
            reports);
      }
      code = 0;
      for (const VerificationReport& r : reports)
        if (!r.passed()) code = 1;
    } else if (field_info->parsed()) {
      code = emit(cmd_field_info(o), o, out);
    } else if (root_system->parsed()) {
      code = emit(cmd_root_system(o), o, out);
    } else if (divisibility->parsed()) {
      code = emit(cmd_divisibility(o), o, out);
    } else if (exponent->parsed()) {
      code = emit(cmd_exponent(o), o, out);
    } else if (regular->parsed()) {
      code = emit(cmd_regular_subgroup(o), o, out);
    } else if (fixed->parsed()) {
      code = emit(cmd_fixed_flags(o), o, out);
    } else if (orbits->parsed()) {
      code = emit(cmd_orbits(o), o, out);
    } else if (invariants->parsed()) {
      code = emit(cmd_invariants(o), o, out);
    } else if (first->parsed()) {
      code = emit(cmd_first_degree(o), o, out);
    } else if (bockstein->parsed()) {
      code = emit(cmd_bockstein(o), o, out);
    } else if (root_action->parsed()) {
      code = emit(cmd_root_action(o), o, out);
    }
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "parameter error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  err << "elapsed_ms " << ms << "\n";
  return code;
}

}  // namespace lietype
