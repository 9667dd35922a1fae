#pragma once

#include <cstdint>
#include <vector>

#include "lietype/budget.hpp"
#include "lietype/report.hpp"

namespace lietype {

struct VerifyOptions {
  std::uint64_t element_budget = kDefaultElementBudget;
  std::uint64_t flag_budget = kDefaultFlagBudget;
};

// The full verification battery.  Each function runs one family of checks
// exhaustively at a fixed small scale and reports exact claims; together
// they cover every structural statement the library is built around.

// First nonvanishing degree of the F_q^x-invariants is r(2p-3).
VerificationReport verify_invariant_degrees();

// First nonvanishing degree of the squares-invariants is r(p-2), with the
// explicit witness monomial checked in each case.
VerificationReport verify_sp_invariant_degrees();

// Weight counting agrees with the eigenvalue-counting oracle.
VerificationReport verify_dimension_oracle();

// beta(a b^{p-2}) = b^{p-1}, both invariant; beta^2 = 0 on random sums.
VerificationReport verify_bockstein();

// exponent(U) = p exactly when h <= p, with h > p counterexamples.
VerificationReport verify_exponent(const VerifyOptions& opt = {});

// Height filtration is a central series; Chevalley containment; nilpotence
// class at most h-1.
VerificationReport verify_central_series(const VerifyOptions& opt = {});

// build_regular_subgroup succeeds with all invariants.
VerificationReport verify_regular_subgroups(const VerifyOptions& opt = {});

// Coordinate maps A -> F_q are bijections; A has a unique fixed flag; orbit
// sizes are p-powers with exactly one singleton.
VerificationReport verify_flag_fixed_points(const VerifyOptions& opt = {});

// The U_s criterion agrees with the unique-fixed-flag definition on all of
// U for small general linear groups.
VerificationReport verify_regularity_flag_criterion(
    const VerifyOptions& opt = {});

// Torus image on every root subgroup: surjective except Sp long roots
// (index gcd(2, q-1)); the weight-lattice divisibility scan over rank <= 8
// finds exactly the long roots of C-type systems.
VerificationReport verify_root_action(const VerifyOptions& opt = {});

// h <= p implies p is a good prime, all types of rank <= 8, p <= 31.
VerificationReport verify_good_primes();

// Invariant dimensions and first degrees are identical under two different
// irreducible moduli for F_8 and F_9.
VerificationReport verify_modulus_independence();

std::vector<VerificationReport> verify_all(const VerifyOptions& opt = {});

}  // namespace lietype
