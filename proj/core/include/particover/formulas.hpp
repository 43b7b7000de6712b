#pragma once

#include "particover/group.hpp"
#include "particover/groupspec.hpp"
#include "particover/predicates.hpp"
#include "particover/util.hpp"

#include <optional>

namespace particover {

// Minimal cover size for a solvable noncyclic group, read off its chief
// series: 1 + the order of the smallest chief factor that has at least two
// complements. Throws std::invalid_argument outside that domain.
long long tomkinson_sigma(const Group& G);

// Minimal cover size for a nilpotent noncyclic group: 1 + the smallest prime
// whose Sylow subgroup is noncyclic. Throws std::invalid_argument outside
// that domain.
long long nilpotent_sigma(const Group& G);

// Closed-form minimal partition size keyed on the spec's family tag alone
// (no isomorphism detection). Returns nullopt when no closed form applies to
// that family/parameter combination; callers fall back to construction or
// search. Throws std::invalid_argument on structurally invalid parameters.
std::optional<long long> rho_formula(const GroupSpec& spec);

// Minimal cover size of the projective groups PSL2(q) / PGL2(q).
// PSL: q >= 4 a prime power; q in {5, 7, 9} are the exceptional values,
// otherwise q(q+1)/2 for even q and q(q+1)/2 + 1 for odd q.
// PGL: odd q >= 5, always q(q+1)/2 + 1.
long long sigma_psl_formula(int q, LinearVariant variant);

// Closed-form data for the Suzuki group Sz(q), q = 2^(2m+1), r = 2^(m+1).
// No element-level construction exists here; everything is arithmetic in
// 128-bit integers, with the two internal identities re-checked numerically.
struct SuzukiReport {
    int m = 0;
    long long q = 0;
    long long r = 0;
    u128 order = 0;
    u128 sigma = 0;              // minimal cover size q^2(q^2+1)/2
    u128 psi_size = 0;           // members of the canonical partition
    u128 rho_lower = 0;          // sigma + q^2 - 1, a partition-size lower bound
    bool torus_identity = false; // (q+r+1)(q-r+1) == q^2+1
    bool census_identity = false; // partition member orders sum to |G|
};
// Valid for 1 <= m <= 12; larger m would overflow 128-bit arithmetic.
SuzukiReport suzuki_report(int m);

// Whether the group lies in the class where minimal cover size and minimal
// partition size provably coincide: noncyclic groups of order p^2, and
// Frobenius groups whose kernel is a minimal normal subgroup.
bool main_theorem_predicate(const Group& G);

// Minimal partition size via the index-p Hughes subgroup H_p: accepts
// non-p-groups where H_p is proper of index exactly p and every element
// outside H_p has order p, giving 1 + |H_p|. For Frobenius groups the value
// is only returned when H_p is additionally cyclic and normal. Returns
// nullopt when the route does not apply; throws std::invalid_argument when
// p is not a prime divisor of |G|.
std::optional<long long> ht_rho(const Group& G, long long p);

} // namespace particover
