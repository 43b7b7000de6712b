#pragma once

#include "particover/group.hpp"
#include "particover/lattice.hpp"

#include <vector>

namespace particover {

// Quotient group G/N on coset ids. Cosets are ordered by their minimal member
// id, so the identity coset always gets id 0. coset_map, if given, receives
// the element -> coset-id map (a surjective homomorphism onto the result).
Group quotient(const Group& G, const Subgroup& N, std::vector<int>* coset_map = nullptr);

struct ChiefFactor {
    int order = 0;            // |K_i / K_{i-1}|
    int complement_count = 0; // subgroups of G/K_{i-1} complementing K_i/K_{i-1}
};

// Ascending normal series {1} = K_0 < K_1 < ... < K_t = G where each
// K_i/K_{i-1} is a minimal normal subgroup of G/K_{i-1}; factors[i] describes
// the step from terms[i] to terms[i+1].
struct ChiefSeries {
    std::vector<Subgroup> terms;
    std::vector<ChiefFactor> factors;
};

// Deterministic series for a solvable group: each step takes the minimal
// normal subgroup of the current quotient with the smallest (order,
// member-set) key. Requires |G| <= 1000.
ChiefSeries chief_series(const Group& G);

// True iff every series reachable by exhaustive minimal-normal branching
// yields the same multiset of (factor order, complement count) pairs.
bool complement_count_invariance_check(const Group& G);

} // namespace particover
