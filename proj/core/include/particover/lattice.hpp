#pragma once

#include "particover/group.hpp"

#include <vector>

namespace particover {

Subgroup make_subgroup(const Group& G, Bitset bits);
Subgroup trivial_subgroup(const Group& G);
Subgroup full_subgroup(const Group& G);
Subgroup cyclic_subgroup(const Group& G, int x);
Subgroup intersect_subgroups(const Subgroup& a, const Subgroup& b);

// Direct membership check of the subgroup axioms (identity + closure).
bool is_subgroup(const Group& G, const Bitset& members);

// Closure of seed under multiplication. If bound >= 0 and the closure grows
// past bound elements, returns the full group immediately: any subgroup
// larger than the largest proper-subgroup order must be G itself, so callers
// pass bound = |G| / smallest-prime-factor for an early out.
Subgroup subgroup_closure(const Group& G, const Bitset& seed, int bound = -1);

// Distinct subgroups <x> for all x, trivial subgroup included.
std::vector<Subgroup> all_cyclic_subgroups(const Group& G);

// Every subgroup of G, {1} and G included, sorted by (order, bitset lex).
// Fixpoint of extending known subgroups by cyclic subgroups outside them.
std::vector<Subgroup> all_subgroups(const Group& G, int guard = 1000);

std::vector<Subgroup> maximal_subgroups(const Group& G, const std::vector<Subgroup>& all);

Subgroup conjugate_subgroup(const Group& G, const Subgroup& H, int g);
Subgroup normalizer(const Group& G, const Subgroup& H);
bool is_normal(const Group& G, const Subgroup& H);
Subgroup center(const Group& G);
// Distinct conjugates of H, sorted by bitset lex; count = |G : N_G(H)|.
std::vector<Subgroup> conjugates(const Group& G, const Subgroup& H);
// A Sylow p-subgroup (the deterministic one grown from smallest element ids);
// the trivial subgroup when p does not divide |G|.
Subgroup sylow_subgroup(const Group& G, long long p);

// H as a standalone group: element ids relabeled ascending (identity first).
// back_map, if given, receives new-id -> old-id.
Group subgroup_as_group(const Group& G, const Subgroup& H, std::vector<int>* back_map = nullptr);

} // namespace particover
