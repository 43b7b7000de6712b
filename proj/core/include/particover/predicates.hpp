#pragma once

#include "particover/group.hpp"
#include "particover/lattice.hpp"

#include <optional>

namespace particover {

bool is_cyclic(const Group& G);
// |G| is a power of one prime (false for the trivial group); reports the prime.
bool is_pgroup(const Group& G, long long* p_out = nullptr);
// Derived series reaches the trivial subgroup.
bool is_solvable(const Group& G);
// Every Sylow subgroup is normal.
bool is_nilpotent(const Group& G);

Subgroup derived_subgroup(const Group& G);

// Subgroup generated by every element whose p-th power is not the identity.
Subgroup hughes_subgroup(const Group& G, long long p);

struct FrobeniusWitness {
    Subgroup kernel;
    Subgroup complement;
};

// Scans for a proper nontrivial subgroup H with H ∩ H^g = {1} for every g
// outside H (smallest such H in (order, member-set) order); the complementary
// normal kernel is assembled from the elements missed by every conjugate of H
// and verified. none when no such subgroup exists.
std::optional<FrobeniusWitness> frobenius_witness(const Group& G);

// Reason a group admits a partition into nontrivial proper subgroups with
// pairwise trivial intersections covering the whole group.
enum class PartitionClass {
    S4,
    PGroupProperHughes,
    HughesThompson,
    Frobenius,
    PSL2,
    PGL2,
    Suzuki,
    SearchFound,
};

const char* to_string(PartitionClass c);

// Structural tests in the declared order (the first match wins), then family
// recognition from the origin tag, then an exhaustive existence search;
// nullopt when no partition exists.
std::optional<PartitionClass> is_partitionable(const Group& G);

} // namespace particover
