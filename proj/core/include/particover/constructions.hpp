#pragma once

#include "particover/group.hpp"
#include "particover/groupspec.hpp"
#include "particover/predicates.hpp"
#include "particover/solver.hpp"

#include <utility>
#include <vector>

namespace particover {

// The kernel together with every conjugate of the complement: |kernel| + 1
// parts. The witness is revalidated; a bad one throws std::invalid_argument.
PartitionCertificate frobenius_partition(const Group& G, const FrobeniusWitness& w);

// Partition of C_p^n (n >= 2) into 1 + p^ceil(n/2) subgroups. Even n: the
// 1-dimensional subspaces of a 2-dimensional space over GF(p^(n/2)). Odd n:
// that partition of C_p^(n+1), intersected with an index-p subgroup identified
// with C_p^n. Certificate indices refer to
// all_subgroups(elementary_abelian(p, n)).
PartitionCertificate elementary_abelian_partition(int p, int n);

// One point stabilizer, the cyclic torus subgroups not inside it, and the
// Sylow subgroups of the field characteristic not inside it: q^2 + 1 parts.
// Domain: even q >= 4 for either variant (the two groups coincide), odd
// q >= 7 for PSL (q = 5 stays open), odd q >= 5 for PGL. Certificate indices
// refer to all_subgroups of the canonical psl2(q) / pgl2(q) group.
PartitionCertificate psl_pgl_partition(int q, LinearVariant variant);

enum class ExceptionalGroup { PGL2_5, PSL2_7, PSL2_9, PSL2_11 };

Group exceptional_group(ExceptionalGroup which);

// The four sporadic linear partitions, sizes 26 / 50 / 82 / 122; the member
// order census is asserted against the known composition.
PartitionCertificate exceptional_partition(ExceptionalGroup which);

struct DihedralIntersectionReport {
    int q = 0;
    // Two conjugate dihedral subgroups of order 2(q-1) meeting nontrivially
    // (indices into all_subgroups of psl2(q)), with their intersection order.
    int small_first = -1;
    int small_second = -1;
    int small_intersection_order = 0;
    // (intersection order, pair count) over all unordered pairs of distinct
    // order-2(q+1) dihedral subgroups, ascending by order.
    std::vector<std::pair<int, long long>> large_pair_histogram;
    bool large_pairwise_order_two = false;
};

// Intersections of the two dihedral families inside PSL2(q), q in {4, 8}:
// some conjugate pair of order 2(q-1) meets nontrivially, while order-2(q+1)
// subgroups pairwise meet in exactly an involution.
DihedralIntersectionReport dihedral_intersection_checks(int q);

} // namespace particover
