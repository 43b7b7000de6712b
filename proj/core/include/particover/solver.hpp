#pragma once

#include "particover/group.hpp"
#include "particover/lattice.hpp"

#include <optional>
#include <vector>

namespace particover {

// Limits for one branch-and-bound run. All three fields must be positive.
struct SearchBudget {
    long long max_nodes = 1'000'000'000'000LL;
    double max_seconds = 60.0;
    int thread_count = 1;
};

// Indices into all_subgroups(G) whose members cover G.
struct CoverCertificate {
    std::vector<int> members;
    int size() const { return int(members.size()); }
};

// Indices into all_subgroups(G) whose members partition G: every member
// nontrivial and proper, pairwise intersections trivial, union everything.
struct PartitionCertificate {
    std::vector<int> members;
    int size() const { return int(members.size()); }
};

// Outcome of the minimal-cover search. Infinite: cyclic groups admit no cover
// by proper subgroups. Exact: optimum proven within budget. Bounds: budget ran
// out; lower is proven, upper comes from the best cover found (cert).
struct SigmaResult {
    enum class Kind { Infinite, Exact, Bounds };
    Kind kind = Kind::Exact;
    long long value = 0;                // meaningful for Exact
    long long lower = 0;                // proven lower bound (Bounds)
    std::optional<long long> upper;     // best cover size found (Bounds)
    std::optional<CoverCertificate> cert;
    long long nodes = 0;
};

// Outcome of the minimal-partition search. None: proven that no partition
// exists. Exact / Bounds as for SigmaResult.
struct RhoResult {
    enum class Kind { None, Exact, Bounds };
    Kind kind = Kind::Exact;
    long long value = 0;
    long long lower = 0;
    std::optional<long long> upper;
    std::optional<PartitionCertificate> cert;
    long long nodes = 0;
};

// Minimal number of proper subgroups covering G; branch and bound over
// maximal subgroups with a greedy initial cover, a counting bound, and a
// clique bound from pairwise-generating elements.
SigmaResult sigma(const Group& G, const SearchBudget& budget);
SigmaResult sigma(const Group& G, const std::vector<Subgroup>& all, const SearchBudget& budget);

// Minimal number of parts in a partition of G; exact-cover search over the
// nonidentity parts of all nontrivial proper subgroups, with power-coset
// preprocessing (a part containing x contains every generator of <x>).
// incumbent, if given, must verify and seeds the upper bound.
RhoResult rho(const Group& G, const SearchBudget& budget);
RhoResult rho(const Group& G, const std::vector<Subgroup>& all, const SearchBudget& budget,
              const PartitionCertificate* incumbent = nullptr);

// Certificate checks recompute everything from the multiplication table and
// never trust search internals. Invalid indices throw std::out_of_range.
bool verify_cover(const Group& G, const CoverCertificate& cert);
bool verify_cover(const Group& G, const std::vector<Subgroup>& all, const CoverCertificate& cert);
bool verify_partition(const Group& G, const PartitionCertificate& cert);
bool verify_partition(const Group& G, const std::vector<Subgroup>& all,
                      const PartitionCertificate& cert);

// Every partition has at least 1 + ceil(sqrt(|G|)) parts.
long long rho_lower_bound(const Group& G);

// Decides whether any partition exists (no cardinality optimization).
bool partition_exists(const Group& G, const std::vector<Subgroup>& all);

// Maps explicit member sets to certificate indices (sorted ascending).
// Throws std::invalid_argument if a part is not a subgroup from `all`.
PartitionCertificate as_partition_certificate(const std::vector<Subgroup>& parts,
                                              const std::vector<Subgroup>& all);

// Index of the subgroup with these members in the (order, member-set)-sorted
// subgroup list, or -1.
int find_subgroup_index(const std::vector<Subgroup>& all, const Bitset& bits);

} // namespace particover
