#include "particover/predicates.hpp"

#include "particover/solver.hpp"
#include "particover/util.hpp"

#include <stdexcept>
#include <string>

namespace particover {

namespace {

Subgroup derived_within(const Group& G, const Subgroup& H) {
    Bitset seed(G.order());
    std::vector<int> v = H.bits.to_vector();
    for (int a : v)
        for (int b : v) seed.set(G.mul(G.mul(G.inv(a), G.inv(b)), G.mul(a, b)));
    return subgroup_closure(G, seed);
}

} // namespace

bool is_cyclic(const Group& G) {
    for (int x = 0; x < G.order(); ++x)
        if (G.elem_order(x) == G.order()) return true;
    return false;
}

bool is_pgroup(const Group& G, long long* p_out) {
    long long p;
    int k;
    if (!prime_power(G.order(), p, k)) return false;
    if (p_out) *p_out = p;
    return true;
}

bool is_solvable(const Group& G) {
    Subgroup d = full_subgroup(G);
    while (true) {
        Subgroup next = derived_within(G, d);
        if (next.order == d.order) break;
        d = std::move(next);
    }
    return d.order == 1;
}

bool is_nilpotent(const Group& G) {
    for (auto [p, k] : factorize(G.order())) {
        (void)k;
        if (!is_normal(G, sylow_subgroup(G, p))) return false;
    }
    return true;
}

Subgroup derived_subgroup(const Group& G) { return derived_within(G, full_subgroup(G)); }

Subgroup hughes_subgroup(const Group& G, long long p) {
    if (!is_prime(p)) throw std::invalid_argument("hughes_subgroup: p must be prime");
    if (G.order() % p != 0)
        throw std::invalid_argument("hughes_subgroup: p must divide the group order");
    Bitset seed(G.order());
    for (int x = 0; x < G.order(); ++x)
        if (G.elem_pow(x, p) != 0) seed.set(x);
    return subgroup_closure(G, seed);
}

std::optional<FrobeniusWitness> frobenius_witness(const Group& G) {
    int n = G.order();
    std::vector<Subgroup> subs = all_subgroups(G);
    for (const Subgroup& H : subs) {
        if (H.order <= 1 || H.order >= n) continue;
        // H^{hg} = H^g, so one conjugate per right coset Hg suffices.
        Bitset coset_seen = H.bits;
        Bitset covered = H.bits;
        bool malnormal = true;
        for (int g = 0; g < n && malnormal; ++g) {
            if (coset_seen.test(g)) continue;
            for (int h = H.bits.first_set(); h >= 0; h = H.bits.next_set(h))
                coset_seen.set(G.mul(h, g));
            Subgroup conj = conjugate_subgroup(G, H, g);
            if (H.bits.count_and(conj.bits) != 1) {
                malnormal = false;
                break;
            }
            covered |= conj.bits;
        }
        if (!malnormal) continue;
        Bitset kb(n);
        kb.set(0);
        for (int x = 0; x < n; ++x)
            if (!covered.test(x)) kb.set(x);
        Subgroup K = make_subgroup(G, std::move(kb));
        if (!is_subgroup(G, K.bits) || !is_normal(G, K) ||
            (long long)K.order * H.order != n || K.bits.count_and(H.bits) != 1)
            throw std::logic_error("frobenius_witness: kernel verification failed");
        return FrobeniusWitness{K, H};
    }
    return std::nullopt;
}

namespace {

// Parses "<prefix><integer>)" where the whole string must match, so product
// origins like "PSL2(7) x C2" are never mistaken for the plain group.
std::optional<long long> exact_origin_param(const std::string& origin, const std::string& prefix) {
    if (origin.size() < prefix.size() + 2 || origin.back() != ')') return std::nullopt;
    if (origin.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
    long long v = 0;
    for (std::size_t i = prefix.size(); i + 1 < origin.size(); ++i) {
        char c = origin[i];
        if (c < '0' || c > '9') return std::nullopt;
        v = v * 10 + (c - '0');
        if (v > 10'000'000) return std::nullopt;
    }
    return v;
}

} // namespace

std::optional<PartitionClass> is_partitionable(const Group& G) {
    const int n = G.order();
    if (is_cyclic(G)) return std::nullopt;
    if (n == 24 && center(G).order == 1) return PartitionClass::S4;
    long long p = 0;
    if (is_pgroup(G, &p)) {
        if (hughes_subgroup(G, p).order < n) return PartitionClass::PGroupProperHughes;
        // Hughes subgroup equal to G: fall through to the search.
    } else {
        for (auto [q, k] : factorize(n)) {
            (void)k;
            if (hughes_subgroup(G, q).order < n) return PartitionClass::HughesThompson;
        }
        if (n <= 1000 && frobenius_witness(G)) return PartitionClass::Frobenius;
        const std::string& origin = G.origin();
        if (auto q = exact_origin_param(origin, "PSL2("); q && *q >= 4)
            return PartitionClass::PSL2;
        if (auto q = exact_origin_param(origin, "PGL2("); q && *q >= 5 && *q % 2 == 1)
            return PartitionClass::PGL2;
        if (exact_origin_param(origin, "Sz(")) return PartitionClass::Suzuki;
    }
    std::vector<Subgroup> all = all_subgroups(G);
    if (partition_exists(G, all)) return PartitionClass::SearchFound;
    return std::nullopt;
}

const char* to_string(PartitionClass c) {
    switch (c) {
    case PartitionClass::S4: return "S4";
    case PartitionClass::PGroupProperHughes: return "p-group-with-proper-Hughes";
    case PartitionClass::HughesThompson: return "Hughes-Thompson";
    case PartitionClass::Frobenius: return "Frobenius";
    case PartitionClass::PSL2: return "PSL2";
    case PartitionClass::PGL2: return "PGL2";
    case PartitionClass::Suzuki: return "Suzuki";
    case PartitionClass::SearchFound: return "search";
    }
    return "?";
}

} // namespace particover
