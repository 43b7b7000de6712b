#include "particover/chief.hpp"

#include "particover/predicates.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

namespace particover {

namespace {

// Nontrivial normal subgroups containing no smaller nontrivial normal
// subgroup; `all` must be sorted by (order, member-set) as all_subgroups does.
std::vector<Subgroup> minimal_normal_subgroups(const Group& G, const std::vector<Subgroup>& all) {
    std::vector<const Subgroup*> normals;
    for (const Subgroup& s : all)
        if (s.order > 1 && s.order < G.order() && is_normal(G, s)) normals.push_back(&s);
    if (normals.empty() && G.order() > 1) {
        // Simple group: the only nontrivial normal subgroup is G itself.
        std::vector<Subgroup> out;
        for (const Subgroup& s : all)
            if (s.order == G.order()) out.push_back(s);
        return out;
    }
    std::vector<Subgroup> out;
    for (std::size_t i = 0; i < normals.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < i && minimal; ++j)
            if (normals[j]->order < normals[i]->order &&
                normals[j]->bits.is_subset_of(normals[i]->bits))
                minimal = false;
        if (minimal) out.push_back(*normals[i]);
    }
    return out;
}

int complement_count(const Group& G, const std::vector<Subgroup>& all, const Subgroup& N) {
    int count = 0;
    for (const Subgroup& c : all)
        if ((long long)c.order * N.order == G.order() && c.bits.count_and(N.bits) == 1) ++count;
    return count;
}

using FactorMultiset = std::vector<std::pair<int, int>>; // sorted (order, count) pairs

// All completion multisets of G/K, memoized on the kernel K.
const std::set<FactorMultiset>& completions(const Group& G, const Subgroup& K,
                                            std::map<std::vector<int>, std::set<FactorMultiset>>& memo) {
    std::vector<int> key = K.bits.to_vector();
    auto hit = memo.find(key);
    if (hit != memo.end()) return hit->second;

    std::vector<int> qmap;
    Group Q = quotient(G, K, &qmap);
    std::set<FactorMultiset> out;
    if (Q.order() == 1) {
        out.emplace(); // the one empty completion
    } else {
        std::vector<Subgroup> subs = all_subgroups(Q);
        for (const Subgroup& N : minimal_normal_subgroups(Q, subs)) {
            int cnt = complement_count(Q, subs, N);
            Bitset kb(G.order());
            for (int g = 0; g < G.order(); ++g)
                if (N.bits.test(qmap[g])) kb.set(g);
            const auto& rests = completions(G, make_subgroup(G, std::move(kb)), memo);
            for (const FactorMultiset& rest : rests) {
                FactorMultiset m = rest;
                m.emplace_back(N.order, cnt);
                std::sort(m.begin(), m.end());
                out.insert(std::move(m));
            }
        }
    }
    return memo.emplace(std::move(key), std::move(out)).first->second;
}

} // namespace

Group quotient(const Group& G, const Subgroup& N, std::vector<int>* coset_map) {
    if (!is_subgroup(G, N.bits)) throw std::invalid_argument("quotient: N is not a subgroup");
    if (!is_normal(G, N)) throw std::invalid_argument("quotient: N is not normal");
    int n = G.order();
    std::vector<int> rep_of(n, -1);
    std::vector<int> reps;
    std::vector<int> id_at(n, -1);
    for (int g = 0; g < n; ++g) {
        if (rep_of[g] >= 0) continue;
        // Scanning upward, the first unseen element is its coset's minimum.
        id_at[g] = int(reps.size());
        reps.push_back(g);
        for (int h = N.bits.first_set(); h >= 0; h = N.bits.next_set(h)) rep_of[G.mul(h, g)] = g;
    }
    int m = int(reps.size());
    std::vector<std::uint16_t> table(std::size_t(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            table[std::size_t(i) * m + j] = std::uint16_t(id_at[rep_of[G.mul(reps[i], reps[j])]]);
    std::vector<int> gens;
    for (int g : G.generators()) {
        int q = id_at[rep_of[g]];
        if (q != 0 && std::find(gens.begin(), gens.end(), q) == gens.end()) gens.push_back(q);
    }
    if (coset_map) {
        coset_map->assign(n, -1);
        for (int g = 0; g < n; ++g) (*coset_map)[g] = id_at[rep_of[g]];
    }
    return Group::from_table(std::move(table), m, std::move(gens), "");
}

ChiefSeries chief_series(const Group& G) {
    if (G.order() > 1000) throw std::length_error("chief_series: order exceeds guard");
    if (!is_solvable(G)) throw std::invalid_argument("chief_series: group is not solvable");
    ChiefSeries cs;
    cs.terms.push_back(trivial_subgroup(G));
    std::vector<int> to_q(G.order());
    std::iota(to_q.begin(), to_q.end(), 0);
    Group Q = G;
    while (Q.order() > 1) {
        std::vector<Subgroup> subs = all_subgroups(Q);
        std::vector<Subgroup> mins = minimal_normal_subgroups(Q, subs);
        const Subgroup& N = mins.front(); // smallest (order, member-set) key
        cs.factors.push_back({N.order, complement_count(Q, subs, N)});
        Bitset kb(G.order());
        for (int g = 0; g < G.order(); ++g)
            if (N.bits.test(to_q[g])) kb.set(g);
        cs.terms.push_back(make_subgroup(G, std::move(kb)));
        std::vector<int> cmap;
        Q = quotient(Q, N, &cmap);
        for (int g = 0; g < G.order(); ++g) to_q[g] = cmap[to_q[g]];
    }
    return cs;
}

bool complement_count_invariance_check(const Group& G) {
    if (!is_solvable(G))
        throw std::invalid_argument("complement_count_invariance_check: group is not solvable");
    std::map<std::vector<int>, std::set<FactorMultiset>> memo;
    return completions(G, trivial_subgroup(G), memo).size() == 1;
}

} // namespace particover
