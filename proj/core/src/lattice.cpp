#include "particover/lattice.hpp"

#include "particover/util.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace particover {

Subgroup make_subgroup(const Group& G, Bitset bits) {
    (void)G;
    int order = bits.count();
    return {std::move(bits), order};
}

Subgroup trivial_subgroup(const Group& G) {
    Bitset b(G.order());
    b.set(0);
    return {std::move(b), 1};
}

Subgroup full_subgroup(const Group& G) {
    Bitset b(G.order());
    for (int i = 0; i < G.order(); ++i) b.set(i);
    return {std::move(b), G.order()};
}

Subgroup cyclic_subgroup(const Group& G, int x) {
    Bitset b(G.order());
    b.set(0);
    int k = x;
    while (k != 0) {
        b.set(k);
        k = G.mul(k, x);
    }
    return make_subgroup(G, std::move(b));
}

Subgroup intersect_subgroups(const Subgroup& a, const Subgroup& b) {
    Bitset r = a.bits;
    r &= b.bits;
    int order = r.count();
    return {std::move(r), order};
}

bool is_subgroup(const Group& G, const Bitset& members) {
    if (members.size() != G.order() || !members.test(0)) return false;
    std::vector<int> v = members.to_vector();
    for (int a : v)
        for (int b : v)
            if (!members.test(G.mul(a, b))) return false;
    return true;
}

Subgroup subgroup_closure(const Group& G, const Bitset& seed, int bound) {
    int n = G.order();
    if (bound < 0) bound = n;
    Bitset in(n);
    in.set(0);
    std::vector<int> members{0};
    members.reserve(64);
    for (int x = seed.first_set(); x >= 0; x = seed.next_set(x)) {
        if (!in.test(x)) {
            in.set(x);
            members.push_back(x);
        }
    }
    if (int(members.size()) > bound) return full_subgroup(G);
    // Every ordered pair is covered when the later of the two is processed.
    for (std::size_t i = 0; i < members.size(); ++i) {
        int w = members[i];
        for (std::size_t j = 0; j <= i; ++j) {
            int a = members[j];
            int p1 = G.mul(w, a), p2 = G.mul(a, w);
            for (int prod : {p1, p2}) {
                if (!in.test(prod)) {
                    in.set(prod);
                    members.push_back(prod);
                    if (int(members.size()) > bound) return full_subgroup(G);
                }
            }
        }
    }
    return {std::move(in), int(members.size())};
}

std::vector<Subgroup> all_cyclic_subgroups(const Group& G) {
    std::vector<Subgroup> out;
    std::unordered_map<std::uint64_t, std::vector<int>> index;
    for (int x = 0; x < G.order(); ++x) {
        Subgroup s = cyclic_subgroup(G, x);
        auto& slot = index[s.bits.fnv_hash()];
        bool dup = false;
        for (int i : slot)
            if (out[i].bits == s.bits) {
                dup = true;
                break;
            }
        if (!dup) {
            slot.push_back(int(out.size()));
            out.push_back(std::move(s));
        }
    }
    return out;
}

std::vector<Subgroup> all_subgroups(const Group& G, int guard) {
    int n = G.order();
    if (n > guard) throw std::length_error("all_subgroups: order exceeds guard");
    int dmax = n == 1 ? 1 : n / int(smallest_prime_factor(n));

    std::vector<Subgroup> found;
    std::unordered_map<std::uint64_t, std::vector<int>> index;
    auto add = [&](Subgroup s) {
        auto& slot = index[s.bits.fnv_hash()];
        for (int i : slot)
            if (found[i].bits == s.bits) return;
        slot.push_back(int(found.size()));
        found.push_back(std::move(s));
    };

    add(full_subgroup(G));
    std::vector<Subgroup> cyc = all_cyclic_subgroups(G);
    for (const Subgroup& c : cyc) add(c); // includes the trivial subgroup

    for (std::size_t qi = 0; qi < found.size(); ++qi) {
        if (found[qi].order == n) continue;
        for (const Subgroup& c : cyc) {
            if (c.order == 1 || c.bits.is_subset_of(found[qi].bits)) continue;
            int inter = found[qi].bits.count_and(c.bits);
            if ((long long)found[qi].order * c.order / inter > dmax) continue; // join is G
            Bitset seed = found[qi].bits;
            seed |= c.bits;
            add(subgroup_closure(G, seed, dmax));
        }
    }

    // The dmax shortcut funnels oversized joins to the full group, which is
    // already present; drop nothing, sort deterministically.
    std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order != b.order) return a.order < b.order;
        return Bitset::lex_compare(a.bits, b.bits) < 0;
    });
    return found;
}

std::vector<Subgroup> maximal_subgroups(const Group& G, const std::vector<Subgroup>& all) {
    int n = G.order();
    std::vector<Subgroup> out;
    for (const Subgroup& h : all) {
        if (h.order == n) continue;
        bool maximal = true;
        for (const Subgroup& k : all) {
            if (k.order == n || k.order <= h.order) continue;
            if (h.bits.is_subset_of(k.bits)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(h);
    }
    return out;
}

Subgroup conjugate_subgroup(const Group& G, const Subgroup& H, int g) {
    Bitset b(G.order());
    for (int h = H.bits.first_set(); h >= 0; h = H.bits.next_set(h)) b.set(G.conj(h, g));
    return {std::move(b), H.order};
}

Subgroup normalizer(const Group& G, const Subgroup& H) {
    Bitset b(G.order());
    for (int g = 0; g < G.order(); ++g) {
        bool norm = true;
        for (int h = H.bits.first_set(); h >= 0; h = H.bits.next_set(h)) {
            if (!H.bits.test(G.conj(h, g))) {
                norm = false;
                break;
            }
        }
        if (norm) b.set(g);
    }
    return make_subgroup(G, std::move(b));
}

bool is_normal(const Group& G, const Subgroup& H) {
    return normalizer(G, H).order == G.order();
}

Subgroup center(const Group& G) {
    Bitset b(G.order());
    for (int g = 0; g < G.order(); ++g) {
        bool central = true;
        for (int x = 0; x < G.order(); ++x) {
            if (G.mul(g, x) != G.mul(x, g)) {
                central = false;
                break;
            }
        }
        if (central) b.set(g);
    }
    return make_subgroup(G, std::move(b));
}

std::vector<Subgroup> conjugates(const Group& G, const Subgroup& H) {
    std::vector<Subgroup> out;
    std::unordered_map<std::uint64_t, std::vector<int>> index;
    for (int g = 0; g < G.order(); ++g) {
        Subgroup c = conjugate_subgroup(G, H, g);
        auto& slot = index[c.bits.fnv_hash()];
        bool dup = false;
        for (int i : slot)
            if (out[i].bits == c.bits) {
                dup = true;
                break;
            }
        if (!dup) {
            slot.push_back(int(out.size()));
            out.push_back(std::move(c));
        }
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        return Bitset::lex_compare(a.bits, b.bits) < 0;
    });
    return out;
}

Subgroup sylow_subgroup(const Group& G, long long p) {
    if (!is_prime(p)) throw std::invalid_argument("sylow_subgroup: p must be prime");
    int n = G.order();
    int full = 1;
    {
        long long m = n;
        while (m % p == 0) {
            m /= p;
            full = int(full * p);
        }
    }
    Subgroup S = trivial_subgroup(G);
    while (S.order < full) {
        Subgroup N = normalizer(G, S);
        bool grown = false;
        for (int x = N.bits.first_set(); x >= 0; x = N.bits.next_set(x)) {
            if (S.bits.test(x)) continue;
            int ord = G.elem_order(x);
            bool ppower = true;
            while (ord > 1) {
                if (ord % p != 0) {
                    ppower = false;
                    break;
                }
                ord = int(ord / p);
            }
            if (!ppower) continue;
            Bitset seed = S.bits;
            seed.set(x);
            S = subgroup_closure(G, seed);
            grown = true;
            break;
        }
        if (!grown) throw std::logic_error("sylow_subgroup: failed to grow p-subgroup");
    }
    return S;
}

Group subgroup_as_group(const Group& G, const Subgroup& H, std::vector<int>* back_map) {
    std::vector<int> elems = H.bits.to_vector(); // ascending; identity (id 0) first
    if (elems.empty() || elems[0] != 0)
        throw std::invalid_argument("subgroup_as_group: missing identity");
    int m = int(elems.size());
    std::vector<int> pos(G.order(), -1);
    for (int i = 0; i < m; ++i) pos[elems[i]] = i;
    std::vector<std::uint16_t> table(std::size_t(m) * m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            int prod = G.mul(elems[i], elems[j]);
            if (pos[prod] < 0) throw std::invalid_argument("subgroup_as_group: set not closed");
            table[std::size_t(i) * m + j] = std::uint16_t(pos[prod]);
        }
    }
    if (back_map) *back_map = elems;
    return Group::from_table(std::move(table), m, {}, "");
}

} // namespace particover
