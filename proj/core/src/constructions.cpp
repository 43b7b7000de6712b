#include "particover/constructions.hpp"

#include "particover/gf.hpp"
#include "particover/util.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace particover {

namespace {

// Element id for each exponent vector over the declared generators, indexed
// by the mixed-radix number with the first generator most significant.
std::vector<int> coordinate_ids(const Group& G, int p, int n) {
    const std::vector<int>& gens = G.generators();
    if (int(gens.size()) != n)
        throw std::logic_error("coordinate_ids: generator count mismatch");
    long long total = ipow(p, n);
    if (total != G.order()) throw std::logic_error("coordinate_ids: order mismatch");
    std::vector<int> ids(std::size_t(total), 0);
    std::vector<long long> weight(n);
    weight[n - 1] = 1;
    for (int i = n - 2; i >= 0; --i) weight[i] = weight[i + 1] * p;
    for (long long a = 0; a < total; ++a) {
        int e = 0;
        for (int i = 0; i < n; ++i) {
            long long c = (a / weight[i]) % p;
            if (c != 0) e = G.mul(e, G.elem_pow(gens[i], c));
        }
        ids[std::size_t(a)] = e;
    }
    std::vector<char> seen(std::size_t(total), 0);
    for (int e : ids) {
        if (seen[std::size_t(e)]) throw std::logic_error("coordinate_ids: map is not a bijection");
        seen[std::size_t(e)] = 1;
    }
    return ids;
}

// The 1-dimensional subspaces of GF(q)^2 as index pairs a = x_index * q + y_index;
// line 0..q-1 is y = lambda * x, line q is x = 0.
std::vector<std::vector<long long>> plane_lines(const FiniteField& F) {
    const long long q = F.order();
    std::vector<std::vector<long long>> lines;
    for (long long li = 0; li < q; ++li) {
        FieldElem lam = F.element_at(li);
        std::vector<long long> mem;
        for (long long ti = 1; ti < q; ++ti) {
            FieldElem t = F.element_at(ti);
            long long yi = F.index_of(F.mul(lam, t));
            mem.push_back(ti * q + yi);
        }
        lines.push_back(std::move(mem));
    }
    std::vector<long long> inf;
    for (long long ti = 1; ti < q; ++ti) inf.push_back(ti);
    lines.push_back(std::move(inf));
    return lines;
}

struct SubgroupLexLess {
    bool operator()(const Subgroup& a, const Subgroup& b) const {
        return Bitset::lex_compare(a.bits, b.bits) < 0;
    }
};

// Shared projective assembly over an already built group and lattice.
PartitionCertificate projective_partition_on(const Group& G, const std::vector<Subgroup>& all,
                                             int q, bool halved_tori) {
    const int n = G.order();
    const Bitset& stab = G.point_stabilizer();
    std::vector<Subgroup> parts;
    parts.push_back(make_subgroup(G, stab));

    auto add_tori = [&](int t) {
        std::set<Subgroup, SubgroupLexLess> found;
        for (int x = 1; x < n; ++x)
            if (G.elem_order(x) == t) {
                Subgroup s = cyclic_subgroup(G, x);
                if (!s.bits.is_subset_of(stab)) found.insert(std::move(s));
            }
        for (const Subgroup& s : found) parts.push_back(s);
    };
    add_tori(halved_tori ? (q - 1) / 2 : q - 1);
    add_tori(halved_tori ? (q + 1) / 2 : q + 1);

    Subgroup syl = sylow_subgroup(G, G.proj_char());
    for (const Subgroup& s : conjugates(G, syl))
        if (!s.bits.is_subset_of(stab)) parts.push_back(s);

    if (int(parts.size()) != q * q + 1)
        throw std::logic_error("projective partition: expected " + std::to_string(q * q + 1) +
                               " parts, assembled " + std::to_string(parts.size()));
    PartitionCertificate cert = as_partition_certificate(parts, all);
    if (!verify_partition(G, all, cert))
        throw std::logic_error("projective partition: assembled parts do not partition the group");
    return cert;
}

void check_projective_domain(int q, LinearVariant variant) {
    long long p;
    int k;
    if (!prime_power(q, p, k))
        throw std::invalid_argument("psl_pgl_partition: q must be a prime power");
    if (variant == LinearVariant::PSL) {
        if (!(q >= 4 && (q % 2 == 0 || q >= 7)))
            throw std::invalid_argument(
                "psl_pgl_partition: PSL variant needs even q >= 4 or odd q >= 7");
    } else {
        if (!(q >= 4))
            throw std::invalid_argument("psl_pgl_partition: PGL variant needs q >= 4 even or q >= 5 odd");
    }
}

} // namespace

PartitionCertificate frobenius_partition(const Group& G, const FrobeniusWitness& w) {
    const int n = G.order();
    if (w.kernel.bits.size() != n || w.complement.bits.size() != n)
        throw std::invalid_argument("frobenius_partition: witness belongs to a different group");
    if (w.kernel.order < 2 || w.complement.order < 2)
        throw std::invalid_argument("frobenius_partition: witness parts must be nontrivial");
    if (!is_subgroup(G, w.kernel.bits) || !is_subgroup(G, w.complement.bits))
        throw std::invalid_argument("frobenius_partition: witness parts are not subgroups");
    if ((long long)w.kernel.order * w.complement.order != n ||
        w.kernel.bits.count_and(w.complement.bits) != 1)
        throw std::invalid_argument("frobenius_partition: witness does not split the group");

    std::vector<Subgroup> parts;
    parts.push_back(make_subgroup(G, w.kernel.bits));
    for (const Subgroup& c : conjugates(G, w.complement)) parts.push_back(c);
    if (int(parts.size()) != w.kernel.order + 1)
        throw std::invalid_argument(
            "frobenius_partition: complement conjugate count does not match the kernel order");

    std::vector<Subgroup> all = all_subgroups(G);
    PartitionCertificate cert = as_partition_certificate(parts, all);
    if (!verify_partition(G, all, cert))
        throw std::invalid_argument("frobenius_partition: witness does not induce a partition");
    return cert;
}

PartitionCertificate elementary_abelian_partition(int p, int n) {
    if (!is_prime(p)) throw std::invalid_argument("elementary_abelian_partition: p must be prime");
    if (n < 2) throw std::invalid_argument("elementary_abelian_partition: needs n >= 2");

    if (n % 2 == 0) {
        const int m = n / 2;
        Group G = elementary_abelian(p, n);
        FiniteField F = FiniteField::make(p, m);
        const long long q = F.order();
        std::vector<int> ids = coordinate_ids(G, p, n);
        std::vector<Subgroup> parts;
        for (const std::vector<long long>& line : plane_lines(F)) {
            Bitset bits(G.order());
            bits.set(0);
            for (long long a : line) bits.set(ids[std::size_t(a)]);
            parts.push_back(make_subgroup(G, bits));
        }
        if ((long long)parts.size() != q + 1)
            throw std::logic_error("elementary_abelian_partition: wrong line count");
        std::vector<Subgroup> all = all_subgroups(G);
        PartitionCertificate cert = as_partition_certificate(parts, all);
        if (!verify_partition(G, all, cert))
            throw std::logic_error("elementary_abelian_partition: lines do not partition the group");
        return cert;
    }

    // Odd rank: cut the even partition of C_p^(n+1) down to an index-p
    // subgroup. With generator exponents written as digits, that subgroup is
    // "last digit zero", and dropping the digit identifies it with C_p^n.
    const int m = (n + 1) / 2;
    Group G = elementary_abelian(p, n);
    FiniteField F = FiniteField::make(p, m);
    const long long q = F.order();
    std::vector<int> ids = coordinate_ids(G, p, n);
    std::vector<Subgroup> parts;
    for (const std::vector<long long>& line : plane_lines(F)) {
        Bitset bits(G.order());
        bits.set(0);
        for (long long a : line)
            if (a % p == 0) bits.set(ids[std::size_t(a / p)]);
        if (bits.count() >= 2) parts.push_back(make_subgroup(G, bits));
    }
    if ((long long)parts.size() != q + 1)
        throw std::logic_error("elementary_abelian_partition: wrong cut-line count");
    std::vector<Subgroup> all = all_subgroups(G);
    PartitionCertificate cert = as_partition_certificate(parts, all);
    if (!verify_partition(G, all, cert))
        throw std::logic_error("elementary_abelian_partition: cut lines do not partition the group");
    return cert;
}

PartitionCertificate psl_pgl_partition(int q, LinearVariant variant) {
    check_projective_domain(q, variant);
    long long order;
    if (variant == LinearVariant::PGL)
        order = (long long)q * (q - 1) * (q + 1);
    else
        order = (long long)q * (q - 1) * (q + 1) / (q % 2 == 0 ? 1 : 2);
    if (order > 1000)
        throw std::length_error("psl_pgl_partition: group order exceeds the subgroup-lattice guard");
    Group G = variant == LinearVariant::PGL ? pgl2(q) : psl2(q);
    std::vector<Subgroup> all = all_subgroups(G);
    bool halved = variant == LinearVariant::PSL && q % 2 == 1;
    return projective_partition_on(G, all, q, halved);
}

Group exceptional_group(ExceptionalGroup which) {
    switch (which) {
    case ExceptionalGroup::PGL2_5:
        return pgl2(5);
    case ExceptionalGroup::PSL2_7:
        return psl2(7);
    case ExceptionalGroup::PSL2_9:
        return psl2(9);
    case ExceptionalGroup::PSL2_11:
        return psl2(11);
    }
    throw std::logic_error("exceptional_group: unknown value");
}

PartitionCertificate exceptional_partition(ExceptionalGroup which) {
    int q = 0;
    bool halved = true;
    std::map<int, int> census;
    switch (which) {
    case ExceptionalGroup::PGL2_5:
        q = 5;
        halved = false;
        census = {{4, 10}, {5, 5}, {6, 10}, {20, 1}};
        break;
    case ExceptionalGroup::PSL2_7:
        q = 7;
        census = {{3, 21}, {4, 21}, {7, 7}, {21, 1}};
        break;
    case ExceptionalGroup::PSL2_9:
        q = 9;
        census = {{4, 36}, {5, 36}, {9, 9}, {36, 1}};
        break;
    case ExceptionalGroup::PSL2_11:
        q = 11;
        census = {{5, 55}, {6, 55}, {11, 11}, {55, 1}};
        break;
    }
    Group G = exceptional_group(which);
    std::vector<Subgroup> all = all_subgroups(G);
    PartitionCertificate cert = projective_partition_on(G, all, q, halved);
    std::map<int, int> got;
    for (int idx : cert.members) ++got[all[std::size_t(idx)].order];
    if (got != census)
        throw std::logic_error("exceptional_partition: member order census mismatch");
    return cert;
}

DihedralIntersectionReport dihedral_intersection_checks(int q) {
    if (q != 4 && q != 8)
        throw std::invalid_argument("dihedral_intersection_checks: q must be 4 or 8");
    Group G = psl2(q);
    std::vector<Subgroup> all = all_subgroups(G);
    std::vector<int> small, large;
    for (int i = 0; i < int(all.size()); ++i) {
        if (all[i].order == 2 * (q - 1)) small.push_back(i);
        if (all[i].order == 2 * (q + 1)) large.push_back(i);
    }
    DihedralIntersectionReport rep;
    rep.q = q;
    for (std::size_t a = 0; a < small.size() && rep.small_first < 0; ++a) {
        std::vector<Subgroup> conj = conjugates(G, all[std::size_t(small[a])]);
        for (std::size_t b = a + 1; b < small.size(); ++b) {
            int inter = all[std::size_t(small[a])].bits.count_and(all[std::size_t(small[b])].bits);
            if (inter <= 1) continue;
            bool conjugate_pair = false;
            for (const Subgroup& c : conj)
                if (Bitset::lex_compare(c.bits, all[std::size_t(small[b])].bits) == 0)
                    conjugate_pair = true;
            if (!conjugate_pair) continue;
            rep.small_first = small[a];
            rep.small_second = small[b];
            rep.small_intersection_order = inter;
            break;
        }
    }
    std::map<int, long long> hist;
    for (std::size_t a = 0; a < large.size(); ++a)
        for (std::size_t b = a + 1; b < large.size(); ++b)
            ++hist[all[std::size_t(large[a])].bits.count_and(all[std::size_t(large[b])].bits)];
    rep.large_pair_histogram.assign(hist.begin(), hist.end());
    rep.large_pairwise_order_two = hist.size() == 1 && hist.begin()->first == 2;
    return rep;
}

} // namespace particover
