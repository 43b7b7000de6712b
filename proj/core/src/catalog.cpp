#include "particover/catalog.hpp"

#include "particover/group.hpp"
#include "particover/predicates.hpp"
#include "particover/util.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace particover {

namespace {

GroupSpec atom(Family family, long long a, long long b = 0) {
    GroupSpec g;
    g.family = family;
    g.a = a;
    g.b = b;
    return g;
}

std::vector<GroupSpec> base_specs(long long cap) {
    std::vector<GroupSpec> out;
    for (long long n = 2; n <= cap; ++n) out.push_back(atom(Family::Cyclic, n));
    for (long long p = 2; p * p <= cap; ++p) {
        if (!is_prime(p)) continue;
        long long q = p * p;
        for (int n = 2; q <= cap; ++n, q *= p)
            out.push_back(atom(Family::ElementaryAbelian, p, n));
    }
    for (long long order = 4; order <= cap; order += 2) out.push_back(atom(Family::Dihedral, order));
    if (cap >= 6) out.push_back(atom(Family::Symmetric, 3));
    if (cap >= 24) out.push_back(atom(Family::Symmetric, 4));
    if (cap >= 12) out.push_back(atom(Family::Alternating, 4));
    for (long long q = 3; q <= cap; ++q) {
        long long p = 0;
        int f = 0;
        if (!prime_power(q, p, f)) continue;
        for (long long d = 2; d < q && q * d <= cap; ++d)
            if ((q - 1) % d == 0) out.push_back(atom(Family::AGL1, q, d));
    }
    return out;
}

} // namespace

std::vector<GroupSpec> catalog_specs(long long max_order) {
    if (max_order < 1 || max_order > kMaxGroupOrder)
        throw std::invalid_argument("catalog_specs: max_order out of range");
    std::vector<GroupSpec> base = base_specs(max_order);
    std::vector<GroupSpec> all = base;
    for (std::size_t i = 0; i < base.size(); ++i)
        for (std::size_t j = i; j < base.size(); ++j) {
            if (base[i].order() * base[j].order() > max_order) continue;
            GroupSpec prod;
            prod.family = Family::Product;
            prod.factors = {base[i], base[j]};
            all.push_back(std::move(prod));
        }
    std::set<std::string> seen;
    std::vector<GroupSpec> out;
    for (GroupSpec& g : all)
        if (seen.insert(g.to_string()).second) out.push_back(std::move(g));
    std::sort(out.begin(), out.end(), [](const GroupSpec& x, const GroupSpec& y) {
        long long ox = x.order(), oy = y.order();
        if (ox != oy) return ox < oy;
        return x.to_string() < y.to_string();
    });
    return out;
}

std::vector<GroupSpec> solvable_noncyclic_catalog(long long max_order) {
    std::vector<GroupSpec> out;
    for (GroupSpec& spec : catalog_specs(max_order)) {
        Group g = spec.build();
        if (is_cyclic(g) || !is_solvable(g)) continue;
        out.push_back(std::move(spec));
    }
    return out;
}

} // namespace particover
