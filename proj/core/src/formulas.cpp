#include "particover/formulas.hpp"

#include "particover/chief.hpp"
#include "particover/lattice.hpp"

#include <limits>
#include <stdexcept>

namespace particover {

namespace {

bool sylow_is_cyclic(const Group& G, const Subgroup& S) {
    for (int x = S.bits.first_set(); x >= 0; x = S.bits.next_set(x))
        if (G.elem_order(x) == S.order) return true;
    return S.order == 1;
}

// Multiplicative order of base modulo mod (requires gcd(base, mod) == 1).
int multiplicative_order(long long base, long long mod) {
    long long cur = base % mod;
    if (cur < 0) cur += mod;
    if (mod == 1) return 1;
    int t = 1;
    while (cur != 1) {
        cur = cur * base % mod;
        ++t;
        if (t > mod) throw std::logic_error("multiplicative_order: base is not invertible");
    }
    return t;
}

bool kernel_is_minimal_normal(const Group& G, const Subgroup& K) {
    // Minimal normal <=> the normal closure of every nonidentity element is
    // the whole of K.
    for (int x = K.bits.first_set(); x >= 0; x = K.bits.next_set(x)) {
        if (x == 0) continue;
        Bitset seed(G.order());
        for (int g = 0; g < G.order(); ++g) seed.set(G.conj(x, g));
        Subgroup cl = subgroup_closure(G, seed);
        if (Bitset::lex_compare(cl.bits, K.bits) != 0) return false;
    }
    return true;
}

} // namespace

long long tomkinson_sigma(const Group& G) {
    if (is_cyclic(G)) throw std::invalid_argument("tomkinson_sigma: cyclic groups have no finite cover");
    if (!is_solvable(G)) throw std::invalid_argument("tomkinson_sigma: group must be solvable");
    ChiefSeries series = chief_series(G);
    long long best = std::numeric_limits<long long>::max();
    for (const ChiefFactor& f : series.factors)
        if (f.complement_count >= 2) best = std::min(best, (long long)f.order + 1);
    if (best == std::numeric_limits<long long>::max())
        throw std::logic_error("tomkinson_sigma: no chief factor with two complements");
    return best;
}

long long nilpotent_sigma(const Group& G) {
    if (is_cyclic(G))
        throw std::invalid_argument("nilpotent_sigma: cyclic groups have no finite cover");
    if (!is_nilpotent(G)) throw std::invalid_argument("nilpotent_sigma: group must be nilpotent");
    long long best = std::numeric_limits<long long>::max();
    for (auto [p, k] : factorize(G.order())) {
        (void)k;
        if (!sylow_is_cyclic(G, sylow_subgroup(G, p))) {
            best = std::min(best, p + 1);
            break; // factorize is ascending, so the first hit is the minimum
        }
    }
    if (best == std::numeric_limits<long long>::max())
        throw std::logic_error("nilpotent_sigma: all Sylow subgroups cyclic in a noncyclic group");
    return best;
}

std::optional<long long> rho_formula(const GroupSpec& spec) {
    switch (spec.family) {
    case Family::Cyclic:
        return std::nullopt;
    case Family::ElementaryAbelian: {
        if (spec.b < 1 || !is_prime(spec.a))
            throw std::invalid_argument("rho_formula: invalid elementary-abelian parameters");
        if (spec.b < 2) return std::nullopt;
        return 1 + ipow(spec.a, int((spec.b + 1) / 2));
    }
    case Family::Dihedral: {
        if (spec.a < 2 || spec.a % 2 != 0)
            throw std::invalid_argument("rho_formula: invalid dihedral order");
        if (spec.a < 4) return std::nullopt;
        return spec.a / 2 + 1;
    }
    case Family::Symmetric:
        if (spec.a == 3) return 4;
        if (spec.a == 4) return 10;
        return std::nullopt;
    case Family::Alternating:
        return spec.a == 4 ? std::optional<long long>(5) : std::nullopt;
    case Family::PSL2: {
        long long q = spec.a;
        if ((q >= 4 && q % 2 == 0) || q >= 7) return q * q + 1;
        return std::nullopt;
    }
    case Family::PGL2: {
        long long q = spec.a;
        if (q >= 3) return q * q + 1;
        return std::nullopt;
    }
    case Family::AGL1: {
        long long q = spec.a, d = spec.b, p = 0;
        int f = 0;
        if (!prime_power(q, p, f) || d < 2 || (q - 1) % d != 0)
            throw std::invalid_argument("rho_formula: invalid affine parameters");
        // The kernel is a minimal normal subgroup exactly when the scalar
        // action of order d is irreducible over GF(p), i.e. when p has
        // multiplicative order f modulo d.
        if (multiplicative_order(p, d) == f) return q + 1;
        return std::nullopt;
    }
    case Family::Suzuki:
    case Family::Product:
        return std::nullopt;
    }
    throw std::invalid_argument("rho_formula: unknown family");
}

long long sigma_psl_formula(int q, LinearVariant variant) {
    long long p = 0;
    int k = 0;
    if (!prime_power(q, p, k))
        throw std::invalid_argument("sigma_psl_formula: q must be a prime power");
    if (variant == LinearVariant::PSL) {
        if (q < 4) throw std::invalid_argument("sigma_psl_formula: PSL variant needs q >= 4");
        if (q == 5) return 10;
        if (q == 7) return 15;
        if (q == 9) return 16;
        long long base = (long long)q * (q + 1) / 2;
        return q % 2 == 0 ? base : base + 1;
    }
    if (q < 5 || q % 2 == 0)
        throw std::invalid_argument("sigma_psl_formula: PGL variant needs odd q >= 5");
    return (long long)q * (q + 1) / 2 + 1;
}

SuzukiReport suzuki_report(int m) {
    if (m < 1 || m > 12)
        throw std::invalid_argument("suzuki_report: m must lie in [1, 12]");
    SuzukiReport rep;
    rep.m = m;
    rep.q = 1LL << (2 * m + 1);
    rep.r = 1LL << (m + 1);
    const u128 q2 = u128(rep.q) * u128(rep.q);
    rep.order = q2 * (q2 + 1) * u128(rep.q - 1);
    rep.sigma = q2 * (q2 + 1) / 2;
    const u128 tori_plus = rep.order / (u128(4) * u128(rep.q + rep.r + 1));
    const u128 tori_minus = rep.order / (u128(4) * u128(rep.q - rep.r + 1));
    rep.psi_size = (q2 + 1) + rep.sigma + tori_plus + tori_minus;
    rep.rho_lower = rep.sigma + q2 - 1;
    rep.torus_identity = u128(rep.q + rep.r + 1) * u128(rep.q - rep.r + 1) == q2 + 1;
    const u128 census = (q2 - 1) * (q2 + 1)           // Sylow 2-subgroups
                        + u128(rep.q - 2) * rep.sigma // tori of order q-1
                        + u128(rep.q + rep.r) * tori_plus + u128(rep.q - rep.r) * tori_minus + 1;
    rep.census_identity = census == rep.order;
    return rep;
}

bool main_theorem_predicate(const Group& G) {
    const long long n = G.order();
    if (n == 1) return false;
    long long p = 0;
    if (is_pgroup(G, &p)) return !is_cyclic(G) && n == p * p;
    std::optional<FrobeniusWitness> w = frobenius_witness(G);
    if (!w) return false;
    return kernel_is_minimal_normal(G, w->kernel);
}

std::optional<long long> ht_rho(const Group& G, long long p) {
    const long long n = G.order();
    if (!is_prime(p) || n % p != 0)
        throw std::invalid_argument("ht_rho: p must be a prime divisor of the group order");
    if (is_pgroup(G)) return std::nullopt;
    Subgroup H = hughes_subgroup(G, p);
    if (H.order == n || (long long)H.order * p != n) return std::nullopt;
    for (int x = 0; x < G.order(); ++x)
        if (!H.bits.test(x) && G.elem_order(x) != p) return std::nullopt;
    if (frobenius_witness(G)) {
        // Only a cyclic normal Hughes subgroup keeps the 1 + |H_p| value
        // minimal in the Frobenius case.
        bool cyclic = false;
        for (int x = H.bits.first_set(); x >= 0; x = H.bits.next_set(x))
            if (G.elem_order(x) == H.order) cyclic = true;
        if (!cyclic || !is_normal(G, H)) return std::nullopt;
    }
    return 1 + (long long)H.order;
}

} // namespace particover
