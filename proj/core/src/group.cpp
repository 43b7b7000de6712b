#include "particover/group.hpp"

#include "particover/util.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace particover {

namespace {

// Breadth-first closure over a concrete element domain. Ids follow discovery
// order, which is shortlex word order over the fixed generator sequence.
// Returns the element list and the full id-level multiplication table.
template <class E, class MulFn>
std::pair<std::vector<E>, std::vector<std::uint16_t>> bfs_closure(const E& identity,
                                                                  const std::vector<E>& gens,
                                                                  MulFn mul, int max_order) {
    if (max_order < 1 || max_order > kMaxGroupOrder)
        throw std::invalid_argument("bfs_closure: bad max-order guard");
    std::vector<E> elems{identity};
    std::map<E, int> ids;
    ids.emplace(identity, 0);
    for (std::size_t head = 0; head < elems.size(); ++head) {
        E cur = elems[head]; // copy: elems may grow below
        for (const E& g : gens) {
            E nxt = mul(cur, g);
            auto [it, fresh] = ids.emplace(nxt, int(elems.size()));
            (void)it;
            if (fresh) {
                elems.push_back(std::move(nxt));
                if (int(elems.size()) > max_order)
                    throw std::length_error("generator closure exceeds max-order guard");
            }
        }
    }
    int n = int(elems.size());
    std::vector<std::uint16_t> table(std::size_t(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            table[std::size_t(i) * n + j] = std::uint16_t(ids.at(mul(elems[i], elems[j])));
    return {std::move(elems), std::move(table)};
}

Perm identity_perm(int degree) {
    Perm p(degree);
    std::iota(p.begin(), p.end(), std::uint16_t(0));
    return p;
}

Perm compose(const Perm& a, const Perm& b) {
    // Apply a first, then b.
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
    return r;
}

} // namespace

Group Group::from_table(std::vector<std::uint16_t> table, int n, std::vector<int> generators,
                        std::string origin) {
    if (n < 1 || n > kMaxGroupOrder) throw std::invalid_argument("group order out of range");
    if (table.size() != std::size_t(n) * n) throw std::invalid_argument("table size mismatch");
    for (std::uint16_t v : table)
        if (v >= n) throw std::invalid_argument("table entry out of range");
    for (int g : generators)
        if (g < 0 || g >= n) throw std::invalid_argument("generator id out of range");

    // Latin square: every row and column is a permutation.
    std::vector<char> seen(n);
    for (int i = 0; i < n; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int j = 0; j < n; ++j) seen[table[std::size_t(i) * n + j]] = 1;
        for (int v = 0; v < n; ++v)
            if (!seen[v]) throw std::invalid_argument("table row is not a permutation");
        std::fill(seen.begin(), seen.end(), 0);
        for (int j = 0; j < n; ++j) seen[table[std::size_t(j) * n + i]] = 1;
        for (int v = 0; v < n; ++v)
            if (!seen[v]) throw std::invalid_argument("table column is not a permutation");
    }

    // Two-sided identity at id 0.
    for (int i = 0; i < n; ++i)
        if (table[i] != i || table[std::size_t(i) * n] != i)
            throw std::invalid_argument("id 0 is not a two-sided identity");

    // Two-sided inverses, exhaustively.
    std::vector<int> inv(n, -1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (table[std::size_t(i) * n + j] == 0) {
                inv[i] = j;
                break;
            }
        }
        if (inv[i] < 0 || table[std::size_t(inv[i]) * n + i] != 0)
            throw std::invalid_argument("missing two-sided inverse");
    }

    // Associativity: exhaustive at small order, fixed-seed sampling above.
    auto at = [&](int a, int b) { return table[std::size_t(a) * n + b]; };
    if (n <= 64) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (at(at(a, b), c) != at(a, at(b, c)))
                        throw std::invalid_argument("table is not associative");
    } else {
        std::uint64_t state = 0x5eed5eed5eed5eedULL;
        for (int t = 0; t < 10000; ++t) {
            int a = int(splitmix64(state) % n);
            int b = int(splitmix64(state) % n);
            int c = int(splitmix64(state) % n);
            if (at(at(a, b), c) != at(a, at(b, c)))
                throw std::invalid_argument("table is not associative");
        }
    }

    Group G;
    G.n_ = n;
    G.table_ = std::move(table);
    G.inv_ = std::move(inv);
    G.gens_ = std::move(generators);
    G.origin_ = std::move(origin);
    G.order_.assign(n, 1);
    for (int i = 1; i < n; ++i) {
        int k = i, ord = 1;
        while (k != 0) {
            k = G.table_[std::size_t(k) * n + i];
            ++ord;
        }
        G.order_[i] = ord;
    }
    return G;
}

int Group::elem_pow(int a, long long e) const {
    if (e < 0) return elem_pow(inv_[a], -e);
    int base = a, r = 0;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

bool Group::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

int Group::proj_q() const {
    if (!has_projective_context()) throw std::logic_error("group has no projective context");
    return proj_q_;
}

int Group::proj_char() const {
    if (!has_projective_context()) throw std::logic_error("group has no projective context");
    return proj_char_;
}

const Bitset& Group::point_stabilizer() const {
    if (!has_projective_context()) throw std::logic_error("group has no projective context");
    return point_stab_;
}

void Group::set_projective_context(int q, int p, Bitset stab) {
    proj_q_ = q;
    proj_char_ = p;
    point_stab_ = std::move(stab);
}

Group trivial_group() { return Group::from_table({0}, 1, {}, "C1"); }

Group cyclic(int n) {
    if (n < 1 || n > kMaxGroupOrder) throw std::invalid_argument("cyclic: order out of range");
    if (n == 1) return trivial_group();
    std::vector<std::uint16_t> table(std::size_t(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) table[std::size_t(i) * n + j] = std::uint16_t((i + j) % n);
    return Group::from_table(std::move(table), n, {1}, "C" + std::to_string(n));
}

Group elementary_abelian(int p, int n) {
    if (!is_prime(p)) throw std::invalid_argument("elementary_abelian: p must be prime");
    if (n < 1) throw std::invalid_argument("elementary_abelian: n must be >= 1");
    long long size = 1;
    for (int i = 0; i < n; ++i) {
        size *= p;
        if (size > kMaxGroupOrder)
            throw std::length_error("elementary_abelian: order exceeds guard");
    }
    using Vec = std::vector<int>;
    Vec id(n, 0);
    std::vector<Vec> gens;
    for (int i = 0; i < n; ++i) {
        Vec e(n, 0);
        e[i] = 1;
        gens.push_back(e);
    }
    auto mul = [p](const Vec& a, const Vec& b) {
        Vec r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % p;
        return r;
    };
    auto [elems, table] = bfs_closure(id, gens, mul, kMaxGroupOrder);
    (void)elems;
    std::vector<int> gen_ids(n);
    std::iota(gen_ids.begin(), gen_ids.end(), 1); // e_i discovered as ids 1..n
    std::string origin = "C" + std::to_string(p) + "^" + std::to_string(n);
    return Group::from_table(std::move(table), int(size), std::move(gen_ids), std::move(origin));
}

Group dihedral(int order) {
    if (order < 2 || order % 2 != 0 || order > kMaxGroupOrder)
        throw std::invalid_argument("dihedral: order must be even and in range");
    int n = order / 2;
    std::vector<Perm> gens;
    int degree;
    if (n == 1) {
        degree = 2;
        gens = {Perm{1, 0}};
    } else if (n == 2) {
        degree = 4;
        gens = {Perm{1, 0, 2, 3}, Perm{0, 1, 3, 2}};
    } else {
        degree = n;
        Perm r(n), s(n);
        for (int i = 0; i < n; ++i) {
            r[i] = std::uint16_t((i + 1) % n);
            s[i] = std::uint16_t((n - i) % n);
        }
        gens = {r, s};
    }
    return build_from_permutations(gens, degree, kMaxGroupOrder, "D" + std::to_string(order));
}

Group symmetric(int n) {
    if (n < 1) throw std::invalid_argument("symmetric: n must be >= 1");
    std::string origin = "S" + std::to_string(n);
    if (n == 1) return build_from_permutations({}, 1, kMaxGroupOrder, origin);
    Perm t = identity_perm(n);
    t[0] = 1;
    t[1] = 0;
    Perm c(n);
    for (int i = 0; i < n; ++i) c[i] = std::uint16_t((i + 1) % n);
    std::vector<Perm> gens{t};
    if (c != t) gens.push_back(c);
    return build_from_permutations(gens, n, kMaxGroupOrder, origin);
}

Group alternating(int n) {
    if (n < 1) throw std::invalid_argument("alternating: n must be >= 1");
    std::string origin = "A" + std::to_string(n);
    if (n <= 2) return build_from_permutations({}, std::max(n, 1), kMaxGroupOrder, origin);
    Perm a = identity_perm(n);
    a[0] = 1;
    a[1] = 2;
    a[2] = 0;
    std::vector<Perm> gens{a};
    if (n > 3) {
        Perm b = identity_perm(n);
        if (n % 2 == 1) {
            for (int i = 0; i < n; ++i) b[i] = std::uint16_t((i + 1) % n);
        } else {
            for (int i = 1; i < n; ++i) b[i] = std::uint16_t(i == n - 1 ? 1 : i + 1);
        }
        gens.push_back(b);
    }
    return build_from_permutations(gens, n, kMaxGroupOrder, origin);
}

Group direct_product(const Group& a, const Group& b) {
    long long size = (long long)a.order() * b.order();
    if (size > kMaxGroupOrder) throw std::length_error("direct_product: order exceeds guard");
    using Pair = std::pair<int, int>;
    Pair id{0, 0};
    std::vector<Pair> gens;
    for (int g : a.generators()) gens.push_back({g, 0});
    for (int h : b.generators()) gens.push_back({0, h});
    auto mul = [&a, &b](const Pair& x, const Pair& y) {
        return Pair{a.mul(x.first, y.first), b.mul(x.second, y.second)};
    };
    auto [elems, table] = bfs_closure(id, gens, mul, kMaxGroupOrder);
    if (int(elems.size()) != size)
        throw std::logic_error("direct_product: closure does not reach full product");
    std::vector<int> gen_ids(gens.size());
    std::iota(gen_ids.begin(), gen_ids.end(), 1);
    std::string origin;
    if (!a.origin().empty() && !b.origin().empty()) origin = a.origin() + " x " + b.origin();
    return Group::from_table(std::move(table), int(size), std::move(gen_ids), std::move(origin));
}

Group build_from_permutations(const std::vector<Perm>& gens, int degree, int max_order,
                              std::string origin) {
    if (degree < 1) throw std::invalid_argument("build_from_permutations: degree must be >= 1");
    for (const Perm& g : gens) {
        if (int(g.size()) != degree)
            throw std::invalid_argument("build_from_permutations: generator degree mismatch");
        std::vector<char> seen(degree, 0);
        for (std::uint16_t v : g) {
            if (v >= degree || seen[v])
                throw std::invalid_argument("build_from_permutations: not a permutation");
            seen[v] = 1;
        }
    }
    auto [elems, table] = bfs_closure(identity_perm(degree), gens, compose, max_order);
    int n = int(elems.size());
    // Generator ids are their BFS discovery ids; duplicates and identity
    // generators resolve to already-assigned ids.
    std::map<Perm, int> ids;
    for (int i = 0; i < n; ++i) ids.emplace(elems[i], i);
    std::vector<int> gen_ids;
    for (const Perm& g : gens) gen_ids.push_back(ids.at(g));
    return Group::from_table(std::move(table), n, std::move(gen_ids), std::move(origin));
}

namespace {

// 2x2 matrices over GF(q) with entries as canonical element indices,
// canonicalized projectively: first nonzero entry (row-major) scaled to 1.
struct ProjDomain {
    long long q;
    int one; // index of the multiplicative identity (not 1 for extension fields)
    std::vector<int> mul_t, add_t, inv_t;

    explicit ProjDomain(const FiniteField& F) : q(F.order()), one(int(F.index_of(F.one()))) {
        mul_t.assign(std::size_t(q) * q, 0);
        add_t.assign(std::size_t(q) * q, 0);
        inv_t.assign(std::size_t(q), 0);
        for (long long i = 0; i < q; ++i) {
            FieldElem a = F.element_at(i);
            if (i != 0) inv_t[i] = int(F.index_of(F.inv(a)));
            for (long long j = 0; j < q; ++j) {
                FieldElem b = F.element_at(j);
                mul_t[std::size_t(i) * q + j] = int(F.index_of(F.mul(a, b)));
                add_t[std::size_t(i) * q + j] = int(F.index_of(F.add(a, b)));
            }
        }
    }

    int fmul(int a, int b) const { return mul_t[std::size_t(a) * q + b]; }
    int fadd(int a, int b) const { return add_t[std::size_t(a) * q + b]; }

    using Mat = std::array<int, 4>;

    Mat canon(Mat m) const {
        int pivot = 0;
        for (int v : m)
            if (v) {
                pivot = v;
                break;
            }
        if (!pivot) throw std::invalid_argument("projective matrix is zero");
        int s = inv_t[pivot];
        for (int& v : m) v = fmul(s, v);
        return m;
    }

    Mat mul(const Mat& x, const Mat& y) const {
        Mat r{fadd(fmul(x[0], y[0]), fmul(x[1], y[2])), fadd(fmul(x[0], y[1]), fmul(x[1], y[3])),
              fadd(fmul(x[2], y[0]), fmul(x[3], y[2])), fadd(fmul(x[2], y[1]), fmul(x[3], y[3]))};
        return canon(r);
    }

    int det(const Mat& m) const {
        int d1 = fmul(m[0], m[3]), d2 = fmul(m[1], m[2]);
        // d1 - d2: find e with d2 + e = d1
        for (int e = 0; e < int(q); ++e)
            if (fadd(d2, e) == d1) return e;
        throw std::logic_error("field subtraction failed");
    }
};

Group build_projective(const FiniteField& F, const std::vector<ProjDomain::Mat>& raw_gens,
                       int max_order, std::string origin) {
    ProjDomain dom(F);
    ProjDomain::Mat id{dom.one, 0, 0, dom.one};
    std::vector<ProjDomain::Mat> gens;
    for (ProjDomain::Mat g : raw_gens) {
        ProjDomain::Mat c = dom.canon(g);
        if (dom.det(c) == 0)
            throw std::invalid_argument("projective generator is singular");
        gens.push_back(c);
    }
    auto mul = [&dom](const ProjDomain::Mat& a, const ProjDomain::Mat& b) { return dom.mul(a, b); };
    auto [elems, table] = bfs_closure(id, gens, mul, max_order);
    int n = int(elems.size());
    std::map<ProjDomain::Mat, int> ids;
    for (int i = 0; i < n; ++i) ids.emplace(elems[i], i);
    std::vector<int> gen_ids;
    for (const auto& g : gens) gen_ids.push_back(ids.at(g));
    Group G = Group::from_table(std::move(table), n, std::move(gen_ids), std::move(origin));
    // Stabilizer of the projective point represented by the first standard
    // basis vector: matrices with zero lower-left entry.
    Bitset stab(n);
    for (int i = 0; i < n; ++i)
        if (elems[i][2] == 0) stab.set(i);
    G.set_projective_context(int(F.order()), F.p(), std::move(stab));
    return G;
}

std::pair<int, int> prime_power_or_throw(int q, const char* who) {
    long long p;
    int f;
    if (q < 2 || !prime_power(q, p, f))
        throw std::invalid_argument(std::string(who) + ": q must be a prime power >= 2");
    return {int(p), f};
}

} // namespace

Group build_from_projective_matrices(const FiniteField& F,
                                     const std::vector<std::array<FieldElem, 4>>& gens,
                                     int max_order, std::string origin) {
    std::vector<ProjDomain::Mat> raw;
    for (const auto& g : gens)
        raw.push_back({int(F.index_of(g[0])), int(F.index_of(g[1])), int(F.index_of(g[2])),
                       int(F.index_of(g[3]))});
    return build_projective(F, raw, max_order, std::move(origin));
}

Group psl2(int q) {
    auto [p, f] = prime_power_or_throw(q, "psl2");
    long long ord = (long long)q * ((long long)q * q - 1) / (p == 2 ? 1 : 2);
    if (ord > kMaxGroupOrder) throw std::length_error("psl2: order exceeds guard");
    FiniteField F = FiniteField::make(p, f);
    std::vector<std::array<FieldElem, 4>> gens;
    for (int i = 0; i < f; ++i) {
        std::vector<int> c(f, 0);
        c[i] = 1; // x^i
        gens.push_back({F.one(), F.from_coeffs(c), F.zero(), F.one()});
    }
    gens.push_back({F.zero(), F.one(), F.neg(F.one()), F.zero()});
    return build_from_projective_matrices(F, gens, kMaxGroupOrder,
                                          "PSL2(" + std::to_string(q) + ")");
}

Group pgl2(int q) {
    auto [p, f] = prime_power_or_throw(q, "pgl2");
    long long ord = (long long)q * ((long long)q * q - 1);
    if (ord > kMaxGroupOrder) throw std::length_error("pgl2: order exceeds guard");
    FiniteField F = FiniteField::make(p, f);
    std::vector<std::array<FieldElem, 4>> gens;
    for (int i = 0; i < f; ++i) {
        std::vector<int> c(f, 0);
        c[i] = 1;
        gens.push_back({F.one(), F.from_coeffs(c), F.zero(), F.one()});
    }
    gens.push_back({F.zero(), F.one(), F.neg(F.one()), F.zero()});
    gens.push_back({F.multiplicative_generator(), F.zero(), F.zero(), F.one()});
    return build_from_projective_matrices(F, gens, kMaxGroupOrder,
                                          "PGL2(" + std::to_string(q) + ")");
}

Group agl1_frobenius(int q, int d) {
    auto [p, f] = prime_power_or_throw(q, "agl1_frobenius");
    if (d <= 1 || (q - 1) % d != 0)
        throw std::invalid_argument("agl1_frobenius: d must divide q-1 and exceed 1");
    if ((long long)q * d > kMaxGroupOrder)
        throw std::length_error("agl1_frobenius: order exceeds guard");
    FiniteField F = FiniteField::make(p, f);
    FieldElem m = F.pow(F.multiplicative_generator(), (q - 1) / d);
    std::vector<Perm> gens;
    for (int i = 0; i < f; ++i) {
        std::vector<int> c(f, 0);
        c[i] = 1;
        FieldElem shift = F.from_coeffs(c);
        Perm t(q);
        for (int j = 0; j < q; ++j)
            t[j] = std::uint16_t(F.index_of(F.add(F.element_at(j), shift)));
        gens.push_back(std::move(t));
    }
    Perm mult(q);
    for (int j = 0; j < q; ++j) mult[j] = std::uint16_t(F.index_of(F.mul(F.element_at(j), m)));
    gens.push_back(std::move(mult));
    std::string origin = "AGL1(" + std::to_string(q) + "," + std::to_string(d) + ")";
    return build_from_permutations(gens, q, kMaxGroupOrder, std::move(origin));
}

} // namespace particover
