#pragma once

#include "particover/bitset.hpp"
#include "particover/gf.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace particover {

// Permutation of [0, degree) given by its image vector.
using Perm = std::vector<std::uint16_t>;

// Hard cap on constructible group order (element ids fit in uint16_t and the
// full multiplication table stays desk-scale).
inline constexpr int kMaxGroupOrder = 4096;

// Immutable finite group on canonical element ids 0..order-1 with 0 = identity.
// Ids are assigned by breadth-first closure over the declared generator
// sequence, exploring generator words in shortlex order.
class Group {
public:
    // Validates the table fully: latin square, identity at 0, two-sided
    // inverses (exhaustive), associativity (exhaustive for order <= 64, else
    // 10^4 fixed-seed random triples).
    static Group from_table(std::vector<std::uint16_t> table, int n, std::vector<int> generators,
                            std::string origin);

    int order() const { return n_; }
    int mul(int a, int b) const { return table_[std::size_t(a) * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    // x conjugated by g: g^{-1} x g.
    int conj(int x, int g) const { return mul(mul(inv_[g], x), g); }
    int elem_order(int a) const { return order_[a]; }
    int elem_pow(int a, long long e) const;
    const std::vector<int>& generators() const { return gens_; }
    // Canonical spec text of the constructor that built this group ("" if ad hoc).
    const std::string& origin() const { return origin_; }
    bool is_abelian() const;

    // Projective-line context, present only for groups built from projective
    // matrices: the defining q, the field characteristic, and the stabilizer
    // of the projective point represented by the first standard basis vector.
    bool has_projective_context() const { return proj_q_ != 0; }
    int proj_q() const;
    int proj_char() const;
    const Bitset& point_stabilizer() const;

    // Set once by the projective builders.
    void set_projective_context(int q, int p, Bitset stab);

private:
    Group() = default;

    int n_ = 0;
    std::vector<std::uint16_t> table_;
    std::vector<int> inv_;
    std::vector<int> order_;
    std::vector<int> gens_;
    std::string origin_;
    int proj_q_ = 0;
    int proj_char_ = 0;
    Bitset point_stab_;
};

Group trivial_group();
Group cyclic(int n);
Group elementary_abelian(int p, int n);
// order = 2n; D2 is C2 and D4 is the Klein group.
Group dihedral(int order);
Group symmetric(int n);
Group alternating(int n);
Group direct_product(const Group& a, const Group& b);
Group psl2(int q);
Group pgl2(int q);
// The additive group of GF(q) extended by the order-d subgroup of GF(q)*
// acting by multiplication; a Frobenius group of order q*d for d > 1.
Group agl1_frobenius(int q, int d);

Group build_from_permutations(const std::vector<Perm>& gens, int degree,
                              int max_order = kMaxGroupOrder, std::string origin = "");
// Matrices act on the projective line over F; each class is canonicalized by
// scaling so its first nonzero entry (row-major) is 1.
Group build_from_projective_matrices(const FiniteField& F,
                                     const std::vector<std::array<FieldElem, 4>>& gens,
                                     int max_order = kMaxGroupOrder, std::string origin = "");

} // namespace particover
