#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace particover {

// Fixed-capacity dynamic bitset over element ids [0, size).
class Bitset {
public:
    Bitset() : nbits_(0) {}
    explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {
        if (nbits < 0) throw std::invalid_argument("Bitset: negative size");
    }

    int size() const { return nbits_; }

    void set(int i) { w_[i >> 6] |= (1ULL << (i & 63)); }
    void reset(int i) { w_[i >> 6] &= ~(1ULL << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1ULL; }

    int count() const {
        int c = 0;
        for (std::uint64_t x : w_) c += __builtin_popcountll(x);
        return c;
    }
    bool any() const {
        for (std::uint64_t x : w_)
            if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    // Removes every bit present in o.
    Bitset& subtract(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    bool operator==(const Bitset& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }

    bool is_subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    int count_and(const Bitset& o) const {
        int c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i)
            c += __builtin_popcountll(w_[i] & o.w_[i]);
        return c;
    }

    // Total order: at the lowest differing id, the set lacking that id is smaller.
    static int lex_compare(const Bitset& a, const Bitset& b) {
        for (std::size_t i = 0; i < a.w_.size(); ++i) {
            std::uint64_t d = a.w_[i] ^ b.w_[i];
            if (d) {
                std::uint64_t low = d & (~d + 1);
                return (a.w_[i] & low) ? 1 : -1;
            }
        }
        return 0;
    }

    int first_set() const { return next_set(-1); }
    // Smallest set id strictly greater than i, or -1.
    int next_set(int i) const {
        ++i;
        if (i >= nbits_) return -1;
        std::size_t word = std::size_t(i) >> 6;
        std::uint64_t x = w_[word] >> (i & 63);
        if (x) return i + __builtin_ctzll(x);
        for (++word; word < w_.size(); ++word)
            if (w_[word]) return int(word << 6) + __builtin_ctzll(w_[word]);
        return -1;
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(count());
        for (int i = first_set(); i >= 0; i = next_set(i)) v.push_back(i);
        return v;
    }

    std::uint64_t fnv_hash() const {
        std::uint64_t h = 1469598103934665603ULL;
        for (std::uint64_t x : w_) {
            for (int b = 0; b < 8; ++b) {
                h ^= (x >> (8 * b)) & 0xffULL;
                h *= 1099511628211ULL;
            }
        }
        return h;
    }

private:
    int nbits_;
    std::vector<std::uint64_t> w_;
};

// A subgroup as a member set over group element ids, with cached order.
struct Subgroup {
    Bitset bits;
    int order = 0;
};

} // namespace particover
