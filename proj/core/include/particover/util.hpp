#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace particover {

using u128 = unsigned __int128;

// Integer power with overflow guard; throws on overflow past 2^62.
inline long long ipow(long long base, int exp) {
    if (exp < 0) throw std::invalid_argument("ipow: negative exponent");
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > (1LL << 62) / (base < 0 ? -base : base))
            throw std::overflow_error("ipow: overflow");
        r *= base;
    }
    return r;
}

inline u128 ipow_u128(u128 base, int exp) {
    u128 r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

inline long long ceil_div(long long a, long long b) {
    if (b <= 0) throw std::invalid_argument("ceil_div: nonpositive divisor");
    return (a + b - 1) / b;
}

// Smallest s with s*s >= n.
inline long long ceil_sqrt(long long n) {
    if (n < 0) throw std::invalid_argument("ceil_sqrt: negative");
    long long s = 0;
    while (s * s < n) ++s;
    return s;
}

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline long long smallest_prime_factor(long long n) {
    if (n < 2) throw std::invalid_argument("smallest_prime_factor: n < 2");
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return d;
    return n;
}

// Ascending (prime, multiplicity) pairs.
inline std::vector<std::pair<long long, int>> factorize(long long n) {
    if (n < 1) throw std::invalid_argument("factorize: n < 1");
    std::vector<std::pair<long long, int>> out;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) { n /= d; ++e; }
            out.emplace_back(d, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

// If n == p^k with p prime and k >= 1, returns {p, k}.
inline bool prime_power(long long n, long long& p, int& k) {
    if (n < 2) return false;
    auto f = factorize(n);
    if (f.size() != 1) return false;
    p = f[0].first;
    k = f[0].second;
    return true;
}

// Deterministic 64-bit mixer for reproducible pseudo-random streams.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::string u128_to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(char('0' + int(v % 10)));
        v /= 10;
    }
    return std::string(s.rbegin(), s.rend());
}

} // namespace particover
