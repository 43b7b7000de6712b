#include "particover/gf.hpp"

#include "particover/util.hpp"

#include <algorithm>
#include <stdexcept>

namespace particover {

namespace {

int true_mod(long long v, int p) {
    long long m = v % p;
    if (m < 0) m += p;
    return int(m);
}

int int_inv_mod_p(int a, int p) {
    // Extended Euclid on integers; p prime, a nonzero mod p.
    int t = 0, new_t = 1, r = p, new_r = true_mod(a, p);
    while (new_r != 0) {
        int q = r / new_r;
        int tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw std::domain_error("int_inv_mod_p: not invertible");
    return true_mod(t, p);
}

int poly_degree(const std::vector<int>& a) {
    for (int d = int(a.size()) - 1; d >= 0; --d)
        if (a[d]) return d;
    return -1; // zero polynomial
}

// Remainder of num modulo den over GF(p); den must be nonzero.
std::vector<int> poly_rem(std::vector<int> num, const std::vector<int>& den, int p) {
    int dd = poly_degree(den);
    int lead_inv = int_inv_mod_p(den[dd], p);
    for (int d = poly_degree(num); d >= dd; d = poly_degree(num)) {
        int c = int((long long)(num[d]) * lead_inv % p);
        for (int j = 0; j <= dd; ++j)
            num[d - dd + j] = true_mod(num[d - dd + j] - (long long)(c) * den[j], p);
    }
    return num;
}

// Quotient and remainder over GF(p)[x].
std::pair<std::vector<int>, std::vector<int>> poly_divmod(std::vector<int> num,
                                                          const std::vector<int>& den, int p) {
    int dd = poly_degree(den);
    if (dd < 0) throw std::domain_error("poly_divmod: division by zero polynomial");
    int dn = poly_degree(num);
    std::vector<int> quot(std::max(dn - dd + 1, 1), 0);
    int lead_inv = int_inv_mod_p(den[dd], p);
    for (int d = dn; d >= dd; d = poly_degree(num)) {
        int c = int((long long)(num[d]) * lead_inv % p);
        quot[d - dd] = c;
        for (int j = 0; j <= dd; ++j)
            num[d - dd + j] = true_mod(num[d - dd + j] - (long long)(c) * den[j], p);
    }
    return {quot, num};
}

bool poly_is_zero(const std::vector<int>& a) { return poly_degree(a) < 0; }

} // namespace

FiniteField FiniteField::make(int p, int f) {
    if (!is_prime(p)) throw std::invalid_argument("make_field: p must be prime");
    if (f < 1) throw std::invalid_argument("make_field: f must be >= 1");
    long long q = 1;
    for (int i = 0; i < f; ++i) {
        q *= p;
        if (q > (1LL << 20)) throw std::invalid_argument("make_field: p^f exceeds 2^20");
    }

    // Candidate moduli are monic of degree f; scan ascending-coefficient
    // vectors (c0,...,c_{f-1}) in lexicographic order and keep the first
    // irreducible one. Irreducibility by trial division: a reducible monic
    // polynomial of degree f has a monic factor of degree <= f/2.
    std::vector<int> cand(f + 1, 0);
    cand[f] = 1;
    for (long long t = 0; t < q; ++t) {
        long long rest = t;
        for (int i = f - 1; i >= 0; --i) {
            cand[i] = int(rest % p); // c0 is the most significant digit of t
            rest /= p;
        }
        bool irreducible = true;
        std::vector<int> div;
        for (int d = 1; irreducible && 2 * d <= f; ++d) {
            long long nd = 1;
            for (int i = 0; i < d; ++i) nd *= p;
            div.assign(d + 1, 0);
            div[d] = 1;
            for (long long s = 0; s < nd; ++s) {
                long long r = s;
                for (int i = 0; i < d; ++i) {
                    div[i] = int(r % p);
                    r /= p;
                }
                if (poly_is_zero(poly_rem(cand, div, p))) {
                    irreducible = false;
                    break;
                }
            }
        }
        if (irreducible) return FiniteField(p, f, q, cand);
    }
    throw std::logic_error("make_field: no irreducible modulus found");
}

void FiniteField::check(const FieldElem& a) const {
    if (a.p != p_ || a.f != f_) throw std::invalid_argument("field mismatch");
    if (int(a.coeffs.size()) != f_) throw std::invalid_argument("malformed element");
    for (int c : a.coeffs)
        if (c < 0 || c >= p_) throw std::invalid_argument("malformed element");
}

std::vector<int> FiniteField::reduce(std::vector<int> poly) const {
    for (std::size_t i = 0; i < poly.size(); ++i) poly[i] = true_mod(poly[i], p_);
    for (int d = int(poly.size()) - 1; d >= f_; --d) {
        int c = poly[d];
        if (!c) continue;
        poly[d] = 0;
        for (int j = 0; j < f_; ++j)
            poly[d - f_ + j] = true_mod(poly[d - f_ + j] - (long long)(c) * mod_[j], p_);
    }
    poly.resize(f_, 0);
    return poly;
}

FieldElem FiniteField::one() const {
    FieldElem e = zero();
    e.coeffs[0] = 1;
    return e;
}

FieldElem FiniteField::from_int(long long v) const {
    FieldElem e = zero();
    e.coeffs[0] = true_mod(v, p_);
    return e;
}

FieldElem FiniteField::from_coeffs(std::vector<int> c) const {
    return {p_, f_, reduce(std::move(c))};
}

FieldElem FiniteField::element_at(long long index) const {
    if (index < 0 || index >= q_) throw std::invalid_argument("element_at: index out of range");
    FieldElem e = zero();
    for (int i = f_ - 1; i >= 0; --i) {
        e.coeffs[i] = int(index % p_);
        index /= p_;
    }
    return e;
}

long long FiniteField::index_of(const FieldElem& a) const {
    check(a);
    long long idx = 0;
    for (int i = 0; i < f_; ++i) idx = idx * p_ + a.coeffs[i];
    return idx;
}

FieldElem FiniteField::add(const FieldElem& a, const FieldElem& b) const {
    check(a);
    check(b);
    FieldElem r = zero();
    for (int i = 0; i < f_; ++i) r.coeffs[i] = true_mod(a.coeffs[i] + b.coeffs[i], p_);
    return r;
}

FieldElem FiniteField::sub(const FieldElem& a, const FieldElem& b) const {
    check(a);
    check(b);
    FieldElem r = zero();
    for (int i = 0; i < f_; ++i) r.coeffs[i] = true_mod(a.coeffs[i] - b.coeffs[i], p_);
    return r;
}

FieldElem FiniteField::neg(const FieldElem& a) const {
    check(a);
    FieldElem r = zero();
    for (int i = 0; i < f_; ++i) r.coeffs[i] = true_mod(-a.coeffs[i], p_);
    return r;
}

FieldElem FiniteField::mul(const FieldElem& a, const FieldElem& b) const {
    check(a);
    check(b);
    std::vector<int> prod(2 * f_ - 1, 0);
    for (int i = 0; i < f_; ++i) {
        if (!a.coeffs[i]) continue;
        for (int j = 0; j < f_; ++j)
            prod[i + j] = true_mod(prod[i + j] + (long long)(a.coeffs[i]) * b.coeffs[j], p_);
    }
    return {p_, f_, reduce(std::move(prod))};
}

FieldElem FiniteField::inv(const FieldElem& a) const {
    check(a);
    if (a.is_zero()) throw std::domain_error("inv: zero has no inverse");
    // Extended Euclid in GF(p)[x] against the modulus.
    std::vector<int> r0 = mod_, r1(a.coeffs), s0 = {0}, s1 = {1};
    while (!poly_is_zero(r1)) {
        auto [quot, rem] = poly_divmod(r0, r1, p_);
        r0 = std::move(r1);
        r1 = std::move(rem);
        // s0, s1 = s1, s0 - quot*s1
        std::vector<int> qs(quot.size() + s1.size(), 0);
        for (std::size_t i = 0; i < quot.size(); ++i)
            for (std::size_t j = 0; j < s1.size(); ++j)
                qs[i + j] = true_mod(qs[i + j] + (long long)(quot[i]) * s1[j], p_);
        std::vector<int> ns(std::max(s0.size(), qs.size()), 0);
        for (std::size_t i = 0; i < ns.size(); ++i) {
            int v0 = i < s0.size() ? s0[i] : 0;
            int v1 = i < qs.size() ? qs[i] : 0;
            ns[i] = true_mod(v0 - v1, p_);
        }
        s0 = std::move(s1);
        s1 = std::move(ns);
    }
    int d = poly_degree(r0);
    if (d != 0) throw std::logic_error("inv: modulus not coprime to element");
    int scale = int_inv_mod_p(r0[0], p_);
    for (int& c : s0) c = int((long long)(c) * scale % p_);
    return {p_, f_, reduce(std::move(s0))};
}

FieldElem FiniteField::div(const FieldElem& a, const FieldElem& b) const {
    return mul(a, inv(b));
}

FieldElem FiniteField::pow(const FieldElem& a, long long e) const {
    check(a);
    if (e < 0) return pow(inv(a), -e);
    FieldElem base = a, r = one();
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

FieldElem FiniteField::arith(const FieldElem& a, const FieldElem& b, const std::string& op) const {
    if (op == "add") return add(a, b);
    if (op == "sub") return sub(a, b);
    if (op == "mul") return mul(a, b);
    if (op == "div") return div(a, b);
    if (op == "pow") return pow(a, index_of(b)); // exponent = canonical index of b
    if (op == "inv") return inv(a);
    throw std::invalid_argument("arith: unknown op '" + op + "'");
}

long long FiniteField::mult_order(const FieldElem& a) const {
    check(a);
    if (a.is_zero()) throw std::domain_error("mult_order: zero element");
    long long d = q_ - 1;
    for (auto [r, e] : factorize(q_ - 1)) {
        (void)e;
        while (d % r == 0 && pow(a, d / r) == one()) d /= r;
    }
    return d;
}

FieldElem FiniteField::multiplicative_generator() const {
    auto factors = factorize(q_ - 1 > 0 ? q_ - 1 : 1);
    for (long long i = 0; i < q_; ++i) {
        FieldElem e = element_at(i);
        if (e.is_zero()) continue;
        bool ok = true;
        for (auto [r, mult] : factors) {
            (void)mult;
            if (q_ - 1 > 1 && pow(e, (q_ - 1) / r) == one()) {
                ok = false;
                break;
            }
        }
        if (ok) return e;
    }
    throw std::logic_error("multiplicative_generator: none found");
}

} // namespace particover
