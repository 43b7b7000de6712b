#pragma once

#include <string>
#include <vector>

namespace particover {

// Element of GF(p^f): coefficient vector of length f, ascending powers of x,
// entries in [0, p). Carries (p, f) so cross-field arithmetic is detectable.
struct FieldElem {
    int p = 0;
    int f = 0;
    std::vector<int> coeffs;

    bool operator==(const FieldElem&) const = default;
    bool is_zero() const {
        for (int c : coeffs)
            if (c) return false;
        return true;
    }
};

// GF(p^f) with a deterministic modulus: the monic irreducible degree-f
// polynomial whose ascending coefficient vector is lexicographically smallest.
class FiniteField {
public:
    static FiniteField make(int p, int f);

    int p() const { return p_; }
    int f() const { return f_; }
    long long order() const { return q_; }
    // Ascending coefficients, length f+1, leading coefficient 1.
    const std::vector<int>& modulus() const { return mod_; }

    FieldElem zero() const { return {p_, f_, std::vector<int>(f_, 0)}; }
    FieldElem one() const;
    FieldElem from_int(long long v) const; // v mod p, as a constant
    // Coefficient vector (ascending powers), padded/validated to length f.
    FieldElem from_coeffs(std::vector<int> c) const;

    // Elements are totally ordered by their ascending coefficient vector,
    // compared lexicographically; element_at(i) is the i-th in that order.
    FieldElem element_at(long long index) const;
    long long index_of(const FieldElem& a) const;

    FieldElem add(const FieldElem& a, const FieldElem& b) const;
    FieldElem sub(const FieldElem& a, const FieldElem& b) const;
    FieldElem mul(const FieldElem& a, const FieldElem& b) const;
    FieldElem div(const FieldElem& a, const FieldElem& b) const;
    FieldElem neg(const FieldElem& a) const;
    FieldElem inv(const FieldElem& a) const;
    FieldElem pow(const FieldElem& a, long long e) const;

    // Dispatch by name: add, sub, mul, div, pow (e), inv.
    FieldElem arith(const FieldElem& a, const FieldElem& b, const std::string& op) const;

    // Order of a in the multiplicative group; a must be nonzero.
    long long mult_order(const FieldElem& a) const;
    // The first element in element_at order whose multiplicative order is q-1.
    FieldElem multiplicative_generator() const;

private:
    FiniteField(int p, int f, long long q, std::vector<int> mod)
        : p_(p), f_(f), q_(q), mod_(std::move(mod)) {}
    void check(const FieldElem& a) const;
    std::vector<int> reduce(std::vector<int> poly) const;

    int p_;
    int f_;
    long long q_;
    std::vector<int> mod_;
};

} // namespace particover
