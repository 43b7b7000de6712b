#include "particover/groupspec.hpp"

#include "particover/util.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace particover {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("spec parse error at position " + std::to_string(i + 1) +
                                    ": " + what);
    }
    char peek() const { return i < s.size() ? s[i] : '\0'; }
    bool eat(const char* lit) {
        std::size_t k = 0;
        while (lit[k] != '\0' && i + k < s.size() && s[i + k] == lit[k]) ++k;
        if (lit[k] != '\0') return false;
        i += k;
        return true;
    }
    void expect(const char* lit) {
        if (!eat(lit)) fail(std::string("expected \"") + lit + "\"");
    }
    long long number() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
        if (peek() == '0' && i + 1 < s.size() &&
            std::isdigit(static_cast<unsigned char>(s[i + 1])))
            fail("numbers must not have leading zeros");
        long long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            int d = peek() - '0';
            if (v > (std::numeric_limits<long long>::max() - d) / 10) fail("number too large");
            v = v * 10 + d;
            ++i;
        }
        return v;
    }
};

[[noreturn]] void bad_params(const std::string& reason) {
    throw std::invalid_argument("invalid group parameters: " + reason);
}

void validate_atom(const GroupSpec& g) {
    long long p;
    int k;
    switch (g.family) {
    case Family::Cyclic:
        if (g.a < 1) bad_params("C<n> needs n >= 1");
        break;
    case Family::ElementaryAbelian:
        if (!is_prime(g.a)) bad_params("C<p>^<n> needs a prime p");
        if (g.b < 1) bad_params("C<p>^<n> needs n >= 1");
        if (g.b > 62) bad_params("C<p>^<n> order exceeds the 64-bit range");
        try {
            ipow(g.a, int(g.b));
        } catch (const std::overflow_error&) {
            bad_params("C<p>^<n> order exceeds the 64-bit range");
        }
        break;
    case Family::Dihedral:
        if (g.a < 2 || g.a % 2 != 0) bad_params("D<order> needs an even order >= 2");
        break;
    case Family::Symmetric:
    case Family::Alternating:
        if (g.a < 1) bad_params("S<n>/A<n> need n >= 1");
        if (g.a > 20) bad_params("S<n>/A<n> orders exceed the 64-bit range past n = 20");
        break;
    case Family::PSL2:
    case Family::PGL2:
        if (g.a < 2 || !prime_power(g.a, p, k)) bad_params("PSL2/PGL2 need a prime power q >= 2");
        if (g.a > 2'000'000) bad_params("PSL2/PGL2 orders exceed the 64-bit range for this q");
        break;
    case Family::AGL1:
        if (g.a < 3 || !prime_power(g.a, p, k)) bad_params("AGL1(q,d) needs a prime power q >= 3");
        if (g.b < 2) bad_params("AGL1(q,d) needs d >= 2");
        if ((g.a - 1) % g.b != 0) bad_params("AGL1(q,d) needs d dividing q - 1");
        break;
    case Family::Suzuki: {
        long long q = g.a;
        int e = 0;
        while (q > 1 && q % 2 == 0) {
            q /= 2;
            ++e;
        }
        if (q != 1 || e < 3 || e % 2 == 0)
            bad_params("Sz(q) needs q = 2^(2m+1) with m >= 1");
        if (e > 25) bad_params("Sz(q) parameter out of supported range");
        break;
    }
    case Family::Product:
        bad_params("internal: product validated elsewhere");
    }
}

GroupSpec parse_atom(Cursor& c) {
    GroupSpec g;
    if (c.eat("PSL2(")) {
        g.family = Family::PSL2;
        g.a = c.number();
        c.expect(")");
    } else if (c.eat("PGL2(")) {
        g.family = Family::PGL2;
        g.a = c.number();
        c.expect(")");
    } else if (c.eat("AGL1(")) {
        g.family = Family::AGL1;
        g.a = c.number();
        c.expect(",");
        g.b = c.number();
        c.expect(")");
    } else if (c.eat("Sz(")) {
        g.family = Family::Suzuki;
        g.a = c.number();
        c.expect(")");
    } else if (c.eat("C")) {
        g.a = c.number();
        if (c.peek() == '^') {
            ++c.i;
            g.family = Family::ElementaryAbelian;
            g.b = c.number();
        } else {
            g.family = Family::Cyclic;
        }
    } else if (c.eat("D")) {
        g.family = Family::Dihedral;
        g.a = c.number();
    } else if (c.eat("S")) {
        g.family = Family::Symmetric;
        g.a = c.number();
    } else if (c.eat("A")) {
        g.family = Family::Alternating;
        g.a = c.number();
    } else {
        c.fail("expected a group family (C, D, S, A, PSL2, PGL2, AGL1, Sz)");
    }
    validate_atom(g);
    return g;
}

long long checked_ll(u128 v, const char* what) {
    if (v > u128(std::numeric_limits<long long>::max()))
        throw std::overflow_error(std::string(what) + ": order exceeds the 64-bit range");
    return (long long)v;
}

bool contains_suzuki(const GroupSpec& g) {
    if (g.family == Family::Suzuki) return true;
    for (const GroupSpec& f : g.factors)
        if (contains_suzuki(f)) return true;
    return false;
}

} // namespace

GroupSpec parse_spec(const std::string& text) {
    Cursor c{text};
    std::vector<GroupSpec> factors;
    factors.push_back(parse_atom(c));
    while (c.i < text.size()) {
        if (!c.eat(" x ")) c.fail("expected \" x \" or end of input");
        factors.push_back(parse_atom(c));
    }
    if (factors.size() == 1) return std::move(factors.front());
    GroupSpec g;
    g.family = Family::Product;
    g.factors = std::move(factors);
    return g;
}

std::string GroupSpec::to_string() const {
    switch (family) {
    case Family::Cyclic:
        return "C" + std::to_string(a);
    case Family::ElementaryAbelian:
        return "C" + std::to_string(a) + "^" + std::to_string(b);
    case Family::Dihedral:
        return "D" + std::to_string(a);
    case Family::Symmetric:
        return "S" + std::to_string(a);
    case Family::Alternating:
        return "A" + std::to_string(a);
    case Family::PSL2:
        return "PSL2(" + std::to_string(a) + ")";
    case Family::PGL2:
        return "PGL2(" + std::to_string(a) + ")";
    case Family::AGL1:
        return "AGL1(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case Family::Suzuki:
        return "Sz(" + std::to_string(a) + ")";
    case Family::Product: {
        std::string out;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i > 0) out += " x ";
            out += factors[i].to_string();
        }
        return out;
    }
    }
    throw std::logic_error("GroupSpec::to_string: unknown family");
}

long long GroupSpec::order() const {
    switch (family) {
    case Family::Cyclic:
        return a;
    case Family::ElementaryAbelian:
        return ipow(a, int(b));
    case Family::Dihedral:
        return a;
    case Family::Symmetric:
    case Family::Alternating: {
        long long f = 1;
        for (long long i = 2; i <= a; ++i) f *= i; // a <= 20, fits
        return family == Family::Symmetric ? f : (a >= 2 ? f / 2 : 1);
    }
    case Family::PSL2: {
        u128 q = u128(a);
        u128 o = q * (q * q - 1) / (a % 2 == 0 ? 1 : 2);
        return checked_ll(o, "PSL2");
    }
    case Family::PGL2: {
        u128 q = u128(a);
        return checked_ll(q * (q * q - 1), "PGL2");
    }
    case Family::AGL1:
        return a * b;
    case Family::Suzuki: {
        u128 q = u128(a);
        return checked_ll(q * q * (q - 1) * (q * q + 1), "Sz");
    }
    case Family::Product: {
        u128 o = 1;
        for (const GroupSpec& f : factors) {
            o *= u128(f.order());
            checked_ll(o, "product");
        }
        return checked_ll(o, "product");
    }
    }
    throw std::logic_error("GroupSpec::order: unknown family");
}

bool GroupSpec::buildable() const {
    if (contains_suzuki(*this)) return false;
    try {
        return order() <= kMaxGroupOrder;
    } catch (const std::overflow_error&) {
        return false;
    }
}

Group GroupSpec::build() const {
    if (contains_suzuki(*this))
        throw std::invalid_argument(
            "Sz groups have no element-level construction here; use the closed forms");
    switch (family) {
    case Family::Cyclic:
        return cyclic(int(a));
    case Family::ElementaryAbelian:
        return elementary_abelian(int(a), int(b));
    case Family::Dihedral:
        return dihedral(int(a));
    case Family::Symmetric:
        return symmetric(int(a));
    case Family::Alternating:
        return alternating(int(a));
    case Family::PSL2:
        return psl2(int(a));
    case Family::PGL2:
        return pgl2(int(a));
    case Family::AGL1:
        return agl1_frobenius(int(a), int(b));
    case Family::Product: {
        Group g = factors.front().build();
        for (std::size_t i = 1; i < factors.size(); ++i) g = direct_product(g, factors[i].build());
        return g;
    }
    case Family::Suzuki:
        break; // unreachable, handled above
    }
    throw std::logic_error("GroupSpec::build: unknown family");
}

bool GroupSpec::operator==(const GroupSpec& o) const {
    return family == o.family && a == o.a && b == o.b && factors == o.factors;
}

} // namespace particover
