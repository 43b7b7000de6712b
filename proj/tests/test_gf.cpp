#include <doctest.h>

#include "particover/gf.hpp"
#include "particover/util.hpp"

#include <set>
#include <vector>

using namespace particover;

namespace {

// Independent modulus oracle: sieve out every reducible monic polynomial of
// degree f over GF(p) as a product of two lower-degree monic polynomials,
// then return the lexicographically smallest survivor (ascending coeffs).
std::vector<int> smallest_irreducible_by_sieve(int p, int f) {
    auto monics = [p](int deg) {
        std::vector<std::vector<int>> out;
        std::vector<int> c(deg + 1, 0);
        c[deg] = 1;
        long long total = 1;
        for (int i = 0; i < deg; ++i) total *= p;
        for (long long t = 0; t < total; ++t) {
            long long r = t;
            for (int i = 0; i < deg; ++i) {
                c[i] = int(r % p);
                r /= p;
            }
            out.push_back(c);
        }
        return out;
    };
    std::set<std::vector<int>> reducible;
    for (int a = 1; a < f; ++a) {
        int b = f - a;
        if (b < a) break;
        for (const auto& u : monics(a)) {
            for (const auto& v : monics(b)) {
                std::vector<int> prod(f + 1, 0);
                for (std::size_t i = 0; i < u.size(); ++i)
                    for (std::size_t j = 0; j < v.size(); ++j)
                        prod[i + j] = (prod[i + j] + u[i] * v[j]) % p;
                reducible.insert(prod);
            }
        }
    }
    std::vector<std::vector<int>> cands = monics(f);
    std::sort(cands.begin(), cands.end());
    for (const auto& c : cands)
        if (!reducible.count(c)) return c;
    return {};
}

} // namespace

TEST_CASE("prime fields behave as integers mod p") {
    FiniteField F5 = FiniteField::make(5, 1);
    CHECK(F5.order() == 5);
    CHECK(F5.mul(F5.from_int(2), F5.from_int(3)) == F5.one());
    CHECK(F5.add(F5.from_int(4), F5.from_int(3)) == F5.from_int(2));

    FiniteField F2 = FiniteField::make(2, 1);
    CHECK(F2.modulus() == std::vector<int>{0, 1});
    CHECK(F2.add(F2.one(), F2.one()) == F2.zero());
}

TEST_CASE("modulus is the lexicographically smallest monic irreducible") {
    for (auto [p, f] : std::vector<std::pair<int, int>>{
             {2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
        CAPTURE(p);
        CAPTURE(f);
        CHECK(FiniteField::make(p, f).modulus() == smallest_irreducible_by_sieve(p, f));
    }
    // Frozen values, hand-checked against the sieve.
    CHECK(FiniteField::make(2, 3).modulus() == std::vector<int>{1, 0, 1, 1});
    CHECK(FiniteField::make(2, 2).modulus() == std::vector<int>{1, 1, 1});
    CHECK(FiniteField::make(3, 2).modulus() == std::vector<int>{1, 0, 1});
}

TEST_CASE("construction is deterministic") {
    FiniteField a = FiniteField::make(2, 6), b = FiniteField::make(2, 6);
    CHECK(a.modulus() == b.modulus());
    CHECK(a.multiplicative_generator() == b.multiplicative_generator());
}

TEST_CASE("squaring the generator image of x reduces by the modulus") {
    FiniteField F4 = FiniteField::make(2, 2);
    FieldElem x = F4.from_coeffs({0, 1});
    CHECK(F4.mul(x, x).coeffs == std::vector<int>{1, 1}); // x^2 = x + 1
}

TEST_CASE("every nonzero element satisfies the Lagrange power identity") {
    // Exhaustive over all fields of order <= 2^10.
    for (int p = 2; p <= 1024; ++p) {
        if (!is_prime(p)) continue;
        for (int f = 1;; ++f) {
            long long q = 1;
            bool fits = true;
            for (int i = 0; i < f; ++i) {
                q *= p;
                if (q > 1024) {
                    fits = false;
                    break;
                }
            }
            if (!fits) break;
            FiniteField F = FiniteField::make(p, f);
            for (long long i = 1; i < q; ++i) {
                FieldElem e = F.element_at(i);
                REQUIRE(F.pow(e, q - 1) == F.one());
                REQUIRE(F.mul(e, F.inv(e)) == F.one());
            }
        }
    }
}

TEST_CASE("distributivity holds on seeded random triples") {
    std::uint64_t state = 42;
    for (auto [p, f] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {5, 2}, {7, 2}}) {
        FiniteField F = FiniteField::make(p, f);
        for (int t = 0; t < 200; ++t) {
            FieldElem a = F.element_at((long long)(splitmix64(state) % F.order()));
            FieldElem b = F.element_at((long long)(splitmix64(state) % F.order()));
            FieldElem c = F.element_at((long long)(splitmix64(state) % F.order()));
            REQUIRE(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        }
    }
}

TEST_CASE("multiplicative generator is the first primitive element") {
    CHECK(FiniteField::make(2, 1).multiplicative_generator().coeffs == std::vector<int>{1});
    CHECK(FiniteField::make(5, 1).multiplicative_generator().coeffs == std::vector<int>{2});
    CHECK(FiniteField::make(7, 1).multiplicative_generator().coeffs == std::vector<int>{3});
    CHECK(FiniteField::make(3, 2).multiplicative_generator().coeffs == std::vector<int>{1, 1});

    for (auto [p, f] : std::vector<std::pair<int, int>>{{2, 4}, {3, 3}, {7, 2}, {2, 6}}) {
        FiniteField F = FiniteField::make(p, f);
        FieldElem g = F.multiplicative_generator();
        CHECK(F.mult_order(g) == F.order() - 1);
        // No lexicographically earlier element generates the full unit group.
        for (long long i = 0; i < F.index_of(g); ++i) {
            FieldElem e = F.element_at(i);
            if (e.is_zero()) continue;
            CHECK(F.mult_order(e) < F.order() - 1);
        }
    }
}

TEST_CASE("elements round-trip through canonical indices") {
    FiniteField F = FiniteField::make(3, 3);
    for (long long i = 0; i < F.order(); ++i) CHECK(F.index_of(F.element_at(i)) == i);
    CHECK_THROWS_AS(F.element_at(-1), std::invalid_argument);
    CHECK_THROWS_AS(F.element_at(27), std::invalid_argument);
}

TEST_CASE("arith dispatches by operation name") {
    FiniteField F7 = FiniteField::make(7, 1);
    FieldElem a = F7.from_int(3), b = F7.from_int(2);
    CHECK(F7.arith(a, b, "add") == F7.from_int(5));
    CHECK(F7.arith(a, b, "sub") == F7.from_int(1));
    CHECK(F7.arith(a, b, "mul") == F7.from_int(6));
    CHECK(F7.arith(a, b, "div") == F7.from_int(5)); // 3 * inv(2) = 3 * 4
    CHECK(F7.arith(a, b, "pow") == F7.from_int(2)); // 3^2
    CHECK(F7.arith(a, b, "inv") == F7.from_int(5)); // 3 * 5 = 15 = 1
    CHECK_THROWS_AS(F7.arith(a, b, "mod"), std::invalid_argument);
}

TEST_CASE("invalid parameters and operations are rejected") {
    CHECK_THROWS_AS(FiniteField::make(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(FiniteField::make(6, 2), std::invalid_argument);
    CHECK_THROWS_AS(FiniteField::make(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(FiniteField::make(2, 21), std::invalid_argument);

    FiniteField F4 = FiniteField::make(2, 2);
    FiniteField F9 = FiniteField::make(3, 2);
    CHECK_THROWS_AS(F4.inv(F4.zero()), std::domain_error);
    CHECK_THROWS_AS(F4.div(F4.one(), F4.zero()), std::domain_error);
    CHECK_THROWS_AS(F4.add(F4.one(), F9.one()), std::invalid_argument);
    CHECK_THROWS_AS(F9.mult_order(F9.zero()), std::domain_error);
}
