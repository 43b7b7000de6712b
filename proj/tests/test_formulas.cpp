#include <doctest.h>

#include "particover/formulas.hpp"
#include "particover/groupspec.hpp"
#include "particover/solver.hpp"

#include <optional>
#include <stdexcept>
#include <string>

using namespace particover;

namespace {

Group quaternion8() {
    Perm ri{2, 3, 1, 0, 7, 6, 4, 5};
    Perm rj{4, 5, 6, 7, 1, 0, 3, 2};
    return build_from_permutations({ri, rj}, 8, kMaxGroupOrder, "Q8");
}

std::optional<long long> rho_of(const char* spec) { return rho_formula(parse_spec(spec)); }

} // namespace

TEST_CASE("chief-series cover sizes of solvable groups") {
    struct Case {
        const char* spec;
        long long want;
    };
    const Case cases[] = {
        {"S3", 4},         {"S4", 4},          {"A4", 5},           {"D8", 3},
        {"D10", 6},        {"D12", 3},         {"D30", 4},          {"C2^3", 3},
        {"C3^2", 4},       {"C3^3", 4},        {"C5^2", 6},         {"AGL1(5,4)", 6},
        {"AGL1(7,3)", 8},  {"AGL1(9,2)", 4},   {"AGL1(9,4)", 10},   {"AGL1(8,7)", 9},
        {"AGL1(25,2)", 6}, {"AGL1(49,2)", 8},  {"C2 x C4", 3},      {"C2 x C2 x C3", 3},
    };
    for (const Case& c : cases) {
        CAPTURE(c.spec);
        CHECK(tomkinson_sigma(parse_spec(c.spec).build()) == c.want);
    }
}

TEST_CASE("chief-series cover size rejects cyclic and non-solvable input") {
    CHECK_THROWS_AS(tomkinson_sigma(cyclic(1)), std::invalid_argument);
    CHECK_THROWS_AS(tomkinson_sigma(cyclic(12)), std::invalid_argument);
    CHECK_THROWS_AS(tomkinson_sigma(alternating(5)), std::invalid_argument);
    CHECK_THROWS_AS(tomkinson_sigma(psl2(7)), std::invalid_argument);
}

TEST_CASE("chief-series cover sizes match exact search") {
    const char* specs[] = {"S3",  "S4",  "A4",        "D8",        "D10",       "D12",
                           "D30", "C2^3", "C3^2",     "C3^3",      "C5^2",      "AGL1(5,4)",
                           "AGL1(7,3)",  "AGL1(9,2)", "AGL1(9,4)", "C3 x S3",   "C2 x D8"};
    SearchBudget b;
    for (const char* spec : specs) {
        CAPTURE(spec);
        Group g = parse_spec(spec).build();
        SigmaResult s = sigma(g, b);
        REQUIRE(s.kind == SigmaResult::Kind::Exact);
        CHECK(tomkinson_sigma(g) == s.value);
    }
}

TEST_CASE("nilpotent cover sizes come from the first noncyclic Sylow subgroup") {
    CHECK(nilpotent_sigma(elementary_abelian(2, 3)) == 3);
    CHECK(nilpotent_sigma(elementary_abelian(5, 2)) == 6);
    CHECK(nilpotent_sigma(dihedral(8)) == 3);
    CHECK(nilpotent_sigma(quaternion8()) == 3);
    CHECK(nilpotent_sigma(direct_product(cyclic(4), cyclic(2))) == 3);
    CHECK(nilpotent_sigma(direct_product(cyclic(4), elementary_abelian(3, 2))) == 4);
    CHECK(nilpotent_sigma(direct_product(cyclic(9), cyclic(3))) == 4);
    // Agrees with the general solvable formula where both apply.
    for (const char* spec : {"C2^2", "C2 x C4", "C3^3", "C2 x C2 x C5", "C3 x C3 x C4"}) {
        CAPTURE(spec);
        Group g = parse_spec(spec).build();
        CHECK(nilpotent_sigma(g) == tomkinson_sigma(g));
    }
    CHECK_THROWS_AS(nilpotent_sigma(cyclic(12)), std::invalid_argument);
    CHECK_THROWS_AS(nilpotent_sigma(symmetric(3)), std::invalid_argument);
}

TEST_CASE("closed-form partition sizes by family") {
    // Families with a known value.
    CHECK(rho_of("C2^2") == 3);
    CHECK(rho_of("C2^3") == 5);
    CHECK(rho_of("C2^4") == 5);
    CHECK(rho_of("C3^2") == 4);
    CHECK(rho_of("C3^3") == 10);
    CHECK(rho_of("C5^2") == 6);
    CHECK(rho_of("C7^2") == 8);
    CHECK(rho_of("D4") == 3);
    CHECK(rho_of("D8") == 5);
    CHECK(rho_of("D12") == 7);
    CHECK(rho_of("D30") == 16);
    CHECK(rho_of("S3") == 4);
    CHECK(rho_of("S4") == 10);
    CHECK(rho_of("A4") == 5);
    CHECK(rho_of("PSL2(4)") == 17);
    CHECK(rho_of("PSL2(7)") == 50);
    CHECK(rho_of("PSL2(8)") == 65);
    CHECK(rho_of("PSL2(9)") == 82);
    CHECK(rho_of("PSL2(11)") == 122);
    CHECK(rho_of("PGL2(3)") == 10);
    CHECK(rho_of("PGL2(5)") == 26);
    CHECK(rho_of("PGL2(7)") == 50);
    CHECK(rho_of("AGL1(5,4)") == 6);
    CHECK(rho_of("AGL1(7,3)") == 8);
    CHECK(rho_of("AGL1(9,4)") == 10);
    CHECK(rho_of("AGL1(8,7)") == 9);
    CHECK(rho_of("AGL1(7,2)") == 8); // same group as D14

    // Families and parameters with no closed form.
    CHECK_FALSE(rho_of("C7").has_value());
    CHECK_FALSE(rho_of("C12").has_value());
    CHECK_FALSE(rho_of("D2").has_value());
    CHECK_FALSE(rho_of("S5").has_value());
    CHECK_FALSE(rho_of("A5").has_value());
    CHECK_FALSE(rho_of("PSL2(5)").has_value()); // labeled PSL2(4) when even
    CHECK_FALSE(rho_of("PGL2(2)").has_value());
    CHECK_FALSE(rho_of("Sz(8)").has_value());
    CHECK_FALSE(rho_of("C2 x C2").has_value()); // products never dispatch
    CHECK_FALSE(rho_of("S4 x C5").has_value());
    // The affine form needs the point stabilizer to act irreducibly.
    CHECK_FALSE(rho_of("AGL1(9,2)").has_value());
    CHECK_FALSE(rho_of("AGL1(16,3)").has_value());
    CHECK_FALSE(rho_of("AGL1(25,2)").has_value());
    CHECK_FALSE(rho_of("AGL1(49,2)").has_value());

    // Structurally broken specs are rejected, not silently skipped.
    GroupSpec bad;
    bad.family = Family::ElementaryAbelian;
    bad.a = 4;
    bad.b = 2;
    CHECK_THROWS_AS(rho_formula(bad), std::invalid_argument);
    bad.family = Family::Dihedral;
    bad.a = 7;
    CHECK_THROWS_AS(rho_formula(bad), std::invalid_argument);
    bad.family = Family::AGL1;
    bad.a = 10;
    bad.b = 3;
    CHECK_THROWS_AS(rho_formula(bad), std::invalid_argument);
    bad.a = 9;
    bad.b = 3; // d must divide q - 1
    CHECK_THROWS_AS(rho_formula(bad), std::invalid_argument);
}

TEST_CASE("closed-form partition sizes match exact search where both exist") {
    const char* specs[] = {"C2^3", "C3^2", "C3^3", "C5^2", "D8",        "D12",
                           "D30",  "S3",   "S4",   "A4",   "AGL1(5,4)", "AGL1(9,4)",
                           "PSL2(4)", "PGL2(3)"};
    SearchBudget b;
    for (const char* spec : specs) {
        CAPTURE(spec);
        Group g = parse_spec(spec).build();
        RhoResult r = rho(g, b);
        REQUIRE(r.kind == RhoResult::Kind::Exact);
        CHECK(rho_formula(parse_spec(spec)) == r.value);
    }
}

TEST_CASE("projective cover sizes") {
    CHECK(sigma_psl_formula(4, LinearVariant::PSL) == 10);
    CHECK(sigma_psl_formula(5, LinearVariant::PSL) == 10);
    CHECK(sigma_psl_formula(7, LinearVariant::PSL) == 15);
    CHECK(sigma_psl_formula(8, LinearVariant::PSL) == 36);
    CHECK(sigma_psl_formula(9, LinearVariant::PSL) == 16);
    CHECK(sigma_psl_formula(11, LinearVariant::PSL) == 67);
    CHECK(sigma_psl_formula(13, LinearVariant::PSL) == 92);
    CHECK(sigma_psl_formula(16, LinearVariant::PSL) == 136);
    CHECK(sigma_psl_formula(5, LinearVariant::PGL) == 16);
    CHECK(sigma_psl_formula(7, LinearVariant::PGL) == 29);
    CHECK(sigma_psl_formula(9, LinearVariant::PGL) == 46);
    CHECK(sigma_psl_formula(11, LinearVariant::PGL) == 67);

    CHECK_THROWS_AS(sigma_psl_formula(6, LinearVariant::PSL), std::invalid_argument);
    CHECK_THROWS_AS(sigma_psl_formula(3, LinearVariant::PSL), std::invalid_argument);
    CHECK_THROWS_AS(sigma_psl_formula(2, LinearVariant::PSL), std::invalid_argument);
    CHECK_THROWS_AS(sigma_psl_formula(4, LinearVariant::PGL), std::invalid_argument);
    CHECK_THROWS_AS(sigma_psl_formula(3, LinearVariant::PGL), std::invalid_argument);
    CHECK_THROWS_AS(sigma_psl_formula(0, LinearVariant::PGL), std::invalid_argument);

    // The exceptional PSL values undercut the generic expression.
    CHECK(sigma_psl_formula(5, LinearVariant::PSL) < 5 * 6 / 2 + 1);
    CHECK(sigma_psl_formula(7, LinearVariant::PSL) < 7 * 8 / 2 + 1);
    CHECK(sigma_psl_formula(9, LinearVariant::PSL) < 9 * 10 / 2 + 1);

    // The even-q PSL value agrees with exact search on the one feasible case.
    SearchBudget b;
    SigmaResult s = sigma(psl2(4), b);
    REQUIRE(s.kind == SigmaResult::Kind::Exact);
    CHECK(s.value == sigma_psl_formula(4, LinearVariant::PSL));
}

TEST_CASE("Suzuki family report") {
    SuzukiReport rep = suzuki_report(1);
    CHECK(rep.q == 8);
    CHECK(rep.r == 4);
    CHECK(rep.order == u128(29120));
    CHECK(rep.sigma == u128(2080));
    CHECK(rep.psi_size == u128(4161));
    CHECK(rep.rho_lower == u128(2143));
    CHECK(rep.torus_identity);
    CHECK(rep.census_identity);

    for (int m = 1; m <= 8; ++m) {
        CAPTURE(m);
        SuzukiReport r = suzuki_report(m);
        CHECK(r.q == (1LL << (2 * m + 1)));
        CHECK(r.r == (1LL << (m + 1)));
        const u128 q2 = u128(r.q) * u128(r.q);
        CHECK(r.order == q2 * (q2 + 1) * u128(r.q - 1));
        CHECK(r.sigma == q2 * (q2 + 1) / 2);
        // The class census reduces to a polynomial identity in q.
        CHECK(r.psi_size == q2 * q2 + q2 + 1);
        CHECK(r.rho_lower == r.sigma + q2 - 1);
        CHECK(r.rho_lower > r.sigma);
        CHECK(r.torus_identity);
        CHECK(r.census_identity);
    }
    CHECK_THROWS_AS(suzuki_report(0), std::invalid_argument);
    CHECK_THROWS_AS(suzuki_report(13), std::invalid_argument);
    CHECK_THROWS_AS(suzuki_report(-1), std::invalid_argument);
}

TEST_CASE("equal cover and partition sizes exactly on the predicted groups") {
    struct Case {
        const char* spec;
        bool want;
    };
    const Case cases[] = {
        {"C2^2", true},       {"C3^2", true},  {"C5^2", true},      {"S3", true},
        {"A4", true},         {"D10", true},   {"AGL1(5,4)", true}, {"AGL1(9,4)", true},
        {"AGL1(7,3)", true},  {"S4", false},   {"D8", false},       {"D12", false},
        {"D30", false},       {"C3^3", false}, {"C2^3", false},     {"AGL1(9,2)", false},
        {"AGL1(49,2)", false}, {"PSL2(4)", false},
    };
    SearchBudget b;
    for (const Case& c : cases) {
        CAPTURE(c.spec);
        Group g = parse_spec(c.spec).build();
        CHECK(main_theorem_predicate(g) == c.want);
        // The predicate is exactly the condition sigma == rho on these groups.
        SigmaResult s = sigma(g, b);
        RhoResult r = rho(g, b);
        REQUIRE(s.kind == SigmaResult::Kind::Exact);
        REQUIRE(r.kind == RhoResult::Kind::Exact);
        CHECK((s.value == r.value) == c.want);
    }
    CHECK_FALSE(main_theorem_predicate(trivial_group()));
    CHECK_FALSE(main_theorem_predicate(cyclic(4)));
    CHECK_FALSE(main_theorem_predicate(cyclic(25)));
    CHECK_FALSE(main_theorem_predicate(quaternion8()));
}

TEST_CASE("partition size from a proper normal piece plus one") {
    CHECK(ht_rho(dihedral(12), 2) == 7);
    CHECK(ht_rho(dihedral(30), 2) == 16);
    CHECK(ht_rho(agl1_frobenius(7, 3), 3) == 8);
    CHECK(ht_rho(agl1_frobenius(5, 4), 5) == std::nullopt);
    CHECK(ht_rho(agl1_frobenius(9, 2), 2) == std::nullopt); // the piece is not cyclic
    CHECK(ht_rho(dihedral(12), 3) == std::nullopt);
    CHECK(ht_rho(dihedral(30), 3) == std::nullopt);
    CHECK(ht_rho(dihedral(30), 5) == std::nullopt);
    CHECK(ht_rho(dihedral(8), 2) == std::nullopt); // prime-power order
    CHECK(ht_rho(elementary_abelian(3, 2), 3) == std::nullopt);
    CHECK_THROWS_AS(ht_rho(symmetric(4), 5), std::invalid_argument);
    CHECK_THROWS_AS(ht_rho(dihedral(12), 4), std::invalid_argument);
    CHECK_THROWS_AS(ht_rho(dihedral(12), 0), std::invalid_argument);

    // Where defined, it reproduces the exact search value.
    SearchBudget b;
    for (auto [spec, p] : {std::pair<const char*, long long>{"D12", 2},
                           {"D14", 2},
                           {"D30", 2},
                           {"AGL1(7,3)", 3},
                           {"D10", 2}}) {
        CAPTURE(spec);
        Group g = parse_spec(spec).build();
        auto v = ht_rho(g, p);
        if (!v) continue;
        RhoResult r = rho(g, b);
        REQUIRE(r.kind == RhoResult::Kind::Exact);
        CHECK(*v == r.value);
    }
}
