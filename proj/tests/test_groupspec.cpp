#include <doctest.h>

#include "particover/groupspec.hpp"

#include <stdexcept>
#include <string>
#include <vector>

using namespace particover;

TEST_CASE("parsing and printing round-trip") {
    std::vector<std::string> specs = {
        "C1",        "C12",       "C97",     "C2^2",        "C3^4",      "C2^6",
        "D2",        "D12",       "D30",     "S3",          "S4",        "A4",
        "A5",        "PSL2(4)",   "PSL2(7)", "PGL2(5)",     "AGL1(5,4)", "AGL1(49,2)",
        "Sz(8)",     "Sz(32)",    "C2 x C2", "C2 x S3",     "D8 x C3",   "C2 x C3 x C5",
        "S3 x PSL2(4)",
    };
    for (const std::string& s : specs) {
        CAPTURE(s);
        GroupSpec spec = parse_spec(s);
        CHECK(spec.to_string() == s);
        // Parsing the printed form again gives an equal spec.
        CHECK(parse_spec(spec.to_string()) == spec);
    }
}

TEST_CASE("orders of parsed specs") {
    auto order_of = [](const char* s) { return parse_spec(s).order(); };
    CHECK(order_of("C1") == 1);
    CHECK(order_of("C12") == 12);
    CHECK(order_of("C2^6") == 64);
    CHECK(order_of("C3^4") == 81);
    CHECK(order_of("D12") == 12);
    CHECK(order_of("S4") == 24);
    CHECK(order_of("S10") == 3628800);
    CHECK(order_of("A5") == 60);
    CHECK(order_of("A4") == 12);
    CHECK(order_of("PSL2(4)") == 60);
    CHECK(order_of("PSL2(7)") == 168);
    CHECK(order_of("PSL2(9)") == 360);
    CHECK(order_of("PGL2(5)") == 120);
    CHECK(order_of("PGL2(4)") == 60);
    CHECK(order_of("AGL1(5,4)") == 20);
    CHECK(order_of("AGL1(49,2)") == 98);
    CHECK(order_of("Sz(8)") == 29120);
    CHECK(order_of("Sz(32)") == 32537600);
    CHECK(order_of("C2 x S3") == 12);
    CHECK(order_of("S3 x PSL2(4)") == 360);
    // Factorials up to S20 stay in 64-bit range.
    CHECK(order_of("S20") == 2432902008176640000LL);
}

TEST_CASE("syntax errors name the offending position") {
    auto fails_at = [](const std::string& text, const char* needle) {
        try {
            parse_spec(text);
            FAIL("expected a parse error for ", text);
        } catch (const std::invalid_argument& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    fails_at("", "position 1");
    fails_at("Q8", "position 1");
    fails_at("C", "position 2");
    fails_at("C06", "position 2");
    fails_at("PSL2(7", "position 7");
    fails_at("PSL2(7) junk", "position 8");
    fails_at("C2 x", "position 3");
    fails_at("C2 xC3", "position 3");
    fails_at("C2x C3", "position 3");
}

TEST_CASE("parameter validation rejects malformed families") {
    CHECK_THROWS_AS(parse_spec("C0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_spec("C4^2"), std::invalid_argument);  // base must be prime
    CHECK_THROWS_AS(parse_spec("C2^0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_spec("C2^63"), std::invalid_argument); // exponent cap
    CHECK_THROWS_AS(parse_spec("D7"), std::invalid_argument);    // odd order
    CHECK_THROWS_AS(parse_spec("D0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_spec("S0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_spec("S21"), std::invalid_argument);
    CHECK_THROWS_AS(parse_spec("A21"), std::invalid_argument);
    CHECK_THROWS_AS(parse_spec("PSL2(6)"), std::invalid_argument);  // not a prime power
    CHECK_THROWS_AS(parse_spec("PSL2(1)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_spec("PGL2(12)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_spec("AGL1(10,3)"), std::invalid_argument); // q not a prime power
    CHECK_THROWS_AS(parse_spec("AGL1(7,4)"), std::invalid_argument);  // d does not divide q-1
    CHECK_THROWS_AS(parse_spec("AGL1(7,1)"), std::invalid_argument);  // d too small
    CHECK_THROWS_AS(parse_spec("Sz(4)"), std::invalid_argument);      // even exponent
    CHECK_THROWS_AS(parse_spec("Sz(7)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_spec("Sz(2)"), std::invalid_argument);
}

TEST_CASE("buildability reflects the element-level ceiling") {
    CHECK(parse_spec("C100").buildable());
    CHECK(parse_spec("PSL2(13)").buildable());   // order 1092
    CHECK(parse_spec("C2^12").buildable());      // order 4096 == ceiling
    CHECK_FALSE(parse_spec("C2^13").buildable());
    CHECK_FALSE(parse_spec("S8").buildable());   // order 40320
    CHECK_FALSE(parse_spec("Sz(8)").buildable());
    CHECK_FALSE(parse_spec("Sz(8) x C2").buildable());
    CHECK(parse_spec("S4 x S4").buildable());    // order 576
}

TEST_CASE("built groups carry the printed spec as origin") {
    for (const char* s : {"C6", "C2^3", "D10", "S4", "A5", "PSL2(7)", "PGL2(5)", "AGL1(9,4)",
                          "C2 x S3", "C2 x C3 x C5"}) {
        CAPTURE(s);
        GroupSpec spec = parse_spec(s);
        Group g = spec.build();
        CHECK(g.origin() == spec.to_string());
        CHECK(g.order() == spec.order());
    }
}

TEST_CASE("element-level construction of Suzuki specs is refused") {
    CHECK_THROWS_AS(parse_spec("Sz(8)").build(), std::invalid_argument);
}

TEST_CASE("product specs flatten and associate left") {
    GroupSpec spec = parse_spec("C2 x C3 x C5");
    REQUIRE(spec.family == Family::Product);
    CHECK(spec.factors.size() == 3);
    CHECK(spec.factors[0].family == Family::Cyclic);
    CHECK(spec.order() == 30);
    Group g = spec.build();
    CHECK(g.order() == 30);
    CHECK(g.is_abelian());
}
