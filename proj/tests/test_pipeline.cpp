#include "particover/pipeline.hpp"

#include "particover/resultio.hpp"
#include "particover/version.hpp"

#include <doctest.h>

#include <stdexcept>
#include <string>

using namespace particover;

namespace {

ComputeOutcome run(const std::string& spec, double budget = 60.0) {
    ComputeOptions opt;
    opt.budget_seconds = budget;
    return compute_result(parse_spec(spec), opt);
}

SigmaResult sigma_exact(long long v) {
    SigmaResult r;
    r.kind = SigmaResult::Kind::Exact;
    r.value = v;
    return r;
}

SigmaResult sigma_bounds(long long lo, std::optional<long long> up) {
    SigmaResult r;
    r.kind = SigmaResult::Kind::Bounds;
    r.lower = lo;
    r.upper = up;
    return r;
}

RhoResult rho_exact(long long v) {
    RhoResult r;
    r.kind = RhoResult::Kind::Exact;
    r.value = v;
    return r;
}

RhoResult rho_bounds(long long lo, std::optional<long long> up) {
    RhoResult r;
    r.kind = RhoResult::Kind::Bounds;
    r.lower = lo;
    r.upper = up;
    return r;
}

} // namespace

TEST_CASE("computing both values for the benchmark groups") {
    ComputeOutcome oc = run("S4");
    CHECK(oc.record.spec == "S4");
    CHECK(oc.record.order == 24);
    CHECK(oc.record.version == kVersion);
    CHECK(oc.record.sigma == ValueEntry::number(4));
    CHECK(oc.record.rho == ValueEntry::number(10));
    CHECK(oc.record.sigma_source == "formula+search");
    CHECK(oc.record.rho_source == "formula+search");
    CHECK(oc.record.seconds >= 0.0);
    REQUIRE_FALSE(oc.cert_parts.empty());
    CHECK(oc.record.cert_digest == certificate_digest(oc.cert_parts));
    CHECK(oc.record.cert_digest.size() == 16);

    // The persisted form reproduces the record exactly.
    auto back = parse_json_line(to_json_line(oc.record));
    REQUIRE(back.has_value());
    CHECK(*back == oc.record);

    ComputeOutcome d30 = run("D30");
    CHECK(d30.record.sigma == ValueEntry::number(4));
    CHECK(d30.record.rho == ValueEntry::number(16));
    CHECK(d30.record.sigma_source == "formula+search");
    CHECK(d30.record.rho_source == "formula+search");

    ComputeOutcome psl4 = run("PSL2(4)");
    CHECK(psl4.record.sigma == ValueEntry::number(10));
    CHECK(psl4.record.rho == ValueEntry::number(17));
    CHECK(psl4.record.rho_source == "formula+construction+search");
}

TEST_CASE("cyclic groups report markers without any search") {
    ComputeOutcome oc = run("C12");
    CHECK(oc.record.sigma == ValueEntry::infinite());
    CHECK(oc.record.rho == ValueEntry::none());
    CHECK(oc.record.sigma_source == "formula");
    CHECK(oc.record.rho_source == "formula");
    CHECK(oc.record.cert_digest.empty());
    CHECK(oc.cert_parts.empty());

    // An unbuildably large cyclic group still answers instantly.
    ComputeOutcome big = run("C1000000");
    CHECK(big.record.order == 1000000);
    CHECK(big.record.sigma == ValueEntry::infinite());
    CHECK(big.record.rho == ValueEntry::none());

    // A cyclic group hiding behind a product name is caught by the search.
    ComputeOutcome c6 = run("C2 x C3");
    CHECK(c6.record.sigma == ValueEntry::infinite());
    CHECK(c6.record.rho == ValueEntry::none());
    CHECK(c6.record.sigma_source == "search");
    CHECK(c6.record.rho_source == "search");
}

TEST_CASE("groups with a certificate construction but no closed partition form") {
    // Non-irreducible kernel action: the certificate matches the optimum.
    ComputeOutcome oc = run("AGL1(9,2)");
    CHECK(oc.record.sigma == ValueEntry::number(4));
    CHECK(oc.record.rho == ValueEntry::number(10));
    CHECK(oc.record.rho_source == "construction+search");

    // Here the certificate (kernel size + 1 = 28 parts) is strictly beaten
    // by the optimum, so the construction drops out of the source.
    ComputeOutcome big = run("AGL1(27,2)");
    CHECK(big.record.rho == ValueEntry::number(10));
    CHECK(big.record.rho_source == "search");
    CHECK(big.record.sigma == ValueEntry::number(4));
}

TEST_CASE("closed forms only, no element-level group: the Suzuki family") {
    ComputeOutcome oc = run("Sz(8)");
    CHECK(oc.record.order == 29120);
    CHECK(oc.record.sigma == ValueEntry::number(2080));
    CHECK(oc.record.sigma_source == "formula");
    CHECK(oc.record.rho == ValueEntry::interval(2143, 4161));
    CHECK(oc.record.rho_source == "formula");
    CHECK(oc.record.cert_digest.empty());
    CHECK_FALSE(oc.notes.empty());

    ComputeOutcome next = run("Sz(32)");
    CHECK(next.record.order == 32537600);
    CHECK(next.record.sigma == ValueEntry::number(524800));
    CHECK(next.record.rho == ValueEntry::interval(525823, 1049601));

    // The partition size is interval-only, so exactness cannot be promised.
    ComputeOptions strict;
    strict.exact_only = true;
    CHECK_THROWS_AS(compute_result(parse_spec("Sz(8)"), strict), std::runtime_error);
    strict.want_rho = false;
    ComputeOutcome sigma_only = compute_result(parse_spec("Sz(8)"), strict);
    CHECK(sigma_only.record.sigma == ValueEntry::number(2080));
    CHECK(sigma_only.record.rho_source.empty()); // untouched

    CHECK_THROWS_AS(run("Sz(8) x C2"), std::invalid_argument);
    CHECK_THROWS_AS(run("C3 x Sz(8)"), std::invalid_argument);
}

TEST_CASE("request validation") {
    ComputeOptions opt;
    opt.want_sigma = false;
    opt.want_rho = false;
    CHECK_THROWS_AS(compute_result(parse_spec("S4"), opt), std::invalid_argument);

    opt = ComputeOptions{};
    opt.budget_seconds = 0.0;
    CHECK_THROWS_AS(compute_result(parse_spec("S4"), opt), std::invalid_argument);

    opt = ComputeOptions{};
    opt.threads = -2;
    CHECK_THROWS_AS(compute_result(parse_spec("S4"), opt), std::invalid_argument);
}

TEST_CASE("partial requests leave the other value untouched") {
    ComputeOptions opt;
    opt.want_rho = false;
    ComputeOutcome oc = compute_result(parse_spec("D8"), opt);
    CHECK(oc.record.sigma == ValueEntry::number(3));
    CHECK(oc.record.rho_source.empty());

    opt = ComputeOptions{};
    opt.want_sigma = false;
    oc = compute_result(parse_spec("D8"), opt);
    CHECK(oc.record.rho == ValueEntry::number(5));
    CHECK(oc.record.sigma_source.empty());
}

TEST_CASE("merging a closed form with the cover search outcome") {
    CHECK_THROWS_AS(reconcile_sigma(std::nullopt, nullptr), std::invalid_argument);

    Reconciled r = reconcile_sigma(4, nullptr);
    CHECK(r.value == ValueEntry::number(4));
    CHECK(r.source == "formula");

    SigmaResult res = sigma_exact(4);
    r = reconcile_sigma(4, &res);
    CHECK(r.value == ValueEntry::number(4));
    CHECK(r.source == "formula+search");
    r = reconcile_sigma(std::nullopt, &res);
    CHECK(r.source == "search");
    CHECK_THROWS_WITH_AS(reconcile_sigma(5, &res), doctest::Contains("FATAL consistency"),
                         std::runtime_error);

    res.kind = SigmaResult::Kind::Infinite;
    r = reconcile_sigma(std::nullopt, &res);
    CHECK(r.value == ValueEntry::infinite());
    CHECK_THROWS_WITH_AS(reconcile_sigma(3, &res), doctest::Contains("FATAL consistency"),
                         std::runtime_error);

    res = sigma_bounds(3, 6);
    r = reconcile_sigma(4, &res);
    CHECK(r.value == ValueEntry::number(4)); // formula inside the bracket wins
    CHECK(r.source == "formula");
    CHECK_THROWS_AS(reconcile_sigma(2, &res), std::runtime_error);
    CHECK_THROWS_AS(reconcile_sigma(7, &res), std::runtime_error);
    r = reconcile_sigma(std::nullopt, &res);
    CHECK(r.value == ValueEntry::interval(3, 6));
    CHECK(r.source == "search bounds");

    res = sigma_bounds(3, std::nullopt);
    r = reconcile_sigma(4, &res); // no upper bound: any formula >= lower is fine
    CHECK(r.value == ValueEntry::number(4));
    CHECK_THROWS_AS(reconcile_sigma(std::nullopt, &res), std::runtime_error);
}

TEST_CASE("merging a closed form, a certificate, and the partition search outcome") {
    CHECK_THROWS_AS(reconcile_rho(std::nullopt, std::nullopt, nullptr), std::invalid_argument);

    Reconciled r = reconcile_rho(6, std::nullopt, nullptr);
    CHECK(r.value == ValueEntry::number(6));
    CHECK(r.source == "formula");
    r = reconcile_rho(6, 6, nullptr);
    CHECK(r.source == "formula+construction");

    // A verified certificate smaller than the claimed optimum is a
    // contradiction no matter what the search says.
    CHECK_THROWS_WITH_AS(reconcile_rho(10, 9, nullptr), doctest::Contains("FATAL consistency"),
                         std::runtime_error);

    RhoResult res = rho_exact(10);
    r = reconcile_rho(10, 10, &res);
    CHECK(r.value == ValueEntry::number(10));
    CHECK(r.source == "formula+construction+search");
    r = reconcile_rho(std::nullopt, 28, &res); // certificate beaten by the optimum
    CHECK(r.source == "search");
    CHECK_THROWS_AS(reconcile_rho(11, std::nullopt, &res), std::runtime_error);
    CHECK_THROWS_AS(reconcile_rho(std::nullopt, 9, &res), std::runtime_error);

    res.kind = RhoResult::Kind::None;
    r = reconcile_rho(std::nullopt, std::nullopt, &res);
    CHECK(r.value == ValueEntry::none());
    CHECK(r.source == "search");
    CHECK_THROWS_AS(reconcile_rho(6, std::nullopt, &res), std::runtime_error);
    CHECK_THROWS_AS(reconcile_rho(std::nullopt, 6, &res), std::runtime_error);

    res = rho_bounds(14, 50);
    r = reconcile_rho(50, 50, &res);
    CHECK(r.value == ValueEntry::number(50));
    CHECK(r.source == "formula+construction");
    CHECK_THROWS_AS(reconcile_rho(13, std::nullopt, &res), std::runtime_error);
    CHECK_THROWS_AS(reconcile_rho(51, std::nullopt, &res), std::runtime_error);
    r = reconcile_rho(std::nullopt, 50, &res);
    CHECK(r.value == ValueEntry::interval(14, 50));
    CHECK(r.source == "construction+search bounds");
    r = reconcile_rho(std::nullopt, std::nullopt, &res);
    CHECK(r.source == "search bounds");

    res = rho_bounds(14, std::nullopt);
    CHECK_THROWS_AS(reconcile_rho(std::nullopt, std::nullopt, &res), std::runtime_error);
}

TEST_CASE("the reference table reproduces every published value") {
    ComputeOptions opt;
    opt.budget_seconds = 10.0;
    TableReport report = run_reference_table(opt);

    CHECK_FALSE(report.any_fail);
    REQUIRE(report.cells.size() == 44); // 22 groups x two quantities
    for (const TableCell& c : report.cells) {
        CHECK(c.status != "FAIL");
        CHECK((c.quantity == "sigma" || c.quantity == "rho"));
    }

    auto cell = [&report](const std::string& spec, const std::string& quantity) -> const TableCell& {
        for (const TableCell& c : report.cells)
            if (c.spec == spec && c.quantity == quantity) return c;
        static TableCell missing;
        FAIL(("missing table cell " + spec + "/" + quantity));
        return missing;
    };

    CHECK(cell("S4", "sigma").expected == ValueEntry::number(4));
    CHECK(cell("S4", "sigma").status == "PASS");
    CHECK(cell("S4", "rho").expected == ValueEntry::number(10));
    CHECK(cell("PSL2(9)", "rho").expected == ValueEntry::number(82));
    CHECK(cell("PSL2(8)", "sigma").expected == ValueEntry::number(36));
    CHECK(cell("C2^2", "rho").expected == ValueEntry::number(3));
    CHECK(cell("C2^2", "rho").status == "PASS");
    CHECK(cell("PGL2(5)", "rho").expected == ValueEntry::number(26));
    CHECK(cell("Sz(8)", "rho").expected == ValueEntry::interval(2143, 4161));
    CHECK(cell("Sz(8)", "rho").status == "INTERVAL");
    CHECK(cell("Sz(8)", "sigma").status == "PASS");
}
