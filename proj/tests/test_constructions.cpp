#include <doctest.h>

#include "particover/constructions.hpp"
#include "particover/groupspec.hpp"

#include <map>
#include <stdexcept>
#include <vector>

using namespace particover;

namespace {

std::map<int, int> order_census(const std::vector<Subgroup>& all, const PartitionCertificate& c) {
    std::map<int, int> census;
    for (int idx : c.members) census[all[std::size_t(idx)].order]++;
    return census;
}

} // namespace

TEST_CASE("partitions of elementary abelian groups") {
    struct Case {
        int p, n;
        int parts;
    };
    const Case cases[] = {{2, 2, 3}, {2, 3, 5}, {2, 4, 5}, {2, 5, 9},
                          {3, 2, 4}, {3, 3, 10}, {5, 2, 6}, {7, 2, 8}};
    for (const Case& c : cases) {
        CAPTURE(c.p);
        CAPTURE(c.n);
        PartitionCertificate cert = elementary_abelian_partition(c.p, c.n);
        CHECK(cert.size() == c.parts);
        Group g = elementary_abelian(c.p, c.n);
        std::vector<Subgroup> all = all_subgroups(g);
        CHECK(verify_partition(g, all, cert));
    }

    // Even rank: all parts share one order. Odd rank: one large part survives.
    Group e24 = elementary_abelian(2, 4);
    auto census24 = order_census(all_subgroups(e24), elementary_abelian_partition(2, 4));
    CHECK(census24 == std::map<int, int>{{4, 5}});
    Group e33 = elementary_abelian(3, 3);
    auto census33 = order_census(all_subgroups(e33), elementary_abelian_partition(3, 3));
    CHECK(census33 == std::map<int, int>{{3, 9}, {9, 1}});
    Group e23 = elementary_abelian(2, 3);
    auto census23 = order_census(all_subgroups(e23), elementary_abelian_partition(2, 3));
    CHECK(census23 == std::map<int, int>{{2, 4}, {4, 1}});

    CHECK_THROWS_AS(elementary_abelian_partition(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(elementary_abelian_partition(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(elementary_abelian_partition(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(elementary_abelian_partition(0, 2), std::invalid_argument);
}

TEST_CASE("partitions from fixed-point-free witnesses") {
    struct Case {
        const char* spec;
        int kernel_order, complement_order;
    };
    const Case cases[] = {{"S3", 3, 2},        {"A4", 4, 3},        {"D30", 15, 2},
                          {"AGL1(5,4)", 5, 4}, {"AGL1(7,3)", 7, 3}, {"AGL1(9,2)", 9, 2},
                          {"AGL1(9,4)", 9, 4}};
    for (const Case& c : cases) {
        CAPTURE(c.spec);
        Group g = parse_spec(c.spec).build();
        auto w = frobenius_witness(g);
        REQUIRE(w.has_value());
        CHECK(w->kernel.order == c.kernel_order);
        CHECK(w->complement.order == c.complement_order);
        PartitionCertificate cert = frobenius_partition(g, *w);
        CHECK(cert.size() == c.kernel_order + 1);
        CHECK(verify_partition(g, cert));
    }

    // The witness must actually split the group it is applied to.
    Group s3 = symmetric(3);
    auto w = frobenius_witness(s3);
    REQUIRE(w.has_value());
    FrobeniusWitness swapped{w->complement, w->kernel};
    CHECK_THROWS_AS(frobenius_partition(s3, swapped), std::invalid_argument);
    CHECK_THROWS_AS(frobenius_partition(cyclic(7), *w), std::invalid_argument);
    FrobeniusWitness junk{full_subgroup(s3), trivial_subgroup(s3)};
    CHECK_THROWS_AS(frobenius_partition(s3, junk), std::invalid_argument);
}

TEST_CASE("partitions of the projective linear groups") {
    struct Case {
        int q;
        LinearVariant variant;
        int parts;
    };
    const Case cases[] = {{4, LinearVariant::PSL, 17},
                          {4, LinearVariant::PGL, 17}, // same group either way
                          {8, LinearVariant::PSL, 65},
                          {7, LinearVariant::PSL, 50},
                          {9, LinearVariant::PSL, 82},
                          {5, LinearVariant::PGL, 26}};
    for (const Case& c : cases) {
        CAPTURE(c.q);
        PartitionCertificate cert = psl_pgl_partition(c.q, c.variant);
        CHECK(cert.size() == c.parts);
        CHECK(cert.size() == c.q * c.q + 1);
        Group g = c.variant == LinearVariant::PSL ? psl2(c.q) : pgl2(c.q);
        CHECK(verify_partition(g, cert));
    }

    // Member composition: one point stabilizer, torus subgroups, and the
    // Sylow subgroups of the characteristic that lie outside the stabilizer.
    auto census4 = order_census(all_subgroups(psl2(4)), psl_pgl_partition(4, LinearVariant::PSL));
    CHECK(census4 == std::map<int, int>{{3, 6}, {4, 4}, {5, 6}, {12, 1}});
    auto census7 = order_census(all_subgroups(psl2(7)), psl_pgl_partition(7, LinearVariant::PSL));
    CHECK(census7 == std::map<int, int>{{3, 21}, {4, 21}, {7, 7}, {21, 1}});

    CHECK_THROWS_AS(psl_pgl_partition(5, LinearVariant::PSL), std::invalid_argument);
    CHECK_THROWS_AS(psl_pgl_partition(3, LinearVariant::PSL), std::invalid_argument);
    CHECK_THROWS_AS(psl_pgl_partition(2, LinearVariant::PSL), std::invalid_argument);
    CHECK_THROWS_AS(psl_pgl_partition(6, LinearVariant::PSL), std::invalid_argument);
    CHECK_THROWS_AS(psl_pgl_partition(3, LinearVariant::PGL), std::invalid_argument);
    CHECK_THROWS_AS(psl_pgl_partition(2, LinearVariant::PGL), std::invalid_argument);
    // Valid parameters whose groups overflow the subgroup-lattice budget.
    CHECK_THROWS_AS(psl_pgl_partition(11, LinearVariant::PGL), std::length_error);
    CHECK_THROWS_AS(psl_pgl_partition(13, LinearVariant::PSL), std::length_error);
}

TEST_CASE("the four sporadic projective partitions") {
    struct Case {
        ExceptionalGroup which;
        int order, parts;
        std::map<int, int> census;
    };
    const Case cases[] = {
        {ExceptionalGroup::PGL2_5, 120, 26, {{4, 10}, {5, 5}, {6, 10}, {20, 1}}},
        {ExceptionalGroup::PSL2_7, 168, 50, {{3, 21}, {4, 21}, {7, 7}, {21, 1}}},
        {ExceptionalGroup::PSL2_9, 360, 82, {{4, 36}, {5, 36}, {9, 9}, {36, 1}}},
        {ExceptionalGroup::PSL2_11, 660, 122, {{5, 55}, {6, 55}, {11, 11}, {55, 1}}},
    };
    for (const Case& c : cases) {
        CAPTURE(c.order);
        Group g = exceptional_group(c.which);
        CHECK(g.order() == c.order);
        PartitionCertificate cert = exceptional_partition(c.which);
        CHECK(cert.size() == c.parts);
        std::vector<Subgroup> all = all_subgroups(g);
        CHECK(verify_partition(g, all, cert));
        CHECK(order_census(all, cert) == c.census);
    }
}

TEST_CASE("dihedral subgroup families of the even projective groups") {
    for (int q : {4, 8}) {
        CAPTURE(q);
        DihedralIntersectionReport rep = dihedral_intersection_checks(q);
        CHECK(rep.q == q);
        // Some conjugate pair in the small family meets beyond the identity,
        // so that family can never join a partition.
        CHECK(rep.small_first >= 0);
        CHECK(rep.small_second >= 0);
        CHECK(rep.small_first != rep.small_second);
        CHECK(rep.small_intersection_order == 2);
        // The large family pairwise meets in exactly an involution.
        REQUIRE(rep.large_pair_histogram.size() == 1);
        CHECK(rep.large_pair_histogram[0].first == 2);
        CHECK(rep.large_pairwise_order_two);
    }
    long long pairs4 = dihedral_intersection_checks(4).large_pair_histogram[0].second;
    CHECK(pairs4 == 15); // six subgroups of order 10
    long long pairs8 = dihedral_intersection_checks(8).large_pair_histogram[0].second;
    CHECK(pairs8 == 378); // twenty-eight subgroups of order 18

    CHECK_THROWS_AS(dihedral_intersection_checks(5), std::invalid_argument);
    CHECK_THROWS_AS(dihedral_intersection_checks(7), std::invalid_argument);
    CHECK_THROWS_AS(dihedral_intersection_checks(16), std::invalid_argument);
}
