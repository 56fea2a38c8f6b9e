#include "doctest.h"

#include "unexpected/atlas.hpp"
#include "unexpected/certificate.hpp"
#include "unexpected/combinatorics.hpp"
#include "unexpected/interpolation.hpp"

using namespace unexpected;

TEST_CASE("line bound examples") {
    CHECK(line_multiplicity_bound(4, 4, 3, 2).bound == 3);
    for (int k = 2; k <= 8; ++k) CHECK(line_multiplicity_bound(2 * k, 2 * k, 2 * k - 1, 2).bound == binomial(2 * k - 1, 2));
    CHECK(line_multiplicity_bound(7, 7, 3, 2).bound == 3);
    CHECK(line_multiplicity_bound(3, 7, 3, 2).bound == 0);
    CHECK(line_multiplicity_bound(6, 3, 3, 3).bound == 2);
    CHECK(line_multiplicity_bound(5, 3, 3, 3).bound == 1);
    CHECK(line_multiplicity_bound(4, 3, 3, 3).bound == 0);
    CHECK(line_multiplicity_bound(6, 3, 3, 3).derived_generalization);
}

TEST_CASE("line bound closed forms") {
    for (int d = 1; d <= 12; ++d)
        for (int m = 1; m <= d; ++m)
            for (int n = 2; n <= d + 1; ++n) {  // beyond d+1 the closed form counts j <= 0
                const long long expect = n + m - d >= 2 ? binomial(n + m - d, 2) : 0;
                CHECK(line_multiplicity_bound(n, d, m, 2).bound == expect);
            }
    for (int n = 2; n <= 7; ++n) CHECK(line_multiplicity_bound(n, 3, 3, 3).bound == std::max(0, n - 4));
}

TEST_CASE("fixed point bound") {
    CHECK(fixed_point_bound(3, {7, 7, 7}, 3, 7, true) == 4);
    CHECK(fixed_point_bound(3, {7, 7, 7}, 5, 8, true) == 7);
    CHECK_THROWS_AS(fixed_point_bound(2, {7}, 3, 7, true), InvalidArgument);
    // k = 1, B outside Z, summed over the valid range gives the line bound
    for (int d = 2; d <= 10; ++d)
        for (int m = 1; m <= d; ++m)
            for (int n = 2; n <= 14; ++n) {
                long long sum = 0;
                for (int j = std::max(1, d + 2 - n); j <= m; ++j) sum += fixed_point_bound(1, {n}, j, d, false);
                CHECK(sum == line_multiplicity_bound(n, d, m, 2).bound);
            }
}

TEST_CASE("A(13,3) square certificate") {
    const auto c = square_certificate(WeakTable{{3, 10}, {4, 3}, {5, 2}}, 13, 2, 6, 5, "A(13,3)");
    CHECK(c.total == 31);
    CHECK(c.deg_F == 30);
    CHECK(c.proven());
    CHECK(render_text(c).find("31 > 30 ⇒ F ≡ 0") != std::string::npos);
    CHECK_THROWS_AS(square_certificate(WeakTable{{3, 10}}, 14, 2, 6, 5), SizeMismatch);
}

TEST_CASE("A(30,3) square and plus-one") {
    const auto sq = square_certificate(declared_a30_3_minus_one().table(), 29, 2, 14, 13);
    CHECK(sq.total == 177);
    CHECK(sq.deg_F == 182);
    CHECK_FALSE(sq.proven());
    const auto text = render_text(sq);
    CHECK(text.find("Inconclusive") != std::string::npos);
    CHECK(text.find("Proven") == std::string::npos);
    const auto p1 = plus_one_certificate(declared_a30_3().table(), 30, 14);
    CHECK(p1.extra_terms.front().value == 198);
    CHECK(p1.total == 184);
    CHECK(p1.deg_F == 182);
    CHECK(p1.proven());
    CHECK(render_text(p1).find("185") != std::string::npos);
}

TEST_CASE("A(15,1) certificates") {
    const auto p1 = plus_one_certificate(gen_a15_1_minus_one().incidence(), 6);
    CHECK(p1.total == 32);
    CHECK(p1.deg_F == 30);
    CHECK(p1.proven());
    const auto sq = square_certificate(gen_a15_1().incidence(), 7, 6);
    CHECK(sq.total == 46);
    CHECK(sq.deg_F == 42);
    CHECK(sq.proven());
}

TEST_CASE("A(9,1) and generic points") {
    CHECK(square_certificate(gen_a4k1(2).incidence(), 4, 3).total == 13);
    // (1, t, t^3) with t = 2^i: three such points are collinear only if the t sum to 0
    std::vector<Coordinates> pts;
    for (int i = 0; i < 13; ++i) {
        const long t = 1L << i;
        pts.push_back({1, t, t * t * t});
    }
    PointConfiguration generic(2, FieldSpec::rational(), pts);
    const auto c = square_certificate(detect_hyperplanes(generic, 3), 6, 5);
    CHECK(c.total == 0);
    CHECK_FALSE(c.proven());
}

TEST_CASE("plus-one with no rich lines is inconclusive") {
    const auto c = plus_one_certificate(WeakTable{}, 14, 6);
    CHECK(c.total == 6 - 14 + 2);
    CHECK_FALSE(c.proven());
}

TEST_CASE("family identity") {
    for (int k = 1; k <= 50; ++k) {
        const auto c = family_a4k1_certificate(k);
        CHECK(c.total - c.deg_F == 1);
        CHECK(c.proven());
    }
    CHECK(family_a4k1_certificate(2).total == 13);
    CHECK(family_a4k1_certificate(3).total == 31);
    CHECK(family_a4k1_certificate(10).total == 381);
}

TEST_CASE("family certificate agrees with generated duals") {
    for (int k = 2; k <= 4; ++k) {
        const auto rec = gen_a4k1(k);
        CHECK(square_certificate(rec.incidence(), 2 * k, 2 * k - 1).total == family_a4k1_certificate(k).total);
    }
}

TEST_CASE("D4 plane counts") {
    const auto sweep = plane_count_sweep(gen_d4().points(), 0);
    CHECK(sweep.certificates.size() == 66);
    CHECK(sweep.all_proven);
    CHECK(sweep.uniform_total);
    CHECK(sweep.total == 12);
    for (auto s : sweep.incidence_sums) CHECK(s == 60);
}

TEST_CASE("penrose removal audit") {
    const auto p = gen_penrose20();
    const auto a1 = removal_audit(20, *p.declared_incidence, 5, 1);
    const auto a4 = removal_audit(20, *p.declared_incidence, 5, 4);
    CHECK(a1.subsets == 15504);
    CHECK(a1.all_six == 0);
    CHECK(a1.min_rich_planes >= 1);
    CHECK(a1.constant_sum);
    CHECK(a1.incidence_sum == 120);
    CHECK(audit_to_json(a1, false) == audit_to_json(a4, false));
    CHECK(audit_certificate(a1).proven());
    const auto zero = removal_audit(20, *p.declared_incidence, 0, 1);
    CHECK(zero.subsets == 1);
    CHECK(zero.profiles.begin()->first == std::vector<int>(20, 8));
}

TEST_CASE("subset iteration") {
    // A(15,1) with (6,5): |Z| = 15 = s + 2
    const auto cert = subset_square_certificate(gen_a15_1().incidence(), 6, 5);
    REQUIRE(cert);
    CHECK(cert->proven());
    CHECK(cert->notes.back().find("subset") != std::string::npos);
}

TEST_CASE("fermat partial reports") {
    const auto r73 = fermat_partial_report(7, 3);
    CHECK(r73.line_total == 27);
    CHECK(r73.fixed_point_terms.back() == std::pair<int, long long>{3, 4});
    CHECK(r73.min_ideal_dim_4 >= 1);
    CHECK(r73.min_ideal_dim_5 == 4);
    CHECK(r73.max_ideal_dim_5 == 4);
    const auto r85 = fermat_partial_report(8, 5);
    CHECK(r85.fixed_point_terms.back() == std::pair<int, long long>{5, 7});
    CHECK_FALSE(FermatPartialReport::machine_verified);
}

TEST_CASE("certificate json is self-checking") {
    const std::vector<Certificate> certs{
        square_certificate(WeakTable{{3, 10}, {4, 3}, {5, 2}}, 13, 2, 6, 5, "A(13,3)"),
        plus_one_certificate(declared_a30_3().table(), 30, 14), family_a4k1_certificate(5),
        plane_count_certificate(gen_d4().points(), {0, 5}),
        square_certificate(declared_a30_3_minus_one().table(), 29, 2, 14, 13)};
    for (const auto& c : certs) {
        const auto j = certificate_to_json(c);
        const auto back = certificate_from_json(j);
        CHECK(back.total == c.total);
        CHECK(back.verdict == c.verdict);
        CHECK(certificate_to_json(back) == j);
        auto forged = j;
        forged["total"] = c.total + 1;
        CHECK_THROWS_AS(certificate_from_json(forged), ValidationFailed);
        auto flipped = j;
        flipped["verdict"] = c.proven() ? "Inconclusive" : "Proven";
        CHECK_THROWS_AS(certificate_from_json(flipped), ValidationFailed);
    }
}
