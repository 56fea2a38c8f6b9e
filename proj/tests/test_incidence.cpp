#include "doctest.h"

#include <set>

#include "unexpected/atlas.hpp"
#include "unexpected/incidence.hpp"

using namespace unexpected;

TEST_CASE("three generic points span no rich line") {
    PointConfiguration z(2, FieldSpec::rational(), {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    const auto inc = detect_hyperplanes(z, 3);
    CHECK(inc.hyperplanes.empty());
    CHECK(weak_table(inc).empty());
}

TEST_CASE("coordinate triangle is self-dual") {
    const auto z = dualize({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, FieldSpec::rational());
    CHECK(z.size() == 3);
    CHECK(z.find({0, 0, 5}) == 2);
    CHECK_THROWS_AS(dualize({{1, 2, 3}, {2, 4, 6}}, FieldSpec::rational()), DuplicateLine);
}

TEST_CASE("dual of A(9,1) and A(13,1)") {
    const auto a9 = gen_a4k1(2);
    CHECK(a9.point_count == 9);
    CHECK(a9.table() == WeakTable{{3, 4}, {4, 3}});
    const auto a13 = gen_a4k1(3);
    CHECK(a13.table() == WeakTable{{3, 12}, {4, 3}, {6, 1}});
    CHECK_THROWS_AS(gen_a4k1(1), InvalidArgument);
    CHECK_THROWS_AS(gen_a4k1(2, FieldSpec::rational()), FieldLacksUnity);
    CHECK_THROWS_AS(gen_a4k1(2, FieldSpec::prime(kDefaultPrime)), FieldLacksUnity);
}

TEST_CASE("dual of A(15,1)") {
    CHECK(gen_a15_1().table() == WeakTable{{3, 10}, {5, 6}});
    CHECK(gen_a15_1_minus_one().table() == WeakTable{{3, 8}, {4, 2}, {5, 4}});
}

TEST_CASE("D4 planes") {
    const auto d4 = gen_d4();
    const auto inc = detect_hyperplanes(d4.points(), 4);
    CHECK(inc.hyperplanes.size() == 12);
    std::size_t total = 0;
    for (const auto& p : inc.pencils) {
        CHECK(p.size() == 6);
        total += p.size();
    }
    CHECK(total == 72);
}

TEST_CASE("double counting and projective invariance") {
    const auto a = gen_a4k1(3);
    const auto inc = a.incidence();
    std::size_t by_planes = 0, by_points = 0;
    for (const auto& h : inc.hyperplanes) by_planes += h.members.size();
    for (const auto& p : inc.pencils) by_points += p.size();
    CHECK(by_planes == by_points);
    // invertible linear change of coordinates
    const PrimeField F(a.field.p);
    std::vector<Coordinates> moved;
    for (const auto& p : a.points().points()) {
        auto x = F.from_rational(p[0]), y = F.from_rational(p[1]), z = F.from_rational(p[2]);
        moved.push_back({F.to_rational(F.add(x, F.mul(2, y))), F.to_rational(F.add(y, F.mul(3, z))),
                         F.to_rational(F.add(z, F.add(x, y)))});
    }
    const auto inc2 = detect_hyperplanes(PointConfiguration(2, a.field, moved), 3);
    std::set<std::vector<int>> s1, s2;
    for (const auto& h : inc.hyperplanes) s1.insert(h.members);
    for (const auto& h : inc2.hyperplanes) s2.insert(h.members);
    CHECK(s1 == s2);
}

TEST_CASE("lines through points") {
    const auto fermat = gen_fermat_sets();
    const auto inc = fermat.Z.incidence();
    CHECK(weak_table(inc) == WeakTable{{4, 9}, {7, 9}});
    // B of type T: three L_7 and three L_4
    const long t = fermat.Z.points().find({1, 0, 0});
    REQUIRE(t >= 0);
    int l7 = 0, l4 = 0;
    for (const auto& e : lines_through(inc, static_cast<std::size_t>(t))) {
        l7 += e.members == 7;
        l4 += e.members == 4;
    }
    CHECK(l7 == 3);
    CHECK(l4 == 3);
    // generic external point
    CHECK(lines_through(inc, Coordinates{1, 12345, 777}).empty());
}

TEST_CASE("declared incidence checks") {
    CHECK_THROWS_AS(declared_incidence(2, 4, {{0, 1, 2}, {0, 1, 3}}), ValidationFailed);
    CHECK_THROWS_AS(declared_incidence(2, 4, {{0, 1, 7}}), ValidationFailed);
    const auto inc = declared_incidence(2, 6, {{0, 1, 2}, {2, 3, 4}});
    CHECK(inc.pencils[2].size() == 2);
    CHECK(weak_table(inc) == WeakTable{{3, 2}});
}

TEST_CASE("weak table json") {
    const WeakTable t{{3, 10}, {4, 3}, {5, 2}};
    CHECK(weak_table_to_json(t).dump() == R"({"3":10,"4":3,"5":2})");
    CHECK(weak_table_from_json(weak_table_to_json(t)) == t);
    CHECK_THROWS_AS(weak_table_from_json(nlohmann::json::parse(R"({"x":1})")), InvalidArgument);
}
