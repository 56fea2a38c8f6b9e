#include "doctest.h"

#include "unexpected/field.hpp"

using namespace unexpected;

TEST_CASE("prime field inverse round trip") {
    const PrimeField F(kDefaultPrime);
    CounterRng rng(7);
    for (int i = 0; i < 200; ++i) {
        u64 a = rng.below(kDefaultPrime - 1) + 1;
        CHECK(F.mul(a, F.inv(a)) == 1);
    }
    CHECK_THROWS_AS(F.inv(0), InvalidArgument);
}

TEST_CASE("rational reduction agrees with field division") {
    const PrimeField F(kDefaultPrime);
    Rational q(-7, 12);
    CHECK(F.from_rational(q) == F.div(F.neg(7), 12));
}

TEST_CASE("field spec validation") {
    CHECK_THROWS_AS(FieldSpec::prime(101), InvalidArgument);
    CHECK_THROWS_AS(FieldSpec::prime(kDefaultPrime + 2), InvalidArgument);
    CHECK(FieldSpec::prime(kDefaultPrime).to_string() == "GF(2305843009213693951)");
    CHECK(FieldSpec::rational().to_string() == "QQ");
}

TEST_CASE("miller rabin against trial division") {
    auto slow = [](u64 n) {
        if (n < 2) return false;
        for (u64 k = 2; k * k <= n; ++k)
            if (n % k == 0) return false;
        return true;
    };
    for (u64 n = 0; n < 3000; ++n) CHECK(is_probable_prime(n) == slow(n));
    // strong pseudoprime to several small bases
    CHECK_FALSE(is_probable_prime(3215031751ULL));
    CHECK(is_probable_prime(kDefaultPrime));
}

TEST_CASE("primitive roots of unity have exact order") {
    for (u64 order : {5ULL, 8ULL, 12ULL, 20ULL}) {
        const u64 p = find_prime_with_unity(order, 50);
        CHECK(p % order == 1);
        const u64 z = primitive_root_of_unity(p, order);
        CHECK(pow_mod(z, order, p) == 1);
        for (u64 k = 1; k < order; ++k) CHECK(pow_mod(z, k, p) != 1);
    }
    CHECK_THROWS_AS(primitive_root_of_unity(kDefaultPrime, 17), NoSuchRoot);
}

TEST_CASE("parse rational") {
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational("42") == 42);
    CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
    CHECK_THROWS_AS(parse_rational("x"), InvalidArgument);
}

TEST_CASE("counter rng is reproducible and split streams differ") {
    CounterRng a(1), b(1);
    for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
    auto c = CounterRng(1).split(0), d = CounterRng(1).split(1);
    CHECK(c.next() != d.next());
}
