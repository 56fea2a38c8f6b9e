#include "doctest.h"

#include "unexpected/combinatorics.hpp"
#include "unexpected/interpolation.hpp"

using namespace unexpected;

namespace {

PointConfiguration dk_seven() {
    std::vector<Coordinates> pts{{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {2, -2, 1}, {-1, -3, 1}, {3, 5, 1}, {4, 1, 1}};
    return PointConfiguration(2, FieldSpec::rational(), pts, "dk7");
}

PointConfiguration dk_nine() {
    std::vector<Coordinates> pts{{0, 0, 1},   {1, 0, 1}, {0, 1, 1},  {2, -2, 1}, {-1, -3, 1},
                                 {3, 5, 1},   {4, 1, 1}, {-3, 5, 1}, {-5, 2, 1}};
    return PointConfiguration(2, FieldSpec::rational(), pts, "dk9");
}

// Rank of the homogeneous matrix (point rows + all order-(j-1) partials in a_0..a_N).
long long homogeneous_rank(const PointConfiguration& z, int d, int j, const Coordinates& B) {
    const RationalField Q;
    const auto basis = monomial_basis(z.N(), d);
    Matrix<Rational> M;
    for (const auto& p : z.points()) {
        auto r = evaluate_row(Q, basis, DerivativeIndex(z.N() + 1, 0), std::span<const Rational>(p));
        M.append_row(std::span<const Rational>(r));
    }
    for (const auto& idx : exponents_of_degree(z.N() + 1, j - 1)) {
        auto r = evaluate_row(Q, basis, idx, std::span<const Rational>(B));
        M.append_row(std::span<const Rational>(r));
    }
    return static_cast<long long>(rank(Q, M));
}

}  // namespace

TEST_CASE("deg F reproduces the tabulated values") {
    CHECK(degree_of_F(2, 6, 5) == 30);
    CHECK(degree_of_F(2, 14, 13) == 182);
    CHECK(degree_of_F(2, 7, 3) == 30);
    CHECK(degree_of_F(2, 8, 5) == 60);
    CHECK(degree_of_F(3, 3, 3) == 10);
    CHECK(degree_of_F(3, 4, 4) == 20);
}

TEST_CASE("square size") {
    CHECK(square_size(2, 3, 2) == 7);
    CHECK(square_size(2, 4, 3) == 9);
    CHECK(square_size(3, 3, 3) == 10);
    CHECK_THROWS_AS(h_total(dk_seven(), 4, 2, Coordinates{1, 1, 1}), NotSquare);
}

TEST_CASE("chain shape and symbolic rendering") {
    const auto chain = build_chain(dk_seven(), 3, 2, std::nullopt);
    CHECK(chain.columns() == 10);
    CHECK(chain.rows(2) == 10);
    CHECK(chain.rows(1) == 8);
    const auto S = chain.symbolic(2);
    CHECK(S(7, 0) == "1");
    CHECK(S(7, 1) == "a1");
    CHECK(S(8, 3) == "2*a1");
    CHECK(S(9, 4) == "a1");
    CHECK(S(9, 0) == "0");
}

TEST_CASE("chart swap keeps the affine dimension") {
    const auto z = dk_seven();
    const std::vector<Coordinates> Bs{{0, 1, 2}, {0, 0, 1}, {3, 1, -2}, {0, 1, 0}};
    for (const auto& B : Bs) {
        for (int j = 1; j <= 3; ++j) {
            const auto s = dim_system(z, 3, j, B, FieldSpec::rational());
            CHECK(s.rank == homogeneous_rank(z, 3, j, B));
        }
    }
    CHECK(build_chain(z, 3, 2, Coordinates{0, 1, 2}).chart_swap == 1);
}

TEST_CASE("dk seven: locus is a sextic double at the points") {
    const auto z = dk_seven();
    const auto F = symbolic_locus(z, 3, 2);
    CHECK_FALSE(F.is_zero());
    CHECK(F.degree == 6);
    for (const auto& [e, c] : F.terms) CHECK(total_degree(e) == 6);
    for (const auto& p : z.points()) CHECK(multiplicity_at(F, p) == 2);
}

TEST_CASE("dk nine: locus of degree 12 triple at the points") {
    const auto z = dk_nine();
    const auto F = symbolic_locus(z, 4, 3, 1'000'000, std::nullopt, 0);
    CHECK_FALSE(F.is_zero());
    CHECK(F.degree == 12);
    for (const auto& p : z.points()) CHECK(multiplicity_at(F, p) == 3);
}

TEST_CASE("symbolic locus agrees with the numeric determinant") {
    const auto z = dk_seven();
    const auto Fq = symbolic_locus(z, 3, 2);
    const auto Fp = symbolic_locus(z, 3, 2, 1'000'000, FieldSpec::prime(kDefaultPrime));
    CounterRng root(99);
    for (int t = 0; t < 50; ++t) {
        auto rng = root.split(t);
        Coordinates B{1, Rational(static_cast<long>(rng.below(41)) - 20, 3),
                      Rational(static_cast<long>(rng.below(41)) - 20, 7)};
        for (auto& q : B) q.canonicalize();
        CHECK(Fq.evaluate(B) == determinant_at(z, 3, 2, B, FieldSpec::rational()));
        const auto Bp = random_chart_point(2, kDefaultPrime, rng);
        CHECK(Fp.evaluate(Bp) == determinant_at(z, 3, 2, Bp, FieldSpec::prime(kDefaultPrime)));
    }
    CHECK_THROWS_AS(symbolic_locus(z, 3, 2, 10), BudgetExceeded);
}

TEST_CASE("zero locus test is deterministic across thread counts") {
    const auto z = dk_seven();
    const auto a = zero_locus_test(z, 3, 2, 8, 1234, FieldSpec::prime(kDefaultPrime), 1);
    const auto b = zero_locus_test(z, 3, 2, 8, 1234, FieldSpec::prime(kDefaultPrime), 4);
    CHECK(a.kind == ZeroLocusVerdict::Kind::NonzeroWitness);
    CHECK(a.witness == b.witness);
    CHECK(sgn(determinant_at(z, 3, 2, *a.witness, FieldSpec::prime(kDefaultPrime))) != 0);
}

TEST_CASE("kernel form vanishes where it should") {
    const auto z = dk_seven();
    // the cubic singular at a point of the locus: choose B in Z (F vanishes to order 2 there)
    const Coordinates B{1, 2, 3};
    const auto dims = dim_system(z, 3, 2, B, FieldSpec::rational());
    if (dims.dim == 1) {
        const auto f = kernel_form(z, 3, 2, B, FieldSpec::rational());
        for (const auto& p : z.points()) CHECK(sgn(f.evaluate(p)) == 0);
    } else {
        CHECK_THROWS_AS(kernel_form(z, 3, 2, B, FieldSpec::rational()), EmptySystem);
    }
    // B = a point of Z: the system L(3; 2P + Z) is nonempty
    const auto f0 = kernel_form(z.without(std::vector<int>{6}), 3, 2, z.point(6), FieldSpec::rational());
    CHECK(sgn(f0.partial({1, 0, 0}, z.point(6))) == 0);
}

TEST_CASE("rank deficiency equals h in the square case") {
    const auto z = dk_seven();
    for (const auto& B : std::vector<Coordinates>{{1, 7, -2}, {0, 0, 1}, {1, 1, 1}}) {
        for (const auto& s : h_profile(z, 3, B, FieldSpec::rational())) {
            if (s.rows <= s.cols) CHECK(s.h == s.deficiency());
            CHECK(s.h >= 0);
        }
    }
}
