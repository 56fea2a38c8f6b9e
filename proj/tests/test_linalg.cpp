#include "doctest.h"

#include <numeric>

#include "unexpected/linalg.hpp"
#include "unexpected/field.hpp"

using namespace unexpected;

namespace {

// Leibniz formula as an independent oracle.
Rational leibniz(const Matrix<Rational>& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rational total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Rational term = inversions % 2 ? -1 : 1;
        for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

Matrix<Rational> random_matrix(CounterRng& rng, std::size_t r, std::size_t c, u64 span, double zero_rate = 0.0) {
    Matrix<Rational> m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            if (zero_rate > 0 && rng.below(1000) < zero_rate * 1000) continue;
            m(i, j) = Rational(static_cast<long>(rng.below(span)) - static_cast<long>(span / 2),
                               static_cast<unsigned long>(rng.below(4) + 1));
            m(i, j).canonicalize();
        }
    return m;
}

}  // namespace

TEST_CASE("elimination determinant matches Leibniz") {
    const RationalField Q;
    CounterRng rng(11);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 1 + t % 6;
        auto m = random_matrix(rng, n, n, 7, t % 3 == 0 ? 0.5 : 0.0);
        CHECK(determinant(Q, m) == leibniz(m));
    }
}

TEST_CASE("rank over QQ agrees with rank over two primes") {
    const RationalField Q;
    const PrimeField P1(kDefaultPrime), P2(find_prime_with_unity(3, 50));
    CounterRng rng(5);
    for (int t = 0; t < 40; ++t) {
        // low-rank product A*B
        const std::size_t r = 1 + t % 4;
        auto A = random_matrix(rng, 6, r, 9), B = random_matrix(rng, r, 7, 9);
        Matrix<Rational> M(6, 7);
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 7; ++j)
                for (std::size_t k = 0; k < r; ++k) M(i, j) += A(i, k) * B(k, j);
        const auto rq = rank(Q, M);
        Matrix<u64> M1(6, 7), M2(6, 7);
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 7; ++j) {
                M1(i, j) = P1.from_rational(M(i, j));
                M2(i, j) = P2.from_rational(M(i, j));
            }
        CHECK(rq <= r);
        CHECK(rank(P1, M1) == rq);
        CHECK(rank(P2, M2) == rq);
    }
}

TEST_CASE("kernel vectors annihilate the matrix") {
    const RationalField Q;
    CounterRng rng(3);
    for (int t = 0; t < 20; ++t) {
        auto M = random_matrix(rng, 3 + t % 3, 7, 5, 0.3);
        const auto ker = kernel(Q, M);
        CHECK(ker.size() + rank(Q, M) == M.cols());
        for (const auto& v : ker)
            for (std::size_t i = 0; i < M.rows(); ++i) {
                Rational s = 0;
                for (std::size_t j = 0; j < M.cols(); ++j) s += M(i, j) * v[j];
                CHECK(s == 0);
            }
    }
}

TEST_CASE("degenerate shapes") {
    const RationalField Q;
    CHECK(determinant(Q, Matrix<Rational>()) == 1);
    CHECK_THROWS_AS(determinant(Q, Matrix<Rational>(2, 3)), DimensionMismatch);
    CHECK(rank_deficiency(Q, Matrix<Rational>(2, 3)) == 2);
}
