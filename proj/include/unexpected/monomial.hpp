#pragma once

// Ordered monomial bases, formal partial derivatives of monomials and
// evaluation of (differentiated) monomial rows.

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "unexpected/field.hpp"

namespace unexpected {

using ExponentVector = std::vector<int>;
/// Multi-index of a partial derivative; its order is the sum of entries.
using DerivativeIndex = std::vector<int>;

int total_degree(const ExponentVector& e);

/// All exponent vectors over `nvars` variables of total degree exactly
/// `degree`, in lexicographically descending order (first variable heaviest).
std::vector<ExponentVector> exponents_of_degree(int nvars, int degree);

/// All exponent vectors of total degree <= `degree`, graded ascending and
/// lexicographically descending within each degree.
std::vector<ExponentVector> exponents_up_to(int nvars, int degree);

struct MonomialBasis {
    int N = 0;  ///< ambient projective dimension
    int d = 0;
    bool homogeneous = true;
    /// Homogeneous: N+1 exponents summing to d. Dehomogenized (a_0 := 1):
    /// N exponents summing to at most d, listed in the same order.
    std::vector<ExponentVector> entries;

    std::size_t size() const { return entries.size(); }
    /// Position of e in the basis, or -1.
    long index_of(const ExponentVector& e) const;
};

/// Homogeneous basis of degree-d forms in a_0..a_N, ordered
/// a_0^d, a_0^{d-1}a_1, a_0^{d-1}a_2, ..., a_N^d.
MonomialBasis monomial_basis(int N, int d);

/// The same basis dehomogenized at a_0 = 1 (entries drop the a_0 exponent).
MonomialBasis dehomogenize(const MonomialBasis& basis);

/// d^idx/da^idx of a^e = coefficient * a^result, with
/// coefficient = prod_i e_i (e_i - 1) ... (e_i - idx_i + 1). When some
/// idx_i > e_i the coefficient is 0 and result is empty.
std::pair<BigInt, ExponentVector> differentiate_monomial(const ExponentVector& e, const DerivativeIndex& idx);

/// prod_i e_i! / (e_i - idx_i)! computed in the field (zero if idx exceeds e).
template <class Field>
typename Field::value_type falling_coefficient(const Field& F, const ExponentVector& e, const DerivativeIndex& idx) {
    auto c = F.one();
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (idx[i] > e[i]) return F.zero();
        for (int t = 0; t < idx[i]; ++t) c = F.mul(c, F.from_int(e[i] - t));
    }
    return c;
}

template <class Field>
typename Field::value_type power(const Field& F, typename Field::value_type base, int exp) {
    auto r = F.one();
    while (exp > 0) {
        if (exp & 1) r = F.mul(r, base);
        base = F.mul(base, base);
        exp >>= 1;
    }
    return r;
}

/// Row of the differentiated basis at `point`: entry k is
/// d^idx(m_k)(point). `point` and `idx` have the basis arity (N+1 when
/// homogeneous, N otherwise).
template <class Field>
std::vector<typename Field::value_type> evaluate_row(const Field& F, const MonomialBasis& basis,
                                                     const DerivativeIndex& idx,
                                                     std::span<const typename Field::value_type> point) {
    const std::size_t arity = basis.homogeneous ? basis.N + 1 : basis.N;
    if (point.size() != arity || idx.size() != arity)
        throw DimensionMismatch("evaluate_row: arity mismatch");
    // cache powers per variable
    std::vector<std::vector<typename Field::value_type>> pw(arity);
    for (std::size_t i = 0; i < arity; ++i) {
        pw[i].resize(basis.d + 1);
        pw[i][0] = F.one();
        for (int t = 1; t <= basis.d; ++t) pw[i][t] = F.mul(pw[i][t - 1], point[i]);
    }
    std::vector<typename Field::value_type> row;
    row.reserve(basis.size());
    for (const auto& e : basis.entries) {
        auto v = falling_coefficient(F, e, idx);
        if (!F.is_zero(v)) {
            for (std::size_t i = 0; i < arity; ++i) v = F.mul(v, pw[i][e[i] - idx[i]]);
        }
        row.push_back(std::move(v));
    }
    return row;
}

}  // namespace unexpected
