#include "unexpected/monomial.hpp"

#include <numeric>

namespace unexpected {

int total_degree(const ExponentVector& e) { return std::accumulate(e.begin(), e.end(), 0); }

namespace {

void fill_degree(int nvars, int remaining, ExponentVector& cur, std::size_t pos, std::vector<ExponentVector>& out) {
    if (pos + 1 == static_cast<std::size_t>(nvars)) {
        cur[pos] = remaining;
        out.push_back(cur);
        return;
    }
    for (int v = remaining; v >= 0; --v) {
        cur[pos] = v;
        fill_degree(nvars, remaining - v, cur, pos + 1, out);
    }
}

}  // namespace

std::vector<ExponentVector> exponents_of_degree(int nvars, int degree) {
    std::vector<ExponentVector> out;
    if (nvars <= 0 || degree < 0) {
        if (nvars == 0 && degree == 0) out.emplace_back();
        return out;
    }
    ExponentVector cur(nvars, 0);
    fill_degree(nvars, degree, cur, 0, out);
    return out;
}

std::vector<ExponentVector> exponents_up_to(int nvars, int degree) {
    std::vector<ExponentVector> out;
    for (int t = 0; t <= degree; ++t) {
        auto layer = exponents_of_degree(nvars, t);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

long MonomialBasis::index_of(const ExponentVector& e) const {
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (entries[i] == e) return static_cast<long>(i);
    return -1;
}

MonomialBasis monomial_basis(int N, int d) {
    if (N < 1 || d < 0) throw InvalidArgument("monomial_basis needs N >= 1 and d >= 0");
    return MonomialBasis{N, d, true, exponents_of_degree(N + 1, d)};
}

MonomialBasis dehomogenize(const MonomialBasis& basis) {
    if (!basis.homogeneous) return basis;
    MonomialBasis out{basis.N, basis.d, false, {}};
    out.entries.reserve(basis.size());
    for (const auto& e : basis.entries) out.entries.emplace_back(e.begin() + 1, e.end());
    return out;
}

std::pair<BigInt, ExponentVector> differentiate_monomial(const ExponentVector& e, const DerivativeIndex& idx) {
    if (e.size() != idx.size()) throw DimensionMismatch("differentiate_monomial: length mismatch");
    BigInt c = 1;
    ExponentVector result(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (idx[i] > e[i]) return {BigInt(0), {}};
        for (int t = 0; t < idx[i]; ++t) c *= e[i] - t;
        result[i] = e[i] - idx[i];
    }
    return {c, result};
}

}  // namespace unexpected
