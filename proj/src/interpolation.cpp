#include "unexpected/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "unexpected/combinatorics.hpp"

namespace unexpected {

long long square_size(int N, int d, int m) {
    if (m < 1 || d < m) throw InvalidArgument("square_size needs d >= m >= 1");
    const long long s = binomial(d + N, N) - binomial(m + N - 1, N);
    if (s <= 0) throw NotSquare("no positive point count makes the (" + std::to_string(d) + "," + std::to_string(m) +
                                ") interpolation matrix square in P^" + std::to_string(N));
    return s;
}

long long degree_of_F(int N, int d, int m) {
    if (m < 1 || d < m) throw InvalidArgument("degree_of_F needs d >= m >= 1");
    return binomial(m + N - 1, N) * (d - m + 1);
}

namespace {

/// Evaluation machinery for one configuration over one field.
template <class Field>
class Engine {
public:
    using V = typename Field::value_type;

    Engine(const Field& F, const PointConfiguration& config, int d)
        : F_(F), N_(config.N()), d_(d), hom_(monomial_basis(config.N(), d)), aff_(dehomogenize(hom_)) {
        const DerivativeIndex zero(N_ + 1, 0);
        point_rows_.reserve(config.size());
        for (const auto& p : config.points()) {
            auto coords = to_field(F_, p);
            point_rows_.push_back(evaluate_row(F_, hom_, zero, std::span<const V>(coords)));
        }
    }

    std::size_t columns() const { return hom_.size(); }
    std::size_t points() const { return point_rows_.size(); }
    const MonomialBasis& affine_basis() const { return aff_; }
    const std::vector<std::vector<V>>& point_rows() const { return point_rows_; }

    Matrix<V> points_only() const {
        Matrix<V> m;
        if (point_rows_.empty()) return Matrix<V>(0, columns());
        for (const auto& r : point_rows_) m.append_row(std::span<const V>(r));
        return m;
    }

    /// M_j at the chart point b = (B_1/B_0, ..., B_N/B_0).
    Matrix<V> chain_matrix(const std::vector<V>& b, int j) const {
        Matrix<V> m = points_only();
        for (const auto& idx : exponents_up_to(N_, j - 1)) {
            auto row = evaluate_row(F_, aff_, idx, std::span<const V>(b));
            m.append_row(std::span<const V>(row));
        }
        return m;
    }

    /// Point rows followed by every order-(j-1) partial of w in a_0..a_N at B
    /// (the homogeneous form of the matrix; valid at any B).
    Matrix<V> homogeneous_matrix(const std::vector<V>& B, int j) const {
        Matrix<V> m = points_only();
        for (const auto& idx : exponents_of_degree(N_ + 1, j - 1)) {
            auto row = evaluate_row(F_, hom_, idx, std::span<const V>(B));
            m.append_row(std::span<const V>(row));
        }
        return m;
    }

private:
    const Field& F_;
    int N_;
    int d_;
    MonomialBasis hom_;
    MonomialBasis aff_;
    std::vector<std::vector<V>> point_rows_;
};

/// Index exchanged with a_0 so that B_0 != 0 in the field (0 if none needed).
template <class Field>
int chart_index(const Field& F, const Coordinates& B) {
    for (std::size_t i = 0; i < B.size(); ++i)
        if (!F.is_zero(F.from_rational(B[i]))) return static_cast<int>(i);
    throw InvalidArgument("the zero vector is not a projective point");
}

std::vector<int> swap_permutation(int N, int k) {
    std::vector<int> perm(N + 1);
    for (int i = 0; i <= N; ++i) perm[i] = i;
    std::swap(perm[0], perm[k]);
    return perm;
}

/// Configuration and chart point after the coordinate change putting B in a_0 = 1.
template <class Field>
struct Charted {
    PointConfiguration config;
    std::vector<typename Field::value_type> b;  // affine coordinates of B
    int swap = 0;
};

template <class Field>
Charted<Field> chart(const Field& F, const PointConfiguration& config, const Coordinates& B) {
    if (B.size() != static_cast<std::size_t>(config.N() + 1)) throw DimensionMismatch("B has the wrong arity");
    const int k = chart_index(F, B);
    Charted<Field> out{config, {}, k};
    auto coords = to_field(F, B);
    if (k != 0) {
        const auto perm = swap_permutation(config.N(), k);
        out.config = config.permuted(perm);
        std::swap(coords[0], coords[k]);
    }
    const auto inv0 = F.inv(coords[0]);
    for (std::size_t i = 1; i < coords.size(); ++i) out.b.push_back(F.mul(coords[i], inv0));
    return out;
}

template <class Field>
SystemDims dims_impl(const Field& F, const PointConfiguration& config, int d, int j, const Coordinates& B) {
    if (j < 1 || j > d) throw InvalidArgument("dim_system needs 1 <= j <= d");
    auto ch = chart(F, config, B);
    Engine<Field> eng(F, ch.config, d);
    const auto M = eng.chain_matrix(ch.b, j);
    SystemDims out;
    out.d = d;
    out.j = j;
    out.rows = static_cast<long long>(M.rows());
    out.cols = static_cast<long long>(M.cols());
    out.rank = static_cast<long long>(rank(F, M));
    out.dim = out.cols - out.rank;
    const int N = config.N();
    out.vdim = binomial(d + N, N) - binomial(j + N - 1, N) - static_cast<long long>(config.size());
    out.h = out.dim - std::max(0LL, out.vdim);
    return out;
}

void require_square(const PointConfiguration& config, int d, int m) {
    const long long s = square_size(config.N(), d, m);
    if (static_cast<long long>(config.size()) != s)
        throw NotSquare("configuration has " + std::to_string(config.size()) + " points but the (" + std::to_string(d) +
                        "," + std::to_string(m) + ") matrix in P^" + std::to_string(config.N()) + " is square for " +
                        std::to_string(s));
}

std::string monomial_text(const ExponentVector& e, const char* var, int offset) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += var + std::to_string(i + offset);
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

}  // namespace

std::size_t InterpolationChain::derivative_rows(int j) const {
    return static_cast<std::size_t>(binomial(j - 1 + config.N(), config.N()));
}

Matrix<Scalar> InterpolationChain::evaluate(int j, const FieldSpec& field) const {
    if (!B) throw InvalidArgument("the chain has a symbolic B; use symbolic()");
    if (j < 1 || j > d) throw InvalidArgument("chain block index out of range");
    const FieldSpec f = compute_field(config, field);
    return with_field(f, [&](const auto& F) {
        auto ch = chart(F, config, *B);
        using Eng = Engine<std::decay_t<decltype(F)>>;
        Eng eng(F, ch.config, d);
        const auto M = eng.chain_matrix(ch.b, j);
        Matrix<Scalar> out(M.rows(), M.cols());
        for (std::size_t r = 0; r < M.rows(); ++r)
            for (std::size_t c = 0; c < M.cols(); ++c) out(r, c) = F.to_rational(M(r, c));
        return out;
    });
}

Matrix<std::string> InterpolationChain::symbolic(int j) const {
    const FieldSpec f = config.field().is_prime() ? config.field() : FieldSpec::rational();
    Matrix<std::string> out(rows(j), columns());
    with_field(f, [&](const auto& F) {
        for (std::size_t r = 0; r < config.size(); ++r) {
            const DerivativeIndex zero(config.N() + 1, 0);
            auto coords = to_field(F, config.point(r));
            auto row = evaluate_row(F, basis, zero, std::span<const typename std::decay_t<decltype(F)>::value_type>(coords));
            for (std::size_t c = 0; c < row.size(); ++c) out(r, c) = F.to_rational(row[c]).get_str();
        }
        return 0;
    });
    const auto aff = dehomogenize(basis);
    for (std::size_t k = 0; k < derivative_rows(j); ++k) {
        for (std::size_t c = 0; c < columns(); ++c) {
            auto [coef, rest] = differentiate_monomial(aff.entries[c], derivative_indices[k]);
            std::string text;
            if (coef == 0) {
                text = "0";
            } else {
                const auto mono = monomial_text(rest, "a", 1);
                if (mono.empty()) text = coef.get_str();
                else text = coef == 1 ? mono : coef.get_str() + "*" + mono;
            }
            out(config.size() + k, c) = text;
        }
    }
    return out;
}

InterpolationChain build_chain(const PointConfiguration& config, int d, int m, std::optional<Coordinates> B) {
    if (d < 1) throw InvalidArgument("build_chain needs d >= 1");
    InterpolationChain chain;
    chain.d = d;
    chain.m = m;
    chain.basis = monomial_basis(config.N(), d);
    chain.derivative_indices = exponents_up_to(config.N(), d - 1);
    chain.config = config;
    if (B) {
        if (B->size() != static_cast<std::size_t>(config.N() + 1)) throw DimensionMismatch("B has the wrong arity");
        const FieldSpec f = config.field().is_prime() ? config.field() : FieldSpec::rational();
        chain.chart_swap = with_field(f, [&](const auto& F) { return chart_index(F, *B); });
        if (chain.chart_swap != 0) {
            const auto perm = swap_permutation(config.N(), chain.chart_swap);
            chain.config = config.permuted(perm);
            Coordinates b = *B;
            std::swap(b[0], b[chain.chart_swap]);
            chain.B = b;
        } else {
            chain.B = B;
        }
    }
    return chain;
}

SystemDims dim_system(const PointConfiguration& config, int d, int j, const Coordinates& B, const FieldSpec& field) {
    const FieldSpec f = compute_field(config, field);
    return with_field(f, [&](const auto& F) { return dims_impl(F, config, d, j, B); });
}

std::vector<SystemDims> h_profile(const PointConfiguration& config, int d, const Coordinates& B,
                                  const FieldSpec& field) {
    const FieldSpec f = compute_field(config, field);
    return with_field(f, [&](const auto& F) {
        using FT = std::decay_t<decltype(F)>;
        auto ch = chart(F, config, B);
        Engine<FT> eng(F, ch.config, d);
        std::vector<SystemDims> out;
        const int N = config.N();
        for (int j = 1; j <= d; ++j) {
            const auto M = eng.chain_matrix(ch.b, j);
            SystemDims s;
            s.d = d;
            s.j = j;
            s.rows = static_cast<long long>(M.rows());
            s.cols = static_cast<long long>(M.cols());
            s.rank = static_cast<long long>(rank(F, M));
            s.dim = s.cols - s.rank;
            s.vdim = binomial(d + N, N) - binomial(j + N - 1, N) - static_cast<long long>(config.size());
            s.h = s.dim - std::max(0LL, s.vdim);
            out.push_back(s);
        }
        return out;
    });
}

long long h_total(const PointConfiguration& config, int d, int m, const Coordinates& B, const FieldSpec& field) {
    require_square(config, d, m);
    long long total = 0;
    for (const auto& s : h_profile(config, d, B, field)) total += s.h;
    return total;
}

Coordinates random_chart_point(int N, u64 p, CounterRng& rng) {
    Coordinates b(N + 1);
    b[0] = 1;
    for (int i = 1; i <= N; ++i) b[i] = Rational(mpz_class(static_cast<unsigned long>(rng.below(p))));
    return b;
}

long long generic_dim(const PointConfiguration& config, int d, int j, int trials, u64 seed, const FieldSpec& field) {
    const FieldSpec f = compute_field(config, field);
    if (!f.is_prime()) throw InvalidArgument("generic_dim samples B over a prime field");
    if (trials < 1) throw InvalidArgument("generic_dim needs at least one trial");
    long long best = -1;
    const CounterRng root(seed);
    for (int t = 0; t < trials; ++t) {
        auto rng = root.split(static_cast<u64>(t));
        const auto B = random_chart_point(config.N(), f.p, rng);
        const auto dims = dim_system(config, d, j, B, f);
        best = best < 0 ? dims.dim : std::min(best, dims.dim);
    }
    return best;
}

ZeroLocusVerdict zero_locus_test(const PointConfiguration& config, int d, int m, int trials, u64 seed,
                                 const FieldSpec& prime, unsigned threads) {
    require_square(config, d, m);
    const FieldSpec f = compute_field(config, prime);
    if (!f.is_prime()) throw InvalidArgument("zero_locus_test runs over a prime field");
    if (trials < 1) throw InvalidArgument("zero_locus_test needs at least one trial");
    const PrimeField F(f.p);
    Engine<PrimeField> eng(F, config, d);
    std::vector<Coordinates> samples(trials);
    std::vector<char> nonzero(trials, 0);
    const CounterRng root(seed);
    parallel_for(static_cast<std::size_t>(trials), threads, [&](std::size_t t) {
        auto rng = root.split(static_cast<u64>(t));
        samples[t] = random_chart_point(config.N(), f.p, rng);
        std::vector<u64> b;
        for (int i = 1; i <= config.N(); ++i) b.push_back(F.from_rational(samples[t][i]));
        nonzero[t] = !F.is_zero(determinant(F, eng.chain_matrix(b, m)));
    });
    ZeroLocusVerdict v;
    v.deg_F = degree_of_F(config.N(), d, m);
    v.trials = trials;
    v.seed = seed;
    v.prime = f.p;
    v.log2_error_bound = trials * (std::log2(static_cast<double>(v.deg_F)) - std::log2(static_cast<double>(f.p)));
    for (int t = 0; t < trials; ++t) {
        if (nonzero[t]) {
            v.kind = ZeroLocusVerdict::Kind::NonzeroWitness;
            v.witness = samples[t];
            break;
        }
    }
    return v;
}

// ---------------------------------------------------------------------------
// Symbolic locus

namespace {

/// Sparse polynomial in the chart variables a_1..a_N, exponents packed 16 bits
/// per variable, terms sorted by packed key.
template <class V>
using Packed = std::vector<std::pair<u64, V>>;

u64 pack(const ExponentVector& e) {
    u64 k = 0;
    for (std::size_t i = 0; i < e.size(); ++i) k |= static_cast<u64>(e[i]) << (16 * (e.size() - 1 - i));
    return k;
}

ExponentVector unpack(u64 k, int nvars) {
    ExponentVector e(nvars);
    for (int i = nvars - 1; i >= 0; --i) {
        e[i] = static_cast<int>(k & 0xffff);
        k >>= 16;
    }
    return e;
}

/// acc += c * a^shift * p, keeping acc sorted.
template <class Field>
void add_scaled(const Field& F, Packed<typename Field::value_type>& acc, const Packed<typename Field::value_type>& p,
                const typename Field::value_type& c, u64 shift) {
    Packed<typename Field::value_type> out;
    out.reserve(acc.size() + p.size());
    std::size_t i = 0, j = 0;
    while (i < acc.size() || j < p.size()) {
        if (j == p.size() || (i < acc.size() && acc[i].first < p[j].first + shift)) {
            out.push_back(std::move(acc[i++]));
        } else if (i == acc.size() || p[j].first + shift < acc[i].first) {
            out.emplace_back(p[j].first + shift, F.mul(c, p[j].second));
            ++j;
        } else {
            auto v = F.add(acc[i].second, F.mul(c, p[j].second));
            if (!F.is_zero(v)) out.emplace_back(acc[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    acc = std::move(out);
}

/// Colex rank of a sorted subset.
long long colex_rank(const std::vector<int>& subset) {
    long long r = 0;
    for (std::size_t i = 0; i < subset.size(); ++i) r += binomial(subset[i], static_cast<long long>(i) + 1);
    return r;
}

template <class Field>
LocusPolynomial symbolic_impl(const Field& F, const PointConfiguration& config, int d, int m, long long budget,
                              unsigned threads) {
    using V = typename Field::value_type;
    const int N = config.N();
    if (N > 4) throw InvalidArgument("symbolic_locus supports N <= 4");
    Engine<Field> eng(F, config, d);
    const int C = static_cast<int>(eng.columns());
    const int s = static_cast<int>(eng.points());
    const auto derivs = exponents_up_to(N, m - 1);
    const int r = static_cast<int>(derivs.size());
    const long long subsets = binomial(C, r);
    if (subsets > budget)
        throw BudgetExceeded("Laplace expansion needs " + std::to_string(subsets) + " column subsets (budget " +
                             std::to_string(budget) + "); use zero_locus_test instead");
    long long peak = 0;
    for (int k = 0; k <= r; ++k) peak = std::max(peak, binomial(C, k));
    if (peak > 4 * budget) throw BudgetExceeded("intermediate minors exceed the expansion budget");

    const auto& aff = eng.affine_basis().entries;
    // entry(k, c) = coef * a^(e_c - alpha_k)
    struct Entry {
        V coef;
        u64 shift;
        bool zero;
    };
    std::vector<std::vector<Entry>> entries(r, std::vector<Entry>(C));
    for (int k = 0; k < r; ++k) {
        for (int c = 0; c < C; ++c) {
            auto coef = falling_coefficient(F, aff[c], derivs[k]);
            if (F.is_zero(coef)) {
                entries[k][c] = Entry{F.zero(), 0, true};
            } else {
                ExponentVector rest(N);
                for (int i = 0; i < N; ++i) rest[i] = aff[c][i] - derivs[k][i];
                entries[k][c] = Entry{coef, pack(rest), false};
            }
        }
    }

    // minors[T] for k-subsets T of columns, rows 0..k-1 of the derivative block
    std::vector<Packed<V>> prev(1, Packed<V>{{0, F.one()}});
    for (int k = 1; k <= r; ++k) {
        const long long count = binomial(C, k);
        std::vector<Packed<V>> cur(static_cast<std::size_t>(count));
        parallel_for(static_cast<std::size_t>(count), threads, [&](std::size_t idx) {
            // colex unranking
            std::vector<int> T(k);
            long long rem = static_cast<long long>(idx);
            int top = C - 1;
            for (int i = k; i >= 1; --i) {
                while (binomial(top, i) > rem) --top;
                T[i - 1] = top;
                rem -= binomial(top, i);
                --top;
            }
            Packed<V> acc;
            std::vector<int> sub(T.begin(), T.end() - 1);
            for (int i = k - 1; i >= 0; --i) {
                // sub = T without T[i]
                if (i < k - 1) sub[i] = T[i + 1];
                const Entry& e = entries[k - 1][T[i]];
                if (e.zero) continue;
                const auto& minor = prev[static_cast<std::size_t>(colex_rank(sub))];
                if (minor.empty()) continue;
                // expansion along the last row: sign (-1)^{k + (i+1)}
                const bool negative = ((k + i + 1) % 2) != 0;
                add_scaled(F, acc, minor, negative ? F.neg(e.coef) : e.coef, e.shift);
            }
            cur[idx] = std::move(acc);
        });
        prev = std::move(cur);
    }

    // numeric complementary minors on the point rows
    std::vector<V> complement(static_cast<std::size_t>(subsets), F.zero());
    const auto& prow = eng.point_rows();
    parallel_for(static_cast<std::size_t>(subsets), threads, [&](std::size_t idx) {
        if (prev[idx].empty()) return;
        std::vector<int> T(r);
        long long rem = static_cast<long long>(idx);
        int top = C - 1;
        for (int i = r; i >= 1; --i) {
            while (binomial(top, i) > rem) --top;
            T[i - 1] = top;
            rem -= binomial(top, i);
            --top;
        }
        std::vector<char> in_T(C, 0);
        for (int c : T) in_T[c] = 1;
        Matrix<V> M(s, s);
        for (int row = 0; row < s; ++row) {
            int col = 0;
            for (int c = 0; c < C; ++c)
                if (!in_T[c]) M(row, col++) = prow[row][c];
        }
        V det = determinant(F, std::move(M));
        long long col_sum = 0;
        for (int c : T) col_sum += c + 1;
        const long long row_sum = static_cast<long long>(r) * s + static_cast<long long>(r) * (r + 1) / 2;
        complement[idx] = ((row_sum + col_sum) % 2 != 0) ? F.neg(det) : det;
    });

    std::map<u64, V> acc;
    for (std::size_t idx = 0; idx < prev.size(); ++idx) {
        if (F.is_zero(complement[idx])) continue;
        for (const auto& [key, val] : prev[idx]) {
            auto [it, fresh] = acc.try_emplace(key, F.zero());
            it->second = F.add(it->second, F.mul(complement[idx], val));
        }
    }

    LocusPolynomial out;
    out.N = N;
    out.degree = degree_of_F(N, d, m);
    out.field = F.spec();
    for (const auto& [key, val] : acc) {
        if (F.is_zero(val)) continue;
        auto e = unpack(key, N);
        const long long deg = total_degree(e);
        if (deg > out.degree) throw Error("internal: locus term exceeds the expected degree");
        ExponentVector h;
        h.reserve(N + 1);
        h.push_back(static_cast<int>(out.degree - deg));
        h.insert(h.end(), e.begin(), e.end());
        out.terms.emplace(std::move(h), F.to_rational(val));
    }
    return out;
}

template <class Field>
typename Field::value_type eval_terms(const Field& F, const std::map<ExponentVector, Scalar>& terms,
                                      const Coordinates& point, const DerivativeIndex* idx) {
    auto pt = to_field(F, point);
    auto total = F.zero();
    for (const auto& [e, c] : terms) {
        auto v = F.from_rational(c);
        if (idx) v = F.mul(v, falling_coefficient(F, e, *idx));
        if (F.is_zero(v)) continue;
        for (std::size_t i = 0; i < e.size(); ++i) v = F.mul(v, power(F, pt[i], e[i] - (idx ? (*idx)[i] : 0)));
        total = F.add(total, v);
    }
    return total;
}

}  // namespace

Scalar LocusPolynomial::evaluate(const Coordinates& point) const {
    return with_field(field, [&](const auto& F) { return F.to_rational(eval_terms(F, terms, point, nullptr)); });
}

LocusPolynomial symbolic_locus(const PointConfiguration& config, int d, int m, long long budget,
                               std::optional<FieldSpec> field, unsigned threads) {
    require_square(config, d, m);
    FieldSpec f = field ? compute_field(config, *field) : config.field();
    return with_field(f, [&](const auto& F) { return symbolic_impl(F, config, d, m, budget, threads); });
}

int multiplicity_at(const LocusPolynomial& F, const Coordinates& B) {
    if (F.is_zero()) throw ZeroPolynomial("multiplicity of the zero polynomial is undefined");
    if (B.size() != static_cast<std::size_t>(F.N + 1)) throw DimensionMismatch("B has the wrong arity");
    return with_field(F.field, [&](const auto& K) {
        for (int t = 0; t <= F.degree; ++t) {
            for (const auto& idx : exponents_of_degree(F.N + 1, t))
                if (!K.is_zero(eval_terms(K, F.terms, B, &idx))) return t;
        }
        throw Error("internal: no nonvanishing partial up to the degree of F");
    });
}

Scalar determinant_at(const PointConfiguration& config, int d, int m, const Coordinates& B, const FieldSpec& field) {
    require_square(config, d, m);
    const FieldSpec f = compute_field(config, field);
    return with_field(f, [&](const auto& F) {
        using FT = std::decay_t<decltype(F)>;
        auto ch = chart(F, config, B);
        Engine<FT> eng(F, ch.config, d);
        return F.to_rational(determinant(F, eng.chain_matrix(ch.b, m)));
    });
}

Scalar HomogeneousForm::evaluate(const Coordinates& point) const {
    return partial(DerivativeIndex(N + 1, 0), point);
}

Scalar HomogeneousForm::partial(const DerivativeIndex& idx, const Coordinates& point) const {
    const auto basis = monomial_basis(N, d);
    std::map<ExponentVector, Scalar> terms;
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (sgn(coefficients[k]) != 0) terms.emplace(basis.entries[k], coefficients[k]);
    return with_field(field, [&](const auto& F) { return F.to_rational(eval_terms(F, terms, point, &idx)); });
}

std::string HomogeneousForm::to_string() const {
    const auto basis = monomial_basis(N, d);
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (sgn(coefficients[k]) == 0) continue;
        if (!first) os << " + ";
        first = false;
        const auto mono = monomial_text(basis.entries[k], "x", 0);
        if (coefficients[k] == 1 && !mono.empty()) os << mono;
        else os << "(" << coefficients[k].get_str() << ")" << (mono.empty() ? "" : "*" + mono);
    }
    return first ? "0" : os.str();
}

HomogeneousForm kernel_form(const PointConfiguration& config, int d, int m, const Coordinates& B,
                            const FieldSpec& field) {
    if (m < 1 || d < 1) throw InvalidArgument("kernel_form needs d, m >= 1");
    if (B.size() != static_cast<std::size_t>(config.N() + 1)) throw DimensionMismatch("B has the wrong arity");
    const FieldSpec f = compute_field(config, field);
    return with_field(f, [&](const auto& F) {
        using FT = std::decay_t<decltype(F)>;
        Engine<FT> eng(F, config, d);
        const auto ker = kernel(F, eng.homogeneous_matrix(to_field(F, B), m));
        if (ker.empty()) throw EmptySystem("L(d; mB+Z) is empty at this B");
        if (ker.size() > 1) throw NotUnique(static_cast<long long>(ker.size()));
        HomogeneousForm form{config.N(), d, f, {}};
        const auto& v = ker.front();
        auto lead = std::find_if(v.begin(), v.end(), [&](const auto& x) { return !F.is_zero(x); });
        const auto scale = F.inv(*lead);
        for (const auto& x : v) form.coefficients.push_back(F.to_rational(F.mul(x, scale)));
        // independent verification on the form itself
        for (std::size_t i = 0; i < config.size(); ++i)
            if (sgn(form.evaluate(config.point(i))) != 0)
                throw Error("internal: kernel form does not vanish at point " + std::to_string(i));
        for (const auto& idx : exponents_of_degree(config.N() + 1, m - 1))
            if (sgn(form.partial(idx, B)) != 0) throw Error("internal: kernel form is not singular enough at B");
        return form;
    });
}

long long ideal_dimension(const PointConfiguration& config, int d, const FieldSpec& field) {
    const FieldSpec f = compute_field(config, field);
    return with_field(f, [&](const auto& F) {
        using FT = std::decay_t<decltype(F)>;
        Engine<FT> eng(F, config, d);
        return static_cast<long long>(eng.columns()) - static_cast<long long>(rank(F, eng.points_only()));
    });
}

UnexpectednessReport unexpectedness_report(const PointConfiguration& config, int d, int m, int trials, u64 seed,
                                           const FieldSpec& field) {
    if (m < 1 || d < 1) throw InvalidArgument("unexpectedness_report needs d, m >= 1");
    const FieldSpec f = compute_field(config, field);
    const int N = config.N();
    UnexpectednessReport rep;
    rep.d = d;
    rep.m = m;
    rep.trials = trials;
    rep.seed = seed;
    rep.field = f;
    rep.ideal_dim = ideal_dimension(config, d, f);
    rep.independent_dim = binomial(d + N, N) - static_cast<long long>(config.size());
    rep.independent = rep.ideal_dim == rep.independent_dim;
    if (!rep.independent)
        rep.warnings.push_back("DependentConditions: Z imposes " +
                               std::to_string(binomial(d + N, N) - rep.ideal_dim) + " conditions on degree-" +
                               std::to_string(d) + " forms instead of " + std::to_string(config.size()));
    rep.fat_point_conditions = binomial(m + N - 1, N);
    rep.actual = generic_dim(config, d, m, trials, seed, f);
    rep.expected = std::max(0LL, rep.ideal_dim - rep.fat_point_conditions);
    rep.unexpected = rep.actual > rep.expected;
    return rep;
}

}  // namespace unexpected
