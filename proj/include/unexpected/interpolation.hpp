#pragma once

// Interpolation matrices for L(d; jB + Z), their ranks and kernels, the
// super-abundance numbers h_{j,B}, and the determinant locus F as a function
// of the fat point B.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "unexpected/configuration.hpp"
#include "unexpected/linalg.hpp"
#include "unexpected/monomial.hpp"

namespace unexpected {

/// binom(d+N, N) - binom(m+N-1, N), the number of points making the
/// interpolation matrix square. Throws NotSquare when this is not positive.
long long square_size(int N, int d, int m);

/// binom(m+N-1, N) * (d-m+1).
long long degree_of_F(int N, int d, int m);

/// Row/column structure of the chain M_1 c M_2 c ... c M_d. Rows of M_j: the
/// s point evaluations w(P_i), then the dehomogenized derivatives
/// d^a w^(B) for every multi-index a of order 0..j-1 (graded, a_1 heaviest).
struct InterpolationChain {
    PointConfiguration config;
    int d = 0;
    int m = 0;
    /// Homogeneous evaluation point, or nullopt for the symbolic (generic) B.
    std::optional<Coordinates> B;
    /// Coordinate exchanged with a_0 so that B lies in the chart a_0 = 1
    /// (0 when no change was needed). Applied to Z and B alike.
    int chart_swap = 0;
    MonomialBasis basis;
    std::vector<DerivativeIndex> derivative_indices;

    std::size_t columns() const { return basis.size(); }
    std::size_t derivative_rows(int j) const;
    std::size_t rows(int j) const { return config.size() + derivative_rows(j); }

    /// Numeric M_j(B) over `field` (entries as exact scalars).
    Matrix<Scalar> evaluate(int j, const FieldSpec& field) const;
    /// Human-readable symbolic M_j with entries such as "2*a1*a2".
    Matrix<std::string> symbolic(int j) const;
};

InterpolationChain build_chain(const PointConfiguration& config, int d, int m, std::optional<Coordinates> B);

struct SystemDims {
    int d = 0;
    int j = 0;
    long long dim = 0;   ///< affine dimension of L(d; jB+Z)
    long long vdim = 0;  ///< binom(d+N,N) - binom(j+N-1,N) - s
    long long h = 0;     ///< dim - max(0, vdim)
    long long rank = 0;
    long long rows = 0;
    long long cols = 0;
    long long deficiency() const { return std::min(rows, cols) - rank; }
};

SystemDims dim_system(const PointConfiguration& config, int d, int j, const Coordinates& B,
                      const FieldSpec& field = FieldSpec::automatic());

/// dim_system for j = 1..d.
std::vector<SystemDims> h_profile(const PointConfiguration& config, int d, const Coordinates& B,
                                  const FieldSpec& field = FieldSpec::automatic());

/// h_B = sum_j h_{j,B}. Requires |Z| = square_size(N, d, m).
long long h_total(const PointConfiguration& config, int d, int m, const Coordinates& B,
                  const FieldSpec& field = FieldSpec::automatic());

/// Uniform random point of the chart a_0 = 1 over F_p, drawn from rng.
Coordinates random_chart_point(int N, u64 p, CounterRng& rng);

/// Generic dimension of L(d; jB+Z): minimum over `trials` random B.
long long generic_dim(const PointConfiguration& config, int d, int j, int trials, u64 seed,
                      const FieldSpec& field = FieldSpec::automatic());

struct ZeroLocusVerdict {
    enum class Kind { ProbablyZero, NonzeroWitness };
    Kind kind = Kind::ProbablyZero;
    std::optional<Coordinates> witness;
    long long deg_F = 0;
    int trials = 0;
    u64 seed = 0;
    u64 prime = 0;
    /// log2 of (deg_F / p)^trials, the Schwartz-Zippel bound on a false ProbablyZero.
    double log2_error_bound = 0;

    bool probably_zero() const { return kind == Kind::ProbablyZero; }
};

/// Evaluates det M(B) at `trials` independent uniform B in the chart a_0 = 1.
/// Trial t draws from CounterRng(seed).split(t), so the sample set does not
/// depend on `threads`.
ZeroLocusVerdict zero_locus_test(const PointConfiguration& config, int d, int m, int trials, u64 seed,
                                 const FieldSpec& prime = FieldSpec::automatic(), unsigned threads = 1);

/// Homogeneous polynomial in a_0..a_N as exponent vector -> coefficient.
struct LocusPolynomial {
    int N = 0;
    long long degree = 0;
    FieldSpec field{};
    std::map<ExponentVector, Scalar> terms;

    bool is_zero() const { return terms.empty(); }
    Scalar evaluate(const Coordinates& point) const;
};

/// F = det M as a polynomial in B, by Laplace expansion along the
/// derivative rows. Throws BudgetExceeded when the number of column subsets
/// exceeds `budget`. Computed over `field` (QQ gives exact rational output).
LocusPolynomial symbolic_locus(const PointConfiguration& config, int d, int m, long long budget = 1'000'000,
                               std::optional<FieldSpec> field = std::nullopt, unsigned threads = 1);

/// Least t such that some order-t partial of F is nonzero at B.
/// Throws ZeroPolynomial for F = 0.
int multiplicity_at(const LocusPolynomial& F, const Coordinates& B);

/// det M(B) through direct numeric evaluation (independent of symbolic_locus).
Scalar determinant_at(const PointConfiguration& config, int d, int m, const Coordinates& B, const FieldSpec& field);

/// A degree-d form given by coefficients in monomial_basis(N, d) order.
struct HomogeneousForm {
    int N = 0;
    int d = 0;
    FieldSpec field{};
    std::vector<Scalar> coefficients;

    Scalar evaluate(const Coordinates& point) const;
    /// The order-|idx| partial derivative (idx over a_0..a_N) at point.
    Scalar partial(const DerivativeIndex& idx, const Coordinates& point) const;
    std::string to_string() const;
};

/// The unique (up to scale) element of L(d; mB+Z), normalized with leading
/// coefficient 1. Throws EmptySystem for dim 0 and NotUnique for dim > 1.
HomogeneousForm kernel_form(const PointConfiguration& config, int d, int m, const Coordinates& B,
                            const FieldSpec& field = FieldSpec::automatic());

/// dim [I_Z]_d = binom(d+N,N) - rank of the point-evaluation rows.
long long ideal_dimension(const PointConfiguration& config, int d,
                          const FieldSpec& field = FieldSpec::automatic());

struct UnexpectednessReport {
    int d = 0;
    int m = 0;
    long long ideal_dim = 0;        ///< dim [I_Z]_d
    long long independent_dim = 0;  ///< binom(d+N,N) - s
    bool independent = false;
    long long fat_point_conditions = 0;  ///< H_B(d) = binom(m+N-1,N)
    long long actual = 0;                ///< generic dim L(d; mB+Z)
    long long expected = 0;              ///< max(0, ideal_dim - H_B(d))
    bool unexpected = false;
    int trials = 0;
    u64 seed = 0;
    FieldSpec field{};
    std::vector<std::string> warnings;
};

UnexpectednessReport unexpectedness_report(const PointConfiguration& config, int d, int m, int trials, u64 seed,
                                           const FieldSpec& field = FieldSpec::automatic());

}  // namespace unexpected
