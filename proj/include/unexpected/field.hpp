#pragma once

// Exact scalar arithmetic: GMP rationals and 64-bit prime fields.

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "unexpected/errors.hpp"

namespace unexpected {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using Rational = mpq_class;
using BigInt = mpz_class;

/// Exact field value. Rationals are kept canonical (lowest terms, positive
/// denominator); prime-field residues are integers in [0, p).
using Scalar = Rational;

/// 2^61 - 1, a Mersenne prime.
inline constexpr u64 kDefaultPrime = (u64{1} << 61) - 1;

/// Lower bound on every prime modulus accepted by FieldSpec.
inline constexpr u64 kMinPrime = u64{1} << 40;

enum class FieldKind { Rational, Prime };

struct FieldSpec {
    FieldKind kind = FieldKind::Rational;
    u64 p = 0;

    static FieldSpec rational() { return {}; }
    /// Placeholder resolved by compute_field: the configuration's own prime,
    /// or kDefaultPrime for rational configurations.
    static FieldSpec automatic() { return FieldSpec{FieldKind::Prime, 0}; }
    bool is_automatic() const { return kind == FieldKind::Prime && p == 0; }
    /// Throws InvalidArgument unless p is a probable prime above 2^40.
    static FieldSpec prime(u64 p);

    bool is_prime() const { return kind == FieldKind::Prime; }
    std::string to_string() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

u64 mul_mod(u64 a, u64 b, u64 p);
u64 pow_mod(u64 a, u64 e, u64 p);

/// Miller-Rabin with the 12 deterministic 64-bit bases followed by
/// pseudo-random bases, `rounds` rounds in total.
bool is_probable_prime(u64 n, int rounds = 64);

/// Smallest prime p >= 2^(bits-1) with p = 1 (mod order). Needs 40 <= bits <= 62.
u64 find_prime_with_unity(u64 order, int bits);

/// A primitive order-th root of unity in F_p. Throws NoSuchRoot when order does not divide p - 1.
u64 primitive_root_of_unity(u64 p, u64 order);

/// Distinct prime factors by trial division (intended for small orders).
std::vector<u64> prime_factors(u64 n);

/// Reduce a rational into F_p; throws InvalidArgument if p divides the denominator.
u64 reduce_mod(const Rational& q, u64 p);

/// Parses "a", "-a", "a/b". Throws InvalidArgument on malformed text.
Rational parse_rational(const std::string& text);
std::string to_decimal(const Rational& q);

// Field models. Both expose the same surface so that linear algebra and the
// interpolation engine can be written once as templates.

class PrimeField {
public:
    using value_type = u64;

    explicit PrimeField(u64 p) : p_(p) {}

    u64 modulus() const { return p_; }
    FieldSpec spec() const { return FieldSpec{FieldKind::Prime, p_}; }

    u64 zero() const { return 0; }
    u64 one() const { return 1; }
    u64 add(u64 a, u64 b) const {
        u64 s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
    u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }
    u64 mul(u64 a, u64 b) const { return static_cast<u64>((static_cast<u128>(a) * b) % p_); }
    u64 inv(u64 a) const;
    u64 div(u64 a, u64 b) const { return mul(a, inv(b)); }
    bool is_zero(u64 a) const { return a == 0; }
    bool is_one(u64 a) const { return a == 1; }

    u64 from_int(long long v) const;
    u64 from_bigint(const BigInt& v) const;
    u64 from_rational(const Rational& q) const { return reduce_mod(q, p_); }
    Rational to_rational(u64 v) const { return Rational(mpz_class(static_cast<unsigned long>(v))); }

private:
    u64 p_;
};

class RationalField {
public:
    using value_type = Rational;

    FieldSpec spec() const { return FieldSpec::rational(); }

    Rational zero() const { return Rational(0); }
    Rational one() const { return Rational(1); }
    Rational add(const Rational& a, const Rational& b) const { return a + b; }
    Rational sub(const Rational& a, const Rational& b) const { return a - b; }
    Rational neg(const Rational& a) const { return -a; }
    Rational mul(const Rational& a, const Rational& b) const { return a * b; }
    Rational inv(const Rational& a) const;
    Rational div(const Rational& a, const Rational& b) const { return a * inv(b); }
    bool is_zero(const Rational& a) const { return sgn(a) == 0; }
    bool is_one(const Rational& a) const { return a == 1; }

    Rational from_int(long long v) const { return Rational(static_cast<long>(v)); }
    Rational from_bigint(const BigInt& v) const { return Rational(v); }
    Rational from_rational(const Rational& q) const {
        Rational c = q;
        c.canonicalize();
        return c;
    }
    Rational to_rational(const Rational& v) const { return v; }
};

/// Counter-based generator: the n-th draw of stream s under seed k depends only
/// on (k, s, n), so results do not depend on scheduling.
class CounterRng {
public:
    explicit CounterRng(u64 seed, u64 stream = 0) : seed_(seed), stream_(stream) {}

    /// Independent child generator.
    CounterRng split(u64 child) const;

    u64 next();
    /// Uniform in [0, bound) by rejection.
    u64 below(u64 bound);

    u64 seed() const { return seed_; }
    u64 stream() const { return stream_; }

private:
    u64 seed_;
    u64 stream_;
    u64 counter_ = 0;
};

u64 splitmix64(u64 x);

}  // namespace unexpected
