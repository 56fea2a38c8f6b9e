#include "unexpected/field.hpp"

#include <array>
#include <cctype>

namespace unexpected {

FieldSpec FieldSpec::prime(u64 p) {
    if (p <= kMinPrime) throw InvalidArgument("prime modulus must exceed 2^40, got " + std::to_string(p));
    if (p >= (u64{1} << 63)) throw InvalidArgument("prime modulus must be below 2^63");
    if (!is_probable_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
    return FieldSpec{FieldKind::Prime, p};
}

std::string FieldSpec::to_string() const {
    if (is_automatic()) return "auto";
    return is_prime() ? "GF(" + std::to_string(p) + ")" : "QQ";
}

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<u128>(a) * b) % p); }

u64 pow_mod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 splitmix64(u64 x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

namespace {

bool miller_rabin_witness(u64 n, u64 a, u64 d, int r) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < r; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

}  // namespace

bool is_probable_prime(u64 n, int rounds) {
    if (n < 2) return false;
    static constexpr std::array<u64, 12> small = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 q : small) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    int done = 0;
    for (u64 a : small) {
        if (done++ >= rounds) return true;
        if (miller_rabin_witness(n, a, d, r)) return false;
    }
    CounterRng rng(n, 0x4d52);
    for (; done < rounds; ++done) {
        u64 a = 2 + rng.below(n - 3);
        if (miller_rabin_witness(n, a, d, r)) return false;
    }
    return true;
}

u64 find_prime_with_unity(u64 order, int bits) {
    if (order == 0) throw InvalidArgument("root-of-unity order must be positive");
    if (bits < 40 || bits > 62) throw InvalidArgument("bits must lie in [40, 62]");
    const u64 start = u64{1} << (bits - 1);
    // first candidate >= start with candidate = 1 (mod order)
    u64 c = start - (start % order) + 1;
    if (c < start) c += order;
    for (;; c += order) {
        if (is_probable_prime(c)) return c;
    }
}

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> out;
    for (u64 q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

u64 primitive_root_of_unity(u64 p, u64 order) {
    if (order == 0 || (p - 1) % order != 0)
        throw NoSuchRoot("no primitive " + std::to_string(order) + "-th root of unity modulo " + std::to_string(p));
    if (order == 1) return 1;
    const auto factors = prime_factors(order);
    for (u64 x = 2; x < p; ++x) {
        u64 z = pow_mod(x, (p - 1) / order, p);
        bool primitive = true;
        for (u64 q : factors) {
            if (pow_mod(z, order / q, p) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return z;
    }
    throw NoSuchRoot("search exhausted");  // unreachable for prime p
}

u64 reduce_mod(const Rational& q_in, u64 p) {
    Rational q = q_in;
    q.canonicalize();
    mpz_class mod(static_cast<unsigned long>(p));
    mpz_class num = q.get_num() % mod;
    if (num < 0) num += mod;
    mpz_class den = q.get_den() % mod;
    if (den == 0) throw InvalidArgument("denominator of " + q.get_str() + " vanishes modulo " + std::to_string(p));
    const u64 n = num.get_ui();
    const u64 d = den.get_ui();
    static_assert(sizeof(unsigned long) == 8, "64-bit unsigned long required");
    return mul_mod(n, pow_mod(d, p - 2, p), p);
}

Rational parse_rational(const std::string& text) {
    auto valid_int = [](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    const auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw InvalidArgument("malformed rational '" + text + "'");
    if (num[0] == '+') num.erase(0, 1);
    mpz_class n(num), d(den);
    if (d == 0) throw InvalidArgument("zero denominator in '" + text + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_decimal(const Rational& q) { return q.get_str(); }

u64 PrimeField::inv(u64 a) const {
    if (a == 0) throw InvalidArgument("division by zero in prime field");
    return pow_mod(a, p_ - 2, p_);
}

u64 PrimeField::from_int(long long v) const {
    if (v >= 0) return static_cast<u64>(v) % p_;
    u64 m = static_cast<u64>(-(v + 1)) + 1;
    m %= p_;
    return m == 0 ? 0 : p_ - m;
}

u64 PrimeField::from_bigint(const BigInt& v) const { return reduce_mod(Rational(v), p_); }

Rational RationalField::inv(const Rational& a) const {
    if (sgn(a) == 0) throw InvalidArgument("division by zero in QQ");
    return 1 / a;
}

CounterRng CounterRng::split(u64 child) const {
    return CounterRng(seed_, splitmix64(stream_ ^ splitmix64(child + 0x632be59bd9b4e019ULL)));
}

u64 CounterRng::next() {
    u64 key = splitmix64(seed_ ^ splitmix64(stream_));
    return splitmix64(key + 0x9e3779b97f4a7c15ULL * (++counter_));
}

u64 CounterRng::below(u64 bound) {
    if (bound == 0) throw InvalidArgument("empty range");
    const u64 limit = bound * (~u64{0} / bound);
    for (;;) {
        u64 x = next();
        if (x < limit) return x % bound;
    }
}

}  // namespace unexpected
