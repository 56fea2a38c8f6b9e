#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "unexpected/field.hpp"

namespace unexpected {

using Coordinates = std::vector<Rational>;

/// Scales so the first nonzero coordinate is 1 (residues are reduced mod p
/// first for prime fields). Throws InvalidArgument for the zero vector.
Coordinates normalize_point(Coordinates coords, const FieldSpec& field);

/// A finite set Z of pairwise distinct points of P^N over an exact field.
class PointConfiguration {
public:
    PointConfiguration() = default;
    /// Normalizes every point; throws DimensionMismatch on arity errors and
    /// ValidationFailed on duplicate points.
    PointConfiguration(int N, FieldSpec field, std::vector<Coordinates> points, std::string name = {});

    int N() const { return N_; }
    const FieldSpec& field() const { return field_; }
    const std::string& name() const { return name_; }
    std::size_t size() const { return points_.size(); }
    const std::vector<Coordinates>& points() const { return points_; }
    const Coordinates& point(std::size_t i) const { return points_.at(i); }

    /// Index of the (normalized) point, or -1.
    long find(const Coordinates& p) const;

    PointConfiguration subset(std::span<const int> indices, std::string name = {}) const;
    PointConfiguration without(std::span<const int> indices, std::string name = {}) const;
    /// Coordinates reordered as (x_{perm[0]}, ..., x_{perm[N]}).
    PointConfiguration permuted(std::span<const int> perm) const;

private:
    int N_ = 0;
    FieldSpec field_{};
    std::vector<Coordinates> points_;
    std::string name_;
};

/// Resolves the field used for a computation: prime configurations must be
/// computed over their own prime; rational ones over QQ or any admissible prime.
/// FieldSpec::automatic() picks the configuration's prime or kDefaultPrime.
FieldSpec compute_field(const PointConfiguration& config, const FieldSpec& requested);

/// Calls fn(PrimeField) or fn(RationalField) according to spec.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
    if (spec.is_prime()) return fn(PrimeField(spec.p));
    return fn(RationalField{});
}

/// Coordinates mapped into a field model.
template <class Field>
std::vector<typename Field::value_type> to_field(const Field& F, const Coordinates& c) {
    std::vector<typename Field::value_type> out;
    out.reserve(c.size());
    for (const auto& q : c) out.push_back(F.from_rational(q));
    return out;
}

}  // namespace unexpected
