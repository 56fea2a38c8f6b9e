#include "unexpected/configuration.hpp"

#include <algorithm>
#include <set>

namespace unexpected {

Coordinates normalize_point(Coordinates coords, const FieldSpec& field) {
    if (field.is_prime()) {
        const PrimeField F(field.p);
        std::vector<u64> r;
        r.reserve(coords.size());
        for (const auto& q : coords) r.push_back(F.from_rational(q));
        auto it = std::find_if(r.begin(), r.end(), [](u64 v) { return v != 0; });
        if (it == r.end()) throw InvalidArgument("the zero vector is not a projective point");
        const u64 s = F.inv(*it);
        for (std::size_t i = 0; i < r.size(); ++i) coords[i] = F.to_rational(F.mul(r[i], s));
        return coords;
    }
    auto it = std::find_if(coords.begin(), coords.end(), [](const Rational& q) { return sgn(q) != 0; });
    if (it == coords.end()) throw InvalidArgument("the zero vector is not a projective point");
    const Rational lead = *it;
    for (auto& q : coords) {
        q /= lead;
        q.canonicalize();
    }
    return coords;
}

PointConfiguration::PointConfiguration(int N, FieldSpec field, std::vector<Coordinates> points, std::string name)
    : N_(N), field_(field), name_(std::move(name)) {
    if (N < 1) throw InvalidArgument("ambient dimension must be at least 1");
    points_.reserve(points.size());
    std::set<std::vector<std::string>> seen;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].size() != static_cast<std::size_t>(N + 1))
            throw DimensionMismatch("point " + std::to_string(i) + " has " + std::to_string(points[i].size()) +
                                    " coordinates, expected " + std::to_string(N + 1));
        auto p = normalize_point(std::move(points[i]), field_);
        std::vector<std::string> key;
        for (const auto& q : p) key.push_back(q.get_str());
        if (!seen.insert(key).second) throw ValidationFailed("duplicate point at index " + std::to_string(i));
        points_.push_back(std::move(p));
    }
}

long PointConfiguration::find(const Coordinates& p) const {
    const auto q = normalize_point(p, field_);
    for (std::size_t i = 0; i < points_.size(); ++i)
        if (points_[i] == q) return static_cast<long>(i);
    return -1;
}

PointConfiguration PointConfiguration::subset(std::span<const int> indices, std::string name) const {
    std::vector<Coordinates> pts;
    for (int i : indices) pts.push_back(points_.at(i));
    return PointConfiguration(N_, field_, std::move(pts), name.empty() ? name_ : std::move(name));
}

PointConfiguration PointConfiguration::without(std::span<const int> indices, std::string name) const {
    std::vector<int> keep;
    for (int i = 0; i < static_cast<int>(points_.size()); ++i)
        if (std::find(indices.begin(), indices.end(), i) == indices.end()) keep.push_back(i);
    return subset(keep, std::move(name));
}

PointConfiguration PointConfiguration::permuted(std::span<const int> perm) const {
    if (perm.size() != static_cast<std::size_t>(N_ + 1)) throw DimensionMismatch("permutation arity");
    std::vector<Coordinates> pts;
    for (const auto& p : points_) {
        Coordinates q(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) q[i] = p[perm[i]];
        pts.push_back(std::move(q));
    }
    return PointConfiguration(N_, field_, std::move(pts), name_);
}

FieldSpec compute_field(const PointConfiguration& config, const FieldSpec& requested) {
    if (requested.is_automatic())
        return config.field().is_prime() ? config.field() : FieldSpec{FieldKind::Prime, kDefaultPrime};
    if (config.field().is_prime()) {
        if (requested.is_prime() && requested.p != config.field().p)
            throw InvalidArgument("configuration '" + config.name() + "' lives over " + config.field().to_string() +
                                  " and cannot be computed over " + requested.to_string());
        return config.field();
    }
    return requested;
}

}  // namespace unexpected
